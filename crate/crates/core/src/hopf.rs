//! Hopf algebra structure shared by enveloping algebras and finite group algebras.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::Rational;
use crate::lincomb::LinComb;
use crate::uea::{monomials_up_to, EnvelopingAlgebra, PbwMonomial};

/// A Hopf algebra presented by a basis.
pub trait HopfAlgebra {
    type Key: Clone + Ord + Hash + Debug;

    fn unit(&self) -> Self::Key;
    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;
    fn coproduct_key(&self, a: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;
    fn counit_key(&self, a: &Self::Key) -> Rational;
    fn antipode_key(&self, a: &Self::Key) -> LinComb<Self::Key>;
    /// Basis elements up to the given size (degree for graded algebras; ignored
    /// when the algebra is finite-dimensional).
    fn basis(&self, bound: usize) -> Vec<Self::Key>;
    fn describe(&self, a: &Self::Key) -> String;

    fn mul(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        let mut out = LinComb::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.product(a, b), &(ca * cb));
            }
        }
        out
    }

    fn coproduct(&self, x: &LinComb<Self::Key>) -> LinComb<(Self::Key, Self::Key)> {
        x.map_linear(|k| self.coproduct_key(k))
    }

    fn counit(&self, x: &LinComb<Self::Key>) -> Rational {
        x.evaluate(|k| self.counit_key(k))
    }

    fn antipode(&self, x: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        x.map_linear(|k| self.antipode_key(k))
    }
}

impl HopfAlgebra for EnvelopingAlgebra {
    type Key = PbwMonomial;

    fn unit(&self) -> PbwMonomial {
        PbwMonomial::one(self.num_generators())
    }

    fn product(&self, a: &PbwMonomial, b: &PbwMonomial) -> LinComb<PbwMonomial> {
        self.mul_monomials(a, b)
    }

    fn coproduct_key(&self, a: &PbwMonomial) -> LinComb<(PbwMonomial, PbwMonomial)> {
        self.coproduct_monomial(a)
    }

    fn counit_key(&self, a: &PbwMonomial) -> Rational {
        if a.is_one() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn antipode_key(&self, a: &PbwMonomial) -> LinComb<PbwMonomial> {
        self.antipode_monomial(a)
    }

    fn basis(&self, bound: usize) -> Vec<PbwMonomial> {
        monomials_up_to(self.num_generators(), bound)
    }

    fn describe(&self, a: &PbwMonomial) -> String {
        self.format_monomial(a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table must be {n}x{n}")]
    NotSquare { n: usize },
    #[error("table entry {value} out of range")]
    OutOfRange { value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("group has no elements")]
    Empty,
}

/// A finite group given by its multiplication table; `table[a][b]` is the index of `a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare { n });
        }
        if let Some(&value) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(GroupError::OutOfRange { value });
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let inv = (0..n)
                .find(|&b| row[b] == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverses.push(inv);
        }
        Ok(Self {
            names,
            table,
            identity,
            inverses,
        })
    }

    /// ℤ/n with elements `0, 1, …, n−1` under addition.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// The symmetric group on `k` letters; element `i` is the `i`-th permutation in
    /// lexicographic order and `(σ·τ)(x) = σ(τ(x))`.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect()))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
                format!("[{}]", s.join(""))
            })
            .collect();
        Self::new(names, table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn mul_elements(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// The normalized integral `|G|⁻¹ Σ_g g`.
    pub fn normalized_integral(&self) -> LinComb<usize> {
        let w = Rational::new(BigInt::one(), BigInt::from(self.order()));
        (0..self.order()).map(|g| (g, w.clone())).collect()
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// The group algebra ℚG: group elements are group-like.
impl HopfAlgebra for FiniteGroup {
    type Key = usize;

    fn unit(&self) -> usize {
        self.identity
    }

    fn product(&self, a: &usize, b: &usize) -> LinComb<usize> {
        LinComb::basis(self.table[*a][*b])
    }

    fn coproduct_key(&self, a: &usize) -> LinComb<(usize, usize)> {
        LinComb::basis((*a, *a))
    }

    fn counit_key(&self, _: &usize) -> Rational {
        Rational::one()
    }

    fn antipode_key(&self, a: &usize) -> LinComb<usize> {
        LinComb::basis(self.inverses[*a])
    }

    fn basis(&self, _: usize) -> Vec<usize> {
        (0..self.order()).collect()
    }

    fn describe(&self, a: &usize) -> String {
        self.names[*a].clone()
    }
}

/// Pointwise checks of the Hopf algebra axioms on given elements.
pub mod axioms {
    use super::HopfAlgebra;
    use crate::exactlin::Rational;
    use crate::lincomb::LinComb;

    type Elem<H> = LinComb<<H as HopfAlgebra>::Key>;

    /// `(xy)z = x(yz)`
    pub fn associative<H: HopfAlgebra>(h: &H, x: &Elem<H>, y: &Elem<H>, z: &Elem<H>) -> bool {
        h.mul(&h.mul(x, y), z) == h.mul(x, &h.mul(y, z))
    }

    /// `1·x = x = x·1`
    pub fn unital<H: HopfAlgebra>(h: &H, x: &Elem<H>) -> bool {
        let one = LinComb::basis(h.unit());
        h.mul(&one, x) == *x && h.mul(x, &one) == *x
    }

    /// `(Δ⊗1)Δx = (1⊗Δ)Δx`
    pub fn coassociative<H: HopfAlgebra>(h: &H, x: &Elem<H>) -> bool {
        let delta = h.coproduct(x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in &delta {
            for ((a1, a2), ca) in &h.coproduct_key(a) {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c * ca);
            }
            for ((b1, b2), cb) in &h.coproduct_key(b) {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c * cb);
            }
        }
        left == right
    }

    /// `(ε⊗1)Δx = x = (1⊗ε)Δx`
    pub fn counital<H: HopfAlgebra>(h: &H, x: &Elem<H>) -> bool {
        let delta = h.coproduct(x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in &delta {
            left.add_term(b.clone(), c * h.counit_key(a));
            right.add_term(a.clone(), c * h.counit_key(b));
        }
        left == *x && right == *x
    }

    /// `μ(S⊗1)Δx = ε(x)1 = μ(1⊗S)Δx`
    pub fn antipode<H: HopfAlgebra>(h: &H, x: &Elem<H>) -> bool {
        let delta = h.coproduct(x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in &delta {
            let (ea, eb) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
            left.add_scaled(&h.mul(&h.antipode(&ea), &eb), c);
            right.add_scaled(&h.mul(&ea, &h.antipode(&eb)), c);
        }
        let expected = LinComb::term(h.unit(), h.counit(x));
        left == expected && right == expected
    }

    /// `Δ` is an algebra map: `Δ(xy) = Δ(x)Δ(y)`.
    pub fn multiplicative_coproduct<H: HopfAlgebra>(h: &H, x: &Elem<H>, y: &Elem<H>) -> bool {
        let mut product = LinComb::zero();
        for ((a1, a2), ca) in &h.coproduct(x) {
            for ((b1, b2), cb) in &h.coproduct(y) {
                let c: Rational = ca * cb;
                for (p1, c1) in &h.product(a1, b1) {
                    for (p2, c2) in &h.product(a2, b2) {
                        product.add_term((p1.clone(), p2.clone()), &c * c1 * c2);
                    }
                }
            }
        }
        product == h.coproduct(&h.mul(x, y))
    }

    /// `τΔx = Δx`
    pub fn cocommutative<H: HopfAlgebra>(h: &H, x: &Elem<H>) -> bool {
        let delta = h.coproduct(x);
        let flipped: LinComb<_> = delta
            .iter()
            .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
            .collect();
        flipped == delta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_is_valid() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        for g in 0..6 {
            assert_eq!(s3.mul_elements(g, s3.inverse(g)), 0);
        }
        // S₃ is not abelian.
        assert!((0..6).any(|a| (0..6).any(|b| s3.mul_elements(a, b) != s3.mul_elements(b, a))));
    }

    #[test]
    fn bad_tables_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(
            FiniteGroup::new(names.clone(), vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse(1))
        );
        assert_eq!(
            FiniteGroup::new(names.clone(), vec![vec![0, 1]]),
            Err(GroupError::NotSquare { n: 2 })
        );
        assert_eq!(
            FiniteGroup::new(names, vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::OutOfRange { value: 2 })
        );
    }

    #[test]
    fn integral_is_invariant() {
        let s3 = FiniteGroup::symmetric(3);
        let x0 = s3.normalized_integral();
        assert_eq!(s3.counit(&x0), Rational::one());
        for g in 0..6 {
            assert_eq!(s3.mul(&LinComb::basis(g), &x0), x0);
        }
    }
}
