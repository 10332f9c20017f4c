//! The universal enveloping algebra U(𝔤) in PBW normal form.
//!
//! Elements are sparse combinations of ordered monomials `e_1^{a_1}···e_n^{a_n}`
//! in the basis order of the underlying Lie algebra. Products are normalized by
//! straightening: an out-of-order adjacent pair `e_j e_i` (`j > i`) is rewritten
//! as `e_i e_j + [e_j, e_i]`. Generator-times-monomial results are memoized.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_traits::One;

use crate::exactlin::{format_rational, Rational};
use crate::liealg::LieAlgebra;
use crate::lincomb::LinComb;

/// An ordered monomial `e_1^{a_1}···e_n^{a_n}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    /// The empty monomial (the unit) in `n` generators.
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_generators(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Index of the leftmost generator occurring in the monomial.
    pub fn first_generator(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    /// The monomial as a word of generator indices, left to right.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }

    fn bumped(&self, i: usize, delta: i32) -> Self {
        let mut m = self.clone();
        m.0[i] = (m.0[i] as i32 + delta) as u32;
        m
    }

    /// Embeds into a larger generator set, placing this monomial's generators at `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let mut m = Self::one(total);
        m.0[offset..offset + self.0.len()].copy_from_slice(&self.0);
        m
    }

    /// Exponents of the generators in `range`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Self {
        Self(self.0[range].to_vec())
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Element of U(𝔤): PBW monomial ↦ coefficient.
pub type UeaElement = LinComb<PbwMonomial>;

/// Element of U(𝔤) ⊗ U(𝔤).
pub type TensorElement = LinComb<(PbwMonomial, PbwMonomial)>;

/// Drops every term of total degree greater than `n`.
pub fn truncate(x: &UeaElement, n: usize) -> UeaElement {
    x.filter(|m| m.degree() <= n)
}

/// Highest total degree occurring in `x` (0 for the zero element).
pub fn degree(x: &UeaElement) -> usize {
    x.keys().map(PbwMonomial::degree).max().unwrap_or(0)
}

/// All ordered monomials in `n` generators of total degree at most `max_degree`,
/// sorted by degree.
pub fn monomials_up_to(n: usize, max_degree: usize) -> Vec<PbwMonomial> {
    fn rec(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if i == cur.len() {
            out.push(PbwMonomial(cur.clone()));
            return;
        }
        for a in 0..=left {
            cur[i] = a as u32;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_degree, &mut vec![0; n], &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    out
}

/// U(𝔤) for a fixed Lie algebra, with a memo table for straightening.
pub struct EnvelopingAlgebra {
    lie: LieAlgebra,
    cache: RwLock<HashMap<(usize, PbwMonomial), UeaElement>>,
}

impl Clone for EnvelopingAlgebra {
    fn clone(&self) -> Self {
        Self::new(self.lie.clone())
    }
}

impl fmt::Debug for EnvelopingAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({})", self.lie.name())
    }
}

impl EnvelopingAlgebra {
    pub fn new(lie: LieAlgebra) -> Self {
        Self {
            lie,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn num_generators(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> UeaElement {
        UeaElement::basis(PbwMonomial::one(self.num_generators()))
    }

    pub fn generator(&self, i: usize) -> UeaElement {
        UeaElement::basis(PbwMonomial::generator(self.num_generators(), i))
    }

    /// Linear combination of generators `Σ c_i e_i`.
    pub fn linear(&self, coeffs: &[Rational]) -> UeaElement {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (PbwMonomial::generator(self.num_generators(), i), c.clone()))
            .collect()
    }

    pub fn monomial(&self, exponents: Vec<u32>) -> UeaElement {
        assert_eq!(exponents.len(), self.num_generators());
        UeaElement::basis(PbwMonomial(exponents))
    }

    /// Normal form of `e_g · m`.
    pub fn generator_times_monomial(&self, g: usize, m: &PbwMonomial) -> UeaElement {
        let first = match m.first_generator() {
            None => return self.generator(g),
            Some(i) if g <= i => return UeaElement::basis(m.bumped(g, 1)),
            Some(i) => i,
        };
        let key = (g, m.clone());
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        // e_g e_i r = e_i (e_g r) + [e_g, e_i] r   with m = e_i r and i < g
        let rest = m.bumped(first, -1);
        let moved = self.generator_times_monomial(g, &rest);
        let mut out = self.left_mul_generator(first, &moved);
        for (&k, c) in &self.lie.bracket_basis(g, first) {
            out.add_scaled(&self.generator_times_monomial(k, &rest), c);
        }
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(key, out.clone());
        out
    }

    /// `e_g · x`
    pub fn left_mul_generator(&self, g: usize, x: &UeaElement) -> UeaElement {
        x.map_linear(|m| self.generator_times_monomial(g, m))
    }

    /// Normal form of the product of two ordered monomials.
    pub fn mul_monomials(&self, a: &PbwMonomial, b: &PbwMonomial) -> UeaElement {
        let mut acc = UeaElement::basis(b.clone());
        for g in a.word().into_iter().rev() {
            acc = self.left_mul_generator(g, &acc);
        }
        acc
    }

    /// PBW product `x · y`.
    pub fn multiply(&self, x: &UeaElement, y: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                out.add_scaled(&self.mul_monomials(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Normal form of the word `e_{w_1} e_{w_2} ··· e_{w_k}`, in any order.
    pub fn word(&self, letters: &[usize]) -> UeaElement {
        let mut acc = self.one();
        for &g in letters.iter().rev() {
            acc = self.left_mul_generator(g, &acc);
        }
        acc
    }

    /// Componentwise product in U(𝔤) ⊗ U(𝔤).
    pub fn tensor_multiply(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a1, b1), c1) in x {
            for ((a2, b2), c2) in y {
                let left = self.mul_monomials(a1, a2);
                let right = self.mul_monomials(b1, b2);
                let c = c1 * c2;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        out.add_term((l.clone(), r.clone()), &c * cl * cr);
                    }
                }
            }
        }
        out
    }

    /// `Δ(e_i) = e_i ⊗ 1 + 1 ⊗ e_i`
    pub fn coproduct_generator(&self, i: usize) -> TensorElement {
        let n = self.num_generators();
        let g = PbwMonomial::generator(n, i);
        let one = PbwMonomial::one(n);
        [
            ((g.clone(), one.clone()), Rational::one()),
            ((one, g), Rational::one()),
        ]
        .into_iter()
        .collect()
    }

    pub fn coproduct_monomial(&self, m: &PbwMonomial) -> TensorElement {
        let n = self.num_generators();
        let mut acc = TensorElement::basis((PbwMonomial::one(n), PbwMonomial::one(n)));
        for g in m.word() {
            acc = self.tensor_multiply(&acc, &self.coproduct_generator(g));
        }
        acc
    }

    /// The algebra map with `Δ(X) = X ⊗ 1 + 1 ⊗ X` on generators.
    pub fn coproduct(&self, x: &UeaElement) -> TensorElement {
        x.map_linear(|m| self.coproduct_monomial(m))
    }

    /// Coefficient of the empty monomial.
    pub fn counit(&self, x: &UeaElement) -> Rational {
        x.coeff(&PbwMonomial::one(self.num_generators()))
    }

    /// Anti-automorphism with `S(X) = −X` on generators.
    pub fn antipode_monomial(&self, m: &PbwMonomial) -> UeaElement {
        let mut word = m.word();
        let sign = if word.len().is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        word.reverse();
        self.word(&word).scaled(&sign)
    }

    pub fn antipode(&self, x: &UeaElement) -> UeaElement {
        x.map_linear(|m| self.antipode_monomial(m))
    }

    /// `(ε(x), S(x))`
    pub fn counit_antipode(&self, x: &UeaElement) -> (Rational, UeaElement) {
        (self.counit(x), self.antipode(x))
    }

    /// Renders a monomial with the Lie algebra's basis names, e.g. `f^2*h`.
    pub fn format_monomial(&self, m: &PbwMonomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let name = self.lie.basis_name(i);
                if a == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{a}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, x: &UeaElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = x
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    self.format_monomial(m)
                } else {
                    format!("{}*{}", format_rational(c), self.format_monomial(m))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Flip of the two tensor legs.
pub fn flip(x: &TensorElement) -> TensorElement {
    x.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
        .collect()
}
