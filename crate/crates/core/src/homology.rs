//! The Chevalley–Eilenberg complex `C_p = Λ^p𝔤 ⊗ A`, Betti numbers, and the
//! functional certificate that a non-solvable algebra has nonzero homology with
//! coefficients in the enveloping algebra of its radical.
//!
//! Coefficients are left 𝔤-modules. The action term of the differential is taken
//! through the antipode, `a·X = −X·a`, so that `d` is the boundary of the right
//! module underlying the standard complex; bracket terms carry `(−1)^{i+j}`.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{rank, solve, QMatrix, Rational};
use crate::liealg::{AlgebraKind, LeviDecomposition, LeviFailure, LieAlgebra, LieError, Subspace};
use crate::lincomb::LinComb;
use crate::smash::{ModuleAlgebraAction, SmashError};
use crate::uea::{monomials_up_to, EnvelopingAlgebra, PbwMonomial, UeaElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("chain degree {p} out of range for a {n}-dimensional algebra")]
    DegreeOutOfRange { p: usize, n: usize },
    #[error("algebra is {0}, not semisimple")]
    NotSemisimple(AlgebraKind),
    #[error("module action leaves the target window: {0}")]
    OutOfWindow(String),
    #[error("bad module data: {0}")]
    BadModule(String),
    #[error(transparent)]
    Smash(#[from] SmashError),
    #[error("Levi decomposition rejected: {0}")]
    Levi(#[from] LeviFailure),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A left 𝔤-module with a (possibly graded) basis.
pub trait CoefficientModule {
    type Key: Clone + Ord + Hash + Debug;

    /// Basis elements of degree at most `window`. Finite modules ignore the window.
    fn basis(&self, window: usize) -> Vec<Self::Key>;
    /// `X_gen · key`
    fn act(&self, gen: usize, key: &Self::Key) -> Result<LinComb<Self::Key>, HomologyError>;
    /// The augmentation used by certificates; trivial modules send the basis vector to 1.
    fn augmentation(&self, key: &Self::Key) -> Rational;
    fn describe(&self, key: &Self::Key) -> String;
}

/// ℚ with every element acting by zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialModule;

impl CoefficientModule for TrivialModule {
    type Key = ();

    fn basis(&self, _: usize) -> Vec<()> {
        vec![()]
    }

    fn act(&self, _: usize, _: &()) -> Result<LinComb<()>, HomologyError> {
        Ok(LinComb::zero())
    }

    fn augmentation(&self, _: &()) -> Rational {
        Rational::one()
    }

    fn describe(&self, _: &()) -> String {
        "1".into()
    }
}

/// A finite-dimensional representation; `matrices[i]` is the action of `e_i`.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    dim: usize,
    matrices: Vec<QMatrix>,
}

impl FiniteModule {
    /// Checks `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)`.
    pub fn new(
        lie: &LieAlgebra,
        dim: usize,
        matrices: Vec<QMatrix>,
    ) -> Result<Self, HomologyError> {
        if matrices.len() != lie.dim()
            || matrices.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(HomologyError::BadModule(format!(
                "need {} matrices of size {dim}x{dim}",
                lie.dim()
            )));
        }
        for i in 0..lie.dim() {
            for j in i + 1..lie.dim() {
                let mut bracket = QMatrix::zeros(dim, dim);
                for (&k, c) in &lie.bracket_basis(i, j) {
                    for (r, s, v) in matrices[k].entries() {
                        bracket.add_at(r, s, &(v * c));
                    }
                }
                let mut commutator = matrices[i].mul(&matrices[j]);
                for (r, s, v) in matrices[j].mul(&matrices[i]).entries() {
                    commutator.add_at(r, s, &-v);
                }
                if bracket != commutator {
                    return Err(HomologyError::BadModule(format!(
                        "not a representation at ({}, {})",
                        lie.basis_name(i),
                        lie.basis_name(j)
                    )));
                }
            }
        }
        Ok(Self { dim, matrices })
    }

    pub fn adjoint(lie: &LieAlgebra) -> Self {
        let matrices = (0..lie.dim()).map(|i| lie.ad_matrix(i)).collect();
        Self::new(lie, lie.dim(), matrices).expect("adjoint of a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl CoefficientModule for FiniteModule {
    type Key = usize;

    fn basis(&self, _: usize) -> Vec<usize> {
        (0..self.dim).collect()
    }

    fn act(&self, gen: usize, key: &usize) -> Result<LinComb<usize>, HomologyError> {
        Ok((0..self.dim)
            .map(|r| (r, self.matrices[gen].get(r, *key)))
            .collect())
    }

    fn augmentation(&self, _: &usize) -> Rational {
        Rational::zero()
    }

    fn describe(&self, key: &usize) -> String {
        format!("v{key}")
    }
}

/// U(𝔯) truncated at degree `cap`, as a module over 𝔤 = 𝔯 ⊕ 𝔥 written in an adapted
/// basis: radical generators multiply from the left, Levi generators act by the
/// derivations extending `ad`. Both come from the A#H-module structure on A.
#[derive(Debug, Clone)]
pub struct TruncatedRadicalModule {
    action: ModuleAlgebraAction<EnvelopingAlgebra>,
    radical_dim: usize,
}

impl TruncatedRadicalModule {
    pub fn new(decomposition: &LeviDecomposition, cap: usize) -> Result<Self, HomologyError> {
        Ok(Self {
            action: ModuleAlgebraAction::levi(decomposition, cap)?,
            radical_dim: decomposition.radical_dim(),
        })
    }

    pub fn cap(&self) -> usize {
        self.action.truncation()
    }

    pub fn action(&self) -> &ModuleAlgebraAction<EnvelopingAlgebra> {
        &self.action
    }
}

impl CoefficientModule for TruncatedRadicalModule {
    type Key = PbwMonomial;

    fn basis(&self, window: usize) -> Vec<PbwMonomial> {
        monomials_up_to(self.radical_dim, window)
    }

    fn act(&self, gen: usize, key: &PbwMonomial) -> Result<UeaElement, HomologyError> {
        let b = UeaElement::basis(key.clone());
        let u = if gen < self.radical_dim {
            self.action.i1(&self.action.algebra().generator(gen))
        } else {
            let levi = self.action.hopf();
            let y = PbwMonomial::generator(levi.num_generators(), gen - self.radical_dim);
            self.action.i2(&LinComb::basis(y))
        };
        Ok(self.action.module_action_on_a(&u, &b)?)
    }

    fn augmentation(&self, key: &PbwMonomial) -> Rational {
        if key.is_one() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn describe(&self, key: &PbwMonomial) -> String {
        self.action.algebra().format_monomial(key)
    }
}

/// Basis chain `e_{w₁} ∧ … ∧ e_{w_p} ⊗ a` with `w` strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainBasisIndex<K> {
    pub wedge: Vec<usize>,
    pub coeff: K,
}

pub type ChainElement<K> = LinComb<ChainBasisIndex<K>>;

/// Strictly increasing `p`-subsets of `0..n` in lexicographic order.
pub fn wedges(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// `d(X₁∧…∧X_p ⊗ a)` for one basis chain.
pub fn boundary<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    chain: &ChainBasisIndex<M::Key>,
) -> Result<ChainElement<M::Key>, HomologyError> {
    let w = &chain.wedge;
    let mut out = ChainElement::zero();
    for i in 0..w.len() {
        let rest: Vec<usize> = w
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != i)
            .map(|(_, &x)| x)
            .collect();
        // (−1)^{i−1} with 1-based i, and a·X = −X·a.
        let sign = if i % 2 == 0 {
            -Rational::one()
        } else {
            Rational::one()
        };
        for (m, c) in &module.act(w[i], &chain.coeff)? {
            out.add_term(
                ChainBasisIndex {
                    wedge: rest.clone(),
                    coeff: m.clone(),
                },
                &sign * c,
            );
        }
    }
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let rest: Vec<usize> = w
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i && t != j)
                .map(|(_, &x)| x)
                .collect();
            // (−1)^{i+j} is the same for 0- and 1-based indices.
            let sign_ij = if (i + j) % 2 == 0 { 1 } else { -1 };
            for (&k, c) in &lie.bracket_basis(w[i], w[j]) {
                if rest.contains(&k) {
                    continue;
                }
                let before = rest.iter().filter(|&&x| x < k).count();
                let mut wedge = rest.clone();
                wedge.insert(before, k);
                let sign = if before % 2 == 0 { sign_ij } else { -sign_ij };
                out.add_term(
                    ChainBasisIndex {
                        wedge,
                        coeff: chain.coeff.clone(),
                    },
                    c * Rational::from_integer(sign.into()),
                );
            }
        }
    }
    Ok(out)
}

/// Linear extension of [`boundary`].
pub fn boundary_of<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    chain: &ChainElement<M::Key>,
) -> Result<ChainElement<M::Key>, HomologyError> {
    chain.try_map_linear(|b| boundary(lie, module, b))
}

/// Matrix of `d_p` together with the chain bases indexing its columns and rows.
#[derive(Debug, Clone)]
pub struct DifferentialMatrix<K> {
    pub p: usize,
    pub matrix: QMatrix,
    pub source: Vec<ChainBasisIndex<K>>,
    pub target: Vec<ChainBasisIndex<K>>,
}

fn chain_basis<K: Clone>(n: usize, p: usize, coeffs: &[K]) -> Vec<ChainBasisIndex<K>> {
    let mut out = Vec::new();
    for w in wedges(n, p) {
        for c in coeffs {
            out.push(ChainBasisIndex {
                wedge: w.clone(),
                coeff: c.clone(),
            });
        }
    }
    out
}

/// `d_p : C_p → C_{p−1}` with coefficients of degree ≤ `source_window` in the source
/// and ≤ `target_window` in the target. `d_0` is the zero map to the zero space and
/// `d_{n+1}` the zero map from it.
pub fn ce_differential_windowed<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    p: usize,
    source_window: usize,
    target_window: usize,
) -> Result<DifferentialMatrix<M::Key>, HomologyError> {
    let n = lie.dim();
    if p > n + 1 {
        return Err(HomologyError::DegreeOutOfRange { p, n });
    }
    let source = if p <= n {
        chain_basis(n, p, &module.basis(source_window))
    } else {
        Vec::new()
    };
    let target = if p >= 1 {
        chain_basis(n, p - 1, &module.basis(target_window))
    } else {
        Vec::new()
    };
    let row: HashMap<&ChainBasisIndex<M::Key>, usize> =
        target.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut matrix = QMatrix::zeros(target.len(), source.len());
    if p >= 1 {
        for (j, b) in source.iter().enumerate() {
            for (t, c) in &boundary(lie, module, b)? {
                let i = *row.get(t).ok_or_else(|| {
                    HomologyError::OutOfWindow(format!(
                        "d({:?} ⊗ {}) has a term with coefficient {}",
                        b.wedge,
                        module.describe(&b.coeff),
                        module.describe(&t.coeff)
                    ))
                })?;
                matrix.set(i, j, c.clone());
            }
        }
    }
    Ok(DifferentialMatrix {
        p,
        matrix,
        source,
        target,
    })
}

/// `d_p` for a module whose basis does not depend on a window.
pub fn ce_differential<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    p: usize,
) -> Result<QMatrix, HomologyError> {
    Ok(ce_differential_windowed(lie, module, p, 0, 0)?.matrix)
}

/// `b_p = dim C_p − rank d_p − rank d_{p+1}`.
pub fn betti<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    p: usize,
) -> Result<usize, HomologyError> {
    let n = lie.dim();
    if p > n {
        return Err(HomologyError::DegreeOutOfRange { p, n });
    }
    let dp = ce_differential(lie, module, p)?;
    let dp1 = ce_differential(lie, module, p + 1)?;
    Ok(dp.cols() - rank(&dp) - rank(&dp1))
}

/// `(b₀, …, b_n)`, computing each differential's rank once.
pub fn betti_all<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
) -> Result<Vec<usize>, HomologyError> {
    let n = lie.dim();
    let mut ranks = Vec::with_capacity(n + 2);
    let mut dims = Vec::with_capacity(n + 1);
    for p in 0..=n + 1 {
        let d = ce_differential(lie, module, p)?;
        if p <= n {
            dims.push(d.cols());
        }
        ranks.push(rank(&d));
    }
    Ok((0..=n).map(|p| dims[p] - ranks[p] - ranks[p + 1]).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopDifferentialReport {
    pub dim: usize,
    /// Rows and columns of `d_n`.
    pub shape: (usize, usize),
    /// First nonzero entry `(row, col, value)`, if any.
    pub nonzero_entry: Option<(usize, usize, Rational)>,
}

impl TopDifferentialReport {
    pub fn is_zero(&self) -> bool {
        self.nonzero_entry.is_none()
    }
}

/// Assembles `d : Λ^n𝔤 → Λ^{n−1}𝔤` with trivial coefficients for semisimple 𝔤 and
/// reports whether it vanishes.
pub fn top_differential_zero(lie: &LieAlgebra) -> Result<TopDifferentialReport, HomologyError> {
    let kind = lie.classify()?.kind;
    if kind != AlgebraKind::Semisimple {
        return Err(HomologyError::NotSemisimple(kind));
    }
    let n = lie.dim();
    let d = ce_differential(lie, &TrivialModule, n)?;
    let nonzero_entry = d.entries().next().map(|(i, j, v)| (i, j, v.clone()));
    Ok(TopDifferentialReport {
        dim: n,
        shape: (d.rows(), d.cols()),
        nonzero_entry,
    })
}

/// Outcome of one certificate condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

/// The data `(η, ξ, ε_A, N)` and the three checks.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub k: usize,
    pub truncation: usize,
    pub radical_names: Vec<String>,
    pub levi_names: Vec<String>,
    /// η = `eta_scale · (Levi wedge)`.
    pub eta_scale: Rational,
    /// ξ sends the Levi wedge to `xi_scale` and the complement E to zero.
    pub xi_scale: Rational,
    /// `d(η⊗1) = 0`
    pub c1: ConditionCheck,
    /// `(ξ⊗ε_A)(d w) = 0` for every basis chain w in `C_{k+1}` with A-degree ≤ N.
    pub c2: ConditionCheck,
    /// `(ξ⊗ε_A)(η⊗1) = 1`
    pub c3: ConditionCheck,
    pub c3_value: Rational,
    /// No `w` of A-degree ≤ N solves `d w = η⊗1`.
    pub solve_non_boundary: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.c1.passed && self.c2.passed && self.c3.passed
    }

    /// The functional certificate implies non-boundary; the solve check must confirm it.
    pub fn solve_agrees(&self) -> bool {
        !self.passed() || self.solve_non_boundary
    }
}

#[derive(Debug, Clone)]
pub enum Obstruction {
    /// The algebra is solvable, so k = 0 and there is nothing to certify.
    Vacuous {
        radical_dim: usize,
    },
    Certified(Box<Certificate>),
}

impl Obstruction {
    pub fn k(&self) -> usize {
        match self {
            Obstruction::Vacuous { .. } => 0,
            Obstruction::Certified(c) => c.k,
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            Obstruction::Vacuous { .. } => true,
            Obstruction::Certified(c) => c.passed() && c.solve_agrees(),
        }
    }
}

pub fn obstruction_certificate(
    lie: &LieAlgebra,
    levi: &Subspace,
    n: usize,
) -> Result<Obstruction, HomologyError> {
    obstruction_certificate_scaled(lie, levi, n, &Rational::one())
}

/// As [`obstruction_certificate`], with η multiplied by `scale` and ξ by its inverse.
pub fn obstruction_certificate_scaled(
    lie: &LieAlgebra,
    levi: &Subspace,
    n: usize,
    scale: &Rational,
) -> Result<Obstruction, HomologyError> {
    let classification = lie.classify()?;
    if classification.kind == AlgebraKind::Solvable {
        return Ok(Obstruction::Vacuous {
            radical_dim: classification.radical_dim(),
        });
    }
    if scale.is_zero() {
        return Err(HomologyError::BadModule("η must be nonzero".into()));
    }
    let decomposition = lie.verify_levi(levi)?;
    let g = &decomposition.adapted;
    let dim = g.dim();
    let r = decomposition.radical_dim();
    let k = dim - r;
    let module = TruncatedRadicalModule::new(&decomposition, n + 1)?;
    let one = PbwMonomial::one(r);

    let levi_wedge: Vec<usize> = (r..dim).collect();
    let xi_scale = scale.recip();
    let functional = |chain: &ChainElement<PbwMonomial>| -> Rational {
        chain.evaluate(|b| {
            if b.wedge == levi_wedge {
                &xi_scale * module.augmentation(&b.coeff)
            } else {
                Rational::zero()
            }
        })
    };
    let eta = ChainElement::term(
        ChainBasisIndex {
            wedge: levi_wedge.clone(),
            coeff: one.clone(),
        },
        scale.clone(),
    );

    let d_eta = boundary_of(g, &module, &eta)?;
    let c1 = ConditionCheck {
        passed: d_eta.is_zero(),
        cases: 1,
        detail: (!d_eta.is_zero())
            .then(|| format!("d(η⊗1) = {}", describe_chain(g, &module, &d_eta))),
    };

    let mut c2 = ConditionCheck {
        passed: true,
        cases: 0,
        detail: None,
    };
    for b in chain_basis(dim, k + 1, &module.basis(n)) {
        let value = functional(&boundary(g, &module, &b)?);
        c2.cases += 1;
        if !value.is_zero() && c2.passed {
            c2.passed = false;
            c2.detail = Some(format!(
                "(ξ⊗ε_A)(d({})) = {}",
                describe_chain(g, &module, &ChainElement::basis(b.clone())),
                value
            ));
        }
    }

    let c3_value = functional(&eta);
    let c3 = ConditionCheck {
        passed: c3_value.is_one(),
        cases: 1,
        detail: (!c3_value.is_one()).then(|| format!("(ξ⊗ε_A)(η⊗1) = {c3_value}")),
    };

    let dk1 = ce_differential_windowed(g, &module, k + 1, n, n + 1)?;
    let rhs: Vec<Rational> = dk1.target.iter().map(|b| eta.coeff(b)).collect();
    let solve_non_boundary = solve(&dk1.matrix, &rhs).is_none();

    Ok(Obstruction::Certified(Box::new(Certificate {
        k,
        truncation: n,
        radical_names: g.basis_names()[..r].to_vec(),
        levi_names: g.basis_names()[r..].to_vec(),
        eta_scale: scale.clone(),
        xi_scale,
        c1,
        c2,
        c3,
        c3_value,
        solve_non_boundary,
    })))
}

pub fn describe_chain<M: CoefficientModule>(
    lie: &LieAlgebra,
    module: &M,
    c: &ChainElement<M::Key>,
) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.iter()
        .map(|(b, v)| {
            let w: Vec<&str> = b.wedge.iter().map(|&i| lie.basis_name(i)).collect();
            let w = if w.is_empty() {
                "1".to_string()
            } else {
                w.join("∧")
            };
            format!("{v}*{w}⊗{}", module.describe(&b.coeff))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, qf};
    use crate::fixtures;

    fn chain<K: Clone + Ord>(wedge: &[usize], coeff: K) -> ChainBasisIndex<K> {
        ChainBasisIndex {
            wedge: wedge.to_vec(),
            coeff,
        }
    }

    #[test]
    fn wedge_counts() {
        assert_eq!(wedges(4, 2).len(), 6);
        assert_eq!(wedges(3, 0), vec![Vec::<usize>::new()]);
        assert!(wedges(2, 3).is_empty());
        assert_eq!(wedges(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn heisenberg_degree_two() {
        let h3 = fixtures::heisenberg3();
        let d = |w: &[usize]| boundary(&h3, &TrivialModule, &chain(w, ())).unwrap();
        assert_eq!(d(&[0, 1]), ChainElement::term(chain(&[2], ()), q(-1)));
        assert!(d(&[0, 2]).is_zero());
        assert!(d(&[1, 2]).is_zero());
        // The matrix oracle: rows (x, y, z), columns (x∧y, x∧z, y∧z).
        assert_eq!(
            ce_differential(&h3, &TrivialModule, 2).unwrap(),
            QMatrix::from_i64_rows(&[vec![0, 0, 0], vec![0, 0, 0], vec![-1, 0, 0]])
        );
    }

    #[test]
    fn sl2_matrices_by_hand() {
        let sl2 = fixtures::sl2();
        // d(f∧h) = −[f,h] = −2f, d(f∧e) = h, d(h∧e) = −2e
        assert_eq!(
            ce_differential(&sl2, &TrivialModule, 2).unwrap(),
            QMatrix::from_i64_rows(&[vec![-2, 0, 0], vec![0, 1, 0], vec![0, 0, -2]])
        );
        assert!(ce_differential(&sl2, &TrivialModule, 3).unwrap().is_zero());
        assert_eq!(betti_all(&sl2, &TrivialModule).unwrap(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(
            betti_all(&fixtures::heisenberg3(), &TrivialModule).unwrap(),
            vec![1, 2, 2, 1]
        );
        assert_eq!(
            betti_all(&fixtures::abelian(3), &TrivialModule).unwrap(),
            vec![1, 3, 3, 1]
        );
        assert_eq!(
            betti_all(&fixtures::abelian(4), &TrivialModule).unwrap(),
            vec![1, 4, 6, 4, 1]
        );
        assert_eq!(betti(&fixtures::sl2(), &TrivialModule, 3).unwrap(), 1);
        // The non-unimodular 2-dimensional algebra has no top class.
        assert_eq!(
            betti_all(&fixtures::affine2(), &TrivialModule).unwrap(),
            vec![1, 1, 0]
        );
    }

    #[test]
    fn adjoint_homology_of_sl2_vanishes() {
        let sl2 = fixtures::sl2();
        let ad = FiniteModule::adjoint(&sl2);
        assert_eq!(betti_all(&sl2, &ad).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn dd_zero_with_adjoint_coefficients() {
        for lie in fixtures::all_valid() {
            let ad = FiniteModule::adjoint(&lie);
            for p in 1..lie.dim() {
                let a = ce_differential(&lie, &ad, p).unwrap();
                let b = ce_differential(&lie, &ad, p + 1).unwrap();
                assert!(a.mul(&b).is_zero(), "{} p={p}", lie.name());
            }
        }
    }

    #[test]
    fn dd_zero_with_truncated_coefficients() {
        let semi = fixtures::sl2_ltimes_c2();
        let d = semi
            .verify_levi(&Subspace::coordinate(5, &[2, 3, 4]).unwrap())
            .unwrap();
        let module = TruncatedRadicalModule::new(&d, 4).unwrap();
        for p in 1..5 {
            let a = ce_differential_windowed(&d.adapted, &module, p, 3, 4).unwrap();
            let b = ce_differential_windowed(&d.adapted, &module, p + 1, 2, 3).unwrap();
            assert!(a.matrix.mul(&b.matrix).is_zero(), "p={p}");
        }
    }

    #[test]
    fn representation_check_rejects_bad_matrices() {
        let sl2 = fixtures::sl2();
        let mut mats: Vec<QMatrix> = (0..3).map(|i| sl2.ad_matrix(i)).collect();
        mats[1].scale_row(0, &q(2));
        assert!(FiniteModule::new(&sl2, 3, mats).is_err());
    }

    #[test]
    fn top_differential() {
        assert!(top_differential_zero(&fixtures::sl2()).unwrap().is_zero());
        assert!(top_differential_zero(&fixtures::sl2_plus_sl2())
            .unwrap()
            .is_zero());
        assert_eq!(
            top_differential_zero(&fixtures::heisenberg3()).unwrap_err(),
            HomologyError::NotSemisimple(AlgebraKind::Solvable)
        );
        assert!(matches!(
            top_differential_zero(&fixtures::gl2()),
            Err(HomologyError::NotSemisimple(AlgebraKind::Mixed))
        ));
    }

    #[test]
    fn certificate_for_sl2_itself() {
        let sl2 = fixtures::sl2();
        let Obstruction::Certified(c) =
            obstruction_certificate(&sl2, &Subspace::whole(3), 2).unwrap()
        else {
            panic!("sl2 is not solvable");
        };
        assert_eq!(c.k, 3);
        assert!(c.passed() && c.solve_non_boundary);
        assert_eq!(c.c2.cases, 0);
        assert_eq!(c.levi_names, vec!["f", "h", "e"]);
    }

    #[test]
    fn certificate_for_gl2_and_semidirect() {
        let gl2 = fixtures::gl2();
        let levi = Subspace::coordinate(4, &[1, 2, 3]).unwrap();
        let semi = fixtures::sl2_ltimes_c2();
        let semi_levi = Subspace::coordinate(5, &[2, 3, 4]).unwrap();
        for n in 1..=3 {
            for (lie, h) in [(&gl2, &levi), (&semi, &semi_levi)] {
                let o = obstruction_certificate(lie, h, n).unwrap();
                assert_eq!(o.k(), 3);
                let Obstruction::Certified(c) = o else {
                    unreachable!()
                };
                assert!(c.passed(), "{c:?}");
                assert!(c.solve_non_boundary);
                assert!(c.c2.cases > 0);
            }
        }
    }

    #[test]
    fn certificate_scaling() {
        let gl2 = fixtures::gl2();
        let levi = Subspace::coordinate(4, &[1, 2, 3]).unwrap();
        for s in [qf(-3, 7), q(5)] {
            let Obstruction::Certified(c) =
                obstruction_certificate_scaled(&gl2, &levi, 2, &s).unwrap()
            else {
                unreachable!()
            };
            assert!(c.passed() && c.solve_non_boundary);
            assert_eq!(c.c3_value, q(1));
        }
    }

    #[test]
    fn solvable_is_vacuous() {
        for lie in [
            fixtures::heisenberg3(),
            fixtures::abelian(3),
            fixtures::affine2(),
        ] {
            let o = obstruction_certificate(&lie, &Subspace::zero(lie.dim()), 4).unwrap();
            assert!(matches!(o, Obstruction::Vacuous { .. }));
            assert_eq!(o.k(), 0);
            assert!(o.passed());
        }
    }

    #[test]
    fn bad_levi_rejected() {
        let gl2 = fixtures::gl2();
        let bad = Subspace::coordinate(4, &[0, 2]).unwrap();
        assert!(matches!(
            obstruction_certificate(&gl2, &bad, 2),
            Err(HomologyError::Levi(_))
        ));
    }
}
