//! Finite-dimensional Lie algebras over ℚ given by structure constants.
//!
//! A Lie algebra stores `[e_i, e_j] = Σ_k c_ij^k e_k` only for `i < j`;
//! antisymmetry supplies the rest. On top of that this module provides the
//! Jacobi check, the Killing form, the radical (as the Killing-orthogonal of
//! the derived algebra), solvable/semisimple classification, and verification
//! of a user-supplied Levi decomposition.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{
    format_rational, independent, is_zero_vector, rank, row_space_basis, solve, QMatrix, QVector,
    Rational,
};
use crate::lincomb::LinComb;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket record ({i}, {j}) must have i < j")]
    UnorderedPair { i: usize, j: usize },
    #[error("duplicate bracket record ({i}, {j})")]
    DuplicateBracket { i: usize, j: usize },
    #[error("basis name {0:?} appears more than once")]
    DuplicateName(String),
    #[error("vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("spanning vectors are linearly dependent")]
    DependentVectors,
    #[error("vectors do not form a basis of the algebra")]
    NotABasis,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

/// A Lie algebra with a named basis and rational structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    brackets: BTreeMap<(usize, usize), LinComb<usize>>,
}

impl LieAlgebra {
    /// The abelian Lie algebra on the given basis names.
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        basis: impl IntoIterator<Item = S>,
    ) -> Result<Self, LieError> {
        let basis: Vec<String> = basis.into_iter().map(Into::into).collect();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(LieError::DuplicateName(b.clone()));
            }
        }
        Ok(Self {
            name: name.into(),
            basis,
            brackets: BTreeMap::new(),
        })
    }

    /// Records `[e_i, e_j] = Σ coeffs`. Requires `i < j` and no previous record for the pair.
    pub fn set_bracket(
        &mut self,
        i: usize,
        j: usize,
        coeffs: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<(), LieError> {
        let dim = self.dim();
        for index in [i, j] {
            if index >= dim {
                return Err(LieError::IndexOutOfRange { index, dim });
            }
        }
        if i >= j {
            return Err(LieError::UnorderedPair { i, j });
        }
        if self.brackets.contains_key(&(i, j)) {
            return Err(LieError::DuplicateBracket { i, j });
        }
        let mut value = LinComb::zero();
        for (k, c) in coeffs {
            if k >= dim {
                return Err(LieError::IndexOutOfRange { index: k, dim });
            }
            value.add_term(k, c);
        }
        // Zero brackets are kept so duplicate records are still detected.
        self.brackets.insert((i, j), value);
        Ok(())
    }

    /// Builder form of [`set_bracket`](Self::set_bracket).
    pub fn with_bracket(
        mut self,
        i: usize,
        j: usize,
        coeffs: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self, LieError> {
        self.set_bracket(i, j, coeffs)?;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Stored structure constants, `(i, j) ↦ [e_i, e_j]` for `i < j`, zero brackets omitted.
    pub fn structure_constants(&self) -> impl Iterator<Item = ((usize, usize), &LinComb<usize>)> {
        self.brackets
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&k, v)| (k, v))
    }

    /// `[e_i, e_j]` for arbitrary basis indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> LinComb<usize> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => LinComb::zero(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.brackets.get(&(j, i)).map(|v| -v).unwrap_or_default(),
        }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> QVector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (&(i, j), v) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (&k, ck) in v {
                out[k] += &c * ck;
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> QVector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Matrix of `ad e_i`; column `j` holds the coordinates of `[e_i, e_j]`.
    pub fn ad_matrix(&self, i: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            for (&k, c) in &self.bracket_basis(i, j) {
                m.set(k, j, c.clone());
            }
        }
        m
    }

    /// Checks the Jacobi identity on every triple `i < j < k`.
    pub fn validate(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let sum = self.jacobiator(i, j, k);
                    if !is_zero_vector(&sum) {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            jacobiator: sum,
                        });
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> QVector {
        let e = |t| self.unit_vector(t);
        let mut sum = vec![Rational::zero(); self.dim()];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket(&e(a), &e(b));
            for (s, t) in sum.iter_mut().zip(self.bracket(&inner, &e(c))) {
                *s += t;
            }
        }
        sum
    }

    /// Killing form `κ(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim();
        let ads: Vec<QMatrix> = (0..n).map(|i| self.ad_matrix(i)).collect();
        let mut k = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let prod = ads[i].mul(&ads[j]);
                let tr = (0..n).fold(Rational::zero(), |acc, t| acc + prod.get(t, t));
                k.set(i, j, tr.clone());
                k.set(j, i, tr);
            }
        }
        k
    }

    /// Echelon basis of `span{[x, y] : x ∈ a, y ∈ b}`.
    pub fn bracket_span(&self, a: &[QVector], b: &[QVector]) -> Vec<QVector> {
        let mut out = Vec::new();
        for x in a {
            for y in b {
                let z = self.bracket(x, y);
                if !is_zero_vector(&z) {
                    out.push(z);
                }
            }
        }
        row_space_basis(&out, self.dim())
    }

    /// `[𝔤, 𝔤]`
    pub fn derived_algebra(&self) -> Subspace {
        let all = Subspace::whole(self.dim());
        Subspace::from_spanning(self.dim(), &self.bracket_span(&all.vectors, &all.vectors))
    }

    /// Dimensions of the derived series `S ⊇ [S,S] ⊇ ...` of a subalgebra, stopping at
    /// zero or at the first repeated dimension.
    pub fn derived_series_dims(&self, s: &Subspace) -> Vec<usize> {
        let mut dims = vec![s.dim()];
        let mut current = s.vectors.clone();
        while !current.is_empty() {
            let next = self.bracket_span(&current, &current);
            if next.len() == current.len() {
                break;
            }
            dims.push(next.len());
            current = next;
        }
        dims
    }

    pub fn is_solvable_subalgebra(&self, s: &Subspace) -> bool {
        self.derived_series_dims(s).last() == Some(&0)
    }

    /// First pair `(a, b)` of spanning vectors of `s` whose bracket leaves `s`.
    pub fn subalgebra_violation(&self, s: &Subspace) -> Option<(usize, usize)> {
        for (a, x) in s.vectors.iter().enumerate() {
            for (b, y) in s.vectors.iter().enumerate().skip(a + 1) {
                if !s.contains(&self.bracket(x, y)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.unit_vector(i);
            s.vectors.iter().all(|v| s.contains(&self.bracket(&e, v)))
        })
    }

    /// The radical, computed as `{x : κ(x, y) = 0 for all y ∈ [𝔤,𝔤]}` and re-checked
    /// to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace, LieError> {
        let n = self.dim();
        let kappa = self.killing_form();
        let derived = self.derived_algebra();
        let constraints: Vec<QVector> = derived
            .vectors
            .iter()
            .map(|y| kappa.transpose().mul_vec(y))
            .collect();
        let rad = if constraints.is_empty() {
            Subspace::whole(n)
        } else {
            let m = QMatrix::from_rows(&constraints);
            Subspace::from_spanning(n, &crate::exactlin::kernel_basis(&m))
        };
        if !self.is_ideal(&rad) {
            return Err(LieError::InvariantViolation(
                "computed radical is not an ideal".into(),
            ));
        }
        if !self.is_solvable_subalgebra(&rad) {
            return Err(LieError::InvariantViolation(
                "computed radical is not solvable".into(),
            ));
        }
        Ok(rad)
    }

    pub fn classify(&self) -> Result<Classification, LieError> {
        let radical = self.radical()?;
        let whole = Subspace::whole(self.dim());
        let kind = if self.is_solvable_subalgebra(&whole) {
            AlgebraKind::Solvable
        } else if rank(&self.killing_form()) == self.dim() {
            AlgebraKind::Semisimple
        } else {
            AlgebraKind::Mixed
        };
        Ok(Classification { kind, radical })
    }

    /// Checks that `h` is a Levi complement: a subalgebra, semisimple (nondegenerate
    /// Killing form restricted to it), and complementary to the radical.
    pub fn verify_levi(&self, h: &Subspace) -> Result<LeviDecomposition, LeviFailure> {
        let n = self.dim();
        if h.ambient_dim() != n {
            return Err(LeviFailure::Input(LieError::WrongLength {
                got: h.ambient_dim(),
                expected: n,
            }));
        }
        if let Some((a, b)) = self.subalgebra_violation(h) {
            return Err(LeviFailure::NotSubalgebra { a, b });
        }
        let kappa = self.killing_form();
        let restricted: Vec<QVector> = h
            .vectors
            .iter()
            .map(|x| {
                let kx = kappa.mul_vec(x);
                h.vectors
                    .iter()
                    .map(|y| y.iter().zip(&kx).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        let kr = if restricted.is_empty() {
            0
        } else {
            rank(&QMatrix::from_rows(&restricted))
        };
        if kr != h.dim() {
            return Err(LeviFailure::Degenerate {
                rank: kr,
                dim: h.dim(),
            });
        }
        let radical = self.radical().map_err(LeviFailure::Input)?;
        let mut combined = radical.vectors.clone();
        combined.extend(h.vectors.iter().cloned());
        let combined_rank = if combined.is_empty() {
            0
        } else {
            rank(&QMatrix::from_rows(&combined))
        };
        if combined.len() != n || combined_rank != n {
            return Err(LeviFailure::NotComplement {
                radical_dim: radical.dim(),
                levi_dim: h.dim(),
                combined_rank,
                ambient: n,
            });
        }
        let mut names: Vec<String> = Vec::with_capacity(n);
        for v in &combined {
            names.push(self.describe_vector(v));
        }
        // Generated names may collide with existing ones only in contrived inputs.
        for i in 0..n {
            if names[..i].contains(&names[i]) {
                names[i] = format!("b{i}");
            }
        }
        let adapted = self
            .change_basis(&combined, &names, format!("{} (adapted)", self.name))
            .map_err(LeviFailure::Input)?;
        let mut basis_change = QMatrix::zeros(n, n);
        for (j, v) in combined.iter().enumerate() {
            for (i, c) in v.iter().enumerate() {
                basis_change.set(i, j, c.clone());
            }
        }
        Ok(LeviDecomposition {
            radical,
            levi: h.clone(),
            adapted,
            basis_change,
        })
    }

    /// The same Lie algebra expressed in a new basis (given in current coordinates).
    pub fn change_basis(
        &self,
        vectors: &[QVector],
        names: &[String],
        name: impl Into<String>,
    ) -> Result<LieAlgebra, LieError> {
        let n = self.dim();
        if vectors.len() != n || !independent(vectors) {
            return Err(LieError::NotABasis);
        }
        let mut p = QMatrix::zeros(n, n);
        for (j, v) in vectors.iter().enumerate() {
            if v.len() != n {
                return Err(LieError::WrongLength {
                    got: v.len(),
                    expected: n,
                });
            }
            for (i, c) in v.iter().enumerate() {
                p.set(i, j, c.clone());
            }
        }
        let mut out = LieAlgebra::new(name, names.iter().cloned())?;
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&vectors[i], &vectors[j]);
                if is_zero_vector(&w) {
                    continue;
                }
                let c = solve(&p, &w).ok_or_else(|| {
                    LieError::InvariantViolation("bracket outside the span of a basis".into())
                })?;
                out.set_bracket(i, j, c.into_iter().enumerate())?;
            }
        }
        Ok(out)
    }

    /// The coordinate subalgebra spanned by `e_start, ..., e_{end-1}`. The caller
    /// guarantees the range is closed under the bracket.
    pub fn coordinate_subalgebra(
        &self,
        range: std::ops::Range<usize>,
        name: impl Into<String>,
    ) -> Result<LieAlgebra, LieError> {
        let offset = range.start;
        let mut out = LieAlgebra::new(name, self.basis[range.clone()].iter().cloned())?;
        for i in range.clone() {
            for j in i + 1..range.end {
                let v = self.bracket_basis(i, j);
                if v.keys().any(|k| !range.contains(k)) {
                    return Err(LieError::InvariantViolation(format!(
                        "[{}, {}] leaves the coordinate range",
                        self.basis[i], self.basis[j]
                    )));
                }
                if !v.is_zero() {
                    out.set_bracket(
                        i - offset,
                        j - offset,
                        v.iter().map(|(&k, c)| (k - offset, c.clone())),
                    )?;
                }
            }
        }
        Ok(out)
    }

    /// Direct sum `self ⊕ other`, with `other`'s basis appended.
    pub fn direct_sum(
        &self,
        other: &LieAlgebra,
        name: impl Into<String>,
    ) -> Result<Self, LieError> {
        let n = self.dim();
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        let mut out = LieAlgebra::new(name, basis)?;
        for (&(i, j), v) in &self.brackets {
            out.set_bracket(i, j, v.iter().map(|(&k, c)| (k, c.clone())))?;
        }
        for (&(i, j), v) in &other.brackets {
            out.set_bracket(i + n, j + n, v.iter().map(|(&k, c)| (k + n, c.clone())))?;
        }
        Ok(out)
    }

    /// Human-readable label for a coordinate vector, e.g. `h`, `e+f`, `1/2*h-e`.
    pub fn describe_vector(&self, v: &[Rational]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push('*');
            }
            out.push_str(&self.basis[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub jacobiator: QVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A linear subspace of `ℚⁿ` given by independent spanning vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    vectors: Vec<QVector>,
}

impl Subspace {
    /// Requires the vectors to be independent and of length `ambient_dim`.
    pub fn new(ambient_dim: usize, vectors: Vec<QVector>) -> Result<Self, LieError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LieError::WrongLength {
                got: v.len(),
                expected: ambient_dim,
            });
        }
        if !independent(&vectors) {
            return Err(LieError::DependentVectors);
        }
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }

    /// Span of arbitrary vectors, reduced to an echelon basis.
    pub fn from_spanning(ambient_dim: usize, vectors: &[QVector]) -> Self {
        Self {
            ambient_dim,
            vectors: row_space_basis(vectors, ambient_dim),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, &(0..ambient_dim).collect::<Vec<_>>())
            .expect("coordinate vectors are independent")
    }

    /// Span of the given basis vectors `e_i`.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self, LieError> {
        let mut vectors = Vec::new();
        for &i in indices {
            if i >= ambient_dim {
                return Err(LieError::IndexOutOfRange {
                    index: i,
                    dim: ambient_dim,
                });
            }
            let mut v = vec![Rational::zero(); ambient_dim];
            v[i] = Rational::one();
            vectors.push(v);
        }
        Self::new(ambient_dim, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.vectors
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if is_zero_vector(v) {
            return true;
        }
        if self.vectors.is_empty() {
            return false;
        }
        let mut rows = self.vectors.clone();
        rows.push(v.to_vec());
        rank(&QMatrix::from_rows(&rows)) == self.vectors.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Solvable,
    Semisimple,
    Mixed,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Solvable => "solvable",
            AlgebraKind::Semisimple => "semisimple",
            AlgebraKind::Mixed => "mixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: AlgebraKind,
    pub radical: Subspace,
}

impl Classification {
    pub fn radical_dim(&self) -> usize {
        self.radical.dim()
    }
}

/// A verified Levi decomposition `𝔤 = 𝔯 ⊕ 𝔥`.
#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    pub radical: Subspace,
    pub levi: Subspace,
    /// The algebra rewritten in the adapted basis: radical vectors first, then Levi vectors.
    pub adapted: LieAlgebra,
    /// Column `j` is adapted basis vector `j` in the original coordinates.
    pub basis_change: QMatrix,
}

impl LeviDecomposition {
    pub fn radical_dim(&self) -> usize {
        self.radical.dim()
    }

    pub fn levi_dim(&self) -> usize {
        self.levi.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeviFailure {
    #[error("(a) not a subalgebra: bracket of spanning vectors {a} and {b} leaves the subspace")]
    NotSubalgebra { a: usize, b: usize },
    #[error("(b) Killing form restricted to the subspace is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error(
        "(c) not a complement of the radical: dim r = {radical_dim}, dim h = {levi_dim}, \
         rank of r + h = {combined_rank}, dim g = {ambient}"
    )]
    NotComplement {
        radical_dim: usize,
        levi_dim: usize,
        combined_rank: usize,
        ambient: usize,
    },
    #[error("{0}")]
    Input(LieError),
}

impl LeviFailure {
    /// Which of the three conditions failed, if any.
    pub fn condition(&self) -> Option<char> {
        match self {
            LeviFailure::NotSubalgebra { .. } => Some('a'),
            LeviFailure::Degenerate { .. } => Some('b'),
            LeviFailure::NotComplement { .. } => Some('c'),
            LeviFailure::Input(_) => None,
        }
    }
}
