//! Exact linear algebra over the rationals.
//!
//! Matrices are stored sparsely (only nonzero entries are kept). Rank is
//! computed by fraction-free Bareiss elimination on an integer rescaling of
//! the rows; kernels and linear solves use reduced row echelon form over ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A dense rational vector.
pub type QVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

/// Parses `"p"` or `"p/q"` with `q > 0`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: s.to_string(),
        reason,
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num = BigInt::from_str(num).map_err(|_| err("numerator is not an integer"))?;
    let den = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(err("denominator must be an unsigned positive integer"));
            }
            BigInt::from_str(d).map_err(|_| err("denominator is not an integer"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse rational matrix. Absent entries are zero; stored entries are never zero.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from dense rows. All rows must have the same length.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().copied().map(q).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Adds `v` to entry `(i, j)`, dropping the entry if the sum cancels.
    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.entries.insert((j, i), v.clone());
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (k, j, v) in other.entries() {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for (i, k, a) in self.entries() {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> QVector {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        let mut out = vec![Rational::zero(); self.rows];
        for (i, j, a) in self.entries() {
            out[i] += a * &v[j];
        }
        out
    }

    /// Returns a copy with rows permuted: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows);
        let mut inv = vec![0; self.rows];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.entries.insert((inv[i], j), v.clone());
        }
        out
    }

    pub fn scale_row(&mut self, row: usize, factor: &Rational) {
        let keys: Vec<_> = self
            .entries
            .range((row, 0)..(row + 1, 0))
            .map(|(k, _)| *k)
            .collect();
        for k in keys {
            let v = &self.entries[&k] * factor;
            self.set(k.0, k.1, v);
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Integer matrix with the same row space: each row is scaled by the lcm of
/// its denominators.
fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    let dense = m.to_dense();
    dense
        .into_iter()
        .map(|row| {
            let l = lcm_of_denominators(row.iter());
            row.into_iter()
                .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Rank over ℚ by fraction-free Bareiss elimination.
pub fn rank(m: &QMatrix) -> usize {
    if m.is_zero() {
        return 0;
    }
    let mut a = integer_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                // Exact by Sylvester's identity.
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form. Returns the reduced dense rows and the pivot
/// column of each nonzero row.
fn rref(mut a: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of the right null space `{v : m·v = 0}`, one vector per free column.
pub fn kernel_basis(m: &QMatrix) -> Vec<QVector> {
    let cols = m.cols();
    let (reduced, pivots) = rref(m.to_dense(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<QVector> {
    assert_eq!(b.len(), m.rows(), "right-hand side has wrong length");
    let cols = m.cols();
    let mut aug = m.to_dense();
    for (row, bi) in aug.iter_mut().zip(b) {
        row.push(bi.clone());
    }
    let (reduced, pivots) = rref(aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Reduced echelon basis of the span of `vectors` (each of length `len`).
pub fn row_space_basis(vectors: &[QVector], len: usize) -> Vec<QVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    rref(vectors.to_vec(), len).0
}

/// `true` when the given vectors are linearly independent.
pub fn independent(vectors: &[QVector]) -> bool {
    vectors.is_empty() || rank(&QMatrix::from_rows(vectors)) == vectors.len()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
