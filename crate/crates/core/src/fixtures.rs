//! Small Lie algebras used throughout the tests, the acceptance suite and
//! the bundled JSON fixtures.

use crate::exactlin::q;
use crate::liealg::LieAlgebra;

/// `(i, j, [(k, c_ij^k)])`
type BracketTable<'a> = &'a [(usize, usize, &'a [(usize, i64)])];

fn build(name: &str, basis: &[&str], brackets: BracketTable) -> LieAlgebra {
    let mut l = LieAlgebra::new(name, basis.iter().copied()).expect("distinct names");
    for &(i, j, coeffs) in brackets {
        l.set_bracket(i, j, coeffs.iter().map(|&(k, c)| (k, q(c))))
            .expect("well-formed fixture");
    }
    l
}

fn sl2_named(name: &str, suffix: &str) -> LieAlgebra {
    let names: Vec<String> = ["f", "h", "e"]
        .iter()
        .map(|b| format!("{b}{suffix}"))
        .collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    build(
        name,
        &names,
        &[(0, 1, &[(0, 2)]), (0, 2, &[(1, -1)]), (1, 2, &[(2, 2)])],
    )
}

/// sl₂ in the basis (f, h, e): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
pub fn sl2() -> LieAlgebra {
    sl2_named("sl2", "")
}

/// sl₂ with [h,e] = 3e, which breaks the Jacobi identity on (f, h, e).
pub fn broken_sl2() -> LieAlgebra {
    build(
        "broken-jacobi",
        &["f", "h", "e"],
        &[(0, 1, &[(0, 2)]), (0, 2, &[(1, -1)]), (1, 2, &[(2, 3)])],
    )
}

/// gl₂ = ℚ·z ⊕ sl₂ in the basis (z, f, h, e) with z the identity matrix.
pub fn gl2() -> LieAlgebra {
    build(
        "gl2",
        &["z", "f", "h", "e"],
        &[(1, 2, &[(1, 2)]), (1, 3, &[(2, -1)]), (2, 3, &[(3, 2)])],
    )
}

/// gl_n in the basis of matrix units E_ij (row-major).
pub fn gl_elementary(n: usize) -> LieAlgebra {
    let names: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    let mut l = LieAlgebra::new(format!("gl{n}-elementary"), names).expect("distinct names");
    let idx = |i: usize, j: usize| i * n + j;
    for a in 0..n * n {
        for b in a + 1..n * n {
            let (i, j, k, m) = (a / n, a % n, b / n, b % n);
            // [E_ij, E_km] = δ_jk E_im − δ_mi E_kj
            let mut terms = Vec::new();
            if j == k {
                terms.push((idx(i, m), q(1)));
            }
            if m == i {
                terms.push((idx(k, j), q(-1)));
            }
            l.set_bracket(a, b, terms).expect("well-formed");
        }
    }
    l
}

/// gl₂ in the elementary basis (E11, E12, E21, E22).
pub fn gl2_elementary() -> LieAlgebra {
    gl_elementary(2)
}

/// Heisenberg algebra h₃: [x,y] = z.
pub fn heisenberg3() -> LieAlgebra {
    build("heis3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// Abelian algebra of dimension n.
pub fn abelian(n: usize) -> LieAlgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    LieAlgebra::new(format!("abelian{n}"), names).expect("distinct names")
}

/// Two-dimensional non-abelian algebra: [x,y] = y.
pub fn affine2() -> LieAlgebra {
    build("affine2", &["x", "y"], &[(0, 1, &[(1, 1)])])
}

/// sl₂ ⋉ ℚ² in the basis (v1, v2, f, h, e), sl₂ acting on (v1, v2) by the
/// standard representation with v1 highest weight.
pub fn sl2_ltimes_c2() -> LieAlgebra {
    build(
        "sl2-semidirect-C2",
        &["v1", "v2", "f", "h", "e"],
        &[
            (0, 2, &[(1, -1)]),
            (0, 3, &[(0, -1)]),
            (1, 3, &[(1, 1)]),
            (1, 4, &[(0, -1)]),
            (2, 3, &[(2, 2)]),
            (2, 4, &[(3, -1)]),
            (3, 4, &[(4, 2)]),
        ],
    )
}

/// sl₂ ⊕ sl₂ in the basis (f1, h1, e1, f2, h2, e2).
pub fn sl2_plus_sl2() -> LieAlgebra {
    sl2_named("sl2", "1")
        .direct_sum(&sl2_named("sl2", "2"), "sl2+sl2")
        .expect("distinct names")
}

/// Every valid fixture algebra.
pub fn all_valid() -> Vec<LieAlgebra> {
    vec![
        sl2(),
        gl2(),
        gl2_elementary(),
        heisenberg3(),
        abelian(3),
        affine2(),
        sl2_ltimes_c2(),
        sl2_plus_sl2(),
    ]
}

/// Non-solvable fixtures paired with a Levi subalgebra given by basis indices.
pub fn levi_pairs() -> Vec<(LieAlgebra, Vec<usize>)> {
    vec![
        (gl2(), vec![1, 2, 3]),
        (sl2_ltimes_c2(), vec![2, 3, 4]),
        (sl2(), vec![0, 1, 2]),
        (sl2_plus_sl2(), (0..6).collect()),
    ]
}
