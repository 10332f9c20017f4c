use lieamk::exactlin::{independent, qf, QVector};
use lieamk::fixtures;
use lieamk::homology::{
    betti_all, ce_differential, ce_differential_windowed, obstruction_certificate_scaled,
    FiniteModule, Obstruction, TrivialModule, TruncatedRadicalModule,
};
use lieamk::liealg::{LieAlgebra, Subspace};
use proptest::prelude::*;

fn random_basis(n: usize) -> impl Strategy<Value = Vec<QVector>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=2), n), n)
        .prop_map(|rows| {
            rows.into_iter()
                .map(|r| r.into_iter().map(|(a, b)| qf(a, b)).collect())
                .collect::<Vec<QVector>>()
        })
        .prop_filter("invertible", |v| independent(v))
}

fn rotated(lie: &LieAlgebra, basis: &[QVector]) -> LieAlgebra {
    let names: Vec<String> = (0..lie.dim()).map(|i| format!("b{i}")).collect();
    lie.change_basis(basis, &names, "rotated").unwrap()
}

fn fixture_with_basis() -> impl Strategy<Value = (LieAlgebra, Vec<QVector>)> {
    (0..fixtures::all_valid().len()).prop_flat_map(|i| {
        let lie = fixtures::all_valid().swap_remove(i);
        let n = lie.dim();
        (Just(lie), random_basis(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dd_zero_in_any_basis((lie, basis) in fixture_with_basis()) {
        let g = rotated(&lie, &basis);
        for p in 0..=g.dim() {
            let a = ce_differential(&g, &TrivialModule, p).unwrap();
            let b = ce_differential(&g, &TrivialModule, p + 1).unwrap();
            prop_assert!(a.mul(&b).is_zero());
        }
        let ad = FiniteModule::adjoint(&g);
        for p in 1..g.dim() {
            let a = ce_differential(&g, &ad, p).unwrap();
            let b = ce_differential(&g, &ad, p + 1).unwrap();
            prop_assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn betti_numbers_are_basis_independent((lie, basis) in fixture_with_basis()) {
        let before = betti_all(&lie, &TrivialModule).unwrap();
        let after = betti_all(&rotated(&lie, &basis), &TrivialModule).unwrap();
        prop_assert_eq!(&before, &after);
        prop_assert_eq!(before[0], 1);
    }

    #[test]
    fn certificate_is_scale_invariant(num in -9i64..=9, den in 1i64..=9, which in 0usize..2, n in 1usize..=2) {
        prop_assume!(num != 0);
        let (lie, idx) = fixtures::levi_pairs().swap_remove(which);
        let h = Subspace::coordinate(lie.dim(), &idx).unwrap();
        let Obstruction::Certified(c) = obstruction_certificate_scaled(&lie, &h, n, &qf(num, den)).unwrap() else {
            unreachable!()
        };
        prop_assert!(c.c1.passed && c.c2.passed && c.c3.passed);
        prop_assert!(c.solve_non_boundary);
    }
}

#[test]
fn poincare_duality_for_unimodular_fixtures() {
    for lie in [
        fixtures::sl2(),
        fixtures::heisenberg3(),
        fixtures::abelian(3),
        fixtures::gl2(),
        fixtures::sl2_plus_sl2(),
    ] {
        let b = betti_all(&lie, &TrivialModule).unwrap();
        let n = lie.dim();
        for p in 0..=n {
            assert_eq!(b[p], b[n - p], "{} p={p}", lie.name());
        }
    }
}

#[test]
fn dd_zero_with_truncated_radical_coefficients() {
    for (lie, idx) in fixtures::levi_pairs() {
        let d = lie
            .verify_levi(&Subspace::coordinate(lie.dim(), &idx).unwrap())
            .unwrap();
        let cap = 4;
        let module = TruncatedRadicalModule::new(&d, cap).unwrap();
        for p in 1..d.adapted.dim() {
            let a = ce_differential_windowed(&d.adapted, &module, p, cap - 1, cap).unwrap();
            let b = ce_differential_windowed(&d.adapted, &module, p + 1, cap - 2, cap - 1).unwrap();
            assert!(a.matrix.mul(&b.matrix).is_zero(), "{} p={p}", lie.name());
        }
    }
}

#[test]
fn sl2_plus_sl2_betti() {
    // Künneth: (1,0,0,1) ⊗ (1,0,0,1)
    assert_eq!(
        betti_all(&fixtures::sl2_plus_sl2(), &TrivialModule).unwrap(),
        vec![1, 0, 0, 2, 0, 0, 1]
    );
}
