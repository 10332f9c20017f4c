mod common;

use std::sync::OnceLock;

use common::{group_element, raw_element, uea_element, RawTerm};
use lieamk::fixtures;
use lieamk::hopf::{FiniteGroup, HopfAlgebra};
use lieamk::liealg::Subspace;
use lieamk::lincomb::LinComb;
use lieamk::smash::{
    levi_smash_iso_check, s3_permutation_action, z2_sign_action, ModuleAlgebraAction, SmashElement,
};
use lieamk::uea::{EnvelopingAlgebra, PbwMonomial, UeaElement};
use proptest::prelude::*;

const N: usize = 3;

fn levi_actions() -> &'static [ModuleAlgebraAction<EnvelopingAlgebra>] {
    static A: OnceLock<Vec<ModuleAlgebraAction<EnvelopingAlgebra>>> = OnceLock::new();
    A.get_or_init(|| {
        fixtures::levi_pairs()
            .into_iter()
            .take(2)
            .map(|(lie, idx)| {
                let d = lie
                    .verify_levi(&Subspace::coordinate(lie.dim(), &idx).unwrap())
                    .unwrap();
                ModuleAlgebraAction::levi(&d, N).unwrap()
            })
            .collect()
    })
}

fn group_actions() -> &'static [ModuleAlgebraAction<FiniteGroup>] {
    static G: OnceLock<Vec<ModuleAlgebraAction<FiniteGroup>>> = OnceLock::new();
    G.get_or_init(|| vec![z2_sign_action(N), s3_permutation_action(N)])
}

fn tensor<K: Clone + Ord>(a: &UeaElement, h: &LinComb<K>) -> SmashElement<K> {
    let mut out = SmashElement::zero();
    for (m, cm) in a {
        for (k, ck) in h {
            out.add_term((m.clone(), k.clone()), cm * ck);
        }
    }
    out
}

fn levi_element(
    act: &ModuleAlgebraAction<EnvelopingAlgebra>,
    a: &[RawTerm],
    h: &[RawTerm],
) -> SmashElement<PbwMonomial> {
    tensor(
        &uea_element(act.algebra().num_generators(), a),
        &uea_element(act.hopf().num_generators(), h),
    )
}

fn group_smash(
    act: &ModuleAlgebraAction<FiniteGroup>,
    a: &[RawTerm],
    h: &[RawTerm],
) -> SmashElement<usize> {
    tensor(
        &uea_element(act.algebra().num_generators(), a),
        &group_element(act.hopf(), h),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smash_product_is_associative(
        a in prop::array::uniform3(raw_element(1)),
        h in prop::array::uniform3(raw_element(2)),
    ) {
        for act in levi_actions() {
            let [u, v, w] = [0, 1, 2].map(|i| levi_element(act, &a[i], &h[i]));
            let left = act.smash_multiply(&act.smash_multiply(&u, &v).unwrap(), &w).unwrap();
            let right = act.smash_multiply(&u, &act.smash_multiply(&v, &w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
        for act in group_actions() {
            let [u, v, w] = [0, 1, 2].map(|i| group_smash(act, &a[i], &h[i]));
            let left = act.smash_multiply(&act.smash_multiply(&u, &v).unwrap(), &w).unwrap();
            let right = act.smash_multiply(&u, &act.smash_multiply(&v, &w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn inclusions_are_homomorphisms(a in raw_element(1), b in raw_element(2), h in raw_element(2), k in raw_element(2)) {
        for act in levi_actions() {
            let (x, y) = (uea_element(act.algebra().num_generators(), &a), uea_element(act.algebra().num_generators(), &b));
            let prod = act.smash_multiply(&act.i1(&x), &act.i1(&y)).unwrap();
            prop_assert_eq!(prod, act.i1(&act.a_multiply(&x, &y).unwrap()));
            let (p, q) = (uea_element(act.hopf().num_generators(), &h), uea_element(act.hopf().num_generators(), &k));
            let prod = act.smash_multiply(&act.i2(&p), &act.i2(&q)).unwrap();
            prop_assert_eq!(prod, act.i2(&act.hopf().mul(&p, &q)));
            // a ⊗ h = (a ⊗ 1)(1 ⊗ h)
            let split = act.smash_multiply(&act.i1(&x), &act.i2(&p)).unwrap();
            prop_assert_eq!(split, tensor(&x, &p));
        }
    }

    #[test]
    fn action_on_a_is_a_module(
        a in prop::array::uniform2(raw_element(1)),
        h in prop::array::uniform2(raw_element(2)),
        b in raw_element(1),
    ) {
        for act in levi_actions() {
            let (u, v) = (levi_element(act, &a[0], &h[0]), levi_element(act, &a[1], &h[1]));
            let b = uea_element(act.algebra().num_generators(), &b);
            prop_assert!(act.module_law_holds(&u, &v, &b).unwrap());
        }
        for act in group_actions() {
            let (u, v) = (group_smash(act, &a[0], &h[0]), group_smash(act, &a[1], &h[1]));
            let b = uea_element(act.algebra().num_generators(), &b);
            prop_assert!(act.module_law_holds(&u, &v, &b).unwrap());
        }
    }

    #[test]
    fn action_respects_products(a in raw_element(1), b in raw_element(2), h in raw_element(2)) {
        // h·(ab) = (h₁·a)(h₂·b)
        for act in levi_actions() {
            let n = act.algebra().num_generators();
            let (x, y) = (uea_element(n, &a), uea_element(n, &b));
            let hh = uea_element(act.hopf().num_generators(), &h);
            let lhs = act.act_element(&hh, &act.a_multiply(&x, &y).unwrap()).unwrap();
            let mut rhs = UeaElement::zero();
            for ((h1, h2), c) in &act.hopf().coproduct(&hh) {
                let l = act.act_element(&LinComb::basis(h1.clone()), &x).unwrap();
                let r = act.act_element(&LinComb::basis(h2.clone()), &y).unwrap();
                rhs.add_scaled(&act.a_multiply(&l, &r).unwrap(), c);
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn fixtures_are_module_algebras() {
    for act in levi_actions() {
        act.check_module_algebra().unwrap();
    }
    for act in group_actions() {
        act.check_module_algebra().unwrap();
        assert!(act.check_group_table().passed());
    }
}

#[test]
fn iso_holds_up_to_degree_four_for_gl2() {
    let gl2 = fixtures::gl2();
    let r = levi_smash_iso_check(&gl2, &Subspace::coordinate(4, &[1, 2, 3]).unwrap(), 4).unwrap();
    assert!(r.passed());
    assert_eq!(r.image_rank, 70);
}

#[test]
fn iso_with_rotated_levi_basis() {
    // gl₂ in the elementary basis with the Levi spanned by E12, E21, E11 − E22.
    let gl = fixtures::gl2_elementary();
    let names = gl.basis_names().to_vec();
    let idx = |s: &str| names.iter().position(|n| n == s).unwrap();
    let mut h = vec![vec![lieamk::exactlin::q(0); 4]; 3];
    h[0][idx("E12")] = lieamk::exactlin::q(1);
    h[1][idx("E21")] = lieamk::exactlin::q(1);
    h[2][idx("E11")] = lieamk::exactlin::q(1);
    h[2][idx("E22")] = lieamk::exactlin::q(-1);
    let r = levi_smash_iso_check(&gl, &Subspace::new(4, h).unwrap(), 3).unwrap();
    assert!(r.passed(), "{r:?}");
}
