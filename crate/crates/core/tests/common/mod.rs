#![allow(dead_code)]

use lieamk::exactlin::{qf, Rational};
use lieamk::fixtures;
use lieamk::hopf::FiniteGroup;
use lieamk::lincomb::LinComb;
use lieamk::uea::{EnvelopingAlgebra, PbwMonomial, UeaElement};
use proptest::prelude::*;
use rand::Rng;

/// One term: a word of generator letters (reduced mod the number of generators) and a
/// coefficient numerator/denominator.
pub type RawTerm = (Vec<u8>, i64, i64);

pub fn raw_element(max_degree: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (
            prop::collection::vec(any::<u8>(), 0..=max_degree),
            -6i64..=6,
            1i64..=4,
        ),
        1..=3,
    )
}

pub fn uea_element(n: usize, raw: &[RawTerm]) -> UeaElement {
    raw.iter()
        .map(|(word, num, den)| (word_monomial(n, word), qf(*num, *den)))
        .collect()
}

fn word_monomial(n: usize, word: &[u8]) -> PbwMonomial {
    let mut e = vec![0u32; n];
    if n > 0 {
        for &l in word {
            e[l as usize % n] += 1;
        }
    }
    PbwMonomial::from_exponents(e)
}

/// Group algebra element; words index group elements.
pub fn group_element(g: &FiniteGroup, raw: &[RawTerm]) -> LinComb<usize> {
    raw.iter()
        .map(|(word, num, den)| {
            let k = word.iter().fold(g.identity(), |acc, &l| {
                g.mul_elements(acc, l as usize % g.order())
            });
            (k, qf(*num, *den))
        })
        .collect()
}

pub fn enveloping_fixtures() -> Vec<EnvelopingAlgebra> {
    fixtures::all_valid()
        .into_iter()
        .map(EnvelopingAlgebra::new)
        .collect()
}

pub fn group_fixtures() -> Vec<FiniteGroup> {
    vec![FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)]
}

pub fn random_raw(rng: &mut impl Rng, max_degree: usize) -> Vec<RawTerm> {
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| {
            let len = rng.gen_range(0..=max_degree);
            let word = (0..len).map(|_| rng.gen()).collect();
            (word, rng.gen_range(-6..=6), rng.gen_range(1..=4))
        })
        .collect()
}

pub fn rational(num: i64, den: i64) -> Rational {
    qf(num, den)
}
