//! Module algebras over a Hopf algebra H and the smash product A#H.
//!
//! The algebra A is always a degree-truncated enveloping algebra (a polynomial
//! ring is the enveloping algebra of an abelian Lie algebra). H acts on A
//! through its generators, each given by a matrix on A's generators:
//!
//! * for H = U(𝔥) the matrices are derivations, extended by the Leibniz rule;
//! * for H = ℚG they are automorphisms, extended multiplicatively.
//!
//! Both kinds preserve degree, so only products in A can leave the truncation
//! window; such products fail with [`SmashError::TruncationOverflow`].

use num_traits::One;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactlin::{rank, QMatrix, Rational};
use crate::hopf::{FiniteGroup, HopfAlgebra};
use crate::liealg::{LeviDecomposition, LeviFailure, LieAlgebra, LieError, Subspace};
use crate::lincomb::LinComb;
use crate::uea::{monomials_up_to, EnvelopingAlgebra, PbwMonomial, UeaElement};

/// Element of A ⊗ H: (A-monomial, H-basis key) ↦ coefficient.
pub type SmashElement<K> = LinComb<(PbwMonomial, K)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmashError {
    #[error("A-degree {needed} exceeds truncation {truncation}")]
    TruncationOverflow { needed: usize, truncation: usize },
    #[error("bad action data: {0}")]
    BadActionData(String),
    #[error("not a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("Levi decomposition rejected: {0}")]
    Levi(#[from] LeviFailure),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Outcome of checking one identity over a family of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn record_result(&mut self, r: Result<bool, SmashError>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }
}

/// Hopf algebras whose action on A is determined by matrices on A's generators.
pub trait ActingHopfAlgebra: HopfAlgebra {
    /// Number of generator matrices the action needs.
    fn action_arity(&self) -> usize;

    /// `key · a` for a basis element of H and a monomial of A.
    fn act_basis(
        &self,
        images: &[QMatrix],
        algebra: &EnvelopingAlgebra,
        key: &Self::Key,
        a: &PbwMonomial,
    ) -> UeaElement;
}

fn column_as_element(algebra: &EnvelopingAlgebra, m: &QMatrix, j: usize) -> UeaElement {
    let coeffs: Vec<Rational> = (0..m.rows()).map(|i| m.get(i, j)).collect();
    algebra.linear(&coeffs)
}

fn monomial_of_word(n: usize, word: &[usize]) -> PbwMonomial {
    let mut e = vec![0u32; n];
    for &g in word {
        e[g] += 1;
    }
    PbwMonomial::from_exponents(e)
}

/// Leibniz extension of a derivation given on generators.
pub fn apply_derivation(algebra: &EnvelopingAlgebra, d: &QMatrix, a: &PbwMonomial) -> UeaElement {
    let n = algebra.num_generators();
    let word = a.word();
    let mut out = UeaElement::zero();
    for t in 0..word.len() {
        let prefix = UeaElement::basis(monomial_of_word(n, &word[..t]));
        let suffix = UeaElement::basis(monomial_of_word(n, &word[t + 1..]));
        let image = column_as_element(algebra, d, word[t]);
        let left = algebra.multiply(&prefix, &image);
        out.add_scaled(&algebra.multiply(&left, &suffix), &Rational::one());
    }
    out
}

/// Multiplicative extension of a linear substitution given on generators.
pub fn apply_automorphism(algebra: &EnvelopingAlgebra, g: &QMatrix, a: &PbwMonomial) -> UeaElement {
    let mut acc = algebra.one();
    for x in a.word() {
        acc = algebra.multiply(&acc, &column_as_element(algebra, g, x));
    }
    acc
}

impl ActingHopfAlgebra for EnvelopingAlgebra {
    fn action_arity(&self) -> usize {
        self.num_generators()
    }

    fn act_basis(
        &self,
        images: &[QMatrix],
        algebra: &EnvelopingAlgebra,
        key: &PbwMonomial,
        a: &PbwMonomial,
    ) -> UeaElement {
        let mut acc = UeaElement::basis(a.clone());
        for y in key.word().into_iter().rev() {
            acc = acc.map_linear(|m| apply_derivation(algebra, &images[y], m));
        }
        acc
    }
}

impl ActingHopfAlgebra for FiniteGroup {
    fn action_arity(&self) -> usize {
        self.order()
    }

    fn act_basis(
        &self,
        images: &[QMatrix],
        algebra: &EnvelopingAlgebra,
        key: &usize,
        a: &PbwMonomial,
    ) -> UeaElement {
        apply_automorphism(algebra, &images[*key], a)
    }
}

/// An H-module algebra structure on a truncated enveloping algebra A.
#[derive(Debug, Clone)]
pub struct ModuleAlgebraAction<H> {
    algebra: EnvelopingAlgebra,
    truncation: usize,
    hopf: H,
    images: Vec<QMatrix>,
}

impl<H: ActingHopfAlgebra> ModuleAlgebraAction<H> {
    /// `images[i]` is the matrix of the i-th H generator (or group element) on A's
    /// generators: column `j` holds the image of generator `j`.
    pub fn new(
        algebra: EnvelopingAlgebra,
        truncation: usize,
        hopf: H,
        images: Vec<QMatrix>,
    ) -> Result<Self, SmashError> {
        let m = algebra.num_generators();
        if images.len() != hopf.action_arity() {
            return Err(SmashError::BadActionData(format!(
                "expected {} action matrices, got {}",
                hopf.action_arity(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|g| g.rows() != m || g.cols() != m) {
            return Err(SmashError::BadActionData(format!(
                "action matrix is {}x{}, expected {m}x{m}",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(Self {
            algebra,
            truncation,
            hopf,
            images,
        })
    }

    pub fn algebra(&self) -> &EnvelopingAlgebra {
        &self.algebra
    }

    pub fn hopf(&self) -> &H {
        &self.hopf
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn images(&self) -> &[QMatrix] {
        &self.images
    }

    /// Monomials of A within the truncation.
    pub fn a_basis(&self) -> Vec<PbwMonomial> {
        monomials_up_to(self.algebra.num_generators(), self.truncation)
    }

    fn check_degree(&self, d: usize) -> Result<(), SmashError> {
        if d > self.truncation {
            Err(SmashError::TruncationOverflow {
                needed: d,
                truncation: self.truncation,
            })
        } else {
            Ok(())
        }
    }

    /// `h · a` for basis elements (the map μ_{H,A}).
    pub fn act(&self, h: &H::Key, a: &PbwMonomial) -> Result<UeaElement, SmashError> {
        self.check_degree(a.degree())?;
        Ok(self.hopf.act_basis(&self.images, &self.algebra, h, a))
    }

    pub fn act_element(
        &self,
        h: &LinComb<H::Key>,
        a: &UeaElement,
    ) -> Result<UeaElement, SmashError> {
        let mut out = UeaElement::zero();
        for (k, ck) in h {
            for (m, cm) in a {
                out.add_scaled(&self.act(k, m)?, &(ck * cm));
            }
        }
        Ok(out)
    }

    /// Product in A, refusing to leave the truncation window.
    pub fn a_multiply(&self, x: &UeaElement, y: &UeaElement) -> Result<UeaElement, SmashError> {
        let mut out = UeaElement::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                self.check_degree(a.degree() + b.degree())?;
                out.add_scaled(&self.algebra.mul_monomials(a, b), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `i₁(a) = a ⊗ 1`
    pub fn i1(&self, a: &UeaElement) -> SmashElement<H::Key> {
        let one = self.hopf.unit();
        a.iter()
            .map(|(m, c)| ((m.clone(), one.clone()), c.clone()))
            .collect()
    }

    /// `i₂(h) = 1 ⊗ h`
    pub fn i2(&self, h: &LinComb<H::Key>) -> SmashElement<H::Key> {
        let one = PbwMonomial::one(self.algebra.num_generators());
        h.iter()
            .map(|(k, c)| ((one.clone(), k.clone()), c.clone()))
            .collect()
    }

    /// `τ = (μ_{H,A} ⊗ 1)(1 ⊗ flip)(Δ ⊗ 1)`: comultiply h, move the right leg past a,
    /// act on a with the left leg.
    pub fn tau(
        &self,
        h: &LinComb<H::Key>,
        a: &UeaElement,
    ) -> Result<SmashElement<H::Key>, SmashError> {
        let mut out = SmashElement::zero();
        for (k, ck) in h {
            let delta = self.hopf.coproduct_key(k);
            for (m, cm) in a {
                let c = ck * cm;
                for ((left, right), cd) in &delta {
                    let acted = self.act(left, m)?;
                    for (am, ca) in &acted {
                        out.add_term((am.clone(), right.clone()), &c * cd * ca);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(a₁ ⊗ h₁)(a₂ ⊗ h₂) = (μ_A ⊗ μ_H)(a₁ ⊗ τ(h₁ ⊗ a₂) ⊗ h₂)`, extended bilinearly.
    pub fn smash_multiply(
        &self,
        u: &SmashElement<H::Key>,
        v: &SmashElement<H::Key>,
    ) -> Result<SmashElement<H::Key>, SmashError> {
        let mut out = SmashElement::zero();
        for ((a1, h1), c1) in u {
            for ((a2, h2), c2) in v {
                let c = c1 * c2;
                let twisted =
                    self.tau(&LinComb::basis(h1.clone()), &UeaElement::basis(a2.clone()))?;
                for ((a_mid, h_mid), ct) in &twisted {
                    self.check_degree(a1.degree() + a_mid.degree())?;
                    let left = self.algebra.mul_monomials(a1, a_mid);
                    let right = self.hopf.product(h_mid, h2);
                    for (la, cl) in &left {
                        for (rh, cr) in &right {
                            out.add_term((la.clone(), rh.clone()), &c * ct * cl * cr);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(1_A ⊗ ε)`
    pub fn counit_projection(&self, u: &SmashElement<H::Key>) -> UeaElement {
        let mut out = UeaElement::zero();
        for ((a, h), c) in u {
            out.add_term(a.clone(), c * self.hopf.counit_key(h));
        }
        out
    }

    /// The A#H-module structure on A: `u · b = (1 ⊗ ε)(u · (b ⊗ 1))`.
    pub fn module_action_on_a(
        &self,
        u: &SmashElement<H::Key>,
        b: &UeaElement,
    ) -> Result<UeaElement, SmashError> {
        Ok(self.counit_projection(&self.smash_multiply(u, &self.i1(b))?))
    }

    /// Checks `(1_A ⊗ ε) τ(h ⊗ a) = h · a` over H-basis elements up to `h_bound` and
    /// the A-basis within truncation. With `sample = Some((size, seed))` only a random
    /// subset of that many pairs is checked.
    pub fn check_counit_tau(
        &self,
        h_bound: usize,
        sample_size: Option<(usize, u64)>,
    ) -> IdentityCheck {
        let hs = self.hopf.basis(h_bound);
        let as_ = self.a_basis();
        let total = hs.len() * as_.len();
        let indices: Vec<usize> = match sample_size {
            Some((size, seed)) if size < total => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut v = sample(&mut rng, total, size).into_vec();
                v.sort_unstable();
                v
            }
            _ => (0..total).collect(),
        };
        let mut check = IdentityCheck::new("(1⊗ε)τ = μ");
        for idx in indices {
            let (h, a) = (&hs[idx / as_.len()], &as_[idx % as_.len()]);
            let r = self
                .tau(&LinComb::basis(h.clone()), &UeaElement::basis(a.clone()))
                .and_then(|t| Ok(self.counit_projection(&t) == self.act(h, a)?));
            check.record_result(r, || {
                format!(
                    "h = {}, a = {}",
                    self.hopf.describe(h),
                    self.algebra.format_monomial(a)
                )
            });
        }
        check
    }

    /// `(uv)·b = u·(v·b)` for the given elements.
    pub fn module_law_holds(
        &self,
        u: &SmashElement<H::Key>,
        v: &SmashElement<H::Key>,
        b: &UeaElement,
    ) -> Result<bool, SmashError> {
        let uv = self.smash_multiply(u, v)?;
        let lhs = self.module_action_on_a(&uv, b)?;
        let rhs = self.module_action_on_a(u, &self.module_action_on_a(v, b)?)?;
        Ok(lhs == rhs)
    }

    pub fn describe_smash(&self, u: &SmashElement<H::Key>) -> String {
        if u.is_zero() {
            return "0".into();
        }
        u.iter()
            .map(|((a, h), c)| {
                format!(
                    "{}*{}⊗{}",
                    c,
                    self.algebra.format_monomial(a),
                    self.hopf.describe(h)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl ModuleAlgebraAction<EnvelopingAlgebra> {
    /// U(𝔥) acting on U(𝔯) by the derivations extending `ad`, for a verified Levi
    /// decomposition. A is generated by the radical part of the adapted basis.
    pub fn levi(decomposition: &LeviDecomposition, truncation: usize) -> Result<Self, SmashError> {
        let adapted = &decomposition.adapted;
        let n = adapted.dim();
        let r = decomposition.radical_dim();
        let radical = adapted.coordinate_subalgebra(0..r, "r")?;
        let levi = adapted.coordinate_subalgebra(r..n, "h")?;
        let images = (r..n)
            .map(|y| {
                let mut m = QMatrix::zeros(r, r);
                for j in 0..r {
                    for (&i, c) in &adapted.bracket_basis(y, j) {
                        if i >= r {
                            return Err(SmashError::NotModuleAlgebra(
                                "radical is not an ideal in the adapted basis".into(),
                            ));
                        }
                        m.set(i, j, c.clone());
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(
            EnvelopingAlgebra::new(radical),
            truncation,
            EnvelopingAlgebra::new(levi),
            images,
        )
    }

    /// Verifies the derivation law on basis products and compatibility with the bracket
    /// of 𝔥: `[X,Y]·a = X·(Y·a) − Y·(X·a)`.
    pub fn check_module_algebra(&self) -> Result<(), SmashError> {
        let basis = self.a_basis();
        let k = self.hopf.num_generators();
        let gen = |y: usize| PbwMonomial::generator(k, y);
        for y in 0..k {
            for a in &basis {
                for b in &basis {
                    if a.degree() + b.degree() > self.truncation {
                        continue;
                    }
                    let (ea, eb) = (UeaElement::basis(a.clone()), UeaElement::basis(b.clone()));
                    let lhs =
                        self.act_element(&LinComb::basis(gen(y)), &self.a_multiply(&ea, &eb)?)?;
                    let ya = self.act(&gen(y), a)?;
                    let yb = self.act(&gen(y), b)?;
                    let rhs = &self.a_multiply(&ya, &eb)? + &self.a_multiply(&ea, &yb)?;
                    if lhs != rhs {
                        return Err(SmashError::NotModuleAlgebra(format!(
                            "generator {} is not a derivation on ({}, {})",
                            self.hopf.lie().basis_name(y),
                            self.algebra.format_monomial(a),
                            self.algebra.format_monomial(b)
                        )));
                    }
                }
            }
        }
        for x in 0..k {
            for y in x + 1..k {
                let bracket = self.hopf.lie().bracket_basis(x, y);
                for a in &basis {
                    let ea = UeaElement::basis(a.clone());
                    let lhs = bracket
                        .try_map_linear(|&z| self.act_element(&LinComb::basis(gen(z)), &ea))?;
                    let xy = self.act_element(
                        &LinComb::basis(gen(x)),
                        &self.act_element(&LinComb::basis(gen(y)), &ea)?,
                    )?;
                    let yx = self.act_element(
                        &LinComb::basis(gen(y)),
                        &self.act_element(&LinComb::basis(gen(x)), &ea)?,
                    )?;
                    if lhs != &xy - &yx {
                        return Err(SmashError::NotModuleAlgebra(format!(
                            "action is not compatible with [{}, {}] on {}",
                            self.hopf.lie().basis_name(x),
                            self.hopf.lie().basis_name(y),
                            self.algebra.format_monomial(a)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(1⊗h)(a⊗1) = h·a⊗1 + a⊗h` for every generator h of 𝔥 and every A-monomial.
    pub fn check_primitive_commutation(&self) -> IdentityCheck {
        let k = self.hopf.num_generators();
        let mut check = IdentityCheck::new("(1⊗h)(a⊗1) = h·a⊗1 + a⊗h");
        for y in 0..k {
            let h = LinComb::basis(PbwMonomial::generator(k, y));
            for a in self.a_basis() {
                let ea = UeaElement::basis(a.clone());
                let r = (|| {
                    let lhs = self.smash_multiply(&self.i2(&h), &self.i1(&ea))?;
                    let ha = self.act_element(&h, &ea)?;
                    let mut rhs = self.i1(&ha);
                    rhs.add_term((a.clone(), PbwMonomial::generator(k, y)), Rational::one());
                    Ok(lhs == rhs)
                })();
                check.record_result(r, || {
                    format!(
                        "h = {}, a = {}",
                        self.hopf.lie().basis_name(y),
                        self.algebra.format_monomial(&a)
                    )
                });
            }
        }
        check
    }
}

impl ModuleAlgebraAction<FiniteGroup> {
    /// Verifies that the matrices form a representation by algebra automorphisms:
    /// identity acts trivially, `ρ(gh) = ρ(g)ρ(h)`, each ρ(g) multiplicative and unital.
    pub fn check_module_algebra(&self) -> Result<(), SmashError> {
        let g = &self.hopf;
        let m = self.algebra.num_generators();
        if self.images[g.identity()] != QMatrix::identity(m) {
            return Err(SmashError::NotModuleAlgebra(
                "identity element does not act trivially".into(),
            ));
        }
        for a in 0..g.order() {
            if rank(&self.images[a]) != m {
                return Err(SmashError::NotModuleAlgebra(format!(
                    "{} does not act invertibly",
                    g.names()[a]
                )));
            }
            for b in 0..g.order() {
                let ab = g.mul_elements(a, b);
                if self.images[ab] != self.images[a].mul(&self.images[b]) {
                    return Err(SmashError::NotModuleAlgebra(format!(
                        "action of {}·{} is not the composite",
                        g.names()[a],
                        g.names()[b]
                    )));
                }
            }
        }
        let basis = self.a_basis();
        let one = PbwMonomial::one(m);
        for h in 0..g.order() {
            if self.act(&h, &one)? != self.algebra.one() {
                return Err(SmashError::NotModuleAlgebra("g·1 ≠ 1".into()));
            }
            for a in &basis {
                for b in &basis {
                    if a.degree() + b.degree() > self.truncation {
                        continue;
                    }
                    let (ea, eb) = (UeaElement::basis(a.clone()), UeaElement::basis(b.clone()));
                    let lhs = self.act_element(&LinComb::basis(h), &self.a_multiply(&ea, &eb)?)?;
                    let rhs = self.a_multiply(&self.act(&h, a)?, &self.act(&h, b)?)?;
                    if lhs != rhs {
                        return Err(SmashError::NotModuleAlgebra(format!(
                            "{} is not multiplicative on ({}, {})",
                            g.names()[h],
                            self.algebra.format_monomial(a),
                            self.algebra.format_monomial(b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `τ(g⊗a) = g·a⊗g` and `(1⊗g)(a⊗1)(1⊗g⁻¹) = g·a⊗1` for every group element and
    /// A-monomial.
    pub fn check_grouplike_conjugation(&self) -> IdentityCheck {
        let g = &self.hopf;
        let mut check = IdentityCheck::new("(1⊗g)(a⊗1)(1⊗g⁻¹) = g·a⊗1");
        for h in 0..g.order() {
            for a in self.a_basis() {
                let ea = UeaElement::basis(a.clone());
                let r = (|| {
                    let ga = self.act(&h, &a)?;
                    let tau = self.tau(&LinComb::basis(h), &ea)?;
                    let expected_tau: SmashElement<usize> = ga
                        .iter()
                        .map(|(m, c)| ((m.clone(), h), c.clone()))
                        .collect();
                    let left = self.smash_multiply(&self.i2(&LinComb::basis(h)), &self.i1(&ea))?;
                    let conj =
                        self.smash_multiply(&left, &self.i2(&LinComb::basis(g.inverse(h))))?;
                    Ok(tau == expected_tau && left == expected_tau && conj == self.i1(&ga))
                })();
                check.record_result(r, || {
                    format!(
                        "g = {}, a = {}",
                        g.names()[h],
                        self.algebra.format_monomial(&a)
                    )
                });
            }
        }
        check
    }

    /// `(1⊗g)(1⊗h) = 1⊗gh`: the smash product restricted to H reproduces the group table.
    pub fn check_group_table(&self) -> IdentityCheck {
        let g = &self.hopf;
        let mut check = IdentityCheck::new("i₂ reproduces the multiplication table");
        for a in 0..g.order() {
            for b in 0..g.order() {
                let r = self
                    .smash_multiply(&self.i2(&LinComb::basis(a)), &self.i2(&LinComb::basis(b)))
                    .map(|p| p == self.i2(&LinComb::basis(g.mul_elements(a, b))));
                check.record_result(r, || format!("({}, {})", g.names()[a], g.names()[b]));
            }
        }
        check
    }

    /// The retraction `ρ(a) = a ⊗ x₀` with `x₀ = |G|⁻¹ Σ g`, and the identities that make
    /// A a direct summand of A#ℚG.
    pub fn check_retraction(&self) -> RetractionReport {
        let g = &self.hopf;
        let x0 = g.normalized_integral();
        let rho = |a: &UeaElement| -> SmashElement<usize> {
            let mut out = SmashElement::zero();
            for (m, cm) in a {
                for (k, ck) in &x0 {
                    out.add_term((m.clone(), *k), cm * ck);
                }
            }
            out
        };
        let basis = self.a_basis();

        let mut counit = IdentityCheck::new("ε(x₀) = 1");
        counit.record(g.counit(&x0).is_one(), || {
            format!("ε(x₀) = {}", g.counit(&x0))
        });

        let mut invariant = IdentityCheck::new("h·x₀ = ε(h)x₀");
        for h in 0..g.order() {
            let hx = g.mul(&LinComb::basis(h), &x0);
            invariant.record(hx == x0.scaled(&g.counit_key(&h)), || g.names()[h].clone());
        }

        let mut a_linear = IdentityCheck::new("ρ(ab) = a·ρ(b)");
        for a in &basis {
            for b in &basis {
                if a.degree() + b.degree() > self.truncation {
                    continue;
                }
                let (ea, eb) = (UeaElement::basis(a.clone()), UeaElement::basis(b.clone()));
                let r = (|| {
                    let lhs = rho(&self.a_multiply(&ea, &eb)?);
                    let rhs = self.smash_multiply(&self.i1(&ea), &rho(&eb))?;
                    Ok(lhs == rhs)
                })();
                a_linear.record_result(r, || {
                    format!(
                        "a = {}, b = {}",
                        self.algebra.format_monomial(a),
                        self.algebra.format_monomial(b)
                    )
                });
            }
        }

        let mut h_linear = IdentityCheck::new("ρ(h·a) = h·ρ(a)");
        for h in 0..g.order() {
            for a in &basis {
                let ea = UeaElement::basis(a.clone());
                let r = (|| {
                    let lhs = rho(&self.act(&h, a)?);
                    let rhs = self.smash_multiply(&self.i2(&LinComb::basis(h)), &rho(&ea))?;
                    Ok(lhs == rhs)
                })();
                h_linear.record_result(r, || {
                    format!(
                        "h = {}, a = {}",
                        g.names()[h],
                        self.algebra.format_monomial(a)
                    )
                });
            }
        }

        let mut section = IdentityCheck::new("(1⊗ε)ρ = id");
        for a in &basis {
            let ea = UeaElement::basis(a.clone());
            section.record(self.counit_projection(&rho(&ea)) == ea, || {
                self.algebra.format_monomial(a)
            });
        }

        RetractionReport {
            x0,
            checks: vec![counit, invariant, a_linear, h_linear, section],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionReport {
    pub x0: LinComb<usize>,
    pub checks: Vec<IdentityCheck>,
}

impl RetractionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Result of comparing U(𝔯)#U(𝔥) with U(𝔤) up to a degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub truncation: usize,
    pub radical_dim: usize,
    pub levi_dim: usize,
    /// Number of basis tensors `x^α ⊗ y^β` with `|α| + |β| ≤ N`.
    pub smash_basis_size: usize,
    /// Number of PBW monomials of U(𝔤) of degree ≤ N.
    pub target_basis_size: usize,
    pub image_rank: usize,
    pub multiplicativity: IdentityCheck,
}

impl IsoReport {
    pub fn bijective(&self) -> bool {
        self.smash_basis_size == self.target_basis_size && self.image_rank == self.target_basis_size
    }

    pub fn passed(&self) -> bool {
        self.bijective() && self.multiplicativity.passed()
    }
}

/// Checks that `Φ(x ⊗ y) = x·y` identifies U(𝔯)#U(𝔥) with U(𝔤) up to degree `n`:
/// Φ is a bijection of truncated bases and `Φ(uv) = Φ(u)Φ(v)` on all basis pairs of
/// combined degree ≤ `n`.
pub fn levi_smash_iso_check(
    lie: &LieAlgebra,
    levi: &Subspace,
    n: usize,
) -> Result<IsoReport, SmashError> {
    let decomposition = lie.verify_levi(levi)?;
    levi_smash_iso_check_decomposed(&decomposition, n)
}

pub fn levi_smash_iso_check_decomposed(
    decomposition: &LeviDecomposition,
    n: usize,
) -> Result<IsoReport, SmashError> {
    let action = ModuleAlgebraAction::levi(decomposition, n)?;
    let total = decomposition.adapted.dim();
    let r = decomposition.radical_dim();
    let k = total - r;
    let ug = EnvelopingAlgebra::new(decomposition.adapted.clone());

    let phi_basis = |a: &PbwMonomial, h: &PbwMonomial| -> UeaElement {
        ug.mul_monomials(&a.embed(total, 0), &h.embed(total, r))
    };
    let phi =
        |u: &SmashElement<PbwMonomial>| -> UeaElement { u.map_linear(|(a, h)| phi_basis(a, h)) };

    let mut pairs: Vec<(PbwMonomial, PbwMonomial)> = Vec::new();
    for a in monomials_up_to(r, n) {
        for h in monomials_up_to(k, n - a.degree()) {
            pairs.push((a.clone(), h));
        }
    }
    let targets = monomials_up_to(total, n);
    let row_of: std::collections::HashMap<&PbwMonomial, usize> =
        targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = QMatrix::zeros(targets.len(), pairs.len());
    for (j, (a, h)) in pairs.iter().enumerate() {
        for (m, c) in &phi_basis(a, h) {
            let i = *row_of.get(m).ok_or_else(|| {
                SmashError::NotModuleAlgebra("Φ raised the degree of a basis tensor".into())
            })?;
            matrix.set(i, j, c.clone());
        }
    }
    let image_rank = rank(&matrix);

    let mut multiplicativity = IdentityCheck::new("Φ(uv) = Φ(u)Φ(v)");
    for (a1, h1) in &pairs {
        let d1 = a1.degree() + h1.degree();
        for (a2, h2) in &pairs {
            if d1 + a2.degree() + h2.degree() > n {
                continue;
            }
            let u = SmashElement::basis((a1.clone(), h1.clone()));
            let v = SmashElement::basis((a2.clone(), h2.clone()));
            let r = action
                .smash_multiply(&u, &v)
                .map(|uv| phi(&uv) == ug.multiply(&phi(&u), &phi(&v)));
            multiplicativity.record_result(r, || {
                format!(
                    "u = {}⊗{}, v = {}⊗{}",
                    action.algebra().format_monomial(a1),
                    action.hopf().format_monomial(h1),
                    action.algebra().format_monomial(a2),
                    action.hopf().format_monomial(h2)
                )
            });
        }
    }

    Ok(IsoReport {
        truncation: n,
        radical_dim: r,
        levi_dim: k,
        smash_basis_size: pairs.len(),
        target_basis_size: targets.len(),
        image_rank,
        multiplicativity,
    })
}

/// ℤ/2 acting on ℚ[x] (truncated at `n`) by `x ↦ −x`.
pub fn z2_sign_action(n: usize) -> ModuleAlgebraAction<FiniteGroup> {
    let a = EnvelopingAlgebra::new(crate::fixtures::abelian(1));
    let images = vec![QMatrix::identity(1), QMatrix::from_i64_rows(&[vec![-1]])];
    ModuleAlgebraAction::new(a, n, FiniteGroup::cyclic(2), images).expect("fixture")
}

/// S₃ permuting the variables of ℚ[x₁, x₂, x₃] (truncated at `n`).
pub fn s3_permutation_action(n: usize) -> ModuleAlgebraAction<FiniteGroup> {
    let a = EnvelopingAlgebra::new(crate::fixtures::abelian(3));
    let images = crate::hopf::permutations(3)
        .into_iter()
        .map(|p| {
            let mut m = QMatrix::zeros(3, 3);
            for (j, &pj) in p.iter().enumerate() {
                m.set(pj, j, Rational::one());
            }
            m
        })
        .collect();
    ModuleAlgebraAction::new(a, n, FiniteGroup::symmetric(3), images).expect("fixture")
}

/// The trivial action `h·a = ε(h)a` of U(𝔥) on A: every generator acts by zero.
pub fn trivial_enveloping_action(
    algebra: EnvelopingAlgebra,
    n: usize,
    hopf: EnvelopingAlgebra,
) -> ModuleAlgebraAction<EnvelopingAlgebra> {
    let m = algebra.num_generators();
    let images = vec![QMatrix::zeros(m, m); hopf.num_generators()];
    ModuleAlgebraAction::new(algebra, n, hopf, images).expect("dimensions match")
}
