//! Command dispatch for the `lieamk` binary.

pub mod input;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lieamk::exactlin::q;
use lieamk::homology::{
    betti_all, obstruction_certificate, ConditionCheck, FiniteModule, Obstruction, TrivialModule,
};
use lieamk::liealg::{AlgebraKind, LieAlgebra, Subspace};
use lieamk::smash::{levi_smash_iso_check_decomposed, IdentityCheck, ModuleAlgebraAction};
use lieamk::uea::EnvelopingAlgebra;

use crate::input::{levi_from_indices, parse_algebra, ParsedInput};
use crate::report::*;

pub const DEFAULT_TRUNCATION: usize = 4;

#[derive(Debug, Parser)]
#[command(
    name = "lieamk",
    version,
    about = "Exact Lie algebra homology and smash product checks"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Coeffs {
    Trivial,
    Adjoint,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Jacobi identity.
    Validate { file: PathBuf },
    /// Report solvable / semisimple / mixed and a radical basis.
    Classify { file: PathBuf },
    /// Betti numbers of the Chevalley–Eilenberg complex.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "trivial")]
        coeffs: Coeffs,
        /// A single degree p, or `all`.
        #[arg(long, default_value = "all")]
        degree: String,
    },
    /// Build and check the certificate that H_k(g, U(r)) ≠ 0.
    Obstruction {
        file: PathBuf,
        /// Levi subalgebra as comma-separated basis indices.
        #[arg(long, value_delimiter = ',')]
        levi: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncate: usize,
    },
    /// Compare U(r)#U(h) with U(g) and check the smash product identities.
    SmashCheck {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        levi: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncate: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Classify { .. } => "classify",
            Command::Homology { .. } => "homology",
            Command::Obstruction { .. } => "obstruction",
            Command::SmashCheck { .. } => "smash-check",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file }
            | Command::Classify { file }
            | Command::Homology { file, .. }
            | Command::Obstruction { file, .. }
            | Command::SmashCheck { file, .. } => file,
        }
    }
}

/// An input problem discovered after parsing; always exits with [`exit::INPUT`].
#[derive(Debug)]
struct Failure(String);

fn input_error(message: impl ToString) -> Failure {
    Failure(message.to_string())
}

/// Parses arguments, runs the command and returns the rendered output with its exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
            return (e.render().to_string(), code);
        }
    };
    let env = execute(&cli);
    let text = if cli.json {
        serde_json::to_string_pretty(&env).expect("reports serialize") + "\n"
    } else {
        render_human(&env)
    };
    (text, env.exit_code)
}

pub fn execute(cli: &Cli) -> Envelope {
    let mut algebra = None;
    let (code, report) = match parse_algebra(cli.command.file()) {
        Err(e) => (
            exit::INPUT,
            Report::Error(ErrorReport {
                message: e.to_string(),
            }),
        ),
        Ok(parsed) => {
            algebra = Some(parsed.lie.name().to_string());
            match dispatch(&cli.command, &parsed) {
                Ok((code, report)) => (code, report),
                Err(Failure(message)) => (exit::INPUT, Report::Error(ErrorReport { message })),
            }
        }
    };
    Envelope {
        schema: SCHEMA.to_string(),
        command: cli.command.name().to_string(),
        algebra,
        exit_code: code,
        report,
    }
}

fn validate(lie: &LieAlgebra) -> (bool, ValidateReport) {
    let jr = lie.validate();
    let n = lie.dim();
    let triples = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
    let violations = jr
        .violations
        .iter()
        .map(|v| Violation {
            triple: [v.triple.0, v.triple.1, v.triple.2]
                .iter()
                .map(|&i| lie.basis_name(i).to_string())
                .collect(),
            jacobiator: lie.describe_vector(&v.jacobiator),
        })
        .collect();
    (
        jr.ok(),
        ValidateReport {
            dim: n,
            ok: jr.ok(),
            triples_checked: triples,
            violations,
        },
    )
}

fn dispatch(command: &Command, parsed: &ParsedInput) -> Result<(i32, Report), Failure> {
    let lie = &parsed.lie;
    let (ok, vreport) = validate(lie);
    if let Command::Validate { .. } = command {
        let code = if ok { exit::OK } else { exit::VALIDATION };
        return Ok((code, Report::Validate(vreport)));
    }
    if !ok {
        return Ok((exit::VALIDATION, Report::Validate(vreport)));
    }
    match command {
        Command::Validate { .. } => unreachable!(),
        Command::Classify { .. } => classify(lie),
        Command::Homology { coeffs, degree, .. } => homology(lie, *coeffs, degree),
        Command::Obstruction { levi, truncate, .. } => {
            obstruction(parsed, levi.as_deref(), *truncate)
        }
        Command::SmashCheck { levi, truncate, .. } => {
            smash_check(parsed, levi.as_deref(), *truncate)
        }
    }
}

fn classify(lie: &LieAlgebra) -> Result<(i32, Report), Failure> {
    let c = lie.classify().map_err(input_error)?;
    Ok((
        exit::OK,
        Report::Classify(ClassifyReport {
            kind: c.kind.to_string(),
            dim: lie.dim(),
            radical_dim: c.radical_dim(),
            radical_basis: c
                .radical
                .vectors()
                .iter()
                .map(|v| lie.describe_vector(v))
                .collect(),
        }),
    ))
}

fn homology(lie: &LieAlgebra, coeffs: Coeffs, degree: &str) -> Result<(i32, Report), Failure> {
    let n = lie.dim();
    let degrees: Vec<usize> = if degree == "all" {
        (0..=n).collect()
    } else {
        let p: usize = degree.parse().map_err(|_| {
            input_error(format!(
                "--degree expects a number or `all`, got {degree:?}"
            ))
        })?;
        if p > n {
            return Err(input_error(format!("degree {p} exceeds dim {n}")));
        }
        vec![p]
    };
    let (betti, module_dim, label) = match coeffs {
        Coeffs::Trivial => (betti_all(lie, &TrivialModule), 1, "trivial"),
        Coeffs::Adjoint => (betti_all(lie, &FiniteModule::adjoint(lie)), n, "adjoint"),
    };
    let betti = betti.map_err(input_error)?;
    let rows = degrees
        .into_iter()
        .map(|p| BettiRow {
            p,
            chain_dim: binomial(n, p) * module_dim,
            betti: betti[p],
        })
        .collect();
    Ok((
        exit::OK,
        Report::Homology(HomologyReport {
            coeffs: label.to_string(),
            rows,
        }),
    ))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Levi subalgebra from the flag, else the file; semisimple algebras default to the whole.
fn choose_levi(
    parsed: &ParsedInput,
    flag: Option<&[usize]>,
    kind: AlgebraKind,
) -> Result<Subspace, Failure> {
    let dim = parsed.lie.dim();
    if let Some(idx) = flag {
        return levi_from_indices(dim, idx).map_err(|m| input_error(format!("--levi: {m}")));
    }
    if let Some(h) = &parsed.levi {
        return Ok(h.clone());
    }
    match kind {
        AlgebraKind::Semisimple => Ok(Subspace::whole(dim)),
        AlgebraKind::Solvable => Ok(Subspace::zero(dim)),
        AlgebraKind::Mixed => Err(input_error(
            "algebra is not semisimple: supply a Levi subalgebra with --levi or a \"levi\" field",
        )),
    }
}

fn check_truncation(n: usize) -> Result<(), Failure> {
    if n == 0 {
        Err(input_error("--truncate must be at least 1"))
    } else {
        Ok(())
    }
}

fn entry(name: &str, c: &ConditionCheck) -> CheckEntry {
    CheckEntry {
        name: name.to_string(),
        passed: c.passed,
        cases: c.cases,
        detail: c.detail.clone(),
    }
}

fn identity_entry(c: &IdentityCheck) -> CheckEntry {
    CheckEntry {
        name: c.name.clone(),
        passed: c.passed(),
        cases: c.cases,
        detail: c.counterexample.clone(),
    }
}

fn obstruction(
    parsed: &ParsedInput,
    flag: Option<&[usize]>,
    n: usize,
) -> Result<(i32, Report), Failure> {
    check_truncation(n)?;
    let lie = &parsed.lie;
    let kind = lie.classify().map_err(input_error)?.kind;
    let levi = choose_levi(parsed, flag, kind)?;
    let empty = |status, message: Option<String>| ObstructionReport {
        status,
        k: 0,
        truncation: n,
        radical: Vec::new(),
        levi: Vec::new(),
        eta: None,
        xi: None,
        eps_a: None,
        checks: Vec::new(),
        solve_non_boundary: None,
        solve_agrees: None,
        message,
    };
    let outcome = match obstruction_certificate(lie, &levi, n) {
        Ok(o) => o,
        Err(lieamk::homology::HomologyError::Levi(f)) => {
            return Ok((
                exit::CHECK,
                Report::Obstruction(empty(ObstructionStatus::LeviRejected, Some(f.to_string()))),
            ))
        }
        Err(e) => return Err(input_error(e)),
    };
    let c = match outcome {
        Obstruction::Vacuous { .. } => {
            return Ok((
                exit::OK,
                Report::Obstruction(empty(
                    ObstructionStatus::Vacuous,
                    Some("solvable: no obstruction, certificate vacuous".into()),
                )),
            ))
        }
        Obstruction::Certified(c) => c,
    };
    let wedge = c.levi_names.join("∧");
    let eta = if c.eta_scale == q(1) {
        wedge.clone()
    } else {
        format!("{}*{wedge}", c.eta_scale)
    };
    let passed = c.passed() && c.solve_agrees();
    let report = ObstructionReport {
        status: if passed {
            ObstructionStatus::Certified
        } else {
            ObstructionStatus::Failed
        },
        k: c.k,
        truncation: n,
        radical: c.radical_names.clone(),
        levi: c.levi_names.clone(),
        eta: Some(eta),
        xi: Some(format!(
            "{} on {wedge}, 0 on wedges containing a radical vector",
            c.xi_scale
        )),
        eps_a: Some("constant term of U(r)".into()),
        checks: vec![entry("C1", &c.c1), entry("C2", &c.c2), entry("C3", &c.c3)],
        solve_non_boundary: Some(c.solve_non_boundary),
        solve_agrees: Some(c.solve_agrees()),
        message: None,
    };
    Ok((
        if passed { exit::OK } else { exit::CHECK },
        Report::Obstruction(report),
    ))
}

fn smash_check(
    parsed: &ParsedInput,
    flag: Option<&[usize]>,
    n: usize,
) -> Result<(i32, Report), Failure> {
    check_truncation(n)?;
    let lie = &parsed.lie;
    let kind = lie.classify().map_err(input_error)?.kind;
    let mut notes = Vec::new();
    let mut failed = false;

    let has_levi_input = flag.is_some() || parsed.levi.is_some();
    let levi_report = if kind == AlgebraKind::Solvable && !has_levi_input {
        notes.push("solvable: no Levi factor, U(g) = U(r)".to_string());
        None
    } else {
        let h = choose_levi(parsed, flag, kind)?;
        match lie.verify_levi(&h) {
            Err(f) => {
                failed = true;
                notes.push(format!("Levi subalgebra rejected: {f}"));
                None
            }
            Ok(d) => {
                let iso = levi_smash_iso_check_decomposed(&d, n).map_err(input_error)?;
                let action = ModuleAlgebraAction::levi(&d, n).map_err(input_error)?;
                let module_ok = action.check_module_algebra();
                let checks = vec![
                    CheckEntry {
                        name: "Φ is a bijection on degree ≤ N".into(),
                        passed: iso.bijective(),
                        cases: iso.smash_basis_size,
                        detail: (!iso.bijective()).then(|| {
                            format!(
                                "rank {} of {} target monomials",
                                iso.image_rank, iso.target_basis_size
                            )
                        }),
                    },
                    identity_entry(&iso.multiplicativity),
                    CheckEntry {
                        name: "ad(h) acts on U(r) by derivations".into(),
                        passed: module_ok.is_ok(),
                        cases: 1,
                        detail: module_ok.err().map(|e| e.to_string()),
                    },
                    identity_entry(&action.check_counit_tau(n, None)),
                    identity_entry(&action.check_primitive_commutation()),
                ];
                failed |= checks.iter().any(|c| !c.passed);
                Some(LeviSmashReport {
                    radical_dim: iso.radical_dim,
                    levi_dim: iso.levi_dim,
                    smash_basis_size: iso.smash_basis_size,
                    target_basis_size: iso.target_basis_size,
                    image_rank: iso.image_rank,
                    checks,
                })
            }
        }
    };

    let group_report = match &parsed.group_action {
        None => None,
        Some(ga) => {
            let action = ModuleAlgebraAction::new(
                EnvelopingAlgebra::new(lie.clone()),
                n,
                ga.group.clone(),
                ga.matrices.clone(),
            )
            .map_err(input_error)?;
            let module_ok = action.check_module_algebra();
            let mut checks = vec![CheckEntry {
                name: "G acts by algebra automorphisms".into(),
                passed: module_ok.is_ok(),
                cases: 1,
                detail: module_ok.as_ref().err().map(|e| e.to_string()),
            }];
            if module_ok.is_ok() {
                checks.push(identity_entry(&action.check_counit_tau(0, None)));
                checks.push(identity_entry(&action.check_grouplike_conjugation()));
                checks.push(identity_entry(&action.check_group_table()));
                checks.extend(action.check_retraction().checks.iter().map(identity_entry));
            }
            failed |= checks.iter().any(|c| !c.passed);
            Some(GroupSmashReport {
                order: action.hopf().order(),
                checks,
            })
        }
    };

    if levi_report.is_none() && group_report.is_none() && !failed {
        notes.push("nothing to check".into());
    }
    let report = SmashCheckReport {
        truncation: n,
        levi: levi_report,
        group: group_report,
        notes,
        passed: !failed,
    };
    Ok((
        if failed { exit::CHECK } else { exit::OK },
        Report::SmashCheck(report),
    ))
}
