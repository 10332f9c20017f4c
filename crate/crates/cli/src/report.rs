//! Report values shared by the human and JSON renderers.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lieamk/1";

pub mod exit {
    pub const OK: i32 = 0;
    pub const VALIDATION: i32 = 1;
    pub const CHECK: i32 = 2;
    pub const INPUT: i32 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: String,
    pub command: String,
    pub algebra: Option<String>,
    pub exit_code: i32,
    pub report: Report,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Report {
    Validate(ValidateReport),
    Classify(ClassifyReport),
    Homology(HomologyReport),
    Obstruction(ObstructionReport),
    SmashCheck(SmashCheckReport),
    Error(ErrorReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub dim: usize,
    pub ok: bool,
    pub triples_checked: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub triple: Vec<String>,
    pub jacobiator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub kind: String,
    pub dim: usize,
    pub radical_dim: usize,
    pub radical_basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub coeffs: String,
    pub rows: Vec<BettiRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub p: usize,
    pub chain_dim: usize,
    pub betti: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionStatus {
    Certified,
    Failed,
    Vacuous,
    LeviRejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub status: ObstructionStatus,
    pub k: usize,
    pub truncation: usize,
    pub radical: Vec<String>,
    pub levi: Vec<String>,
    pub eta: Option<String>,
    pub xi: Option<String>,
    pub eps_a: Option<String>,
    pub checks: Vec<CheckEntry>,
    pub solve_non_boundary: Option<bool>,
    pub solve_agrees: Option<bool>,
    pub message: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmashCheckReport {
    pub truncation: usize,
    pub levi: Option<LeviSmashReport>,
    pub group: Option<GroupSmashReport>,
    pub notes: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviSmashReport {
    pub radical_dim: usize,
    pub levi_dim: usize,
    pub smash_basis_size: usize,
    pub target_basis_size: usize,
    pub image_rank: usize,
    pub checks: Vec<CheckEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSmashReport {
    pub order: usize,
    pub checks: Vec<CheckEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub message: String,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn write_checks(out: &mut String, checks: &[CheckEntry]) {
    for c in checks {
        let plural = if c.cases == 1 { "" } else { "s" };
        let _ = write!(
            out,
            "  {} {} ({} case{plural})",
            c.name,
            mark(c.passed),
            c.cases
        );
        if let Some(d) = &c.detail {
            let _ = write!(out, ": {d}");
        }
        out.push('\n');
    }
}

pub fn render_human(env: &Envelope) -> String {
    let mut out = String::new();
    let name = env.algebra.as_deref().unwrap_or("?");
    match &env.report {
        Report::Validate(r) => {
            if r.ok {
                let _ = writeln!(
                    out,
                    "{name}: Jacobi identity holds ({} triples checked)",
                    r.triples_checked
                );
            } else {
                let _ = writeln!(out, "{name}: Jacobi identity fails");
                for v in &r.violations {
                    let _ = writeln!(out, "  ({}): J = {}", v.triple.join(", "), v.jacobiator);
                }
            }
        }
        Report::Classify(r) => {
            let _ = writeln!(out, "{}, dim radical = {}", r.kind, r.radical_dim);
            if !r.radical_basis.is_empty() {
                let _ = writeln!(out, "radical basis: {}", r.radical_basis.join(", "));
            }
        }
        Report::Homology(r) => {
            let _ = writeln!(out, "{name} with {} coefficients", r.coeffs);
            let _ = writeln!(out, "  p  dim C_p  b_p");
            for row in &r.rows {
                let _ = writeln!(out, "{:>3}  {:>7}  {:>3}", row.p, row.chain_dim, row.betti);
            }
        }
        Report::Obstruction(r) => match r.status {
            ObstructionStatus::Vacuous => {
                let _ = writeln!(out, "solvable: no obstruction (k=0)");
            }
            ObstructionStatus::LeviRejected => {
                let _ = writeln!(
                    out,
                    "Levi subalgebra rejected: {}",
                    r.message.as_deref().unwrap_or("")
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "obstruction certificate for {name}: k = {}, N = {}",
                    r.k, r.truncation
                );
                let _ = writeln!(out, "  radical: [{}]", r.radical.join(", "));
                let _ = writeln!(out, "  levi:    [{}]", r.levi.join(", "));
                for (label, v) in [("η", &r.eta), ("ξ", &r.xi), ("ε_A", &r.eps_a)] {
                    if let Some(v) = v {
                        let _ = writeln!(out, "  {label} = {v}");
                    }
                }
                write_checks(&mut out, &r.checks);
                let line: Vec<String> = r
                    .checks
                    .iter()
                    .map(|c| format!("{} {}", c.name, mark(c.passed)))
                    .collect();
                let _ = writeln!(out, "{}", line.join(" "));
                if let Some(nb) = r.solve_non_boundary {
                    let _ = writeln!(
                        out,
                        "solve check: η⊗1 {} in the truncated image {}",
                        if nb { "is not" } else { "is" },
                        mark(r.solve_agrees.unwrap_or(false))
                    );
                }
            }
        },
        Report::SmashCheck(r) => {
            let _ = writeln!(out, "smash checks for {name} at N = {}", r.truncation);
            if let Some(l) = &r.levi {
                let _ = writeln!(
                    out,
                    "U(r)#U(h) → U(g): dim r = {}, dim h = {}, rank {}/{} on {} basis tensors",
                    l.radical_dim,
                    l.levi_dim,
                    l.image_rank,
                    l.target_basis_size,
                    l.smash_basis_size
                );
                write_checks(&mut out, &l.checks);
            }
            if let Some(g) = &r.group {
                let _ = writeln!(out, "group of order {} acting on U({name})", g.order);
                write_checks(&mut out, &g.checks);
            }
            for n in &r.notes {
                let _ = writeln!(out, "note: {n}");
            }
            let _ = writeln!(
                out,
                "{}",
                if r.passed {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            );
        }
        Report::Error(e) => {
            let _ = writeln!(out, "error: {}", e.message);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_rendering() {
        let env = Envelope {
            schema: SCHEMA.into(),
            command: "classify".into(),
            algebra: Some("sl2".into()),
            exit_code: exit::OK,
            report: Report::Classify(ClassifyReport {
                kind: "semisimple".into(),
                dim: 3,
                radical_dim: 0,
                radical_basis: vec![],
            }),
        };
        assert_eq!(render_human(&env), "semisimple, dim radical = 0\n");
        let json = serde_json::to_value(&env).unwrap();
        assert_eq!(json["schema"], "lieamk/1");
        assert_eq!(json["report"]["type"], "classify");
    }
}
