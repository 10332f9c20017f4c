use std::path::{Path, PathBuf};
use std::process::Command;

use lieamk_cli::report::{Envelope, ObstructionStatus, Report, SCHEMA};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn lieamk(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lieamk"))
        .args(args)
        .output()
        .unwrap();
    let mut text = String::from_utf8(out.stdout).unwrap();
    text.push_str(&String::from_utf8(out.stderr).unwrap());
    (text, out.status.code().unwrap())
}

fn on(cmd: &str, file: &str, extra: &[&str]) -> (String, i32) {
    let path = fixture(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    lieamk(&args)
}

fn json(cmd: &str, file: &str, extra: &[&str]) -> Envelope {
    let mut extra = extra.to_vec();
    extra.push("--json");
    let (text, code) = on(cmd, file, &extra);
    let env: Envelope = serde_json::from_str(&text).unwrap();
    assert_eq!(env.exit_code, code);
    assert_eq!(env.schema, SCHEMA);
    env
}

#[test]
fn classify_examples() {
    let (text, code) = on("classify", "sl2.json", &[]);
    assert_eq!(code, 0);
    assert!(text.starts_with("semisimple, dim radical = 0"), "{text}");
    let (text, _) = on("classify", "gl2.json", &[]);
    assert!(text.starts_with("mixed, dim radical = 1"), "{text}");
}

#[test]
fn obstruction_examples() {
    let (text, code) = on(
        "obstruction",
        "gl2.json",
        &["--levi", "1,2,3", "--truncate", "4"],
    );
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("C1 ✓ C2 ✓ C3 ✓"), "{text}");
    let (text, code) = on("obstruction", "heis3.json", &[]);
    assert_eq!(code, 0);
    assert!(text.contains("solvable: no obstruction (k=0)"));
}

#[test]
fn exit_codes_for_corpus() {
    let cases: &[(&str, &str, &[&str], i32)] = &[
        ("validate", "sl2.json", &[], 0),
        ("validate", "gl2.json", &[], 0),
        ("validate", "heis3.json", &[], 0),
        ("validate", "abelian3.json", &[], 0),
        ("validate", "sl2-semidirect-C2.json", &[], 0),
        ("validate", "broken-jacobi.json", &[], 1),
        ("classify", "broken-jacobi.json", &[], 1),
        ("homology", "broken-jacobi.json", &[], 1),
        ("homology", "abelian3.json", &["--degree", "2"], 0),
        ("homology", "abelian3.json", &["--degree", "7"], 3),
        ("homology", "sl2.json", &["--coeffs", "adjoint"], 0),
        (
            "obstruction",
            "sl2-semidirect-C2.json",
            &["--truncate", "2"],
            0,
        ),
        ("obstruction", "sl2.json", &[], 0),
        ("obstruction", "abelian3.json", &[], 0),
        ("obstruction", "gl2.json", &["--levi", "0,1,3"], 2),
        ("obstruction", "gl2.json", &["--levi", "1,9"], 3),
        ("obstruction", "gl2.json", &["--truncate", "0"], 3),
        ("smash-check", "gl2.json", &["--truncate", "3"], 0),
        (
            "smash-check",
            "sl2-semidirect-C2.json",
            &["--truncate", "2"],
            0,
        ),
        ("smash-check", "z2-sign.json", &["--truncate", "3"], 0),
        (
            "smash-check",
            "s3-permutation.json",
            &["--truncate", "2"],
            0,
        ),
        ("smash-check", "heis3.json", &[], 0),
        ("smash-check", "gl2.json", &["--levi", "0,2"], 2),
        ("validate", "missing.json", &[], 3),
    ];
    for (cmd, file, extra, expected) in cases {
        let (text, code) = on(cmd, file, extra);
        assert_eq!(code, *expected, "{cmd} {file} {extra:?}: {text}");
    }
}

#[test]
fn mixed_algebra_needs_a_levi() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("gl2.json")).unwrap();
    let stripped = text.replace(",\n  \"levi\": [1, 2, 3]", "");
    assert_ne!(stripped, text);
    let path = dir.path().join("gl2-nolevi.json");
    std::fs::write(&path, stripped).unwrap();
    let (out, code) = lieamk(&["obstruction", path.to_str().unwrap()]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("--levi"));
}

#[test]
fn malformed_files_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let sl2 = std::fs::read_to_string(fixture("sl2.json")).unwrap();
    let variants = [
        (
            "diag",
            sl2.replace(r#""i": 0, "j": 1"#, r#""i": 1, "j": 1"#),
            "brackets[0]",
        ),
        (
            "zero-den",
            sl2.replace(r#""0": "2""#, r#""0": "1/0""#),
            "brackets[0].coeffs",
        ),
        (
            "dup",
            sl2.replace(r#""i": 0, "j": 2"#, r#""i": 0, "j": 1"#),
            "duplicate",
        ),
        ("syntax", sl2.replace("\"dim\": 3,", "\"dim\": ,"), "line 3"),
    ];
    for (name, text, needle) in variants {
        assert_ne!(text, sl2, "{name} did not change the file");
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, text).unwrap();
        for cmd in ["validate", "classify"] {
            let (out, code) = lieamk(&[cmd, path.to_str().unwrap()]);
            assert_eq!(code, 3, "{name}: {out}");
            assert!(out.contains(needle), "{name}: {out}");
        }
        let (out, code) = lieamk(&["validate", path.to_str().unwrap(), "--json"]);
        assert_eq!(code, 3);
        let env: Envelope = serde_json::from_str(&out).unwrap();
        assert!(matches!(env.report, Report::Error(_)));
    }
}

#[test]
fn usage_errors_exit_with_input_code() {
    assert_eq!(lieamk(&["frobnicate"]).1, 3);
    assert_eq!(lieamk(&["homology"]).1, 3);
    assert_eq!(lieamk(&["--help"]).1, 0);
}

#[test]
fn json_round_trips() {
    let runs: &[(&str, &str, &[&str])] = &[
        ("validate", "broken-jacobi.json", &[]),
        ("classify", "sl2-semidirect-C2.json", &[]),
        ("homology", "heis3.json", &[]),
        ("obstruction", "gl2.json", &["--truncate", "2"]),
        ("obstruction", "heis3.json", &[]),
        ("smash-check", "z2-sign.json", &["--truncate", "2"]),
        ("smash-check", "gl2.json", &["--truncate", "2"]),
    ];
    for (cmd, file, extra) in runs {
        let env = json(cmd, file, extra);
        let again: Envelope = serde_json::from_str(&serde_json::to_string(&env).unwrap()).unwrap();
        assert_eq!(env, again);
        // The in-process report equals the one the binary printed.
        let path = fixture(file);
        let mut args = vec!["lieamk", cmd, path.to_str().unwrap()];
        args.extend_from_slice(extra);
        let cli = <lieamk_cli::Cli as clap::Parser>::try_parse_from(args).unwrap();
        assert_eq!(lieamk_cli::execute(&cli), env);
    }
}

#[test]
fn json_report_values() {
    let env = json("homology", "heis3.json", &[]);
    let Report::Homology(h) = env.report else {
        panic!()
    };
    assert_eq!(
        h.rows.iter().map(|r| r.betti).collect::<Vec<_>>(),
        vec![1, 2, 2, 1]
    );

    let env = json(
        "obstruction",
        "sl2-semidirect-C2.json",
        &["--truncate", "3"],
    );
    let Report::Obstruction(o) = env.report else {
        panic!()
    };
    assert_eq!(o.status, ObstructionStatus::Certified);
    assert_eq!(o.k, 3);
    assert_eq!(o.solve_non_boundary, Some(true));
    assert!(o.checks.iter().all(|c| c.passed));

    let env = json("validate", "broken-jacobi.json", &[]);
    assert_eq!(env.exit_code, 1);
    let Report::Validate(v) = env.report else {
        panic!()
    };
    assert_eq!(v.violations[0].triple, vec!["f", "h", "e"]);
    assert_eq!(v.violations[0].jacobiator, "h");
}

#[test]
fn fixtures_match_library_algebras() {
    let pairs = [
        ("sl2.json", lieamk::fixtures::sl2()),
        ("gl2.json", lieamk::fixtures::gl2()),
        ("heis3.json", lieamk::fixtures::heisenberg3()),
        ("abelian3.json", lieamk::fixtures::abelian(3)),
        ("sl2-semidirect-C2.json", lieamk::fixtures::sl2_ltimes_c2()),
        ("sl2-plus-sl2.json", lieamk::fixtures::sl2_plus_sl2()),
        ("broken-jacobi.json", lieamk::fixtures::broken_sl2()),
    ];
    for (file, lie) in pairs {
        let parsed = lieamk_cli::input::parse_algebra(&fixture(file))
            .unwrap()
            .lie;
        assert_eq!(parsed.basis_names(), lie.basis_names(), "{file}");
        for i in 0..lie.dim() {
            for j in 0..lie.dim() {
                assert_eq!(
                    parsed.bracket_basis(i, j),
                    lie.bracket_basis(i, j),
                    "{file} ({i},{j})"
                );
            }
        }
    }
}
