//! The JSON algebra file format.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use lieamk::exactlin::{parse_rational, QMatrix, QVector};
use lieamk::hopf::FiniteGroup;
use lieamk::liealg::{LieAlgebra, Subspace};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRecord>,
    #[serde(default)]
    pub levi: Option<Vec<usize>>,
    #[serde(default)]
    pub levi_vectors: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub group_action: Option<GroupActionSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

/// A finite group acting on U(𝔤) by Lie algebra automorphisms. `matrices[g]` gives the
/// image of each basis vector as a column.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupActionSpec {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone)]
pub struct GroupAction {
    pub group: FiniteGroup,
    pub matrices: Vec<QMatrix>,
}

#[derive(Debug, Clone)]
pub struct ParsedInput {
    pub lie: LieAlgebra,
    pub levi: Option<Subspace>,
    pub group_action: Option<GroupAction>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: impl Into<String>, message: impl ToString) -> InputError {
    InputError::Field {
        field: field.into(),
        message: message.to_string(),
    }
}

pub fn parse_algebra(path: &Path) -> Result<ParsedInput, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_algebra_str(&text)
}

pub fn parse_algebra_str(text: &str) -> Result<ParsedInput, InputError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(&file)
}

fn rational_vector(field: &str, entries: &[String], len: usize) -> Result<QVector, InputError> {
    if entries.len() != len {
        return Err(field_error(
            field,
            format!("expected {len} entries, got {}", entries.len()),
        ));
    }
    entries
        .iter()
        .enumerate()
        .map(|(t, s)| parse_rational(s).map_err(|e| field_error(format!("{field}[{t}]"), e)))
        .collect()
}

pub fn build(file: &AlgebraFile) -> Result<ParsedInput, InputError> {
    if file.basis.len() != file.dim {
        return Err(field_error(
            "basis",
            format!("{} names given for dim {}", file.basis.len(), file.dim),
        ));
    }
    let mut lie = LieAlgebra::new(file.name.clone(), file.basis.clone())
        .map_err(|e| field_error("basis", e))?;
    for (t, rec) in file.brackets.iter().enumerate() {
        let field = format!("brackets[{t}]");
        if rec.i >= rec.j {
            return Err(field_error(
                field,
                format!("need i < j, got i={} j={}", rec.i, rec.j),
            ));
        }
        let mut coeffs = Vec::with_capacity(rec.coeffs.len());
        for (k, v) in &rec.coeffs {
            let kf = format!("{field}.coeffs[{k:?}]");
            let index: usize = k
                .parse()
                .map_err(|_| field_error(&kf, "key is not a basis index"))?;
            coeffs.push((index, parse_rational(v).map_err(|e| field_error(&kf, e))?));
        }
        lie.set_bracket(rec.i, rec.j, coeffs)
            .map_err(|e| field_error(field, e))?;
    }

    let levi = match (&file.levi, &file.levi_vectors) {
        (Some(_), Some(_)) => {
            return Err(field_error(
                "levi",
                "give either levi or levi_vectors, not both",
            ))
        }
        (Some(idx), None) => {
            Some(levi_from_indices(file.dim, idx).map_err(|m| field_error("levi", m))?)
        }
        (None, Some(vectors)) => {
            let vs = vectors
                .iter()
                .enumerate()
                .map(|(t, v)| rational_vector(&format!("levi_vectors[{t}]"), v, file.dim))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Subspace::new(file.dim, vs).map_err(|e| field_error("levi_vectors", e))?)
        }
        (None, None) => None,
    };

    let group_action = file
        .group_action
        .as_ref()
        .map(|spec| group_action(spec, file.dim))
        .transpose()?;

    Ok(ParsedInput {
        lie,
        levi,
        group_action,
    })
}

/// Coordinate subspace from distinct in-range indices.
pub fn levi_from_indices(dim: usize, idx: &[usize]) -> Result<Subspace, String> {
    let mut seen = BTreeSet::new();
    for &i in idx {
        if i >= dim {
            return Err(format!("index {i} out of range for dimension {dim}"));
        }
        if !seen.insert(i) {
            return Err(format!("index {i} repeated"));
        }
    }
    Subspace::coordinate(dim, idx).map_err(|e| e.to_string())
}

fn group_action(spec: &GroupActionSpec, dim: usize) -> Result<GroupAction, InputError> {
    let group = FiniteGroup::new(spec.elements.clone(), spec.table.clone())
        .map_err(|e| field_error("group_action.table", e))?;
    if spec.matrices.len() != group.order() {
        return Err(field_error(
            "group_action.matrices",
            format!(
                "expected {} matrices, got {}",
                group.order(),
                spec.matrices.len()
            ),
        ));
    }
    let matrices = spec
        .matrices
        .iter()
        .enumerate()
        .map(|(g, rows)| {
            let field = format!("group_action.matrices[{g}]");
            if rows.len() != dim {
                return Err(field_error(
                    &field,
                    format!("expected {dim} rows, got {}", rows.len()),
                ));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(r, row)| rational_vector(&format!("{field}[{r}]"), row, dim))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(QMatrix::from_rows(&rows))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupAction { group, matrices })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{"name":"sl2","dim":3,"basis":["f","h","e"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"2"}},{"i":0,"j":2,"coeffs":{"1":"-1"}},{"i":1,"j":2,"coeffs":{"2":"2"}}]}"#;

    fn field_of(e: InputError) -> String {
        match e {
            InputError::Field { field, .. } => field,
            other => panic!("expected a field error, got {other}"),
        }
    }

    #[test]
    fn sl2_parses_and_matches_fixture() {
        let p = parse_algebra_str(SL2).unwrap();
        let reference = lieamk::fixtures::sl2();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.lie.bracket_basis(i, j), reference.bracket_basis(i, j));
            }
        }
        assert!(p.lie.validate().ok());
        assert!(p.levi.is_none() && p.group_action.is_none());
    }

    #[test]
    fn rejects_malformed_records() {
        let diag = SL2.replace(r#""i":0,"j":1"#, r#""i":1,"j":1"#);
        assert_eq!(
            field_of(parse_algebra_str(&diag).unwrap_err()),
            "brackets[0]"
        );
        let swapped = SL2.replace(r#""i":0,"j":1"#, r#""i":1,"j":0"#);
        assert_eq!(
            field_of(parse_algebra_str(&swapped).unwrap_err()),
            "brackets[0]"
        );
        let zero_den = SL2.replace(r#""0":"2""#, r#""0":"1/0""#);
        assert_eq!(
            field_of(parse_algebra_str(&zero_den).unwrap_err()),
            r#"brackets[0].coeffs["0"]"#
        );
        let dup = SL2.replace(r#""i":0,"j":2"#, r#""i":0,"j":1"#);
        assert_eq!(
            field_of(parse_algebra_str(&dup).unwrap_err()),
            "brackets[1]"
        );
        let out_of_range = SL2.replace(r#"{"2":"2"}"#, r#"{"3":"2"}"#);
        assert_eq!(
            field_of(parse_algebra_str(&out_of_range).unwrap_err()),
            "brackets[2]"
        );
        let wrong_dim = SL2.replace(r#""dim":3"#, r#""dim":4"#);
        assert_eq!(
            field_of(parse_algebra_str(&wrong_dim).unwrap_err()),
            "basis"
        );
    }

    #[test]
    fn json_errors_carry_position() {
        let broken = "{\n  \"name\": \"x\",\n  \"dim\": }";
        match parse_algebra_str(broken).unwrap_err() {
            InputError::Json { line, .. } => assert_eq!(line, 3),
            other => panic!("{other}"),
        }
        let unknown = SL2.replace(r#""dim":3"#, r#""dim":3,"dimension":3"#);
        assert!(matches!(
            parse_algebra_str(&unknown),
            Err(InputError::Json { .. })
        ));
    }

    #[test]
    fn levi_fields() {
        let with_levi = SL2.replace(r#""dim":3"#, r#""dim":3,"levi":[0,1,2]"#);
        assert_eq!(
            parse_algebra_str(&with_levi).unwrap().levi.unwrap().dim(),
            3
        );
        let repeated = SL2.replace(r#""dim":3"#, r#""dim":3,"levi":[0,0]"#);
        assert_eq!(field_of(parse_algebra_str(&repeated).unwrap_err()), "levi");
        let vectors = SL2.replace(
            r#""dim":3"#,
            r#""dim":3,"levi_vectors":[["1","0","1"],["0","1/2","0"]]"#,
        );
        assert_eq!(parse_algebra_str(&vectors).unwrap().levi.unwrap().dim(), 2);
        let dependent = SL2.replace(
            r#""dim":3"#,
            r#""dim":3,"levi_vectors":[["1","0","1"],["2","0","2"]]"#,
        );
        assert_eq!(
            field_of(parse_algebra_str(&dependent).unwrap_err()),
            "levi_vectors"
        );
    }

    #[test]
    fn group_action_field() {
        let text = r#"{"name":"line","dim":1,"basis":["x"],"brackets":[],
            "group_action":{"elements":["e","s"],"table":[[0,1],[1,0]],"matrices":[[["1"]],[["-1"]]]}}"#;
        let p = parse_algebra_str(text).unwrap();
        let g = p.group_action.unwrap();
        assert_eq!(g.group.order(), 2);
        assert_eq!(g.matrices[1], QMatrix::from_i64_rows(&[vec![-1]]));
        let bad = text.replace("[[0,1],[1,0]]", "[[0,1],[1,1]]");
        assert_eq!(
            field_of(parse_algebra_str(&bad).unwrap_err()),
            "group_action.table"
        );
    }
}
