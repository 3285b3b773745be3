//! The matrix document: `{"ring": <selector>, "rows": r, "cols": c, "entries": [[<elem>, ...], ...]}`.
//!
//! Every element grammar is itself valid JSON, so entries are embedded as plain
//! JSON values and read back through the ring's own parser. A JSON string entry
//! is handed to the parser verbatim.

use diagred::instances::RingSelector;
use diagred::{Matrix, Ring};
use serde_json::{Map, Value};

use crate::CliError;

pub struct RawDocument {
    pub ring: RingSelector,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value, CliError> {
    obj.get(name).ok_or_else(|| CliError::Document(format!("missing field `{name}`")))
}

fn dimension(obj: &Map<String, Value>, name: &str) -> Result<usize, CliError> {
    field(obj, name)?
        .as_u64()
        .filter(|&n| n > 0)
        .map(|n| n as usize)
        .ok_or_else(|| CliError::Document(format!("`{name}` must be a positive integer")))
}

pub fn read(text: &str) -> Result<RawDocument, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| CliError::Document("top level must be an object".into()))?;
    let ring = field(obj, "ring")?
        .as_str()
        .ok_or_else(|| CliError::Document("`ring` must be a string".into()))?
        .parse::<RingSelector>()?;
    let rows = dimension(obj, "rows")?;
    let cols = dimension(obj, "cols")?;
    let entries = field(obj, "entries")?
        .as_array()
        .ok_or_else(|| CliError::Document("`entries` must be an array of rows".into()))?;
    if entries.len() != rows {
        return Err(CliError::Document(format!("`entries` has {} rows, expected {rows}", entries.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, row) in entries.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| CliError::Document(format!("entries[{i}] must be an array")))?;
        if row.len() != cols {
            return Err(CliError::Document(format!("entries[{i}] has {} entries, expected {cols}", row.len())));
        }
        out.push(row.clone());
    }
    Ok(RawDocument { ring, rows, cols, entries: out })
}

pub fn element_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn parse_element<R: Ring + ?Sized>(ring: &R, text: &str, place: &str) -> Result<R::Elem, CliError> {
    ring.parse_element(text).map_err(|e| CliError::Element { place: place.to_string(), error: e })
}

pub fn parse_matrix<R: Ring + ?Sized>(ring: &R, doc: &RawDocument) -> Result<Matrix<R::Elem>, CliError> {
    let mut entries = Vec::with_capacity(doc.rows * doc.cols);
    for (i, row) in doc.entries.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            entries.push(parse_element(ring, &element_text(v), &format!("entries[{i}][{j}]"))?);
        }
    }
    Ok(Matrix::new(doc.rows, doc.cols, entries)?)
}

pub fn element_value<R: Ring + ?Sized>(ring: &R, e: &R::Elem) -> Value {
    let text = ring.format_element(e);
    serde_json::from_str(&text).unwrap_or(Value::String(text))
}

pub fn matrix_value<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| element_value(ring, e)).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use diagred::instances::IntegerRing;

    #[test]
    fn reads_and_parses() {
        let doc = read(r#"{"ring":"zmod:6","rows":1,"cols":2,"entries":[[4,"5"]]}"#).unwrap();
        assert_eq!(doc.ring, RingSelector::Modular(6));
        assert_eq!(element_text(&doc.entries[0][1]), "5");
        let m = parse_matrix(&IntegerRing, &doc).unwrap();
        assert_eq!(matrix_value(&IntegerRing, &m), serde_json::json!([[4, 5]]));
    }

    #[test]
    fn big_integers_survive() {
        let text = "123456789012345678901234567890";
        let doc = read(&format!(r#"{{"ring":"int","rows":1,"cols":1,"entries":[[{text}]]}}"#)).unwrap();
        let m = parse_matrix(&IntegerRing, &doc).unwrap();
        assert_eq!(matrix_value(&IntegerRing, &m).to_string(), format!("[[{text}]]"));
    }

    #[test]
    fn rejects_bad_shapes() {
        for text in [
            r#"[1]"#,
            r#"{"rows":1,"cols":1,"entries":[[1]]}"#,
            r#"{"ring":"int","rows":0,"cols":1,"entries":[]}"#,
            r#"{"ring":"int","rows":1,"cols":2,"entries":[[1]]}"#,
            r#"{"ring":"int","rows":1,"cols":1,"entries":[1]}"#,
        ] {
            assert!(matches!(read(text), Err(CliError::Document(_))), "{text}");
        }
        assert!(matches!(read(r#"{"ring":"reals","rows":1,"cols":1,"entries":[[1]]}"#), Err(CliError::Core(_))));
    }

    #[test]
    fn json_errors_carry_position() {
        match read("{\n  \"ring\": int }") {
            Err(CliError::Json { line, column, .. }) => assert_eq!((line, column), (2, 11)),
            _ => panic!("expected a JSON error"),
        }
    }
}
