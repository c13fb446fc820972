//! Text and JSON renderings. JSON object keys come out sorted, so output is
//! byte-identical for a fixed configuration.

use serde::Serialize;
use serde_json::{json, Value};
use weylsmooth::{CartanType, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Machine form of an element; one-line entries use a leading minus.
pub fn element_json(w: &WeylElement) -> Value {
    json!({
        "word": w.reduced_word(),
        "one_line": w.one_line().ok().map(|s| s.entries().to_vec()),
        "length": w.length(),
    })
}

pub fn elements_json(ws: &[WeylElement]) -> Value {
    Value::Array(ws.iter().map(element_json).collect())
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

pub fn document(ct: CartanType, command: &str, results: Vec<Value>) -> String {
    let doc = json!({
        "type": ct.family().to_string(),
        "rank": ct.rank(),
        "command": command,
        "results": results,
    });
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

/// `w0·x` with `x = w0 w`, the way translated elements are usually named.
pub fn w0_form(w: &WeylElement) -> String {
    let x = WeylElement::longest(w.root_system()).multiply(w).expect("same group");
    if x.is_identity() {
        "w0".to_string()
    } else {
        format!("w0·{x}")
    }
}

/// Word, one-line form with bars when classical, and length.
pub fn element_text(w: &WeylElement) -> String {
    match w.one_line() {
        Ok(line) => format!("{w}  {}  length {}", line.to_bar_string(), w.length()),
        Err(_) => format!("{w}  length {}", w.length()),
    }
}
