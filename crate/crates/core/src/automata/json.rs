use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Dfa;
use crate::error::{Error, Result};
use crate::transform::Transformation;

pub const DFA_SCHEMA: &str = "synsemi-dfa/1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaFile {
    schema: String,
    n: usize,
    alphabet: Vec<String>,
    delta: BTreeMap<String, Vec<usize>>,
    initial: usize,
    accepting: Vec<usize>,
}

pub fn dfa_to_json(d: &Dfa) -> String {
    let file = DfaFile {
        schema: DFA_SCHEMA.to_string(),
        n: d.n(),
        alphabet: d.alphabet().to_vec(),
        delta: d
            .letters()
            .map(|(a, t)| (a.to_string(), t.images()))
            .collect(),
        initial: d.initial(),
        accepting: d.accepting().into_iter().collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Parses and validates a DFA file. Errors name the offending field; syntax
/// errors carry serde's line and column.
pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    let file: DfaFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("DFA JSON: {e}")))?;
    let bad = |msg: String| Err(Error::Parse(msg));
    if file.schema != DFA_SCHEMA {
        return bad(format!(
            "schema: expected \"{DFA_SCHEMA}\", found \"{}\"",
            file.schema
        ));
    }
    if file.n == 0 {
        return bad("n: must be at least 1".into());
    }
    if file.initial == 0 || file.initial > file.n {
        return bad(format!(
            "initial: state {} not in 1..{}",
            file.initial, file.n
        ));
    }
    if let Some(q) = file.accepting.iter().find(|&&q| q == 0 || q > file.n) {
        return bad(format!("accepting: state {q} not in 1..{}", file.n));
    }
    if let Some(extra) = file.delta.keys().find(|k| !file.alphabet.contains(k)) {
        return bad(format!("delta.{extra}: letter not in alphabet"));
    }
    let mut letters = Vec::with_capacity(file.alphabet.len());
    for a in &file.alphabet {
        let Some(row) = file.delta.get(a) else {
            return bad(format!("delta: missing transitions for letter `{a}`"));
        };
        if row.len() != file.n {
            return bad(format!(
                "delta.{a}: {} entries, expected {}",
                row.len(),
                file.n
            ));
        }
        if let Some(q) = row.iter().find(|&&q| q == 0 || q > file.n) {
            return bad(format!("delta.{a}: state {q} not in 1..{}", file.n));
        }
        letters.push((a.clone(), Transformation::new(row.iter().copied())?));
    }
    Dfa::new(file.n, letters, file.initial, file.accepting)
        .map_err(|e| Error::Parse(format!("alphabet: {e}")))
}
