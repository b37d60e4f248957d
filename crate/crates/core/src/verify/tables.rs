use num_bigint::BigUint;
use serde::Serialize;

use super::enumerate::count_predicate;
use crate::automata::syntactic_complexity;
use crate::bounds;
use crate::error::{Error, Result};
use crate::freeness::PredicateName;
use crate::witnesses::{
    witness_bf_v, witness_bf_w, witness_ff, witness_prefix, witness_sf_v, witness_sf_w,
};

/// Columns of both tables.
pub const TABLE_DEGREES: [usize; 5] = [2, 3, 4, 5, 6];

type Formula = fn(usize) -> Result<BigUint>;
type WitnessFn = fn(usize) -> Result<crate::automata::Dfa>;

struct RowSpec {
    name: &'static str,
    printed: [u64; 5],
    formula: Formula,
    predicate: Option<PredicateName>,
    /// Witness family and the degrees where it is proved to reach the row.
    witness: Option<(WitnessFn, usize, usize)>,
}

fn rows(which: u8) -> Result<Vec<RowSpec>> {
    use PredicateName::*;
    let row = |name, printed, formula, predicate, witness| RowSpec {
        name,
        printed,
        formula,
        predicate,
        witness,
    };
    Ok(match which {
        1 => vec![
            row(
                "n^(n-2)",
                [1, 3, 16, 125, 1296],
                bounds::prefix_bound as Formula,
                None,
                Some((witness_prefix as WitnessFn, 2, 6)),
            ),
            row(
                "vsf",
                [1, 3, 13, 73, 501],
                bounds::vsf,
                Some(Vsf),
                Some((witness_sf_v, 3, 6)),
            ),
            row(
                "wsf",
                [1, 3, 11, 67, 629],
                bounds::wsf,
                Some(Wsf),
                Some((witness_sf_w, 6, 6)),
            ),
            row("bsf", [1, 3, 15, 115, 1169], bounds::bsf, Some(Bsf), None),
        ],
        2 => vec![
            row(
                "vbf",
                [1, 2, 7, 34, 209],
                bounds::vbf as Formula,
                Some(Vbf),
                Some((witness_bf_v as WitnessFn, 3, 6)),
            ),
            row(
                "wbf",
                [1, 2, 7, 33, 213],
                bounds::wbf,
                Some(Wbf),
                Some((witness_bf_w, 5, 6)),
            ),
            row(
                "wff",
                [1, 2, 6, 25, 150],
                bounds::wff,
                Some(Wff),
                Some((witness_ff, 5, 6)),
            ),
            row("bbf", [1, 2, 7, 41, 339], bounds::bbf, Some(Bbf), None),
            row("bff", [1, 2, 6, 31, 246], bounds::bff, Some(Bff), None),
        ],
        _ => return Err(Error::Parse(format!("no table {which}; expected 1 or 2"))),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub printed: Vec<u64>,
    pub formula: Vec<u64>,
    /// Brute-force counts, when checked and the row has a predicate.
    pub enumerated: Option<Vec<u64>>,
    /// Syntactic complexity of the witness, where one is proved to apply.
    pub witness: Option<Vec<Option<u64>>>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReproduction {
    pub which: u8,
    pub checked: bool,
    pub rows: Vec<TableRow>,
    /// One line per cell that disagrees with another source.
    pub mismatches: Vec<String>,
}

impl TableReproduction {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// CSV with header `row,n2,n3,n4,n5,n6,status`, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,n2,n3,n4,n5,n6,status\n");
        for r in &self.rows {
            out.push_str(&r.name);
            for v in &r.formula {
                out.push_str(&format!(",{v}"));
            }
            out.push_str(if r.ok { ",ok\n" } else { ",mismatch\n" });
        }
        out
    }
}

fn small(x: BigUint) -> u64 {
    u64::try_from(x).expect("table entries fit in u64")
}

/// Recomputes a table from the formulas and compares with the printed
/// values. With `check`, also counts each set by enumeration and measures the
/// witness automata.
pub fn reproduce_table(which: u8, check: bool) -> Result<TableReproduction> {
    let mut mismatches = Vec::new();
    let mut out = Vec::new();
    for spec in rows(which)? {
        let mut ok = true;
        let mut note = |ok: &mut bool, msg: String| {
            *ok = false;
            mismatches.push(format!("{}: {msg}", spec.name));
        };
        let mut formula = Vec::new();
        for (k, &n) in TABLE_DEGREES.iter().enumerate() {
            let v = small((spec.formula)(n)?);
            if v != spec.printed[k] {
                note(
                    &mut ok,
                    format!("n={n}: formula {v}, printed {}", spec.printed[k]),
                );
            }
            formula.push(v);
        }
        let mut enumerated = None;
        let mut witness = None;
        if check {
            if let Some(p) = spec.predicate {
                let mut counts = Vec::new();
                for (k, &n) in TABLE_DEGREES.iter().enumerate() {
                    let c = count_predicate(p, n, false)?;
                    if c != formula[k] {
                        note(
                            &mut ok,
                            format!("n={n}: enumeration {c}, formula {}", formula[k]),
                        );
                    }
                    counts.push(c);
                }
                enumerated = Some(counts);
            }
            if let Some((build, lo, hi)) = spec.witness {
                let mut sigmas = Vec::new();
                for (k, &n) in TABLE_DEGREES.iter().enumerate() {
                    if n < lo || n > hi {
                        sigmas.push(None);
                        continue;
                    }
                    let s = small(syntactic_complexity(&build(n)?)?);
                    if s != formula[k] {
                        note(
                            &mut ok,
                            format!("n={n}: witness {s}, formula {}", formula[k]),
                        );
                    }
                    sigmas.push(Some(s));
                }
                witness = Some(sigmas);
            }
        }
        out.push(TableRow {
            name: spec.name.to_string(),
            printed: spec.printed.to_vec(),
            formula,
            enumerated,
            witness,
            ok,
        });
    }
    Ok(TableReproduction {
        which,
        checked: check,
        rows: out,
        mismatches,
    })
}
