use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Dfa, Nfa};

/// Graphviz source; parallel edges are merged into one comma-labelled edge.
/// With `omit_empty`, states whose language is empty are left out.
pub fn dfa_to_dot(d: &Dfa, omit_empty: bool) -> String {
    let dead = if omit_empty {
        d.dead_states()
    } else {
        vec![false; d.n()]
    };
    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (a, t) in d.letters() {
        for q in 0..d.n() {
            let r = t.raw()[q] as usize;
            if !dead[q] && !dead[r] {
                edges.entry((q, r)).or_default().push(a);
            }
        }
    }
    render(
        "dfa",
        d.n(),
        &dead,
        &[d.initial_raw()],
        d.accepting_mask(),
        edges,
    )
}

pub fn nfa_to_dot(m: &Nfa, omit_empty: bool) -> String {
    let n = m.n();
    let dead = if omit_empty {
        nfa_dead(m)
    } else {
        vec![false; n]
    };
    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (k, rows) in m.delta_raw().iter().enumerate() {
        for (q, targets) in rows.iter().enumerate() {
            for &r in targets {
                if !dead[q] && !dead[r] {
                    edges.entry((q, r)).or_default().push(&m.alphabet()[k]);
                }
            }
        }
    }
    let initials: Vec<usize> = m.initials_raw().iter().copied().collect();
    render("nfa", n, &dead, &initials, m.accepting_mask(), edges)
}

fn nfa_dead(m: &Nfa) -> Vec<bool> {
    let n = m.n();
    let mut live = m.accepting_mask().to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for rows in m.delta_raw() {
            for q in 0..n {
                if !live[q] && rows[q].iter().any(|&r| live[r]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
    }
    live.into_iter().map(|l| !l).collect()
}

fn render(
    name: &str,
    n: usize,
    dead: &[bool],
    initials: &[usize],
    accepting: &[bool],
    edges: BTreeMap<(usize, usize), Vec<&str>>,
) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
    for (k, &q) in initials.iter().enumerate() {
        if !dead[q] {
            writeln!(out, "  __start{k} [shape=point];").unwrap();
            writeln!(out, "  __start{k} -> {};", q + 1).unwrap();
        }
    }
    for q in 0..n {
        if dead[q] {
            continue;
        }
        let shape = if accepting[q] {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "  {} [shape={shape}];", q + 1).unwrap();
    }
    for ((q, r), letters) in edges {
        writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            q + 1,
            r + 1,
            letters.join(",")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
