//! Moore partition refinement.

use std::collections::HashMap;

use super::Dfa;
use crate::transform::Transformation;

/// The minimal DFA of `d`'s language.
///
/// States are numbered in breadth-first order from the initial state (which
/// becomes state 1), except that the empty state, if present, is moved last.
pub fn minimize(d: &Dfa) -> Dfa {
    let reach = d.reachable_order();
    let letters = d.transformations();

    let mut class: Vec<usize> = vec![usize::MAX; d.n()];
    for &q in &reach {
        class[q] = usize::from(d.accepting_mask()[q]);
    }
    let mut count = {
        let mut seen: Vec<usize> = reach.iter().map(|&q| class[q]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![usize::MAX; d.n()];
        for &q in &reach {
            let mut sig = Vec::with_capacity(letters.len() + 1);
            sig.push(class[q]);
            sig.extend(letters.iter().map(|t| class[t.raw()[q] as usize]));
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        class = next;
        if ids.len() == count {
            break;
        }
        count = ids.len();
    }

    // Canonical numbering: BFS over classes from the initial class.
    let mut number = vec![usize::MAX; count];
    let mut rep = Vec::with_capacity(count);
    for &q in &reach {
        let c = class[q];
        if number[c] == usize::MAX {
            number[c] = rep.len();
            rep.push(q);
        }
    }
    let mut delta: Vec<Vec<u16>> = letters
        .iter()
        .map(|t| {
            rep.iter()
                .map(|&q| number[class[t.raw()[q] as usize]] as u16)
                .collect()
        })
        .collect();
    let mut accepting: Vec<bool> = rep.iter().map(|&q| d.accepting_mask()[q]).collect();

    let empty = (0..count).find(|&c| !accepting[c] && delta.iter().all(|row| row[c] as usize == c));
    if let Some(e) = empty {
        if e != count - 1 && e != 0 {
            // Move e to the end, shifting the states after it down by one.
            let renum = |x: usize| match x.cmp(&e) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => count - 1,
                std::cmp::Ordering::Greater => x - 1,
            };
            for row in &mut delta {
                let mut new_row = vec![0u16; count];
                for (x, &y) in row.iter().enumerate() {
                    new_row[renum(x)] = renum(y as usize) as u16;
                }
                *row = new_row;
            }
            let mut new_acc = vec![false; count];
            for (x, &a) in accepting.iter().enumerate() {
                new_acc[renum(x)] = a;
            }
            accepting = new_acc;
        }
    }

    Dfa::from_parts(
        d.alphabet().to_vec(),
        delta.into_iter().map(Transformation::from_raw).collect(),
        0,
        accepting,
    )
}

/// Number of distinct quotients of the language of `d`.
pub fn quotient_count(d: &Dfa) -> usize {
    minimize(d).n()
}
