use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;

use super::{minimize, Dfa, Nfa, SubsetDfa};
use crate::error::{Error, Result};
use crate::semigroup::{closure, SemigroupSet};
use crate::transform::Transformation;

/// Largest subset DFA [`determinize`] will build.
const MAX_SUBSET_STATES: usize = u16::MAX as usize;

pub fn transition_semigroup(d: &Dfa) -> Result<SemigroupSet> {
    closure(d.transformations())
}

/// Size of the transition semigroup of the minimal DFA.
pub fn syntactic_complexity(d: &Dfa) -> Result<BigUint> {
    transition_semigroup(&minimize(d))?.size()
}

pub fn complement(d: &Dfa) -> Dfa {
    Dfa::from_parts(
        d.alphabet().to_vec(),
        d.transformations().to_vec(),
        d.initial_raw(),
        d.accepting_mask().iter().map(|a| !a).collect(),
    )
}

pub fn reverse(d: &Dfa) -> Nfa {
    Nfa::from_dfa(d).reverse()
}

/// Subset construction.
///
/// With `drop_unreachable` only subsets reachable from the initial set are
/// kept; otherwise every subset of the state set becomes a state. The initial
/// subset is state 1, the empty subset (if present) is last, and the rest
/// follow in lexicographic order of their sorted contents.
pub fn determinize(m: &Nfa, drop_unreachable: bool) -> Result<SubsetDfa> {
    let n = m.n();
    let delta = m.delta_raw();
    let start: Vec<usize> = m.initials_raw().iter().copied().collect();

    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    if drop_unreachable {
        index.insert(start.clone(), 0);
        subsets.push(start.clone());
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for rows in delta {
                let next = image(rows, &subsets[k]);
                if !index.contains_key(&next) {
                    if subsets.len() >= MAX_SUBSET_STATES {
                        return Err(Error::DegreeTooLarge {
                            n: subsets.len() + 1,
                            max: MAX_SUBSET_STATES,
                        });
                    }
                    index.insert(next.clone(), subsets.len());
                    queue.push_back(subsets.len());
                    subsets.push(next);
                }
            }
        }
    } else {
        if n >= 16 {
            return Err(Error::DegreeTooLarge { n, max: 15 });
        }
        for mask in 0u32..(1 << n) {
            subsets.push((0..n).filter(|&q| mask >> q & 1 == 1).collect());
        }
    }

    // Canonical order.
    subsets.sort_by(|x, y| {
        let key = |s: &Vec<usize>| (*s != start, s.is_empty(), s.clone());
        key(x).cmp(&key(y))
    });
    let index: HashMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_slice(), k))
        .collect();
    let trans = delta
        .iter()
        .map(|rows| {
            Transformation::from_raw(
                subsets
                    .iter()
                    .map(|s| index[image(rows, s).as_slice()] as u16)
                    .collect(),
            )
        })
        .collect();
    let acc = m.accepting_mask();
    let accepting = subsets.iter().map(|s| s.iter().any(|&q| acc[q])).collect();
    let labels = subsets
        .iter()
        .map(|s| s.iter().map(|q| q + 1).collect())
        .collect();
    Ok(SubsetDfa::new(
        Dfa::from_parts(m.alphabet().to_vec(), trans, 0, accepting),
        labels,
    ))
}

fn image(rows: &[Vec<usize>], set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().flat_map(|&q| rows[q].iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether the reverse of `m` is deterministic: at most one accepting state
/// and no two states sending the same letter into a common state.
pub fn is_reverse_deterministic(m: &Nfa) -> bool {
    if m.accepting_mask().iter().filter(|&&a| a).count() > 1 {
        return false;
    }
    m.delta_raw().iter().all(|rows| {
        let mut hit = vec![false; m.n()];
        rows.iter()
            .flatten()
            .all(|&q| !std::mem::replace(&mut hit[q], true))
    })
}

/// Product automaton on the reachable pairs. The alphabets must agree as
/// sets; the result uses `a`'s letter order.
pub fn intersect(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    let sa: BTreeSet<&String> = a.alphabet().iter().collect();
    let sb: BTreeSet<&String> = b.alphabet().iter().collect();
    if sa != sb {
        return Err(Error::AlphabetMismatch(
            a.alphabet().to_vec(),
            b.alphabet().to_vec(),
        ));
    }
    let tb: Vec<&Transformation> = a
        .alphabet()
        .iter()
        .map(|x| b.transformation(x).expect("same alphabet"))
        .collect();
    let ta = a.transformations();

    let start = (a.initial_raw(), b.initial_raw());
    let mut pairs = vec![start];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut rows: Vec<Vec<u16>> = vec![Vec::new(); ta.len()];
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        head += 1;
        for k in 0..ta.len() {
            let next = (ta[k].raw()[p] as usize, tb[k].raw()[q] as usize);
            let id = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
            rows[k].push(id as u16);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| a.accepting_mask()[p] && b.accepting_mask()[q])
        .collect();
    Ok(Dfa::from_parts(
        a.alphabet().to_vec(),
        rows.into_iter().map(Transformation::from_raw).collect(),
        0,
        accepting,
    ))
}

pub fn is_empty(d: &Dfa) -> bool {
    !d.reachable_order()
        .into_iter()
        .any(|q| d.accepting_mask()[q])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Σ⁺L
    Left,
    /// LΣ⁺
    Right,
    /// Σ⁺LΣ* ∪ Σ*LΣ⁺
    Both,
}

/// An NFA for `d`'s language padded with nonempty words on the given side.
pub fn concat_sigma_plus(d: &Dfa, side: Side) -> Nfa {
    let n = d.n();
    let letters: Vec<&str> = d.alphabet().iter().map(String::as_str).collect();
    let init = d.initial();
    let acc = d.accepting();
    let mut edges: Vec<(usize, &str, usize)> = Vec::new();
    let alphabet = d.alphabet().to_vec();
    let built = match side {
        Side::Left => {
            // 1 loops and guesses where L starts; d shifted by one.
            copy_edges(d, &mut edges, 1);
            for &a in &letters {
                edges.push((1, a, 1));
                edges.push((1, a, init + 1));
            }
            Nfa::new(n + 1, alphabet, edges, [1], acc.iter().map(|q| q + 1))
        }
        Side::Right => {
            let f = n + 1;
            copy_edges(d, &mut edges, 0);
            for &a in &letters {
                edges.push((f, a, f));
                for &q in &acc {
                    edges.push((q, a, f));
                }
            }
            Nfa::new(n + 1, alphabet, edges, [init], [f])
        }
        Side::Both => {
            // 1: Σ* prefix; copy A (offset 1) must be entered after a letter
            // and may end anywhere; copy B (offset n+1) may start at once
            // and must be followed by a letter. Both finish in f.
            let f = 2 * n + 2;
            copy_edges(d, &mut edges, 1);
            copy_edges(d, &mut edges, n + 1);
            for &a in &letters {
                edges.push((1, a, 1));
                edges.push((1, a, init + 1));
                edges.push((1, a, init + n + 1));
                edges.push((f, a, f));
                for &q in &acc {
                    edges.push((q + 1, a, f));
                    edges.push((q + n + 1, a, f));
                }
            }
            let accepting: Vec<usize> = acc.iter().map(|q| q + 1).chain([f]).collect();
            Nfa::new(f, alphabet, edges, [1, init + n + 1], accepting)
        }
    };
    built.expect("padding automaton is well formed")
}

fn copy_edges<'a>(d: &'a Dfa, edges: &mut Vec<(usize, &'a str, usize)>, offset: usize) {
    for (a, t) in d.letters() {
        for q in 1..=d.n() {
            edges.push((q + offset, a, t.image(q) + offset));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.iter().copied()).unwrap()
    }

    fn ab_star() -> Dfa {
        Dfa::new(
            3,
            [("a".into(), t(&[2, 3, 3])), ("b".into(), t(&[3, 2, 3]))],
            1,
            [2],
        )
        .unwrap()
    }

    fn b_star_a() -> Dfa {
        Dfa::new(
            3,
            [("a".into(), t(&[2, 3, 3])), ("b".into(), t(&[1, 3, 3]))],
            1,
            [2],
        )
        .unwrap()
    }

    fn words(k: usize, max: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        let mut start = 0;
        for _ in 0..max {
            let end = out.len();
            for i in start..end {
                for a in 0..k {
                    let mut w = out[i].clone();
                    w.push(a);
                    out.push(w);
                }
            }
            start = end;
        }
        out
    }

    #[test]
    fn complement_intersection_is_empty() {
        let d = ab_star();
        assert!(is_empty(&intersect(&d, &complement(&d)).unwrap()));
        assert!(!is_empty(&d));
    }

    #[test]
    fn intersect_checks_alphabets() {
        let d = ab_star();
        let e = d.rename_letter("b", "z").unwrap();
        assert!(matches!(
            intersect(&d, &e),
            Err(Error::AlphabetMismatch(..))
        ));
    }

    #[test]
    fn padding_automata_match_word_oracle() {
        let d = ab_star();
        let lang = |w: &[usize]| d.accepts_indices(w);
        let left = concat_sigma_plus(&d, Side::Left);
        let right = concat_sigma_plus(&d, Side::Right);
        let both = concat_sigma_plus(&d, Side::Both);
        for w in words(2, 6) {
            let l = (1..=w.len()).any(|i| lang(&w[i..]));
            let r = (0..w.len()).any(|i| lang(&w[..i]));
            let f = (0..=w.len())
                .flat_map(|i| (i..=w.len()).map(move |j| (i, j)))
                .any(|(i, j)| (i, j) != (0, w.len()) && lang(&w[i..j]));
            assert_eq!(left.accepts_indices(&w), l, "{w:?}");
            assert_eq!(right.accepts_indices(&w), r, "{w:?}");
            assert_eq!(both.accepts_indices(&w), f, "{w:?}");
        }
    }

    #[test]
    fn suffix_and_prefix_violations() {
        let d = ab_star();
        let sd = determinize(&concat_sigma_plus(&d, Side::Left), true).unwrap();
        assert!(is_empty(&intersect(&d, sd.dfa()).unwrap()));
        let pd = determinize(&concat_sigma_plus(&d, Side::Right), true).unwrap();
        assert!(!is_empty(&intersect(&d, pd.dfa()).unwrap()));
        let e = b_star_a();
        let pd = determinize(&concat_sigma_plus(&e, Side::Right), true).unwrap();
        assert!(is_empty(&intersect(&e, pd.dfa()).unwrap()));
    }

    #[test]
    fn double_reversal_recovers_language() {
        let d = ab_star();
        let back = determinize(&reverse(&d).reverse(), true).unwrap();
        let rev = determinize(&reverse(&d), true).unwrap();
        for w in words(2, 8) {
            assert_eq!(back.dfa().accepts_indices(&w), d.accepts_indices(&w));
            let mut r = w.clone();
            r.reverse();
            assert_eq!(rev.dfa().accepts_indices(&r), d.accepts_indices(&w));
        }
    }

    #[test]
    fn subset_numbering() {
        let d = ab_star();
        let s = determinize(&Nfa::from_dfa(&d), true).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.label(1), &BTreeSet::from([1]));
        let full = determinize(&Nfa::from_dfa(&d), false).unwrap();
        assert_eq!(full.len(), 8);
        assert_eq!(full.label(1), &BTreeSet::from([1]));
        assert!(full.label(8).is_empty());
        assert_eq!(full.label(2), &BTreeSet::from([1, 2]));
    }

    #[test]
    fn reverse_determinism() {
        let d = ab_star();
        assert!(is_reverse_deterministic(&reverse(&d)));
        assert!(is_reverse_deterministic(&reverse(&d).reverse().reverse()));
        let m = Nfa::new(2, vec!["a".into()], [(1, "a", 1), (2, "a", 1)], [1, 2], [1]).unwrap();
        assert!(!is_reverse_deterministic(&m));
    }

    #[test]
    fn semigroup_of_minimized_dfa() {
        let d = b_star_a();
        assert_eq!(syntactic_complexity(&d).unwrap(), BigUint::from(3u8));
        let id = Dfa::new(1, [("a".into(), t(&[1]))], 1, [1]).unwrap();
        assert_eq!(transition_semigroup(&id).unwrap().len(), 1);
    }
}
