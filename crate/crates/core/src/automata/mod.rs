//! Complete DFAs over named letters, NFAs, and the operations the freeness
//! deciders and reversal experiments need.
//!
//! Each DFA letter is bound to one [`Transformation`] of the state set, so a
//! DFA is just a list of generators plus an initial state and accepting set.
//! States are 1-based in every public signature.

mod dot;
mod json;
mod minimize;
mod ops;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::transform::Transformation;

pub use dot::{dfa_to_dot, nfa_to_dot};
pub use json::{dfa_from_json, dfa_to_json, DFA_SCHEMA};
pub use minimize::{minimize, quotient_count};
pub use ops::{
    complement, concat_sigma_plus, determinize, intersect, is_empty, is_reverse_deterministic,
    reverse, syntactic_complexity, transition_semigroup, Side,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    delta: Vec<Transformation>,
    initial: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// `letters` pairs each letter name with its transformation; `initial`
    /// and `accepting` are 1-based.
    pub fn new(
        n: usize,
        letters: impl IntoIterator<Item = (String, Transformation)>,
        initial: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let (alphabet, delta): (Vec<String>, Vec<Transformation>) = letters.into_iter().unzip();
        if alphabet.is_empty() {
            return Err(Error::InvalidAutomaton("alphabet is empty".into()));
        }
        let mut names = BTreeSet::new();
        for (name, t) in alphabet.iter().zip(&delta) {
            if !names.insert(name.as_str()) {
                return Err(Error::InvalidAutomaton(format!(
                    "duplicate letter `{name}`"
                )));
            }
            if t.degree() != n {
                return Err(Error::InvalidAutomaton(format!(
                    "letter `{name}` has degree {}, expected {n}",
                    t.degree()
                )));
            }
        }
        if initial == 0 || initial > n {
            return Err(Error::StateOutOfRange { state: initial, n });
        }
        let mut acc = vec![false; n];
        for q in accepting {
            if q == 0 || q > n {
                return Err(Error::StateOutOfRange { state: q, n });
            }
            acc[q - 1] = true;
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial: initial - 1,
            accepting: acc,
        })
    }

    pub(crate) fn from_parts(
        alphabet: Vec<String>,
        delta: Vec<Transformation>,
        initial: usize,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert!(delta.iter().all(|t| t.degree() == accepting.len()));
        Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        }
    }

    pub fn n(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn transformations(&self) -> &[Transformation] {
        &self.delta
    }

    pub fn letters(&self) -> impl Iterator<Item = (&str, &Transformation)> {
        self.alphabet.iter().map(String::as_str).zip(&self.delta)
    }

    pub fn letter_index(&self, letter: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == letter)
    }

    pub fn transformation(&self, letter: &str) -> Option<&Transformation> {
        self.letter_index(letter).map(|k| &self.delta[k])
    }

    pub fn initial(&self) -> usize {
        self.initial + 1
    }

    pub fn accepting(&self) -> BTreeSet<usize> {
        self.accepting_raw().map(|q| q + 1).collect()
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state - 1]
    }

    /// Successor of a 1-based state under the letter at `letter_index`.
    pub fn step(&self, state: usize, letter_index: usize) -> usize {
        self.delta[letter_index].image(state)
    }

    pub fn accepts(&self, word: &[&str]) -> Result<bool> {
        let idx = word
            .iter()
            .map(|a| {
                self.letter_index(a)
                    .ok_or_else(|| Error::UnknownLetter(a.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.accepts_indices(&idx))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let q = word
            .iter()
            .fold(self.initial, |q, &a| self.delta[a].raw()[q] as usize);
        self.accepting[q]
    }

    /// The same automaton over a sub-alphabet, letters kept in the given order.
    pub fn restrict(&self, letters: &[&str]) -> Result<Dfa> {
        let mut kept = Vec::with_capacity(letters.len());
        for &a in letters {
            let k = self
                .letter_index(a)
                .ok_or_else(|| Error::UnknownLetter(a.to_string()))?;
            kept.push((self.alphabet[k].clone(), self.delta[k].clone()));
        }
        Dfa::new(self.n(), kept, self.initial(), self.accepting())
    }

    pub fn rename_letter(&self, from: &str, to: &str) -> Result<Dfa> {
        let k = self
            .letter_index(from)
            .ok_or_else(|| Error::UnknownLetter(from.to_string()))?;
        let mut alphabet = self.alphabet.clone();
        alphabet[k] = to.to_string();
        Dfa::new(
            self.n(),
            alphabet.into_iter().zip(self.delta.iter().cloned()),
            self.initial(),
            self.accepting(),
        )
    }

    /// Renumbers states: old state `q` becomes `perm[q - 1]` (both 1-based).
    pub fn permute_states(&self, perm: &[usize]) -> Result<Dfa> {
        let n = self.n();
        let as_t = Transformation::new(perm.iter().copied())?;
        if perm.len() != n || as_t.range().len() != n {
            return Err(Error::InvalidAutomaton(
                "not a permutation of the states".into(),
            ));
        }
        let p: Vec<usize> = perm.iter().map(|&x| x - 1).collect();
        let delta = self
            .delta
            .iter()
            .map(|t| {
                let mut img = vec![0u16; n];
                for q in 0..n {
                    img[p[q]] = p[t.raw()[q] as usize] as u16;
                }
                Transformation::from_raw(img)
            })
            .collect();
        let mut accepting = vec![false; n];
        for q in 0..n {
            accepting[p[q]] = self.accepting[q];
        }
        Ok(Dfa::from_parts(
            self.alphabet.clone(),
            delta,
            p[self.initial],
            accepting,
        ))
    }

    pub(crate) fn initial_raw(&self) -> usize {
        self.initial
    }

    pub(crate) fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }

    pub(crate) fn accepting_raw(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// States reachable from the initial state, in breadth-first order.
    pub(crate) fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for t in &self.delta {
                let r = t.raw()[q] as usize;
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// States whose language is empty.
    pub(crate) fn dead_states(&self) -> Vec<bool> {
        let n = self.n();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for t in &self.delta {
            for q in 0..n {
                preds[t.raw()[q] as usize].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = self.accepting_raw().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    /// The non-accepting state fixed by every letter, if there is one.
    pub fn empty_state(&self) -> Option<usize> {
        (0..self.n())
            .find(|&q| !self.accepting[q] && self.delta.iter().all(|t| t.raw()[q] as usize == q))
            .map(|q| q + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Vec<String>,
    /// `delta[letter][state]`: sorted, deduplicated 0-based targets.
    delta: Vec<Vec<Vec<usize>>>,
    initials: BTreeSet<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    /// Edges are `(from, letter, to)` with 1-based states.
    pub fn new<'a>(
        n: usize,
        alphabet: Vec<String>,
        edges: impl IntoIterator<Item = (usize, &'a str, usize)>,
        initials: impl IntoIterator<Item = usize>,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let index: HashMap<&str, usize> = alphabet
            .iter()
            .enumerate()
            .map(|(k, a)| (a.as_str(), k))
            .collect();
        if index.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton("duplicate letter".into()));
        }
        let check = |q: usize| {
            if q == 0 || q > n {
                Err(Error::StateOutOfRange { state: q, n })
            } else {
                Ok(q - 1)
            }
        };
        let mut delta = vec![vec![Vec::new(); n]; alphabet.len()];
        for (p, a, q) in edges {
            let k = *index
                .get(a)
                .ok_or_else(|| Error::UnknownLetter(a.to_string()))?;
            delta[k][check(p)?].push(check(q)?);
        }
        for row in delta.iter_mut().flatten() {
            row.sort_unstable();
            row.dedup();
        }
        let initials = initials
            .into_iter()
            .map(check)
            .collect::<Result<BTreeSet<_>>>()?;
        let mut acc = vec![false; n];
        for q in accepting {
            acc[check(q)?] = true;
        }
        Ok(Nfa {
            alphabet,
            delta,
            initials,
            accepting: acc,
        })
    }

    pub fn from_dfa(d: &Dfa) -> Nfa {
        let n = d.n();
        let delta = d
            .transformations()
            .iter()
            .map(|t| (0..n).map(|q| vec![t.raw()[q] as usize]).collect())
            .collect();
        Nfa {
            alphabet: d.alphabet().to_vec(),
            delta,
            initials: BTreeSet::from([d.initial_raw()]),
            accepting: d.accepting_mask().to_vec(),
        }
    }

    /// `d` as an NFA with its dead states (those with empty language)
    /// removed, keeping the relative order of the others. A DFA for the empty
    /// language is returned unchanged.
    pub fn from_dfa_trimmed(d: &Dfa) -> Nfa {
        let dead = d.dead_states();
        if dead.iter().all(|&x| x) {
            return Nfa::from_dfa(d);
        }
        let mut number = vec![usize::MAX; d.n()];
        let mut k = 0;
        for q in 0..d.n() {
            if !dead[q] {
                number[q] = k;
                k += 1;
            }
        }
        let delta = d
            .transformations()
            .iter()
            .map(|t| {
                (0..d.n())
                    .filter(|&q| !dead[q])
                    .map(|q| {
                        let r = t.raw()[q] as usize;
                        if dead[r] {
                            Vec::new()
                        } else {
                            vec![number[r]]
                        }
                    })
                    .collect()
            })
            .collect();
        let init = d.initial_raw();
        Nfa {
            alphabet: d.alphabet().to_vec(),
            delta,
            initials: if dead[init] {
                BTreeSet::new()
            } else {
                BTreeSet::from([number[init]])
            },
            accepting: (0..d.n())
                .filter(|&q| !dead[q])
                .map(|q| d.accepting_mask()[q])
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initials(&self) -> BTreeSet<usize> {
        self.initials.iter().map(|q| q + 1).collect()
    }

    pub fn accepting(&self) -> BTreeSet<usize> {
        (0..self.n())
            .filter(|&q| self.accepting[q])
            .map(|q| q + 1)
            .collect()
    }

    pub fn successors(&self, state: usize, letter: &str) -> Result<BTreeSet<usize>> {
        let k = self
            .alphabet
            .iter()
            .position(|a| a == letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))?;
        Ok(self.delta[k][state - 1].iter().map(|q| q + 1).collect())
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let mut current: BTreeSet<usize> = self.initials.clone();
        for &a in word {
            current = current
                .iter()
                .flat_map(|&q| self.delta[a][q].iter().copied())
                .collect();
        }
        current.iter().any(|&q| self.accepting[q])
    }

    /// Edges flipped, initial and accepting sets exchanged.
    pub fn reverse(&self) -> Nfa {
        let n = self.n();
        let mut delta = vec![vec![Vec::new(); n]; self.alphabet.len()];
        for (k, rows) in self.delta.iter().enumerate() {
            for (p, targets) in rows.iter().enumerate() {
                for &q in targets {
                    delta[k][q].push(p);
                }
            }
        }
        for row in delta.iter_mut().flatten() {
            row.sort_unstable();
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            delta,
            initials: (0..n).filter(|&q| self.accepting[q]).collect(),
            accepting: (0..n).map(|q| self.initials.contains(&q)).collect(),
        }
    }

    pub(crate) fn delta_raw(&self) -> &[Vec<Vec<usize>>] {
        &self.delta
    }

    pub(crate) fn initials_raw(&self) -> &BTreeSet<usize> {
        &self.initials
    }

    pub(crate) fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }
}

/// A DFA whose states are sets of NFA states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetDfa {
    dfa: Dfa,
    labels: Vec<BTreeSet<usize>>,
}

impl SubsetDfa {
    pub(crate) fn new(dfa: Dfa, labels: Vec<BTreeSet<usize>>) -> Self {
        SubsetDfa { dfa, labels }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    /// The NFA states (1-based) making up DFA state `state` (1-based).
    pub fn label(&self, state: usize) -> &BTreeSet<usize> {
        &self.labels[state - 1]
    }

    pub fn labels(&self) -> &[BTreeSet<usize>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}
