//! Membership predicates for the B, V, W and U sets of transformations, and
//! language-level freeness deciders for DFAs.
//!
//! The predicates assume the canonical layout of a quotient DFA: state 1 is
//! the initial state, state `n` is the empty state, and for bifix- and
//! factor-free languages state `n - 1` is the quotient `ε`. They accept any
//! degree; on degree 1 every predicate is false.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::automata::{
    concat_sigma_plus, minimize, quotient_count, transition_semigroup, Dfa, Nfa, Side,
};
use crate::error::{Error, Result};
use crate::transform::Transformation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PredicateName {
    Bsf,
    Vsf,
    Wsf,
    Bbf,
    Vbf,
    Wbf,
    Bff,
    Wff,
    U1,
    U2,
    U3,
}

impl PredicateName {
    pub const ALL: [PredicateName; 11] = [
        PredicateName::Bsf,
        PredicateName::Vsf,
        PredicateName::Wsf,
        PredicateName::Bbf,
        PredicateName::Vbf,
        PredicateName::Wbf,
        PredicateName::Bff,
        PredicateName::Wff,
        PredicateName::U1,
        PredicateName::U2,
        PredicateName::U3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PredicateName::Bsf => "Bsf",
            PredicateName::Vsf => "Vsf",
            PredicateName::Wsf => "Wsf",
            PredicateName::Bbf => "Bbf",
            PredicateName::Vbf => "Vbf",
            PredicateName::Wbf => "Wbf",
            PredicateName::Bff => "Bff",
            PredicateName::Wff => "Wff",
            PredicateName::U1 => "U1",
            PredicateName::U2 => "U2",
            PredicateName::U3 => "U3",
        }
    }

    pub fn check(self, t: &Transformation) -> bool {
        self.check_raw(t.raw())
    }

    pub(crate) fn check_raw(self, t: &[u16]) -> bool {
        match self {
            PredicateName::Bsf => bsf(t),
            PredicateName::Vsf => vsf(t),
            PredicateName::Wsf => wsf(t),
            PredicateName::Bbf => bbf(t),
            PredicateName::Vbf => vsf(t) && bbf(t),
            PredicateName::Wbf => u1(t) || u2(t) || u3(t),
            PredicateName::Bff => bff(t),
            PredicateName::Wff => wff(t),
            PredicateName::U1 => u1(t),
            PredicateName::U2 => u2(t),
            PredicateName::U3 => u3(t),
        }
    }
}

impl fmt::Display for PredicateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for PredicateName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for PredicateName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PredicateName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown set `{s}`; expected one of Bsf, Vsf, Wsf, Bbf, Vbf, Wbf, Bff, Wff, U1, U2, U3"
                ))
            })
    }
}

pub fn in_bsf(t: &Transformation) -> bool {
    bsf(t.raw())
}
pub fn in_vsf(t: &Transformation) -> bool {
    vsf(t.raw())
}
pub fn in_wsf(t: &Transformation) -> bool {
    wsf(t.raw())
}
pub fn in_bbf(t: &Transformation) -> bool {
    bbf(t.raw())
}
pub fn in_vbf(t: &Transformation) -> bool {
    PredicateName::Vbf.check(t)
}
pub fn in_wbf(t: &Transformation) -> bool {
    PredicateName::Wbf.check(t)
}
pub fn in_bff(t: &Transformation) -> bool {
    bff(t.raw())
}
pub fn in_wff(t: &Transformation) -> bool {
    wff(t.raw())
}
pub fn in_u1(t: &Transformation) -> bool {
    u1(t.raw())
}
pub fn in_u2(t: &Transformation) -> bool {
    u2(t.raw())
}
pub fn in_u3(t: &Transformation) -> bool {
    u3(t.raw())
}

/// Calls `f(p)` for j = 1..=n where `p[i]` is `i t^j` (0-based),
/// stopping early when `f` returns false.
fn powers(t: &[u16], mut f: impl FnMut(&[u16]) -> bool) -> bool {
    let mut cur: Vec<u16> = t.to_vec();
    for _ in 0..t.len() {
        if !f(&cur) {
            return false;
        }
        for x in cur.iter_mut() {
            *x = t[*x as usize];
        }
    }
    true
}

fn bsf(t: &[u16]) -> bool {
    let n = t.len();
    if n < 2 {
        return false;
    }
    let sink = (n - 1) as u16;
    if t[n - 1] != sink || t.contains(&0) {
        return false;
    }
    powers(t, |p| {
        p[0] == sink || p[1..n - 1].iter().all(|&x| x != p[0])
    })
}

fn vsf(t: &[u16]) -> bool {
    if !bsf(t) {
        return false;
    }
    let sink = (t.len() - 1) as u16;
    let mut seen = vec![false; t.len()];
    t.iter()
        .filter(|&&x| x != sink)
        .all(|&x| !std::mem::replace(&mut seen[x as usize], true))
}

fn wsf(t: &[u16]) -> bool {
    let sink = t.len().saturating_sub(1) as u16;
    bsf(t) && (t[0] == sink || t[1..t.len() - 1].iter().all(|&x| x == sink))
}

fn bbf(t: &[u16]) -> bool {
    let n = t.len();
    bsf(t) && t[n - 2] as usize == n - 1
}

fn u1(t: &[u16]) -> bool {
    bbf(t) && t[0] as usize == t.len() - 1
}

fn u2(t: &[u16]) -> bool {
    bbf(t) && t[0] as usize == t.len() - 2
}

fn u3(t: &[u16]) -> bool {
    let n = t.len();
    bbf(t) && (t[0] as usize) < n - 2 && t[1..].iter().all(|&x| x as usize >= n - 2)
}

fn bff(t: &[u16]) -> bool {
    if !bbf(t) {
        return false;
    }
    let n = t.len();
    let eps = (n - 2) as u16;
    let sink = (n - 1) as u16;
    powers(t, |p| p[0] != eps || p[1..n - 2].iter().all(|&x| x == sink))
}

fn is_t0(t: &[u16]) -> bool {
    let n = t.len();
    t[0] as usize == n - 2 && t[1..].iter().all(|&x| x as usize == n - 1)
}

fn wff(t: &[u16]) -> bool {
    bff(t) && (u1(t) || is_t0(t) || u3(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreenessClass {
    Prefix,
    Suffix,
    Bifix,
    Factor,
}

impl FreenessClass {
    pub const ALL: [FreenessClass; 4] = [
        FreenessClass::Prefix,
        FreenessClass::Suffix,
        FreenessClass::Bifix,
        FreenessClass::Factor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FreenessClass::Prefix => "prefix",
            FreenessClass::Suffix => "suffix",
            FreenessClass::Bifix => "bifix",
            FreenessClass::Factor => "factor",
        }
    }

    /// The B-set containing every syntactic semigroup of the class, if any.
    pub fn bound_set(self) -> Option<PredicateName> {
        match self {
            FreenessClass::Prefix => None,
            FreenessClass::Suffix => Some(PredicateName::Bsf),
            FreenessClass::Bifix => Some(PredicateName::Bbf),
            FreenessClass::Factor => Some(PredicateName::Bff),
        }
    }
}

impl fmt::Display for FreenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for FreenessClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for FreenessClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s
            .to_ascii_lowercase()
            .trim_end_matches("-free")
            .trim_end_matches("_free")
            .to_string();
        FreenessClass::ALL
            .into_iter()
            .find(|c| c.as_str() == key)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown class `{s}`; expected prefix, suffix, bifix or factor"
                ))
            })
    }
}

/// Whether some word is accepted by both `d` and `m`, by search over pairs.
fn meets(d: &Dfa, m: &Nfa) -> bool {
    let n = m.n();
    let delta = m.delta_raw();
    let dacc = d.accepting_mask();
    let macc = m.accepting_mask();
    let mut seen = vec![false; d.n() * n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &q in m.initials_raw() {
        let p = d.initial_raw();
        if !seen[p * n + q] {
            seen[p * n + q] = true;
            stack.push((p, q));
        }
    }
    let letters = d.transformations();
    while let Some((p, q)) = stack.pop() {
        if dacc[p] && macc[q] {
            return true;
        }
        for (k, t) in letters.iter().enumerate() {
            let p2 = t.raw()[p] as usize;
            for &q2 in &delta[k][q] {
                if !seen[p2 * n + q2] {
                    seen[p2 * n + q2] = true;
                    stack.push((p2, q2));
                }
            }
        }
    }
    false
}

/// The exact set of freeness classes of `L(d)`, decided on the minimal DFA by
/// intersecting with padded copies of the language.
pub fn classify_language(d: &Dfa) -> BTreeSet<FreenessClass> {
    let m = minimize(d);
    let prefix = !meets(&m, &concat_sigma_plus(&m, Side::Right));
    let suffix = !meets(&m, &concat_sigma_plus(&m, Side::Left));
    let factor = prefix && suffix && !meets(&m, &concat_sigma_plus(&m, Side::Both));
    let mut out = BTreeSet::new();
    if prefix {
        out.insert(FreenessClass::Prefix);
    }
    if suffix {
        out.insert(FreenessClass::Suffix);
    }
    if prefix && suffix {
        out.insert(FreenessClass::Bifix);
    }
    if factor {
        out.insert(FreenessClass::Factor);
    }
    out
}

/// For a minimal DFA: exactly one accepting state, and every letter sends it
/// to the empty state.
pub fn structural_prefix_free(d: &Dfa) -> Result<bool> {
    if quotient_count(d) != d.n() {
        return Err(Error::NotMinimal);
    }
    let acc: Vec<usize> = d.accepting_raw().collect();
    let [f] = acc[..] else {
        return Ok(false);
    };
    let Some(e) = d.empty_state() else {
        return Ok(false);
    };
    Ok(d.transformations()
        .iter()
        .all(|t| t.raw()[f] as usize == e - 1))
}

/// The minimal DFA of `L(d)` in canonical layout: initial state 1, the empty
/// state (if any) last, and the quotient `ε` (if any, and not initial) at
/// `n - 1`.
pub fn canonical_quotient_dfa(d: &Dfa) -> Dfa {
    let m = minimize(d);
    let n = m.n();
    let Some(e) = m.empty_state() else {
        return m;
    };
    let eps = m.accepting_raw().find(|&q| {
        m.transformations()
            .iter()
            .all(|t| t.raw()[q] as usize == e - 1)
    });
    match eps {
        Some(q) if q != 0 && q + 2 != n && n >= 3 => {
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.swap(q, n - 2);
            m.permute_states(&perm).expect("a transposition")
        }
        _ => m,
    }
}

/// Checks the semigroup-based sufficient condition for `class`:
///
/// * prefix: the structural test on the quotient DFA;
/// * suffix: an empty quotient, one accepting quotient, and `T_L ⊆ B_sf(n)`;
/// * bifix / factor: `ε` is the only accepting quotient and `T_L` lies in
///   `B_bf(n)` / `B_ff(n)`.
///
/// `true` proves membership; `false` is inconclusive only in principle.
pub fn certify_by_semigroup(d: &Dfa, class: FreenessClass) -> Result<bool> {
    let m = canonical_quotient_dfa(d);
    if class == FreenessClass::Prefix {
        return structural_prefix_free(&m);
    }
    let n = m.n();
    let acc: Vec<usize> = m.accepting_raw().collect();
    if m.empty_state() != Some(n) || acc.len() != 1 {
        return Ok(false);
    }
    if class != FreenessClass::Suffix && !structural_prefix_free(&m)? {
        return Ok(false);
    }
    let pred = class.bound_set().expect("non-prefix class");
    Ok(transition_semigroup(&m)?.all_satisfy(|t| pred.check(t)))
}

/// Whether every element of the syntactic semigroup, in canonical layout,
/// satisfies `pred`.
pub fn syntactic_semigroup_within(d: &Dfa, pred: PredicateName) -> Result<bool> {
    let m = canonical_quotient_dfa(d);
    Ok(transition_semigroup(&m)?.all_satisfy(|t| pred.check(t)))
}
