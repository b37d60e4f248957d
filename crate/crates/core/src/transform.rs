//! Full transformations of a finite state set `{1, ..., n}`.
//!
//! States are numbered from 1 in every public signature and in the text form
//! `[i1,i2,...,in]`. Composition is left-to-right: `a.then(&b)` applies `a`
//! first and `b` second, so `k (a b) = (k a) b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A self-map of `{1, ..., n}`.
///
/// Stored 0-based; the ordering derived here is the lexicographic ordering of
/// image lists, which is the canonical ordering used for every exported set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    map: Box<[u16]>,
}

/// One factor of the cycle/singular notation. Factors are applied in the
/// order they are listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// `(i1, i2, ..., ik)`: `i1 -> i2 -> ... -> ik -> i1`, everything else fixed.
    Cycle(Vec<usize>),
    /// `(from -> to)`: only `from` moves.
    Singular { from: usize, to: usize },
    /// `(Q -> to)`: every state is sent to `to`.
    Constant(usize),
    /// `(S -> to)`: every state of `S` is sent to `to`, the rest are fixed.
    Collapse { from: Vec<usize>, to: usize },
}

impl Atom {
    pub fn cycle(states: impl IntoIterator<Item = usize>) -> Self {
        Atom::Cycle(states.into_iter().collect())
    }

    pub fn singular(from: usize, to: usize) -> Self {
        Atom::Singular { from, to }
    }

    fn to_transformation(&self, n: usize) -> Result<Transformation> {
        let check = |s: usize| {
            if s == 0 || s > n {
                Err(Error::StateOutOfRange { state: s, n })
            } else {
                Ok(s - 1)
            }
        };
        let mut map: Vec<u16> = (0..n as u16).collect();
        match self {
            Atom::Cycle(states) => {
                let idx = states
                    .iter()
                    .map(|&s| check(s))
                    .collect::<Result<Vec<_>>>()?;
                let distinct: BTreeSet<_> = idx.iter().collect();
                if distinct.len() != idx.len() {
                    return Err(Error::Parse(format!("cycle {states:?} repeats a state")));
                }
                for (k, &s) in idx.iter().enumerate() {
                    map[s] = idx[(k + 1) % idx.len()] as u16;
                }
            }
            Atom::Singular { from, to } => {
                map[check(*from)?] = check(*to)? as u16;
            }
            Atom::Constant(to) => {
                let to = check(*to)? as u16;
                map.iter_mut().for_each(|x| *x = to);
            }
            Atom::Collapse { from, to } => {
                let to = check(*to)? as u16;
                for &s in from {
                    map[check(s)?] = to;
                }
            }
        }
        Ok(Transformation::from_raw(map))
    }
}

impl Transformation {
    /// Builds a transformation from 1-based images.
    pub fn new(images: impl IntoIterator<Item = usize>) -> Result<Self> {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if n > u16::MAX as usize {
            return Err(Error::DegreeTooLarge {
                n,
                max: u16::MAX as usize,
            });
        }
        let map = images
            .into_iter()
            .map(|s| {
                if s == 0 || s > n {
                    Err(Error::StateOutOfRange { state: s, n })
                } else {
                    Ok((s - 1) as u16)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(map))
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Self::new(1..=n)
    }

    /// The constant map onto `target`.
    pub fn constant(n: usize, target: usize) -> Result<Self> {
        Self::from_notation(n, &[Atom::Constant(target)])
    }

    /// Composes the listed atoms left-to-right on top of the identity.
    pub fn from_notation(n: usize, parts: &[Atom]) -> Result<Self> {
        parts.iter().try_fold(Self::identity(n)?, |acc, atom| {
            acc.then(&atom.to_transformation(n)?)
        })
    }

    pub(crate) fn from_raw(map: Vec<u16>) -> Self {
        debug_assert!(map.iter().all(|&x| (x as usize) < map.len()));
        Transformation {
            map: map.into_boxed_slice(),
        }
    }

    /// 0-based image list.
    pub(crate) fn raw(&self) -> &[u16] {
        &self.map
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of a 1-based state.
    ///
    /// Panics if `state` is outside `1..=n`.
    pub fn image(&self, state: usize) -> usize {
        self.map[state - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Transformation) -> Result<Transformation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Transformation) -> Transformation {
        Transformation {
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    pub fn range(&self) -> BTreeSet<usize> {
        self.map.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `t^k` for `k >= 1`; `t^0` is the identity.
    pub fn pow(&self, k: usize) -> Transformation {
        let mut acc: Transformation = Transformation::from_raw((0..self.degree() as u16).collect());
        for _ in 0..k {
            acc = acc.then_unchecked(self);
        }
        acc
    }

    /// The principal sequence of `1` and the classification of every other
    /// state by where its orbit joins that sequence.
    pub fn decompose(&self) -> PrincipalDecomposition {
        let n = self.degree();
        let sink = n - 1;
        let seq = orbit(&self.map, 0);
        let mut position = vec![None; n];
        for (p, &x) in seq.iter().enumerate() {
            position[x as usize] = Some(p);
        }
        let has_principal = position[sink].is_some() && self.map[sink] as usize == sink;
        // 1 can reappear at some j >= 1 only when the orbit of 1 is a pure cycle.
        let one_recurs = self.map[*seq.last().unwrap() as usize] == 0;

        let mut connections = BTreeMap::new();
        let mut trees: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        let mut stragglers = BTreeSet::new();
        for i in 0..n {
            if position[i].is_some() {
                continue;
            }
            let mut best: Option<Connection> = None;
            let path = orbit(&self.map, i as u16);
            for (depth, &x) in path.iter().enumerate().skip(1) {
                let x = x as usize;
                if x == sink {
                    continue;
                }
                let at = match position[x] {
                    Some(0) if one_recurs => seq.len(),
                    Some(0) | None => continue,
                    Some(p) => p,
                };
                if best.is_none_or(|b| at < b.at) {
                    let kind = if depth < at {
                        ConnectionKind::Short
                    } else {
                        ConnectionKind::Long
                    };
                    best = Some(Connection { kind, at, depth });
                }
            }
            match best {
                Some(c) => {
                    trees.entry(c.at).or_default().insert(i + 1);
                    connections.insert(i + 1, c);
                }
                None => {
                    stragglers.insert(i + 1);
                }
            }
        }

        PrincipalDecomposition {
            principal_sequence: seq.iter().map(|&x| x as usize + 1).collect(),
            has_principal,
            trees,
            stragglers,
            connections,
        }
    }

    /// Classifies how the orbit of `state` joins the principal sequence.
    pub fn classify_connection(&self, state: usize) -> Result<ConnectionKind> {
        let n = self.degree();
        if state == 0 || state > n {
            return Err(Error::StateOutOfRange { state, n });
        }
        let d = self.decompose();
        if d.principal_sequence.contains(&state) {
            return Err(Error::OnPrincipalSequence { state });
        }
        Ok(d.connections
            .get(&state)
            .map_or(ConnectionKind::None, |c| c.kind))
    }
}

/// Distinct elements of `x, xt, xt^2, ...` in order of appearance.
fn orbit(map: &[u16], start: u16) -> Vec<u16> {
    let mut seen = vec![false; map.len()];
    let mut out = Vec::new();
    let mut x = start;
    while !seen[x as usize] {
        seen[x as usize] = true;
        out.push(x);
        x = map[x as usize];
    }
    out
}

/// Composes two transformations left-to-right.
pub fn compose(first: &Transformation, second: &Transformation) -> Result<Transformation> {
    first.then(second)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectionKind {
    None,
    Short,
    Long,
}

/// Where an off-sequence orbit first meets the principal sequence: at
/// `1 t^at`, reached from the state after `depth` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connection {
    pub kind: ConnectionKind,
    pub at: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalDecomposition {
    /// `1, 1t, 1t^2, ...` up to the first repetition.
    pub principal_sequence: Vec<usize>,
    /// The sequence ends in the fixed state `n`.
    pub has_principal: bool,
    /// Position `j` on the sequence mapped to the off-sequence states whose
    /// orbit joins at `1 t^j`. The root itself is not included.
    pub trees: BTreeMap<usize, BTreeSet<usize>>,
    /// Off-sequence states with no principal connection.
    pub stragglers: BTreeSet<usize>,
    pub connections: BTreeMap<usize, Connection>,
}

impl PrincipalDecomposition {
    /// Height of the tree hanging at position `j` (0 when it is just the root).
    pub fn tree_height(&self, j: usize) -> usize {
        self.trees.get(&j).map_or(0, |members| {
            members
                .iter()
                .map(|s| self.connections[s].depth)
                .max()
                .unwrap_or(0)
        })
    }

    pub fn has_long_connection(&self) -> bool {
        self.connections
            .values()
            .any(|c| c.kind == ConnectionKind::Long)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, &x) in self.map.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x as usize + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Transformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[i1,...,in]`, got `{s}`")))?;
        let images = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad entry `{}`: {e}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Transformation::new(images)
    }
}

impl serde::Serialize for Transformation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.images())
    }
}

impl<'de> serde::Deserialize<'de> for Transformation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Transformation::new(images).map_err(serde::de::Error::custom)
    }
}
