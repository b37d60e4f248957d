//! Finite transformation semigroups given by generators.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::transform::Transformation;

pub const DEFAULT_MAX_DEGREE: usize = 16;
pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureLimits {
    pub max_degree: usize,
    pub max_elements: usize,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// A deduplicated set of transformations of one degree, kept sorted
/// lexicographically by image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupSet {
    degree: usize,
    elements: Vec<Transformation>,
    closed: bool,
}

impl SemigroupSet {
    /// Wraps an arbitrary set. `closed` is set only if the set is checked to
    /// be closed under composition.
    pub fn from_elements(elements: impl IntoIterator<Item = Transformation>) -> Result<Self> {
        let mut elements: Vec<_> = elements.into_iter().collect();
        let degree = check_degrees(&elements)?;
        elements.sort_unstable();
        elements.dedup();
        let mut set = SemigroupSet {
            degree,
            elements,
            closed: false,
        };
        set.closed = set.verify_closed();
        Ok(set)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.elements.binary_search(t).is_ok()
    }

    /// Cardinality; only meaningful for a semigroup.
    pub fn size(&self) -> Result<BigUint> {
        if !self.closed {
            return Err(Error::NotClosed);
        }
        Ok(BigUint::from(self.elements.len()))
    }

    /// Checks every pairwise product, quadratic in the size.
    pub fn verify_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| self.contains(&a.then_unchecked(b)))
        })
    }

    pub fn all_satisfy(&self, predicate: impl Fn(&Transformation) -> bool) -> bool {
        self.elements.iter().all(predicate)
    }

    pub fn is_subset_of(&self, other: &SemigroupSet) -> bool {
        self.elements.iter().all(|t| other.contains(t))
    }

    /// One transformation per line in text form, sorted.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for t in &self.elements {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

fn check_degrees(ts: &[Transformation]) -> Result<usize> {
    let first = ts.first().ok_or(Error::EmptyGenerators)?.degree();
    for t in ts {
        if t.degree() != first {
            return Err(Error::DegreeMismatch {
                left: first,
                right: t.degree(),
            });
        }
    }
    Ok(first)
}

/// The semigroup generated by `generators`, with default limits.
pub fn closure(generators: &[Transformation]) -> Result<SemigroupSet> {
    closure_with_limits(generators, ClosureLimits::default())
}

pub fn closure_with_limits(
    generators: &[Transformation],
    limits: ClosureLimits,
) -> Result<SemigroupSet> {
    let degree = check_degrees(generators)?;
    if degree > limits.max_degree {
        return Err(Error::DegreeTooLarge {
            n: degree,
            max: limits.max_degree,
        });
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();

    // Every element is a product g1 g2 ... gk, so right multiplication by the
    // generators reaches all of them.
    let mut seen: HashSet<Transformation> = gens.iter().cloned().collect();
    let mut queue: VecDeque<Transformation> = gens.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.then_unchecked(g);
            if !seen.contains(&y) {
                if seen.len() >= limits.max_elements {
                    return Err(Error::ElementCap {
                        cap: limits.max_elements,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<_> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(SemigroupSet {
        degree,
        elements,
        closed: true,
    })
}

/// First element (in breadth-first order from the generators, listed order)
/// of the generated semigroup that fails `predicate`.
pub fn find_escape(
    predicate: impl Fn(&Transformation) -> bool,
    generators: &[Transformation],
) -> Option<Transformation> {
    if generators.is_empty() {
        return None;
    }
    let mut seen: HashSet<Transformation> = HashSet::new();
    let mut queue = VecDeque::new();
    for g in generators {
        if seen.insert(g.clone()) {
            if !predicate(g) {
                return Some(g.clone());
            }
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then_unchecked(g);
            if seen.insert(y.clone()) {
                if !predicate(&y) {
                    return Some(y);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Whether `<a, b>` contains an element failing `predicate`.
pub fn escapes(
    predicate: impl Fn(&Transformation) -> bool,
    a: &Transformation,
    b: &Transformation,
) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(find_escape(predicate, &[a.clone(), b.clone()]).is_some())
}
