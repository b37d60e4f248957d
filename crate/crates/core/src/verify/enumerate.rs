use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freeness::PredicateName;
use crate::semigroup::SemigroupSet;
use crate::transform::Transformation;

pub const DEFAULT_ENUMERATION_CAP: usize = 8;
pub const EXTENDED_ENUMERATION_CAP: usize = 9;

/// All transformations of one degree satisfying a named predicate, in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub name: PredicateName,
    pub n: usize,
    pub elements: Vec<Transformation>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.elements.binary_search(t).is_ok()
    }

    /// Wraps the listing as a [`SemigroupSet`]; this checks closure, which is
    /// quadratic in the size.
    pub fn into_set(self) -> Result<SemigroupSet> {
        SemigroupSet::from_elements(self.elements)
    }
}

fn check_cap(n: usize, extended: bool) -> Result<()> {
    let max = if extended {
        EXTENDED_ENUMERATION_CAP
    } else {
        DEFAULT_ENUMERATION_CAP
    };
    if n < 2 || n > max {
        return Err(Error::OutOfRange {
            what: "enumeration",
            n,
            min: 2,
            max,
        });
    }
    Ok(())
}

fn decode(mut index: u64, n: usize, out: &mut [u16]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % n as u64) as u16;
        index /= n as u64;
    }
}

/// Every map of `{1..n}` whose 0-based image list passes `keep`, in
/// lexicographic order. Runs over all `n^n` maps in parallel.
pub fn enumerate_where(
    n: usize,
    extended: bool,
    keep: impl Fn(&[u16]) -> bool + Sync,
) -> Result<Vec<Transformation>> {
    check_cap(n, extended)?;
    let total = (n as u64).pow(n as u32);
    Ok((0..total)
        .into_par_iter()
        .map_init(
            || vec![0u16; n],
            |buf, i| {
                decode(i, n, buf);
                keep(buf).then(|| Transformation::from_raw(buf.clone()))
            },
        )
        .flatten_iter()
        .collect())
}

pub fn count_where(n: usize, extended: bool, keep: impl Fn(&[u16]) -> bool + Sync) -> Result<u64> {
    check_cap(n, extended)?;
    let total = (n as u64).pow(n as u32);
    Ok((0..total)
        .into_par_iter()
        .map_init(
            || vec![0u16; n],
            |buf, i| {
                decode(i, n, buf);
                u64::from(keep(buf))
            },
        )
        .sum())
}

/// Degrees up to 8 by default; 9 with `extended`.
pub fn enumerate_predicate(name: PredicateName, n: usize, extended: bool) -> Result<Enumeration> {
    Ok(Enumeration {
        name,
        n,
        elements: enumerate_where(n, extended, |t| name.check_raw(t))?,
    })
}

pub fn count_predicate(name: PredicateName, n: usize, extended: bool) -> Result<u64> {
    count_where(n, extended, |t| name.check_raw(t))
}
