use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_predicate;
use crate::error::{Error, Result};
use crate::freeness::{FreenessClass, PredicateName};
use crate::semigroup::{closure, find_escape};
use crate::transform::Transformation;

/// Evidence that `s` and `t` cannot both lie in one syntactic semigroup of
/// the class: `witness` is in `<s, t>` but outside the bound set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    pub n: usize,
    pub bound_set: PredicateName,
    pub candidate_set: PredicateName,
    pub s: Transformation,
    pub t: Transformation,
    pub witness: Transformation,
    /// Number of partners of `s` in the candidate set, when counted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_multiplicity: Option<usize>,
}

impl PairCertificate {
    /// Re-checks every claim from scratch, computing `<s, t>` in full.
    pub fn revalidate(&self) -> bool {
        let b = self.bound_set;
        let c = self.candidate_set;
        b.check(&self.s)
            && !c.check(&self.s)
            && c.check(&self.t)
            && !b.check(&self.witness)
            && closure(&[self.s.clone(), self.t.clone()])
                .map(|set| set.contains(&self.witness))
                .unwrap_or(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairOptions {
    /// Count every partner of each `s`, and look for a saturating matching.
    pub multiplicity: bool,
    /// Override the candidate set.
    pub candidate: Option<PredicateName>,
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub class: FreenessClass,
    pub n: usize,
    pub bound_set: PredicateName,
    pub candidate_set: PredicateName,
    pub bound_size: usize,
    pub candidate_size: usize,
    /// One certificate per element of the difference set that has a partner,
    /// using the lexicographically first partner.
    pub certificates: Vec<PairCertificate>,
    /// Elements of the difference set with no partner at all.
    pub unmatched: Vec<Transformation>,
    /// All partners of each `s`, in the order of `certificates`, when counted.
    pub partners: Option<Vec<Vec<Transformation>>>,
    /// Distinct partners for every `s`, when counted and one exists.
    pub matching: Option<Vec<(Transformation, Transformation)>>,
}

impl PairReport {
    pub fn difference_size(&self) -> usize {
        self.certificates.len() + self.unmatched.len()
    }

    pub fn all_matched(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// The candidate set used for `class` at degree `n` when none is given.
pub fn default_candidate(class: FreenessClass, n: usize) -> Result<PredicateName> {
    Ok(match class {
        FreenessClass::Suffix if n <= 5 => PredicateName::Vsf,
        FreenessClass::Suffix => PredicateName::Wsf,
        FreenessClass::Bifix if n <= 5 => PredicateName::Vbf,
        FreenessClass::Bifix => PredicateName::Wbf,
        FreenessClass::Factor => PredicateName::Wff,
        FreenessClass::Prefix => {
            return Err(Error::Unsupported(
                "prefix-free languages have no conflict-pair argument".into(),
            ))
        }
    })
}

/// For every `s` in the bound set but not in the candidate set, searches the
/// candidate set in lexicographic order for `t` with `<s, t>` leaving the
/// bound set.
pub fn conflict_pairs(class: FreenessClass, n: usize, opts: PairOptions) -> Result<PairReport> {
    let bound = class
        .bound_set()
        .ok_or_else(|| Error::Unsupported(format!("no bound set for {class}-free")))?;
    let cand = match opts.candidate {
        Some(c) => c,
        None => default_candidate(class, n)?,
    };
    let b = enumerate_predicate(bound, n, false)?;
    let c = enumerate_predicate(cand, n, false)?;
    let diff: Vec<&Transformation> = b.elements.iter().filter(|s| !c.contains(s)).collect();

    let in_bound = |x: &Transformation| bound.check(x);
    let results: Vec<(Transformation, Vec<(Transformation, Transformation)>)> = diff
        .par_iter()
        .map(|&s| {
            let mut hits = Vec::new();
            for t in &c.elements {
                if let Some(w) = find_escape(in_bound, &[s.clone(), t.clone()]) {
                    hits.push((t.clone(), w));
                    if !opts.multiplicity {
                        break;
                    }
                }
            }
            (s.clone(), hits)
        })
        .collect();

    let mut certificates = Vec::new();
    let mut unmatched = Vec::new();
    let mut partners = Vec::new();
    for (s, hits) in results {
        let Some((t, w)) = hits.first().cloned() else {
            unmatched.push(s);
            continue;
        };
        certificates.push(PairCertificate {
            n,
            bound_set: bound,
            candidate_set: cand,
            s,
            t,
            witness: w,
            t_multiplicity: opts.multiplicity.then_some(hits.len()),
        });
        partners.push(hits.into_iter().map(|(t, _)| t).collect::<Vec<_>>());
    }
    let matching = if opts.multiplicity && unmatched.is_empty() {
        saturating_matching(&partners).map(|m| {
            certificates
                .iter()
                .map(|cert| cert.s.clone())
                .zip(m)
                .collect()
        })
    } else {
        None
    };
    Ok(PairReport {
        class,
        n,
        bound_set: bound,
        candidate_set: cand,
        bound_size: b.count(),
        candidate_size: c.count(),
        certificates,
        unmatched,
        partners: opts.multiplicity.then_some(partners),
        matching,
    })
}

/// A choice of pairwise distinct partners, one per row, by augmenting paths.
pub fn saturating_matching(partners: &[Vec<Transformation>]) -> Option<Vec<Transformation>> {
    let mut right: Vec<&Transformation> = partners.iter().flatten().collect();
    right.sort();
    right.dedup();
    let id = |t: &Transformation| right.binary_search(&t).expect("listed");
    let adj: Vec<Vec<usize>> = partners
        .iter()
        .map(|row| row.iter().map(id).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];

    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, owner, seen)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..adj.len() {
        let mut seen = vec![false; right.len()];
        if !augment(u, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut choice: Vec<Option<Transformation>> = vec![None; adj.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(u) = o {
            choice[*u] = Some(right[v].clone());
        }
    }
    choice.into_iter().collect()
}

fn tr(images: &[usize]) -> Transformation {
    Transformation::new(images.iter().copied()).expect("valid table entry")
}

/// The published `(s, t)` pairs for the small cases, in the order
/// given there.
pub fn printed_pairs(
    class: FreenessClass,
    n: usize,
) -> Option<Vec<(Transformation, Transformation)>> {
    let raw: &[(&[usize], &[usize])] = match (class, n) {
        (FreenessClass::Suffix, 4) => &[
            (&[4, 2, 2, 4], &[3, 2, 4, 4]),
            (&[4, 3, 3, 4], &[2, 3, 4, 4]),
        ],
        (FreenessClass::Bifix, 5) => &[
            (&[2, 4, 4, 5, 5], &[3, 4, 2, 5, 5]),
            (&[3, 4, 4, 5, 5], &[3, 5, 2, 5, 5]),
            (&[4, 2, 2, 5, 5], &[2, 4, 3, 5, 5]),
            (&[4, 3, 3, 5, 5], &[2, 5, 3, 5, 5]),
            (&[5, 2, 2, 5, 5], &[3, 2, 4, 5, 5]),
            (&[5, 3, 3, 5, 5], &[2, 3, 4, 5, 5]),
            (&[5, 4, 4, 5, 5], &[3, 2, 5, 5, 5]),
        ],
        (FreenessClass::Factor, 5) => &[
            (&[2, 3, 4, 5, 5], &[5, 2, 2, 5, 5]),
            (&[2, 3, 5, 5, 5], &[5, 4, 2, 5, 5]),
            (&[2, 5, 3, 5, 5], &[5, 3, 3, 5, 5]),
            (&[3, 2, 5, 5, 5], &[5, 2, 4, 5, 5]),
            (&[3, 4, 2, 5, 5], &[5, 3, 2, 5, 5]),
            (&[3, 5, 2, 5, 5], &[5, 3, 4, 5, 5]),
        ],
        _ => return None,
    };
    Some(raw.iter().map(|(s, t)| (tr(s), tr(t))).collect())
}

/// How the printed table relates to a computed report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedComparison {
    /// Printed `s` values are exactly the difference set.
    pub same_difference_set: bool,
    /// Every printed pair is a genuine conflict with `t` in the candidate set.
    pub all_pairs_conflict: bool,
    /// The printed partners are pairwise distinct.
    pub partners_distinct: bool,
    /// Printed pairs whose `t` differs from the lexicographically first hit,
    /// as `(s, printed t, first hit)`.
    pub first_hit_differences: Vec<(Transformation, Transformation, Transformation)>,
}

impl PrintedComparison {
    pub fn verbatim(&self) -> bool {
        self.same_difference_set && self.first_hit_differences.is_empty()
    }
}

pub fn compare_with_printed(report: &PairReport) -> Option<PrintedComparison> {
    let printed = printed_pairs(report.class, report.n)?;
    let bound = report.bound_set;
    let cand = report.candidate_set;
    let mut printed_s: Vec<&Transformation> = printed.iter().map(|(s, _)| s).collect();
    printed_s.sort();
    let mut ours: Vec<&Transformation> = report
        .certificates
        .iter()
        .map(|c| &c.s)
        .chain(&report.unmatched)
        .collect();
    ours.sort();
    let all_pairs_conflict = printed.iter().all(|(s, t)| {
        bound.check(s)
            && !cand.check(s)
            && cand.check(t)
            && find_escape(|x| bound.check(x), &[s.clone(), t.clone()]).is_some()
    });
    let mut ts: Vec<&Transformation> = printed.iter().map(|(_, t)| t).collect();
    ts.sort();
    ts.dedup();
    let first_hit_differences = printed
        .iter()
        .filter_map(|(s, t)| {
            let cert = report.certificates.iter().find(|c| &c.s == s)?;
            (cert.t != *t).then(|| (s.clone(), t.clone(), cert.t.clone()))
        })
        .collect();
    Some(PrintedComparison {
        same_difference_set: printed_s == ours,
        all_pairs_conflict,
        partners_distinct: ts.len() == printed.len(),
        first_hit_differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_four() {
        let r = conflict_pairs(
            FreenessClass::Suffix,
            4,
            PairOptions {
                multiplicity: true,
                candidate: None,
            },
        )
        .unwrap();
        assert_eq!(r.difference_size(), 2);
        assert!(r.all_matched());
        assert!(r.certificates.iter().all(PairCertificate::revalidate));
        assert!(r.matching.is_some());
        let cmp = compare_with_printed(&r).unwrap();
        assert!(cmp.same_difference_set && cmp.all_pairs_conflict && cmp.partners_distinct);
    }

    #[test]
    fn matching_finds_distinct_partners() {
        let a = tr(&[2, 2]);
        let b = tr(&[1, 1]);
        let m = saturating_matching(&[vec![a.clone(), b.clone()], vec![a.clone()]]).unwrap();
        assert_eq!(m, vec![b, a.clone()]);
        assert!(saturating_matching(&[vec![a.clone()], vec![a]]).is_none());
    }

    #[test]
    fn prefix_has_no_pairs() {
        assert!(conflict_pairs(FreenessClass::Prefix, 4, PairOptions::default()).is_err());
    }
}
