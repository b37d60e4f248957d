//! Searches for conflict pairs, which show that no semigroup of the class can
//! mix elements of the bound set outside the candidate set with candidates.

use synsemi::freeness::FreenessClass;
use synsemi::verify::{compare_with_printed, conflict_pairs, PairOptions};

fn main() -> synsemi::Result<()> {
    let opts = PairOptions {
        multiplicity: true,
        candidate: None,
    };
    for (class, n) in [
        (FreenessClass::Suffix, 4),
        (FreenessClass::Suffix, 5),
        (FreenessClass::Bifix, 5),
        (FreenessClass::Factor, 5),
    ] {
        let r = conflict_pairs(class, n, opts)?;
        println!(
            "{class}-free n={n}: {} elements of {} outside {}, all paired: {}, distinct partners: {}",
            r.difference_size(),
            r.bound_set,
            r.candidate_set,
            r.all_matched(),
            r.matching.is_some()
        );
        for c in r.certificates.iter().take(3) {
            println!(
                "  {} <-> {} via {} ({} partners)",
                c.s,
                c.t,
                c.witness,
                c.t_multiplicity.unwrap_or(0)
            );
        }
        if let Some(cmp) = compare_with_printed(&r) {
            println!(
                "  printed pairs all conflict: {}, differ from first hits: {}",
                cmp.all_pairs_conflict,
                cmp.first_hit_differences.len()
            );
        }
    }
    Ok(())
}
