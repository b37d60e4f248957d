//! Reversal complexity of the restricted witnesses.

use synsemi::freeness::FreenessClass;
use synsemi::verify::verify_reversal_bound;

fn main() -> synsemi::Result<()> {
    for class in [
        FreenessClass::Prefix,
        FreenessClass::Suffix,
        FreenessClass::Factor,
    ] {
        let lo = if class == FreenessClass::Factor { 5 } else { 4 };
        for n in lo..=10 {
            let r = verify_reversal_bound(class, n)?;
            println!(
                "{class}-free n={n}: {} quotients, bound {}, {} subsets, reverse-deterministic {}",
                r.kappa, r.bound, r.subset_states, r.reverse_deterministic
            );
        }
    }
    Ok(())
}
