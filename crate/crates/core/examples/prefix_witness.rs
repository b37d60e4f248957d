//! Builds the prefix-free witnesses and measures them.

use synsemi::automata::{dfa_to_dot, quotient_count, syntactic_complexity};
use synsemi::bounds::prefix_bound;
use synsemi::freeness::classify_language;
use synsemi::witnesses::witness_prefix;

fn main() -> synsemi::Result<()> {
    for n in 2..=7 {
        let d = witness_prefix(n)?;
        let classes: Vec<String> = classify_language(&d)
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!(
            "n={n}: {} letters, kappa {}, sigma {} (bound {}), classes {}",
            d.alphabet().len(),
            quotient_count(&d),
            syntactic_complexity(&d)?,
            prefix_bound(n)?,
            classes.join(",")
        );
    }
    print!("{}", dfa_to_dot(&witness_prefix(4)?, true));
    Ok(())
}
