//! Closing generator sets under composition.

use synsemi::freeness::in_bsf;
use synsemi::semigroup::{closure, find_escape};
use synsemi::witnesses::gen_sf_v;
use synsemi::Transformation;

fn main() -> synsemi::Result<()> {
    for n in 3..=6 {
        let gens: Vec<Transformation> = gen_sf_v(n)?.into_iter().map(|(_, t)| t).collect();
        let s = closure(&gens)?;
        println!(
            "n={n}: {} generators, semigroup of size {}, inside Bsf: {}",
            gens.len(),
            s.len(),
            s.all_satisfy(in_bsf)
        );
    }

    // A pair whose semigroup leaves Bsf(4).
    let a: Transformation = "[4,2,2,4]".parse()?;
    let b: Transformation = "[3,2,4,4]".parse()?;
    match find_escape(in_bsf, &[a.clone(), b.clone()]) {
        Some(w) => println!("<{a}, {b}> contains {w}, which is not in Bsf(4)"),
        None => println!("<{a}, {b}> stays in Bsf(4)"),
    }
    Ok(())
}
