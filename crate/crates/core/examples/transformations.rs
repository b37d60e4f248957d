//! Composition, powers and the principal-sequence decomposition.

use synsemi::transform::{compose, Atom};
use synsemi::Transformation;

fn main() -> synsemi::Result<()> {
    let s: Transformation = "[2,3,4,5,5]".parse()?;
    let t = Transformation::from_notation(5, &[Atom::cycle([1, 2]), Atom::singular(3, 5)])?;
    println!("s = {s}, t = {t}");
    println!("s then t = {}", compose(&s, &t)?);
    println!("t then s = {}", compose(&t, &s)?);
    for k in 1..=4 {
        println!("s^{k} = {}", s.pow(k));
    }

    let u: Transformation = "[3,3,5,2,5]".parse()?;
    let d = u.decompose();
    println!("principal sequence of {u}: {:?}", d.principal_sequence);
    for (j, members) in &d.trees {
        println!(
            "  tree at position {j}: {members:?}, height {}",
            d.tree_height(*j)
        );
    }
    println!("  long connection: {}", d.has_long_connection());
    Ok(())
}
