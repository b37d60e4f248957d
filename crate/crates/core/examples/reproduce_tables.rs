//! Rebuilds both bounds tables and cross-checks them.

use synsemi::verify::reproduce_table;

fn main() -> synsemi::Result<()> {
    for which in [1, 2] {
        let t = reproduce_table(which, true)?;
        print!("{}", t.to_csv());
        for m in &t.mismatches {
            println!("mismatch: {m}");
        }
        println!();
    }
    Ok(())
}
