//! Prints every bound formula for n = 2..10 and a slice of the tree counts.

use synsemi::bounds::{trees_s, BoundReport};
use synsemi::freeness::FreenessClass;

fn main() -> synsemi::Result<()> {
    for class in FreenessClass::ALL {
        println!("{class}-free");
        for n in 2..=10 {
            let r = BoundReport::new(class, n)?;
            let vals: Vec<String> = r.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let tag = match (&r.tight, &r.conjectured) {
                (Some(t), _) => format!("tight {t}"),
                (None, Some(c)) => format!("conjectured {c}"),
                _ => "-".into(),
            };
            println!("  n={n:<2} {tag:<20} {}", vals.join(" "));
        }
    }
    println!("trees on m nodes of height at most h");
    for h in 0..=4 {
        let row: Vec<String> = (1..=7)
            .map(|m| trees_s(m, h).unwrap().to_string())
            .collect();
        println!("  h={h}: {}", row.join(" "));
    }
    Ok(())
}
