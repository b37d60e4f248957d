//! Deciding freeness of small languages, both from the language and from the
//! syntactic semigroup.

use synsemi::automata::Dfa;
use synsemi::freeness::{certify_by_semigroup, classify_language, FreenessClass};
use synsemi::Transformation;

fn dfa(n: usize, letters: &[(&str, &str)], accepting: &[usize]) -> synsemi::Result<Dfa> {
    let letters = letters
        .iter()
        .map(|(a, t)| Ok((a.to_string(), t.parse::<Transformation>()?)))
        .collect::<synsemi::Result<Vec<_>>>()?;
    Dfa::new(n, letters, 1, accepting.iter().copied())
}

fn main() -> synsemi::Result<()> {
    // {ab}: every kind of free.
    let ab = dfa(4, &[("a", "[2,4,4,4]"), ("b", "[4,3,4,4]")], &[3])?;
    // a*b: b and ab are both in it, so it is prefix-free but not suffix-free.
    let astar_b = dfa(3, &[("a", "[1,3,3]"), ("b", "[2,3,3]")], &[2])?;
    // ab*: a is a prefix of ab, but no word is a proper suffix of another.
    let a_bstar = dfa(3, &[("a", "[2,3,3]"), ("b", "[3,2,3]")], &[2])?;

    for (name, d) in [("ab", &ab), ("a*b", &astar_b), ("ab*", &a_bstar)] {
        let classes: Vec<String> = classify_language(d).iter().map(|c| c.to_string()).collect();
        println!("{name}: {{{}}}", classes.join(","));
        for class in [
            FreenessClass::Suffix,
            FreenessClass::Bifix,
            FreenessClass::Factor,
        ] {
            println!(
                "  semigroup within the {class}-free bound set: {}",
                certify_by_semigroup(d, class)?
            );
        }
    }
    Ok(())
}
