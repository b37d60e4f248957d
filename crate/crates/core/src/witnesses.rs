//! Generator sets and witness DFAs for each class.
//!
//! Every witness uses state 1 as initial state and `n` as the empty state.
//! Letters are named `a`, `b`, `c`, `d1`.. for the prefix family, `a0`.. for
//! the V suffix family with `n >= 5`, and `a1`, `a2`, `a3`, `b1`.., `c`/`c1`..,
//! `d1`.. elsewhere. Letters drawn from a set (the `c_i` and `d_i` of the W
//! families) are listed in lexicographic order of their image lists.

use num_bigint::BigUint;
use num_traits::One;

use crate::automata::Dfa;
use crate::bounds;
use crate::error::{Error, Result};
use crate::freeness::{in_u2, in_u3, FreenessClass};
use crate::transform::{Atom, Transformation};

fn t(images: Vec<usize>) -> Transformation {
    Transformation::new(images).expect("valid images")
}

fn notation(n: usize, atoms: &[Atom]) -> Transformation {
    Transformation::from_notation(n, atoms).expect("states in range")
}

fn check_range(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::OutOfRange { what, n, min, max });
    }
    Ok(())
}

fn named(
    prefix: &str,
    ts: impl IntoIterator<Item = Transformation>,
) -> Vec<(String, Transformation)> {
    ts.into_iter()
        .enumerate()
        .map(|(k, t)| (format!("{prefix}{}", k + 1), t))
        .collect()
}

/// Letters of the prefix-free witness with `n^(n-2)` transformations.
pub fn gen_prefix(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("prefix witness", n, 2, 16)?;
    match n {
        2 => return Ok(vec![("a".into(), t(vec![2, 2]))]),
        3 => {
            return Ok(vec![
                ("a".into(), t(vec![2, 3, 3])),
                ("b".into(), t(vec![1, 3, 3])),
            ])
        }
        _ => {}
    }
    let kill = Atom::singular(n - 1, n);
    let mut letters = Vec::new();
    if n > 4 {
        letters.push((
            "a".to_string(),
            notation(n, &[kill.clone(), Atom::cycle(1..=n - 2)]),
        ));
    }
    letters.push((
        "b".into(),
        notation(n, &[kill.clone(), Atom::cycle([1, 2])]),
    ));
    letters.push((
        "c".into(),
        notation(n, &[kill.clone(), Atom::singular(n - 2, 1)]),
    ));
    for i in 1..=n - 2 {
        letters.push((
            format!("d{i}"),
            notation(n, &[kill.clone(), Atom::singular(i, n - 1)]),
        ));
    }
    Ok(letters)
}

pub fn witness_prefix(n: usize) -> Result<Dfa> {
    let letters = gen_prefix(n)?;
    let accepting = if n == 2 { 1 } else { n - 1 };
    Dfa::new(n, letters, 1, [accepting])
}

/// Generators of `V_sf(n)`.
pub fn gen_sf_v(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("V suffix generators", n, 3, 16)?;
    match n {
        3 => {
            return Ok(vec![
                ("a".into(), t(vec![3, 2, 3])),
                ("b".into(), t(vec![2, 3, 3])),
            ])
        }
        4 => {
            return Ok(vec![
                ("a".into(), t(vec![4, 3, 2, 4])),
                ("b".into(), t(vec![2, 4, 3, 4])),
                ("c".into(), t(vec![2, 3, 4, 4])),
            ])
        }
        _ => {}
    }
    let kill = Atom::singular(1, n);
    let mut letters = vec![
        (
            "a0".to_string(),
            notation(n, &[kill.clone(), Atom::cycle([2, 3])]),
        ),
        ("a1".to_string(), notation(n, &[kill, Atom::cycle(2..n)])),
    ];
    for i in 2..n {
        let images = (1..=n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => j + 1,
                std::cmp::Ordering::Equal => n,
                std::cmp::Ordering::Greater => j,
            })
            .collect();
        letters.push((format!("a{i}"), t(images)));
    }
    Ok(letters)
}

pub fn witness_sf_v(n: usize) -> Result<Dfa> {
    Dfa::new(n, gen_sf_v(n)?, 1, [2])
}

/// Generators of `W_sf(n)`: `a1, a2, a3, b1..b(n-2), c`.
pub fn gen_sf_w(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("W suffix generators", n, 4, 16)?;
    let kill = Atom::singular(1, n);
    let mut letters = vec![
        (
            "a1".to_string(),
            notation(n, &[kill.clone(), Atom::cycle(2..n)]),
        ),
        (
            "a2".to_string(),
            notation(n, &[kill.clone(), Atom::cycle([2, 3])]),
        ),
        (
            "a3".to_string(),
            notation(n, &[kill.clone(), Atom::singular(n - 1, 2)]),
        ),
    ];
    for i in 1..=n - 2 {
        letters.push((
            format!("b{i}"),
            notation(n, &[kill.clone(), Atom::singular(i + 1, n)]),
        ));
    }
    let mut c = vec![n; n];
    c[0] = 2;
    letters.push(("c".into(), t(c)));
    Ok(letters)
}

pub fn witness_sf_w(n: usize) -> Result<Dfa> {
    Dfa::new(n, gen_sf_w(n)?, 1, [2])
}

/// Generators of `V_bf(n)`: every bijection from `{1..n-2}` onto `{2..n-1}`,
/// extended by `n-1 -> n` and `n -> n`, in lexicographic order.
pub fn gen_bf_v(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("V bifix generators", n, 3, 10)?;
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (2..n).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(named(
        "a",
        perms.into_iter().map(|mut p| {
            p.extend([n, n]);
            t(p)
        }),
    ))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn witness_bf_v(n: usize) -> Result<Dfa> {
    Dfa::new(n, gen_bf_v(n)?, 1, [n - 1])
}

/// The elements of `U²_n`, in lexicographic order.
pub fn u2_elements(n: usize) -> Vec<Transformation> {
    // 1 -> n-1; states 2..n-2 go to {2..n-2, n}.
    let targets: Vec<usize> = (2..=n - 2).chain([n]).collect();
    let out: Vec<Transformation> = product(n - 3, &targets)
        .into_iter()
        .map(|mid| {
            let mut img = vec![n - 1];
            img.extend(mid);
            img.extend([n, n]);
            t(img)
        })
        .collect();
    debug_assert!(out.iter().all(in_u2));
    out
}

/// The elements of `U³_n`, in lexicographic order.
pub fn u3_elements(n: usize) -> Vec<Transformation> {
    // 1 -> j in 2..n-2; states 2..n-2 go to {n-1, n}.
    let mut out = Vec::new();
    for j in 2..=n - 2 {
        for mid in product(n - 3, &[n - 1, n]) {
            let mut img = vec![j];
            img.extend(mid);
            img.extend([n, n]);
            out.push(t(img));
        }
    }
    debug_assert!(out.iter().all(in_u3));
    out
}

/// All tuples of length `len` over `values`, lexicographic in `values` order.
fn product(len: usize, values: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn t0(n: usize) -> Transformation {
    let mut img = vec![n; n];
    img[0] = n - 1;
    t(img)
}

fn u3_without_singletons(n: usize) -> Vec<Transformation> {
    u3_elements(n)
        .into_iter()
        .filter(|x| x.images()[1..].iter().any(|&q| q != n))
        .collect()
}

/// `a1, a2, a3, b1..b(n-3)`, shared by the W bifix and factor families.
fn bifix_core(n: usize) -> Vec<(String, Transformation)> {
    let kill = [Atom::singular(1, n), Atom::singular(n - 1, n)];
    let with = |extra: Atom| {
        let mut atoms = kill.to_vec();
        atoms.push(extra);
        notation(n, &atoms)
    };
    let mut letters = vec![
        ("a1".to_string(), with(Atom::cycle(2..=n - 2))),
        ("a2".to_string(), with(Atom::cycle([2, 3]))),
        ("a3".to_string(), with(Atom::singular(n - 2, 2))),
    ];
    for i in 1..=n - 3 {
        letters.push((format!("b{i}"), with(Atom::singular(i + 1, n - 1))));
    }
    letters
}

/// Generators of `W_bf(n)`.
pub fn gen_bf_w(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("W bifix generators", n, 5, 8)?;
    let mut letters = bifix_core(n);
    let t0 = t0(n);
    letters.extend(named("c", u2_elements(n).into_iter().filter(|x| *x != t0)));
    letters.extend(named("d", u3_without_singletons(n)));
    Ok(letters)
}

pub fn witness_bf_w(n: usize) -> Result<Dfa> {
    Dfa::new(n, gen_bf_w(n)?, 1, [n - 1])
}

/// Generators of `W_ff(n)`.
pub fn gen_ff(n: usize) -> Result<Vec<(String, Transformation)>> {
    check_range("factor generators", n, 5, 12)?;
    let mut letters = bifix_core(n);
    letters.extend(named("c", u3_without_singletons(n)));
    Ok(letters)
}

pub fn witness_ff(n: usize) -> Result<Dfa> {
    Dfa::new(n, gen_ff(n)?, 1, [n - 1])
}

/// Restrictions whose reversal needs the most quotients.
///
/// * prefix: letters `a`, `c`, `d(n-2)` (`b` stands in for `a` at `n = 4`);
/// * suffix: the W suffix witness on `a1`, `a2`, `a3`, `c`;
/// * factor: the factor witness on `a1`, `a2`, `a3` and the letter
///   `[2,n-1,n,...,n]`, renamed `c`.
pub fn reversal_witness(class: FreenessClass, n: usize) -> Result<Dfa> {
    match class {
        FreenessClass::Prefix => {
            check_range("prefix reversal witness", n, 4, 16)?;
            let d = witness_prefix(n)?;
            let last = format!("d{}", n - 2);
            let a = if n == 4 { "b" } else { "a" };
            d.restrict(&[a, "c", &last])
        }
        FreenessClass::Suffix => {
            check_range("suffix reversal witness", n, 4, 16)?;
            witness_sf_w(n)?.restrict(&["a1", "a2", "a3", "c"])
        }
        FreenessClass::Factor => {
            check_range("factor reversal witness", n, 5, 12)?;
            let d = witness_ff(n)?;
            let mut img = vec![n; n];
            img[0] = 2;
            img[1] = n - 1;
            let target = t(img);
            let (name, _) = d
                .letters()
                .find(|(_, x)| **x == target)
                .expect("the factor witness contains [2,n-1,n,...,n]");
            let name = name.to_string();
            d.restrict(&["a1", "a2", "a3", &name])?
                .rename_letter(&name, "c")
        }
        FreenessClass::Bifix => Err(Error::Unsupported(
            "no separate bifix reversal witness; the factor witness attains the bifix bound".into(),
        )),
    }
}

/// The reversal quotient bound for `class`.
pub fn reversal_bound(class: FreenessClass, n: usize) -> Result<usize> {
    match class {
        FreenessClass::Prefix | FreenessClass::Suffix if n >= 2 => Ok((1 << (n - 2)) + 1),
        FreenessClass::Bifix | FreenessClass::Factor if n >= 3 => Ok((1 << (n - 3)) + 2),
        _ => Err(Error::OutOfRange {
            what: "reversal bound",
            n,
            min: 3,
            max: usize::MAX,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The V family, or the prefix family.
    V,
    W,
    /// The restricted automaton used for reversal.
    Reversal,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "v" | "v_family" | "tight_small" => Ok(Variant::V),
            "w" | "w_family" => Ok(Variant::W),
            "reversal" | "reversal_restricted" | "rev" => Ok(Variant::Reversal),
            _ => Err(Error::Parse(format!(
                "unknown variant `{s}`; expected v, w or reversal"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WitnessSpec {
    pub class: FreenessClass,
    pub n: usize,
    pub variant: Variant,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub spec: WitnessSpec,
    pub dfa: Dfa,
    /// False when `n` is below the range in which the construction is proved
    /// to have the claimed properties.
    pub in_proved_range: bool,
    /// Syntactic complexity the construction is meant to reach.
    pub claimed_complexity: Option<BigUint>,
    /// Quotients of the reverse language the construction is meant to reach.
    pub claimed_reversal: Option<usize>,
}

impl WitnessSpec {
    pub fn new(class: FreenessClass, n: usize, variant: Variant) -> Self {
        WitnessSpec { class, n, variant }
    }

    pub fn build(&self) -> Result<Witness> {
        use FreenessClass::*;
        use Variant::*;
        let n = self.n;
        let (dfa, in_range, claim) = match (self.class, self.variant) {
            (Prefix, V | W) => (witness_prefix(n)?, true, Some(bounds::prefix_bound(n)?)),
            (Suffix, V) => (witness_sf_v(n)?, true, Some(bounds::vsf(n)?)),
            (Suffix, W) => (witness_sf_w(n)?, n >= 6, Some(bounds::wsf(n)?)),
            (Bifix, V) => (witness_bf_v(n)?, true, Some(bounds::vbf(n)?)),
            (Bifix, W) => (witness_bf_w(n)?, true, Some(bounds::wbf(n)?)),
            (Factor, V | W) => (witness_ff(n)?, true, Some(bounds::wff(n)?)),
            (class, Reversal) => {
                let in_range = match class {
                    Suffix => n >= 6,
                    _ => true,
                };
                (reversal_witness(class, n)?, in_range, None)
            }
        };
        let claimed_reversal = match self.variant {
            Reversal => Some(reversal_bound(self.class, n)?),
            _ => None,
        };
        Ok(Witness {
            spec: *self,
            dfa,
            in_proved_range: in_range,
            claimed_complexity: claim,
            claimed_reversal,
        })
    }
}

/// Alphabet size stated for each family.
pub fn claimed_alphabet_size(class: FreenessClass, variant: Variant, n: usize) -> Option<BigUint> {
    let big = |x: usize| BigUint::from(x);
    let pow = |b: usize, e: usize| big(b).pow(e as u32);
    Some(match (class, variant) {
        (FreenessClass::Prefix, Variant::V | Variant::W) => match n {
            2 => BigUint::one(),
            3 => big(2),
            4 => big(4),
            _ => big(n + 1),
        },
        (FreenessClass::Suffix, Variant::V) if n >= 5 => big(n),
        (FreenessClass::Suffix, Variant::W) => big(n + 2),
        (FreenessClass::Bifix, Variant::V) => (1..=n - 2).map(big).product(),
        (FreenessClass::Bifix, Variant::W) => {
            pow(n - 2, n - 3) + big(n - 3) * pow(2, n - 3) + big(2)
        }
        (FreenessClass::Factor, Variant::V | Variant::W) => big(n - 3) * pow(2, n - 3) + big(3),
        (_, Variant::Reversal) => big(if class == FreenessClass::Prefix { 3 } else { 4 }),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(letters: &[(String, Transformation)]) -> Vec<Vec<usize>> {
        letters.iter().map(|(_, t)| t.images()).collect()
    }

    #[test]
    fn small_generator_sets() {
        assert_eq!(
            images(&gen_sf_v(4).unwrap()),
            vec![vec![4, 3, 2, 4], vec![2, 4, 3, 4], vec![2, 3, 4, 4]]
        );
        assert_eq!(
            images(&gen_sf_v(5).unwrap()),
            vec![
                vec![5, 3, 2, 4, 5],
                vec![5, 3, 4, 2, 5],
                vec![2, 5, 3, 4, 5],
                vec![2, 3, 5, 4, 5],
                vec![2, 3, 4, 5, 5]
            ]
        );
        assert_eq!(
            images(&gen_bf_v(4).unwrap()),
            vec![vec![2, 3, 4, 4], vec![3, 2, 4, 4]]
        );
    }

    #[test]
    fn prefix_letters() {
        let g = gen_prefix(6).unwrap();
        let names: Vec<&str> = g.iter().map(|(a, _)| a.as_str()).collect();
        assert_eq!(names, ["a", "b", "c", "d1", "d2", "d3", "d4"]);
        assert_eq!(g[0].1.images(), vec![2, 3, 4, 1, 6, 6]);
        assert_eq!(g[2].1.images(), vec![1, 2, 3, 1, 6, 6]);
        assert_eq!(g[3].1.images(), vec![5, 2, 3, 4, 6, 6]);
        assert_eq!(gen_prefix(4).unwrap().len(), 4);
        assert!(gen_prefix(1).is_err());
    }

    #[test]
    fn alphabet_sizes() {
        let cases = [
            (
                FreenessClass::Bifix,
                Variant::W,
                6,
                gen_bf_w(6).unwrap().len(),
            ),
            (
                FreenessClass::Bifix,
                Variant::W,
                5,
                gen_bf_w(5).unwrap().len(),
            ),
            (
                FreenessClass::Factor,
                Variant::W,
                7,
                gen_ff(7).unwrap().len(),
            ),
            (
                FreenessClass::Suffix,
                Variant::W,
                7,
                gen_sf_w(7).unwrap().len(),
            ),
            (
                FreenessClass::Bifix,
                Variant::V,
                6,
                gen_bf_v(6).unwrap().len(),
            ),
        ];
        for (class, variant, n, len) in cases {
            assert_eq!(
                claimed_alphabet_size(class, variant, n).unwrap(),
                BigUint::from(len),
                "{class} {variant:?} {n}"
            );
        }
        assert_eq!(gen_bf_w(6).unwrap().len(), 90);
        assert_eq!(gen_ff(7).unwrap().len(), 67);
    }

    #[test]
    fn u_sets() {
        assert_eq!(u2_elements(6).len(), 64);
        assert_eq!(u3_elements(6).len(), 24);
        let u3 = u3_elements(5);
        assert!(u3.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn reversal_alphabets() {
        let d = reversal_witness(FreenessClass::Factor, 6).unwrap();
        assert_eq!(d.alphabet(), ["a1", "a2", "a3", "c"]);
        assert_eq!(
            d.transformation("c").unwrap().images(),
            vec![2, 5, 6, 6, 6, 6]
        );
        let d = reversal_witness(FreenessClass::Prefix, 4).unwrap();
        assert_eq!(d.alphabet(), ["b", "c", "d2"]);
        assert!(reversal_witness(FreenessClass::Bifix, 6).is_err());
        assert_eq!(reversal_bound(FreenessClass::Factor, 7).unwrap(), 18);
    }
}
