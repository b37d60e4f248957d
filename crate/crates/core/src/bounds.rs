//! Exact values of the counting formulas for the B, V and W sets, the
//! prefix-free bound, and the height-bounded tree counts `S_m(h)` they use.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freeness::FreenessClass;

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

fn pow(base: usize, exp: usize) -> BigUint {
    big(base).pow(exp as u32)
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * big(i))
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * big(n - i) / big(i + 1))
}

fn require(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange {
            what,
            n,
            min,
            max: usize::MAX,
        });
    }
    Ok(())
}

/// `S_m(h)` for all `m <= max_m` and `h <= max_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCountTable {
    /// `values[h][m]`, with `m = 0` unused.
    values: Vec<Vec<BigUint>>,
}

impl TreeCountTable {
    pub fn new(max_m: usize, max_h: usize) -> Self {
        let mut values: Vec<Vec<BigUint>> = Vec::with_capacity(max_h + 1);
        // Height 0: a lone root.
        let mut t: Vec<BigUint> = (0..=max_m).map(|m| big(usize::from(m == 1))).collect();
        values.push(t.clone());
        for _ in 1..=max_h {
            // Forests of trees with height at most h - 1 on k labelled nodes.
            let mut f = vec![BigUint::zero(); max_m + 1];
            f[0] = BigUint::one();
            for k in 1..=max_m {
                f[k] = (1..=k)
                    .map(|j| binomial(k - 1, j - 1) * &t[j] * &f[k - j])
                    .sum();
            }
            t = (0..=max_m)
                .map(|m| {
                    if m == 0 {
                        BigUint::zero()
                    } else {
                        big(m) * &f[m - 1]
                    }
                })
                .collect();
            values.push(t.clone());
        }
        TreeCountTable { values }
    }

    pub fn max_m(&self) -> usize {
        self.values[0].len() - 1
    }

    pub fn max_h(&self) -> usize {
        self.values.len() - 1
    }

    /// `S_m(h)`. Heights beyond the table are clamped, which is exact when
    /// the table reaches `m - 1` since `S_m(h)` is constant from there on.
    pub fn get(&self, m: usize, h: usize) -> &BigUint {
        let h = h.min(self.max_h());
        &self.values[h][m]
    }

    pub fn rooted(&self, m: usize, h: usize) -> BigUint {
        let s = self.get(m, h);
        debug_assert!((s % big(m)).is_zero());
        s / big(m)
    }
}

/// Labelled rooted trees on `m` nodes with height at most `h`.
pub fn trees_s(m: usize, h: usize) -> Result<BigUint> {
    require("trees_s", m, 1)?;
    let h = h.min(m - 1);
    Ok(TreeCountTable::new(m, h).get(m, h).clone())
}

/// `S_m(h) / m`: such trees with a fixed root.
pub fn trees_s_rooted(m: usize, h: usize) -> Result<BigUint> {
    let s = trees_s(m, h)?;
    assert!((&s % big(m)).is_zero(), "S_m(h) is divisible by m");
    Ok(s / big(m))
}

/// Sum over tuples `(r_1, ..., r_p)` of nonnegative integers with the given
/// total of `multinomial(total; r) * w(1, r_1) * ... * w(p, r_p)`.
fn composition_sum(total: usize, parts: usize, w: &dyn Fn(usize, usize) -> BigUint) -> BigUint {
    // g[rem]: sum over the remaining parts i..=parts.
    let mut g: Vec<BigUint> = (0..=total).map(|rem| w(parts, rem)).collect();
    for i in (1..parts).rev() {
        g = (0..=total)
            .map(|rem| {
                (0..=rem)
                    .map(|x| binomial(rem, x) * w(i, x) * &g[rem - x])
                    .sum()
            })
            .collect();
    }
    g.swap_remove(total)
}

/// One summand shape shared by every B-set formula: trees at positions
/// `2..=k` with heights `j - 1`, and a last part weighted by `last`.
fn principal_sum(
    table: &TreeCountTable,
    k: usize,
    total: usize,
    last: &dyn Fn(usize) -> BigUint,
) -> BigUint {
    // Parts 1..k-1 are r_2..r_k; part k is r.
    let w = |i: usize, r: usize| {
        if i == k {
            last(r)
        } else {
            let j = i + 1;
            table.rooted(r + 1, j - 1)
        }
    };
    composition_sum(total, k.max(1), &|i, r| {
        if k == 0 {
            last(r)
        } else {
            w(i, r)
        }
    })
}

fn tree_table(n: usize) -> TreeCountTable {
    TreeCountTable::new(n.max(1), n.max(1))
}

/// `|B_sf(n)|`.
pub fn bsf(n: usize) -> Result<BigUint> {
    require("bsf", n, 2)?;
    let table = tree_table(n);
    Ok((0..=n - 2)
        .map(|k| {
            binomial(n - 2, k)
                * factorial(k)
                * principal_sum(&table, k, n - k - 2, &|r| pow(r + 1, r))
        })
        .sum())
}

/// The part of `|B_bf(n)|` with `1t = n - 1` reachable on the principal
/// sequence.
pub fn mn(n: usize) -> Result<BigUint> {
    require("Mn", n, 2)?;
    let table = tree_table(n);
    Ok((1..=n.saturating_sub(2))
        .map(|k| {
            binomial(n - 3, k - 1)
                * factorial(k - 1)
                * principal_sum(&table, k, n - k - 2, &|r| pow(r + 1, r))
        })
        .sum())
}

pub fn nn(n: usize) -> Result<BigUint> {
    require("Nn", n, 2)?;
    let table = tree_table(n);
    Ok((0..=n.saturating_sub(3))
        .filter(|_| n >= 3)
        .map(|k| {
            binomial(n - 3, k)
                * factorial(k)
                * principal_sum(&table, k, n - k - 3, &|r| pow(r + 2, r))
        })
        .sum())
}

/// `|B_bf(n)| = M_n + N_n`; the sum is 0 at `n = 2`, where the set is `{[2,2]}`.
pub fn bbf(n: usize) -> Result<BigUint> {
    if n == 2 {
        return Ok(BigUint::one());
    }
    Ok(mn(n)? + nn(n)?)
}

pub fn on(n: usize) -> Result<BigUint> {
    require("On", n, 2)?;
    let table = tree_table(n);
    let sum: BigUint = (2..=n.saturating_sub(2))
        .map(|k| {
            binomial(n - 3, k - 1)
                * factorial(k - 1)
                * principal_sum(&table, k, n - k - 2, &|r| table.rooted(r + 1, k))
        })
        .sum();
    Ok(BigUint::one() + sum)
}

/// `|B_ff(n)| = N_n + O_n`.
pub fn bff(n: usize) -> Result<BigUint> {
    Ok(nn(n)? + on(n)?)
}

pub fn vsf(n: usize) -> Result<BigUint> {
    require("vsf", n, 2)?;
    Ok((1..n)
        .map(|k| binomial(n - 1, k) * factorial(n - 1 - k) * binomial(n - 2, n - 1 - k))
        .sum())
}

pub fn wsf(n: usize) -> Result<BigUint> {
    require("wsf", n, 2)?;
    Ok(pow(n - 1, n - 2) + big(n - 2))
}

pub fn vbf(n: usize) -> Result<BigUint> {
    require("vbf", n, 2)?;
    Ok((0..=n - 2)
        .map(|k| binomial(n - 2, k).pow(2) * factorial(n - 2 - k))
        .sum())
}

pub fn wbf(n: usize) -> Result<BigUint> {
    require("wbf", n, 2)?;
    if n == 2 {
        return Ok(BigUint::one());
    }
    Ok(pow(n - 1, n - 3) + pow(n - 2, n - 3) + big(n - 3) * pow(2, n - 3))
}

pub fn wff(n: usize) -> Result<BigUint> {
    require("wff", n, 2)?;
    if n == 2 {
        return Ok(BigUint::one());
    }
    Ok(pow(n - 1, n - 3) + big(n - 3) * pow(2, n - 3) + BigUint::one())
}

/// `n^(n-2)`.
pub fn prefix_bound(n: usize) -> Result<BigUint> {
    require("prefix_bound", n, 2)?;
    Ok(pow(n, n - 2))
}

/// `n - 1`, for unary prefix-free languages.
pub fn unary_bound(n: usize) -> Result<BigUint> {
    require("unary_bound", n, 2)?;
    Ok(big(n - 1))
}

/// Every formula for `class`, with the proved-tight and conjectured values
/// singled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub class: FreenessClass,
    pub n: usize,
    #[serde(serialize_with = "ser_opt")]
    pub tight: Option<BigUint>,
    #[serde(serialize_with = "ser_opt")]
    pub conjectured: Option<BigUint>,
    #[serde(serialize_with = "ser_big")]
    pub weak: BigUint,
    pub formula_names: Vec<String>,
    #[serde(serialize_with = "ser_values")]
    pub values: Vec<(String, BigUint)>,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_opt<S: serde::Serializer>(
    x: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_values<S: serde::Serializer>(
    v: &[(String, BigUint)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        map.serialize_entry(k, &x.to_string())?;
    }
    map.end()
}

impl BoundReport {
    pub fn new(class: FreenessClass, n: usize) -> Result<Self> {
        require("bound report", n, 2)?;
        let named = |pairs: Vec<(&str, BigUint)>| {
            pairs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect::<Vec<_>>()
        };
        let (tight, conjectured, weak, values) = match class {
            FreenessClass::Prefix => {
                let p = prefix_bound(n)?;
                (
                    Some(p.clone()),
                    None,
                    p.clone(),
                    named(vec![("n^(n-2)", p), ("unary", unary_bound(n)?)]),
                )
            }
            FreenessClass::Suffix => {
                let (v, w, b) = (vsf(n)?, wsf(n)?, bsf(n)?);
                let (tight, conj) = match n {
                    ..=5 => (Some(v.clone()), None),
                    6 => (Some(w.clone()), None),
                    _ => (None, Some(w.clone())),
                };
                (
                    tight,
                    conj,
                    b.clone(),
                    named(vec![("vsf", v), ("wsf", w), ("bsf", b)]),
                )
            }
            FreenessClass::Bifix => {
                let (v, w, b) = (vbf(n)?, wbf(n)?, bbf(n)?);
                let (tight, conj) = match n {
                    ..=5 => (Some(v.clone()), None),
                    6 => (Some(w.clone()), None),
                    _ => (None, Some(w.clone())),
                };
                let mut values = named(vec![("vbf", v), ("wbf", w), ("bbf", b.clone())]);
                if n >= 3 {
                    values.push(("Mn".into(), mn(n)?));
                    values.push(("Nn".into(), nn(n)?));
                }
                (tight, conj, b, values)
            }
            FreenessClass::Factor => {
                let (w, b) = (wff(n)?, bff(n)?);
                let (tight, conj) = match n {
                    ..=4 => (Some(b.clone()), None),
                    5 | 6 => (Some(w.clone()), None),
                    _ => (None, Some(w.clone())),
                };
                let mut values = named(vec![("wff", w), ("bff", b.clone())]);
                if n >= 3 {
                    values.push(("Nn".into(), nn(n)?));
                    values.push(("On".into(), on(n)?));
                }
                (tight, conj, b, values)
            }
        };
        Ok(BoundReport {
            class,
            n,
            tight,
            conjectured,
            weak,
            formula_names: values.iter().map(|(k, _)| k.clone()).collect(),
            values,
        })
    }

    pub fn value(&self, name: &str) -> Option<&BigUint> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(f: fn(usize) -> Result<BigUint>, ns: std::ops::RangeInclusive<usize>) -> Vec<u64> {
        ns.map(|n| u64::try_from(f(n).unwrap()).unwrap()).collect()
    }

    #[test]
    fn tree_counts() {
        let s = |m, h| u64::try_from(trees_s(m, h).unwrap()).unwrap();
        assert_eq!(s(4, 2), 40);
        assert_eq!(s(7, 2), 7399);
        assert_eq!(s(5, 3), 505);
        assert_eq!(s(1, 0), 1);
        assert_eq!(s(2, 0), 0);
        assert_eq!(s(6, 5), 7776);
        assert_eq!(s(6, 50), 7776);
        let r = |m, h| u64::try_from(trees_s_rooted(m, h).unwrap()).unwrap();
        assert_eq!(r(4, 2), 10);
        assert_eq!(r(3, 1), 1);
        assert_eq!(r(1, 0), 1);
        assert!(trees_s(0, 0).is_err());
    }

    #[test]
    fn table_rows() {
        assert_eq!(vals(prefix_bound, 2..=6), [1, 3, 16, 125, 1296]);
        assert_eq!(vals(vsf, 2..=6), [1, 3, 13, 73, 501]);
        assert_eq!(vals(wsf, 2..=7), [1, 3, 11, 67, 629, 7781]);
        assert_eq!(vals(bsf, 2..=6), [1, 3, 15, 115, 1169]);
        assert_eq!(vals(vbf, 2..=6), [1, 2, 7, 34, 209]);
        assert_eq!(vals(wbf, 2..=6), [1, 2, 7, 33, 213]);
        assert_eq!(vals(wff, 2..=6), [1, 2, 6, 25, 150]);
        assert_eq!(vals(bbf, 2..=6), [1, 2, 7, 41, 339]);
        assert_eq!(vals(bff, 2..=6), [1, 2, 6, 31, 246]);
        assert_eq!(u64::try_from(unary_bound(2).unwrap()).unwrap(), 1);
    }

    #[test]
    fn reports() {
        let r = BoundReport::new(FreenessClass::Suffix, 6).unwrap();
        assert_eq!(r.tight, Some(big(629)));
        assert_eq!(r.weak, big(1169));
        let r = BoundReport::new(FreenessClass::Factor, 7).unwrap();
        assert_eq!(r.tight, None);
        assert!(r.conjectured.as_ref().unwrap() <= &r.weak);
        assert_eq!(r.value("bff"), Some(&r.weak));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["class"], "factor");
        assert!(BoundReport::new(FreenessClass::Prefix, 1).is_err());
    }
}
