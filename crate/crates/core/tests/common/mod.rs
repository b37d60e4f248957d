//! Test-side oracles written straight from the set definitions, sharing no
//! code with the library beyond the `Transformation` type.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use synsemi::Transformation;

/// 1-based image list.
pub type Map = Vec<usize>;

pub fn apply(t: &Map, q: usize) -> usize {
    t[q - 1]
}

pub fn then(a: &Map, b: &Map) -> Map {
    a.iter().map(|&q| b[q - 1]).collect()
}

/// `t, t^2, ...` until the first repeated power.
pub fn distinct_powers(t: &Map) -> Vec<Map> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut p = t.clone();
    while seen.insert(p.clone()) {
        out.push(p.clone());
        p = then(&p, t);
    }
    out
}

pub fn bsf(t: &Map) -> bool {
    let n = t.len();
    if n < 2 || t.contains(&1) || apply(t, n) != n {
        return false;
    }
    distinct_powers(t).iter().all(|p| {
        let first = apply(p, 1);
        first == n || (2..n).all(|i| apply(p, i) != first)
    })
}

pub fn vsf(t: &Map) -> bool {
    let n = t.len();
    bsf(t)
        && (1..=n)
            .all(|i| (1..=n).all(|j| i == j || apply(t, i) != apply(t, j) || apply(t, i) == n))
}

pub fn wsf(t: &Map) -> bool {
    let n = t.len();
    bsf(t) && (apply(t, 1) == n || (2..n).all(|i| apply(t, i) == n))
}

pub fn bbf(t: &Map) -> bool {
    let n = t.len();
    n >= 2 && bsf(t) && apply(t, n - 1) == n
}

pub fn vbf(t: &Map) -> bool {
    vsf(t) && bbf(t)
}

pub fn u1(t: &Map) -> bool {
    bbf(t) && apply(t, 1) == t.len()
}

pub fn u2(t: &Map) -> bool {
    bbf(t) && apply(t, 1) == t.len() - 1
}

pub fn u3(t: &Map) -> bool {
    let n = t.len();
    bbf(t) && apply(t, 1) < n - 1 && (2..=n).all(|i| apply(t, i) >= n - 1)
}

pub fn wbf(t: &Map) -> bool {
    u1(t) || u2(t) || u3(t)
}

pub fn bff(t: &Map) -> bool {
    let n = t.len();
    bbf(t)
        && distinct_powers(t)
            .iter()
            .all(|p| apply(p, 1) != n - 1 || (2..n - 1).all(|i| apply(p, i) == n))
}

pub fn wff(t: &Map) -> bool {
    let n = t.len();
    let mut t0 = vec![n; n];
    t0[0] = n - 1;
    // At n = 2, t0 = [1,2] has 1 in its range and lies outside Bbf.
    u1(t) || (n >= 3 && *t == t0) || u3(t)
}

pub fn oracle(name: &str) -> fn(&Map) -> bool {
    match name {
        "Bsf" => bsf,
        "Vsf" => vsf,
        "Wsf" => wsf,
        "Bbf" => bbf,
        "Vbf" => vbf,
        "Wbf" => wbf,
        "Bff" => bff,
        "Wff" => wff,
        "U1" => u1,
        "U2" => u2,
        "U3" => u3,
        _ => panic!("no oracle for {name}"),
    }
}

/// Every map of degree `n`, in lexicographic order.
pub fn all_maps(n: usize) -> impl Iterator<Item = Map> {
    let total = n.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut m = vec![0; n];
        for slot in m.iter_mut().rev() {
            *slot = k % n + 1;
            k /= n;
        }
        m
    })
}

pub fn oracle_set(name: &str, n: usize) -> BTreeSet<Map> {
    let f = oracle(name);
    all_maps(n).filter(f).collect()
}

/// Closure by repeated squaring of the whole set until nothing new appears.
pub fn naive_closure(gens: &[Map]) -> BTreeSet<Map> {
    let mut set: BTreeSet<Map> = gens.iter().cloned().collect();
    loop {
        let items: Vec<Map> = set.iter().cloned().collect();
        let before = set.len();
        for a in &items {
            for b in &items {
                set.insert(then(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

pub fn to_map(t: &Transformation) -> Map {
    t.images()
}

pub fn to_t(m: &Map) -> Transformation {
    Transformation::new(m.iter().copied()).unwrap()
}

/// Labelled trees on `m` nodes with height at most `h`, by trying every root
/// and every parent choice.
pub fn brute_trees(m: usize, h: usize) -> u64 {
    if m == 0 {
        return 0;
    }
    let mut count = 0;
    for root in 0..m {
        let others: Vec<usize> = (0..m).filter(|&v| v != root).collect();
        let total = m.pow(others.len() as u32);
        for mut code in 0..total {
            let mut parent = vec![usize::MAX; m];
            for &v in &others {
                parent[v] = code % m;
                code /= m;
            }
            let ok = others.iter().all(|&v| {
                let mut x = v;
                let mut depth = 0;
                while x != root {
                    x = parent[x];
                    depth += 1;
                    if depth > h || depth > m {
                        return false;
                    }
                }
                true
            });
            count += u64::from(ok);
        }
    }
    count
}

/// Words over `k` letters of length at most `len`, shortest first.
pub fn words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
