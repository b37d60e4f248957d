//! End-to-end checks of the headline claims. Each test prints one
//! `PASS`/`FAIL` line and then asserts.

mod common;

use std::time::Instant;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use common::*;
use synsemi::automata::{quotient_count, syntactic_complexity, transition_semigroup, Dfa};
use synsemi::bounds;
use synsemi::cli::run_with;
use synsemi::freeness::{canonical_quotient_dfa, classify_language, FreenessClass};
use synsemi::verify::{compare_with_printed, conflict_pairs, verify_reversal_bound, PairOptions};
use synsemi::witnesses::{gen_bf_v, gen_bf_w, gen_ff, gen_sf_v, gen_sf_w, Variant, WitnessSpec};
use synsemi::Transformation;

fn report(label: &str, failures: &[String], started: Instant) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] {label} ({:.2?})", started.elapsed());
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "{label}: {} failures", failures.len());
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(
        std::iter::once("synsemi").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn formula_tables_match_print() {
    let started = Instant::now();
    let expected: [(u8, &[&str]); 2] = [
        (
            1,
            &[
                "row,n2,n3,n4,n5,n6,status",
                "n^(n-2),1,3,16,125,1296,ok",
                "vsf,1,3,13,73,501,ok",
                "wsf,1,3,11,67,629,ok",
                "bsf,1,3,15,115,1169,ok",
            ],
        ),
        (
            2,
            &[
                "row,n2,n3,n4,n5,n6,status",
                "vbf,1,2,7,34,209,ok",
                "wbf,1,2,7,33,213,ok",
                "wff,1,2,6,25,150,ok",
                "bbf,1,2,7,41,339,ok",
                "bff,1,2,6,31,246,ok",
            ],
        ),
    ];
    let mut failures = Vec::new();
    for (which, lines) in expected {
        let w = which.to_string();
        let (code, out) = cli(&["tables", "--which", &w, "--check"]);
        if code != 0 {
            failures.push(format!("table {which}: exit code {code}"));
        }
        let got: Vec<&str> = out.lines().collect();
        if got != lines {
            failures.push(format!("table {which}: got {got:?}"));
        }
    }
    if started.elapsed().as_secs_f64() > 5.0 {
        failures.push("slower than 5 s".into());
    }
    report(
        "formula tables reproduce the printed rows",
        &failures,
        started,
    );
}

#[test]
fn formulas_equal_brute_force_counts() {
    let started = Instant::now();
    type Formula = fn(usize) -> synsemi::Result<BigUint>;
    let formulas: [(&str, Formula); 8] = [
        ("Bsf", bounds::bsf),
        ("Vsf", bounds::vsf),
        ("Wsf", bounds::wsf),
        ("Bbf", bounds::bbf),
        ("Vbf", bounds::vbf),
        ("Wbf", bounds::wbf),
        ("Bff", bounds::bff),
        ("Wff", bounds::wff),
    ];
    let mut failures = Vec::new();
    for n in 3..=7 {
        let maps: Vec<Map> = all_maps(n).collect();
        for (name, f) in formulas {
            let pred = oracle(name);
            let count = maps.par_iter().filter(|m| pred(m)).count() as u64;
            let value = f(n).unwrap();
            if value != big(count) {
                failures.push(format!("{name}({n}): formula {value}, brute force {count}"));
            }
        }
    }
    report(
        "closed forms equal brute-force counts for n=3..7",
        &failures,
        started,
    );
}

#[test]
fn witnesses_reach_claims() {
    let started = Instant::now();
    let cases: Vec<(FreenessClass, Variant, std::ops::RangeInclusive<usize>)> = vec![
        (FreenessClass::Prefix, Variant::V, 2..=7),
        (FreenessClass::Suffix, Variant::V, 3..=6),
        (FreenessClass::Suffix, Variant::W, 6..=7),
        (FreenessClass::Bifix, Variant::V, 3..=6),
        (FreenessClass::Bifix, Variant::W, 5..=6),
        (FreenessClass::Factor, Variant::W, 5..=7),
    ];
    let mut failures = Vec::new();
    for (class, variant, ns) in cases {
        for n in ns {
            let w = WitnessSpec::new(class, n, variant).build().unwrap();
            let kappa = quotient_count(&w.dfa);
            let sigma = syntactic_complexity(&w.dfa).unwrap();
            let claim = w.claimed_complexity.clone().unwrap();
            let classes = classify_language(&w.dfa);
            if kappa != n {
                failures.push(format!("{class} {variant:?} n={n}: kappa {kappa}"));
            }
            if sigma != claim {
                failures.push(format!(
                    "{class} {variant:?} n={n}: sigma {sigma}, claimed {claim}"
                ));
            }
            if !classes.contains(&class) {
                failures.push(format!("{class} {variant:?} n={n}: classes {classes:?}"));
            }
        }
    }
    report(
        "witness automata reach the claimed complexities",
        &failures,
        started,
    );
}

fn gens(letters: Vec<(String, Transformation)>) -> Vec<Map> {
    letters.iter().map(|(_, t)| to_map(t)).collect()
}

#[test]
fn generated_semigroups_equal_sets() {
    let started = Instant::now();
    type Gen = fn(usize) -> synsemi::Result<Vec<(String, Transformation)>>;
    let cases: [(&str, Gen, &str, std::ops::RangeInclusive<usize>); 5] = [
        ("V suffix", gen_sf_v, "Vsf", 3..=6),
        ("W suffix", gen_sf_w, "Wsf", 6..=6),
        ("V bifix", gen_bf_v, "Vbf", 3..=6),
        ("W bifix", gen_bf_w, "Wbf", 5..=6),
        ("factor", gen_ff, "Wff", 5..=6),
    ];
    let mut failures = Vec::new();
    for (label, gen, set, ns) in cases {
        for n in ns {
            let closed = naive_closure(&gens(gen(n).unwrap()));
            let target = oracle_set(set, n);
            if closed != target {
                failures.push(format!(
                    "{label} n={n}: closure has {} elements, {set} has {}",
                    closed.len(),
                    target.len()
                ));
            }
        }
    }
    report(
        "generated semigroups equal the sets element for element",
        &failures,
        started,
    );
}

#[test]
fn conflict_pair_counts_and_certificates() {
    let started = Instant::now();
    let cases = [
        (FreenessClass::Suffix, 4, 2),
        (FreenessClass::Suffix, 5, 42),
        (FreenessClass::Suffix, 6, 540),
        (FreenessClass::Bifix, 5, 7),
        (FreenessClass::Bifix, 6, 126),
        (FreenessClass::Factor, 5, 6),
        (FreenessClass::Factor, 6, 96),
    ];
    let mut failures = Vec::new();
    for (class, n, count) in cases {
        let r = conflict_pairs(class, n, PairOptions::default()).unwrap();
        if r.difference_size() != count {
            failures.push(format!(
                "{class} n={n}: {} elements, expected {count}",
                r.difference_size()
            ));
        }
        if !r.unmatched.is_empty() {
            failures.push(format!(
                "{class} n={n}: {} elements without a partner",
                r.unmatched.len()
            ));
        }
        // Independent re-check: oracle membership and a naive closure.
        let bound = oracle(r.bound_set.as_str());
        let cand = oracle(r.candidate_set.as_str());
        let bad = r
            .certificates
            .par_iter()
            .filter(|c| {
                let (s, t, w) = (to_map(&c.s), to_map(&c.t), to_map(&c.witness));
                !(bound(&s)
                    && !cand(&s)
                    && cand(&t)
                    && !bound(&w)
                    && naive_closure(&[s, t]).contains(&w))
            })
            .count();
        if bad > 0 {
            failures.push(format!(
                "{class} n={n}: {bad} certificates fail re-validation"
            ));
        }
    }
    // The alternative candidate set for bifix n=6.
    let alt = conflict_pairs(
        FreenessClass::Bifix,
        6,
        PairOptions {
            multiplicity: false,
            candidate: Some("Vbf".parse().unwrap()),
        },
    )
    .unwrap();
    if !alt.all_matched() {
        failures.push(format!(
            "bifix n=6 against Vbf: {} unpaired",
            alt.unmatched.len()
        ));
    }
    println!(
        "    bifix n=6 against Vbf: {} elements, all paired {}",
        alt.difference_size(),
        alt.all_matched()
    );
    if started.elapsed().as_secs() > 300 {
        failures.push("slower than 5 min".into());
    }
    report(
        "conflict-pair counts, every certificate re-validated",
        &failures,
        started,
    );
}

#[test]
fn conflict_pairs_match_printed_tables_in_lex_order() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (class, n) in [(FreenessClass::Bifix, 5), (FreenessClass::Factor, 5)] {
        let r = conflict_pairs(
            class,
            n,
            PairOptions {
                multiplicity: true,
                candidate: None,
            },
        )
        .unwrap();
        let cmp = compare_with_printed(&r).unwrap();
        println!(
            "    {class} n={n}: printed pairs are genuine conflicts {}, partners distinct {}, distinct partners exist {}",
            cmp.all_pairs_conflict,
            cmp.partners_distinct,
            r.matching.is_some()
        );
        if !cmp.same_difference_set {
            failures.push(format!(
                "{class} n={n}: printed elements differ from the difference set"
            ));
        }
        for (s, printed, first) in &cmp.first_hit_differences {
            failures.push(format!(
                "{class} n={n}: {s} printed with {printed}, first lexicographic partner {first}"
            ));
        }
    }
    report(
        "printed pair tables equal the lexicographic first partners",
        &failures,
        started,
    );
}

#[test]
fn tree_counts_match_table() {
    let started = Instant::now();
    let table: [[u64; 7]; 7] = [
        [1, 0, 0, 0, 0, 0, 0],
        [1, 2, 3, 4, 5, 6, 7],
        [1, 2, 9, 40, 205, 1176, 7399],
        [1, 2, 9, 64, 505, 4536, 46249],
        [1, 2, 9, 64, 625, 7056, 89929],
        [1, 2, 9, 64, 625, 7776, 112609],
        [1, 2, 9, 64, 625, 7776, 117649],
    ];
    let mut failures = Vec::new();
    for (h, row) in table.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            let m = k + 1;
            let got = bounds::trees_s(m, h).unwrap();
            if got != big(v) {
                failures.push(format!("S_{m}({h}) = {got}, table {v}"));
            }
            if m <= 6 {
                let b = brute_trees(m, h);
                if big(b) != got {
                    failures.push(format!("S_{m}({h}) = {got}, brute force {b}"));
                }
            }
        }
    }
    report(
        "tree counts: 49 table entries, brute force for m<=6",
        &failures,
        started,
    );
}

#[test]
fn reversal_bounds_met() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cases = [
        (FreenessClass::Prefix, 4..=10, 2),
        (FreenessClass::Suffix, 4..=10, 2),
        (FreenessClass::Factor, 5..=10, 3),
    ];
    for (class, ns, shift) in cases {
        for n in ns {
            let r = verify_reversal_bound(class, n).unwrap();
            let expected = (1usize << (n - shift)) + if shift == 2 { 1 } else { 2 };
            if r.kappa != expected || !r.meets || !r.reverse_deterministic {
                failures.push(format!("{class} n={n}: {r:?}, expected {expected}"));
            }
        }
    }
    if started.elapsed().as_secs() > 30 {
        failures.push("slower than 30 s".into());
    }
    report(
        "reversal witnesses meet the reversal bounds",
        &failures,
        started,
    );
}

fn random_dfa(rng: &mut StdRng) -> Dfa {
    let n = rng.gen_range(2..=6);
    let k = rng.gen_range(1..=3);
    let style = rng.gen_range(0..3);
    let letters = (0..k).map(|a| {
        let images: Vec<usize> = match style {
            // Unrestricted.
            0 => (0..n).map(|_| rng.gen_range(1..=n)).collect(),
            // Initial state unreachable again, last state a sink.
            1 => (0..n)
                .map(|q| if q == n - 1 { n } else { rng.gen_range(2..=n) })
                .collect(),
            // Mostly into the sink.
            _ => (0..n)
                .map(|q| {
                    if q == n - 1 || rng.gen_bool(0.5) {
                        n
                    } else {
                        rng.gen_range(2..=n)
                    }
                })
                .collect(),
        };
        (format!("a{a}"), Transformation::new(images).unwrap())
    });
    let letters: Vec<_> = letters.collect();
    let accepting: Vec<usize> = if style == 0 {
        (1..=n).filter(|_| rng.gen_bool(0.4)).collect()
    } else {
        vec![rng.gen_range(1..n.max(2))]
    };
    Dfa::new(n, letters, 1, accepting).unwrap()
}

#[test]
fn property_suites() {
    let started = Instant::now();
    let mut failures = Vec::new();

    // Nesting of the sets, and which of them are closed under composition.
    for n in 2..=7 {
        let set = |name| oracle_set(name, n);
        let (b, v, w) = (set("Bsf"), set("Vsf"), set("Wsf"));
        let (bb, vb, wb) = (set("Bbf"), set("Vbf"), set("Wbf"));
        let (bf, wf) = (set("Bff"), set("Wff"));
        let v_and_bb: std::collections::BTreeSet<Map> = v.intersection(&bb).cloned().collect();
        let nest = [
            ("Vsf in Bsf", v.is_subset(&b)),
            ("Wsf in Bsf", w.is_subset(&b)),
            ("Vbf = Vsf and Bbf", vb == v_and_bb),
            ("Bbf in Bsf", bb.is_subset(&b)),
            ("Bff in Bbf", bf.is_subset(&bb)),
            ("Wff in Wbf", wf.is_subset(&wb)),
            ("Wbf in Bbf", wb.is_subset(&bb)),
            ("Wff in Bff", wf.is_subset(&bf)),
        ];
        for (what, ok) in nest {
            if !ok {
                failures.push(format!("n={n}: {what} fails"));
            }
        }
        if n > 6 {
            continue;
        }
        let closed = |s: &std::collections::BTreeSet<Map>| {
            let items: Vec<&Map> = s.iter().collect();
            items
                .par_iter()
                .all(|a| items.iter().all(|b| s.contains(&then(a, b))))
        };
        for (name, s) in [
            ("Vsf", &v),
            ("Wsf", &w),
            ("Vbf", &vb),
            ("Wbf", &wb),
            ("Wff", &wf),
        ] {
            if !closed(s) {
                failures.push(format!("n={n}: {name} not closed"));
            }
        }
        for (name, s, from) in [("Bsf", &b, 4), ("Bbf", &bb, 5), ("Bff", &bf, 5)] {
            if n >= from && closed(s) {
                failures.push(format!("n={n}: {name} unexpectedly closed"));
            }
        }
    }
    // The explicit products leaving Bsf and Bbf.
    for n in 4..=7 {
        let mut s1 = vec![n; n];
        s1[0] = 2;
        s1[1] = 3;
        let mut s2 = vec![3; n];
        s2[0] = n;
        s2[n - 1] = n;
        if !(bsf(&s1) && bsf(&s2) && !bsf(&then(&s1, &s2))) {
            failures.push(format!("n={n}: Bsf counterexample does not hold"));
        }
    }

    // Suffix-free languages in a seeded random corpus.
    let mut rng = StdRng::seed_from_u64(0x5eed_f00d);
    let mut suffix_free = 0;
    let mut empty = 0;
    for k in 0..500 {
        let d = random_dfa(&mut rng);
        let classes = classify_language(&d);
        let q = canonical_quotient_dfa(&d);
        // The empty language has one quotient; the bound sets start at two.
        if q.n() == 1 {
            empty += 1;
        } else if classes.contains(&FreenessClass::Suffix) {
            suffix_free += 1;
            let s = transition_semigroup(&q).unwrap();
            if !s.elements().iter().all(|t| bsf(&to_map(t))) {
                failures.push(format!("corpus #{k}: suffix-free but semigroup leaves Bsf"));
            }
        }
        let mut perm: Vec<usize> = (1..=d.n()).collect();
        perm.shuffle(&mut rng);
        let p = d.permute_states(&perm).unwrap();
        if classify_language(&p) != classes {
            failures.push(format!("corpus #{k}: classes change under renumbering"));
        }
    }
    println!("    of 500 random automata, {suffix_free} accept nonempty suffix-free languages, {empty} the empty language");
    if suffix_free == 0 {
        failures.push("corpus has no suffix-free language".into());
    }

    // Beyond the proved range: witnesses still reach the conjectured values
    // and the bounds grow.
    for (class, n) in [
        (FreenessClass::Suffix, 7),
        (FreenessClass::Bifix, 7),
        (FreenessClass::Factor, 7),
    ] {
        let r = bounds::BoundReport::new(class, n).unwrap();
        let prev = bounds::BoundReport::new(class, n - 1).unwrap();
        let conj = r.conjectured.clone().unwrap();
        if conj <= prev.tight.clone().unwrap() {
            failures.push(format!(
                "{class}: conjectured value not increasing at n={n}"
            ));
        }
        let w = WitnessSpec::new(class, n, Variant::W).build().unwrap();
        let sigma = syntactic_complexity(&w.dfa).unwrap();
        if sigma != conj {
            failures.push(format!(
                "{class} n={n}: witness sigma {sigma}, conjectured {conj}"
            ));
        }
    }
    report("property suites", &failures, started);
}
