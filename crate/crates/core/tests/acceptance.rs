//! Acceptance suite: one test per criterion, each printing a final
//! PASS line (run with `cargo test --test acceptance -- --nocapture`
//! to see them).

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::{naive_scheme_check, random_translation_partition, NaiveOutcome};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use wdr_core::classifier::{classify_with, verify_theorem2_with, ClassifyOptions};
use wdr_core::constructions::{
    circuit, cyclotomic_match, cyclotomic_scheme, is_prime, paley_digraph, ConnectionSet,
};
use wdr_core::digraph::Digraph;
use wdr_core::scheme::{attached_scheme, from_partition};
use wdr_core::spectra::eigenmatrix;
use wdr_core::theorems::{
    circuit_lemma_check, find_theorem1_assignments, skew_feasibility_scan, CircuitLemmaVerdict,
    Family,
};

fn sequential() -> ClassifyOptions {
    ClassifyOptions { jobs: Some(1) }
}

#[test]
fn acceptance_1_cyc13_reproduction() {
    let t0 = Instant::now();

    let g = Digraph::cayley(13, &[1, 3, 9]).unwrap();
    let s = attached_scheme(&g).expect("Cay(Z_13, {1,3,9}) is weakly distance-regular");
    assert_eq!(s.d(), 4);
    let mut sizes = s.valencies().to_vec();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 3, 3, 3, 3]);

    // the tensor values under every labelling that satisfies the
    // 4-class theorem's hypotheses
    let assignments = find_theorem1_assignments(&s);
    assert!(!assignments.is_empty(), "a satisfying (r1, r2) must exist");
    for rep in &assignments {
        assert!(rep.concludes_d4(), "conclusion d = 4");
        let (r1, r2) = (rep.r1, rep.r2);
        let r1s = s.involution(r1);
        assert_eq!(s.p(r1, r1, r1s), 2, "p_(1,1)^(1*) = k - 1");
        assert_eq!(s.p(r1, r1, r2), 1, "p_(1,1)^2 = 1");
        assert_eq!(s.p(r1, r1s, r2), 1, "p_(1,1*)^2 = (k - 1) / 2");
    }

    assert!(s.is_skew_symmetric());
    assert!(s.is_primitive());
    let report = s.report();
    assert_eq!(report.pseudocyclic, Some(true));
    assert_eq!(report.multiplicities, Some(vec![1, 3, 3, 3, 3]));
    assert_eq!(cyclotomic_match(13, s.partition()).unwrap(), Some(4));

    assert!(
        t0.elapsed() < Duration::from_secs(1),
        "criterion 1 must run in under a second"
    );
    println!("ACCEPTANCE 1 (Cyc(13,4) reproduction): PASS");
}

#[test]
fn acceptance_2_census_up_to_23() {
    let t0 = Instant::now();
    let verdict = verify_theorem2_with(3, 19, &sequential()).unwrap();
    assert!(verdict.pass, "discrepancies: {:?}", verdict.discrepancies);
    let small = t0.elapsed();
    assert!(
        small <= Duration::from_secs(60),
        "p <= 19 census took {small:?}, budget 60 s"
    );

    let t1 = Instant::now();
    let verdict23 = verify_theorem2_with(23, 23, &sequential()).unwrap();
    assert!(verdict23.pass, "discrepancies: {:?}", verdict23.discrepancies);
    let big = t1.elapsed();
    assert!(
        big <= Duration::from_secs(300),
        "p = 23 census took {big:?}, budget 5 min"
    );

    // hits are exactly {circuit} ∪ {Paley iff p ≡ 3 mod 4} ∪ {Cay13 iff p = 13}
    for entry in verdict.primes.iter().chain(verdict23.primes.iter()) {
        let p = entry.p;
        let families: Vec<Option<Family>> =
            entry.result.hits.iter().map(|h| h.family).collect();
        let mut expected = vec![Some(Family::Circuit)];
        if p % 4 == 3 && p > 3 {
            expected.push(Some(Family::Paley));
        }
        if p == 13 {
            expected.push(Some(Family::Cay13));
        }
        assert_eq!(families, expected, "family census at p = {p}");
        assert!(entry.result.imprimitive_wdr.is_empty());
    }
    assert_eq!(
        verdict.primes.iter().map(|e| e.p).collect::<Vec<_>>(),
        vec![3, 5, 7, 11, 13, 17, 19]
    );

    println!(
        "ACCEPTANCE 2 (census 3..=23: p<=19 in {small:?}, p=23 in {big:?}): PASS"
    );
}

/// Opt-in stretch census: `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore]
fn acceptance_2_stretch_29_31() {
    let t0 = Instant::now();
    let verdict = verify_theorem2_with(29, 31, &ClassifyOptions::default()).unwrap();
    assert!(verdict.pass, "discrepancies: {:?}", verdict.discrepancies);
    let elapsed = t0.elapsed();
    assert!(
        elapsed <= Duration::from_secs(30 * 60),
        "stretch census took {elapsed:?}, budget 30 min"
    );
    for entry in &verdict.primes {
        let want = if entry.p % 4 == 3 { 2 } else { 1 };
        assert_eq!(entry.result.hits.len(), want, "hits at p = {}", entry.p);
    }
    println!("ACCEPTANCE 2-stretch (census 29..=31 in {elapsed:?}): PASS");
}

#[test]
fn acceptance_3_skew_feasibility() {
    let t0 = Instant::now();
    let witnesses = skew_feasibility_scan(10_000);
    let elapsed = t0.elapsed();

    let feasible: Vec<u64> = witnesses.iter().map(|w| w.n).collect();
    assert_eq!(feasible, vec![13]);
    let w = witnesses[0];
    assert_eq!(w.u, -3, "witness u");
    assert_eq!(w.v.abs(), 1, "witness v = ±1");
    assert!(elapsed < Duration::from_secs(1), "scan took {elapsed:?}");

    println!("ACCEPTANCE 3 (size-13 feasibility scan, witness (-3, ±1)): PASS");
}

#[test]
fn acceptance_4_paley_family() {
    for p in [3usize, 7, 11, 19, 23] {
        let digraph = paley_digraph(p).unwrap();
        let scheme = attached_scheme(&digraph)
            .unwrap_or_else(|e| panic!("Paley({p}) must be weakly distance-regular: {e}"));
        let cyc = cyclotomic_scheme(p, 2).unwrap();
        assert!(
            scheme.partition().same_partition(cyc.partition()),
            "attached partition of Paley({p}) must equal Cyc({p}, 2)"
        );
    }
    println!("ACCEPTANCE 4 (Paley attached schemes equal Cyc(p,2)): PASS");
}

#[test]
fn acceptance_5_circuit_family() {
    for p in [3usize, 5, 7, 11, 13] {
        let g = circuit(p).unwrap();
        let s = attached_scheme(&g).unwrap();
        assert_eq!(s.d(), p - 1, "group scheme at p = {p}");
        assert!(s.valencies().iter().all(|&k| k == 1));
        assert!(s.is_primitive(), "circuit({p}) is primitive");
        let report = s.report();
        assert_eq!(report.pseudocyclic, Some(true));
        assert_eq!(report.multiplicities, Some(vec![1; p]));
    }

    // circuit(6) is weakly distance-regular but imprimitive: the class of
    // difference 2 closes up on the subgroup {0, 2, 4}
    let g = circuit(6).unwrap();
    let s = attached_scheme(&g).unwrap();
    assert!(!s.is_primitive());
    let two = s.partition().class_of(0, 2);
    let closure = s.closure(&BTreeSet::from([two])).unwrap();
    assert!(closure.len() < s.d() + 1, "closure must be proper");
    let expected: BTreeSet<usize> =
        [0, s.partition().class_of(0, 2), s.partition().class_of(0, 4)].into();
    assert_eq!(closure, expected);

    println!("ACCEPTANCE 5 (circuit family: group schemes, circuit(6) imprimitive): PASS");
}

#[test]
fn acceptance_6_identity_suite() {
    let cases: Vec<(usize, usize)> = (3..100)
        .filter(|&p| is_prime(p))
        .flat_map(|p| (1..p).filter(move |d| (p - 1) % d == 0).map(move |d| (p, d)))
        .collect();
    assert!(cases.len() > 50, "the sweep covers the whole family");

    cases.par_iter().for_each(|&(p, d)| {
        let s = cyclotomic_scheme(p, d).unwrap();
        let identities = s.verify_intersection_identities();
        assert!(
            identities.passed(),
            "identities fail on Cyc({p},{d}): {:?}",
            identities.violation
        );
        let classes = s.partition().difference_classes().unwrap();
        let eig = eigenmatrix(p, &classes).unwrap();
        let mults = eig.multiplicities();
        assert_eq!(mults.iter().sum::<usize>(), p, "Σm = p on Cyc({p},{d})");
        assert_eq!(eig.dual_classes().len(), d + 1, "d+1 dual classes");
    });

    // single-entry mutations are detected
    let s = cyclotomic_scheme(13, 4).unwrap();
    for (i, j, l) in [(1, 1, 2), (2, 3, 1), (0, 1, 1), (4, 4, 0)] {
        let broken = s.with_tensor_entry(i, j, l, s.p(i, j, l) as u32 + 1);
        assert!(
            broken.verify_intersection_identities().violation.is_some(),
            "perturbing p_({i},{j})^({l}) must be detected"
        );
    }

    println!(
        "ACCEPTANCE 6 (identity suite over {} cyclotomic schemes, mutations detected): PASS",
        cases.len()
    );
}

#[test]
fn acceptance_7_oracle_equivalence() {
    // (a) the verifier against a naive triple loop on random translation
    // partitions
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    let mut accepted = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let partition = random_translation_partition(&mut rng, n);
        let fast = from_partition(partition.clone());
        match naive_scheme_check(&partition) {
            NaiveOutcome::Scheme { involution, tensor } => {
                let s = fast.expect("oracle accepts, verifier must accept");
                accepted += 1;
                let got_inv: Vec<usize> = (0..=s.d()).map(|i| s.involution(i)).collect();
                assert_eq!(got_inv, involution);
                for (i, plane) in tensor.iter().enumerate() {
                    for (j, row) in plane.iter().enumerate() {
                        for (l, &want) in row.iter().enumerate() {
                            assert_eq!(s.p(i, j, l), want, "tensor at ({i},{j},{l})");
                        }
                    }
                }
            }
            NaiveOutcome::CountFailure { i, j, l } => match fast {
                Err(wdr_core::Error::NonConstantIntersection {
                    i: fi, j: fj, l: fl, ..
                }) => assert_eq!((fi, fj, fl), (i, j, l), "violation triple"),
                other => panic!("oracle rejects at ({i},{j},{l}), verifier said {other:?}"),
            },
            NaiveOutcome::TransposeFailure { class, .. } => match fast {
                Err(wdr_core::Error::TransposeNotAClass { class: fc, .. }) => {
                    assert_eq!(fc, class)
                }
                other => panic!("oracle rejects transpose of {class}, verifier said {other:?}"),
            },
        }
    }
    assert!(accepted > 0, "some random partitions must be schemes");

    // (b) the pruned census against an unpruned full-subset brute force
    for p in [3usize, 5, 7] {
        let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
        for raw in 1u64..(1 << (p - 1)) {
            let set: Vec<usize> = (1..p).filter(|&c| raw >> (c - 1) & 1 == 1).collect();
            let g = Digraph::cayley(p, &set).unwrap();
            if let Ok(s) = attached_scheme(&g) {
                if s.is_primitive() {
                    let canon = ConnectionSet::new(p, &set)
                        .unwrap()
                        .canonical_form()
                        .unwrap();
                    brute.insert(canon.elems().to_vec());
                }
            }
        }
        let census = classify_with(p, &sequential()).unwrap();
        let fast: BTreeSet<Vec<usize>> = census
            .hits
            .iter()
            .map(|h| h.connection_set.clone())
            .collect();
        assert_eq!(fast, brute, "census vs brute force at p = {p}");
    }

    println!("ACCEPTANCE 7 (oracle equivalence: 200 partitions, brute-force census p<=7): PASS");
}

#[test]
fn acceptance_8_circuit_regularity() {
    for p in [5usize, 7, 11] {
        let g = circuit(p).unwrap();
        match circuit_lemma_check(&g, p).unwrap() {
            CircuitLemmaVerdict::Pass {
                circuits_checked,
                truncated,
            } => {
                assert_eq!(circuits_checked, p as u64);
                assert!(!truncated);
            }
            other => panic!("circuit({p}) with q = {p}: expected Pass, got {other:?}"),
        }
    }

    let g = Digraph::cayley(13, &[1, 3, 9]).unwrap();
    match circuit_lemma_check(&g, 4).unwrap() {
        CircuitLemmaVerdict::NotApplicable { .. } => {}
        other => panic!("Cay(Z_13, {{1,3,9}}) with q = 4: expected NotApplicable, got {other:?}"),
    }

    println!("ACCEPTANCE 8 (circuit midpoint equalities): PASS");
}
