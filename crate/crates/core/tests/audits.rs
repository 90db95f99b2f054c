use std::sync::Arc;

use shy_core::constructions::{interval, simple_closed_curve, three_branch_tree};
use shy_core::verification::corpus::{corpus_up_to, standard_corpus};
use shy_core::verification::{enumerate_maps, EnumerationSpec, MapFilter, Suite, Verifier};
use shy_core::DigitalImage;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn shy_count(x: &Arc<DigitalImage>, y: &Arc<DigitalImage>) -> usize {
    enumerate_maps(&EnumerationSpec::new(x.clone(), y.clone(), MapFilter::Shy))
        .unwrap()
        .count()
}

#[test]
fn filtered_enumeration_matches_brute_force() {
    let images = corpus_up_to(6);
    for x in &images {
        for y in &images {
            let all: Vec<_> = enumerate_maps(&EnumerationSpec::new(x.clone(), y.clone(), MapFilter::All))
                .unwrap()
                .collect();
            assert_eq!(all.len() as u128, shy_core::verification::candidate_count(x.len(), y.len()));
            let values = |filter| -> Vec<Vec<usize>> {
                enumerate_maps(&EnumerationSpec::new(x.clone(), y.clone(), filter))
                    .unwrap()
                    .map(|f| f.values().to_vec())
                    .collect()
            };
            let keep = |pred: &dyn Fn(&shy_core::DigitalFunction) -> bool| -> Vec<Vec<usize>> {
                all.iter().filter(|f| pred(f)).map(|f| f.values().to_vec()).collect()
            };
            assert_eq!(values(MapFilter::Continuous), keep(&|f| f.is_continuous()));
            assert_eq!(
                values(MapFilter::ContinuousSurjections),
                keep(&|f| f.is_continuous() && f.is_surjective())
            );
            assert_eq!(values(MapFilter::Shy), keep(&|f| f.is_shy()));
        }
    }
}

#[test]
fn monotone_surjection_counts() {
    // Monotone continuous surjections [0,n] -> [0,k], k >= 1: choose the k
    // step positions among n edges, times two directions.
    for (n, k) in [(1, 1), (3, 1), (4, 2), (5, 3), (6, 2)] {
        let x = Arc::new(interval(0, n).unwrap());
        let y = Arc::new(interval(0, k).unwrap());
        assert_eq!(shy_count(&x, &y) as u64, 2 * binomial(n as u64, k as u64), "[0,{n}] -> [0,{k}]");
    }
    assert_eq!(2 * binomial(4, 2), 12);
    assert_eq!(2 * binomial(5, 3), 20);
}

#[test]
fn cycles_onto_two_points() {
    // Shy maps from an m-cycle onto [0,1] cut it into two arcs: m(m-1) of them.
    let y = Arc::new(interval(0, 1).unwrap());
    for m in [4usize, 5, 6, 8] {
        let c = Arc::new(simple_closed_curve(m).unwrap());
        assert_eq!(shy_count(&c, &y), m * (m - 1));
    }
}

#[test]
fn default_suites_pass_without_vacuity() {
    let v = Verifier::default();
    for suite in Suite::ALL {
        let r = v.run_suite(suite).unwrap();
        assert!(r.passed, "{}: {:?}", r.theorem_id, r.counterexamples.first());
        assert!(r.instances_checked > 0, "{}", r.theorem_id);
        assert_eq!(r.theorem_id, suite.name());
    }
}

#[test]
fn reports_are_deterministic() {
    let v = Verifier::default();
    let strip = |r: shy_core::verification::VerificationReport| (r.theorem_id, r.instances_checked, r.passed, r.counterexamples);
    let images = standard_corpus();
    assert_eq!(strip(v.isomorphism_laws(&images).unwrap()), strip(v.isomorphism_laws(&images).unwrap()));
    let tree = three_branch_tree();
    assert_eq!(strip(v.cut_vertex_bound(&tree, 2).unwrap()), strip(v.cut_vertex_bound(&tree, 2).unwrap()));
}

#[test]
fn small_bounds_are_enforced() {
    let v = Verifier::new(10);
    assert!(v.monotone_characterization(4, 2).is_err());
    assert!(v.scc_image_bound(8, 3).is_err());
}
