//! Exhaustive comparisons against the naive reference implementations.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use vmr::classifier::{classify_one, Classifier, ClassifyOptions, Phase};
use vmr::generator::{generate_all, generate_connected};
use vmr::invariants::{char_poly, has_independent_set, independence_number};
use vmr::orbit::{beta, beta_disconnected, enumerate_orbit};
use vmr::{canonical_form, decode, encode, Graph, EXTREMAL_CODES};

fn labeled(n: usize) -> Vec<Graph> {
    all_labeled(n).map(|r| r.to_graph()).collect()
}

#[test]
fn graph6_round_trip_all_labeled_up_to_6() {
    for n in 1..=6 {
        for g in labeled(n) {
            let code = encode(&g);
            assert_eq!(decode(code.as_str()).unwrap(), g);
        }
    }
}

#[test]
fn local_complement_matches_reference_and_is_involution() {
    for n in 1..=6 {
        for r in all_labeled(n) {
            let g = r.to_graph();
            for v in 0..n {
                let h = g.local_complement(v).unwrap();
                assert_eq!(h, r.local_complement(v).to_graph());
                assert_eq!(h.local_complement(v).unwrap(), g);
            }
        }
    }
}

#[test]
fn pivot_is_symmetric_up_to_6() {
    for n in 2..=6 {
        for g in labeled(n) {
            for (v, w) in g.edges() {
                assert_eq!(g.pivot(v, w).unwrap(), g.pivot(w, v).unwrap());
            }
        }
    }
}

#[test]
fn independent_sets_match_subset_enumeration() {
    for n in 1..=6 {
        for r in all_labeled(n) {
            let g = r.to_graph();
            let a = r.alpha();
            assert_eq!(independence_number(&g), a);
            for k in 0..=n {
                assert_eq!(has_independent_set(&g, k), k <= a);
            }
        }
    }
}

/// Orbits match the reference BFS member for member, and every member's
/// orbit is the same set, so orbits partition the labeled graphs.
#[test]
fn orbits_match_reference_and_partition_up_to_5() {
    for n in 1..=5 {
        let mut class_of: std::collections::HashMap<Graph, usize> = Default::default();
        let mut classes = 0;
        for r in all_labeled(n) {
            let g = r.to_graph();
            let orbit = enumerate_orbit(&g, None).members;
            let reference: Vec<Graph> = ref_orbit(&r).iter().map(RefGraph::to_graph).collect();
            assert_eq!(orbit, reference);
            match class_of.get(&g) {
                Some(&c) => assert!(orbit.iter().all(|m| class_of[m] == c)),
                None => {
                    for m in &orbit {
                        assert!(class_of.insert(*m, classes).is_none());
                    }
                    classes += 1;
                }
            }
        }
        assert_eq!(class_of.len(), 1 << (n * (n - 1) / 2));
    }
}

#[test]
fn orbit_closure_at_6() {
    // Every member of an orbit generates the same member set.
    for g in generate_all(6).unwrap() {
        let orbit = enumerate_orbit(&g, None).members;
        let set: HashSet<Graph> = orbit.iter().copied().collect();
        for m in orbit.iter().step_by(7) {
            let other: HashSet<Graph> = enumerate_orbit(m, None).members.into_iter().collect();
            assert_eq!(other, set);
        }
    }
}

#[test]
fn beta_is_additive_over_components_up_to_6() {
    for n in 1..=6 {
        for g in generate_all(n).unwrap() {
            let r = RefGraph::from_graph(&g);
            let parts: usize = r.components().iter().map(|c| ref_beta(&r.induced(c))).sum();
            assert_eq!(beta(&g), ref_beta(&r));
            assert_eq!(beta(&g), parts);
            assert_eq!(beta_disconnected(&g), parts);
        }
    }
}

#[test]
fn generator_matches_brute_force_up_to_6() {
    for n in 1..=6 {
        let perms = permutations(n);
        let emitted = generate_all(n).unwrap();
        let keys: Vec<_> = emitted
            .iter()
            .map(|g| naive_canon(&RefGraph::from_graph(g), &perms))
            .collect();
        let distinct: BTreeSet<_> = keys.iter().cloned().collect();
        assert_eq!(distinct.len(), emitted.len(), "duplicate class at n={n}");
        let all: BTreeSet<_> = all_labeled(n).map(|r| naive_canon(&r, &perms)).collect();
        assert_eq!(all, distinct, "coverage at n={n}");
    }
}

#[test]
fn canonical_form_agrees_with_naive_isomorphism_at_5() {
    let perms = permutations(5);
    let mut pairs = std::collections::HashMap::new();
    for r in all_labeled(5) {
        let cf = canonical_form(&r.to_graph());
        let naive = naive_canon(&r, &perms);
        if let Some(prev) = pairs.insert(naive.clone(), cf) {
            assert_eq!(prev, cf);
        }
    }
    let forms: HashSet<_> = pairs.values().collect();
    assert_eq!(forms.len(), pairs.len());
}

#[test]
fn census_counts_up_to_8() {
    let counts: Vec<_> = (1..=8).map(|n| generate_all(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044, 12346]);
    assert_eq!(generate_connected(7).unwrap().len(), 853);
}

/// Both pipelines classify every graph on at most 7 vertices identically.
#[test]
fn classifier_cross_check_up_to_7() {
    let mut c = Classifier::new();
    let opts = ClassifyOptions::default();
    let mut compared = 0;
    for n in 1..=7 {
        for g in generate_all(n).unwrap() {
            for k in 1..=4 {
                assert_eq!(
                    c.classify(&g, k, &opts),
                    ref_classify(&g, k),
                    "{} k={k}",
                    encode(&g)
                );
                compared += 1;
            }
        }
    }
    assert_eq!(compared, 4 * (1 + 2 + 4 + 11 + 34 + 156 + 1044));
}

#[test]
fn classifier_cross_check_on_extremal_graphs() {
    for code in EXTREMAL_CODES {
        let g = decode(code).unwrap();
        let fast = classify_one(&g, 4, None);
        assert_eq!(fast, ref_classify(&g, 4));
        assert_eq!(
            (fast.phase, fast.explored, fast.max_alpha),
            (Phase::P3, 8712, 3)
        );
    }
}

#[test]
fn char_poly_matches_determinants() {
    for code in EXTREMAL_CODES {
        let g = decode(code).unwrap();
        let p = char_poly(&g).unwrap();
        for x in -6..=8 {
            assert_eq!(p.eval(x), char_det_at(&g, x), "{code} at {x}");
        }
    }
    for g in generate_all(5).unwrap() {
        let p = char_poly(&g).unwrap();
        for x in -3..=3 {
            assert_eq!(p.eval(x), char_det_at(&g, x));
        }
    }
}
