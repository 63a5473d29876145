mod common;

use std::collections::BTreeSet;

use spectral_ds::canon::{are_isomorphic, canonical_form};
use spectral_ds::enumeration::*;
use spectral_ds::invariants::profile;
use spectral_ds::named::*;
use spectral_ds::Graph;

fn forms(gs: &[Graph]) -> BTreeSet<spectral_ds::canon::CanonicalForm> {
    gs.iter().map(canonical_form).collect()
}

#[test]
fn vertex_counts_match_brute_force() {
    for n in 0..=6 {
        let gs = generate_graphs(n).unwrap();
        assert_eq!(gs.len(), common::brute_classes(n).len(), "n = {n}");
        assert_eq!(forms(&gs).len(), gs.len());
    }
    assert_eq!(generate_graphs(5).unwrap().len(), 34);
    assert_eq!(generate_graphs(4).unwrap().len(), 11);
}

#[test]
fn no_duplicates_at_eight() {
    let gs = generate_graphs(8).unwrap();
    assert_eq!(gs.len(), 12346);
    assert_eq!(forms(&gs).len(), gs.len());
}

#[test]
fn generation_is_deterministic() {
    assert_eq!(generate_graphs(7).unwrap(), generate_graphs(7).unwrap());
    let streamed: Vec<Graph> = GraphStream::new(7).unwrap().collect();
    assert_eq!(streamed, generate_graphs(7).unwrap());
}

#[test]
fn partitions_cover_the_level_once() {
    let all = forms(&generate_graphs(7).unwrap());
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for i in 0..5 {
        for g in GraphStream::partition(7, i, 5).unwrap() {
            seen.insert(canonical_form(&g));
            total += 1;
        }
    }
    assert_eq!(total, all.len());
    assert_eq!(seen, all);
}

#[test]
fn parallel_results_are_schedule_independent() {
    let visit = |g: &Graph| (g.size().is_multiple_of(3)).then(|| spectral_ds::graph6::to_graph6(g));
    let one = for_each_partition(8, 1, visit).unwrap();
    let four = for_each_partition(8, 4, visit).unwrap();
    assert_eq!(one, four);
    assert_eq!(
        multiplicity_survey(7, 3, 1).unwrap(),
        multiplicity_survey(7, 3, 3).unwrap()
    );
}

#[test]
fn edge_pattern_counts() {
    assert_eq!(generate_by_edges(1).unwrap().len(), 1);
    assert_eq!(generate_by_edges(1).unwrap()[0], complete(2).unwrap());
    assert_eq!(generate_by_edges(4).unwrap().len(), 11);
    assert_eq!(generate_by_edges(5).unwrap().len(), 26);
}

#[test]
fn edge_patterns_match_vertex_generation() {
    // patterns with m edges are the m-edge graphs on 2m vertices, isolated
    // vertices dropped
    for m in 0..=4 {
        let from_vertices: BTreeSet<_> = generate_graphs(2 * m)
            .unwrap()
            .iter()
            .filter(|g| g.size() == m)
            .map(|g| canonical_form(&g.without_isolated()))
            .collect();
        assert_eq!(forms(&generate_by_edges(m).unwrap()), from_vertices, "m = {m}");
    }
}

fn k4_minus_k2() -> Graph {
    kn_minus(4, &complete(2).unwrap()).unwrap()
}

fn star_k2() -> Graph {
    star(4).unwrap().disjoint_union(&complete(2).unwrap()).unwrap()
}

#[test]
fn seven_vertex_five_edge_survey() {
    let r = survey_kn_minus(7, 5, Mode::Plain).unwrap();
    assert_eq!(r.nontrivial_classes(), 1);
    assert_eq!(r.patterns, 26);
    assert_eq!(r.total_graphs() + r.skipped, 26);
    let class = r.nontrivial().next().unwrap();
    assert_eq!(class.members.len(), 2);
    let want = [
        kn_minus(7, &k4_minus_k2()).unwrap(),
        kn_minus(7, &star_k2()).unwrap(),
    ];
    for w in &want {
        assert!(class.members.iter().any(|g| are_isomorphic(g, w)));
    }
}

#[test]
fn larger_five_edge_surveys_are_clean() {
    for n in 8..=12 {
        let r = survey_kn_minus(n, 5, Mode::Plain).unwrap();
        assert_eq!(r.nontrivial_classes(), 0, "n = {n}");
        assert_eq!(r.skipped == 0, n >= 10, "5K_2 needs ten vertices");
    }
}

#[test]
fn four_edge_spectra_are_distinct() {
    let r = survey_kn_minus(8, 4, Mode::Plain).unwrap();
    assert_eq!(r.classes.len(), 11);
    assert_eq!(r.nontrivial_classes(), 0);
}

#[test]
fn profile_prefilter_never_splits_a_class() {
    for (n, m) in [(7, 5), (8, 6), (9, 6), (10, 7)] {
        for mode in [Mode::Plain, Mode::Generalized] {
            let r = survey_kn_minus(n, m, mode).unwrap();
            for c in &r.classes {
                let profiles: BTreeSet<_> = c.members.iter().map(profile).collect();
                assert_eq!(profiles.len(), 1);
                let fs = forms(&c.members);
                assert_eq!(fs.len(), c.members.len());
                assert!(c
                    .members
                    .windows(2)
                    .all(|w| canonical_form(&w[0]) < canonical_form(&w[1])));
            }
        }
    }
}

#[test]
fn six_deleted_edges_give_r_cospectral_pairs() {
    // K_n \ C_6 and K_n \ S(2,2,2) share generalized spectra
    for n in 7..=10 {
        let r = survey_kn_minus(n, 6, Mode::Generalized).unwrap();
        let a = kn_minus(n, &cycle(6).unwrap()).unwrap();
        let b = kn_minus(n, &spider222()).unwrap();
        assert!(r
            .nontrivial()
            .any(|c| c.members.iter().any(|g| are_isomorphic(g, &a))
                && c.members.iter().any(|g| are_isomorphic(g, &b))));
    }
}

#[test]
fn survey_outputs_are_stable() {
    let a = survey_kn_minus(7, 5, Mode::Plain).unwrap();
    let b = survey_kn_minus(7, 5, Mode::Plain).unwrap();
    assert_eq!(a.summary(), b.summary());
    assert_eq!(a.csv(), b.csv());
    assert_eq!(a.class_files(), b.class_files());
    assert!(a.csv().starts_with("key_hash,size,members\n"));
    assert_eq!(a.class_files().len(), 1);
}

#[test]
fn ds_verify_examples() {
    let mates = ds_verify(&kn_minus(7, &k4_minus_k2()).unwrap(), Mode::Plain).unwrap();
    assert_eq!(mates.len(), 1);
    assert!(are_isomorphic(&mates[0], &kn_minus(7, &star_k2()).unwrap()));

    let mates = ds_verify(&star(4).unwrap(), Mode::Plain).unwrap();
    let k22k1 = complete_bipartite(2, 2).unwrap().pad(1).unwrap();
    assert_eq!(mates.len(), 1);
    assert!(are_isomorphic(&mates[0], &k22k1));

    let g = kn_minus(8, &path(5).unwrap()).unwrap();
    assert!(ds_verify(&g, Mode::Generalized).unwrap().is_empty());

    assert!(ds_verify(&complete(10).unwrap(), Mode::Plain).is_err());
}

#[test]
fn ds_verify_many_agrees_with_single_calls() {
    let targets: Vec<Graph> = vec![
        star(4).unwrap(),
        cycle(5).unwrap(),
        kn_minus(7, &k4_minus_k2()).unwrap(),
        cycle(6).unwrap().pad(1).unwrap(),
    ];
    let batch = ds_verify_many(&targets, Mode::Plain, 2).unwrap();
    for (g, got) in targets.iter().zip(&batch) {
        assert_eq!(&ds_verify(g, Mode::Plain).unwrap(), got);
    }
}

#[test]
fn multiplicity_examples() {
    let two: Vec<Graph> = multiplicity_survey(6, 2, 1).unwrap();
    let want: Vec<Graph> = (1..=3)
        .map(|a| {
            complete(a)
                .unwrap()
                .disjoint_union(&complete(6 - a).unwrap())
                .unwrap()
        })
        .collect();
    assert_eq!(forms(&two), forms(&want));

    let three = multiplicity_survey(6, 3, 1).unwrap();
    assert_eq!(forms(&three), forms(&classified_forms(6, 3).unwrap()));

    let one = multiplicity_survey(5, 1, 1).unwrap();
    assert_eq!(one, vec![complete(5).unwrap()]);

    assert!(multiplicity_survey(10, 1, 1).is_err());
    assert!(multiplicity_survey(6, 4, 1).is_err());
}
