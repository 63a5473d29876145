mod common;

use std::collections::HashMap;

use rand::Rng;
use spectral_ds::enumeration::generate_graphs;
use spectral_ds::invariants::*;
use spectral_ds::named::*;
use spectral_ds::spectra::{char_poly, closed_walks};
use spectral_ds::{Error, Graph};

fn counts(m: u64, m1: u64, m2: u64, m3: u64, m4: u64, t: u64) -> SubgraphCounts {
    SubgraphCounts { m, m1, m2, m3, m4, t }
}

fn empty(n: usize) -> Graph {
    Graph::empty(n).unwrap()
}

#[test]
fn subgraph_count_examples() {
    assert_eq!(subgraph_counts(&cycle(4).unwrap()), counts(4, 4, 2, 4, 1, 0));
    let k4 = subgraph_counts(&complete(4).unwrap());
    assert_eq!((k4.t, k4.m1, k4.m4), (4, 12, 3));
    assert_eq!(2 * 6 + 4 * 12 + 8 * 3, 84);
    assert_eq!(subgraph_counts(&matching(2).unwrap()), counts(2, 0, 1, 0, 0, 0));

    assert_eq!(brute_force_counts(&path(4).unwrap()).unwrap().m3, 1);
    let c6 = brute_force_counts(&cycle(6).unwrap()).unwrap();
    assert_eq!((c6.m4, c6.m2), (0, 9));
    assert!(matches!(
        brute_force_counts(&empty(13)),
        Err(Error::Capacity { .. })
    ));
}

#[test]
fn complement_formula_examples() {
    let p3k1 = path(3).unwrap().pad(1).unwrap();
    assert_eq!(complement_triangles(&p3k1), 1);
    for n in 0..=12u64 {
        let choose3 = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
        assert_eq!(complement_triangles(&empty(n as usize)), choose3);
        assert_eq!(complement_triangles(&complete(n as usize).unwrap()), 0);
        if n >= 1 {
            let w = (n - 1).pow(4) + n - 1;
            assert_eq!(complement_4walks(&empty(n as usize)), w);
            assert_eq!(complete_four_walks(n as usize), w);
        }
    }
    let k2k1 = complete(2).unwrap().pad(1).unwrap();
    assert_eq!(complement_4walks(&k2k1), 8);
    assert_eq!(common::trace_power(&path(3).unwrap(), 4), 8);
}

#[test]
fn profile_examples() {
    let p = profile(&complete(5).unwrap());
    assert_eq!((p.n, p.m, p.t, p.w4, p.mult_minus1), (5, 10, 10, 260, 4));
    assert_eq!(p.csv_row(), "5,10,10,260,4");

    let c4k2 = cycle(4).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
    for n in 6..=12 {
        let a = profile(&kn_minus(n, &path(6).unwrap()).unwrap());
        let b = profile(&kn_minus(n, &c4k2).unwrap());
        assert_eq!((a.n, a.m, a.t, a.w4), (b.n, b.m, b.t, b.w4));
        // distinct rows of J - A(H): 6 vs 4 at n = 6, then 7 vs 5
        let (ra, rb) = if n == 6 { (6, 4) } else { (7, 5) };
        assert_eq!(
            common::rational_rank(&kn_minus(n, &path(6).unwrap()).unwrap(), -1),
            ra
        );
        assert_eq!(common::rational_rank(&kn_minus(n, &c4k2).unwrap(), -1), rb);
        assert_eq!((a.mult_minus1, b.mult_minus1), (n - ra, n - rb), "n = {n}");
    }

    let k4_minus_k2 = kn_minus(4, &complete(2).unwrap()).unwrap();
    let star_k2 = star(4).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
    assert_eq!(
        profile(&kn_minus(7, &k4_minus_k2).unwrap()),
        profile(&kn_minus(7, &star_k2).unwrap())
    );
}

#[test]
fn formulas_match_oracles_exhaustively() {
    for n in 0..=7 {
        for g in generate_graphs(n).unwrap() {
            let c = subgraph_counts(&g);
            assert_eq!(c, brute_force_counts(&g).unwrap(), "{g}");
            let co = g.complement();
            assert_eq!(complement_triangles(&g), common::triangles(&co), "{g}");
            assert_eq!(complement_4walks(&g) as i64, common::trace_power(&co, 4), "{g}");
            assert_eq!(2 * c.m + 4 * c.m1 + 8 * c.m4, closed_walks(&g, 4).unwrap());
            assert_eq!(c.t, common::triangles(&g));
        }
    }
}

#[test]
fn random_graphs_match_brute_force() {
    let mut rng = common::rng(2024);
    for _ in 0..1000 {
        let n = rng.gen_range(8..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        assert_eq!(subgraph_counts(&g), brute_force_counts(&g).unwrap(), "{g}");
    }
}

#[test]
fn walks_through_fixed_edges_in_kn() {
    for n in 5..=9u64 {
        let nn = n as usize;
        let cases: [(&[(usize, usize)], u64); 5] = [
            (&[(0, 1)], 8 * (n - 2) * (n - 3) + 8 * (n - 2) + 2),
            (&[(0, 1), (1, 2)], 8 * (n - 3) + 4),
            (&[(0, 1), (2, 3)], 16),
            (&[(0, 1), (1, 2), (2, 3)], 8),
            (&[(0, 1), (1, 2), (2, 3), (3, 0)], 8),
        ];
        for (f, want) in cases {
            assert_eq!(common::kn_walks_through(nn, f), want, "n={n} F={f:?}");
            assert_eq!(complete_four_walks_containing(nn, f), want, "n={n} F={f:?}");
        }
    }
}

#[test]
fn cospectral_graphs_share_profiles() {
    for n in 1..=7 {
        let mut seen: HashMap<_, InvariantProfile> = HashMap::new();
        for g in generate_graphs(n).unwrap() {
            let p = profile(&g);
            if let Some(q) = seen.insert(char_poly(&g), p) {
                assert_eq!(p, q, "{g}");
            }
        }
    }
}
