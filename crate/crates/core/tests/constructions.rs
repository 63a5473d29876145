use spectral_ds::canon::{are_isomorphic, canonical_form};
use spectral_ds::constructions::*;
use spectral_ds::enumeration::generate_graphs;
use spectral_ds::graph6::{from_graph6, to_graph6};
use spectral_ds::named::*;
use spectral_ds::spectra::{is_cospectral, is_r_cospectral, GeneralizedSpectralKey};
use spectral_ds::{Error, Graph};

fn same(g: Graph) -> CospectralPair {
    CospectralPair::new(g.clone(), g, PairKind::ClaimedRCospectral).unwrap()
}

fn check_r(p: &CospectralPair) {
    assert_eq!(p.kind(), PairKind::ClaimedRCospectral);
    assert_eq!(p.left().order(), p.right().order());
    assert!(is_r_cospectral(p.left(), p.right()));
}

#[test]
fn join_and_union_examples() {
    let fig = figure1_family(0).unwrap();
    let j = join_pair(&fig, &same(complete(1).unwrap())).unwrap();
    assert_eq!(j.left().order(), 8);
    check_r(&j);
    assert!(!j.is_isomorphic());

    for m in 1..=3 {
        let u = union_pair(&fig, &same(complete(m).unwrap())).unwrap();
        check_r(&u);
        assert!(!u.is_isomorphic());
    }

    let g = cycle(5).unwrap();
    let h = star(3).unwrap();
    let t = join_pair(&same(g.clone()), &same(h.clone())).unwrap();
    assert_eq!(t.left(), &g.join(&h).unwrap());
    assert_eq!(t.left(), t.right());
}

#[test]
fn compositions_stay_r_cospectral() {
    let base = [figure1_family(0).unwrap(), figure1_family(1).unwrap()];
    let small = [
        same(complete(1).unwrap()),
        same(path(2).unwrap()),
        figure1_family(0).unwrap(),
    ];
    let mut frontier = base.to_vec();
    for depth in 1..=3 {
        let mut next = Vec::new();
        for p in &frontier {
            for q in &small {
                if p.left().order() + q.left().order() > 40 {
                    continue;
                }
                next.push(join_pair(p, q).unwrap());
                next.push(union_pair(p, q).unwrap());
            }
        }
        for p in &next {
            check_r(p);
        }
        assert!(!next.is_empty(), "depth {depth}");
        // keep the search small
        next.truncate(4);
        frontier = next;
    }
}

#[test]
fn kn_minus_pair_examples() {
    let fig = figure1_family(0).unwrap();
    let p = kn_minus_pair(7, &fig).unwrap();
    assert!(are_isomorphic(
        p.left(),
        &kn_minus(7, &cycle(6).unwrap()).unwrap()
    ));
    assert!(are_isomorphic(p.right(), &kn_minus(7, &spider222()).unwrap()));
    for n in 7..=12 {
        let p = kn_minus_pair(n, &fig).unwrap();
        check_r(&p);
        assert!(!p.is_isomorphic());
        assert_eq!(
            GeneralizedSpectralKey::of(p.left()),
            GeneralizedSpectralKey::of(p.right())
        );
        assert_eq!(p.left().complement().size(), 6);
    }
    let g = path(4).unwrap();
    assert!(kn_minus_pair(6, &same(g.clone())).unwrap().is_isomorphic());
    assert!(matches!(kn_minus_pair(5, &fig), Err(Error::Argument(_))));
}

#[test]
fn non_r_pairs_are_rejected() {
    let mates = path_mates(3).unwrap();
    let one = same(complete(1).unwrap());
    assert!(matches!(
        join_pair(&mates, &one),
        Err(Error::ContractViolation(_))
    ));
    assert!(matches!(
        union_pair(&one, &mates),
        Err(Error::ContractViolation(_))
    ));
    assert!(matches!(
        kn_minus_pair(12, &mates),
        Err(Error::ContractViolation(_))
    ));
    let bogus = CospectralPair::new(
        cycle(6).unwrap().pad(1).unwrap(),
        path(7).unwrap(),
        PairKind::ClaimedRCospectral,
    );
    assert!(matches!(bogus, Err(Error::ContractViolation(_))));
}

#[test]
fn figure1_family_examples() {
    for l in 0..=8 {
        let p = figure1_family(l).unwrap();
        check_r(&p);
        assert_eq!(p.left().order(), 7 + l);
        assert_eq!(p.left().size(), 6 + l);
        assert!(!p.is_isomorphic(), "l = {l}");
    }
}

#[test]
fn figure1_every_degree_two_attachment() {
    // the fixed attachment vertex is one choice; all degree-2 choices work
    let (a, b) = figure1_graphs();
    for l in 1..=4 {
        for u in (0..7).filter(|&v| a.degree(v) == 2) {
            for w in (0..7).filter(|&v| b.degree(v) == 2) {
                let mut x = a.disjoint_union(&path(l).unwrap()).unwrap();
                x.add_edge(u, 7);
                let mut y = b.disjoint_union(&path(l).unwrap()).unwrap();
                y.add_edge(w, 7);
                assert!(is_r_cospectral(&x, &y));
            }
        }
    }
}

#[test]
fn path_mates_examples() {
    let p = path_mates(2).unwrap();
    assert_eq!(p.kind(), PairKind::ClaimedCospectral);
    let k13 = star(3).unwrap();
    assert!(are_isomorphic(
        p.right(),
        &path(2).unwrap().disjoint_union(&k13).unwrap()
    ));
    for m in 2..=5 {
        let p = path_mates(m).unwrap();
        assert_eq!(p.left().order(), 2 * m + 2);
        assert!(is_cospectral(p.left(), p.right()));
        assert!(!is_r_cospectral(p.left(), p.right()));
        assert!(!p.is_isomorphic());
    }
    assert!(matches!(path_mates(1), Err(Error::Argument(_))));
}

#[test]
fn gm_switch_is_an_r_cospectral_involution() {
    for n in 1..=6 {
        for g in generate_graphs(n).unwrap() {
            for c in switching_sets(&g) {
                let h = gm_switch(&g, &c).unwrap();
                assert!(is_r_cospectral(&g, &h), "{g} {c:?}");
                assert_eq!(gm_switch(&h, &c).unwrap(), g);
                // switching never touches edges inside C or outside it
                let inside: Vec<usize> = c.clone();
                assert_eq!(g.induced(&inside), h.induced(&inside));
                let outside: Vec<usize> = (0..n).filter(|v| !c.contains(v)).collect();
                assert_eq!(g.induced(&outside), h.induced(&outside));
                // below seven vertices every switch is an isomorphism
                assert_eq!(canonical_form(&g), canonical_form(&h));
            }
        }
    }
}

#[test]
fn first_nontrivial_switch_fixture() {
    let g = from_graph6("F?qrO").unwrap();
    let h = gm_switch(&g, &[3, 4, 5, 6]).unwrap();
    assert_eq!(to_graph6(&h), "FFHSO");
    assert!(is_r_cospectral(&g, &h));
    assert!(!are_isomorphic(&g, &h));
}

#[test]
fn switching_set_errors() {
    // the complement of a star: {1, 2} spans an edge and 3 sees both, 0 neither
    assert!(check_switching_set(&star(3).unwrap().complement(), &[1, 2]).is_ok());
    match gm_switch(&path(5).unwrap(), &[0, 2, 4]) {
        Err(Error::SwitchingSet { vertex: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
    match gm_switch(&path(4).unwrap(), &[0, 4]) {
        Err(Error::SwitchingSet { vertex: 4, .. }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn pair_serialization() {
    for p in [figure1_family(2).unwrap(), path_mates(3).unwrap()] {
        let line = p.to_string();
        assert_eq!(line.lines().count(), 1);
        assert_eq!(line.split(' ').count(), 3);
        assert_eq!(line.parse::<CospectralPair>().unwrap(), p);
    }
    let forged = format!(
        "{} {} r-cospectral",
        to_graph6(&path(3).unwrap()),
        to_graph6(&complete(3).unwrap())
    );
    assert!(forged.parse::<CospectralPair>().is_err());
}
