use phenylene_core::enumerate::{enumerate_up_to, EnumerateOptions};
use phenylene_core::families::{cl, linear, pl};
use phenylene_core::mostar_cut;
use phenylene_core::phenylene::cut_classes;

#[test]
fn cut_equals_direct_up_to_seven() {
    for cat in enumerate_up_to(7, EnumerateOptions::default()).unwrap() {
        for e in &cat.entries {
            let direct = e.tree.expand().unwrap().mostar_direct().unwrap();
            assert_eq!(e.mostar, direct, "{}", e.tree.to_json());
            assert_eq!(mostar_cut(&e.tree).unwrap(), direct);
        }
    }
}

#[test]
fn per_edge_identity_up_to_six() {
    for cat in enumerate_up_to(6, EnumerateOptions::default()).unwrap() {
        for e in &cat.entries {
            let g = e.tree.expand().unwrap();
            let classes = cut_classes(&e.tree).unwrap();
            assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), g.edge_count());
            for c in &classes {
                assert!(c.r_u + c.r_v <= e.tree.h);
                for &(u, v) in &c.edges {
                    let split = g.edge_split(u, v).unwrap();
                    assert_eq!(split.phi, 6 * c.r_u.abs_diff(c.r_v), "{} edge {u}-{v}", e.tree.to_json());
                }
            }
        }
    }
}

#[test]
fn every_edge_value_is_a_multiple_of_six() {
    for t in [linear(7).unwrap(), cl(&[1, 2, 1]).unwrap(), pl(1, 2, 3).unwrap()] {
        let g = t.expand().unwrap();
        assert!(g.edge_splits().iter().all(|s| s.phi % 6 == 0));
        assert!(g.is_bipartite());
    }
}
