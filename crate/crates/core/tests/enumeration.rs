mod common;

use std::collections::BTreeSet;

use phenylene_core::certificate;
use phenylene_core::enumerate::{enumerate, enumerate_up_to, EnumerateOptions, Filters};
use phenylene_core::families::chain_from_turns;

#[test]
fn matches_naive_oracle_up_to_five() {
    let cats = enumerate_up_to(5, EnumerateOptions::default()).unwrap();
    for (i, cat) in cats.iter().enumerate() {
        let naive = common::naive_classes(i + 1);
        assert_eq!(cat.counts.total, naive.len(), "h = {}", i + 1);
        let production: BTreeSet<Vec<u8>> = cat.entries.iter().map(|e| e.certificate.clone()).collect();
        let oracle: BTreeSet<Vec<u8>> = naive.iter().map(certificate).collect();
        assert_eq!(production, oracle, "h = {}", i + 1);
    }
    assert_eq!(cats[3].counts.total, 5);
}

#[test]
fn chain_count_matches_turn_words() {
    let opts = EnumerateOptions::with_filters(Filters { chains_only: true, planar_only: false });
    let cats = enumerate_up_to(7, opts).unwrap();
    for h in 3..=7 {
        let mut words = vec![String::new()];
        for _ in 0..h - 2 {
            words = words.into_iter().flat_map(|w| ["L", "R", "S"].map(|c| format!("{w}{c}"))).collect();
        }
        let certs: BTreeSet<Vec<u8>> =
            words.iter().map(|w| certificate(&chain_from_turns(w).unwrap().expand().unwrap())).collect();
        assert_eq!(cats[h - 1].counts.total, certs.len(), "h = {h}");
    }
}

#[test]
fn counts_are_consistent() {
    let cats = enumerate_up_to(7, EnumerateOptions::default()).unwrap();
    for w in cats.windows(2) {
        assert!(w[0].counts.chains <= w[1].counts.chains);
    }
    for c in &cats {
        assert!(c.counts.chains <= c.counts.total);
        assert_eq!(c.counts.by_full_hexagons.values().sum::<usize>(), c.counts.total);
        assert_eq!(c.counts.by_full_hexagons.get(&0).copied().unwrap_or(0), c.counts.chains);
        let distinct: BTreeSet<&Vec<u8>> = c.entries.iter().map(|e| &e.certificate).collect();
        assert_eq!(distinct.len(), c.entries.len());
        assert!(c.entries.windows(2).all(|w| w[0].certificate < w[1].certificate));
    }
}

#[test]
fn planar_filter_drops_exactly_the_overlapping_classes() {
    let all = enumerate(8, EnumerateOptions::default()).unwrap();
    let planar =
        enumerate(8, EnumerateOptions::with_filters(Filters { chains_only: false, planar_only: true })).unwrap();
    assert!(all.counts.overlapping > 0);
    assert_eq!(planar.counts.overlapping, 0);
    assert_eq!(planar.counts.total, all.counts.total - all.counts.overlapping);
}

#[test]
fn independent_of_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| enumerate(6, EnumerateOptions::default()).unwrap())
    };
    let one = run(1);
    let four = run(4);
    assert_eq!(one, four);
    let lines =
        |c: &phenylene_core::enumerate::ClassCatalog| c.entries.iter().map(|e| e.json_line()).collect::<Vec<_>>();
    assert_eq!(lines(&one), lines(&four));
}
