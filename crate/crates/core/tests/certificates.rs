mod common;

use phenylene_core::canon::certificate_hash;
use phenylene_core::enumerate::{enumerate_up_to, EnumerateOptions};
use phenylene_core::{are_isomorphic, certificate};

#[test]
fn no_collisions_up_to_six() {
    for cat in enumerate_up_to(6, EnumerateOptions::default()).unwrap() {
        let graphs: Vec<_> = cat.entries.iter().map(|e| e.tree.expand().unwrap()).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!are_isomorphic(&graphs[i], &graphs[j]), "h = {}: {i} and {j} are isomorphic", cat.h);
            }
        }
    }
}

#[test]
fn relabeled_copies_share_certificate() {
    for cat in enumerate_up_to(6, EnumerateOptions::default()).unwrap() {
        for (k, e) in cat.entries.iter().enumerate() {
            let g = e.tree.expand().unwrap();
            let h = common::shuffled(&g, k as u64 + 17);
            assert_eq!(certificate(&h), e.certificate);
            assert!(are_isomorphic(&g, &h));
        }
    }
}

#[test]
fn hashes_are_distinct_at_seven() {
    let cats = enumerate_up_to(7, EnumerateOptions::default()).unwrap();
    let last = cats.last().unwrap();
    let mut hashes: Vec<String> = last.entries.iter().map(|e| certificate_hash(&e.certificate)).collect();
    hashes.sort();
    hashes.dedup();
    assert_eq!(hashes.len(), last.entries.len());
}
