#![allow(dead_code)]

use phenylene_core::phenylene::{Junction, PhenyleneTree};
use phenylene_core::{are_isomorphic, MolecularGraph};

/// Parent arrays `p[i] < i` for hexagons `1..h`: every labelled tree shape,
/// with repetition across relabelings.
fn parent_arrays(h: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 1..h {
        out = out.into_iter().flat_map(|p| (0..i).map(move |q| [p.clone(), vec![q]].concat())).collect();
    }
    out
}

/// Every valid tree for `h` hexagons by brute force over shapes and parent
/// slots. The child always attaches through its own slot 3; any other child
/// slot only relabels the child's vertices.
pub fn naive_trees(h: usize) -> Vec<PhenyleneTree> {
    let mut out = Vec::new();
    for parents in parent_arrays(h) {
        let m = parents.len();
        for code in 0..6usize.pow(m as u32) {
            let mut c = code;
            let junctions = (0..m)
                .map(|i| {
                    let s = (c % 6) as u8;
                    c /= 6;
                    Junction::new(parents[i], s, i + 1, 3)
                })
                .collect();
            let t = PhenyleneTree { h, junctions };
            if t.is_valid() {
                out.push(t);
            }
        }
    }
    out
}

/// Isomorphism classes by pairwise search, with the Mostar index as a cheap
/// pre-filter.
pub fn naive_classes(h: usize) -> Vec<MolecularGraph> {
    let mut reps: Vec<(u64, MolecularGraph)> = Vec::new();
    for t in naive_trees(h) {
        let g = t.expand().unwrap();
        let mo = g.mostar_direct().unwrap();
        if !reps.iter().any(|(m, r)| *m == mo && are_isomorphic(r, &g)) {
            reps.push((mo, g));
        }
    }
    reps.into_iter().map(|(_, g)| g).collect()
}

/// Deterministic random relabeling.
pub fn shuffled(g: &MolecularGraph, seed: u64) -> MolecularGraph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        perm.swap(i, (x % (i as u64 + 1)) as usize);
    }
    g.relabel(&perm).unwrap()
}
