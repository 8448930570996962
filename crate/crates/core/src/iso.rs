//! Exact isomorphism test by backtracking.
//!
//! Vertices are first partitioned by degree and distance profile; candidate
//! images must then agree on every distance to already-mapped vertices. Since
//! adjacency is distance 1, a complete distance-preserving bijection is an
//! isomorphism. Worst case is exponential; graphs with large automorphism
//! groups and weak profiles (e.g. strongly regular graphs) can be slow, but
//! molecular graphs with up to a few hundred vertices are handled quickly.

use std::collections::HashMap;

use crate::graph::{DistanceMatrix, MolecularGraph};

/// Degree and sorted distance histogram of one vertex.
fn vertex_profile(g: &MolecularGraph, dm: &DistanceMatrix, v: usize) -> Vec<u32> {
    let mut hist = vec![g.degree(v) as u32];
    for &d in dm.row(v) {
        let d = if d == crate::graph::UNREACHABLE { 0 } else { d as usize + 1 };
        if hist.len() <= d {
            hist.resize(d + 1, 0);
        }
        hist[d] += 1;
    }
    hist
}

pub fn are_isomorphic(g1: &MolecularGraph, g2: &MolecularGraph) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let dm1 = g1.distance_matrix();
    let dm2 = g2.distance_matrix();

    let mut ids: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut class_of = |p: Vec<u32>| {
        let next = ids.len();
        *ids.entry(p).or_insert(next)
    };
    let c1: Vec<usize> = (0..n).map(|v| class_of(vertex_profile(g1, &dm1, v))).collect();
    let c2: Vec<usize> = (0..n).map(|v| class_of(vertex_profile(g2, &dm2, v))).collect();

    let classes = ids.len();
    let mut count1 = vec![0usize; classes];
    let mut count2 = vec![0usize; classes];
    c1.iter().for_each(|&c| count1[c] += 1);
    c2.iter().for_each(|&c| count2[c] += 1);
    if count1 != count2 {
        return false;
    }

    let order = search_order(g1, &c1, &count1);
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for v in 0..n {
        by_class[c2[v]].push(v);
    }

    let mut state = Search {
        dm1: &dm1,
        dm2: &dm2,
        order: &order,
        class1: &c1,
        by_class: &by_class,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0)
}

/// BFS order over g1 starting from a vertex of the rarest class, so every
/// vertex after the first in a component has a mapped neighbour.
fn search_order(g: &MolecularGraph, class: &[usize], count: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (count[class[v]], v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    dm1: &'a DistanceMatrix,
    dm2: &'a DistanceMatrix,
    order: &'a [usize],
    class1: &'a [usize],
    by_class: &'a [Vec<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &c in &self.by_class[self.class1[v]] {
            if self.used[c] || !self.consistent(depth, v, c) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, c: usize) -> bool {
        self.order[..depth].iter().all(|&w| self.dm1.get(v, w) == self.dm2.get(c, self.map[w]))
    }
}
