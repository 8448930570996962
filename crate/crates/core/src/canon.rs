//! Canonical certificates by individualization-refinement.
//!
//! Colors start from the degree/distance profile of each vertex and are
//! refined by neighbour color multisets until stable. While the coloring is not
//! discrete, every vertex of the first smallest non-singleton cell is tried in
//! turn: it is individualized, all colors are split by distance to it, and the
//! search recurses. Each discrete leaf gives a labeling; the certificate is the
//! lexicographically least relabeled edge list over all leaves. No
//! automorphism pruning is done, so the search is exhaustive and the result is
//! exact: equal certificates means isomorphic graphs and vice versa.

use sha2::{Digest, Sha256};

use crate::graph::{DistanceMatrix, MolecularGraph, UNREACHABLE};

/// Canonical encoding: vertex count, edge count, then the canonical edge list,
/// all little-endian `u32`.
pub fn certificate(g: &MolecularGraph) -> Vec<u8> {
    let edges = canonical_edges(g);
    let mut out = Vec::with_capacity(8 + 8 * edges.len());
    out.extend((g.vertex_count() as u32).to_le_bytes());
    out.extend((edges.len() as u32).to_le_bytes());
    for (a, b) in edges {
        out.extend(a.to_le_bytes());
        out.extend(b.to_le_bytes());
    }
    out
}

/// Short hex digest of a certificate, used to name classes without a family
/// name.
pub fn certificate_hash(cert: &[u8]) -> String {
    let digest = Sha256::digest(cert);
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Canonical relabeling of the edge set, sorted.
pub fn canonical_edges(g: &MolecularGraph) -> Vec<(u32, u32)> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let dm = g.distance_matrix();
    let mut colors = initial_colors(g, &dm);
    refine(g, &mut colors);
    let mut best: Option<Vec<(u32, u32)>> = None;
    search(g, &dm, colors, &mut best);
    best.expect("search reaches at least one leaf")
}

fn rank_by<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let colors = keys.iter().map(|k| sorted.binary_search(k).expect("key present") as u32).collect();
    (colors, sorted.len())
}

fn initial_colors(g: &MolecularGraph, dm: &DistanceMatrix) -> Vec<u32> {
    let keys: Vec<(usize, Vec<u32>)> = (0..g.vertex_count())
        .map(|v| {
            let mut row: Vec<u32> = dm.row(v).to_vec();
            row.sort_unstable();
            (g.degree(v), row)
        })
        .collect();
    rank_by(&keys).0
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Splits cells by the multiset of neighbour colors until nothing changes.
fn refine(g: &MolecularGraph, colors: &mut Vec<u32>) {
    let mut cells = cell_count(colors);
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, count) = rank_by(&keys);
        *colors = next;
        if count == cells {
            return;
        }
        cells = count;
    }
}

fn individualize(dm: &DistanceMatrix, colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<(u32, u32)> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| {
            let d = dm.get(v, w);
            // unreachable sorts last; the chosen vertex is the only one at 0
            (c, if d == UNREACHABLE { u32::MAX } else { d })
        })
        .collect();
    rank_by(&keys).0
}

fn search(g: &MolecularGraph, dm: &DistanceMatrix, colors: Vec<u32>, best: &mut Option<Vec<(u32, u32)>>) {
    let n = g.vertex_count();
    let cells = cell_count(&colors);
    if cells == n {
        let mut edges: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (colors[a], colors[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    let mut sizes = vec![0usize; cells];
    colors.iter().for_each(|&c| sizes[c as usize] += 1);
    let target = (0..cells)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("non-discrete coloring has a non-singleton cell") as u32;
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut next = individualize(dm, &colors, v);
        refine(g, &mut next);
        search(g, dm, next, best);
    }
}
