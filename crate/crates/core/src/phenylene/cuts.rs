//! Orthogonal cuts of a tree-like phenylene.
//!
//! Two edges are related when they are opposite in a common face: edge `j` and
//! `j + 3` of a hexagon, the two hexagon-side edges of a quadrilateral, or its
//! two connecting edges. A cut class is a transitive closure of that relation.
//! Deleting a class leaves two components; `r_u`, `r_v` count the hexagons
//! lying wholly inside each one (hexagons crossed by the cut count for neither).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::tree::PhenyleneTree;
use crate::error::Result;
use crate::graph::MolecularGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutClass {
    /// Sorted `(min, max)` vertex pairs of the expanded graph.
    pub edges: Vec<(usize, usize)>,
    /// Hexagon count of the component holding `representative.0`.
    pub r_u: usize,
    /// Hexagon count of the component holding `representative.1`.
    pub r_v: usize,
    pub representative: (usize, usize),
}

impl CutClass {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// This class's share of the Mostar index: `6 * o * |r_u - r_v|`.
    pub fn contribution(&self) -> u64 {
        6 * self.size() as u64 * self.r_u.abs_diff(self.r_v) as u64
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (x, y) = (self.find(a), self.find(b));
        if x != y {
            self.0[x.max(y)] = x.min(y);
        }
    }
}

/// Cut classes ordered by their smallest edge.
pub fn cut_classes(t: &PhenyleneTree) -> Result<Vec<CutClass>> {
    let g = t.expand()?;
    Ok(classes_of(t, &g))
}

pub(crate) fn classes_of(t: &PhenyleneTree, g: &MolecularGraph) -> Vec<CutClass> {
    let index: HashMap<(usize, usize), usize> = g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let id = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let hex_edge = |hex: usize, j: u8| id(PhenyleneTree::vertex(hex, j), PhenyleneTree::vertex(hex, j + 1));

    let mut uf = UnionFind((0..g.edge_count()).collect());
    for hex in 0..t.h {
        for j in 0..3 {
            uf.union(hex_edge(hex, j), hex_edge(hex, j + 3));
        }
    }
    for jn in &t.junctions {
        uf.union(hex_edge(jn.a, jn.slot_a), hex_edge(jn.b, jn.slot_b));
        let [(a0, b0), (a1, b1)] = PhenyleneTree::junction_edges(jn);
        uf.union(id(a0, b0), id(a1, b1));
    }

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot_of_root: HashMap<usize, usize> = HashMap::new();
    for e in 0..g.edge_count() {
        let root = uf.find(e);
        let k = *slot_of_root.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(e);
    }

    groups
        .into_iter()
        .map(|members| {
            let edges: Vec<(usize, usize)> = members.iter().map(|&e| g.edges()[e]).collect();
            let (_, comp) = g.without_edges(&edges).components();
            let representative = edges[0];
            let hexagons_in = |c: usize| (0..t.h).filter(|&hex| (0..6).all(|j| comp[6 * hex + j] == c)).count();
            CutClass {
                r_u: hexagons_in(comp[representative.0]),
                r_v: hexagons_in(comp[representative.1]),
                representative,
                edges,
            }
        })
        .collect()
}

/// Mostar index by the cut method: `6 * sum(o * |r_u - r_v|)`.
pub fn mostar_cut(t: &PhenyleneTree) -> Result<u64> {
    Ok(cut_classes(t)?.iter().map(CutClass::contribution).sum())
}

/// The class containing the edge `(u, v)`, if it is an edge.
pub fn class_of_edge(classes: &[CutClass], u: usize, v: usize) -> Option<&CutClass> {
    classes.iter().find(|c| c.contains(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phenylene::tree::Junction;

    fn l2() -> PhenyleneTree {
        PhenyleneTree::new(2, vec![Junction::new(0, 0, 1, 3)]).unwrap()
    }

    #[test]
    fn single_hexagon_has_three_balanced_classes() {
        let classes = cut_classes(&PhenyleneTree::single()).unwrap();
        assert_eq!(classes.len(), 3);
        for c in &classes {
            assert_eq!((c.size(), c.r_u, c.r_v), (2, 0, 0));
        }
        assert_eq!(mostar_cut(&PhenyleneTree::single()).unwrap(), 0);
    }

    #[test]
    fn two_hexagon_classes() {
        let classes = cut_classes(&l2()).unwrap();
        let total: usize = classes.iter().map(CutClass::size).sum();
        assert_eq!(total, 14);
        let mut shapes: Vec<(usize, usize, usize)> =
            classes.iter().map(|c| (c.size(), c.r_u.min(c.r_v), c.r_u.max(c.r_v))).collect();
        shapes.sort();
        // four oblique classes, the transverse pair of connecting edges, and
        // the longitudinal class through both hexagons
        assert_eq!(shapes, vec![(2, 0, 1), (2, 0, 1), (2, 0, 1), (2, 0, 1), (2, 1, 1), (4, 0, 0)]);
        assert_eq!(mostar_cut(&l2()).unwrap(), 48);
    }

    #[test]
    fn classes_are_cuts_with_two_sides() {
        let t = l2();
        let g = t.expand().unwrap();
        for c in cut_classes(&t).unwrap() {
            assert_eq!(g.without_edges(&c.edges).components().0, 2);
        }
    }

    #[test]
    fn class_lookup() {
        let classes = cut_classes(&l2()).unwrap();
        let c = class_of_edge(&classes, 0, 10).unwrap();
        assert!(c.contains(1, 9));
        assert!(class_of_edge(&classes, 0, 3).is_none());
    }
}
