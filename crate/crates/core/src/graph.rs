//! Simple undirected graphs with exact hop distances and the distance-based
//! Mostar index.
//!
//! Every vertex's BFS is computed at most once per [`DistanceMatrix`], so the
//! full edge-split table of a graph costs `O(V * (V + E))`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MolecularGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Per-edge split: `n_u` vertices strictly closer to `u`, `n_v` strictly
/// closer to `v`, and the edge contribution `phi = |n_u - n_v|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSplit {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
    pub phi: usize,
}

impl MolecularGraph {
    /// Builds a graph from an edge list. Edges are normalized to `(min, max)`
    /// and stored sorted; loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: x, count: vertex_count });
                }
            }
            if a == b {
                return Err(Error::InvalidParameters(format!("loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidParameters(format!("parallel edge ({a}, {b})")));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { vertex_count, edges, adjacency })
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle with n >= 3")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count });
        }
        Ok(())
    }

    /// Unweighted shortest-path distances from `src`; unreachable vertices get
    /// [`UNREACHABLE`].
    pub fn bfs_distances(&self, src: usize) -> Result<Vec<u32>> {
        self.check_vertex(src)?;
        Ok(self.bfs_unchecked(src))
    }

    fn bfs_unchecked(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count];
        let mut queue = VecDeque::with_capacity(self.vertex_count);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let d = dist[x] + 1;
            for &y in &self.adjacency[x] {
                if dist[y] == UNREACHABLE {
                    dist[y] = d;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.bfs_unchecked(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.vertex_count];
        for start in 0..self.vertex_count {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.vertex_count;
        let mut data = Vec::with_capacity(n * n);
        for v in 0..n {
            data.extend(self.bfs_unchecked(v));
        }
        DistanceMatrix { n, data }
    }

    /// Split of the edge `(u, v)`; vertices equidistant from both ends count
    /// for neither.
    pub fn edge_split(&self, u: usize, v: usize) -> Result<EdgeSplit> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let du = self.bfs_unchecked(u);
        let dv = self.bfs_unchecked(v);
        Ok(split_from_rows(u, v, &du, &dv))
    }

    /// Splits of every edge, in [`edges`](Self::edges) order.
    pub fn edge_splits(&self) -> Vec<EdgeSplit> {
        let dm = self.distance_matrix();
        self.edges.iter().map(|&(u, v)| split_from_rows(u, v, dm.row(u), dm.row(v))).collect()
    }

    /// Mostar index from its definition: the sum of `|n_u - n_v|` over edges.
    pub fn mostar_direct(&self) -> Result<u64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edge_splits().iter().map(|s| s.phi as u64).sum())
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidParameters(format!(
                "permutation has length {} but graph has {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Self::from_edges(self.vertex_count, &edges)
    }

    /// Graph with the given edges removed (absent edges are ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let removed: BTreeSet<_> = removed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let kept: Vec<_> = self.edges.iter().copied().filter(|e| !removed.contains(e)).collect();
        Self::from_edges(self.vertex_count, &kept).expect("subgraph of a simple graph")
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }
}

fn split_from_rows(u: usize, v: usize, du: &[u32], dv: &[u32]) -> EdgeSplit {
    let (mut n_u, mut n_v) = (0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    EdgeSplit { u, v, n_u, n_v, phi: n_u.abs_diff(n_v) }
}

/// Row-major all-pairs hop distances.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }
}
