//! Core graph type: simple undirected graphs on up to 64 vertices.
//!
//! The adjacency matrix is stored as one `u64` bitmask per vertex, which keeps
//! every elementary operation (complement, degree, neighborhood intersection)
//! a handful of word operations. Vertices are 0-indexed internally and
//! 1-indexed in all user-facing text.

use std::fmt;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Hard cap so an adjacency row always fits one machine word.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph (no loops, no multiple edges), order 1..=64.
///
/// Immutable after construction; all operations return fresh graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            m: 0,
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = mask_below(n);
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        g.m = n * (n - 1) / 2;
        Ok(g)
    }

    /// Builds a graph from 0-indexed endpoint pairs. Duplicate pairs are
    /// rejected so edge counts in callers stay honest.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
            g.m += 1;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, validating symmetry and
    /// an empty diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let valid = mask_below(n);
        let mut m2 = 0usize;
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(GraphError::InvalidRow(v));
            }
            if row & (1 << v) != 0 {
                return Err(GraphError::LoopAt(v));
            }
            for u in BitIter(row) {
                if rows[u] & (1 << v) == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
            m2 += row.count_ones() as usize;
        }
        Ok(Graph { n, rows, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges in lexicographic order, `u < v`, 0-indexed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in BitIter(self.rows[u] & !mask_below(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let valid = mask_below(self.n);
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & valid & !(1u64 << v))
            .collect();
        Graph {
            n: self.n,
            rows,
            m: self.n * (self.n - 1) / 2 - self.m,
        }
    }

    /// The subgraph induced by the vertices set in `mask`, relabeled to
    /// 0..popcount(mask) preserving relative order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = BitIter(mask & mask_below(self.n)).collect();
        if verts.is_empty() {
            return Err(GraphError::OrderOutOfRange(0));
        }
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                    g.m += 1;
                }
            }
        }
        Ok(g)
    }

    /// Applies one minor operation, compacting vertex indices.
    ///
    /// Contraction keeps the smaller endpoint's index, merges the two
    /// neighborhoods, and drops the loop that the merge would create.
    pub fn apply_minor_op(&self, op: MinorOp) -> Result<Graph, GraphError> {
        match op {
            MinorOp::DeleteVertex(v) => {
                if v >= self.n {
                    return Err(GraphError::InvalidOperand { op, n: self.n });
                }
                if self.n < 2 {
                    return Err(GraphError::LastVertex);
                }
                Ok(self.drop_vertex(v))
            }
            MinorOp::DeleteEdge(u, v) => {
                if !self.has_edge(u, v) {
                    return Err(GraphError::InvalidOperand { op, n: self.n });
                }
                let mut g = self.clone();
                g.rows[u] &= !(1 << v);
                g.rows[v] &= !(1 << u);
                g.m -= 1;
                Ok(g)
            }
            MinorOp::ContractEdge(u, v) => {
                if !self.has_edge(u, v) {
                    return Err(GraphError::InvalidOperand { op, n: self.n });
                }
                let (keep, gone) = (u.min(v), u.max(v));
                let mut g = self.clone();
                let merged = (g.rows[keep] | g.rows[gone]) & !(1 << keep) & !(1 << gone);
                g.rows[keep] = merged;
                for w in 0..g.n {
                    if w != keep {
                        if merged & (1 << w) != 0 {
                            g.rows[w] |= 1 << keep;
                        } else {
                            g.rows[w] &= !(1 << keep);
                        }
                    }
                }
                g.rows[gone] = 0;
                for w in 0..g.n {
                    g.rows[w] &= !(1 << gone);
                }
                let g = Graph::from_rows_unchecked(g.rows, g.n).drop_vertex(gone);
                Ok(g)
            }
        }
    }

    fn from_rows_unchecked(rows: Vec<u64>, n: usize) -> Graph {
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, rows, m }
    }

    fn drop_vertex(&self, v: usize) -> Graph {
        let low = mask_below(v);
        let rows: Vec<u64> = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| {
                let r = self.rows[w];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Graph::from_rows_unchecked(rows, self.n - 1)
    }

    /// Minimum degree, maximum degree, exact average degree 2m/n, and size.
    pub fn degree_stats(&self) -> DegreeStats {
        let degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            min_degree: *degs.iter().min().expect("n >= 1"),
            max_degree: *degs.iter().max().expect("n >= 1"),
            avg_degree: Ratio::new((2 * self.m) as u64, self.n as u64),
            size: self.m,
        }
    }

    /// Length of a shortest cycle, or [`Girth::Acyclic`] for forests.
    ///
    /// For every edge uv, the shortest cycle through uv has length
    /// 1 + dist(u, v) in the graph with uv removed.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.dist_avoiding_edge(u, v) {
                let cycle = d + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
                if cycle == 3 {
                    return Girth::Finite(3);
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Acyclic,
        }
    }

    fn dist_avoiding_edge(&self, s: usize, t: usize) -> Option<usize> {
        let mut dist = [usize::MAX; MAX_VERTICES];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let mut nb = self.rows[u];
            if u == s {
                nb &= !(1 << t);
            } else if u == t {
                nb &= !(1 << s);
            }
            for w in BitIter(nb) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    if w == t {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// 1-indexed edge list, lexicographic.
    pub fn edges_1indexed(&self) -> Vec<(usize, usize)> {
        self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges_1indexed())
    }
}

/// One step in building a minor: vertex deletion, edge deletion, or edge
/// contraction. Operands are 0-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorOp {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    ContractEdge(usize, usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::DeleteVertex(v) => write!(f, "delete-vertex {}", v + 1),
            MinorOp::DeleteEdge(u, v) => write!(f, "delete-edge {}-{}", u + 1, v + 1),
            MinorOp::ContractEdge(u, v) => write!(f, "contract-edge {}-{}", u + 1, v + 1),
        }
    }
}

/// Degree summary of a graph: min degree, max degree, exact average 2m/n,
/// and size m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: Ratio<u64>,
    pub size: usize,
}

/// Girth of a graph; forests carry a distinct infinite value rather than a
/// large sentinel integer, so bound evaluators must treat it explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when the girth is at least `k` (always true for forests).
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => *g >= k,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(*g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "infinity"),
        }
    }
}

/// Iterator over the set bit positions of a word.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Mask with bits 0..n set.
pub fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
