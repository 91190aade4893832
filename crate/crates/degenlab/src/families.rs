//! Constructors for the named graphs and families used as examples and
//! extremal witnesses.

use std::str::FromStr;

use crate::error::{DomainError, GraphError};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Blow-up of P4 where the two end vertices become copies of K_s, the two
/// internal vertices become copies of the empty graph on s vertices, and
/// consecutive blocks are fully joined. The result has 4s vertices, size
/// s(s-1) + 3s^2, is self-complementary, and its densest subgraph is only
/// s-connected.
///
/// Vertex order is block-major: {0..s} and {3s..4s} are the cliques.
pub fn matula(s: usize) -> Result<Graph, GraphError> {
    if s == 0 || 4 * s > crate::graph::MAX_VERTICES {
        return Err(GraphError::SizeLimit {
            what: "matula family",
            n: 4 * s,
            cap: crate::graph::MAX_VERTICES,
        });
    }
    let block = |i: usize| -> std::ops::Range<usize> { (i * s)..((i + 1) * s) };
    let mut edges = Vec::new();
    for b in [0, 3] {
        for u in block(b) {
            for v in u + 1..block(b).end {
                edges.push((u, v));
            }
        }
    }
    for b in 0..3 {
        for u in block(b) {
            for v in block(b + 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(4 * s, &edges)
}

/// The 8-vertex counterexample showing the minor-monotone ceiling of the
/// minimum degree has no Nordhaus-Gaddum upper bound of n-1.
///
/// Reconstructed from a drawing; see [`FIGURE1_NOTE`] for the reading used.
pub fn figure1() -> Graph {
    Graph::from_edges(8, &FIGURE1_EDGES.map(|(u, v)| (u - 1, v - 1)))
        .expect("fixed edge list is valid")
}

/// 1-indexed edge list of [`figure1`].
pub const FIGURE1_EDGES: [(usize, usize); 13] = [
    (1, 2),
    (1, 3),
    (1, 5),
    (1, 7),
    (2, 4),
    (2, 6),
    (2, 8),
    (3, 4),
    (3, 7),
    (4, 6),
    (5, 6),
    (6, 8),
    (7, 8),
];

/// Provenance of the [`figure1`] edge set.
pub const FIGURE1_NOTE: &str = "reconstructed from a drawing: the straight \
top segment through three collinear vertices is read as the two edges 4-6 \
and 6-8, and the bottom curve as the single edge 3-7";

/// A named family plus its integer parameters, as accepted on the command
/// line ("path:4", "matula:2", "figure1").
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Empty,
    Matula,
    Figure1,
}

impl FamilyKind {
    fn arity(self) -> usize {
        match self {
            FamilyKind::CompleteBipartite => 2,
            FamilyKind::Figure1 => 0,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::Empty => "empty",
            FamilyKind::Matula => "matula",
            FamilyKind::Figure1 => "figure1",
        }
    }
}

impl FromStr for FamilySpec {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        let kind = match name {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "complete-bipartite" => FamilyKind::CompleteBipartite,
            "empty" => FamilyKind::Empty,
            "matula" => FamilyKind::Matula,
            "figure1" => FamilyKind::Figure1,
            other => {
                return Err(DomainError::Invalid(format!("unknown family \"{other}\"")));
            }
        };
        let params: Vec<usize> = match rest {
            None => vec![],
            Some(r) => r
                .split(',')
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| DomainError::Invalid(format!("bad parameter \"{t}\"")))
                })
                .collect::<Result<_, _>>()?,
        };
        if params.len() != kind.arity() {
            return Err(DomainError::Invalid(format!(
                "{} takes {} parameter(s), got {}",
                kind.name(),
                kind.arity(),
                params.len()
            )));
        }
        if params.contains(&0) {
            return Err(DomainError::Invalid("parameters must be >= 1".into()));
        }
        Ok(FamilySpec { kind, params })
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, DomainError> {
        let p = |i: usize| self.params[i];
        let g = match self.kind {
            FamilyKind::Path => path(p(0)),
            FamilyKind::Cycle => cycle(p(0)),
            FamilyKind::Complete => Graph::complete(p(0)),
            FamilyKind::CompleteBipartite => complete_bipartite(p(0), p(1)),
            FamilyKind::Empty => Graph::empty(p(0)),
            FamilyKind::Matula => matula(p(0)),
            FamilyKind::Figure1 => Ok(figure1()),
        };
        g.map_err(|e| DomainError::Invalid(e.to_string()))
    }
}
