//! Degeneracy via iterated minimum-degree peeling, building-sequence
//! degrees, and the Lick-White edge bound.

use serde::Serialize;

use crate::error::DomainError;
use crate::graph::{mask_below, BitIter, Graph};

/// Degeneracy value together with a replayable witness ordering.
///
/// `ordering` is the building-sequence orientation (reverse peeling order):
/// position i holds the vertex whose degree into the prefix {0..=i} is
/// `back_degrees[i]`, and the maximum back degree equals `value`.
#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyCertificate {
    pub value: usize,
    pub ordering: Vec<usize>,
    pub back_degrees: Vec<usize>,
}

/// Degeneracy l(G): the largest minimum degree over subgraphs, computed by
/// peeling a minimum-degree vertex (smallest index on ties) until the graph
/// is gone.
pub fn degeneracy(g: &Graph) -> DegeneracyCertificate {
    let n = g.n();
    let mut alive = mask_below(n);
    let mut peel = Vec::with_capacity(n);
    while alive != 0 {
        let v = BitIter(alive)
            .min_by_key(|&v| ((g.neighbors(v) & alive).count_ones(), v))
            .expect("nonempty");
        peel.push(v);
        alive &= !(1u64 << v);
    }
    peel.reverse();
    certificate_for_ordering(g, peel)
}

fn certificate_for_ordering(g: &Graph, ordering: Vec<usize>) -> DegeneracyCertificate {
    let mut prefix = 0u64;
    let mut back_degrees = Vec::with_capacity(ordering.len());
    for &v in &ordering {
        back_degrees.push((g.neighbors(v) & prefix).count_ones() as usize);
        prefix |= 1 << v;
    }
    DegeneracyCertificate {
        value: back_degrees.iter().copied().max().unwrap_or(0),
        ordering,
        back_degrees,
    }
}

impl DegeneracyCertificate {
    /// Replays the ordering and confirms the recorded back degrees and value.
    pub fn replays_on(&self, g: &Graph) -> bool {
        if self.ordering.len() != g.n() {
            return false;
        }
        let fresh = certificate_for_ordering(g, self.ordering.clone());
        fresh.back_degrees == self.back_degrees && fresh.value == self.value
    }
}

/// Degree of `sigma` as a building sequence: the maximum over positions i of
/// the degree of sigma[i] inside the induced prefix. Always at least l(G).
pub fn building_sequence_degree(g: &Graph, sigma: &[usize]) -> Result<usize, DomainError> {
    let n = g.n();
    if sigma.len() != n {
        return Err(DomainError::NotAPermutation);
    }
    let mut seen = 0u64;
    for &v in sigma {
        if v >= n || seen & (1 << v) != 0 {
            return Err(DomainError::NotAPermutation);
        }
        seen |= 1 << v;
    }
    Ok(certificate_for_ordering(g, sigma.to_vec()).value)
}

/// Largest size of a graph of order n with degeneracy at most k:
/// kn - k(k+1)/2.
pub fn lick_white_bound(n: u64, k: u64) -> Result<u64, DomainError> {
    if k >= n {
        return Err(DomainError::Invalid(format!(
            "lick-white bound needs 0 <= k < n, got k={k}, n={n}"
        )));
    }
    Ok(k * n - k * (k + 1) / 2)
}

/// Independent brute-force oracle: max over induced subgraphs of the minimum
/// degree. Exponential; for cross-checking the peeling implementation.
pub fn degeneracy_by_subgraph_scan(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 1u64..(1 << n) {
        let min_deg = BitIter(mask)
            .map(|v| (g.neighbors(v) & mask).count_ones() as usize)
            .min()
            .expect("mask nonempty");
        best = best.max(min_deg);
    }
    best
}
