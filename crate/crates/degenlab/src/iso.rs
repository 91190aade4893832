//! Isomorphism testing and canonical forms for small graphs.
//!
//! `canonical_key` drives deduplication in the enumerator and the minor
//! lattice memo; `is_isomorphic` is a separate mapping search so that
//! highly symmetric graphs (the self-complementarity checks) do not pay for
//! a full canonical labeling.

use crate::error::GraphError;
use crate::graph::{mask_below, BitIter, Graph};

/// Largest order accepted by `is_isomorphic`.
pub const ISO_CAP: usize = 16;
/// Largest order accepted by `canonical_key`.
pub const CANON_CAP: usize = 12;

/// Canonical form: order plus the lexicographically maximal column-major
/// upper-triangle bitstring over all vertex labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub bits: u128,
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey, GraphError> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(GraphError::SizeLimit {
            what: "canonical form",
            n,
            cap: CANON_CAP,
        });
    }
    let twin = twin_classes(g);
    let mut search = CanonSearch {
        g,
        n,
        twin,
        placed: Vec::with_capacity(n),
        placed_mask: 0,
        best: None,
        current: Vec::with_capacity(n),
    };
    search.descend();
    let cols = search.best.expect("at least one labeling");
    let mut bits: u128 = 0;
    for (d, col) in cols.iter().enumerate() {
        bits = (bits << d) | *col as u128;
    }
    Ok(CanonKey { n: n as u8, bits })
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    twin: Vec<usize>,
    placed: Vec<usize>,
    placed_mask: u64,
    /// Per-depth column bits of the best labeling found so far.
    best: Option<Vec<u64>>,
    current: Vec<u64>,
}

impl CanonSearch<'_> {
    // Invariant: whenever `best` is Some at entry, the current prefix equals
    // the best prefix at this depth. Strict improvements therefore clear
    // `best`; the leftmost completion of the improving subtree re-seeds it.
    fn descend(&mut self) {
        let d = self.placed.len();
        if d == self.n {
            if self.best.is_none() {
                self.best = Some(self.current.clone());
            }
            return;
        }
        // Column bits for each unplaced candidate: adjacency to the placed
        // prefix, most significant bit first.
        let mut cands: Vec<(u64, usize)> = BitIter(mask_below(self.n) & !self.placed_mask)
            .map(|u| {
                let mut col = 0u64;
                for &p in &self.placed {
                    col = (col << 1) | self.g.has_edge(u, p) as u64;
                }
                (col, u)
            })
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut tried_twins: Vec<usize> = Vec::new();
        for (col, u) in cands {
            if tried_twins.contains(&self.twin[u]) {
                continue; // a twin already explored an identical subtree
            }
            match &self.best {
                None => {}
                Some(best) => match col.cmp(&best[d]) {
                    std::cmp::Ordering::Less => continue, // dominated prefix
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => self.best = None,
                },
            }
            tried_twins.push(self.twin[u]);
            self.placed.push(u);
            self.placed_mask |= 1 << u;
            self.current.push(col);
            self.descend();
            self.current.pop();
            self.placed_mask &= !(1u64 << u);
            self.placed.pop();
        }
    }
}

/// Twin class per vertex: vertices with identical neighborhoods outside the
/// pair (adjacent or not) are interchangeable by an automorphism.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = next;
        let twins: Vec<usize> = (u + 1..n)
            .filter(|&v| {
                class[v] == usize::MAX
                    && g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
            })
            .collect();
        for v in twins {
            class[v] = next;
        }
        next += 1;
    }
    class
}

/// Exact isomorphism test, order at most 16.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    let n = g.n();
    for x in [g, h] {
        if x.n() > ISO_CAP {
            return Err(GraphError::SizeLimit {
                what: "isomorphism",
                n: x.n(),
                cap: ISO_CAP,
            });
        }
    }
    if n != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    if invariant_profile(g) != invariant_profile(h) {
        return Ok(false);
    }
    // Order the pattern so each vertex touches as many mapped vertices as
    // possible, then search adjacency-preserving assignments.
    let order = constrained_order(g);
    let mut mapping = vec![usize::MAX; n];
    let mut used = 0u64;
    Ok(extend(g, h, &order, 0, &mut mapping, &mut used))
}

fn invariant_profile(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut profile: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = BitIter(g.neighbors(v)).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    profile.sort();
    profile
}

fn constrained_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut chosen = 0u64;
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| chosen & (1 << v) == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbors(v) & chosen).count_ones(),
                    g.degree(v),
                    usize::MAX - v,
                )
            })
            .expect("vertices remain");
        order.push(best);
        chosen |= 1 << best;
    }
    order
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let du = g.degree(u);
    for v in 0..h.n() {
        if *used & (1 << v) != 0 || h.degree(v) != du {
            continue;
        }
        let ok = order[..depth]
            .iter()
            .all(|&a| g.has_edge(u, a) == h.has_edge(v, mapping[a]));
        if !ok {
            continue;
        }
        mapping[u] = v;
        *used |= 1 << v;
        if extend(g, h, order, depth + 1, mapping, used) {
            return true;
        }
        *used &= !(1u64 << v);
        mapping[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    #[test]
    fn p4_is_self_complementary() {
        let g = families::path(4).unwrap();
        assert!(is_isomorphic(&g, &g.complement()).unwrap());
    }

    #[test]
    fn c5_is_self_complementary() {
        let g = families::cycle(5).unwrap();
        assert!(is_isomorphic(&g, &g.complement()).unwrap());
    }

    #[test]
    fn k3_differs_from_p3() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = families::path(3).unwrap();
        assert!(!is_isomorphic(&k3, &p3).unwrap());
    }

    #[test]
    fn size_limit_enforced() {
        let g = families::cycle(17).unwrap();
        assert!(matches!(
            is_isomorphic(&g, &g),
            Err(GraphError::SizeLimit { .. })
        ));
    }

    #[test]
    fn canonical_key_is_label_invariant() {
        let g = families::cycle(6).unwrap();
        let key = canonical_key(&g).unwrap();
        // Relabel by a handful of permutations; the key must not move.
        for rot in 1..6usize {
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| ((u + rot) % 6, (v + rot) % 6))
                .collect();
            let h = Graph::from_edges(6, &edges).unwrap();
            assert_eq!(canonical_key(&h).unwrap(), key);
        }
    }

    #[test]
    fn canonical_key_separates_non_isomorphic() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = families::path(3).unwrap();
        assert_ne!(canonical_key(&k3).unwrap(), canonical_key(&p3).unwrap());
    }

    #[test]
    fn canonical_key_agrees_with_isomorphism_exhaustively() {
        // All labeled graphs on 4 vertices, pairwise.
        let graphs: Vec<Graph> = (0u64..64)
            .map(|bits| crate::codec::graph_from_triangle_bits(4, bits))
            .collect();
        for a in &graphs {
            for b in &graphs {
                let same_key = canonical_key(a).unwrap() == canonical_key(b).unwrap();
                assert_eq!(same_key, is_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn twin_heavy_graphs_canonicalize_quickly() {
        for g in [
            Graph::empty(12).unwrap(),
            Graph::complete(12).unwrap(),
            families::complete_bipartite(6, 6).unwrap(),
        ] {
            canonical_key(&g).unwrap();
        }
    }
}
