//! Exact vertex connectivity via Menger's theorem: the minimum over relevant
//! vertex pairs of the maximum number of internally disjoint paths, computed
//! as unit-capacity max-flow on the split digraph.

use crate::graph::{mask_below, BitIter, Graph};

/// Vertex connectivity kappa(G).
///
/// Conventions: kappa(K_n) = n-1, kappa of a disconnected graph is 0, and
/// kappa(K_1) = 0, so kappa <= min degree holds for every graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n - 1;
    }
    // Some minimum cut misses {v0} u N(v0) when v0 has minimum degree, so
    // restricting sources to that set is exact for non-complete graphs.
    let v0 = (0..n)
        .min_by_key(|&v| (g.degree(v), v))
        .expect("n >= 1");
    let mut best = n - 1;
    let mut sources = g.neighbors(v0) | (1 << v0);
    sources &= mask_below(n);
    for s in BitIter(sources) {
        let non_adjacent = !g.neighbors(s) & !(1u64 << s) & mask_below(n);
        for t in BitIter(non_adjacent) {
            let flow = disjoint_paths(g, s, t, best);
            best = best.min(flow);
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Maximum number of internally disjoint s-t paths for non-adjacent s, t,
/// stopping early once `cap` paths are found.
fn disjoint_paths(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // Split digraph: node 2v = v_in, 2v+1 = v_out. Unit capacity through each
    // interior vertex; edges have effectively unbounded capacity because each
    // direction can only ever carry one unit here.
    let n = g.n();
    let mut through = vec![1u8; n]; // residual capacity of v_in -> v_out
    let mut used_edge = vec![0u64; n]; // used_edge[u] bit v: flow pushed u_out -> v_in
    through[s] = u8::MAX;
    through[t] = u8::MAX;
    let mut flow = 0;
    while flow < cap {
        // BFS over residual network from s_out to t_in.
        let mut prev: Vec<Option<usize>> = vec![None; 2 * n]; // predecessor node
        let start = 2 * s + 1;
        let goal = 2 * t;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        prev[start] = Some(start);
        'bfs: while let Some(node) = queue.pop_front() {
            let v = node / 2;
            if node % 2 == 1 {
                // v_out: forward arcs to w_in along graph edges (if not already
                // carrying flow), plus the reverse arc v_out -> v_in.
                for w in BitIter(g.neighbors(v)) {
                    let nxt = 2 * w;
                    if used_edge[v] & (1 << w) == 0 && prev[nxt].is_none() {
                        prev[nxt] = Some(node);
                        if nxt == goal {
                            break 'bfs;
                        }
                        queue.push_back(nxt);
                    }
                }
                let nxt = 2 * v;
                if through[v] == 0 && prev[nxt].is_none() {
                    prev[nxt] = Some(node);
                    queue.push_back(nxt);
                }
            } else {
                // v_in: through arc to v_out, plus reverse arcs w_out <- v_in
                // for flow arriving from w.
                let nxt = 2 * v + 1;
                if through[v] > 0 && prev[nxt].is_none() {
                    prev[nxt] = Some(node);
                    queue.push_back(nxt);
                }
                for w in BitIter(g.neighbors(v)) {
                    let nxt = 2 * w + 1;
                    if used_edge[w] & (1 << v) != 0 && prev[nxt].is_none() {
                        prev[nxt] = Some(node);
                        queue.push_back(nxt);
                    }
                }
            }
        }
        if prev[goal].is_none() {
            break;
        }
        // Augment along the found path.
        let mut node = goal;
        while node != start {
            let p = prev[node].expect("path reconstructed");
            let (pv, nv) = (p / 2, node / 2);
            match (p % 2, node % 2) {
                (1, 0) => {
                    if pv == nv {
                        through[pv] += 1; // took the reverse of the through arc
                    } else {
                        used_edge[pv] |= 1 << nv;
                    }
                }
                (0, 1) => {
                    if pv == nv {
                        through[pv] -= 1;
                    } else {
                        used_edge[nv] &= !(1 << pv); // cancel flow nv -> pv
                    }
                }
                _ => unreachable!("split digraph alternates in/out nodes"),
            }
            node = p;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    #[test]
    fn kappa_of_named_graphs() {
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&families::path(4).unwrap()), 1);
        assert_eq!(vertex_connectivity(&families::cycle(5).unwrap()), 2);
        assert_eq!(vertex_connectivity(&Graph::empty(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(4).unwrap()), 0);
    }

    #[test]
    fn kappa_of_disconnected_graph_is_zero() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g), 0);
    }

    #[test]
    fn kappa_of_complete_bipartite() {
        let g = families::complete_bipartite(3, 4).unwrap();
        assert_eq!(vertex_connectivity(&g), 3);
    }

    #[test]
    fn kappa_never_exceeds_min_degree_small() {
        // Exhaustive over all labeled graphs on 5 vertices.
        for bits in 0u64..(1 << 10) {
            let g = crate::codec::graph_from_triangle_bits(5, bits);
            let kappa = vertex_connectivity(&g);
            let delta = g.degree_stats().min_degree;
            assert!(kappa <= delta, "kappa {kappa} > delta {delta} on {g:?}");
        }
    }

    #[test]
    fn kappa_matches_cut_enumeration_on_6_vertex_samples() {
        // Independent oracle: smallest vertex subset whose removal
        // disconnects the graph (or n-1 for complete graphs).
        for seed in 0u64..400 {
            let bits = seed.wrapping_mul(0x9e3779b97f4a7c15) & ((1 << 15) - 1);
            let g = crate::codec::graph_from_triangle_bits(6, bits);
            assert_eq!(
                vertex_connectivity(&g),
                brute_force_kappa(&g),
                "mismatch on {g:?}"
            );
        }
    }

    fn brute_force_kappa(g: &Graph) -> usize {
        let n = g.n();
        if g.is_complete() {
            return n - 1;
        }
        for size in 0..n - 1 {
            for cut in 0u64..(1 << n) {
                if cut.count_ones() as usize != size {
                    continue;
                }
                let rest = crate::graph::mask_below(n) & !cut;
                if rest.count_ones() >= 2 {
                    if let Ok(h) = g.induced_subgraph(rest) {
                        if !is_connected(&h) {
                            return size;
                        }
                    }
                }
            }
        }
        n - 1
    }

    fn is_connected(g: &Graph) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in crate::graph::BitIter(frontier) {
                next |= g.neighbors(v);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == g.n()
    }
}
