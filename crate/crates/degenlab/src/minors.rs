//! Exponential-but-exact oracles over the minor and subgraph lattices:
//! minor-monotone ceilings with replayable witnesses, maximum subgraph
//! connectivity, the dense-subgraph connectivity search, and exact
//! chromatic / independence / clique-minor numbers.
//!
//! Every lattice walk deduplicates intermediate minors by canonical form and
//! prunes classes whose order/size ceiling already rules them out, so the
//! doubly exponential lattice collapses to a manageable class count at the
//! supported orders.

use std::collections::{HashMap, VecDeque};

use dashmap::DashMap;
use num::rational::Ratio;
use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::GraphError;
use crate::graph::{mask_below, BitIter, Graph, MinorOp};
use crate::iso::{canonical_key, CanonKey};

/// Per-operation order caps. The lattice oracles are exponential; these are
/// the largest orders they accept.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    /// Minor-lattice searches (ceilings, clique minors).
    pub minor_cap: usize,
    /// Induced-subgraph searches (max subgraph connectivity).
    pub subgraph_cap: usize,
    /// Exact chromatic and independence numbers.
    pub exact_cap: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            minor_cap: 10,
            subgraph_cap: 12,
            exact_cap: 12,
        }
    }
}

impl OracleCaps {
    /// Defaults overridden by `DEGENLAB_MINOR_CAP` / `DEGENLAB_SUBGRAPH_CAP`.
    pub fn from_env() -> Self {
        let mut caps = OracleCaps::default();
        if let Some(v) = read_env_cap("DEGENLAB_MINOR_CAP") {
            caps.minor_cap = v.min(crate::iso::CANON_CAP);
        }
        if let Some(v) = read_env_cap("DEGENLAB_SUBGRAPH_CAP") {
            caps.subgraph_cap = v.min(16);
            caps.exact_cap = caps.exact_cap.max(caps.subgraph_cap).min(16);
        }
        caps
    }
}

fn read_env_cap(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.trim().parse().ok()
}

/// Which parameter a ceiling is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CeilingParam {
    MinDegree,
    Connectivity,
    AverageDegree,
}

impl std::str::FromStr for CeilingParam {
    type Err = crate::error::DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "delta" => Ok(CeilingParam::MinDegree),
            "kappa" => Ok(CeilingParam::Connectivity),
            "d" | "avg-degree" => Ok(CeilingParam::AverageDegree),
            other => Err(crate::error::DomainError::Invalid(format!(
                "unknown ceiling parameter \"{other}\" (expected delta, kappa, or d)"
            ))),
        }
    }
}

fn param_value(g: &Graph, param: CeilingParam) -> Ratio<u64> {
    match param {
        CeilingParam::MinDegree => Ratio::from_integer(g.degree_stats().min_degree as u64),
        CeilingParam::Connectivity => Ratio::from_integer(vertex_connectivity(g) as u64),
        CeilingParam::AverageDegree => Ratio::new((2 * g.m()) as u64, g.n() as u64),
    }
}

/// Upper bound on the parameter over every minor reachable from a graph of
/// order n and size m: any minor on n'' vertices has at most m edges, so its
/// value is at most min(n''-1, 2m/n'').
fn param_upper_bound(n: usize, m: usize, param: CeilingParam) -> Ratio<u64> {
    let mut best = Ratio::from_integer(0u64);
    for order in 1..=n as u64 {
        let by_order = Ratio::from_integer(order - 1);
        let by_size = match param {
            CeilingParam::AverageDegree => Ratio::new(2 * m as u64, order),
            _ => Ratio::from_integer(2 * m as u64 / order),
        };
        best = best.max(by_order.min(by_size));
    }
    best
}

/// All single minor operations applicable to g, in a fixed order.
fn minor_ops(g: &Graph) -> Vec<MinorOp> {
    let mut ops = Vec::new();
    if g.n() >= 2 {
        for v in g.vertices() {
            ops.push(MinorOp::DeleteVertex(v));
        }
    }
    for (u, v) in g.edges() {
        ops.push(MinorOp::DeleteEdge(u, v));
    }
    for (u, v) in g.edges() {
        ops.push(MinorOp::ContractEdge(u, v));
    }
    ops
}

/// Shared value-only memo for ceilings, keyed on canonical forms so results
/// transfer between overlapping lattices. Safe for concurrent sweeps; values
/// are deterministic, so racing inserts agree.
#[derive(Default)]
pub struct CeilingOracle {
    memo: DashMap<(CanonKey, CeilingParam), Ratio<u64>>,
    eta_memo: DashMap<CanonKey, u32>,
}

impl CeilingOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact max of the parameter over all minors of g.
    pub fn ceiling_value(
        &self,
        g: &Graph,
        param: CeilingParam,
        caps: &OracleCaps,
    ) -> Result<Ratio<u64>, GraphError> {
        if g.n() > caps.minor_cap {
            return Err(GraphError::SizeLimit {
                what: "minor lattice",
                n: g.n(),
                cap: caps.minor_cap,
            });
        }
        Ok(self.ceiling_rec(g, canonical_key(g)?, param))
    }

    fn ceiling_rec(&self, g: &Graph, key: CanonKey, param: CeilingParam) -> Ratio<u64> {
        if let Some(v) = self.memo.get(&(key, param)) {
            return *v;
        }
        let mut best = param_value(g, param);
        let max_possible = Ratio::from_integer(g.n() as u64 - 1);
        if best < max_possible {
            let mut seen: HashMap<CanonKey, Graph> = HashMap::new();
            for op in minor_ops(g) {
                let child = g.apply_minor_op(op).expect("ops enumerated from g");
                let ck = canonical_key(&child).expect("children are within the cap");
                seen.entry(ck).or_insert(child);
            }
            for (ck, child) in seen {
                // A child whose whole sublattice cannot beat the current max
                // contributes nothing.
                if param_upper_bound(child.n(), child.m(), param) <= best {
                    continue;
                }
                best = best.max(self.ceiling_rec(&child, ck, param));
                if best == max_possible {
                    break;
                }
            }
        }
        self.memo.insert((key, param), best);
        best
    }

    /// Largest t such that the complete graph on t vertices is a minor of g:
    /// the max clique number over the minor lattice.
    pub fn hadwiger_number(&self, g: &Graph, caps: &OracleCaps) -> Result<u32, GraphError> {
        if g.n() > caps.minor_cap {
            return Err(GraphError::SizeLimit {
                what: "clique-minor search",
                n: g.n(),
                cap: caps.minor_cap,
            });
        }
        Ok(self.eta_rec(g, canonical_key(g)?))
    }

    fn eta_rec(&self, g: &Graph, key: CanonKey) -> u32 {
        if let Some(v) = self.eta_memo.get(&key) {
            return *v;
        }
        let mut best = clique_number(g);
        if (best as usize) < g.n() {
            let mut seen: HashMap<CanonKey, Graph> = HashMap::new();
            for op in minor_ops(g) {
                let child = g.apply_minor_op(op).expect("ops enumerated from g");
                let ck = canonical_key(&child).expect("children are within the cap");
                seen.entry(ck).or_insert(child);
            }
            for (ck, child) in seen {
                if eta_upper_bound(child.n(), child.m()) <= best {
                    continue;
                }
                best = best.max(self.eta_rec(&child, ck));
                if best as usize == g.n() {
                    break;
                }
            }
        }
        self.eta_memo.insert(key, best);
        best
    }
}

/// A complete minor on t vertices needs t vertices and t(t-1)/2 edges.
fn eta_upper_bound(n: usize, m: usize) -> u32 {
    (1..=n as u32)
        .filter(|&t| (t as usize) * (t as usize - 1) / 2 <= m)
        .max()
        .unwrap_or(1)
}

/// A ceiling value plus the operation sequence reaching a witnessing minor.
#[derive(Clone, Debug)]
pub struct CeilingWitness {
    pub value: Ratio<u64>,
    pub ops: Vec<MinorOp>,
    pub witness: Graph,
}

impl CeilingWitness {
    /// Replays the operation sequence from `source` and confirms both the
    /// witness graph and its parameter value.
    pub fn replay(&self, source: &Graph, param: CeilingParam) -> Result<bool, GraphError> {
        let mut g = source.clone();
        for &op in &self.ops {
            g = g.apply_minor_op(op)?;
        }
        Ok(g == self.witness && param_value(&g, param) == self.value)
    }
}

/// Exact minor-monotone ceiling with a replayable witness, breadth-first
/// over the minor lattice with canonical-form dedup.
pub fn ceiling(
    g: &Graph,
    param: CeilingParam,
    caps: &OracleCaps,
) -> Result<CeilingWitness, GraphError> {
    if g.n() > caps.minor_cap {
        return Err(GraphError::SizeLimit {
            what: "minor lattice",
            n: g.n(),
            cap: caps.minor_cap,
        });
    }
    struct Node {
        graph: Graph,
        parent: usize,
        op: Option<MinorOp>,
    }
    let mut nodes = vec![Node {
        graph: g.clone(),
        parent: 0,
        op: None,
    }];
    let mut visited: HashMap<CanonKey, ()> = HashMap::new();
    visited.insert(canonical_key(g)?, ());
    let mut best_value = param_value(g, param);
    let mut best_node = 0usize;
    let max_possible = Ratio::from_integer(g.n() as u64 - 1);
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        if best_value == max_possible {
            break;
        }
        let graph = nodes[id].graph.clone();
        for op in minor_ops(&graph) {
            let child = graph.apply_minor_op(op).expect("ops enumerated from graph");
            let key = canonical_key(&child).expect("within cap");
            if visited.contains_key(&key) {
                continue;
            }
            visited.insert(key, ());
            // Pruned classes can never host a strict improvement, so marking
            // them visited is permanent and safe: the best only grows.
            if param_upper_bound(child.n(), child.m(), param) <= best_value {
                continue;
            }
            let value = param_value(&child, param);
            nodes.push(Node {
                graph: child,
                parent: id,
                op: Some(op),
            });
            let child_id = nodes.len() - 1;
            if value > best_value {
                best_value = value;
                best_node = child_id;
            }
            queue.push_back(child_id);
        }
    }
    let mut ops = Vec::new();
    let mut at = best_node;
    while let Some(op) = nodes[at].op {
        ops.push(op);
        at = nodes[at].parent;
    }
    ops.reverse();
    Ok(CeilingWitness {
        value: best_value,
        ops,
        witness: nodes[best_node].graph.clone(),
    })
}

/// Maximum vertex connectivity over all induced subgraphs. Edge deletions
/// never increase connectivity, so induced subgraphs suffice.
pub fn max_subgraph_connectivity(g: &Graph, caps: &OracleCaps) -> Result<usize, GraphError> {
    let n = g.n();
    if n > caps.subgraph_cap {
        return Err(GraphError::SizeLimit {
            what: "subgraph search",
            n,
            cap: caps.subgraph_cap,
        });
    }
    let mut best = 0usize;
    for mask in 1u64..=mask_below(n) {
        // kappa <= |S| - 1, so small subsets cannot improve.
        if (mask.count_ones() as usize) < best + 2 {
            continue;
        }
        let h = g.induced_subgraph(mask).expect("nonempty mask");
        best = best.max(vertex_connectivity(&h));
    }
    Ok(best)
}

/// Searches for an induced subgraph with connectivity at least k. Vertices
/// of degree below k can never participate, so the pool is peeled first.
pub fn mader_subgraph_search(
    g: &Graph,
    k: usize,
    caps: &OracleCaps,
) -> Result<Option<(u64, Graph)>, GraphError> {
    let n = g.n();
    if n > caps.subgraph_cap {
        return Err(GraphError::SizeLimit {
            what: "subgraph search",
            n,
            cap: caps.subgraph_cap,
        });
    }
    if k == 0 {
        return Ok(Some((mask_below(n), g.clone())));
    }
    // Iterated peel: a vertex of degree < k inside the pool cannot be in any
    // k-connected subgraph.
    let mut pool = mask_below(n);
    loop {
        let mut changed = false;
        for v in BitIter(pool) {
            if ((g.neighbors(v) & pool).count_ones() as usize) < k {
                pool &= !(1u64 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if (pool.count_ones() as usize) < k + 1 {
        return Ok(None);
    }
    // Enumerate subsets of the pool, largest first.
    let mut subsets = Vec::new();
    let mut s = pool;
    loop {
        if s.count_ones() as usize > k {
            subsets.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & pool;
    }
    subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    for mask in subsets {
        let h = g.induced_subgraph(mask).expect("nonempty");
        if vertex_connectivity(&h) >= k {
            return Ok(Some((mask, h)));
        }
    }
    Ok(None)
}

/// Exact independence number by branch and bound on the neighborhood
/// bitmask.
pub fn independence_number(g: &Graph, caps: &OracleCaps) -> Result<u32, GraphError> {
    if g.n() > caps.exact_cap {
        return Err(GraphError::SizeLimit {
            what: "exact independence number",
            n: g.n(),
            cap: caps.exact_cap,
        });
    }
    Ok(mis(g, mask_below(g.n())))
}

fn mis(g: &Graph, candidates: u64) -> u32 {
    if candidates == 0 {
        return 0;
    }
    let v = BitIter(candidates)
        .max_by_key(|&v| (g.neighbors(v) & candidates).count_ones())
        .expect("nonempty");
    if g.neighbors(v) & candidates == 0 {
        // Isolated within the candidate set: always take it.
        return 1 + mis(g, candidates & !(1u64 << v));
    }
    let take = 1 + mis(g, candidates & !(g.neighbors(v) | (1 << v)));
    let skip = mis(g, candidates & !(1u64 << v));
    take.max(skip)
}

/// Clique number, as the independence number of the complement.
pub fn clique_number(g: &Graph) -> u32 {
    mis(&g.complement(), mask_below(g.n()))
}

/// Exact chromatic number by iterative-deepening backtracking between the
/// clique lower bound and a greedy upper bound.
pub fn chromatic_number(g: &Graph, caps: &OracleCaps) -> Result<u32, GraphError> {
    if g.n() > caps.exact_cap {
        return Err(GraphError::SizeLimit {
            what: "exact chromatic number",
            n: g.n(),
            cap: caps.exact_cap,
        });
    }
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let greedy = {
        let mut colors = vec![usize::MAX; n];
        let mut used = 0;
        for &v in &order {
            let mut taken = 0u64;
            for w in BitIter(g.neighbors(v)) {
                if colors[w] != usize::MAX {
                    taken |= 1 << colors[w];
                }
            }
            let c = (0..).find(|&c| taken & (1 << c) == 0).expect("a color is free");
            colors[v] = c;
            used = used.max(c + 1);
        }
        used as u32
    };
    let lb = clique_number(g);
    for k in lb..=greedy {
        let mut colors = vec![usize::MAX; n];
        if colorable(g, &order, 0, k as usize, 0, &mut colors) {
            return Ok(k);
        }
    }
    Ok(greedy)
}

fn colorable(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut taken = 0u64;
    for w in BitIter(g.neighbors(v)) {
        if colors[w] != usize::MAX {
            taken |= 1 << colors[w];
        }
    }
    // Trying one fresh color is enough; further fresh colors are symmetric.
    for c in 0..k.min(used + 1) {
        if taken & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if colorable(g, order, depth + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Exact chromatic number, independence number, and clique-minor order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExactParams {
    pub chi: u32,
    pub alpha: u32,
    pub eta: u32,
}

pub fn exact_parameters(
    g: &Graph,
    oracle: &CeilingOracle,
    caps: &OracleCaps,
) -> Result<ExactParams, GraphError> {
    Ok(ExactParams {
        chi: chromatic_number(g, caps)?,
        alpha: independence_number(g, caps)?,
        eta: oracle.hadwiger_number(g, caps)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    fn int(v: u64) -> Ratio<u64> {
        Ratio::from_integer(v)
    }

    #[test]
    fn ceiling_of_complete_graph_is_itself() {
        let g = Graph::complete(6).unwrap();
        let w = ceiling(&g, CeilingParam::MinDegree, &caps()).unwrap();
        assert_eq!(w.value, int(5));
        assert!(w.ops.is_empty());
        assert_eq!(w.witness, g);
    }

    #[test]
    fn ceiling_of_tree_connectivity_is_one() {
        let g = families::path(6).unwrap();
        let w = ceiling(&g, CeilingParam::Connectivity, &caps()).unwrap();
        assert_eq!(w.value, int(1));
        assert!(w.replay(&g, CeilingParam::Connectivity).unwrap());
    }

    #[test]
    fn figure1_reaches_degree_four_both_sides() {
        let g = families::figure1();
        let w = ceiling(&g, CeilingParam::MinDegree, &caps()).unwrap();
        assert_eq!(w.value, int(4));
        assert!(w.replay(&g, CeilingParam::MinDegree).unwrap());
        let c = g.complement();
        let wc = ceiling(&c, CeilingParam::MinDegree, &caps()).unwrap();
        assert_eq!(wc.value, int(4));
    }

    #[test]
    fn petersen_degree_ceiling_is_four() {
        // Contracting a perfect matching of the Petersen graph yields K5.
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let mut edges = Vec::new();
        edges.extend(outer);
        edges.extend(spokes);
        edges.extend(inner);
        let g = Graph::from_edges(10, &edges).unwrap();
        let oracle = CeilingOracle::new();
        assert_eq!(
            oracle.ceiling_value(&g, CeilingParam::MinDegree, &caps()).unwrap(),
            int(4)
        );
        assert_eq!(oracle.hadwiger_number(&g, &caps()).unwrap(), 5);
    }

    #[test]
    fn witness_value_matches_memoized_value() {
        let oracle = CeilingOracle::new();
        for bits in [0u64, 7, 101, 300, 511, 730, 1023] {
            let g = crate::codec::graph_from_triangle_bits(5, bits);
            for param in [
                CeilingParam::MinDegree,
                CeilingParam::Connectivity,
                CeilingParam::AverageDegree,
            ] {
                let w = ceiling(&g, param, &caps()).unwrap();
                assert_eq!(w.value, oracle.ceiling_value(&g, param, &caps()).unwrap());
                assert!(w.replay(&g, param).unwrap());
            }
        }
    }

    #[test]
    fn size_limit_is_reported() {
        let g = families::cycle(11).unwrap();
        assert!(matches!(
            ceiling(&g, CeilingParam::MinDegree, &caps()),
            Err(GraphError::SizeLimit { .. })
        ));
    }

    #[test]
    fn max_subgraph_connectivity_examples() {
        assert_eq!(
            max_subgraph_connectivity(&families::matula(1).unwrap(), &caps()).unwrap(),
            1
        );
        assert_eq!(
            max_subgraph_connectivity(&families::matula(2).unwrap(), &caps()).unwrap(),
            2
        );
        assert_eq!(
            max_subgraph_connectivity(&Graph::complete(7).unwrap(), &caps()).unwrap(),
            6
        );
    }

    #[test]
    fn mader_search_examples() {
        let (mask, h) = mader_subgraph_search(&Graph::complete(7).unwrap(), 4, &caps())
            .unwrap()
            .unwrap();
        assert_eq!(mask.count_ones(), 7);
        assert_eq!(vertex_connectivity(&h), 6);
        assert!(mader_subgraph_search(&families::path(4).unwrap(), 2, &caps())
            .unwrap()
            .is_none());
        let (_, c5) = mader_subgraph_search(&families::cycle(5).unwrap(), 2, &caps())
            .unwrap()
            .unwrap();
        assert_eq!(c5.n(), 5);
    }

    #[test]
    fn exact_params_examples() {
        let oracle = CeilingOracle::new();
        let c5 = families::cycle(5).unwrap();
        assert_eq!(
            exact_parameters(&c5, &oracle, &caps()).unwrap(),
            ExactParams { chi: 3, alpha: 2, eta: 3 }
        );
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(
            exact_parameters(&k5, &oracle, &caps()).unwrap(),
            ExactParams { chi: 5, alpha: 1, eta: 5 }
        );
        let p4 = families::path(4).unwrap();
        assert_eq!(
            exact_parameters(&p4, &oracle, &caps()).unwrap(),
            ExactParams { chi: 2, alpha: 2, eta: 2 }
        );
    }

    #[test]
    fn chromatic_matches_brute_force_small() {
        for n in 1..=5usize {
            let tri = n * (n - 1) / 2;
            for bits in 0u64..(1 << tri) {
                let g = crate::codec::graph_from_triangle_bits(n, bits);
                assert_eq!(
                    chromatic_number(&g, &caps()).unwrap(),
                    brute_chi(&g),
                    "chi mismatch on {g:?}"
                );
            }
        }
    }

    fn brute_chi(g: &Graph) -> u32 {
        let n = g.n();
        let edges = g.edges();
        for k in 1..=n as u32 {
            let mut assign = vec![0u32; n];
            loop {
                if edges.iter().all(|&(u, v)| assign[u] != assign[v]) {
                    return k;
                }
                // Odometer over all k^n assignments.
                let mut pos = 0;
                while pos < n {
                    assign[pos] += 1;
                    if assign[pos] < k {
                        break;
                    }
                    assign[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
        unreachable!("every graph is n-colorable");
    }
}
