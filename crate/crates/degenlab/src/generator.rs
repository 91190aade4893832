//! Deterministic generator for graphs whose degeneracy pair
//! (l(G), l(G^c)) is a right-minimal covering pair, plus a full execution
//! trace and a checker for every internal invariant the correctness proof
//! relies on.
//!
//! Vertices join one at a time. The first h+1 vertices form a clique; each
//! later vertex i connects to the h predecessors whose complement-degree
//! counter L is currently largest (ties to the smallest index), and every
//! non-chosen predecessor has its counter bumped. The counter vector L
//! tracks degrees in the complement, so its final maximum is l(G^c).

use serde::Serialize;
use thiserror::Error;

use crate::covering::{is_covering_sum, minimal_k_pair_for_sum};
use crate::error::DomainError;
use crate::graph::Graph;

/// Snapshot of one iteration i (1-indexed, 2..=n), taken after the update
/// loop at the end of the iteration.
#[derive(Clone, Debug, Serialize)]
pub struct TraceRow {
    pub i: usize,
    /// Chosen neighbor set S_i, 0-indexed, ascending.
    pub chosen: Vec<usize>,
    /// The counter vector L after this iteration, one entry per vertex.
    pub l_after: Vec<u32>,
    /// max of L.
    pub t: u32,
    /// sum of L.
    pub sigma: u64,
    /// Count of entries equal to t-1 (0 when t = 0).
    pub p: u32,
    /// Count of entries equal to t.
    pub q: u32,
    /// Histogram of L values, indices 0..=t.
    pub psi: Vec<u32>,
}

/// Per-iteration execution trace of the generator.
#[derive(Clone, Debug, Serialize)]
pub struct GenTrace {
    pub n: usize,
    pub h: usize,
    pub rows: Vec<TraceRow>,
}

impl GenTrace {
    /// Final maximum counter value; equals l(G^c) for the generated graph.
    pub fn final_t(&self) -> u32 {
        self.rows.last().map_or(0, |r| r.t)
    }

    pub fn final_sigma(&self) -> u64 {
        self.rows.last().map_or(0, |r| r.sigma)
    }
}

/// Runs the generator for 0 <= h < n <= 64. Deterministic; the resulting
/// graph has size hn - h(h+1)/2, degeneracy exactly h, and (h, l(G^c)) is a
/// right-minimal covering pair of order n.
pub fn generate(n: usize, h: usize) -> Result<(Graph, GenTrace), DomainError> {
    if n == 0 || n > crate::graph::MAX_VERTICES || h >= n {
        return Err(DomainError::Invalid(format!(
            "generator needs 0 <= h < n <= 64, got n={n}, h={h}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut l = vec![0u32; n];
    let mut rows = Vec::with_capacity(n.saturating_sub(1));
    for i in 2..=n {
        let v = i - 1; // 0-indexed vertex being attached
        let chosen: Vec<usize> = if i <= h + 1 {
            (0..v).collect()
        } else {
            // Indices of the h largest entries of L, ties to smallest index.
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| l[b].cmp(&l[a]).then(a.cmp(&b)));
            let mut s: Vec<usize> = order.into_iter().take(h).collect();
            s.sort_unstable();
            s
        };
        for (j, count) in l.iter_mut().enumerate().take(v) {
            if chosen.binary_search(&j).is_ok() {
                edges.push((j, v));
            } else {
                *count += 1;
            }
        }
        rows.push(snapshot(i, chosen, &l));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| DomainError::Invalid(e.to_string()))?;
    Ok((g, GenTrace { n, h, rows }))
}

fn snapshot(i: usize, chosen: Vec<usize>, l: &[u32]) -> TraceRow {
    let t = l.iter().copied().max().unwrap_or(0);
    let mut psi = vec![0u32; t as usize + 1];
    for &x in l {
        psi[x as usize] += 1;
    }
    TraceRow {
        i,
        chosen,
        l_after: l.to_vec(),
        t,
        sigma: l.iter().map(|&x| x as u64).sum(),
        p: if t >= 1 { psi[t as usize - 1] } else { 0 },
        q: psi[t as usize],
        psi,
    }
}

/// A violated trace clause, reported with the iteration it first failed at.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("trace violation at iteration {iteration:?}: {clause}")]
pub struct TraceViolation {
    pub iteration: Option<usize>,
    pub clause: String,
}

fn violation(i: impl Into<Option<usize>>, clause: impl Into<String>) -> TraceViolation {
    TraceViolation {
        iteration: i.into(),
        clause: clause.into(),
    }
}

/// Verifies every proof-level invariant of a trace produced by
/// [`generate`]: the per-iteration counter histogram shape, the growth
/// recurrence of the maximum, the final-sum window, and the exact size
/// identity tying the sum to the complement.
pub fn check_trace(trace: &GenTrace, n: usize, h: usize) -> Result<(), TraceViolation> {
    if trace.n != n || trace.h != h {
        return Err(violation(None, "trace parameters do not match"));
    }
    if trace.rows.len() != n.saturating_sub(1) {
        return Err(violation(None, "trace must have one row per iteration 2..=n"));
    }
    let mut prev_t = 0u32;
    let mut prev_q = n as u32; // the all-zero initial vector has q = n
    let mut prev_sigma = 0u64;
    for (idx, row) in trace.rows.iter().enumerate() {
        let i = idx + 2;
        if row.i != i {
            return Err(violation(i, "rows out of order"));
        }
        if row.l_after.len() != n {
            return Err(violation(i, "counter vector has wrong length"));
        }
        // Snapshot self-consistency: t, sigma, psi, p, q all derive from L.
        let fresh = snapshot(i, row.chosen.clone(), &row.l_after);
        if (fresh.t, fresh.sigma, &fresh.psi, fresh.p, fresh.q)
            != (row.t, row.sigma, &row.psi, row.p, row.q)
        {
            return Err(violation(i, "summary fields do not match the counter vector"));
        }
        if row.l_after[i - 1..].iter().any(|&x| x != 0) {
            return Err(violation(i, "counters past the attached prefix must stay 0"));
        }
        let want_s = (i - 1).min(h);
        if row.chosen.len() != want_s {
            return Err(violation(
                i,
                format!("|S| = {} but min(i-1, h) = {want_s}", row.chosen.len()),
            ));
        }
        if row.chosen.iter().any(|&v| v >= i - 1) {
            return Err(violation(i, "S reaches outside the attached prefix"));
        }
        if row.sigma != prev_sigma + (i - 1 - want_s) as u64 {
            return Err(violation(
                i,
                format!(
                    "sigma step {} != (i-1) - |S| = {}",
                    row.sigma - prev_sigma,
                    i - 1 - want_s
                ),
            ));
        }
        if row.t != prev_t && row.t != prev_t + 1 {
            return Err(violation(i, "max counter must grow by 0 or 1"));
        }
        if i >= h + 2 {
            let want_t = if prev_q > h as u32 { prev_t + 1 } else { prev_t };
            if row.t != want_t {
                return Err(violation(
                    i,
                    format!(
                        "growth recurrence: t = {} but previous q = {} forces t = {want_t}",
                        row.t, prev_q
                    ),
                ));
            }
            if row.t == 0 {
                return Err(violation(i, "counter vector cannot stay zero past i = h+1"));
            }
            if row.t == 1 {
                if row.q == 0 || row.q as usize > i - 1 {
                    return Err(violation(i, format!("t = 1 needs 1 <= q <= i-1, q = {}", row.q)));
                }
            } else {
                if row.psi[0] as usize != n - i + 1 {
                    return Err(violation(
                        i,
                        format!("psi(0) = {} but n - i + 1 = {}", row.psi[0], n - i + 1),
                    ));
                }
                for r in 1..=row.t.saturating_sub(2) {
                    if row.psi[r as usize] != 1 {
                        return Err(violation(
                            i,
                            format!("psi({r}) = {} but the middle bands hold one vertex", row.psi[r as usize]),
                        ));
                    }
                }
                if row.p < 1 || row.q < 1 || row.p + row.q < h as u32 {
                    return Err(violation(
                        i,
                        format!("top bands need p,q >= 1 and p+q >= h, got p={}, q={}", row.p, row.q),
                    ));
                }
            }
        }
        prev_t = row.t;
        prev_q = row.q;
        prev_sigma = row.sigma;
    }
    // Final-sum window in terms of the final maximum t_n.
    let t = prev_t as i64;
    let sigma = prev_sigma as i64;
    let nn = n as i64;
    let lower = (t - 1) * nn - (t - 1) * t / 2 + 1;
    let upper = t * nn - t * (t + 1) / 2;
    if sigma < lower || sigma > upper {
        return Err(violation(
            n,
            format!("final sum {sigma} outside the window [{lower}, {upper}]"),
        ));
    }
    // Exact size identity: hn - h(h+1)/2 + sigma_n = n(n-1)/2.
    let hh = h as i64;
    if hh * nn - hh * (hh + 1) / 2 + sigma != nn * (nn - 1) / 2 {
        return Err(violation(
            n,
            "size identity between the graph and its complement fails",
        ));
    }
    Ok(())
}

/// Builds a graph of order n with l(G) + l(G^c) = r for any covering sum r,
/// by running the generator on the minimum-k covering pair with sum r.
pub fn realize_sum(n: u64, r: u64) -> Result<Graph, DomainError> {
    if !is_covering_sum(r, n)? {
        return Err(DomainError::NotACoveringSum { r, n });
    }
    let pair = minimal_k_pair_for_sum(n, r)?;
    Ok(generate(n as usize, pair.h as usize)?.0)
}
