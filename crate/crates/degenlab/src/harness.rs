//! Exhaustive and corpus-driven verification sweeps: every inequality the
//! library implements, run as a falsifiable check over graph corpora with a
//! machine-readable report.

use std::collections::HashMap;
use std::io::BufRead;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use num::rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::mader_k_guarantee;
use crate::codec;
use crate::covering::{classify_pair, ng_range, CoveringPair};
use crate::degeneracy::{building_sequence_degree, degeneracy, lick_white_bound};
use crate::error::GraphError;
use crate::exact::Exact;
use crate::generator::{check_trace, generate, realize_sum};
use crate::graph::Graph;
use crate::iso::canonical_key;
use crate::minors::{
    chromatic_number, independence_number, max_subgraph_connectivity, CeilingOracle,
    CeilingParam, OracleCaps,
};

/// Internal exhaustive enumeration stops here; larger orders come from
/// ingested corpora.
pub const ENUMERATION_CAP: usize = 7;

/// Known counts of non-isomorphic simple graphs for orders 1..=7; the
/// enumerator must reproduce these exactly.
pub const GRAPH_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

/// All non-isomorphic simple graphs of order n, each exactly once, in a
/// fixed canonical order. Built by extending every (n-1)-vertex graph with
/// one new vertex over all attachment sets and deduplicating canonically.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(GraphError::SizeLimit {
            what: "exhaustive enumeration",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    // BTreeMap keeps both iteration and representative choice deterministic.
    let mut layer: std::collections::BTreeMap<crate::iso::CanonKey, Graph> =
        std::collections::BTreeMap::new();
    layer.insert(
        canonical_key(&Graph::empty(1).expect("order 1"))?,
        Graph::empty(1).expect("order 1"),
    );
    for order in 2..=n {
        let mut next: std::collections::BTreeMap<crate::iso::CanonKey, Graph> =
            std::collections::BTreeMap::new();
        for g in layer.values() {
            for attach in 0u64..(1 << (order - 1)) {
                let mut edges = g.edges();
                for v in crate::graph::BitIter(attach) {
                    edges.push((v, order - 1));
                }
                let h = Graph::from_edges(order, &edges).expect("valid extension");
                let key = canonical_key(&h)?;
                next.entry(key).or_insert(h);
            }
        }
        layer = next;
    }
    Ok(layer.into_values().collect())
}

/// One record of an ingested corpus file.
pub type CorpusRecord = Result<Graph, RecordError>;

#[derive(Debug, Clone, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct RecordError {
    pub line: usize,
    pub reason: String,
}

/// Streams parsed graphs from a newline-separated graph6 file; malformed
/// lines are reported with line numbers and the stream continues.
pub fn ingest_corpus(path: &Path) -> std::io::Result<impl Iterator<Item = CorpusRecord>> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    Ok(reader.lines().enumerate().filter_map(|(idx, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                return Some(Err(RecordError {
                    line: idx + 1,
                    reason: e.to_string(),
                }))
            }
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            return None;
        }
        Some(
            codec::parse_graph6(trimmed.as_bytes()).map_err(|e| RecordError {
                line: idx + 1,
                reason: e.to_string(),
            }),
        )
    }))
}

/// The checks the sweep engine knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    Lgprop,
    Lickwhite,
    Mader,
    KappaThm3,
    WggcSurrogate,
    OneFourth,
    Lattice,
    Algorithm1,
    NgRealizability,
    KappaVsDeltaScan,
}

impl CheckName {
    pub fn all() -> [CheckName; 10] {
        use CheckName::*;
        [
            Lgprop,
            Lickwhite,
            Mader,
            KappaThm3,
            WggcSurrogate,
            OneFourth,
            Lattice,
            Algorithm1,
            NgRealizability,
            KappaVsDeltaScan,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Lgprop => "lgprop",
            CheckName::Lickwhite => "lickwhite",
            CheckName::Mader => "mader",
            CheckName::KappaThm3 => "kappa_thm3",
            CheckName::WggcSurrogate => "wggc_surrogate",
            CheckName::OneFourth => "one_fourth",
            CheckName::Lattice => "lattice",
            CheckName::Algorithm1 => "algorithm1",
            CheckName::NgRealizability => "ng_realizability",
            CheckName::KappaVsDeltaScan => "kappa_vs_delta_scan",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            CheckName::Lgprop => "degeneracy sum l(G) + l(G^c) never exceeds n - 1",
            CheckName::Lickwhite => "size obeys m <= l*n - l(l+1)/2",
            CheckName::Mader => {
                "edge counts above (2k-3)(n-k+1) force a k-connected subgraph (k = 2..4)"
            }
            CheckName::KappaThm3 => {
                "connectivity ceiling exceeds (n-1)/2 - sqrt(m(G^c)/2) (orders >= 2; \
                 order 1 has no connectivity to witness the bound)"
            }
            CheckName::WggcSurrogate => {
                "rank-sum surrogate (n - ceil-kappa(G)) + (n - ceil-kappa(G^c)) < \
                 (1 + 1/sqrt(2)) n + 1 (orders >= 4)"
            }
            CheckName::OneFourth => {
                "connectivity ceiling exceeds a quarter of the average-degree ceiling \
                 (edge-bearing graphs; the ratio is vacuous without edges)"
            }
            CheckName::Lattice => {
                "parameter lattice: delta <= l <= ceil-delta, ceil-delta >= ceil-kappa, \
                 ceil-kappa >= eta - 1, l >= chi - 1, chi >= n/alpha"
            }
            CheckName::Algorithm1 => {
                "generator battery: size formula, degeneracy, right-minimal pair, \
                 building sequences, and the full trace verification per (n, h)"
            }
            CheckName::NgRealizability => {
                "every integer in the degeneracy-sum range is attained by a generated graph"
            }
            CheckName::KappaVsDeltaScan => {
                "counterexample hunt: graphs with ceil-kappa < delta (report only)"
            }
        }
    }

    /// Whether the check runs per enumerated/ingested graph (as opposed to
    /// per (n, h) generator cell).
    pub fn is_per_graph(self) -> bool {
        !matches!(self, CheckName::Algorithm1 | CheckName::NgRealizability)
    }
}

impl std::str::FromStr for CheckName {
    type Err = crate::error::DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::all()
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| crate::error::DomainError::Invalid(format!("unknown check \"{s}\"")))
    }
}

/// Where a sweep's graphs come from.
#[derive(Clone, Debug)]
pub enum Corpus {
    /// Internal exhaustive enumeration of all orders 1..=n_max (per-graph
    /// checks) or generator cells up to n_max (cell checks).
    Enumerate { n_max: usize },
    /// Exhaustive enumeration of one order only.
    EnumerateOrder { n: usize },
    /// Newline-separated graph6 records.
    File { path: PathBuf },
}

impl Corpus {
    fn describe(&self) -> String {
        match self {
            Corpus::Enumerate { n_max } => format!("exhaustive enumeration, n <= {n_max}"),
            Corpus::EnumerateOrder { n } => format!("exhaustive enumeration, n = {n}"),
            Corpus::File { path } => format!("file {}", path.display()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub check: String,
    pub corpus: String,
    pub tested: u64,
    pub violations: Vec<Violation>,
    /// Graphs skipped because an oracle cap excludes them (corpus sweeps).
    pub skipped: u64,
    /// Malformed corpus records.
    pub malformed: u64,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shared state for a batch of sweeps: oracle caps, the ceiling memo, and
/// cached enumerations.
pub struct SweepContext {
    pub caps: OracleCaps,
    pub oracle: CeilingOracle,
    enumerations: Mutex<HashMap<usize, std::sync::Arc<Vec<Graph>>>>,
}

impl SweepContext {
    pub fn new(caps: OracleCaps) -> Self {
        SweepContext {
            caps,
            oracle: CeilingOracle::new(),
            enumerations: Mutex::new(HashMap::new()),
        }
    }

    fn enumeration(&self, n: usize) -> Result<std::sync::Arc<Vec<Graph>>, GraphError> {
        if let Some(v) = self.enumerations.lock().expect("not poisoned").get(&n) {
            return Ok(v.clone());
        }
        let built = std::sync::Arc::new(enumerate_graphs(n)?);
        self.enumerations
            .lock()
            .expect("not poisoned")
            .insert(n, built.clone());
        Ok(built)
    }
}

impl Default for SweepContext {
    fn default() -> Self {
        SweepContext::new(OracleCaps::default())
    }
}

/// Outcome of one predicate on one graph.
enum Outcome {
    Pass,
    Violation(String),
    /// Over an oracle cap; recorded, not counted as tested.
    Skip,
}

fn check_graph(check: CheckName, g: &Graph, ctx: &SweepContext) -> Outcome {
    match run_predicate(check, g, ctx) {
        Ok(None) => Outcome::Pass,
        Ok(Some(details)) => Outcome::Violation(details),
        Err(GraphError::SizeLimit { .. }) => Outcome::Skip,
        Err(e) => Outcome::Violation(format!("oracle failure: {e}")),
    }
}

fn run_predicate(
    check: CheckName,
    g: &Graph,
    ctx: &SweepContext,
) -> Result<Option<String>, GraphError> {
    let n = g.n();
    let caps = &ctx.caps;
    match check {
        CheckName::Lgprop => {
            let l = degeneracy(g).value;
            let lc = degeneracy(&g.complement()).value;
            Ok((l + lc > n - 1).then(|| format!("l = {l}, l_c = {lc} exceeds n - 1 = {}", n - 1)))
        }
        CheckName::Lickwhite => {
            let l = degeneracy(g).value as u64;
            let bound = lick_white_bound(n as u64, l).expect("l < n");
            Ok((g.m() as u64 > bound).then(|| format!("m = {} exceeds bound {bound}", g.m())))
        }
        CheckName::Mader => {
            let msc = max_subgraph_connectivity(g, caps)?;
            for k in 2..=4usize {
                let n_ok = n >= 2 * k - 1;
                let m_ok = g.m() as i64 > (2 * k as i64 - 3) * (n as i64 - k as i64 + 1);
                if n_ok && m_ok && msc < k {
                    return Ok(Some(format!(
                        "guarantee k = {k} but densest subgraph connectivity is {msc}"
                    )));
                }
            }
            // Cross-check the closed-form guarantee against the search.
            let k = mader_k_guarantee(n as u64, g.m() as u64).expect("valid sizes");
            if k >= 2 && msc < k as usize {
                return Ok(Some(format!(
                    "closed-form guarantee {k} exceeds best connectivity {msc}"
                )));
            }
            Ok(None)
        }
        CheckName::KappaThm3 => {
            if n == 1 {
                return Ok(None);
            }
            let kc = ctx.oracle.ceiling_value(g, CeilingParam::Connectivity, caps)?;
            let bound =
                crate::bounds::nu_lower_from_complement(n as u64, g.complement().m() as u64)
                    .expect("sizes consistent");
            let kc_exact = Exact::from_unsigned_ratio(kc);
            Ok((kc_exact <= bound).then(|| {
                format!("ceil-kappa = {kc} fails to exceed {:.6}", bound.to_f64())
            }))
        }
        CheckName::WggcSurrogate => {
            if n < 4 {
                return Ok(None);
            }
            let kc = ctx.oracle.ceiling_value(g, CeilingParam::Connectivity, caps)?;
            let kcc = ctx
                .oracle
                .ceiling_value(&g.complement(), CeilingParam::Connectivity, caps)?;
            // (n - a) + (n - b) = 2n - (a + b) < (1 + 1/sqrt2) n + 1.
            let sum = Exact::from_unsigned_ratio(kc + kcc);
            let lhs = sum.subtracted_from_int(2 * n as i64);
            let rhs = crate::bounds::wggc_bound(n as u64).expect("n >= 4");
            Ok((lhs >= rhs).then(|| {
                format!(
                    "rank-sum surrogate {:.6} is not below {:.6}",
                    lhs.to_f64(),
                    rhs.to_f64()
                )
            }))
        }
        CheckName::OneFourth => {
            if g.m() == 0 {
                return Ok(None);
            }
            let kc = ctx.oracle.ceiling_value(g, CeilingParam::Connectivity, caps)?;
            let dc = ctx.oracle.ceiling_value(g, CeilingParam::AverageDegree, caps)?;
            Ok((kc * Ratio::from_integer(4) <= dc).then(|| {
                format!("ceil-kappa = {kc} is not above ceil-d/4 = {dc}/4")
            }))
        }
        CheckName::Lattice => {
            let delta = g.degree_stats().min_degree as u64;
            let l = degeneracy(g).value as u64;
            let dc = ctx.oracle.ceiling_value(g, CeilingParam::MinDegree, caps)?;
            let kc = ctx.oracle.ceiling_value(g, CeilingParam::Connectivity, caps)?;
            let eta = ctx.oracle.hadwiger_number(g, caps)? as u64;
            let chi = chromatic_number(g, caps)? as u64;
            let alpha = independence_number(g, caps)? as u64;
            let dc_i = *dc.numer() / *dc.denom();
            let kc_i = *kc.numer() / *kc.denom();
            let mut broken = Vec::new();
            if !(delta <= l && Ratio::from_integer(l) <= dc) {
                broken.push(format!("delta <= l <= ceil-delta fails ({delta}, {l}, {dc_i})"));
            }
            if dc < kc {
                broken.push(format!("ceil-delta {dc_i} < ceil-kappa {kc_i}"));
            }
            if kc_i + 1 < eta {
                broken.push(format!("ceil-kappa {kc_i} < eta - 1 = {}", eta - 1));
            }
            if l + 1 < chi {
                broken.push(format!("l {l} < chi - 1 = {}", chi - 1));
            }
            if chi * alpha < n as u64 {
                broken.push(format!("chi * alpha = {} < n = {n}", chi * alpha));
            }
            Ok((!broken.is_empty()).then(|| broken.join("; ")))
        }
        CheckName::KappaVsDeltaScan => {
            let delta = g.degree_stats().min_degree as u64;
            let kc = ctx.oracle.ceiling_value(g, CeilingParam::Connectivity, caps)?;
            Ok((kc < Ratio::from_integer(delta)).then(|| {
                format!("ceil-kappa = {kc} < delta = {delta}")
            }))
        }
        CheckName::Algorithm1 | CheckName::NgRealizability => {
            unreachable!("cell checks never run per graph")
        }
    }
}

/// Runs the generator battery for every (n, h) cell with n <= n_max.
fn run_algorithm1_cells(n_max: usize) -> (u64, Vec<Violation>) {
    let mut tested = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max {
        for h in 0..n {
            tested += 1;
            let mut fail = |details: String, g: Option<&Graph>| {
                violations.push(Violation {
                    graph6: g.map(codec::to_graph6).unwrap_or_default(),
                    details: format!("cell (n={n}, h={h}): {details}"),
                });
            };
            let (g, trace) = match generate(n, h) {
                Ok(x) => x,
                Err(e) => {
                    fail(format!("generation failed: {e}"), None);
                    continue;
                }
            };
            let c = g.complement();
            let want_m = lick_white_bound(n as u64, h as u64).expect("h < n");
            if g.m() as u64 != want_m {
                fail(format!("size {} but the formula gives {want_m}", g.m()), Some(&g));
            }
            if degeneracy(&g).value != h {
                fail(format!("degeneracy {} != h", degeneracy(&g).value), Some(&g));
            }
            let lc = degeneracy(&c).value;
            if lc as u32 != trace.final_t() {
                fail(format!("l(G^c) = {lc} differs from final t = {}", trace.final_t()), Some(&g));
            }
            let pair = CoveringPair::new(h as u64, lc as u64, n as u64).expect("in range");
            let class = classify_pair(pair);
            if !(class.is_covering && class.right_minimal) {
                fail(format!("pair ({h},{lc}) not right-minimal covering"), Some(&g));
            }
            let fwd: Vec<usize> = (0..n).collect();
            let bwd: Vec<usize> = (0..n).rev().collect();
            if building_sequence_degree(&g, &fwd).expect("permutation") != h {
                fail("forward building sequence degree differs from h".into(), Some(&g));
            }
            if building_sequence_degree(&c, &bwd).expect("permutation") != lc {
                fail("backward building sequence degree differs from l(G^c)".into(), Some(&g));
            }
            if let Err(e) = check_trace(&trace, n, h) {
                fail(format!("trace: {e}"), Some(&g));
            }
        }
    }
    (tested, violations)
}

/// Checks that every integer in the attainable range is realized.
fn run_ng_cells(n_max: usize) -> (u64, Vec<Violation>) {
    let mut tested = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max as u64 {
        let (lo, hi) = ng_range(n).expect("n >= 1");
        for r in lo..=hi {
            tested += 1;
            match realize_sum(n, r) {
                Ok(g) => {
                    let total =
                        degeneracy(&g).value + degeneracy(&g.complement()).value;
                    if total as u64 != r {
                        violations.push(Violation {
                            graph6: codec::to_graph6(&g),
                            details: format!("(n={n}, r={r}): sum is {total}"),
                        });
                    }
                }
                Err(e) => violations.push(Violation {
                    graph6: String::new(),
                    details: format!("(n={n}, r={r}): {e}"),
                }),
            }
        }
    }
    (tested, violations)
}

/// Evaluates one named check over a corpus. Violations are sorted by graph6
/// string so reports merge deterministically regardless of worker order.
pub fn run_check(
    check: CheckName,
    corpus: &Corpus,
    ctx: &SweepContext,
) -> Result<SweepReport, GraphError> {
    let started = Instant::now();
    let corpus_desc = corpus.describe();
    let mut malformed = 0u64;
    let (tested, skipped, mut violations) = if !check.is_per_graph() {
        let n_max = match corpus {
            Corpus::Enumerate { n_max } => *n_max,
            Corpus::EnumerateOrder { n } => *n,
            Corpus::File { .. } => {
                return Err(GraphError::SizeLimit {
                    what: "cell checks run on generator cells, not corpora",
                    n: 0,
                    cap: 0,
                })
            }
        };
        let (tested, violations) = match check {
            CheckName::Algorithm1 => run_algorithm1_cells(n_max),
            CheckName::NgRealizability => run_ng_cells(n_max),
            _ => unreachable!(),
        };
        (tested, 0, violations)
    } else {
        let graphs: Vec<Graph> = match corpus {
            Corpus::Enumerate { n_max } => {
                let cap = (*n_max).min(ENUMERATION_CAP);
                let mut all = Vec::new();
                for n in 1..=cap {
                    all.extend(ctx.enumeration(n)?.iter().cloned());
                }
                all
            }
            Corpus::EnumerateOrder { n } => ctx.enumeration(*n)?.to_vec(),
            Corpus::File { path } => {
                let mut all = Vec::new();
                let records = ingest_corpus(path).map_err(|_| GraphError::SizeLimit {
                    what: "corpus file unreadable",
                    n: 0,
                    cap: 0,
                })?;
                for record in records {
                    match record {
                        Ok(g) => all.push(g),
                        Err(_) => malformed += 1,
                    }
                }
                all
            }
        };
        let outcomes: Vec<(Outcome, &Graph)> = graphs
            .par_iter()
            .map(|g| (check_graph(check, g, ctx), g))
            .collect();
        let mut tested = 0u64;
        let mut skipped = 0u64;
        let mut violations = Vec::new();
        for (outcome, g) in outcomes {
            match outcome {
                Outcome::Pass => tested += 1,
                Outcome::Skip => skipped += 1,
                Outcome::Violation(details) => {
                    tested += 1;
                    violations.push(Violation {
                        graph6: codec::to_graph6(g),
                        details,
                    });
                }
            }
        }
        (tested, skipped, violations)
    };
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6).then(a.details.cmp(&b.details)));
    Ok(SweepReport {
        check: check.name().to_string(),
        corpus: corpus_desc,
        tested,
        violations,
        skipped,
        malformed,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}
