//! Closed-form lower bounds on the positive semidefinite Colin de Verdiere
//! number nu, aggregated per graph into a provenance-tagged report.
//!
//! nu itself is never computed: every entry is a lower bound from a named
//! result (Mader-style edge counts, the connectivity-ceiling route of
//! Lovasz-Saks-Schrijver and van der Holst, Mitchel's degeneracy bound,
//! girth amplification after Kuhn-Osthus, and the chromatic / independence
//! routes of Nguyen and Balogh-Kostochka). Bounds that assume the minimum
//! degree conjecture are computed but quarantined behind a `conditional`
//! flag and never feed the headline value.

use num::rational::{BigRational, Ratio};
use num::{BigInt, One};
use serde::Serialize;

use crate::error::DomainError;
use crate::exact::Exact;
use crate::graph::{Girth, Graph};
use crate::minors::{CeilingOracle, CeilingParam, OracleCaps};

fn br(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn brr(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Largest k guaranteed by edge count alone: the largest k >= 1 with
/// n >= 2k-1 and m >= (2k-3)(n-k+1)+1. Every graph with n vertices and m
/// edges contains a k-connected subgraph for this k.
pub fn mader_k_guarantee(n: u64, m: u64) -> Result<u32, DomainError> {
    if n == 0 || m > n * (n - 1) / 2 {
        return Err(DomainError::Invalid(format!(
            "need n >= 1 and m <= n(n-1)/2, got n={n}, m={m}"
        )));
    }
    let holds = |k: i64| -> bool {
        let n = n as i64;
        let m = m as i64;
        n >= 2 * k - 1 && m > (2 * k - 3) * (n - k + 1)
    };
    let mut k = 1i64;
    while holds(k + 1) {
        k += 1;
    }
    Ok(k as u32)
}

/// Strict lower bound on nu from the size of the complement:
/// (n-1)/2 - sqrt(m_c / 2).
pub fn nu_lower_from_complement(n: u64, m_c: u64) -> Result<Exact, DomainError> {
    if n == 0 || m_c > n * (n - 1) / 2 {
        return Err(DomainError::Invalid(format!(
            "need m_c <= n(n-1)/2, got n={n}, m_c={m_c}"
        )));
    }
    Ok(Exact::with_sqrt(
        brr(n as i64 - 1, 2),
        br(-1),
        brr(m_c as i64, 2),
    ))
}

/// Unconditional Nordhaus-Gaddum bound on mr_nu(G) + mr_nu(G^c):
/// (1 + 1/sqrt(2)) n + 1, valid for n >= 4.
pub fn wggc_bound(n: u64) -> Result<Exact, DomainError> {
    if n < 4 {
        return Err(DomainError::Invalid(format!(
            "the unconditional bound needs n >= 4, got {n}"
        )));
    }
    // n + 1 + (n/2) sqrt(2).
    Ok(Exact::with_sqrt(br(n as i64 + 1), brr(n as i64, 2), br(2)))
}

/// The two bounds on mr_nu(G) + mr_nu(G^c) that hold if the minimum degree
/// conjecture does: 3n/2 + 1/2 and sqrt(2) n + 1.
pub fn conditional_wggc_bounds(n: u64) -> (Exact, Exact) {
    (
        Exact::from_big(brr(3 * n as i64, 2) + brr(1, 2)),
        Exact::with_sqrt(br(1), br(n as i64), br(2)),
    )
}

/// nu(G) >= n - 2 l(G^c) - 1; may be negative (vacuous).
pub fn mitchel_lower(n: u64, l_c: u64) -> Result<i64, DomainError> {
    if l_c >= n {
        return Err(DomainError::Invalid(format!(
            "need 0 <= l_c < n, got l_c={l_c}, n={n}"
        )));
    }
    Ok(n as i64 - 2 * l_c as i64 - 1)
}

/// Provenance of one nu lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// nu >= the minor-monotone ceiling of the vertex connectivity.
    KappaCeiling,
    /// nu > (n-1)/2 - sqrt(m(G^c)/2).
    ComplementSize,
    /// nu >= n - 2 l(G^c) - 1.
    MitchelDegeneracy,
    /// nu > delta (delta-1)^k / 4 when the girth is at least 8k+3.
    GirthMinDegree,
    /// nu > (delta-1)^(k+1) / 192 when the girth is at least 4k+3.
    GirthAmplifiedA,
    /// nu > delta^(k+1/2) / 1152 for huge minimum degree and girth >= 4k+1.
    GirthAmplifiedB,
    /// nu > 16 chi / 49.
    NguyenChromatic,
    /// nu >= n / ((2-c) alpha) - 1 with c = (80 - sqrt(5392))/126.
    BaloghKostochkaIndependence,
    /// nu >= delta, certified by girth and minimum degree.
    MinDegreeCertified,
    /// nu >= l(G), assuming the minimum degree conjecture.
    DeltaConjectureDegeneracy,
    /// nu >= ceil-delta(G), assuming the minimum degree conjecture.
    DeltaConjectureCeiling,
}

/// One nu lower bound with provenance. `strict` distinguishes > from >=.
#[derive(Clone, Debug, Serialize)]
pub struct NuLowerEntry {
    pub source: BoundSource,
    #[serde(skip)]
    pub exact: Exact,
    pub value: f64,
    pub strict: bool,
    pub conditional: bool,
}

impl NuLowerEntry {
    fn new(source: BoundSource, exact: Exact, strict: bool, conditional: bool) -> Self {
        let value = exact.to_f64();
        NuLowerEntry {
            source,
            exact,
            value,
            strict,
            conditional,
        }
    }
}

/// Girth-based bounds for a graph with minimum degree `delta` and girth `g`.
/// Each applicable clause contributes one entry at its maximal valid depth
/// k; forests use the configured `k_max`. Inapplicable inputs yield an
/// empty list.
pub fn girth_nu_bound(delta: u64, g: Girth, k_max: u32) -> Vec<NuLowerEntry> {
    let mut out = Vec::new();
    let k_for = |per: u64, offset: u64| -> Option<u64> {
        let k = match g {
            Girth::Acyclic => k_max as u64,
            Girth::Finite(girth) => {
                if (girth as u64) < per + offset {
                    return None;
                }
                ((girth as u64 - offset) / per).min(k_max as u64)
            }
        };
        (k >= 1).then_some(k)
    };
    // Ceiling amplification: girth >= 8k+3 and delta >= 3 force a minor of
    // minimum degree delta(delta-1)^k, and nu exceeds a quarter of that.
    if delta >= 3 {
        if let Some(k) = k_for(8, 3) {
            let pow = num::pow::pow(br(delta as i64 - 1), k as usize);
            let value = brr(delta as i64, 4) * pow;
            out.push(NuLowerEntry::new(
                BoundSource::GirthMinDegree,
                Exact::from_big(value),
                true,
                false,
            ));
        }
        if let Some(k) = k_for(4, 3) {
            let pow = num::pow::pow(br(delta as i64 - 1), k as usize + 1);
            let value = pow / br(192);
            out.push(NuLowerEntry::new(
                BoundSource::GirthAmplifiedA,
                Exact::from_big(value),
                true,
                false,
            ));
        }
    }
    if delta >= 8_000_000 {
        if let Some(k) = k_for(4, 1) {
            let k = k.min(delta / 20); // also bounded by delta >= 20k
            if k >= 1 {
                // delta^(k + 1/2) / 1152 = (delta^k / 1152) sqrt(delta).
                let pow = num::pow::pow(br(delta as i64), k as usize);
                out.push(NuLowerEntry::new(
                    BoundSource::GirthAmplifiedB,
                    Exact::with_sqrt(br(0), pow / br(1152), br(delta as i64)),
                    true,
                    false,
                ));
            }
        }
    }
    out
}

/// Forbidden patterns for the average-degree amplification bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForbiddenPattern {
    /// K_{s,s'}-free, 2 <= s <= s'.
    CompleteBipartite { s: u32, s_prime: u32 },
    /// C_{2t}-free, t >= 2.
    EvenCycle { t: u32 },
}

/// A bound of the shape c * d^exponent whose constant c is known to exist
/// but is not pinned down; never folded into a headline value.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicBound {
    pub exponent: (u32, u32),
    pub magnitude: f64,
    pub constant: &'static str,
}

/// nu > (c/4) d^(1 + 1/(2(s-1))) for K_{s,s'}-free graphs, and
/// nu > (c/4) d^((t+1)/2) for C_{2t}-free graphs, with symbolic c.
pub fn forbidden_subgraph_bound(
    d: Ratio<u64>,
    pattern: ForbiddenPattern,
) -> Result<SymbolicBound, DomainError> {
    let (num, den, constant) = match pattern {
        ForbiddenPattern::CompleteBipartite { s, s_prime } => {
            if s < 2 || s_prime < s {
                return Err(DomainError::Invalid(format!(
                    "need 2 <= s <= s', got s={s}, s'={s_prime}"
                )));
            }
            (2 * (s - 1) + 1, 2 * (s - 1), "c(s,s')/4")
        }
        ForbiddenPattern::EvenCycle { t } => {
            if t < 2 {
                return Err(DomainError::Invalid(format!("need t >= 2, got t={t}")));
            }
            (t + 1, 2, "c(t)/4")
        }
    };
    let df = *d.numer() as f64 / *d.denom() as f64;
    Ok(SymbolicBound {
        exponent: (num, den),
        magnitude: df.powf(num as f64 / den as f64),
        constant,
    })
}

/// Which clause certifies that nu >= delta for a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertClause {
    /// girth >= 11 and delta >= 4.
    HighGirth,
    /// girth in 7..=10 and delta >= 193.
    MidGirth,
    /// girth in 5..=6 and delta >= 8e6.
    LowGirth,
    /// K_{s,s'}-free with delta >= r(s,s'), constant unknown.
    BipartiteFree,
    /// C_{2t}-free with delta >= r(t), constant unknown.
    EvenCycleFree,
}

/// Certification status of nu >= delta for a (delta, girth) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "clause", rename_all = "kebab-case")]
pub enum CertStatus {
    Certified(CertClause),
    Conditional(CertClause),
    NotCertified,
}

/// Evaluates the minimum-degree certificate clauses.
pub fn delta_conjecture_certificate(
    delta: u64,
    g: Girth,
    forbidden: Option<ForbiddenPattern>,
) -> CertStatus {
    let girth_at_least = |k: usize| g.at_least(k);
    let girth_in = |lo: usize, hi: usize| match g {
        Girth::Finite(x) => x >= lo && x <= hi,
        Girth::Acyclic => false,
    };
    if girth_at_least(11) && delta >= 4 {
        return CertStatus::Certified(CertClause::HighGirth);
    }
    if girth_in(7, 10) && delta >= 193 {
        return CertStatus::Certified(CertClause::MidGirth);
    }
    if girth_in(5, 6) && delta >= 8_000_000 {
        return CertStatus::Certified(CertClause::LowGirth);
    }
    match forbidden {
        Some(ForbiddenPattern::CompleteBipartite { .. }) => {
            CertStatus::Conditional(CertClause::BipartiteFree)
        }
        Some(ForbiddenPattern::EvenCycle { .. }) => {
            CertStatus::Conditional(CertClause::EvenCycleFree)
        }
        None => CertStatus::NotCertified,
    }
}

/// The chromatic and independence bounds: nu > 16 chi / 49 and
/// nu >= n / ((2-c) alpha) - 1 with c = (80 - sqrt(5392)) / 126.
pub fn section4_bounds(chi: u32, alpha: u32, n: u32) -> Result<(Exact, Exact), DomainError> {
    if chi == 0 || alpha == 0 || alpha > n {
        return Err(DomainError::Invalid(format!(
            "need chi >= 1 and 1 <= alpha <= n, got chi={chi}, alpha={alpha}, n={n}"
        )));
    }
    let chromatic = Exact::from_big(brr(16 * chi as i64, 49));
    // n / ((2 - c) alpha) - 1 rationalizes to
    // 43n/(48 alpha) - 1 - (n / (192 alpha)) sqrt(5392).
    let n = n as i64;
    let alpha = alpha as i64;
    let independence = Exact::with_sqrt(
        brr(43 * n, 48 * alpha) - BigRational::one(),
        -brr(n, 192 * alpha),
        br(5392),
    );
    Ok((chromatic, independence))
}

/// Certificate line of a report.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateLine {
    pub kind: &'static str,
    pub delta: u64,
    pub girth: String,
    #[serde(flatten)]
    pub status: CertStatus,
}

/// All applicable nu lower bounds for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub m_complement: usize,
    pub entries: Vec<NuLowerEntry>,
    pub best_nu_lower: f64,
    pub best_source: BoundSource,
    pub best_strict: bool,
    pub mr_nu_upper: f64,
    pub certificates: Vec<CertificateLine>,
}

/// Assembles every applicable entry; ceiling-based entries appear only when
/// the order is within the oracle caps. The headline value maximizes over
/// unconditional entries only, with comparisons done in exact arithmetic.
pub fn bound_report(g: &Graph, oracle: &CeilingOracle, caps: &OracleCaps) -> BoundReport {
    let n = g.n();
    let c = g.complement();
    let m_c = c.m();
    let stats = g.degree_stats();
    let girth = g.girth();
    let l = crate::degeneracy::degeneracy(g).value;
    let l_c = crate::degeneracy::degeneracy(&c).value;

    let mut entries = Vec::new();
    entries.push(NuLowerEntry::new(
        BoundSource::ComplementSize,
        nu_lower_from_complement(n as u64, m_c as u64).expect("m_c within range"),
        true,
        false,
    ));
    entries.push(NuLowerEntry::new(
        BoundSource::MitchelDegeneracy,
        Exact::from_int(mitchel_lower(n as u64, l_c as u64).expect("l_c < n")),
        false,
        false,
    ));
    if n <= caps.minor_cap {
        let kc = oracle
            .ceiling_value(g, CeilingParam::Connectivity, caps)
            .expect("within cap");
        entries.push(NuLowerEntry::new(
            BoundSource::KappaCeiling,
            Exact::from_unsigned_ratio(kc),
            false,
            false,
        ));
    }
    entries.extend(girth_nu_bound(stats.min_degree as u64, girth, 64));
    if let CertStatus::Certified(_) =
        delta_conjecture_certificate(stats.min_degree as u64, girth, None)
    {
        entries.push(NuLowerEntry::new(
            BoundSource::MinDegreeCertified,
            Exact::from_int(stats.min_degree as i64),
            false,
            false,
        ));
    }
    if n <= caps.exact_cap {
        let chi = crate::minors::chromatic_number(g, caps).expect("within cap");
        let alpha = crate::minors::independence_number(g, caps).expect("within cap");
        let (bc, ba) = section4_bounds(chi, alpha, n as u32).expect("valid parameters");
        entries.push(NuLowerEntry::new(BoundSource::NguyenChromatic, bc, true, false));
        entries.push(NuLowerEntry::new(
            BoundSource::BaloghKostochkaIndependence,
            ba,
            false,
            false,
        ));
    }
    // Conditional entries, quarantined from the headline value.
    entries.push(NuLowerEntry::new(
        BoundSource::DeltaConjectureDegeneracy,
        Exact::from_int(l as i64),
        false,
        true,
    ));
    if n <= caps.minor_cap {
        let dc = oracle
            .ceiling_value(g, CeilingParam::MinDegree, caps)
            .expect("within cap");
        entries.push(NuLowerEntry::new(
            BoundSource::DeltaConjectureCeiling,
            Exact::from_unsigned_ratio(dc),
            false,
            true,
        ));
    }

    let best = entries
        .iter()
        .filter(|e| !e.conditional)
        .max_by(|a, b| a.exact.cmp(&b.exact))
        .expect("unconditional entries always exist");
    let best_exact = best.exact.clone();
    
    BoundReport {
        n,
        m: g.m(),
        m_complement: m_c,
        best_nu_lower: best_exact.to_f64(),
        best_source: best.source,
        best_strict: best.strict,
        mr_nu_upper: best_exact.subtracted_from_int(n as i64).to_f64(),
        certificates: vec![CertificateLine {
            kind: "min-degree-conjecture",
            delta: stats.min_degree as u64,
            girth: girth.to_string(),
            status: delta_conjecture_certificate(stats.min_degree as u64, girth, None),
        }],
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn mader_guarantee_values() {
        assert_eq!(mader_k_guarantee(7, 21).unwrap(), 4);
        assert_eq!(mader_k_guarantee(9, 36).unwrap(), 5);
        for n in 1..=20 {
            assert_eq!(mader_k_guarantee(n, 0).unwrap(), 1);
        }
        assert!(mader_k_guarantee(4, 7).is_err());
    }

    #[test]
    fn mader_guarantee_monotone_in_size() {
        for n in 1..=12u64 {
            let mut prev = 0;
            for m in 0..=n * (n - 1) / 2 {
                let k = mader_k_guarantee(n, m).unwrap();
                assert!(k >= prev);
                prev = k;
            }
        }
    }

    #[test]
    fn complement_size_bound_values() {
        for n in 1..=20 {
            let b = nu_lower_from_complement(n, 0).unwrap();
            assert_eq!(b, Exact::from_ratio(n as i64 - 1, 2));
        }
        let fig2 = nu_lower_from_complement(14, 45).unwrap();
        assert!((fig2.to_f64() - 1.756_583_509_747_431).abs() < 1e-12);
        let vacuous = nu_lower_from_complement(4, 6).unwrap();
        assert!(vacuous < Exact::from_int(0));
    }

    #[test]
    fn wggc_bounds() {
        assert!((wggc_bound(4).unwrap().to_f64() - 7.828_427_124_746_19).abs() < 1e-12);
        assert!(wggc_bound(3).is_err());
        let (half3, sqrt2) = conditional_wggc_bounds(14);
        assert_eq!(half3, Exact::from_ratio(43, 2));
        assert!((sqrt2.to_f64() - (2f64.sqrt() * 14.0 + 1.0)).abs() < 1e-12);
        let (half3_small, _) = conditional_wggc_bounds(4);
        assert_eq!(half3_small, Exact::from_ratio(13, 2));
    }

    #[test]
    fn mitchel_values() {
        for n in 1..=20 {
            assert_eq!(mitchel_lower(n, 0).unwrap(), n as i64 - 1);
        }
        assert_eq!(mitchel_lower(14, 4).unwrap(), 5);
        assert_eq!(mitchel_lower(8, 4).unwrap(), -1);
        assert!(mitchel_lower(4, 4).is_err());
    }

    #[test]
    fn girth_bounds_at_4_11() {
        let out = girth_nu_bound(4, Girth::Finite(11), 64);
        assert_eq!(out.len(), 2);
        let by_source = |s: BoundSource| {
            out.iter()
                .find(|e| e.source == s)
                .unwrap_or_else(|| panic!("missing {s:?}"))
        };
        assert_eq!(
            by_source(BoundSource::GirthMinDegree).exact,
            Exact::from_int(3)
        );
        assert_eq!(
            by_source(BoundSource::GirthAmplifiedA).exact,
            Exact::from_ratio(27, 192)
        );
    }

    #[test]
    fn girth_bounds_edge_cases() {
        assert!(girth_nu_bound(2, Girth::Finite(100), 64).is_empty());
        // Forests cap the amplification depth.
        let capped = girth_nu_bound(3, Girth::Acyclic, 64);
        assert_eq!(capped.len(), 2);
        let huge = girth_nu_bound(8_000_000, Girth::Finite(5), 64);
        assert!(huge.iter().any(|e| e.source == BoundSource::GirthAmplifiedB));
        let no_b = girth_nu_bound(7_999_999, Girth::Finite(5), 64);
        assert!(no_b.iter().all(|e| e.source != BoundSource::GirthAmplifiedB));
    }

    #[test]
    fn forbidden_pattern_bounds() {
        let b = forbidden_subgraph_bound(
            Ratio::from_integer(16),
            ForbiddenPattern::CompleteBipartite { s: 2, s_prime: 2 },
        )
        .unwrap();
        assert_eq!(b.exponent, (3, 2));
        assert!((b.magnitude - 64.0).abs() < 1e-9);
        let b = forbidden_subgraph_bound(
            Ratio::from_integer(4),
            ForbiddenPattern::EvenCycle { t: 2 },
        )
        .unwrap();
        assert!((b.magnitude - 8.0).abs() < 1e-9);
        let b = forbidden_subgraph_bound(
            Ratio::from_integer(0),
            ForbiddenPattern::EvenCycle { t: 2 },
        )
        .unwrap();
        assert_eq!(b.magnitude, 0.0);
        assert!(forbidden_subgraph_bound(
            Ratio::from_integer(4),
            ForbiddenPattern::CompleteBipartite { s: 1, s_prime: 5 }
        )
        .is_err());
    }

    #[test]
    fn certificate_thresholds_exactly_at_the_boundary() {
        use CertStatus::*;
        let cert = delta_conjecture_certificate;
        assert_eq!(cert(4, Girth::Finite(11), None), Certified(CertClause::HighGirth));
        assert_eq!(cert(3, Girth::Finite(11), None), NotCertified);
        assert_eq!(cert(4, Girth::Finite(10), None), NotCertified);
        assert_eq!(cert(193, Girth::Finite(7), None), Certified(CertClause::MidGirth));
        assert_eq!(cert(192, Girth::Finite(7), None), NotCertified);
        assert_eq!(cert(193, Girth::Finite(10), None), Certified(CertClause::MidGirth));
        assert_eq!(
            cert(8_000_000, Girth::Finite(5), None),
            Certified(CertClause::LowGirth)
        );
        assert_eq!(cert(7_999_999, Girth::Finite(5), None), NotCertified);
        assert_eq!(cert(3, Girth::Finite(3), None), NotCertified);
        assert_eq!(cert(5, Girth::Acyclic, None), Certified(CertClause::HighGirth));
        assert_eq!(
            cert(3, Girth::Finite(4), Some(ForbiddenPattern::EvenCycle { t: 2 })),
            Conditional(CertClause::EvenCycleFree)
        );
    }

    #[test]
    fn section4_values() {
        let (chi_bound, _) = section4_bounds(49, 1, 49).unwrap();
        assert_eq!(chi_bound, Exact::from_int(16));
        // Independent route: evaluate the un-rationalized formula directly.
        let c = (80.0 - 5392f64.sqrt()) / 126.0;
        let direct = 10.0 / ((2.0 - c) * 2.0) - 1.0;
        let (_, alpha_bound) = section4_bounds(2, 2, 10).unwrap();
        assert!((alpha_bound.to_f64() - direct).abs() < 1e-12);
        let (vacuous, _) = section4_bounds(1, 3, 3).unwrap();
        assert_eq!(vacuous, Exact::from_ratio(16, 49));
        assert!(section4_bounds(0, 1, 1).is_err());
    }

    #[test]
    fn report_for_k5() {
        let oracle = CeilingOracle::new();
        let caps = OracleCaps::default();
        let g = Graph::complete(5).unwrap();
        let r = bound_report(&g, &oracle, &caps);
        assert_eq!(r.best_nu_lower, 4.0);
        assert_eq!(r.mr_nu_upper, 1.0);
        assert!(r.entries.iter().any(|e| e.source == BoundSource::KappaCeiling));
    }

    #[test]
    fn report_for_p4() {
        let oracle = CeilingOracle::new();
        let caps = OracleCaps::default();
        let r = bound_report(&families::path(4).unwrap(), &oracle, &caps);
        assert_eq!(r.best_nu_lower, 1.0);
    }

    #[test]
    fn report_for_order14() {
        let oracle = CeilingOracle::new();
        let caps = OracleCaps::default();
        let (g, _) = crate::generator::generate(14, 4).unwrap();
        let r = bound_report(&g, &oracle, &caps);
        let thm3 = r
            .entries
            .iter()
            .find(|e| e.source == BoundSource::ComplementSize)
            .unwrap();
        assert!((thm3.value - 1.756_583_509_747_431).abs() < 1e-12);
        let mitchel = r
            .entries
            .iter()
            .find(|e| e.source == BoundSource::MitchelDegeneracy)
            .unwrap();
        assert_eq!(mitchel.value, 5.0);
        assert_eq!(r.best_nu_lower, 5.0);
        assert_eq!(r.best_source, BoundSource::MitchelDegeneracy);
        // Over the cap: no ceiling entries.
        assert!(r.entries.iter().all(|e| e.source != BoundSource::KappaCeiling));
    }

    #[test]
    fn conditional_entries_never_take_the_headline() {
        let oracle = CeilingOracle::new();
        let caps = OracleCaps::default();
        for g in [
            families::cycle(5).unwrap(),
            families::figure1(),
            families::matula(2).unwrap(),
        ] {
            let r = bound_report(&g, &oracle, &caps);
            assert!(r.best_nu_lower <= (r.n - 1) as f64);
            let best = r
                .entries
                .iter()
                .filter(|e| !e.conditional)
                .map(|e| e.value)
                .fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(r.best_nu_lower, best);
        }
    }
}
