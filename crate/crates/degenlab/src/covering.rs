//! The covering-pair calculus: the two defining inequalities, minimality
//! classification, covering sums, closed-form thresholds, and the
//! Nordhaus-Gaddum range for degeneracy sums.
//!
//! All threshold decisions are made in exact integer arithmetic by clearing
//! denominators; the square-root forms exist only for display, so
//! perfect-square boundary cases cannot wobble.

use serde::Serialize;

use crate::error::DomainError;

/// A candidate (h, k) pair at order n, 0 <= h, k < n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringPair {
    pub h: u64,
    pub k: u64,
    pub n: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub is_covering: bool,
    pub left_minimal: bool,
    pub right_minimal: bool,
}

impl CoveringPair {
    pub fn new(h: u64, k: u64, n: u64) -> Result<Self, DomainError> {
        if n == 0 || h >= n || k >= n {
            return Err(DomainError::Invalid(format!(
                "covering pair needs 0 <= h,k < n, got ({h},{k}) at n={n}"
            )));
        }
        Ok(CoveringPair { h, k, n })
    }
}

/// Maximum size of a graph of order n with degeneracy x, doubled:
/// 2xn - x(x+1).
fn weight2(x: u64, n: u64) -> i128 {
    let x = x as i128;
    let n = n as i128;
    2 * x * n - x * (x + 1)
}

/// Both defining inequalities: h + k <= n - 1 and the doubled edge-count
/// inequality 2hn - h(h+1) + 2kn - k(k+1) >= n(n-1).
pub fn is_covering_pair(p: CoveringPair) -> bool {
    let CoveringPair { h, k, n } = p;
    h + k < n && weight2(h, n) + weight2(k, n) >= (n as i128) * (n as i128 - 1)
}

/// Covering status plus left-/right-minimality (minimal at the 0 boundary).
pub fn classify_pair(p: CoveringPair) -> PairClassification {
    let is_covering = is_covering_pair(p);
    let shrunk_fails = |h: u64, k: u64| match CoveringPair::new(h, k, p.n) {
        Ok(q) => !is_covering_pair(q),
        Err(_) => true,
    };
    PairClassification {
        is_covering,
        left_minimal: is_covering && (p.h == 0 || shrunk_fails(p.h - 1, p.k)),
        right_minimal: is_covering && (p.k == 0 || shrunk_fails(p.h, p.k - 1)),
    }
}

/// r is a covering sum of order n iff the balanced pair
/// (ceil(r/2), floor(r/2)) is a covering pair.
pub fn is_covering_sum(r: u64, n: u64) -> Result<bool, DomainError> {
    if n == 0 || r >= n {
        return Err(DomainError::Invalid(format!(
            "covering sum needs 0 <= r < n, got r={r}, n={n}"
        )));
    }
    Ok(is_covering_pair(CoveringPair {
        h: r.div_ceil(2),
        k: r / 2,
        n,
    }))
}

/// The two closed-form threshold branches, for display:
/// 2n - 1 - sqrt(2n^2 - 2n + 1) for even sums and
/// 2n - 1 - sqrt(2n^2 - 2n) for odd sums.
pub fn covering_sum_threshold(n: u64) -> (f64, f64) {
    let nf = n as f64;
    let base = 2.0 * nf - 1.0;
    (
        base - (2.0 * nf * nf - 2.0 * nf + 1.0).sqrt(),
        base - (2.0 * nf * nf - 2.0 * nf).sqrt(),
    )
}

/// Integer square root (floor).
pub fn isqrt(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r.saturating_mul(r) > x {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= x {
        r += 1;
    }
    r
}

/// The attainable range of l(G) + l(G^c) at order n:
/// lo = ceil(2n - 1 - sqrt(2n^2 - 2n + 1)), hi = n - 1. Every integer in the
/// range is realized by some graph.
pub fn ng_range(n: u64) -> Result<(u64, u64), DomainError> {
    if n == 0 {
        return Err(DomainError::Invalid("order must be >= 1".into()));
    }
    let radicand = 2u128 * (n as u128) * (n as u128) - 2 * n as u128 + 1;
    // ceil(a - sqrt(b)) = a - floor(sqrt(b)).
    let lo = (2 * n - 1) as u128 - isqrt(radicand);
    Ok((lo as u64, n - 1))
}

/// Among covering pairs (h, k) with h + k = r, the one with minimum k
/// (hence maximum h).
pub fn minimal_k_pair_for_sum(n: u64, r: u64) -> Result<CoveringPair, DomainError> {
    if !is_covering_sum(r, n)? {
        return Err(DomainError::NotACoveringSum { r, n });
    }
    for k in 0..=r / 2 {
        let p = CoveringPair { h: r - k, k, n };
        if p.h < n && is_covering_pair(p) {
            return Ok(p);
        }
    }
    Err(DomainError::NotACoveringSum { r, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(h: u64, k: u64, n: u64) -> CoveringPair {
        CoveringPair::new(h, k, n).unwrap()
    }

    #[test]
    fn the_pair_4_2_of_order_9() {
        let c = classify_pair(pair(4, 2, 9));
        assert!(c.is_covering);
        assert!(c.right_minimal);
        assert!(!c.left_minimal);
    }

    #[test]
    fn pair_examples() {
        assert!(!is_covering_pair(pair(4, 1, 9))); // 26 + 8 < 36
        assert!(is_covering_pair(pair(3, 2, 9))); // 21 + 15 = 36
        for n in 1..=20 {
            assert!(is_covering_pair(pair(n - 1, 0, n)));
        }
        let c = classify_pair(pair(0, 0, 1));
        assert!(c.is_covering && c.left_minimal && c.right_minimal);
    }

    #[test]
    fn sum_examples() {
        assert!(is_covering_sum(5, 9).unwrap());
        assert!(!is_covering_sum(4, 9).unwrap());
        for n in 1..=20 {
            assert!(is_covering_sum(n - 1, n).unwrap());
        }
        assert!(is_covering_sum(9, 9).is_err());
    }

    #[test]
    fn threshold_values() {
        let (even, odd) = covering_sum_threshold(9);
        assert!((even - (17.0 - 145f64.sqrt())).abs() < 1e-12);
        assert!((odd - 5.0).abs() < 1e-12); // 17 - sqrt(144)
        let (even14, _) = covering_sum_threshold(14);
        assert!((even14 - (27.0 - 365f64.sqrt())).abs() < 1e-12);
        let (even1, _) = covering_sum_threshold(1);
        assert!(even1.abs() < 1e-12);
    }

    #[test]
    fn ng_range_values() {
        assert_eq!(ng_range(14).unwrap(), (8, 13));
        assert_eq!(ng_range(1).unwrap(), (0, 0));
        assert_eq!(ng_range(9).unwrap(), (5, 8));
    }

    #[test]
    fn minimal_k_pairs() {
        // Scanning k upward: (6,0) misses the edge-count inequality
        // (33 < 36) but (5,1) meets it (30 + 8 >= 36).
        assert_eq!(minimal_k_pair_for_sum(9, 6).unwrap(), pair(5, 1, 9));
        for n in 2..=20 {
            assert_eq!(
                minimal_k_pair_for_sum(n, n - 1).unwrap(),
                pair(n - 1, 0, n)
            );
        }
        let p = minimal_k_pair_for_sum(14, 8).unwrap();
        assert!(is_covering_pair(p));
        assert_eq!((p.h, p.k), (5, 3));
        assert!(matches!(
            minimal_k_pair_for_sum(9, 4),
            Err(DomainError::NotACoveringSum { .. })
        ));
    }

    #[test]
    fn monotone_in_both_coordinates() {
        for n in 1..=20u64 {
            for h in 0..n {
                for k in 0..n {
                    let p = pair(h, k, n);
                    if is_covering_pair(p) && h + k + 2 <= n {
                        assert!(is_covering_pair(pair(h + 1, k, n)));
                        assert!(is_covering_pair(pair(h, k + 1, n)));
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_matches_brute_force_for_all_small_orders() {
        for n in 1..=20u64 {
            for r in 0..n {
                let brute = (0..=r)
                    .filter(|&k| r - k < n)
                    .any(|k| is_covering_pair(pair(r - k, k, n)));
                assert_eq!(is_covering_sum(r, n).unwrap(), brute, "n={n} r={r}");
                // Parity-appropriate closed form, decided in exact arithmetic:
                // r >= 2n - 1 - sqrt(2n^2 - 2n + [r even]).
                let radicand = if r % 2 == 0 {
                    2 * n * n - 2 * n + 1
                } else {
                    2 * n * n - 2 * n
                } as u128;
                // r >= a - sqrt(b) with a = 2n-1 <=> (a - r)^2 <= b or r >= a.
                let a = 2 * n - 1;
                let closed = r >= a || {
                    let d = (a - r) as u128;
                    d * d <= radicand
                };
                assert_eq!(is_covering_sum(r, n).unwrap(), closed, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn classification_agrees_with_decrement_exhaustively() {
        for n in 1..=20u64 {
            for h in 0..n {
                for k in 0..n {
                    let c = classify_pair(pair(h, k, n));
                    if !c.is_covering {
                        assert!(!c.left_minimal && !c.right_minimal);
                        continue;
                    }
                    let left = h == 0 || !is_covering_pair(pair(h - 1, k, n));
                    let right = k == 0 || !is_covering_pair(pair(h, k - 1, n));
                    assert_eq!((c.left_minimal, c.right_minimal), (left, right));
                }
            }
        }
    }

    #[test]
    fn parity_anomaly_never_strikes_odd_sums() {
        // Where the two branch ceilings differ, the radicand 2n^2-2n+1 must
        // be a perfect square and the resulting lower bound even.
        for n in 1..=1_000_000u64 {
            let b_even = 2u128 * n as u128 * n as u128 - 2 * n as u128 + 1;
            let b_odd = b_even - 1;
            let s_even = isqrt(b_even);
            let s_odd = isqrt(b_odd);
            if s_even != s_odd {
                assert_eq!(s_even * s_even, b_even, "n={n}");
                let lo = (2 * n - 1) as u128 - s_even;
                assert_eq!(lo % 2, 0, "n={n}");
            }
        }
    }
}
