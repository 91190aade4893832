//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line (run with `--nocapture` to see them).

use std::time::{Duration, Instant};

use degenlab::covering::{classify_pair, ng_range, CoveringPair};
use degenlab::degeneracy::degeneracy;
use degenlab::families;
use degenlab::generator::generate;
use degenlab::graph::{Girth, Graph};
use degenlab::harness::{run_check, CheckName, Corpus, SweepContext};
use degenlab::iso::is_isomorphic;
use degenlab::minors::{self, CeilingParam, OracleCaps};

fn criterion(number: u32, description: &str, limit: Duration, body: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    let mut result = body();
    let elapsed = started.elapsed();
    if result.is_ok() && elapsed > limit {
        result = Err(format!("ran {elapsed:?}, over the {limit:?} budget"));
    }
    match &result {
        Ok(()) => println!("criterion {number}: PASS ({elapsed:?}) - {description}"),
        Err(e) => println!("criterion {number}: FAIL - {description}: {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {number} failed: {e}");
    }
}

/// The 46-edge order-14 graph exactly as drawn: a 5-clique, then the listed
/// neighbor sets for vertices 6..=14 (1-indexed).
fn drawn_order14() -> Graph {
    let lists: [(usize, [usize; 4]); 9] = [
        (6, [1, 2, 3, 4]),
        (7, [1, 2, 3, 5]),
        (8, [1, 4, 5, 6]),
        (9, [2, 3, 4, 5]),
        (10, [1, 2, 6, 7]),
        (11, [3, 4, 5, 6]),
        (12, [1, 2, 7, 8]),
        (13, [3, 4, 5, 6]),
        (14, [1, 7, 8, 9]),
    ];
    let mut edges = Vec::new();
    for u in 1..=5usize {
        for v in u + 1..=5 {
            edges.push((u - 1, v - 1));
        }
    }
    for (v, nbrs) in lists {
        for u in nbrs {
            edges.push((u - 1, v - 1));
        }
    }
    Graph::from_edges(14, &edges).expect("valid edge list")
}

#[test]
fn criterion_1_order14_bit_exact() {
    criterion(
        1,
        "generator reproduces the published order-14 graph bit-exactly",
        Duration::from_secs(1),
        || {
            let (g, _) = generate(14, 4).map_err(|e| e.to_string())?;
            let want = drawn_order14();
            if g != want {
                return Err("adjacency differs from the drawing".into());
            }
            if g.m() != 46 {
                return Err(format!("m = {}", g.m()));
            }
            let (l, lc) = (degeneracy(&g).value, degeneracy(&g.complement()).value);
            if (l, lc) != (4, 4) {
                return Err(format!("degeneracies ({l}, {lc})"));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_generator_battery_to_order_12() {
    criterion(
        2,
        "full generator battery over all 78 cells with n <= 12",
        Duration::from_secs(10),
        || {
            let ctx = SweepContext::default();
            let report = run_check(CheckName::Algorithm1, &Corpus::Enumerate { n_max: 12 }, &ctx)
                .map_err(|e| e.to_string())?;
            if report.tested != 78 {
                return Err(format!("expected 78 cells, ran {}", report.tested));
            }
            if !report.passed() {
                return Err(format!("violations: {:?}", report.violations));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_3_sum_realizability() {
    criterion(
        3,
        "every integer in the degeneracy-sum range is realized (n <= 12), and the order-14 range starts at 8",
        Duration::from_secs(10),
        || {
            let ctx = SweepContext::default();
            let report =
                run_check(CheckName::NgRealizability, &Corpus::Enumerate { n_max: 12 }, &ctx)
                    .map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("violations: {:?}", report.violations));
            }
            let (lo, hi) = ng_range(14).map_err(|e| e.to_string())?;
            if (lo, hi) != (8, 13) {
                return Err(format!("order-14 range is ({lo}, {hi})"));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_exhaustive_battery_order_7() {
    criterion(
        4,
        "all registry inequalities hold on every graph of order <= 7",
        Duration::from_secs(30 * 60),
        || {
            let ctx = SweepContext::default();
            let corpus = Corpus::Enumerate { n_max: 7 };
            for check in [
                CheckName::Lgprop,
                CheckName::Lickwhite,
                CheckName::Mader,
                CheckName::KappaThm3,
                CheckName::WggcSurrogate,
                CheckName::OneFourth,
                CheckName::Lattice,
            ] {
                let report = run_check(check, &corpus, &ctx).map_err(|e| e.to_string())?;
                if report.tested != 1252 {
                    return Err(format!("{}: tested {} of 1252", check.name(), report.tested));
                }
                if !report.passed() {
                    return Err(format!(
                        "{}: {} violations, first: {:?}",
                        check.name(),
                        report.violations.len(),
                        report.violations.first()
                    ));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_covering_calculus() {
    criterion(
        5,
        "pair (4,2) at order 9 classifies exactly, and the closed-form threshold matches brute force for n <= 20",
        Duration::from_secs(1),
        || {
            let class = classify_pair(CoveringPair::new(4, 2, 9).map_err(|e| e.to_string())?);
            if !(class.is_covering && class.right_minimal && !class.left_minimal) {
                return Err(format!("classification {class:?}"));
            }
            for n in 1..=20u64 {
                for r in 0..n {
                    let brute = (0..=r).filter(|&k| r - k < n).any(|k| {
                        degenlab::covering::is_covering_pair(
                            CoveringPair::new(r - k, k, n).expect("in range"),
                        )
                    });
                    let sum = degenlab::covering::is_covering_sum(r, n).expect("in range");
                    if sum != brute {
                        return Err(format!("balanced-pair rule differs at (n={n}, r={r})"));
                    }
                    let a = 2 * n - 1;
                    let radicand = if r % 2 == 0 {
                        2 * n * n - 2 * n + 1
                    } else {
                        2 * n * n - 2 * n
                    } as u128;
                    let closed = r >= a || ((a - r) as u128).pow(2) <= radicand;
                    if sum != closed {
                        return Err(format!("threshold differs at (n={n}, r={r})"));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_6_matula_family() {
    criterion(
        6,
        "blown-up path family: order 4s, self-complementary, densest subgraph connectivity s (s <= 3)",
        Duration::from_secs(60),
        || {
            let caps = OracleCaps::default();
            for s in 1..=3usize {
                let g = families::matula(s).map_err(|e| e.to_string())?;
                if g.n() != 4 * s {
                    return Err(format!("matula({s}) has order {}", g.n()));
                }
                if !is_isomorphic(&g, &g.complement()).map_err(|e| e.to_string())? {
                    return Err(format!("matula({s}) is not self-complementary"));
                }
                let msc =
                    minors::max_subgraph_connectivity(&g, &caps).map_err(|e| e.to_string())?;
                if msc != s {
                    return Err(format!("matula({s}) densest connectivity {msc}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_order8_counterexample() {
    criterion(
        7,
        "reconstructed order-8 graph has min-degree ceiling 4 on both sides, beating n - 1",
        Duration::from_secs(5 * 60),
        || {
            let caps = OracleCaps::default();
            let g = families::figure1();
            let a = minors::ceiling(&g, CeilingParam::MinDegree, &caps)
                .map_err(|e| e.to_string())?;
            let b = minors::ceiling(&g.complement(), CeilingParam::MinDegree, &caps)
                .map_err(|e| e.to_string())?;
            let four = num::rational::Ratio::from_integer(4u64);
            if a.value != four || b.value != four {
                return Err(format!("ceilings ({}, {})", a.value, b.value));
            }
            if !a.replay(&g, CeilingParam::MinDegree).map_err(|e| e.to_string())? {
                return Err("witness replay failed".into());
            }
            // 4 + 4 = 8 > 7 = n - 1.
            if g.n() > 8 {
                return Err("order drifted".into());
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_threshold_boundaries() {
    criterion(
        8,
        "certificate evaluators flip exactly at the published thresholds",
        Duration::from_secs(1),
        || {
            use degenlab::bounds::{delta_conjecture_certificate, CertStatus};
            let cases = [
                (192, 7, false),
                (193, 7, true),
                (192, 10, false),
                (193, 10, true),
                (8_000_000 - 1, 5, false),
                (8_000_000, 5, true),
                (8_000_000 - 1, 6, false),
                (8_000_000, 6, true),
            ];
            for (delta, girth, certified) in cases {
                let got = delta_conjecture_certificate(delta, Girth::Finite(girth), None);
                let is_certified = matches!(got, CertStatus::Certified(_));
                if is_certified != certified {
                    return Err(format!(
                        "delta = {delta}, girth = {girth}: got {got:?}, expected certified = {certified}"
                    ));
                }
            }
            Ok(())
        },
    );
}
