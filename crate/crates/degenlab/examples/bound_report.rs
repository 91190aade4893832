//! Aggregate every applicable nu lower bound for a handful of graphs.
//!
//! ```sh
//! cargo run --example bound_report
//! ```

use degenlab::bounds::bound_report;
use degenlab::families;
use degenlab::generator::generate;
use degenlab::graph::Graph;
use degenlab::minors::{CeilingOracle, OracleCaps};

fn main() {
    let caps = OracleCaps::from_env();
    let oracle = CeilingOracle::new();
    let samples: Vec<(&str, Graph)> = vec![
        ("K5", Graph::complete(5).expect("complete")),
        ("P4", families::path(4).expect("path")),
        ("order-14 generated", generate(14, 4).expect("valid").0),
        ("matula:3", families::matula(3).expect("s <= 16")),
    ];
    for (name, g) in samples {
        let r = bound_report(&g, &oracle, &caps);
        println!("{name}: n = {}, m = {}, m(G^c) = {}", r.n, r.m, r.m_complement);
        for e in &r.entries {
            println!(
                "  nu {} {:>10.4}   {:?}{}",
                if e.strict { ">" } else { ">=" },
                e.value,
                e.source,
                if e.conditional { "  [conditional]" } else { "" },
            );
        }
        println!(
            "  best: nu {} {} from {:?}; so mr_nu <= {}",
            if r.best_strict { ">" } else { ">=" },
            r.best_nu_lower,
            r.best_source,
            r.mr_nu_upper
        );
        println!();
    }
}
