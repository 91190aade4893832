//! Minor-monotone ceilings with replayable witnesses.
//!
//! ```sh
//! cargo run --example minor_ceilings
//! ```

use degenlab::families;
use degenlab::graph::Graph;
use degenlab::minors::{ceiling, CeilingParam, OracleCaps};

fn main() {
    let caps = OracleCaps::from_env();
    let petersen = {
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let mut edges = Vec::new();
        edges.extend(outer);
        edges.extend(spokes);
        edges.extend(inner);
        Graph::from_edges(10, &edges).expect("petersen")
    };
    let samples: Vec<(&str, Graph)> = vec![
        ("P6", families::path(6).expect("path")),
        ("C7", families::cycle(7).expect("cycle")),
        ("K5", Graph::complete(5).expect("complete")),
        ("petersen", petersen),
    ];
    for (name, g) in samples {
        println!("{name} (n = {}, m = {}):", g.n(), g.m());
        for (label, param) in [
            ("delta", CeilingParam::MinDegree),
            ("kappa", CeilingParam::Connectivity),
            ("d", CeilingParam::AverageDegree),
        ] {
            let w = ceiling(&g, param, &caps).expect("within cap");
            print!("  ceil-{label} = {}", w.value);
            if w.ops.is_empty() {
                println!("  (the graph itself is the witness)");
            } else {
                let steps: Vec<String> = w.ops.iter().map(|o| o.to_string()).collect();
                println!("  via {}", steps.join(", "));
            }
            assert!(w.replay(&g, param).expect("ops apply cleanly"));
        }
    }
}
