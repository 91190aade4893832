//! The order-8 graph whose min-degree ceiling sums with its complement's to
//! 8, beating the n - 1 cap that holds for plain degeneracy.
//!
//! ```sh
//! cargo run --example counterexample_order8
//! ```

use degenlab::degeneracy::degeneracy;
use degenlab::families::{figure1, FIGURE1_NOTE};
use degenlab::minors::{ceiling, CeilingParam, OracleCaps};

fn main() {
    let caps = OracleCaps::from_env();
    let g = figure1();
    println!("edge list ({} edges): {:?}", g.m(), g.edges_1indexed());
    println!("provenance: {FIGURE1_NOTE}");

    let c = g.complement();
    let l = degeneracy(&g).value;
    let lc = degeneracy(&c).value;
    println!("\ndegeneracy:          l(G) = {l}, l(G^c) = {lc}, sum {} <= n - 1 = 7", l + lc);

    let a = ceiling(&g, CeilingParam::MinDegree, &caps).expect("order 8");
    let b = ceiling(&c, CeilingParam::MinDegree, &caps).expect("order 8");
    println!(
        "min-degree ceiling:  {} and {}, sum {} > 7",
        a.value,
        b.value,
        a.value + b.value
    );
    println!("\nwitness minor inside G (reached by {} operations):", a.ops.len());
    for op in &a.ops {
        println!("  {op}");
    }
    println!("  -> {:?}", a.witness);
}
