//! The blown-up path family: self-complementary graphs whose densest
//! subgraph connectivity grows only like n/4.
//!
//! ```sh
//! cargo run --example matula_family
//! ```

use degenlab::families::matula;
use degenlab::iso::is_isomorphic;
use degenlab::minors::{max_subgraph_connectivity, OracleCaps};

fn main() {
    let caps = OracleCaps::from_env();
    for s in 1..=3usize {
        let g = matula(s).expect("s <= 16");
        let self_comp = is_isomorphic(&g, &g.complement()).expect("n <= 16");
        let msc = max_subgraph_connectivity(&g, &caps).expect("n <= 12");
        println!(
            "s = {s}: order {:>2}, size {:>3}, self-complementary: {self_comp}, \
             max subgraph connectivity: {msc}",
            g.n(),
            g.m(),
        );
        assert_eq!(msc, s);
    }
    println!();
    println!("the family shows that hunting for highly connected subgraphs in both");
    println!("G and its complement cannot push the rank-sum constant below 3/2:");
    println!("here both searches top out at s = n/4.");
}
