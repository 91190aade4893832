//! For each order, realize every attainable value of l(G) + l(G^c) with a
//! generated graph.
//!
//! ```sh
//! cargo run --example nordhaus_gaddum_range
//! ```

use degenlab::codec::to_graph6;
use degenlab::covering::ng_range;
use degenlab::degeneracy::degeneracy;
use degenlab::generator::realize_sum;

fn main() {
    for n in 2..=14u64 {
        let (lo, hi) = ng_range(n).expect("n >= 1");
        print!("n = {n:>2}: sums {lo}..={hi} realized by ");
        for r in lo..=hi {
            let g = realize_sum(n, r).expect("r is attainable");
            let l = degeneracy(&g).value;
            let lc = degeneracy(&g.complement()).value;
            assert_eq!((l + lc) as u64, r);
            print!("{} ", to_graph6(&g));
        }
        println!();
    }
}
