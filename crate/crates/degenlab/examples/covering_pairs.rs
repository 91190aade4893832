//! Classify covering pairs at a fixed order and print the minimality table.
//!
//! ```sh
//! cargo run --example covering_pairs
//! ```

use degenlab::covering::{classify_pair, covering_sum_threshold, ng_range, CoveringPair};

fn main() {
    let n = 9;
    println!("covering pairs of order {n} (rows h, columns k):");
    println!("  . = not covering, c = covering, L/R/B = left-/right-/both-minimal");
    print!("     ");
    for k in 0..n {
        print!("{k} ");
    }
    println!();
    for h in 0..n {
        print!("  h={h} ");
        for k in 0..n {
            let class = classify_pair(CoveringPair::new(h, k, n).expect("in range"));
            let mark = match (class.is_covering, class.left_minimal, class.right_minimal) {
                (false, _, _) => '.',
                (true, true, true) => 'B',
                (true, true, false) => 'L',
                (true, false, true) => 'R',
                (true, false, false) => 'c',
            };
            print!("{mark} ");
        }
        println!();
    }

    let (even, odd) = covering_sum_threshold(n);
    println!("\nsum thresholds at order {n}: even branch {even:.4}, odd branch {odd:.4}");
    let (lo, hi) = ng_range(n).expect("n >= 1");
    println!("attainable degeneracy sums: {lo}..={hi}");
}
