//! Degeneracy certificates and building-sequence degrees.
//!
//! ```sh
//! cargo run --example degeneracy_orderings
//! ```

use degenlab::degeneracy::{building_sequence_degree, degeneracy, lick_white_bound};
use degenlab::generator::generate;

fn main() {
    let (g, _) = generate(9, 3).expect("valid parameters");
    let cert = degeneracy(&g);
    println!("graph: {g:?}");
    println!("degeneracy: {}", cert.value);
    println!(
        "peeling-derived ordering (1-indexed): {:?}",
        cert.ordering.iter().map(|v| v + 1).collect::<Vec<_>>()
    );
    println!("back degrees along it: {:?}", cert.back_degrees);
    assert!(cert.replays_on(&g));

    // The generator's own vertex order is a witness too.
    let identity: Vec<usize> = (0..g.n()).collect();
    println!(
        "identity order has building-sequence degree {}",
        building_sequence_degree(&g, &identity).expect("a permutation")
    );

    // And any ordering at all sits at or above the degeneracy.
    let lw = lick_white_bound(g.n() as u64, cert.value as u64).expect("l < n");
    println!("size {} against the degeneracy-capped maximum {lw}", g.m());
}
