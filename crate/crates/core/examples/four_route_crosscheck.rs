//! Cross-validate the recurrence route against Euler's Bernoulli formula
//! and both Srivastava recurrences — all four must produce the same exact
//! rationals.
//!
//! ```bash
//! cargo run --example four_route_crosscheck
//! ```

use even_zeta::zeta::{zeta_even_sequence, Route};

fn main() {
    let max_l = 50;
    let sequences: Vec<_> = Route::ALL
        .iter()
        .map(|&route| (route, zeta_even_sequence(route, max_l)))
        .collect();

    for l in [1u32, 2, 3, 10, 50] {
        println!("l = {l}:");
        for (route, seq) in &sequences {
            println!("  {:<13} q = {}", route.name(), seq[l as usize - 1].q);
        }
    }

    let reference = &sequences[0].1;
    let all_agree = sequences.iter().all(|(_, seq)| seq == reference);
    assert!(all_agree);
    println!("\nall four routes agree exactly for l = 1..{max_l}");
}
