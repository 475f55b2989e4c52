//! Compute ζ(2l) = q_l·π^{2l} exactly and render the decimals.
//!
//! ```bash
//! cargo run --example compute_even_zeta
//! ```

use even_zeta::zeta::{render_zeta, zeta_even_sequence, Route};

fn main() {
    let coefficients = zeta_even_sequence(Route::Recurrence, 10);
    println!("{:<3} {:<24} zeta(2l)", "l", "q  (zeta(2l) = q*pi^2l)");
    for coeff in &coefficients {
        let decimal = render_zeta(coeff, 40).unwrap();
        println!("{:<3} {:<24} {}", coeff.l, coeff.q.to_string(), decimal);
    }

    // The coefficients shrink fast: the tail of the table is already
    // indistinguishable from 1 at this precision.
    let q10 = &coefficients[9];
    println!(
        "\nq_10 = {} has a {}-digit denominator",
        q10.q,
        q10.q.denom().to_string().len()
    );
}
