//! Bernoulli numbers, Bernoulli polynomials, and the exact half-argument
//! identity B_{2k}(1/2) = (2^{1-2k} - 1)·B_{2k}.
//!
//! ```bash
//! cargo run --example bernoulli_half_identity
//! ```

use even_zeta::exact::{rat, Rational};
use even_zeta::zeta::{bernoulli_poly, bernoulli_table, verify_half_identity};

fn main() {
    let table = bernoulli_table(12);
    println!("first Bernoulli numbers (B_1 = -1/2 convention):");
    for (k, b) in table.values().iter().enumerate() {
        if !b.is_zero() || k == 0 {
            println!("  B_{k:<2} = {b}");
        }
    }

    let half = rat(1, 2).unwrap();
    println!("\npolynomial values at 1/2:");
    for n in [2u32, 4, 6] {
        println!("  B_{n}(1/2) = {}", bernoulli_poly(n, &half).value);
    }
    // B_n(0) recovers the numbers themselves.
    assert_eq!(
        &bernoulli_poly(8, &Rational::zero()).value,
        table.get(8).unwrap()
    );

    let report = verify_half_identity(50);
    println!(
        "\nhalf-argument identity for k = 1..50: {} ({} exact matches)",
        if report.pass { "holds" } else { "FAILS" },
        report.cases.len()
    );
    assert!(report.pass);
}
