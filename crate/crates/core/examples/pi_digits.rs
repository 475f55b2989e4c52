//! Decimal digits of π from Machin's identity in pure integer arithmetic.
//!
//! ```bash
//! cargo run --example pi_digits [digits]
//! ```

use even_zeta::exact::pi_digits;

fn main() {
    let digits: usize = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("digit count must be a number"))
        .unwrap_or(100);

    let rendered = pi_digits(digits).expect("1..=10000 digits supported");
    println!("pi to {digits} fractional digits:");
    println!("{rendered}");

    // Renderings at different precisions agree on their common prefix.
    let shorter = pi_digits(digits.saturating_sub(5).max(1)).unwrap();
    assert!(rendered.digits.starts_with(&shorter.digits));
}
