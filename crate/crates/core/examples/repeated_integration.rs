//! The Cauchy formula for repeated integration collapses a k-fold iterated
//! integral into one kernel-weighted integral; the repeated-integral
//! operator I_j built on it is linear.
//!
//! ```bash
//! cargo run --example repeated_integration
//! ```

use even_zeta::analysis::{cauchy_repeated_check, linearity_check, repeated_integral_op};

fn main() {
    println!("I_k(t^m)(x) vs the closed form x^(m+k)·m!/(m+k)!:");
    for (m, k, x) in [(0u32, 2u32, 1.0f64), (1, 2, 1.0), (3, 4, 2.0)] {
        let value = repeated_integral_op(|t| t.powi(m as i32), k, x, 1e-11).unwrap();
        let residual = cauchy_repeated_check(m, k, x, 1e-9).unwrap();
        println!("  m={m} k={k} x={x}: value={value:.12}  residual={residual:.2e}");
        assert!(residual <= 1e-9);
    }

    // I_0 is the identity by convention.
    let direct = repeated_integral_op(f64::cos, 0, 0.3, 1e-10).unwrap();
    println!("\nI_0(cos)(0.3) = cos(0.3) = {direct}");

    println!("\nlinearity of I_j on t^2, cos t, and the constant 3:");
    for (j, x) in [(1u32, 1.0f64), (2, 1.0), (3, std::f64::consts::PI)] {
        let report = linearity_check(j, x);
        for case in &report.cases {
            println!("  {}  residual={:.2e}", case.inputs, case.residual);
        }
        assert!(report.pass);
    }
}
