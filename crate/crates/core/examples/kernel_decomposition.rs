//! The chain from partial cosine sums to ζ(2l): the telescoped
//! sum-integral identities, the kernel decomposition of Σ cos(kx)/k^{2l},
//! and the alternating-series relation that extracts the zeta value.
//!
//! ```bash
//! cargo run --example kernel_decomposition
//! ```

use std::f64::consts::PI;

use even_zeta::analysis::{
    alternating_relation_check, kernel_decomposition_check, partial_sum,
    sum_integral_identity_check,
};
use even_zeta::zeta::{zeta_even_sequence, Route};

fn main() {
    println!("telescoped sum-integral identities at n=10:");
    for x in [1.0, 2.0, PI] {
        let report = sum_integral_identity_check(10, x, 1e-8);
        for case in &report.cases {
            println!("  {}  residual={:.2e}", case.inputs, case.residual);
        }
        assert!(report.pass);
    }

    println!("\nkernel decomposition of H(x) = sum cos(kx)/k^(2l):");
    for l in 1..=3u32 {
        for (n, x) in [(5u32, PI), (10, 2.0), (20, 1.0)] {
            let residual = kernel_decomposition_check(l, n, x, 1e-6).unwrap();
            let h = partial_sum(n, 2 * l, x).value;
            println!("  l={l} n={n:<3} x={x:.4}: H={h:+.9}  residual={residual:.2e}");
            assert!(residual <= 1e-6);
        }
    }

    println!("\nalternating relation (-2 + 2^(1-2l))·zeta(2l):");
    let zetas = zeta_even_sequence(Route::Recurrence, 2);
    for (l, terms, zeta) in [(1u32, 10_000u64, &zetas[0]), (2, 1_000, &zetas[1])] {
        let residual = alternating_relation_check(l, terms, zeta, 30).unwrap();
        println!("  l={l} N={terms}: residual={residual:.3e} (truncation-rate decay ~N^(1-2l))");
    }
}
