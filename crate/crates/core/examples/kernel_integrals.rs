//! The Dirichlet kernel sin((2n+1)x/2)/sin(x/2) integrates to exactly π
//! over [0, π] for every n, while the x^s-weighted integral decays like
//! 1/(2n+1) under the second-mean-value bound.
//!
//! ```bash
//! cargo run --example kernel_integrals
//! ```

use std::f64::consts::PI;

use even_zeta::analysis::{kernel_integral, weighted_kernel_integral};

fn main() {
    println!("constant integral (value - pi):");
    for n in [0u32, 1, 5, 15, 30] {
        let r = kernel_integral(n, 1e-10).unwrap();
        println!(
            "  n={n:<3} integral={:.15}  off by {:+.2e}  ({} evaluations)",
            r.value,
            r.value - PI,
            r.evaluations
        );
    }

    println!("\nweighted integral against its bound 2^(s+2)(pi/2)^s/(2n+1):");
    for s in [1.0, 2.0] {
        for n in [0u32, 10, 50, 200] {
            let (r, bound) = weighted_kernel_integral(s, n, 1e-10).unwrap();
            println!(
                "  s={s} n={n:<4} |value|={:.6e}  bound={:.6e}",
                r.value.abs(),
                bound
            );
            assert!(r.value.abs() <= bound + 1e-8);
        }
    }
}
