//! Walk the WZ pair catalog: check the defining relation
//! ∂F/∂x = G(x,k+1) - G(x,k) pointwise (closed form and central
//! difference), then the telescoped sum-against-integral identity.
//!
//! ```bash
//! cargo run --example wz_pair_telescoping
//! ```

use std::f64::consts::PI;

use even_zeta::wz::{catalog, telescoping_check, wz_residual, DiffMode, DEFAULT_FD_STEP};

fn main() {
    println!(
        "{:<10} {:<38} {:>13} {:>13}",
        "pair", "F(x,k)", "analytic", "central diff"
    );
    for pair in catalog() {
        let mut worst_analytic: f64 = 0.0;
        let mut worst_fd: f64 = 0.0;
        for i in 0..16 {
            let x = PI * f64::from(i) / 15.0;
            for k in 1..=10 {
                worst_analytic =
                    worst_analytic.max(wz_residual(&pair, x, k, DiffMode::Analytic).unwrap());
                worst_fd = worst_fd.max(
                    wz_residual(
                        &pair,
                        x,
                        k,
                        DiffMode::FiniteDifference { h: DEFAULT_FD_STEP },
                    )
                    .unwrap(),
                );
            }
        }
        let formula = pair.description.split(',').next().unwrap_or("");
        println!(
            "{:<10} {:<38} {:>13.2e} {:>13.2e}",
            pair.id, formula, worst_analytic, worst_fd
        );
    }

    println!("\ntelescoped identity, k = 1..8 against integrals over [0, x]:");
    for pair in catalog() {
        let report = telescoping_check(&pair, PI, 0.0, 1, 8, 1e-10);
        println!(
            "  {:<10} residual {:>12.2e}  (tolerance {:.2e})  {}",
            pair.id,
            report.max_residual,
            report.tolerance,
            if report.pass { "ok" } else { "FAIL" }
        );
        assert!(report.pass);
    }
}
