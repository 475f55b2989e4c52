//! Continuous-discrete WZ pairs and their verification.
//!
//! A pair (F(x,k), G(x,k)) is a continuous-discrete WZ pair when
//! ∂F/∂x = G(x,k+1) - G(x,k); summing that relation telescopes a sum of F
//! values against integrals of G. The catalog holds the trigonometric
//! chain of pairs behind the even-zeta evaluation plus their two complex
//! exponential counterparts.

use num_complex::Complex64;

use crate::analysis::adaptive_quad;
use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// Scalar field a pair evaluates in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarField {
    Real,
    Complex,
}

/// A registered pair of evaluators. Real-valued pairs evaluate with a zero
/// imaginary part; residual magnitudes are Euclidean moduli either way.
#[derive(Clone)]
pub struct WZPairSpec {
    pub id: &'static str,
    pub field: ScalarField,
    /// Power of k in F's denominator; telescoping a weight-w pair lowers
    /// the weight by one, which is what chains the pairs together.
    pub weight: u32,
    pub description: &'static str,
    f: fn(f64, u32) -> Complex64,
    g: fn(f64, u32) -> Complex64,
    df_dx: Option<fn(f64, u32) -> Complex64>,
}

impl std::fmt::Debug for WZPairSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WZPairSpec")
            .field("id", &self.id)
            .field("field", &self.field)
            .field("weight", &self.weight)
            .field("description", &self.description)
            .field("closed_form_derivative", &self.df_dx.is_some())
            .finish()
    }
}

impl WZPairSpec {
    pub fn f(&self, x: f64, k: u32) -> Complex64 {
        (self.f)(x, k)
    }

    /// G(x,k) = Σ_{j=1}^{k-1} g_j(x); G(x,1) is the empty sum, zero.
    pub fn g(&self, x: f64, k: u32) -> Complex64 {
        (self.g)(x, k)
    }

    pub fn has_closed_form_derivative(&self) -> bool {
        self.df_dx.is_some()
    }

    pub fn df_dx(&self, x: f64, k: u32) -> Option<Complex64> {
        self.df_dx.map(|d| d(x, k))
    }
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn sum_over(k: u32, term: impl Fn(f64) -> Complex64) -> Complex64 {
    (1..k).map(|j| term(f64::from(j))).sum()
}

fn unit_phase(x: f64, k: f64) -> Complex64 {
    Complex64::new(0.0, k * x).exp()
}

/// The cataloged pairs: the two weight-(2,1) pairs driving the ζ(2)
/// evaluation, the four-pair chain of weights 4,3,2,1 behind ζ(4), and the
/// two complex exponential pairs. Every entry carries a closed-form ∂F/∂x.
pub fn catalog() -> Vec<WZPairSpec> {
    vec![
        WZPairSpec {
            id: "f1g1",
            weight: 2,
            field: ScalarField::Real,
            description: "F = cos(kx)/k^2, G = sum -sin(jx)/j",
            f: |x, k| real((f64::from(k) * x).cos() / f64::from(k).powi(2)),
            g: |x, k| sum_over(k, |j| real(-(j * x).sin() / j)),
            df_dx: Some(|x, k| real(-(f64::from(k) * x).sin() / f64::from(k))),
        },
        WZPairSpec {
            id: "f2g2",
            weight: 1,
            field: ScalarField::Real,
            description: "F = -sin(kx)/k, G = sum -cos(jx)",
            f: |x, k| real(-(f64::from(k) * x).sin() / f64::from(k)),
            g: |x, k| sum_over(k, |j| real(-(j * x).cos())),
            df_dx: Some(|x, k| real(-(f64::from(k) * x).cos())),
        },
        WZPairSpec {
            id: "f1g1_w4",
            weight: 4,
            field: ScalarField::Real,
            description: "F = cos(kx)/k^4, G = sum -sin(jx)/j^3",
            f: |x, k| real((f64::from(k) * x).cos() / f64::from(k).powi(4)),
            g: |x, k| sum_over(k, |j| real(-(j * x).sin() / j.powi(3))),
            df_dx: Some(|x, k| real(-(f64::from(k) * x).sin() / f64::from(k).powi(3))),
        },
        WZPairSpec {
            id: "f2g2_w3",
            weight: 3,
            field: ScalarField::Real,
            description: "F = -sin(kx)/k^3, G = sum -cos(jx)/j^2",
            f: |x, k| real(-(f64::from(k) * x).sin() / f64::from(k).powi(3)),
            g: |x, k| sum_over(k, |j| real(-(j * x).cos() / j.powi(2))),
            df_dx: Some(|x, k| real(-(f64::from(k) * x).cos() / f64::from(k).powi(2))),
        },
        WZPairSpec {
            id: "f3g3",
            weight: 2,
            field: ScalarField::Real,
            description: "F = -cos(kx)/k^2, G = sum sin(jx)/j",
            f: |x, k| real(-(f64::from(k) * x).cos() / f64::from(k).powi(2)),
            g: |x, k| sum_over(k, |j| real((j * x).sin() / j)),
            df_dx: Some(|x, k| real((f64::from(k) * x).sin() / f64::from(k))),
        },
        WZPairSpec {
            id: "f4g4",
            weight: 1,
            field: ScalarField::Real,
            description: "F = sin(kx)/k, G = sum cos(jx)",
            f: |x, k| real((f64::from(k) * x).sin() / f64::from(k)),
            g: |x, k| sum_over(k, |j| real((j * x).cos())),
            df_dx: Some(|x, k| real((f64::from(k) * x).cos())),
        },
        WZPairSpec {
            id: "complex1",
            weight: 2,
            field: ScalarField::Complex,
            description: "F = e^{ikx}/k^2, G = sum i e^{ijx}/j",
            f: |x, k| unit_phase(x, f64::from(k)) / f64::from(k).powi(2),
            g: |x, k| sum_over(k, |j| Complex64::i() * unit_phase(x, j) / j),
            df_dx: Some(|x, k| Complex64::i() * unit_phase(x, f64::from(k)) / f64::from(k)),
        },
        WZPairSpec {
            id: "complex2",
            weight: 1,
            field: ScalarField::Complex,
            description: "F = i e^{ikx}/k, G = sum -e^{ijx}",
            f: |x, k| Complex64::i() * unit_phase(x, f64::from(k)) / f64::from(k),
            g: |x, k| sum_over(k, |j| -unit_phase(x, j)),
            df_dx: Some(|x, k| -unit_phase(x, f64::from(k))),
        },
    ]
}

pub fn find_pair(id: &str) -> Option<WZPairSpec> {
    catalog().into_iter().find(|p| p.id == id)
}

/// How to evaluate ∂F/∂x in [`wz_residual`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiffMode {
    /// Use the registered closed form.
    Analytic,
    /// Central difference (F(x+h) - F(x-h))/(2h); truncation is O(h²).
    FiniteDifference { h: f64 },
}

pub const DEFAULT_FD_STEP: f64 = 1e-5;
const MAX_FD_STEP: f64 = 1e-3;

/// |∂F/∂x - (G(x,k+1) - G(x,k))| at a single point, the defining relation
/// of a pair.
pub fn wz_residual(pair: &WZPairSpec, x: f64, k: u32, mode: DiffMode) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidArgument("index k must be >= 1".into()));
    }
    let derivative = match mode {
        DiffMode::Analytic => pair
            .df_dx(x, k)
            .ok_or_else(|| Error::NoClosedFormDerivative { id: pair.id.into() })?,
        DiffMode::FiniteDifference { h } => {
            if !(h > 0.0 && h <= MAX_FD_STEP) {
                return Err(Error::StepOutOfRange {
                    h,
                    max: MAX_FD_STEP,
                });
            }
            (pair.f(x + h, k) - pair.f(x - h, k)) / (2.0 * h)
        }
    };
    let telescoped = pair.g(x, k + 1) - pair.g(x, k);
    Ok((derivative - telescoped).norm())
}

/// Telescoping identity for a pair over k = m..n:
///
///   Σ F(x,k) - Σ F(h0,k)  =  ∫_{h0}^{x} G(t,n+1) dt - ∫_{h0}^{x} G(t,m) dt
///
/// with the integrals by adaptive quadrature. Passes when the residual is
/// within 10·quad_tol·(1 + |left side|); a non-convergent quadrature is
/// reported as a failing case carrying the diagnostic.
pub fn telescoping_check(
    pair: &WZPairSpec,
    x: f64,
    h0: f64,
    m: u32,
    n: u32,
    quad_tol: f64,
) -> VerificationReport {
    let name = format!("wz-telescoping-{}", pair.id);
    if m < 1 || m > n {
        let mut report = VerificationReport::new(name, 0.0);
        report.push(format!("invalid range m={m} n={n}"), f64::INFINITY);
        return report;
    }
    let left: Complex64 = (m..=n).map(|k| pair.f(x, k) - pair.f(h0, k)).sum();
    let tolerance = 10.0 * quad_tol * (1.0 + left.norm());
    let mut report = VerificationReport::new(name, tolerance);
    let inputs = format!("x={x} h0={h0} m={m} n={n}");
    let right = (|| -> Result<Complex64> {
        let upper = quad_oriented(|t| pair.g(t, n + 1), pair.field, h0, x, quad_tol)?;
        let lower = quad_oriented(|t| pair.g(t, m), pair.field, h0, x, quad_tol)?;
        Ok(upper - lower)
    })();
    match right {
        Ok(right) => report.push(inputs, (left - right).norm()),
        Err(err) => report.push(format!("{inputs} [{err}]"), f64::INFINITY),
    }
    report
}

/// Integrates a scalar-field evaluator from a to b, either orientation;
/// complex integrands integrate component-wise.
fn quad_oriented(
    g: impl Fn(f64) -> Complex64,
    field: ScalarField,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<Complex64> {
    let (lo, hi, orientation) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
    let re = adaptive_quad(|t| g(t).re, lo, hi, tol)?.value;
    let im = match field {
        ScalarField::Real => 0.0,
        ScalarField::Complex => adaptive_quad(|t| g(t).im, lo, hi, tol)?.value,
    };
    Ok(orientation * Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn catalog_contents() {
        let pairs = catalog();
        assert_eq!(pairs.len(), 8);
        assert!(pairs.iter().all(|p| p.has_closed_form_derivative()));
        let complex: Vec<_> = pairs
            .iter()
            .filter(|p| p.field == ScalarField::Complex)
            .map(|p| p.id)
            .collect();
        assert_eq!(complex, ["complex1", "complex2"]);
        for id in ["f1g1", "f2g2", "f3g3", "f4g4", "f1g1_w4", "f2g2_w3"] {
            assert!(find_pair(id).is_some(), "missing {id}");
        }
        // The chain runs through every weight from 4 down to 1.
        let mut weights: Vec<u32> = pairs
            .iter()
            .filter(|p| p.field == ScalarField::Real)
            .map(|p| p.weight)
            .collect();
        weights.sort_unstable();
        assert_eq!(weights, [1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn closed_form_derivatives_match_statements() {
        let f1g1 = find_pair("f1g1").unwrap();
        let d = f1g1.df_dx(0.7, 3).unwrap();
        assert!((d.re - (-(3.0f64 * 0.7).sin() / 3.0)).abs() < 1e-15);

        let f4g4 = find_pair("f4g4").unwrap();
        let d = f4g4.df_dx(0.7, 5).unwrap();
        assert!((d.re - (5.0f64 * 0.7).cos()).abs() < 1e-15);

        let complex2 = find_pair("complex2").unwrap();
        let d = complex2.df_dx(0.7, 4).unwrap();
        let expected = -Complex64::new(0.0, 4.0 * 0.7).exp();
        assert!((d - expected).norm() < 1e-15);
    }

    #[test]
    fn empty_sum_convention() {
        for pair in catalog() {
            for &x in &[0.0, 0.4, 2.0, PI] {
                assert_eq!(pair.g(x, 1).norm(), 0.0, "{} at x={x}", pair.id);
            }
        }
    }

    #[test]
    fn analytic_residuals_vanish() {
        // Both sides are the same closed form up to summation roundoff.
        let f1g1 = find_pair("f1g1").unwrap();
        assert!(wz_residual(&f1g1, 0.7, 3, DiffMode::Analytic).unwrap() <= 1e-12);
        let f2g2 = find_pair("f2g2").unwrap();
        // At x=0 both sides equal -cos(0) = -1.
        assert!(wz_residual(&f2g2, 0.0, 5, DiffMode::Analytic).unwrap() <= 1e-12);
    }

    #[test]
    fn analytic_grid_sweep() {
        for pair in catalog() {
            for i in 0..32 {
                let x = PI * f64::from(i) / 31.0;
                for k in 1..=12 {
                    let scale = 1.0 + pair.g(x, k + 1).norm();
                    let residual = wz_residual(&pair, x, k, DiffMode::Analytic).unwrap();
                    assert!(
                        residual <= 1e-12 * scale,
                        "{} x={x} k={k}: {residual:e}",
                        pair.id
                    );
                }
            }
        }
    }

    #[test]
    fn finite_difference_residual_bounded() {
        let f1g1 = find_pair("f1g1").unwrap();
        let r = wz_residual(&f1g1, 0.7, 3, DiffMode::FiniteDifference { h: 1e-5 }).unwrap();
        assert!(r <= 1e-9, "residual {r:e}");
    }

    #[test]
    fn finite_difference_is_second_order() {
        // Halving h quarters the truncation error wherever it dominates
        // cancellation noise.
        for pair in catalog() {
            for i in 0..8 {
                let x = PI * (f64::from(i) + 0.37) / 8.0;
                for k in [1u32, 5, 12] {
                    let coarse =
                        wz_residual(&pair, x, k, DiffMode::FiniteDifference { h: 1e-4 }).unwrap();
                    let fine =
                        wz_residual(&pair, x, k, DiffMode::FiniteDifference { h: 5e-5 }).unwrap();
                    if fine > 1e-13 {
                        let ratio = coarse / fine;
                        assert!(
                            (3.5..=4.5).contains(&ratio),
                            "{} x={x} k={k}: ratio {ratio}",
                            pair.id
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn complex_real_part_matches_real_pair() {
        // cos(kx)/k² is the real part of e^{ikx}/k²; the defining relation
        // projects accordingly.
        let complex1 = find_pair("complex1").unwrap();
        let f1g1 = find_pair("f1g1").unwrap();
        for i in 0..16 {
            let x = PI * f64::from(i) / 15.0;
            for k in 1..=12 {
                let real_gap = {
                    let d = f1g1.df_dx(x, k).unwrap();
                    let t = f1g1.g(x, k + 1) - f1g1.g(x, k);
                    (d - t).re
                };
                let complex_gap = {
                    let d = complex1.df_dx(x, k).unwrap();
                    let t = complex1.g(x, k + 1) - complex1.g(x, k);
                    (d - t).re
                };
                assert!((real_gap - complex_gap).abs() <= 1e-12, "x={x} k={k}");
            }
        }
    }

    #[test]
    fn residual_argument_validation() {
        let pair = find_pair("f1g1").unwrap();
        assert!(wz_residual(&pair, 0.5, 0, DiffMode::Analytic).is_err());
        assert!(wz_residual(&pair, 0.5, 3, DiffMode::FiniteDifference { h: 0.0 }).is_err());
        assert!(wz_residual(&pair, 0.5, 3, DiffMode::FiniteDifference { h: 2e-3 }).is_err());

        let mut blind = pair.clone();
        blind.df_dx = None;
        assert!(matches!(
            wz_residual(&blind, 0.5, 3, DiffMode::Analytic),
            Err(Error::NoClosedFormDerivative { .. })
        ));
    }

    #[test]
    fn telescoping_trivial_case() {
        // x = h0 = 0: both sides vanish identically.
        let pair = find_pair("f1g1").unwrap();
        let report = telescoping_check(&pair, 0.0, 0.0, 1, 5, 1e-10);
        assert!(report.pass);
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn telescoping_closed_form_case() {
        // Left side at x=π: Σ cos(kπ)/k² - Σ 1/k² for k=1..3 is -2 - 2/9.
        let pair = find_pair("f1g1").unwrap();
        let left: f64 = (1..=3)
            .map(|k| ((k as f64) * PI).cos() / (k as f64).powi(2) - 1.0 / (k as f64).powi(2))
            .sum();
        assert!((left - (-2.0 - 2.0 / 9.0)).abs() < 1e-12);
        let report = telescoping_check(&pair, PI, 0.0, 1, 3, 1e-10);
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn telescoping_across_catalog() {
        for pair in catalog() {
            let report = telescoping_check(&pair, 1.0, 0.0, 1, 10, 1e-10);
            assert!(report.pass, "{}: {report:?}", pair.id);
            let shifted = telescoping_check(&pair, 2.4, 0.5, 2, 7, 1e-10);
            assert!(shifted.pass, "{} shifted: {shifted:?}", pair.id);
        }
    }

    #[test]
    fn telescoping_invalid_range_fails() {
        let pair = find_pair("f1g1").unwrap();
        let report = telescoping_check(&pair, 1.0, 0.0, 5, 2, 1e-10);
        assert!(!report.pass);
    }
}
