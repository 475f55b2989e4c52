//! Numeric verification lab: Dirichlet-kernel integrals and identities,
//! the Cauchy formula for repeated integration, the repeated-integral
//! operator and its linearity, the kernel decomposition of partial cosine
//! sums, and the alternating-series relation tying them to ζ(2l).

mod quad;

pub use quad::{adaptive_quad, QuadratureResult, DEFAULT_QUAD_TOL};

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::exact::{factorial, pi_digits, Rational};
use crate::report::VerificationReport;
use crate::zeta::ZetaCoefficient;

/// x^s · sin((2n+1)t/2) / sin(t/2) with the removable singularity at the
/// origin patched by a stored continuity value, never by shrinking the
/// interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelIntegrand {
    pub n: u32,
    pub s: f64,
}

impl KernelIntegrand {
    pub fn new(n: u32, s: f64) -> Self {
        KernelIntegrand { n, s }
    }

    /// Continuity value where sin(t/2) vanishes: 2n+1 for the bare kernel,
    /// 2 for the weight-one monotone factor, 0 for stronger weights.
    pub fn value_at_origin(&self) -> f64 {
        if self.s == 0.0 {
            f64::from(2 * self.n + 1)
        } else if self.s == 1.0 {
            2.0
        } else {
            0.0
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let half_sin = (0.5 * t).sin();
        if half_sin == 0.0 {
            return self.value_at_origin();
        }
        let weight = if self.s == 0.0 { 1.0 } else { t.powf(self.s) };
        weight * (f64::from(2 * self.n + 1) * 0.5 * t).sin() / half_sin
    }
}

/// Partial cosine sum Σ_{k=1}^{n} cos(kx)/k^l, summed directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSum {
    pub n: u32,
    pub l: u32,
    pub x: f64,
    pub value: f64,
}

pub fn partial_sum(n: u32, l: u32, x: f64) -> PartialSum {
    let mut value = 0.0;
    for k in 1..=n {
        value += (f64::from(k) * x).cos() / f64::from(k).powi(l as i32);
    }
    PartialSum { n, l, x, value }
}

/// Residual of the closed form Σ_{k=1}^{n} cos(kx) = -1/2 + sin((2n+1)x/2)/(2 sin(x/2)).
///
/// At (or within a few ulps of) a multiple of 2π the right side is taken
/// as its continuity limit n.
pub fn kernel_identity_residual(n: u32, x: f64) -> f64 {
    let mut lhs = 0.0;
    for k in 1..=n {
        lhs += (f64::from(k) * x).cos();
    }
    let rhs = if near_multiple_of_tau(x) {
        f64::from(n)
    } else {
        -0.5 + (f64::from(2 * n + 1) * 0.5 * x).sin() / (2.0 * (0.5 * x).sin())
    };
    (lhs - rhs).abs()
}

fn near_multiple_of_tau(x: f64) -> bool {
    let nearest = (x / TAU).round() * TAU;
    (x - nearest).abs() < 1e-12
}

/// ∫_0^π sin((2n+1)x/2)/sin(x/2) dx, which is constantly π.
pub fn kernel_integral(n: u32, tol: f64) -> Result<QuadratureResult> {
    let kernel = KernelIntegrand::new(n, 0.0);
    adaptive_quad(|t| kernel.eval(t), 0.0, PI, tol)
}

/// ∫_0^π x^s·sin((2n+1)x/2)/sin(x/2) dx for s ≥ 1, together with the
/// second-mean-value bound 2^{s+2}·(π/2)^s/(2n+1) that forces it to zero
/// as n grows.
pub fn weighted_kernel_integral(s: f64, n: u32, tol: f64) -> Result<(QuadratureResult, f64)> {
    if s < 1.0 || s.is_nan() {
        return Err(Error::InvalidArgument(format!(
            "power weight must satisfy s >= 1, got {s}"
        )));
    }
    let kernel = KernelIntegrand::new(n, s);
    let value = adaptive_quad(|t| kernel.eval(t), 0.0, PI, tol)?;
    let bound = 2f64.powf(s + 2.0) * (PI / 2.0).powf(s) / f64::from(2 * n + 1);
    Ok((value, bound))
}

/// Residual between the two sides of the repeated-integration formula for
/// f(t) = t^m from 0: the k-fold iterated integral in closed form
/// x^{m+k}·m!/(m+k)! against the single kernel-weighted integral
/// (1/Γ(k)) ∫_0^x (x-t)^{k-1} t^m dt evaluated by quadrature.
pub fn cauchy_repeated_check(m: u32, k: u32, x: f64, tol: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::InvalidArgument("fold count k must be >= 1".into()));
    }
    let iterated = x.powi((m + k) as i32)
        * Rational::new(factorial(m), factorial(m + k))
            .unwrap()
            .to_f64();
    let single = repeated_integral_op(|t| t.powi(m as i32), k, x, quad_share(tol))?;
    Ok((iterated - single).abs())
}

/// The repeated-integral operator: j = 0 is the identity, j ≥ 1 is
/// (1/Γ(j)) ∫_0^x (x-t)^{j-1} f(t) dt by quadrature.
pub fn repeated_integral_op<F: Fn(f64) -> f64>(f: F, j: u32, x: f64, tol: f64) -> Result<f64> {
    if j == 0 {
        return Ok(f(x));
    }
    let gamma_j = Rational::from(factorial(j - 1)).to_f64();
    let result = adaptive_quad(|t| (x - t).powi(j as i32 - 1) * f(t), 0.0, x, tol)?;
    Ok(result.value / gamma_j)
}

/// Additivity and homogeneity of the repeated-integral operator on fixed
/// test integrands (t², cos t, and the constant 3), within ten times the
/// quadrature tolerance.
pub fn linearity_check(j: u32, x: f64) -> VerificationReport {
    let tol = DEFAULT_QUAD_TOL;
    let mut report = VerificationReport::new("repeated-integral-linearity", 10.0 * tol);
    let square = |t: f64| t * t;
    let both = |t: f64| t * t + t.cos();
    let scaled = |t: f64| 3.0 * t.cos();

    let additivity = (|| -> Result<f64> {
        let combined = repeated_integral_op(both, j, x, tol)?;
        let separate =
            repeated_integral_op(square, j, x, tol)? + repeated_integral_op(f64::cos, j, x, tol)?;
        Ok((combined - separate).abs())
    })();
    push_case(&mut report, format!("additivity j={j} x={x}"), additivity);

    let homogeneity = (|| -> Result<f64> {
        let combined = repeated_integral_op(scaled, j, x, tol)?;
        let separate = 3.0 * repeated_integral_op(f64::cos, j, x, tol)?;
        Ok((combined - separate).abs())
    })();
    push_case(
        &mut report,
        format!("homogeneity c=3 j={j} x={x}"),
        homogeneity,
    );

    report
}

/// The two telescoped sum-integral identities behind the kernel
/// decomposition, each right side by quadrature:
///
///   Σ cos(kx)/k² - Σ 1/k²  =  ∫_0^x Σ_{j<=n} -sin(jt)/j dt
///   Σ -sin(kx)/k           =  ∫_0^x { 1/2 - sin((2n+1)t/2)/(2 sin(t/2)) } dt
pub fn sum_integral_identity_check(n: u32, x: f64, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new("sum-integral-identities", tol);
    let quad_tol = quad_share(tol);

    let order2 = (|| -> Result<f64> {
        let lhs = partial_sum(n, 2, x).value - partial_sum(n, 2, 0.0).value;
        let integrand = |t: f64| -> f64 {
            (1..=n)
                .map(|j| -(f64::from(j) * t).sin() / f64::from(j))
                .sum()
        };
        let rhs = adaptive_quad(integrand, 0.0, x, quad_tol)?;
        Ok((lhs - rhs.value).abs())
    })();
    push_case(&mut report, format!("cosine-order-2 n={n} x={x}"), order2);

    let order1 = (|| -> Result<f64> {
        let lhs: f64 = (1..=n)
            .map(|k| -(f64::from(k) * x).sin() / f64::from(k))
            .sum();
        let kernel = KernelIntegrand::new(n, 0.0);
        let rhs = adaptive_quad(|t| 0.5 - 0.5 * kernel.eval(t), 0.0, x, quad_tol)?;
        Ok((lhs - rhs.value).abs())
    })();
    push_case(&mut report, format!("sine-order-1 n={n} x={x}"), order1);

    report
}

/// Residual of the kernel decomposition of the partial cosine sum,
///
///   H(x) = (-1)^l I_{2l}(f)(x) + Σ_{j=1}^{l} (-1)^{l-j} I_{2(l-j)}(H_j)(x)
///
/// where H(x) = Σ cos(kx)/k^{2l}, f(t) = -1/2 + sin((2n+1)t/2)/(2 sin(t/2)),
/// and each H_j inside the sum is the constant Σ 1/k^{2j}. Every operator
/// is one quadrature layer; the sums are evaluated directly.
pub fn kernel_decomposition_check(l: u32, n: u32, x: f64, tol: f64) -> Result<f64> {
    if l < 1 || n < 1 {
        return Err(Error::InvalidArgument("l and n must be >= 1".into()));
    }
    let quad_tol = quad_share(tol);
    let lhs = partial_sum(n, 2 * l, x).value;

    let kernel = KernelIntegrand::new(n, 0.0);
    let f = |t: f64| -0.5 + 0.5 * kernel.eval(t);
    let mut rhs = parity(l) * repeated_integral_op(f, 2 * l, x, quad_tol)?;
    for j in 1..=l {
        let constant = partial_sum(n, 2 * j, 0.0).value;
        let term = repeated_integral_op(|_| constant, 2 * (l - j), x, quad_tol)?;
        rhs += parity(l - j) * term;
    }
    Ok((lhs - rhs).abs())
}

/// Residual of the alternating-series relation
///
///   Σ_{k<=N} (-1)^k/k^{2l} - Σ_{k<=N} 1/k^{2l}  ≈  (-2 + 2^{1-2l})·ζ(2l)
///
/// with ζ(2l) = q·π^{2l} evaluated in machine reals from the supplied
/// coefficient and `pi_precision` decimal digits of π. The residual decays
/// at the partial-sum truncation rate ~N^{1-2l}.
pub fn alternating_relation_check(
    l: u32,
    terms: u64,
    zeta: &ZetaCoefficient,
    pi_precision: usize,
) -> Result<f64> {
    if zeta.l != l {
        return Err(Error::InvalidArgument(format!(
            "coefficient is for l={}, expected l={l}",
            zeta.l
        )));
    }
    if terms < 2 {
        return Err(Error::InvalidArgument("need at least two terms".into()));
    }
    let pi = pi_digits(pi_precision)?.to_f64();
    let zeta_value = zeta.q.to_f64() * pi.powi(2 * l as i32);
    let exponent = 2 * l as i32;
    let mut alternating = 0.0;
    let mut plain = 0.0;
    for k in 1..=terms {
        let term = (k as f64).powi(-exponent);
        plain += term;
        alternating += if k % 2 == 0 { term } else { -term };
    }
    let rhs = (-2.0 + 2f64.powi(1 - exponent)) * zeta_value;
    Ok((alternating - plain - rhs).abs())
}

fn parity(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Quadrature budget for a check that must land within `tol` overall.
fn quad_share(tol: f64) -> f64 {
    (tol * 1e-2).clamp(1e-14, DEFAULT_QUAD_TOL)
}

fn push_case(report: &mut VerificationReport, inputs: String, outcome: Result<f64>) {
    match outcome {
        Ok(residual) => report.push(inputs, residual),
        Err(err) => report.push(format!("{inputs} [{err}]"), f64::INFINITY),
    }
}
