//! Exact coefficients of the even zeta values.
//!
//! ζ(2l) is a rational multiple of π^{2l}; this module computes that
//! rational by four independent routes — a WZ-derived recurrence, Euler's
//! Bernoulli-number formula, and two classical recurrences of Srivastava —
//! together with the Bernoulli numbers, Bernoulli polynomials, and the
//! half-argument identity B_{2k}(1/2) = (2^{1-2k} - 1)·B_{2k}.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, fixed_point_string, pi_scaled, DecimalString, Rational};
use crate::report::VerificationReport;

/// The pair (l, q) with ζ(2l) = q·π^{2l} exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaCoefficient {
    pub l: u32,
    pub q: Rational,
}

/// Exact Bernoulli numbers B_0..B_max under the convention B_1 = -1/2
/// (so that B_n(0) = B_n for the polynomials below).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn get(&self, index: u32) -> Option<&Rational> {
        self.values.get(index as usize)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// An evaluated Bernoulli polynomial: B_n at a rational argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliPolyValue {
    pub n: u32,
    pub x: Rational,
    pub value: Rational,
}

/// Exact B_0..B_max_index from the defining recurrence
/// Σ_{j=0}^{m} C(m+1, j)·B_j = 0, solved for B_m at each m ≥ 1.
pub fn bernoulli_table(max_index: u32) -> BernoulliTable {
    let mut values = Vec::with_capacity(max_index as usize + 1);
    values.push(Rational::one());
    for m in 1..=u64::from(max_index) {
        let mut acc = Rational::zero();
        for (j, b) in values.iter().enumerate() {
            acc = acc + Rational::from(binomial(m + 1, j as i64)) * b;
        }
        let b_m = -acc.checked_div(&Rational::from_integer(m + 1)).unwrap();
        values.push(b_m);
    }
    BernoulliTable { values }
}

/// Exact B_n(x) = Σ_{k=0}^{n} C(n,k)·B_k·x^{n-k}.
pub fn bernoulli_poly(n: u32, x: &Rational) -> BernoulliPolyValue {
    let table = bernoulli_table(n);
    let mut value = Rational::zero();
    for k in 0..=n {
        let term = Rational::from(binomial(u64::from(n), i64::from(k)))
            * table.get(k).unwrap()
            * x.pow((n - k) as i32).unwrap();
        value = value + term;
    }
    BernoulliPolyValue {
        n,
        x: x.clone(),
        value,
    }
}

/// Checks B_{2k}(1/2) = (2^{1-2k} - 1)·B_{2k} exactly for k = 1..k_max.
///
/// Every case must match exactly; any nonzero difference is recorded as a
/// residual and fails the report (tolerance zero).
pub fn verify_half_identity(k_max: u32) -> VerificationReport {
    let table = bernoulli_table(2 * k_max);
    let half = Rational::new(1, 2).unwrap();
    let mut report = VerificationReport::new("bernoulli-half-identity", 0.0);
    for k in 1..=k_max {
        let lhs = bernoulli_poly(2 * k, &half).value;
        let factor = pow2(1 - 2 * i64::from(k)) - Rational::one();
        let rhs = factor * table.get(2 * k).unwrap();
        let diff = &lhs - &rhs;
        let residual = if diff.is_zero() {
            0.0
        } else {
            diff.to_f64().abs()
        };
        report.push(format!("k={k}"), residual);
    }
    report
}

/// Euler's route: q = 2^{2l-1}·(-1)^{l-1}·B_{2l}/(2l)!.
pub fn zeta_even_euler(l: u32, table: &BernoulliTable) -> Result<ZetaCoefficient> {
    if table.max_index() < 2 * l {
        return Err(Error::TableTooSmall {
            need: 2 * l,
            have: table.max_index(),
        });
    }
    let q = pow2(2 * i64::from(l) - 1) * sign(l - 1) * table.get(2 * l).unwrap()
        / Rational::from(factorial(2 * l));
    Ok(ZetaCoefficient { l, q })
}

/// The WZ-derived recurrence route:
///
/// q_l = (2^{2l-1}/(1-2^{2l})) · { [(-1)^{l+1}/(4l) + (-1)^l/2] / (2l-1)!
///        + Σ_{j=1}^{l-1} (-1)^{l-j}/(2(l-j))! · q_j }
///
/// with the empty sum conventionally zero at l = 1.
pub fn zeta_even_recurrence(l: u32, priors: &[ZetaCoefficient]) -> Result<ZetaCoefficient> {
    check_priors(l, priors)?;
    let l_i = i64::from(l);
    let lead = (sign(l + 1) / Rational::from(4 * l_i) + sign(l) / Rational::from(2))
        / Rational::from(factorial(2 * l - 1));
    let mut brace = lead;
    for prior in &priors[..(l as usize - 1)] {
        let j = prior.l;
        let term = sign(l - j) / Rational::from(factorial(2 * (l - j))) * &prior.q;
        brace = brace + term;
    }
    let prefactor = pow2(2 * l_i - 1).checked_div(&(Rational::one() - pow2(2 * l_i)))?;
    Ok(ZetaCoefficient {
        l,
        q: prefactor * brace,
    })
}

/// First Srivastava recurrence, reduced symbolically in powers of π:
///
/// ζ(2n) = (-1)^{n-1} (2π)^{2n-1}/((2n)!(2^{2n-1}-1)) ·
///         [ π/(2(2n+1)) + Σ_{j=1}^{n-1} (-1)^j C(2n,2j-1)
///           (2j-1)!(2^{2j-1}-1)/(2π)^{2j-1} · ζ(2j) ]
pub fn zeta_even_srivastava_a(n: u32, priors: &[ZetaCoefficient]) -> Result<ZetaCoefficient> {
    check_priors(n, priors)?;
    let n_i = i64::from(n);
    let prefactor = PiTerm {
        coeff: sign(n - 1)
            * pow2(2 * n_i - 1).checked_div(
                &(Rational::from(factorial(2 * n)) * (pow2(2 * n_i - 1) - Rational::one())),
            )?,
        pi_exp: 2 * n_i - 1,
    };
    let mut bracket = PiTerm {
        coeff: Rational::new(1, 2 * (2 * n_i + 1))?,
        pi_exp: 1,
    };
    for prior in &priors[..(n as usize - 1)] {
        bracket = bracket.add(&srivastava_sum_term(2 * u64::from(n), prior))?;
    }
    prefactor.mul(&bracket).into_coefficient(n)
}

/// Second Srivastava recurrence; same reduction, bracket led by π/(4n):
///
/// ζ(2n) = (-1)^{n-1} (2π)^{2n-1}/((2n-1)!(2^{2n}-1)) ·
///         [ π/(4n) + Σ_{j=1}^{n-1} (-1)^j C(2n-1,2j-1)
///           (2j-1)!(2^{2j-1}-1)/(2π)^{2j-1} · ζ(2j) ]
pub fn zeta_even_srivastava_b(n: u32, priors: &[ZetaCoefficient]) -> Result<ZetaCoefficient> {
    check_priors(n, priors)?;
    let n_i = i64::from(n);
    let prefactor = PiTerm {
        coeff: sign(n - 1)
            * pow2(2 * n_i - 1).checked_div(
                &(Rational::from(factorial(2 * n - 1)) * (pow2(2 * n_i) - Rational::one())),
            )?,
        pi_exp: 2 * n_i - 1,
    };
    let mut bracket = PiTerm {
        coeff: Rational::new(1, 4 * n_i)?,
        pi_exp: 1,
    };
    for prior in &priors[..(n as usize - 1)] {
        bracket = bracket.add(&srivastava_sum_term(2 * u64::from(n) - 1, prior))?;
    }
    prefactor.mul(&bracket).into_coefficient(n)
}

/// Shared inner term (-1)^j C(top, 2j-1)(2j-1)!(2^{2j-1}-1)/(2π)^{2j-1}·q_j π^{2j};
/// the π exponents cancel to one.
fn srivastava_sum_term(top: u64, prior: &ZetaCoefficient) -> PiTerm {
    let j = i64::from(prior.l);
    let coeff = sign(prior.l)
        * Rational::from(binomial(top, 2 * j - 1))
        * Rational::from(factorial(2 * prior.l - 1))
        * (pow2(2 * j - 1) - Rational::one())
        * pow2(1 - 2 * j)
        * &prior.q;
    PiTerm { coeff, pi_exp: 1 }
}

/// The four exact routes, for cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Recurrence,
    Euler,
    SrivastavaA,
    SrivastavaB,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Recurrence,
        Route::Euler,
        Route::SrivastavaA,
        Route::SrivastavaB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Euler => "euler",
            Route::SrivastavaA => "srivastava-a",
            Route::SrivastavaB => "srivastava-b",
        }
    }
}

/// q_1..q_max_l by the chosen route, feeding each recurrence its own priors.
pub fn zeta_even_sequence(route: Route, max_l: u32) -> Vec<ZetaCoefficient> {
    let mut out: Vec<ZetaCoefficient> = Vec::with_capacity(max_l as usize);
    let table = match route {
        Route::Euler => Some(bernoulli_table(2 * max_l)),
        _ => None,
    };
    for l in 1..=max_l {
        let next = match route {
            Route::Recurrence => zeta_even_recurrence(l, &out),
            Route::Euler => zeta_even_euler(l, table.as_ref().unwrap()),
            Route::SrivastavaA => zeta_even_srivastava_a(l, &out),
            Route::SrivastavaB => zeta_even_srivastava_b(l, &out),
        }
        .expect("sequence construction supplies complete priors");
        out.push(next);
    }
    out
}

const RENDER_MAX_PRECISION: usize = 1000;
const RENDER_GUARD_DIGITS: usize = 10;

/// Decimal expansion of q·π^{2l} truncated to `precision` fractional digits.
pub fn render_zeta(coeff: &ZetaCoefficient, precision: usize) -> Result<DecimalString> {
    if !(1..=RENDER_MAX_PRECISION).contains(&precision) {
        return Err(Error::PrecisionOutOfRange {
            got: precision,
            min: 1,
            max: RENDER_MAX_PRECISION,
        });
    }
    let scale = precision + RENDER_GUARD_DIGITS;
    let pi = pi_scaled(scale);
    let exp = 2 * coeff.l;
    // floor( num·P^{2l}·10^p / (den·10^{2l·scale}) ) with P ≈ π·10^scale.
    let numer = coeff.q.numer() * pi.pow(exp) * BigInt::from(10u32).pow(precision as u32);
    let denom = coeff.q.denom() * BigInt::from(10u32).pow(exp * scale as u32);
    Ok(fixed_point_string(&(numer / denom), precision))
}

fn check_priors(l: u32, priors: &[ZetaCoefficient]) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidArgument("l must be positive".into()));
    }
    for j in 1..l {
        match priors.get(j as usize - 1) {
            Some(c) if c.l == j => {}
            _ => {
                return Err(Error::MissingPrior {
                    missing: j,
                    have: priors.len(),
                })
            }
        }
    }
    Ok(())
}

/// (-1)^k as an exact rational.
fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// 2^e for any integer e.
fn pow2(e: i64) -> Rational {
    let p = BigInt::from(2u32).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from(p)
    } else {
        Rational::new(BigInt::one(), p).unwrap()
    }
}

/// A rational coefficient attached to an integer power of π. Sums are only
/// defined between like powers, so a mismatched reduction cannot slip
/// through silently.
#[derive(Debug, Clone)]
struct PiTerm {
    coeff: Rational,
    pi_exp: i64,
}

impl PiTerm {
    fn add(&self, other: &PiTerm) -> Result<PiTerm> {
        if self.pi_exp != other.pi_exp {
            return Err(Error::InvalidArgument(format!(
                "cannot add pi^{} term to pi^{} term",
                other.pi_exp, self.pi_exp
            )));
        }
        Ok(PiTerm {
            coeff: &self.coeff + &other.coeff,
            pi_exp: self.pi_exp,
        })
    }

    fn mul(&self, other: &PiTerm) -> PiTerm {
        PiTerm {
            coeff: &self.coeff * &other.coeff,
            pi_exp: self.pi_exp + other.pi_exp,
        }
    }

    fn into_coefficient(self, l: u32) -> Result<ZetaCoefficient> {
        if self.pi_exp != 2 * i64::from(l) {
            return Err(Error::InvalidArgument(format!(
                "reduction left pi^{}, expected pi^{}",
                self.pi_exp,
                2 * l
            )));
        }
        Ok(ZetaCoefficient { l, q: self.coeff })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_table_smallest() {
        let t = bernoulli_table(0);
        assert_eq!(t.values(), &[Rational::one()]);
        assert_eq!(t.max_index(), 0);
    }

    #[test]
    fn bernoulli_first_values() {
        let t = bernoulli_table(12);
        assert_eq!(t.get(0).unwrap(), &Rational::one());
        assert_eq!(t.get(1).unwrap(), &rat(-1, 2).unwrap());
        assert_eq!(t.get(2).unwrap(), &rat(1, 6).unwrap());
        assert_eq!(t.get(4).unwrap(), &rat(-1, 30).unwrap());
        assert_eq!(t.get(6).unwrap(), &rat(1, 42).unwrap());
        assert_eq!(t.get(12).unwrap(), &rat(-691, 2730).unwrap());
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        let t = bernoulli_table(51);
        for k in 1..=25u32 {
            assert!(t.get(2 * k + 1).unwrap().is_zero(), "B_{} != 0", 2 * k + 1);
        }
    }

    #[test]
    fn bernoulli_even_sign_alternates() {
        let t = bernoulli_table(100);
        for k in 1..=50u32 {
            let b = t.get(2 * k).unwrap();
            assert_eq!(b.is_positive(), k % 2 == 1, "sign of B_{}", 2 * k);
        }
    }

    #[test]
    fn poly_at_zero_reproduces_numbers() {
        let t = bernoulli_table(20);
        for n in 0..=20u32 {
            assert_eq!(
                &bernoulli_poly(n, &Rational::zero()).value,
                t.get(n).unwrap()
            );
        }
    }

    #[test]
    fn poly_examples() {
        let half = rat(1, 2).unwrap();
        assert_eq!(
            bernoulli_poly(2, &Rational::zero()).value,
            rat(1, 6).unwrap()
        );
        // x^2 - x + 1/6 at 1/2.
        assert_eq!(bernoulli_poly(2, &half).value, rat(-1, 12).unwrap());
        // x^4 - 2x^3 + x^2 - 1/30 at 1/2.
        assert_eq!(bernoulli_poly(4, &half).value, rat(7, 240).unwrap());
    }

    #[test]
    fn half_identity_exact_to_fifty() {
        let report = verify_half_identity(50);
        assert!(report.pass);
        assert_eq!(report.cases.len(), 50);
        assert_eq!(report.max_residual, 0.0);
    }

    #[test]
    fn euler_route_headline_values() {
        let t = bernoulli_table(10);
        assert_eq!(zeta_even_euler(1, &t).unwrap().q, rat(1, 6).unwrap());
        assert_eq!(zeta_even_euler(2, &t).unwrap().q, rat(1, 90).unwrap());
        assert_eq!(zeta_even_euler(3, &t).unwrap().q, rat(1, 945).unwrap());
    }

    #[test]
    fn euler_route_table_too_small() {
        let t = bernoulli_table(4);
        assert!(matches!(
            zeta_even_euler(3, &t),
            Err(Error::TableTooSmall { need: 6, have: 4 })
        ));
    }

    #[test]
    fn recurrence_route_headline_values() {
        let q1 = zeta_even_recurrence(1, &[]).unwrap();
        assert_eq!(q1.q, rat(1, 6).unwrap());
        let q2 = zeta_even_recurrence(2, std::slice::from_ref(&q1)).unwrap();
        assert_eq!(q2.q, rat(1, 90).unwrap());
        let q3 = zeta_even_recurrence(3, &[q1, q2]).unwrap();
        assert_eq!(q3.q, rat(1, 945).unwrap());
    }

    #[test]
    fn recurrence_missing_prior_rejected() {
        assert!(matches!(
            zeta_even_recurrence(3, &[]),
            Err(Error::MissingPrior {
                missing: 1,
                have: 0
            })
        ));
    }

    #[test]
    fn srivastava_routes_first_values() {
        let a = zeta_even_sequence(Route::SrivastavaA, 5);
        assert_eq!(a[0].q, rat(1, 6).unwrap());
        assert_eq!(a[1].q, rat(1, 90).unwrap());
        let b = zeta_even_sequence(Route::SrivastavaB, 10);
        assert_eq!(b[0].q, rat(1, 6).unwrap());
        assert_eq!(b[1].q, rat(1, 90).unwrap());
        let euler = zeta_even_sequence(Route::Euler, 10);
        assert_eq!(a[4], euler[4]);
        assert_eq!(b[9], euler[9]);
    }

    #[test]
    fn four_routes_agree_to_twelve() {
        let max_l = 12;
        let reference = zeta_even_sequence(Route::Recurrence, max_l);
        for route in [Route::Euler, Route::SrivastavaA, Route::SrivastavaB] {
            assert_eq!(zeta_even_sequence(route, max_l), reference, "{route:?}");
        }
    }

    #[test]
    fn coefficients_positive_and_decreasing() {
        let seq = zeta_even_sequence(Route::Recurrence, 50);
        for w in seq.windows(2) {
            assert!(w[0].q.is_positive());
            assert!(w[0].q > w[1].q, "q_{} <= q_{}", w[0].l, w[1].l);
        }
        assert!(seq.last().unwrap().q.is_positive());
    }

    #[test]
    fn render_known_decimals() {
        let q1 = ZetaCoefficient {
            l: 1,
            q: rat(1, 6).unwrap(),
        };
        let q2 = ZetaCoefficient {
            l: 2,
            q: rat(1, 90).unwrap(),
        };
        assert_eq!(render_zeta(&q1, 6).unwrap().digits, "1.644934");
        assert_eq!(render_zeta(&q2, 6).unwrap().digits, "1.082323");
        assert_eq!(render_zeta(&q1, 1).unwrap().digits, "1.6");
    }

    #[test]
    fn render_precision_range() {
        let q1 = ZetaCoefficient {
            l: 1,
            q: rat(1, 6).unwrap(),
        };
        assert!(render_zeta(&q1, 0).is_err());
        assert!(render_zeta(&q1, 1001).is_err());
        assert!(render_zeta(&q1, 1000).is_ok());
    }
}
