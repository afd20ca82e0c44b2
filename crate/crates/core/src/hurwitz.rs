//! Hurwitz zeta `zeta(k, b) = sum_{j>=0} (j+b)^{-k}` continued to complex
//! `k != 1`, its exact closed form at non-positive integer arguments, and
//! generalized harmonic progressions `sum (j+b)^k` by two independent
//! continuations plus a brute-force oracle.

use num_complex::Complex;

use crate::bernoulli::{BernoulliTable, MAX_BERNOULLI_INDEX};
use crate::complexfn::{cpow, csch_sq, CompensatedSum};
use crate::integrands::{deficit_limit, deficit_tail_integral, power_cos_deficit};
use crate::powersum::reject_singular_exponent;
use crate::quadrature::{integrate_semi_infinite, EvalResult, QuadratureConfig};
use crate::scalar::{cx, r, Real};
use crate::{Error, Result};

/// Argument pair for Hurwitz-type evaluations: exponent `k` and offset `b`
/// restricted to the validated half-plane `re(b) > 0`.
#[derive(Clone, Copy, Debug)]
pub struct HurwitzParams<F: Real> {
    pub k: Complex<F>,
    pub b: Complex<F>,
}

impl<F: Real> HurwitzParams<F> {
    pub fn new(k: Complex<F>, b: Complex<F>) -> Result<Self> {
        if !(k.re.is_finite() && k.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::Domain(
                "hurwitz parameters must be finite complex numbers".to_string(),
            ));
        }
        if b.re <= F::zero() {
            return Err(Error::Domain(format!(
                "hurwitz offset needs re(b) > 0, got b = {} + {}i",
                b.re, b.im
            )));
        }
        Ok(HurwitzParams { k, b })
    }
}

/// `z^e` for unsigned integer `e` by repeated squaring; `powu(z, 0) = 1`.
fn powu<F: Real>(z: Complex<F>, mut e: u32) -> Complex<F> {
    let mut base = z;
    let mut acc = cx::<F>(1.0, 0.0);
    loop {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e == 0 {
            return acc;
        }
        base *= base;
    }
}

/// Exact-closed-form Hurwitz zeta at non-positive integers:
///
/// `zeta(-m, b) = -b^{m+1}/(m+1) + b^m/2
///   + 2 m! sum_{j=1}^{floor((m+1)/2)} (-1)^j zeta(2j) b^{m+1-2j}
///     / ((2 pi)^{2j} (m+1-2j)!)`
///
/// The sum is a polynomial in `b`, so any `b != 0` is accepted even though
/// only `re(b) > 0` is exercised against independent oracles. Each term
/// keeps `b^{m+1-2j}` whole rather than splitting it into `b^{m+1} *
/// (2 pi b)^{-2j}`, which would manufacture an overflow/underflow pair for
/// small `b`.
pub fn hurwitz_neg_int<F: Real>(m: u32, b: Complex<F>) -> Result<Complex<F>> {
    if !(b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::Domain("offset b must be finite".to_string()));
    }
    if b.re == F::zero() && b.im == F::zero() {
        return Err(Error::Domain("hurwitz_neg_int needs b != 0".to_string()));
    }
    let jmax = m.div_ceil(2);
    if 2 * jmax > MAX_BERNOULLI_INDEX {
        return Err(Error::Capacity(format!(
            "hurwitz_neg_int supports m <= {}, got {m}",
            MAX_BERNOULLI_INDEX
        )));
    }
    let table = BernoulliTable::new((2 * jmax).max(2))?;
    let two_pi = F::PI() + F::PI();
    let inv_tp_sq = (two_pi * two_pi).recip();
    // ratio_j tracks m! / (m+1-2j)!; the j = 0 seed 1/(m+1) cancels the
    // first update's (m+1) factor
    let mut ratio = r::<F>(f64::from(m) + 1.0).recip();
    let mut tp_pow = F::one();
    let mut sign = F::one();
    let mut acc = CompensatedSum::new();
    for j in 1..=jmax {
        ratio *= r::<F>(f64::from(m + 3 - 2 * j)) * r::<F>(f64::from(m + 2 - 2 * j));
        tp_pow *= inv_tp_sq;
        sign = -sign;
        let term = table.zeta_even::<F>(j)? * powu(b, m + 1 - 2 * j) * (sign * ratio * tp_pow);
        acc.add(term);
    }
    let mp1 = r::<F>(f64::from(m) + 1.0);
    let value = -powu(b, m + 1) / mp1 + powu(b, m) * r::<F>(0.5) + acc.value() * r::<F>(2.0);
    Ok(value)
}

/// Hurwitz zeta for every complex `k != 1` and `re(b) > 0`:
///
/// `zeta(k, b) = b^{1-k}/(k-1) + b^{-k}/2
///   + pi b^{2-k}/(k-1) * integral_0^inf csch^2(pi b t)
///     [1 - (1+t^2)^{(1-k)/2} cos((1-k) atan t)] dt`.
///
/// Reduces to the Riemann zeta at `b = 1` and to [`hurwitz_neg_int`] at
/// non-positive integer `k`.
pub fn hurwitz_global<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let p = HurwitzParams::new(k, b)?;
    hurwitz_body(p.k, p.b, cfg)
}

/// [`hurwitz_global`] with the `re(b) > 0` restriction lifted to
/// `re(b) != 0`, flipping the offset into the right half-plane and the sign
/// of the integral term with it. Diagnostic only: the left half-plane is
/// not validated against oracles here, and the underlying formula is known
/// not to hold for every such offset.
pub fn hurwitz_global_unvalidated<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    if !(k.re.is_finite() && k.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::Domain(
            "hurwitz parameters must be finite complex numbers".to_string(),
        ));
    }
    if b.re == F::zero() {
        return Err(Error::Domain(
            "hurwitz evaluation needs re(b) != 0: the csch^2 factor never decays \
             on the imaginary axis"
                .to_string(),
        ));
    }
    hurwitz_body(k, b, cfg)
}

fn hurwitz_body<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let one = cx::<F>(1.0, 0.0);
    if (k - one).norm() < r::<F>(1e-8) {
        return Err(Error::Pole(format!(
            "hurwitz zeta has its pole at k = 1 (got k = {} + {}i)",
            k.re, k.im
        )));
    }
    let sign = if b.re > F::zero() {
        F::one()
    } else {
        -F::one()
    };
    let b_eff = if b.re > F::zero() { b } else { -b };
    let km1 = k - one;
    let two = cx::<F>(2.0, 0.0);
    let scale = cpow(b, two - k)?;
    let int = deficit_tail_integral(one - k, b_eff, scale, cfg)?;
    let pref = Complex::new(sign * F::PI(), F::zero()) / km1;
    let value = cpow(b, one - k)? / km1 + cpow(b, -k)? * r::<F>(0.5) + int.value * pref;
    Ok(EvalResult {
        value,
        err_estimate: int.err_estimate * pref.norm(),
        ..int
    })
}

/// `sum_{j=start}^{n} (j+b)^k` by direct compensated summation, the oracle
/// for both harmonic-progression continuations. `start` selects between
/// the two index conventions in use: 1 for [`hp_sum_ac`], 0 for
/// [`hp_sum_hurwitz`].
pub fn hp_bruteforce<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    n: u32,
    start: u32,
) -> Result<Complex<F>> {
    if start > 1 {
        return Err(Error::Domain(format!(
            "hp_bruteforce start must be 0 or 1, got {start}"
        )));
    }
    if n < start {
        return Err(Error::Domain(format!(
            "hp_bruteforce needs n >= start, got n = {n}, start = {start}"
        )));
    }
    if !(k.re.is_finite() && k.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::Domain(
            "hp parameters must be finite complex numbers".to_string(),
        ));
    }
    let mut acc = CompensatedSum::new();
    for j in start..=n {
        let base = Complex::new(b.re + r::<F>(f64::from(j)), b.im);
        if base.re == F::zero() && base.im == F::zero() {
            return Err(Error::Domain(format!(
                "term j = {j} has j + b = 0; the progression is undefined there"
            )));
        }
        acc.add(cpow(base, k)?);
    }
    Ok(acc.value())
}

/// `integral_0^inf [c^{kappa+1} csch^2(pi c t) - b^{kappa+1} csch^2(pi b t)]
/// * [1 - (1+t^2)^{kappa/2} cos(kappa atan t)] dt` as one integrand.
///
/// The two csch^2 pieces individually behave like 1/t^2 at the origin;
/// only the combination with the deficit bracket is integrable, so they
/// are never split into separate quadratures.
fn hp_difference_integral<F: Real>(
    kappa: Complex<F>,
    b: Complex<F>,
    c: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let one = cx::<F>(1.0, 0.0);
    let scale_c = cpow(c, kappa + one)?;
    let scale_b = cpow(b, kappa + one)?;
    let tiny = r::<F>(1e-12);
    let limit = deficit_limit(kappa, c) * scale_c - deficit_limit(kappa, b) * scale_b;
    let pi_c = c * F::PI();
    let pi_b = b * F::PI();
    let f = move |t: F| {
        if t < tiny {
            return limit;
        }
        match (csch_sq(pi_c * t), csch_sq(pi_b * t)) {
            (Ok(wc), Ok(wb)) => (wc * scale_c - wb * scale_b) * power_cos_deficit(t, kappa),
            _ => Complex::new(F::nan(), F::nan()),
        }
    };
    // b is the slower of the two decays: re(c) = n + re(b) > re(b)
    let decay = (F::PI() + F::PI()) * b.re;
    let growth = kappa.re.max(F::zero());
    integrate_semi_infinite(f, decay, growth, cfg)
}

/// Analytic continuation of `sum_{j=1}^{n} (j+b)^k` for complex `k != -1`
/// and `re(b) > 0`, with `c = n + b`:
///
/// `[c^{k+1} - b^{k+1}]/(k+1) + [c^k - b^k]/2
///   + pi/(k+1) * [difference integral with kappa = k+1]`.
pub fn hp_sum_ac<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    n: u32,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let p = HurwitzParams::new(k, b)?;
    reject_singular_exponent(p.k)?;
    if n == 0 {
        return Err(Error::Domain("hp_sum_ac needs n >= 1".to_string()));
    }
    let one = cx::<F>(1.0, 0.0);
    let kp1 = p.k + one;
    let c = Complex::new(p.b.re + r::<F>(f64::from(n)), p.b.im);
    let int = hp_difference_integral(kp1, p.b, c, cfg)?;
    let pref = Complex::new(F::PI(), F::zero()) / kp1;
    let value = (cpow(c, kp1)? - cpow(p.b, kp1)?) / kp1
        + (cpow(c, p.k)? - cpow(p.b, p.k)?) * r::<F>(0.5)
        + int.value * pref;
    Ok(EvalResult {
        value,
        err_estimate: int.err_estimate * pref.norm(),
        ..int
    })
}

/// The same progression through the Hurwitz zeta, summing from `j = 0`:
///
/// `sum_{j=0}^{n} (j+b)^k = c^{k+1}/(k+1) + c^k/2 + zeta(-k, b)
///   + pi c^{k+2}/(k+1) * integral_0^inf csch^2(pi c t)
///     [1 - (1+t^2)^{(k+1)/2} cos((k+1) atan t)] dt`,  `c = n + b`.
///
/// Arithmetically independent of [`hp_sum_ac`]: the offset enters through
/// `zeta(-k, b)` instead of a second csch^2 term, so agreement between the
/// two (after accounting for the `j = 0` term) cross-checks both.
pub fn hp_sum_hurwitz<F: Real>(
    k: Complex<F>,
    b: Complex<F>,
    n: u32,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let p = HurwitzParams::new(k, b)?;
    reject_singular_exponent(p.k)?;
    let one = cx::<F>(1.0, 0.0);
    let kp1 = p.k + one;
    let c = Complex::new(p.b.re + r::<F>(f64::from(n)), p.b.im);
    let hz = hurwitz_global(-p.k, p.b, cfg)?;
    let scale = cpow(c, kp1 + one)?;
    let int = deficit_tail_integral(kp1, c, scale, cfg)?;
    let pref = Complex::new(F::PI(), F::zero()) / kp1;
    let value = cpow(c, kp1)? / kp1 + cpow(c, p.k)? * r::<F>(0.5) + hz.value + int.value * pref;
    Ok(EvalResult {
        value,
        err_estimate: hz.err_estimate + int.err_estimate * pref.norm(),
        evals_used: hz.evals_used + int.evals_used,
        truncation_point: int.truncation_point,
        converged: hz.converged && int.converged,
    })
}
