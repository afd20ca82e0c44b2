//! Finite power sums `sum_{j=1}^{n} j^k`: brute force, exact Bernoulli
//! closed forms for odd integer exponents, the exponentially small
//! even-zeta tail in three interchangeable forms, and two arithmetically
//! independent analytic continuations to arbitrary complex `k`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::bernoulli::{big_factorial, BernoulliTable};
use crate::complexfn::{csch_sq, pos_pow, CompensatedSum};
use crate::gamma::log_gamma;
use crate::integrands::{deficit_limit, deficit_tail_integral, power_cos_deficit_trig};
use crate::quadrature::{integrate_finite, integrate_semi_infinite, EvalResult, QuadratureConfig};
use crate::scalar::{cx, r, Real};
use crate::zeta::zeta_global;
use crate::{Error, Result};

/// Parameter bundle for a power-sum or harmonic-progression series:
/// exponent `k`, term count `n`, offset `b` (zero for plain power sums).
#[derive(Clone, Copy, Debug)]
pub struct SeriesParams<F: Real> {
    pub k: Complex<F>,
    pub n: u32,
    pub b: Complex<F>,
}

impl<F: Real> SeriesParams<F> {
    /// Rejects non-finite parameters and empty series up front; domain
    /// conditions specific to an evaluator (re(b) > 0, k != -1) stay with
    /// the evaluator.
    pub fn new(k: Complex<F>, n: u32, b: Complex<F>) -> Result<Self> {
        if !(k.re.is_finite() && k.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::Domain(
                "series parameters must be finite complex numbers".to_string(),
            ));
        }
        if n == 0 {
            return Err(Error::Domain("series parameters need n >= 1".to_string()));
        }
        Ok(SeriesParams { k, n, b })
    }
}

/// The continuation formulas divide by k + 1; inside this ball of the
/// singular point they are rejected rather than evaluated into noise.
pub(crate) fn reject_singular_exponent<F: Real>(k: Complex<F>) -> Result<()> {
    if (k + cx::<F>(1.0, 0.0)).norm() < r::<F>(1e-8) {
        return Err(Error::SingularParameter(format!(
            "the continuation is singular at k = -1 (got k = {} + {}i; the harmonic \
             case needs a different representation entirely)",
            k.re, k.im
        )));
    }
    Ok(())
}

/// `sum_{j=1}^{n} j^k` by direct compensated summation. The empty sum
/// (n = 0) is 0. This is the oracle the continuations are judged against,
/// hence the compensation: its error must sit well below theirs.
pub fn powersum_bruteforce<F: Real>(k: Complex<F>, n: u32) -> Complex<F> {
    let mut acc = CompensatedSum::new();
    for j in 1..=n {
        acc.add(pos_pow(r::<F>(f64::from(j)), k));
    }
    acc.value()
}

/// Exact rational `sum_{j=1}^{n} j^m` for odd `m >= 1` from the even
/// Bernoulli numbers:
/// `n^m/2 + m! sum_{j=0}^{(m-1)/2} B_{2j} n^{m+1-2j} / ((2j)! (m+1-2j)!)`.
///
/// Odd exponents need no odd Bernoulli numbers beyond the `n^m/2` term,
/// which is why this form exists at all; even `m` is a domain error.
pub fn faulhaber_bernoulli_odd_exact(m: u32, n: u32) -> Result<BigRational> {
    if m % 2 == 0 {
        return Err(Error::Domain(format!(
            "faulhaber_bernoulli_odd needs odd m >= 1, got {m}"
        )));
    }
    if m - 1 > crate::bernoulli::MAX_BERNOULLI_INDEX {
        return Err(Error::Capacity(format!(
            "faulhaber_bernoulli_odd supports m <= {}, got {m}",
            crate::bernoulli::MAX_BERNOULLI_INDEX + 1
        )));
    }
    let table = BernoulliTable::new((m - 1).max(2))?;
    let nb = BigInt::from(n);
    let m_fact = big_factorial(m);
    let mut sum = BigRational::new(nb.pow(m), BigInt::from(2));
    for j in 0..=((m - 1) / 2) {
        let b2j = table.bernoulli(2 * j)?;
        let num = &m_fact * nb.pow(m + 1 - 2 * j);
        let den = big_factorial(2 * j) * big_factorial(m + 1 - 2 * j);
        sum += b2j * BigRational::new(num, den);
    }
    Ok(sum)
}

/// [`faulhaber_bernoulli_odd_exact`] rounded into the working scalar.
pub fn faulhaber_bernoulli_odd<F: Real>(m: u32, n: u32) -> Result<Complex<F>> {
    let q = faulhaber_bernoulli_odd_exact(m, n)?;
    let v = q.to_f64().unwrap_or(f64::INFINITY);
    if !v.is_finite() {
        return Err(Error::Capacity(format!(
            "sum_{{j<={n}}} j^{m} exceeds the floating-point range"
        )));
    }
    Ok(cx(v, 0.0))
}

/// Which algebraic form of the even-zeta tail to evaluate; all three agree
/// where their domains overlap, by construction checks in the test suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailForm {
    /// Closed finite sum over zeta(2j); integer k only.
    FiniteSum,
    /// Integral over (0, pi/2) in the tangent-substituted variable.
    Trig,
    /// Integral over (0, inf) in the rational variable.
    Rational,
}

/// Exponentially small tail appearing in power-sum expansions:
/// `S(k, n) = sum_{j=1}^{floor(k/2)} zeta(2j) (2 pi i n)^{-2j} / (k - 2j)!`
/// for positive integer k, together with two integral continuations of the
/// same quantity valid for non-integer and complex k:
///
/// `S(k, n) = -sgn(re n) pi n / (2 Gamma(k+1)) * integral` of the
/// csch^2-weighted power-cosine deficit, in trig or rational variables.
///
/// `re(n) = 0` is rejected: both integrals lose their decaying direction.
pub fn zeta_even_tail<F: Real>(
    k: Complex<F>,
    n: Complex<F>,
    form: TailForm,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    if n.re == F::zero() {
        return Err(Error::Domain(
            "zeta_even_tail needs re(n) != 0 for a decaying csch^2 direction".to_string(),
        ));
    }
    match form {
        TailForm::FiniteSum => tail_finite_sum(k, n),
        TailForm::Trig => {
            let (pref, n_eff) = tail_prefactor(k, n)?;
            let int = tail_trig_integral(k, n_eff, cfg)?;
            Ok(EvalResult {
                value: int.value * pref,
                err_estimate: int.err_estimate * pref.norm(),
                ..int
            })
        }
        TailForm::Rational => {
            let (pref, n_eff) = tail_prefactor(k, n)?;
            let one = cx::<F>(1.0, 0.0);
            let int = deficit_tail_integral(k, n_eff, one, cfg)?;
            Ok(EvalResult {
                value: int.value * pref,
                err_estimate: int.err_estimate * pref.norm(),
                ..int
            })
        }
    }
}

/// `-sgn(re n) pi n / (2 Gamma(k+1))`, plus the reflection of n into the
/// right half-plane that the even csch^2 permits.
fn tail_prefactor<F: Real>(k: Complex<F>, n: Complex<F>) -> Result<(Complex<F>, Complex<F>)> {
    let lg = log_gamma(k + cx::<F>(1.0, 0.0))?;
    let sign = if n.re > F::zero() {
        r::<F>(-1.0)
    } else {
        r::<F>(1.0)
    };
    let pref = n * (-lg).exp() * (F::PI() * r::<F>(0.5) * sign);
    let n_eff = if n.re > F::zero() { n } else { -n };
    Ok((pref, n_eff))
}

fn tail_finite_sum<F: Real>(k: Complex<F>, n: Complex<F>) -> Result<EvalResult<F>> {
    if k.im != F::zero() || k.re.fract() != F::zero() || k.re < F::one() {
        return Err(Error::Domain(format!(
            "the finite_sum tail form needs a positive integer k, got {} + {}i \
             (use the trig or rational form)",
            k.re, k.im
        )));
    }
    let ki =
        k.re.to_u32()
            .ok_or_else(|| Error::Capacity(format!("integer k = {} out of range", k.re)))?;
    if ki > crate::bernoulli::MAX_BERNOULLI_INDEX + 1 {
        return Err(Error::Capacity(format!(
            "finite_sum tail supports k <= {}, got {ki}",
            crate::bernoulli::MAX_BERNOULLI_INDEX + 1
        )));
    }
    let jmax = ki / 2;
    if jmax == 0 {
        // k = 1: empty sum
        return Ok(EvalResult::closed_form(cx(0.0, 0.0), F::zero()));
    }
    let table = BernoulliTable::new((2 * jmax).max(2))?;
    // factorials 0! .. k!
    let mut facts = Vec::with_capacity(ki as usize + 1);
    let mut f = F::one();
    facts.push(f);
    for i in 1..=ki {
        f *= r::<F>(f64::from(i));
        facts.push(f);
    }
    let two_pi_i_n = Complex::new(F::zero(), F::PI() + F::PI()) * n;
    let inv_sq = (two_pi_i_n * two_pi_i_n).inv();
    let mut pw = cx::<F>(1.0, 0.0);
    let mut acc = CompensatedSum::new();
    let mut abs_acc = F::zero();
    for j in 1..=jmax {
        pw *= inv_sq;
        let term = pw * table.zeta_even::<F>(j)? / facts[(ki - 2 * j) as usize];
        acc.add(term);
        abs_acc += term.norm();
    }
    Ok(EvalResult::closed_form(
        acc.value(),
        abs_acc * F::epsilon() * r::<F>(4.0),
    ))
}

/// `integral_0^{pi/2} sec^2 v csch^2(pi n tan v) (1 - cos(k v)/cos^k v) dv`
/// for `re(n) > 0`.
fn tail_trig_integral<F: Real>(
    k: Complex<F>,
    n: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let tiny = r::<F>(1e-12);
    // past re(pi n tan v) ~ 360 the csch^2 factor is below 1e-312; return 0
    // before forming the bracket, whose log1p path degenerates only in this
    // same corner (sin^2 v rounding to 1)
    let big = r::<F>(360.0);
    let limit = deficit_limit(k, n);
    let pi_n = n * F::PI();
    let f = move |v: F| {
        if v < tiny {
            return limit;
        }
        let z = pi_n * v.tan();
        if z.re >= big {
            return Complex::new(F::zero(), F::zero());
        }
        let sec = v.cos().recip();
        match csch_sq(z) {
            Ok(w) => w * power_cos_deficit_trig(v, k) * (sec * sec),
            Err(_) => Complex::new(F::nan(), F::nan()),
        }
    };
    integrate_finite(f, F::zero(), F::FRAC_PI_2(), cfg)
}

/// Analytic continuation of `sum_{j=1}^{n} j^k` to complex `k != -1`:
///
/// `n^{k+1}/(k+1) + n^k/2 + zeta(-k)
///  + pi n^{k+2}/(k+1) * integral_0^inf csch^2(pi n t)
///    [1 - (1+t^2)^{(k+1)/2} cos((k+1) atan t)] dt`
///
/// with `zeta(-k)` supplied by the globally valid route. Reproduces the
/// integer-k Faulhaber values and interpolates them everywhere else.
pub fn powersum_ac<F: Real>(
    k: Complex<F>,
    n: u32,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    reject_singular_exponent(k)?;
    if n == 0 {
        return Err(Error::Domain("powersum_ac needs n >= 1".to_string()));
    }
    let nf = r::<F>(f64::from(n));
    let nc = Complex::new(nf, F::zero());
    let one = cx::<F>(1.0, 0.0);
    let kp1 = k + one;
    let z = zeta_global(-k, cfg)?;
    let scale = pos_pow(nf, kp1 + one); // n^{k+2}, folded into the integrand
    let int = deficit_tail_integral(kp1, nc, scale, cfg)?;
    let pref = Complex::new(F::PI(), F::zero()) / kp1;
    let value = pos_pow(nf, kp1) / kp1 + pos_pow(nf, k) * r::<F>(0.5) + z.value + int.value * pref;
    Ok(EvalResult {
        value,
        err_estimate: z.err_estimate + int.err_estimate * pref.norm(),
        evals_used: z.evals_used + int.evals_used,
        truncation_point: int.truncation_point,
        converged: z.converged && int.converged,
    })
}

/// The same continuation through the difference bracket
/// `-2 + (1+ix)^{k+1} + (1-ix)^{k+1}`:
///
/// `n^{k+1}/(k+1) + n^k/2 + zeta(-k)
///  - 2 pi n^{k+2}/(k+1) * integral_0^inf \[bracket\] e^{-2 pi n x}
///    / (1 - e^{-2 pi n x})^2 dx`.
///
/// Kept arithmetically independent of [`powersum_ac`]: the bracket goes
/// through direct complex powers (x >= 1/4) or its even binomial series
/// (below, where the direct form has no significant digits left), never
/// through the other route's expm1/log1p assembly. Agreement between the
/// two is therefore a genuine cross-check, and the test suite treats it as
/// such.
pub fn powersum_ac_alt<F: Real>(
    k: Complex<F>,
    n: u32,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    reject_singular_exponent(k)?;
    if n == 0 {
        return Err(Error::Domain("powersum_ac_alt needs n >= 1".to_string()));
    }
    let nf = r::<F>(f64::from(n));
    let one = cx::<F>(1.0, 0.0);
    let kp1 = k + one;
    let z = zeta_global(-k, cfg)?;
    let scale = pos_pow(nf, kp1 + one);
    let quarter_scale = scale * r::<F>(0.25);
    let pi_n = Complex::new(F::PI() * nf, F::zero());
    let tiny = r::<F>(1e-12);
    // bracket ~ -(k+1)k x^2 as x -> 0, so the weighted limit is
    // -(k+1)k/(4 pi^2 n^2) * scale
    let nc = Complex::new(nf, F::zero());
    let limit = -deficit_limit(kp1, nc) * scale * r::<F>(0.5);
    let f = move |x: F| {
        if x < tiny {
            return limit;
        }
        match csch_sq(pi_n * x) {
            Ok(w) => w * alt_bracket(x, kp1) * quarter_scale,
            Err(_) => Complex::new(F::nan(), F::nan()),
        }
    };
    let decay = (F::PI() + F::PI()) * nf;
    let growth = kp1.re.max(F::zero());
    let int = integrate_semi_infinite(f, decay, growth, cfg)?;
    let pref = Complex::new(-(F::PI() + F::PI()), F::zero()) / kp1;
    let value = pos_pow(nf, kp1) / kp1 + pos_pow(nf, k) * r::<F>(0.5) + z.value + int.value * pref;
    Ok(EvalResult {
        value,
        err_estimate: z.err_estimate + int.err_estimate * pref.norm(),
        evals_used: z.evals_used + int.evals_used,
        truncation_point: int.truncation_point,
        converged: z.converged && int.converged,
    })
}

/// `-2 + (1+ix)^kappa + (1-ix)^kappa`.
///
/// Direct complex powers for x >= 1/4; the even generalized binomial series
/// `2 sum_{m>=1} (-1)^m C(kappa, 2m) x^{2m}` below that, by term
/// recurrence. The series terminates exactly for non-negative integer kappa
/// and contracts at worst like x^2/(1-x)^... well inside |x| < 1/4.
fn alt_bracket<F: Real>(x: F, kappa: Complex<F>) -> Complex<F> {
    let one = cx::<F>(1.0, 0.0);
    let two = cx::<F>(2.0, 0.0);
    if x >= r::<F>(0.25) {
        let up = Complex::new(F::one(), x);
        let down = Complex::new(F::one(), -x);
        (kappa * up.ln()).exp() + (kappa * down.ln()).exp() - two
    } else {
        let neg_x_sq = -(x * x);
        let eps_sq = F::epsilon() * F::epsilon();
        let mut term = kappa * (kappa - one) * (neg_x_sq * r::<F>(0.5));
        let mut acc = term;
        for m in 2..=80u32 {
            let tm = r::<F>(2.0 * f64::from(m));
            term =
                term * neg_x_sq * (kappa - tm + two) * (kappa - tm + one) / ((tm - F::one()) * tm);
            acc += term;
            if term.norm_sqr() <= acc.norm_sqr() * eps_sq {
                break;
            }
        }
        acc + acc
    }
}
