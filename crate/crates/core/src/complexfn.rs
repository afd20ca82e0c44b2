//! Complex building blocks shared by every integrand: principal powers,
//! a cancellation-free `expm1`, the squared hyperbolic cosecant, and
//! compensated summation.

use num_complex::Complex;

use crate::scalar::{r, Real};
use crate::{Error, Result};

/// Principal branch of `z^w`, computed as `exp(w log z)` with the log cut
/// along the negative real axis.
///
/// `0^w` is 0 when `re(w) > 0` and a domain error otherwise; `z^0` is 1 for
/// any nonzero `z`.
pub fn cpow<F: Real>(z: Complex<F>, w: Complex<F>) -> Result<Complex<F>> {
    if z.re == F::zero() && z.im == F::zero() {
        if w.re > F::zero() {
            return Ok(Complex::new(F::zero(), F::zero()));
        }
        return Err(Error::Domain(format!(
            "cpow: 0^w is undefined for re(w) <= 0 (w = {} + {}i)",
            w.re, w.im
        )));
    }
    if w.re == F::zero() && w.im == F::zero() {
        return Ok(Complex::new(F::one(), F::zero()));
    }
    Ok((w * z.ln()).exp())
}

/// `x^k` for strictly positive real `x`, as `exp(k ln x)`. Infallible where
/// `cpow` is not, which keeps integrand closures free of error plumbing.
#[inline]
pub(crate) fn pos_pow<F: Real>(x: F, k: Complex<F>) -> Complex<F> {
    (k * x.ln()).exp()
}

/// `exp(z) - 1` without cancellation for small `|z|`.
///
/// A truncated Taylor series handles `|z| <= 1/2`. Elsewhere the real part
/// is assembled as `expm1(x) cos(y) - 2 sin^2(y/2)`: for `re(z) <= 0` both
/// addends carry the same sign, so the subtraction that makes the naive
/// `exp(z) - 1` useless near the imaginary axis never happens.
pub fn expm1_c<F: Real>(z: Complex<F>) -> Complex<F> {
    if z.norm_sqr() <= r::<F>(0.25) {
        let eps_sq = F::epsilon() * F::epsilon();
        let mut term = z;
        let mut sum = z;
        for n in 2..64u32 {
            term = term * z / r::<F>(f64::from(n));
            sum += term;
            if term.norm_sqr() <= sum.norm_sqr() * eps_sq {
                break;
            }
        }
        sum
    } else {
        let half_sin = (z.im * r::<F>(0.5)).sin();
        Complex::new(
            z.re.exp_m1() * z.im.cos() - half_sin * half_sin * r::<F>(2.0),
            z.re.exp() * z.im.sin(),
        )
    }
}

/// `csch^2(z) = 1 / sinh^2(z)` for `re(z) > 0`.
///
/// Written as `4 e^w / expm1(w)^2` with `w = -2z`; in the left half-plane
/// where `w` lives the real part of `expm1(w)` is built from two same-sign
/// contributions, so the form is stable down to `re(z)` around 1e-8 and
/// beyond (the guard below only trips once the true value itself exceeds
/// the floating-point range, near `|z|` of 1e-154).
pub fn csch_sq<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    if z.re <= F::zero() {
        return Err(Error::Domain(format!(
            "csch_sq requires re(z) > 0, got z = {} + {}i",
            z.re, z.im
        )));
    }
    let w = -z * r::<F>(2.0);
    let m = expm1_c(w);
    let out = w.exp() * r::<F>(4.0) / (m * m);
    if out.re.is_finite() && out.im.is_finite() {
        Ok(out)
    } else {
        Err(Error::Domain(format!(
            "csch_sq(z) exceeds the floating-point range at z = {} + {}i",
            z.re, z.im
        )))
    }
}

/// Neumaier-compensated accumulator for complex addends.
///
/// Each component carries a running compensation term, so the error of a
/// long sum stays at one ulp of the total instead of growing with the
/// number of terms. Used by the brute-force reference sums, whose whole
/// point is to be more trustworthy than what they check.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum<F: Real> {
    sum: Complex<F>,
    comp: Complex<F>,
}

impl<F: Real> CompensatedSum<F> {
    pub fn new() -> Self {
        CompensatedSum {
            sum: Complex::new(F::zero(), F::zero()),
            comp: Complex::new(F::zero(), F::zero()),
        }
    }

    pub fn add(&mut self, x: Complex<F>) {
        Self::add_part(&mut self.sum.re, &mut self.comp.re, x.re);
        Self::add_part(&mut self.sum.im, &mut self.comp.im, x.im);
    }

    fn add_part(s: &mut F, c: &mut F, x: F) {
        let t = *s + x;
        if s.abs() >= x.abs() {
            *c += (*s - t) + x;
        } else {
            *c += (x - t) + *s;
        }
        *s = t;
    }

    /// Running sum with the accumulated compensation folded back in.
    pub fn value(&self) -> Complex<F> {
        self.sum + self.comp
    }
}
