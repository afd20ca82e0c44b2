//! Integrand builders shared by the zeta, power-sum, and Hurwitz evaluators.
//!
//! Every continuation formula in this crate reduces to one of two integral
//! shapes: a csch^2-weighted "power-cosine deficit" over (0, inf) (or its
//! tangent-substituted image on (0, pi/2)), and a Boltzmann-weighted power
//! moment over (0, inf). The numerically safe forms live here once, so the
//! engines state only their prefactors.

use num_complex::Complex;

use crate::complexfn::{csch_sq, expm1_c};
use crate::quadrature::{integrate_semi_infinite, EvalResult, QuadratureConfig};
use crate::scalar::{r, Real};
use crate::Result;

/// Below this abscissa the csch^2-weighted integrands switch to their exact
/// t -> 0 limit. The crossover error is O(t^2) ~ 1e-24, far below roundoff,
/// while the guard keeps `expm1(-2 pi c t)^2` out of the underflow range the
/// quadrature's extreme nodes (t ~ 1e-300) would otherwise reach.
const SMALL_T: f64 = 1e-12;

/// `1 - (1 + t^2)^{kappa/2} cos(kappa atan t)` without cancellation.
///
/// With `x = (kappa/2) log1p(t^2)` and `y = kappa atan t` this is
/// `-expm1(x) + e^x * 2 sin^2(y/2)`: every piece vanishes like t as t -> 0,
/// so nothing is computed as a difference of values near 1. The naive form
/// loses eps/t^2 of relative accuracy, which csch^2 then amplifies into a
/// visibly wrong integral.
pub(crate) fn power_cos_deficit<F: Real>(t: F, kappa: Complex<F>) -> Complex<F> {
    let x = kappa * ((t * t).ln_1p() * r::<F>(0.5));
    let y = kappa * t.atan();
    let s = (y * r::<F>(0.5)).sin();
    -expm1_c(x) + x.exp() * (s * s) * r::<F>(2.0)
}

/// `1 - cos(kappa v) / cos(v)^kappa` on (0, pi/2): the image of
/// [`power_cos_deficit`] under t = tan v, assembled the same way.
///
/// The exponent must come from `log1p(-sin^2 v)` on the small-v half;
/// `log(cos v)` costs eps/v^2 of relative accuracy there and shows up as a
/// stalled, systematically wrong quadrature. Past pi/4 the direct log is
/// exact enough and avoids the sin^2 rounding to 1 near pi/2.
pub(crate) fn power_cos_deficit_trig<F: Real>(v: F, kappa: Complex<F>) -> Complex<F> {
    let x = if v <= F::FRAC_PI_4() {
        let sv = v.sin();
        kappa * ((-sv * sv).ln_1p() * r::<F>(-0.5))
    } else {
        kappa * (-v.cos().ln())
    };
    let y = kappa * v;
    let s = (y * r::<F>(0.5)).sin();
    -expm1_c(x) + x.exp() * (s * s) * r::<F>(2.0)
}

/// Limit of `csch^2(pi c t) * power_cos_deficit(t, kappa)` as t -> 0:
/// `kappa (kappa - 1) / (2 pi^2 c^2)`.
pub(crate) fn deficit_limit<F: Real>(kappa: Complex<F>, c: Complex<F>) -> Complex<F> {
    let pi_sq = F::PI() * F::PI();
    let one = Complex::new(F::one(), F::zero());
    kappa * (kappa - one) / (c * c * (pi_sq + pi_sq))
}

/// `integral_0^inf scale * csch^2(pi c t) * power_cos_deficit(t, kappa) dt`
/// for `re(c) > 0`.
///
/// `scale` is folded into the integrand pointwise: the power-sum callers
/// carry prefactors like n^{k+2} that would overflow intermediate values if
/// multiplied after the fact at extreme parameters, and pointwise scaling
/// also keeps the quadrature's relative tolerance aligned with the term's
/// final magnitude. The tail envelope is
/// `t^{max(0, re kappa)} e^{-2 pi re(c) t}`.
pub(crate) fn deficit_tail_integral<F: Real>(
    kappa: Complex<F>,
    c: Complex<F>,
    scale: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let tiny = r::<F>(SMALL_T);
    let limit = deficit_limit(kappa, c) * scale;
    let pi_c = c * F::PI();
    let f = move |t: F| {
        if t < tiny {
            return limit;
        }
        match csch_sq(pi_c * t) {
            Ok(w) => w * power_cos_deficit(t, kappa) * scale,
            Err(_) => Complex::new(F::nan(), F::nan()),
        }
    };
    let decay = (F::PI() + F::PI()) * c.re;
    let growth = kappa.re.max(F::zero());
    integrate_semi_infinite(f, decay, growth, cfg)
}

/// `integral_0^inf t^p e^{-t} / (1 - e^{-t})^2 dt` for `re(p) > 1`.
///
/// Evaluated as `t^{p-2} e^{-t} g(t)^2` with `g = t / (-expm1(-t))`, which
/// tends to 1 at the origin; the naive denominator squares an underflowing
/// `1 - e^{-t}` at the leftmost quadrature nodes (t ~ 1e-300) and divides by
/// zero. The exponential is folded into the power so the largest
/// intermediate is `exp((re p - 2) ln t - t)`, in range whenever re(p) > 1.
pub(crate) fn power_exp_integral<F: Real>(
    p: Complex<F>,
    cfg: &QuadratureConfig<F>,
) -> Result<EvalResult<F>> {
    let two = Complex::new(r::<F>(2.0), F::zero());
    let f = move |t: F| {
        let g = t / -(-t).exp_m1();
        ((p - two) * t.ln() - Complex::new(t, F::zero())).exp() * (g * g)
    };
    let growth = p.re.max(F::zero());
    integrate_semi_infinite(f, F::one(), growth, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    #[test]
    fn deficit_matches_naive_form_at_moderate_t() {
        // where the naive evaluation is safe, the stable one must agree
        for &t in &[0.5f64, 1.0, 3.0, 20.0] {
            for &kappa in &[
                cx::<f64>(3.0, 0.0),
                cx(-1.5, 0.0),
                cx(2.5, 1.0),
                cx(0.5, -2.0),
            ] {
                let naive = {
                    let p = (kappa * (1.0 + t * t).ln() * 0.5).exp();
                    let a = kappa * t.atan();
                    cx::<f64>(1.0, 0.0) - p * a.cos()
                };
                let stable = power_cos_deficit(t, kappa);
                let tol = 1e-12 * naive.norm().max(1.0);
                assert!(
                    (stable - naive).norm() <= tol,
                    "t={t} kappa={kappa}: {stable} vs {naive}"
                );
            }
        }
    }

    #[test]
    fn deficit_small_t_expansion() {
        // 1 - (1+t^2)^{kappa/2} cos(kappa atan t) = kappa(kappa-1)/2 t^2 + O(t^4)
        let kappa = cx::<f64>(2.5, 1.0);
        for &t in &[1e-4f64, 1e-6] {
            let head = kappa * (kappa - 1.0) * 0.5 * (t * t);
            let got = power_cos_deficit(t, kappa);
            assert!(
                (got - head).norm() <= 1e-7 * head.norm(),
                "t = {t}: {got} vs {head}"
            );
        }
    }

    #[test]
    fn trig_form_is_the_tangent_image_of_the_line_form() {
        let kappa = cx::<f64>(3.5, -0.7);
        for &v in &[1e-3f64, 0.3, 0.77, 1.2, 1.5] {
            let line = power_cos_deficit(v.tan(), kappa);
            let trig = power_cos_deficit_trig(v, kappa);
            assert!(
                (line - trig).norm() <= 1e-11 * line.norm().max(1.0),
                "v = {v}: {trig} vs {line}"
            );
        }
    }

    #[test]
    fn deficit_limit_matches_the_integrand_just_above_the_guard() {
        let kappa = cx::<f64>(4.0, 0.5);
        let c = cx::<f64>(2.0, 0.3);
        let lim = deficit_limit(kappa, c);
        let t = 2e-12f64;
        let direct = csch_sq(c * std::f64::consts::PI * t).unwrap() * power_cos_deficit(t, kappa);
        assert!((direct - lim).norm() <= 1e-10 * lim.norm());
    }

    #[test]
    fn power_exp_integral_at_integer_arguments() {
        // integral = Gamma(p+1) zeta(p); at p = 3: 6 * zeta(3)
        let cfgd = QuadratureConfig::<f64>::default();
        let res = power_exp_integral(cx::<f64>(3.0, 0.0), &cfgd).unwrap();
        assert!(res.converged);
        let zeta3 = 1.2020569031595942854;
        assert!(
            (res.value.re - 6.0 * zeta3).abs() <= 1e-9 * (6.0 * zeta3),
            "got {}",
            res.value.re
        );
    }
}
