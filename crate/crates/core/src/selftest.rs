//! Runtime self-test suites: the invariants and classical identities each
//! module promises, runnable against a caller-supplied quadrature
//! configuration. `run_quick` covers every module with spot checks in a few
//! seconds; `run_full` adds the exhaustive grids and the quadrature honesty
//! audit.
//!
//! All engine evaluations go through the caller's configuration on purpose:
//! running the suite with loosened tolerances must fail, otherwise the
//! suite could not detect a genuinely broken build.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

use crate::bernoulli::BernoulliTable;
use crate::complexfn::cpow;
use crate::gamma::{gamma, log_gamma};
use crate::hurwitz::{hp_bruteforce, hp_sum_ac, hp_sum_hurwitz, hurwitz_global, hurwitz_neg_int};
use crate::integrands::power_exp_integral;
use crate::powersum::{
    faulhaber_bernoulli_odd_exact, powersum_ac, powersum_ac_alt, powersum_bruteforce,
    zeta_even_tail, TailForm,
};
use crate::quadrature::{
    integrate_finite, integrate_semi_infinite, truncation_point, EvalResult, QuadratureConfig,
};
use crate::scalar::cx;
use crate::zeta::{
    in_reference_window, zeta_functional, zeta_global, zeta_reference, zeta_strip_neg,
    zeta_strip_pos,
};

type C = Complex<f64>;
type Cfg = QuadratureConfig<f64>;

const ZETA_2: f64 = 1.6449340668482264365;
const ZETA_3: f64 = 1.2020569031595942854;

/// One named invariant with its measured worst-case deviation.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

struct Suite {
    out: Vec<CheckResult>,
}

impl Suite {
    fn new() -> Self {
        Suite { out: Vec::new() }
    }

    fn push(&mut self, name: &'static str, tolerance: f64, max_deviation: f64) {
        self.out.push(CheckResult {
            name,
            max_deviation,
            tolerance,
            passed: max_deviation.is_finite() && max_deviation <= tolerance,
        });
    }
}

/// Relative deviation against `b` with a unit floor; NaN (from a failed
/// evaluation) becomes infinite so the check cannot silently pass.
fn rel(a: C, b: C) -> f64 {
    let d = (a - b).norm() / b.norm().max(1.0);
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

/// Unwraps an evaluation into its value, turning any error into NaN so it
/// surfaces as an infinite deviation at the comparison site.
fn ev(r: crate::Result<EvalResult<f64>>) -> C {
    match r {
        Ok(res) => res.value,
        Err(_) => cx(f64::NAN, f64::NAN),
    }
}

fn ev_c(r: crate::Result<C>) -> C {
    r.unwrap_or(cx(f64::NAN, f64::NAN))
}

/// 0 when the call was rejected as required, infinite when it succeeded.
fn expect_err<T>(r: crate::Result<T>) -> f64 {
    if r.is_err() {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Fast spot checks of every module invariant; a few seconds end to end.
pub fn run_quick(cfg: &Cfg) -> Vec<CheckResult> {
    let mut s = Suite::new();
    let pi = std::f64::consts::PI;

    // exact rational layer
    {
        let table = BernoulliTable::new(12).unwrap();
        let expect: &[(u32, i64, i64)] = &[
            (0, 1, 1),
            (2, 1, 6),
            (4, -1, 30),
            (6, 1, 42),
            (8, -1, 30),
            (10, 5, 66),
            (12, -691, 2730),
        ];
        let mut dev: f64 = 0.0;
        for &(i, num, den) in expect {
            let want = BigRational::new(BigInt::from(num), BigInt::from(den));
            if table.bernoulli(i).unwrap() != want {
                dev = f64::INFINITY;
            }
        }
        s.push("bernoulli table textbook values", 0.0, dev);

        let mut dz: f64 = 0.0;
        dz = dz.max((table.zeta_even::<f64>(1).unwrap().re - ZETA_2).abs() / ZETA_2);
        dz = dz.max((table.zeta_even::<f64>(2).unwrap().re - pi.powi(4) / 90.0).abs());
        dz = dz.max((table.zeta_even::<f64>(3).unwrap().re - pi.powi(6) / 945.0).abs());
        s.push("even zeta values from bernoulli numbers", 1e-15, dz);
    }
    {
        let mut dev: f64 = 0.0;
        for &(m, n) in &[(1u32, 100u32), (3, 10), (5, 4)] {
            let exact = faulhaber_bernoulli_odd_exact(m, n).unwrap();
            let mut brute = BigInt::from(0);
            for j in 1..=n {
                brute += BigInt::from(j).pow(m);
            }
            if exact != BigRational::from(brute) {
                dev = f64::INFINITY;
            }
        }
        s.push("odd-exponent closed form is exact", 0.0, dev);
    }

    // quadrature layer
    {
        let d = ev(integrate_semi_infinite(
            |t: f64| cx((-t).exp(), 0.0),
            1.0,
            0.0,
            cfg,
        ));
        s.push(
            "quadrature: exponential moment",
            1e-12,
            rel(d, cx(1.0, 0.0)),
        );
        let d = ev(integrate_finite(
            |x: f64| cx(x.sqrt().recip(), 0.0),
            0.0,
            1.0,
            cfg,
        ));
        s.push(
            "quadrature: endpoint singularity",
            1e-9,
            rel(d, cx(2.0, 0.0)),
        );
        let d = ev(integrate_finite(
            |x: f64| cpow(cx(x, 0.0), cx(0.0, 1.0)).unwrap(),
            0.0,
            1.0,
            cfg,
        ));
        s.push(
            "quadrature: complex power moment",
            1e-10,
            rel(d, cx(0.5, -0.5)),
        );
        let t = truncation_point(1.0, 4.0, cfg);
        let residual = (t - 4.0 * (1.0 + t).ln() - cfg.tail_margin.max(0.0)).abs();
        s.push("truncation point solves its equation", 1e-9, residual);
    }

    // gamma layer
    {
        let mut dev = rel(ev_c(gamma(cx(5.0, 0.0))), cx(24.0, 0.0));
        dev = dev.max(rel(ev_c(gamma(cx(0.5, 0.0))), cx(pi.sqrt(), 0.0)));
        s.push("gamma: factorial and half-integer values", 1e-14, dev);
        let mut drec: f64 = 0.0;
        for &z in &[cx(0.7, 0.0), cx(2.5, 1.5), cx(0.5, -3.0)] {
            let lhs = ev_c(log_gamma(z + cx(1.0, 0.0)));
            let rhs = ev_c(log_gamma(z)) + z.ln();
            drec = drec.max((lhs - rhs).norm());
        }
        s.push(
            "gamma: recurrence log G(z+1) = log G(z) + log z",
            1e-12,
            drec,
        );
    }

    // zeta representations
    {
        let mut dev = rel(ev(zeta_strip_pos(cx(2.0, 0.0), cfg)), cx(ZETA_2, 0.0));
        dev = dev.max(rel(
            ev(zeta_strip_pos(cx(4.0, 0.0), cfg)),
            cx(pi.powi(4) / 90.0, 0.0),
        ));
        s.push("zeta right of the strip: classical values", 1e-10, dev);
        let dev = rel(ev(zeta_strip_neg(cx(-1.0, 0.0), cfg)), cx(-1.0 / 12.0, 0.0));
        s.push("zeta left of the strip: value at -1", 1e-10, dev);
        let dev = rel(ev(zeta_functional(cx(3.0, 0.0), cfg)), cx(1.0 / 120.0, 0.0));
        s.push("zeta reflection route: value at -3", 1e-9, dev);

        let mut dev = rel(ev(zeta_global(cx(2.0, 0.0), cfg)), cx(ZETA_2, 0.0));
        dev = dev.max(rel(ev(zeta_global(cx(0.0, 0.0), cfg)), cx(-0.5, 0.0)));
        dev = dev.max(rel(
            ev(zeta_global(cx(-1.0, 0.0), cfg)),
            cx(-1.0 / 12.0, 0.0),
        ));
        s.push("zeta everywhere-valid route: plane sweep", 1e-9, dev);

        let mut dev: f64 = 0.0;
        for &k in &[cx(0.5, 14.134725), cx(0.5, 2.0), cx(0.9, 0.0)] {
            dev = dev.max(rel(ev(zeta_global(k, cfg)), ev_c(zeta_reference(k))));
        }
        s.push("zeta in the critical strip vs series oracle", 1e-8, dev);

        let mut dev = rel(
            ev(zeta_strip_pos(cx(3.0, 0.0), cfg)),
            ev(zeta_global(cx(3.0, 0.0), cfg)),
        );
        dev = dev.max(rel(
            ev(zeta_strip_neg(cx(-2.5, 0.0), cfg)),
            ev(zeta_global(cx(-2.5, 0.0), cfg)),
        ));
        s.push("zeta representations agree pairwise", 1e-9, dev);

        let mut dev = expect_err(zeta_global(cx(1.0, 0.0), cfg));
        dev = dev.max(expect_err(zeta_strip_pos(cx(0.5, 0.0), cfg)));
        dev = dev.max(expect_err(zeta_strip_neg(cx(0.5, 0.0), cfg)));
        s.push("zeta domain and pole rejection", 0.0, dev);

        let mut dev: f64 = 0.0;
        if !in_reference_window(cx::<f64>(0.5, 2.0)) {
            dev = f64::INFINITY;
        }
        if in_reference_window(cx::<f64>(0.5, 30.0))
            || in_reference_window(cx::<f64>(1.0 + 1e-3, 0.0))
        {
            dev = f64::INFINITY;
        }
        s.push("series oracle advertises its validity window", 0.0, dev);
    }

    // power sums
    {
        let mut dev: f64 = 0.0;
        for &k in &[0.0f64, 2.0, 3.0, 5.0] {
            for &n in &[1u32, 10] {
                let brute = powersum_bruteforce(cx(k, 0.0), n);
                dev = dev.max(rel(ev(powersum_ac(cx(k, 0.0), n, cfg)), brute));
            }
        }
        s.push("power sum continuation hits integer values", 1e-9, dev);

        let mut dev: f64 = 0.0;
        for &(k, n) in &[(cx(2.0, 0.0), 5u32), (cx(0.5, 0.0), 4), (cx(2.0, 1.0), 3)] {
            dev = dev.max(rel(
                ev(powersum_ac_alt(k, n, cfg)),
                ev(powersum_ac(k, n, cfg)),
            ));
        }
        s.push("power sum: exponential route agrees", 1e-9, dev);

        let mut dev = rel(
            ev(powersum_ac(cx(0.5, 0.0), 4, cfg)),
            powersum_bruteforce(cx(0.5, 0.0), 4),
        );
        dev = dev.max(rel(
            ev(powersum_ac(cx(-2.0, 0.0), 10, cfg)),
            powersum_bruteforce(cx(-2.0, 0.0), 10),
        ));
        s.push("power sum at fractional and negative exponents", 1e-9, dev);

        s.push(
            "power sum rejects the harmonic exponent",
            0.0,
            expect_err(powersum_ac(cx(-1.0, 0.0), 5, cfg)),
        );

        let mut dev: f64 = 0.0;
        for &k in &[2.0f64, 4.0] {
            let kc = cx(k, 0.0);
            let n = cx(1.0, 0.0);
            let fs = ev(zeta_even_tail(kc, n, TailForm::FiniteSum, cfg));
            let tr = ev(zeta_even_tail(kc, n, TailForm::Trig, cfg));
            let ra = ev(zeta_even_tail(kc, n, TailForm::Rational, cfg));
            let scale = fs.norm().max(1e-3);
            dev = dev.max((fs - tr).norm() / scale);
            dev = dev.max((fs - ra).norm() / scale);
        }
        s.push("even-zeta tail: three forms agree", 1e-9, dev);

        let d = ev(power_exp_integral(cx(3.0, 0.0), cfg));
        s.push(
            "boltzmann power moment at p = 3",
            1e-9,
            rel(d, cx(6.0 * ZETA_3, 0.0)),
        );
    }

    // hurwitz and harmonic progressions
    {
        let mut dev = rel(
            ev(hurwitz_global(cx(2.0, 0.0), cx(1.0, 0.0), cfg)),
            cx(ZETA_2, 0.0),
        );
        dev = dev.max(rel(
            ev(hurwitz_global(cx(2.0, 0.0), cx(2.0, 0.0), cfg)),
            cx(ZETA_2 - 1.0, 0.0),
        ));
        s.push("hurwitz zeta: classical values", 1e-10, dev);

        let mut dev: f64 = 0.0;
        for m in 0..=3u32 {
            for &b in &[cx(0.4, 0.0), cx(1.0, 1.0)] {
                let closed = ev_c(hurwitz_neg_int(m, b));
                let global = ev(hurwitz_global(cx(-f64::from(m), 0.0), b, cfg));
                dev = dev.max(rel(global, closed));
            }
        }
        s.push("hurwitz zeta matches its integer closed form", 1e-9, dev);

        let mut dev: f64 = 0.0;
        for &(k, b) in &[(cx(2.0, 0.0), cx(0.3, 0.0)), (cx(-1.5, 0.0), cx(1.0, 0.0))] {
            let lo = ev(hurwitz_global(k, b, cfg));
            let hi = ev(hurwitz_global(k, b + cx(1.0, 0.0), cfg));
            let step = ev_c(cpow(b, -k));
            dev = dev.max((lo - hi - step).norm() / step.norm().max(1.0));
        }
        s.push("hurwitz recurrence in the offset", 1e-8, dev);

        let mut dev: f64 = 0.0;
        for &k in &[cx(2.0, 0.0), cx(-0.5, 0.0)] {
            let half = ev(hurwitz_global(k, cx(0.5, 0.0), cfg));
            let expect = (ev_c(cpow(cx(2.0, 0.0), k)) - cx(1.0, 0.0)) * ev(zeta_global(k, cfg));
            dev = dev.max(rel(half, expect));
        }
        s.push("hurwitz at half offset vs riemann", 1e-8, dev);

        let mut dev = rel(
            ev(hp_sum_ac(cx(2.0, 0.0), cx(1.0, 0.0), 3, cfg)),
            cx(29.0, 0.0),
        );
        dev = dev.max(rel(
            ev(hp_sum_ac(cx(3.0, 0.0), cx(0.5, 0.0), 2, cfg)),
            cx(19.0, 0.0),
        ));
        dev = dev.max(rel(
            ev(hp_sum_ac(cx(0.5, 0.0), cx(1.0, 0.0), 3, cfg)),
            ev_c(hp_bruteforce(cx(0.5, 0.0), cx(1.0, 0.0), 3, 1)),
        ));
        s.push("harmonic progression: direct continuation", 1e-9, dev);

        let mut dev = rel(
            ev(hp_sum_hurwitz(cx(2.0, 0.0), cx(1.0, 0.0), 3, cfg)),
            cx(30.0, 0.0),
        );
        dev = dev.max(rel(
            ev(hp_sum_hurwitz(cx(0.0, 0.0), cx(0.3, 0.0), 5, cfg)),
            cx(6.0, 0.0),
        ));
        dev = dev.max(rel(
            ev(hp_sum_hurwitz(cx(-2.0, 0.0), cx(1.0, 0.0), 0, cfg)),
            cx(1.0, 0.0),
        ));
        s.push("harmonic progression: hurwitz route", 1e-9, dev);

        let k = cx(2.0, 0.0);
        let lhs = ev(powersum_ac(k, 5, cfg));
        let rhs = ev(zeta_global(-k, cfg)) - ev(hurwitz_global(-k, cx(6.0, 0.0), cfg));
        s.push("power sum bridges zeta and hurwitz", 1e-8, rel(lhs, rhs));

        let mut dev = expect_err(hurwitz_global(cx(1.0, 0.0), cx(1.0, 0.0), cfg));
        dev = dev.max(expect_err(hurwitz_global(cx(2.0, 0.0), cx(-0.4, 0.3), cfg)));
        dev = dev.max(expect_err(hp_sum_ac(cx(-1.0, 0.0), cx(1.0, 0.0), 3, cfg)));
        s.push("hurwitz domain and pole rejection", 0.0, dev);
    }

    s.out
}

/// Everything in [`run_quick`] plus the exhaustive grids, the quadrature
/// honesty audit, determinism, and the slow classical cross-checks.
pub fn run_full(cfg: &Cfg) -> Vec<CheckResult> {
    let mut s = Suite {
        out: run_quick(cfg),
    };
    let pi = std::f64::consts::PI;

    // even zeta values against raw partial sums with an integral tail
    {
        let n = 1_000_000u32;
        let table = BernoulliTable::new(10).unwrap();
        let mut dev: f64 = 0.0;
        for j in 1..=5u32 {
            let p = 2 * j;
            let mut sum = 0.0f64;
            for i in (1..=n).rev() {
                sum += f64::from(i).powi(-(p as i32));
            }
            let nf = f64::from(n);
            // Euler-Maclaurin tail: N^{1-p}/(p-1) + N^{-p}/2 leaves O(N^{-p-1})
            let tail = nf.powi(1 - p as i32) / (f64::from(p) - 1.0) - nf.powi(-(p as i32)) / 2.0;
            let want = sum + tail;
            dev = dev.max((table.zeta_even::<f64>(j).unwrap().re - want).abs() / want);
        }
        s.push("even zeta values vs million-term sums", 1e-10, dev);
    }

    // quadrature honesty: reported error estimates must bound true error
    // within a small factor, under whatever configuration is active
    {
        type AuditCase<'a> = (&'a dyn Fn(f64) -> C, f64, f64, C);
        let finite: &[AuditCase] = &[
            (&|x: f64| cx(x.sqrt().recip(), 0.0), 0.0, 1.0, cx(2.0, 0.0)),
            (&|x: f64| cx(x.ln(), 0.0), 0.0, 1.0, cx(-1.0, 0.0)),
            (
                &|x: f64| cpow(cx(x, 0.0), cx(0.0, 1.0)).unwrap(),
                0.0,
                1.0,
                cx(0.5, -0.5),
            ),
            (&|x: f64| cx(x.sin(), 0.0), 0.0, pi / 2.0, cx(1.0, 0.0)),
            (
                &|x: f64| cx((1.0 + x * x).recip(), 0.0),
                0.0,
                1.0,
                cx(pi / 4.0, 0.0),
            ),
        ];
        let semi: &[AuditCase] = &[
            (&|t: f64| cx((-t).exp(), 0.0), 1.0, 0.0, cx(1.0, 0.0)),
            (
                &|t: f64| cx(t * (-2.0 * t).exp(), 0.0),
                2.0,
                1.0,
                cx(0.25, 0.0),
            ),
            (
                &|t: f64| (cx(0.0, 1.0) * t - t).exp(),
                1.0,
                0.0,
                cx(0.5, 0.5),
            ),
            (
                &|t: f64| cx(t * t * (-t).exp(), 0.0),
                1.0,
                2.0,
                cx(2.0, 0.0),
            ),
            (
                &|t: f64| (cx(0.0, 2.0) * t - 3.0 * t).exp(),
                3.0,
                0.0,
                cx(3.0 / 13.0, 2.0 / 13.0),
            ),
        ];
        let mut dev: f64 = 0.0;
        let mut audit = |res: crate::Result<EvalResult<f64>>, want: C| match res {
            Ok(r) => {
                let true_err = (r.value - want).norm();
                let allowed = 5.0 * (r.err_estimate + cfg.abs_tol + cfg.rel_tol * want.norm());
                dev = dev.max(true_err / allowed);
            }
            Err(_) => dev = f64::INFINITY,
        };
        for (f, a, b, want) in finite {
            audit(integrate_finite(f, *a, *b, cfg), *want);
        }
        for (f, decay, growth, want) in semi {
            audit(integrate_semi_infinite(f, *decay, *growth, cfg), *want);
        }
        s.push("quadrature error estimates are honest", 1.0, dev);
    }

    // bitwise determinism of a full engine evaluation
    {
        let mut dev: f64 = 0.0;
        let a = ev(zeta_global(cx(2.5, 1.5), cfg));
        let b = ev(zeta_global(cx(2.5, 1.5), cfg));
        if a.re.to_bits() != b.re.to_bits() || a.im.to_bits() != b.im.to_bits() {
            dev = f64::INFINITY;
        }
        let a = ev(powersum_ac(cx(0.5, 0.0), 7, cfg));
        let b = ev(powersum_ac(cx(0.5, 0.0), 7, cfg));
        if a.re.to_bits() != b.re.to_bits() || a.im.to_bits() != b.im.to_bits() {
            dev = f64::INFINITY;
        }
        s.push("repeated evaluation is bitwise identical", 0.0, dev);
    }

    // exhaustive integer power-sum grid, both continuations
    {
        let mut dev: f64 = 0.0;
        for k in 0..=8u32 {
            let kc = cx(f64::from(k), 0.0);
            for n in 1..=20u32 {
                let brute = powersum_bruteforce(kc, n);
                dev = dev.max(rel(ev(powersum_ac(kc, n, cfg)), brute));
                dev = dev.max(rel(ev(powersum_ac_alt(kc, n, cfg)), brute));
            }
        }
        s.push("power sum integer grid, both routes", 1e-9, dev);
    }

    // negative and non-integer exponent grid
    {
        let mut dev: f64 = 0.0;
        for &k in &[
            cx(-2.0, 0.0),
            cx(-3.0, 0.0),
            cx(-0.5, 0.0),
            cx(0.5, 0.0),
            cx(2.0, 1.0),
        ] {
            for n in 1..=10u32 {
                let brute = powersum_bruteforce(k, n);
                dev = dev.max(rel(ev(powersum_ac(k, n, cfg)), brute));
                dev = dev.max(rel(ev(powersum_ac_alt(k, n, cfg)), brute));
            }
        }
        dev = dev.max(expect_err(powersum_ac(cx(-1.0, 0.0), 5, cfg)));
        dev = dev.max(expect_err(powersum_ac_alt(cx(-1.0, 0.0), 5, cfg)));
        s.push("power sum non-integer grid, both routes", 1e-9, dev);
    }

    // telescoping in n at assorted exponents
    {
        let mut dev: f64 = 0.0;
        for &k in &[cx(0.5, 0.0), cx(2.0, 1.0), cx(-3.0, 0.0), cx(pi, 0.0)] {
            for &n in &[3u32, 9] {
                let hi = ev(powersum_ac(k, n, cfg));
                let lo = ev(powersum_ac(k, n - 1, cfg));
                let step = ev_c(cpow(cx(f64::from(n), 0.0), k));
                dev = dev.max((hi - lo - step).norm() / step.norm().max(1.0));
            }
        }
        s.push("power sum telescopes in n", 1e-8, dev);
    }

    // odd-exponent closed form vs exact big-integer brute force, wide
    {
        let mut dev: f64 = 0.0;
        for &m in &[1u32, 3, 5, 7, 9] {
            for n in 1..=50u32 {
                let exact = faulhaber_bernoulli_odd_exact(m, n).unwrap();
                let mut brute = BigInt::from(0);
                for j in 1..=n {
                    brute += BigInt::from(j).pow(m);
                }
                if exact != BigRational::from(brute) {
                    dev = f64::INFINITY;
                }
            }
        }
        s.push("odd-exponent closed form exact to n = 50", 0.0, dev);
    }

    // zeta classical sanity grid
    {
        let mut dev: f64 = 0.0;
        for m in 1..=5u32 {
            dev = dev.max(ev(zeta_global(cx(-2.0 * f64::from(m), 0.0), cfg)).norm());
        }
        dev = dev.max(rel(ev(zeta_global(cx(2.0, 0.0), cfg)), cx(ZETA_2, 0.0)));
        dev = dev.max((ev(zeta_global(cx(-1.0, 0.0), cfg)).re + 1.0 / 12.0).abs());
        s.push("zeta trivial zeros and classical points", 1e-9, dev);
        let dev0 = (ev(zeta_global(cx(0.0, 0.0), cfg)) + cx(0.5, 0.0)).norm();
        s.push("zeta at zero is exactly -1/2", 1e-12, dev0);
    }

    // representation agreement across half-planes
    {
        let ims = [0.0f64, 1.0, -1.0, 3.0, -3.0];
        let mut dev: f64 = 0.0;
        for &re in &[1.5f64, 2.0, 3.0, 5.0] {
            for &im in &ims {
                let k = cx(re, im);
                dev = dev.max(rel(ev(zeta_strip_pos(k, cfg)), ev(zeta_global(k, cfg))));
            }
        }
        for &re in &[-0.5f64, -2.5, -4.0] {
            for &im in &ims {
                let k = cx(re, im);
                dev = dev.max(rel(ev(zeta_strip_neg(k, cfg)), ev(zeta_global(k, cfg))));
            }
        }
        s.push("zeta representation agreement grids", 1e-8, dev);
    }

    // reflection route against the global route across the pole's mirror
    {
        let mut dev: f64 = 0.0;
        for &k in &[0.5f64, 1.0, 2.0, 3.0, 4.5] {
            let kc = cx(k, 0.0);
            dev = dev.max(rel(ev(zeta_functional(kc, cfg)), ev(zeta_global(-kc, cfg))));
        }
        s.push("zeta reflection route consistency grid", 1e-8, dev);
    }

    // critical strip versus the independent series oracle
    {
        let pts = [
            cx(0.1, 3.0),
            cx(0.2, -2.0),
            cx(0.3, 1.0),
            cx(0.4, -3.0),
            cx(0.5, 0.5),
            cx(0.5, -1.5),
            cx(0.6, 2.5),
            cx(0.7, -0.5),
            cx(0.8, 1.5),
            cx(0.9, -2.5),
        ];
        let mut dev: f64 = 0.0;
        for &k in &pts {
            dev = dev.max(rel(ev(zeta_global(k, cfg)), ev_c(zeta_reference(k))));
        }
        s.push("zeta critical strip ten-point oracle grid", 1e-8, dev);
    }

    // wider oracle sweep across the window
    {
        let mut dev: f64 = 0.0;
        for i in 0..8 {
            let re = -5.0 + 10.0 * (f64::from(i) / 7.0);
            for &im in &[-5.0f64, -2.0, 0.5, 2.0, 5.0] {
                let k: Complex<f64> = cx(re, im);
                if (k - cx(1.0, 0.0)).norm() < 0.1 {
                    continue;
                }
                dev = dev.max(rel(ev(zeta_global(k, cfg)), ev_c(zeta_reference(k))));
            }
        }
        s.push("zeta forty-point oracle sweep", 1e-8, dev);
    }

    // three-form tail identity on the declared grid
    {
        let mut dev: f64 = 0.0;
        for &k in &[cx(2.0, 0.0), cx(3.0, 0.0), cx(4.0, 0.0), cx(2.5, 1.0)] {
            for &n in &[cx(1.0, 0.0), cx(2.0, 0.0), cx(1.0, 1.0)] {
                let tr = ev(zeta_even_tail(k, n, TailForm::Trig, cfg));
                let ra = ev(zeta_even_tail(k, n, TailForm::Rational, cfg));
                let scale = tr.norm().max(1e-3);
                dev = dev.max((tr - ra).norm() / scale);
                if k.im == 0.0 && k.re.fract() == 0.0 {
                    let fs = ev(zeta_even_tail(k, n, TailForm::FiniteSum, cfg));
                    dev = dev.max((fs - ra).norm() / scale);
                }
            }
        }
        s.push("even-zeta tail identity grid", 1e-9, dev);
    }

    // hurwitz negative-integer grid
    {
        let mut dev: f64 = 0.0;
        for m in 0..=5u32 {
            for &b in &[cx(0.4, 0.0), cx(1.0, 0.0), cx(2.5, 0.0), cx(1.0, 1.0)] {
                let closed = ev_c(hurwitz_neg_int(m, b));
                let global = ev(hurwitz_global(cx(-f64::from(m), 0.0), b, cfg));
                dev = dev.max((global - closed).norm() / closed.norm().max(1.0));
            }
        }
        s.push("hurwitz negative-integer grid", 1e-9, dev);
    }

    // hurwitz recurrence grid and gauss multiplication
    {
        let mut dev: f64 = 0.0;
        for &k in &[cx(2.0, 0.0), cx(-1.5, 0.0), cx(1.5, 1.0)] {
            for &b in &[cx(0.3, 0.0), cx(1.0, 0.0), cx(2.0, 1.0)] {
                let lo = ev(hurwitz_global(k, b, cfg));
                let hi = ev(hurwitz_global(k, b + cx(1.0, 0.0), cfg));
                let step = ev_c(cpow(b, -k));
                dev = dev.max((lo - hi - step).norm() / step.norm().max(1.0));
            }
        }
        s.push("hurwitz recurrence grid", 1e-8, dev);

        let mut dev: f64 = 0.0;
        for &k in &[cx(2.0, 0.0), cx(2.5, 0.0)] {
            for &b in &[cx(0.4, 0.0), cx(1.0, 0.0)] {
                let lhs =
                    ev(hurwitz_global(k, b, cfg)) + ev(hurwitz_global(k, b + cx(0.5, 0.0), cfg));
                let rhs =
                    ev_c(cpow(cx(2.0, 0.0), k)) * ev(hurwitz_global(k, b * cx(2.0, 0.0), cfg));
                dev = dev.max(rel(lhs, rhs));
            }
        }
        s.push("hurwitz two-term multiplication theorem", 1e-8, dev);
    }

    // harmonic progression exhaustive grid, both evaluators
    {
        let mut dev: f64 = 0.0;
        for k in -3..=5i32 {
            if k == -1 {
                continue;
            }
            let kc = cx(f64::from(k), 0.0);
            for &b in &[cx(0.3, 0.0), cx(1.0, 0.0), cx(2.0, 0.5)] {
                for n in 1..=15u32 {
                    let oracle1 = ev_c(hp_bruteforce(kc, b, n, 1));
                    dev = dev.max(rel(ev(hp_sum_ac(kc, b, n, cfg)), oracle1));
                    let oracle0 = ev_c(hp_bruteforce(kc, b, n, 0));
                    dev = dev.max(rel(ev(hp_sum_hurwitz(kc, b, n, cfg)), oracle0));
                }
            }
        }
        s.push("harmonic progression integer grid, both routes", 1e-9, dev);
    }

    // bridge identity grid
    {
        let mut dev: f64 = 0.0;
        for &k in &[cx(2.0, 0.0), cx(0.5, 0.0), cx(-3.0, 0.0)] {
            for &n in &[1u32, 5, 10] {
                let lhs = ev(powersum_ac(k, n, cfg));
                let rhs = ev(zeta_global(-k, cfg))
                    - ev(hurwitz_global(-k, cx(f64::from(n) + 1.0, 0.0), cfg));
                dev = dev.max(rel(lhs, rhs));
            }
        }
        s.push("bridge identity grid", 1e-8, dev);
    }

    s.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes_at_defaults() {
        let results = run_quick(&Cfg::default());
        assert!(results.len() >= 25, "only {} checks", results.len());
        for r in &results {
            assert!(
                r.passed,
                "{} failed: deviation {:.3e} > tolerance {:.3e}",
                r.name, r.max_deviation, r.tolerance
            );
        }
    }

    #[test]
    fn quick_suite_fails_when_tolerances_are_gutted() {
        let cfg = Cfg {
            rel_tol: 1e-2,
            abs_tol: 1e-4,
            ..Cfg::default()
        };
        let results = run_quick(&cfg);
        let failures = results.iter().filter(|r| !r.passed).count();
        assert!(failures >= 3, "expected several failures, got {failures}");
    }
}
