//! Oracle values and algebraic invariants for the q-series primitives.
//!
//! The frozen constants were computed with an independent 30-digit
//! arbitrary-precision implementation of the same defining products and
//! sums; they pin the evaluators to more digits than the working tolerance
//! so regressions in truncation logic show up immediately.

use num_complex::Complex64;
use proptest::prelude::*;
use qmc_core::{c_power, qseries, BranchPolicy, QContext};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ctx(q: f64) -> QContext {
    QContext::real(q).unwrap()
}

#[test]
fn poch_inf_frozen_value() {
    let v = qseries::poch_inf(&ctx(0.5), c(0.5)).unwrap();
    assert!((v - c(0.28878809508660242128)).norm() < 1e-15);
}

#[test]
fn theta_frozen_value() {
    let v = qseries::theta(&ctx(0.5), c(0.3)).unwrap();
    assert!((v - c(-0.0060903882320135465688)).norm() < 1e-15);
}

#[test]
fn phi21_frozen_value() {
    let v = qseries::phi21(&ctx(0.5), c(0.3), c(0.7), c(0.45), c(0.1)).unwrap();
    assert!((v - c(1.08441423954274714528)).norm() < 1e-14);
}

#[test]
fn c_power_frozen_values() {
    let p = c_power(BranchPolicy::RealPositiveOnly, c(0.5), c(2.5)).unwrap();
    assert!((p - c(0.17677669529663688110)).norm() < 1e-16);
    let p = c_power(BranchPolicy::PrincipalLog, c(2.0), c(1.3)).unwrap();
    assert!((p - c(2.46228882668983256903)).norm() < 1e-15);
}

#[test]
fn c_power_branch_policy_rejects_off_axis() {
    assert!(c_power(BranchPolicy::RealPositiveOnly, c(-1.0), c(0.5)).is_err());
    assert!(c_power(BranchPolicy::RealPositiveOnly, Complex64::new(1.0, 0.4), c(0.5)).is_err());
    assert!(c_power(BranchPolicy::PrincipalLog, Complex64::new(1.0, 0.4), c(0.5)).is_ok());
}

proptest! {
    /// `(a;q)_inf = (1 - a)(aq;q)_inf`.
    #[test]
    fn poch_inf_functional_equation(
        re in -0.9f64..0.9,
        im in -0.9f64..0.9,
        q in 0.1f64..0.9,
    ) {
        let ctx = ctx(q);
        let a = Complex64::new(re, im);
        let lhs = qseries::poch_inf(&ctx, a).unwrap();
        let rhs = (c(1.0) - a) * qseries::poch_inf(&ctx, ctx.q * a).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
    }

    /// `(a;q)_{n+1} = (a;q)_n (1 - a q^n)` and the `n < 0` convention
    /// `(a;q)_{-n} = 1 / (a q^{-n};q)_n`.
    #[test]
    fn poch_finite_recursion(
        a in -2.0f64..2.0,
        q in 0.1f64..0.9,
        n in 0i64..12,
    ) {
        let ctx = ctx(q);
        let pn = qseries::poch_finite(&ctx, c(a), n).unwrap();
        let pn1 = qseries::poch_finite(&ctx, c(a), n + 1).unwrap();
        prop_assert!((pn1 - pn * (c(1.0) - c(a) * ctx.q_powf(n as f64))).norm() < 1e-12 * (1.0 + pn.norm()));
        if let Ok(pm) = qseries::poch_finite(&ctx, c(a), -n) {
            let shifted = qseries::poch_finite(&ctx, c(a) * ctx.q_powf(-(n as f64)), n).unwrap();
            prop_assert!((pm * shifted - c(1.0)).norm() < 1e-10);
        }
    }

    /// `theta(q t) = -theta(t)/t`.
    #[test]
    fn theta_quasi_periodicity(
        t in 0.05f64..3.0,
        q in 0.15f64..0.85,
    ) {
        let ctx = ctx(q);
        let lhs = qseries::theta(&ctx, ctx.q * c(t)).unwrap();
        let rhs = -qseries::theta(&ctx, c(t)).unwrap() / c(t);
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
    }

    /// `theta(q a x)/theta(q b x) = (b/a) theta(a x)/theta(b x)`.
    #[test]
    fn theta_scaling_identity(
        a in 0.2f64..2.0,
        b in 0.2f64..2.0,
        x in 0.3f64..1.7,
        q in 0.2f64..0.8,
    ) {
        let ctx = ctx(q);
        let th = |v: f64| qseries::theta(&ctx, c(v)).unwrap();
        let lhs = th(q * a * x) / th(q * b * x);
        let rhs = c(b / a) * th(a * x) / th(b * x);
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
    }

    /// The interleaved ratio agrees with the plain quotient of symbols on
    /// moderate arguments.
    #[test]
    fn poch_ratio_matches_quotient(
        a in -1.5f64..1.5,
        b in -1.5f64..1.5,
        q in 0.2f64..0.8,
    ) {
        let ctx = ctx(q);
        let den_sym = qseries::poch_inf(&ctx, c(b)).unwrap();
        prop_assume!(den_sym.norm() > 1e-6);
        let r = qseries::poch_ratio(&ctx, &[c(a)], &[c(b)]).unwrap();
        let direct = qseries::poch_inf(&ctx, c(a)).unwrap() / den_sym;
        prop_assert!((r - direct).norm() < 1e-12 * (1.0 + direct.norm()));
    }
}

/// Regression: ratios of symbols whose individual values overflow `f64`
/// must still come out finite (naive division produces NaN via `norm_sqr`).
#[test]
fn poch_ratio_survives_huge_arguments() {
    let ctx = ctx(0.5);
    for exp in [20, 40, 60, 80] {
        let s = 2f64.powi(exp) * 1.07;
        let r = qseries::poch_ratio(&ctx, &[c(0.6 * s)], &[c(0.85 * s)]).unwrap();
        assert!(r.is_finite(), "ratio not finite at 2^{exp}");
    }
}

/// An upper parameter on the `q^{-m}` lattice terminates the series
/// exactly: the value is a polynomial in `z` and evaluating far outside the
/// unit disk must still succeed.
#[test]
fn phi_terminating_series() {
    let ctx = ctx(0.5);
    let m = 4;
    let a = ctx.q_powf(-(m as f64));
    let v = qseries::phi(&ctx, &[a, c(0.3)], &[c(0.7)], c(50.0)).unwrap();
    assert!(v.is_finite());
    // Degree check: the (m+1)-st term ratio vanishes, so multiplying z by q
    // and unwinding the polynomial recurrence stays consistent.
    let mut direct = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..=m {
        direct += term;
        let qn = ctx.q_powf(n as f64);
        term *= (c(1.0) - a * qn) * (c(1.0) - c(0.3) * qn) * c(50.0)
            / ((c(1.0) - ctx.q * qn) * (c(1.0) - c(0.7) * qn));
    }
    assert!((v - direct).norm() < 1e-10 * direct.norm());
}

/// Lower parameters on the pole lattice are rejected instead of dividing
/// by a vanishing factor.
#[test]
fn phi_rejects_lower_param_pole() {
    let ctx = ctx(0.5);
    let bad = ctx.q_powf(-3.0);
    assert!(qseries::phi(&ctx, &[c(0.3)], &[bad], c(0.2)).is_err());
}
