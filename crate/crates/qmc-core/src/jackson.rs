//! Truncated Jackson-integral transforms.
//!
//! The transform of a solution `Y` of a q-difference system is the
//! bilateral sum over the lattice `s = q^n xi` of
//! `(1-q) P_lambda(x,s) s Y(s) / (s - b_i)`, one component per pole `b_i`
//! (with `b_0 = 0`).  The finite window `n in [trunc_lo, trunc_hi]`
//! satisfies an exact identity involving a boundary term, which the tests
//! check directly; the adaptive driver widens the window on each side until
//! the terms are negligible.

use crate::qseries;
use crate::qsystems::SolutionFn;
use crate::{c_power, BranchPolicy, QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;

/// Which solution of the kernel shift identity
/// `P(qx,s) = P(x,s/q) = ((x - q^lambda s)/(x - s)) P(x,s)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum KernelChoice {
    /// `P(x,s) = (q^{lambda+1} s/x; q)_inf / (q s/x; q)_inf`.
    Standard,
    /// `P(x,s) = (x/s)^lambda (x/s; q)_inf / (q^{-lambda} x/s; q)_inf`.
    Alternative,
}

/// Parameters of a truncated transform.
#[derive(Clone, Debug)]
pub struct JacksonConfig {
    pub kernel: KernelChoice,
    pub lambda: Complex64,
    pub xi: Complex64,
    /// Lower window index `K`.
    pub trunc_lo: i64,
    /// Upper window index `L`.
    pub trunc_hi: i64,
}

/// Check that `t` is not on the lattice `q^{-n}`, `n >= 0`, where the
/// denominator Pochhammer of the kernel vanishes.
fn check_lattice(ctx: &QContext, t: Complex64) -> Result<()> {
    let mut v = t;
    for _ in 0..ctx.n_max {
        if v.norm() < 0.5 {
            return Ok(());
        }
        if (ONE - v).norm() < 1e-10 * (1.0 + v.norm()) {
            return Err(QError::KernelPole);
        }
        v *= ctx.q;
    }
    Ok(())
}

/// Evaluate the kernel `P_lambda(x, s)`.
pub fn kernel_p(
    ctx: &QContext,
    kernel: KernelChoice,
    lambda: Complex64,
    x: Complex64,
    s: Complex64,
) -> Result<Complex64> {
    match kernel {
        KernelChoice::Standard => {
            let t = ctx.q * s / x;
            check_lattice(ctx, t)?;
            Ok(qseries::poch_ratio(ctx, &[ctx.q_power(lambda) * t], &[t])?)
        }
        KernelChoice::Alternative => {
            let u = x / s;
            let t = ctx.q_power(-lambda) * u;
            check_lattice(ctx, t)?;
            Ok(c_power(BranchPolicy::PrincipalLog, u, lambda)?
                * qseries::poch_ratio(ctx, &[u], &[t])?)
        }
    }
}

/// A single term of the transform at `s = q^n xi`; exactly-zero values of
/// `Y` short-circuit to 0 before the kernel or the pole `b_i` is touched,
/// because one-sided sums rely on that vanishing.
fn term(
    ctx: &QContext,
    cfg: &JacksonConfig,
    y: &SolutionFn,
    pole_index: usize,
    b_i: Complex64,
    x: Complex64,
    n: i64,
) -> Result<Complex64> {
    let s = ctx.q_power(crate::c(n as f64)) * cfg.xi;
    let ys = y.eval(ctx, s)?;
    if ys == ZERO {
        return Ok(ZERO);
    }
    // For the origin block (b_i = 0) the factor s cancels the denominator,
    // so only nonzero poles can collide with the sample lattice.
    if b_i != ZERO && (s - b_i).norm() < 1e-12 * (s.norm() + b_i.norm()).max(1.0) {
        return Err(QError::SampleAtPole(pole_index));
    }
    let p = kernel_p(ctx, cfg.kernel, cfg.lambda, x, s)?;
    Ok(p * s * ys / (s - b_i))
}

/// Windowed transform
/// `(1-q) sum_{n=K}^{L} P(x, q^n xi) q^n xi Y(q^n xi) / (q^n xi - b_i)`.
pub fn yhat_partial(
    ctx: &QContext,
    cfg: &JacksonConfig,
    y: &SolutionFn,
    pole_index: usize,
    b_i: Complex64,
    x: Complex64,
) -> Result<Complex64> {
    let mut sum = ZERO;
    for n in cfg.trunc_lo..=cfg.trunc_hi {
        sum += term(ctx, cfg, y, pole_index, b_i, x, n)?;
    }
    Ok((ONE - ctx.q) * sum)
}

/// Boundary term of the finite-window identity:
/// `P(x, q^{K-1} xi) Y(q^K xi) - P(x, q^L xi) Y(q^{L+1} xi)`.
pub fn boundary_q(
    ctx: &QContext,
    cfg: &JacksonConfig,
    y: &SolutionFn,
    x: Complex64,
) -> Result<Complex64> {
    let s_lo = ctx.q_power(crate::c((cfg.trunc_lo - 1) as f64)) * cfg.xi;
    let s_hi = ctx.q_power(crate::c(cfg.trunc_hi as f64)) * cfg.xi;
    let y_lo = y.eval(ctx, ctx.q * s_lo)?;
    let y_hi = y.eval(ctx, ctx.q * s_hi)?;
    let lo = if y_lo == ZERO {
        ZERO
    } else {
        kernel_p(ctx, cfg.kernel, cfg.lambda, x, s_lo)? * y_lo
    };
    let hi = if y_hi == ZERO {
        ZERO
    } else {
        kernel_p(ctx, cfg.kernel, cfg.lambda, x, s_hi)? * y_hi
    };
    Ok(lo - hi)
}

/// Diagnostics from the adaptive driver.
#[derive(Clone, Debug)]
pub struct JacksonDiag {
    pub n_lo: i64,
    pub n_hi: i64,
    /// Magnitude of the last term examined on each side.
    pub last_term_lo: f64,
    pub last_term_hi: f64,
    /// Boundary term magnitude at the final window.
    pub boundary_abs: f64,
}

/// Adaptive bilateral sum: widen the window from `n = 0` in both directions
/// until `w_consec` consecutive terms fall below `eps_term` relative to the
/// running sum on that side.
pub fn jackson_adaptive(
    ctx: &QContext,
    kernel: KernelChoice,
    lambda: Complex64,
    xi: Complex64,
    y: &SolutionFn,
    pole_index: usize,
    b_i: Complex64,
    x: Complex64,
) -> Result<(Complex64, JacksonDiag)> {
    let mut cfg = JacksonConfig {
        kernel,
        lambda,
        xi,
        trunc_lo: 0,
        trunc_hi: 0,
    };
    let mut sum = ZERO;
    let mut last_hi;
    let mut last_lo;

    let mut small = 0usize;
    let mut n = 0i64;
    loop {
        let t = term(ctx, &cfg, y, pole_index, b_i, x, n)?;
        sum += t;
        last_hi = t.norm();
        if last_hi <= ctx.eps_term * sum.norm().max(1e-300) {
            small += 1;
            if small >= ctx.w_consec {
                break;
            }
        } else {
            small = 0;
        }
        n += 1;
        if n as usize > ctx.n_max {
            return Err(QError::BudgetExceeded(ctx.n_max));
        }
    }
    cfg.trunc_hi = n;

    small = 0;
    n = -1;
    loop {
        let t = term(ctx, &cfg, y, pole_index, b_i, x, n)?;
        sum += t;
        last_lo = t.norm();
        if last_lo <= ctx.eps_term * sum.norm().max(1e-300) {
            small += 1;
            if small >= ctx.w_consec {
                break;
            }
        } else {
            small = 0;
        }
        n -= 1;
        if (-n) as usize > ctx.n_max {
            return Err(QError::BudgetExceeded(ctx.n_max));
        }
    }
    cfg.trunc_lo = n;

    let boundary = boundary_q(ctx, &cfg, y, x)?;
    Ok((
        (ONE - ctx.q) * sum,
        JacksonDiag {
            n_lo: cfg.trunc_lo,
            n_hi: cfg.trunc_hi,
            last_term_lo: last_lo,
            last_term_hi: last_hi,
            boundary_abs: boundary.norm(),
        },
    ))
}

/// Convergence gates for the transforms, mirroring the sufficient
/// conditions of the underlying estimates.
#[derive(Clone, Debug)]
pub enum ConvergenceGate {
    /// `y(s) = s^mu prod (alpha_j s;q)_inf / (beta_j s;q)_inf`:
    /// needs `mu > 0` and `|q|^{nu-mu} |prod alpha / prod beta| < 1`
    /// with `nu = lambda`.
    ProductForm {
        mu: f64,
        lambda: f64,
        alphas: Vec<Complex64>,
        betas: Vec<Complex64>,
    },
    /// Resonant regime `mu = 0` with a one-sided lattice:
    /// needs `|q^lambda prod alpha / prod beta| < 1`.
    Resonant {
        lambda: f64,
        alphas: Vec<Complex64>,
        betas: Vec<Complex64>,
    },
    /// Exponent gate for the second-degree variants:
    /// needs `lambda + k1 - k2 > 0`.
    ExponentGate { lambda: f64, k1: f64, k2: f64 },
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ConvergenceCondition {
    pub label: String,
    pub satisfied: bool,
    /// Positive margin means the condition holds with room to spare.
    pub margin: f64,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ConvergenceReport {
    pub conditions: Vec<ConvergenceCondition>,
    pub ok: bool,
}

pub fn check_convergence(ctx: &QContext, gate: &ConvergenceGate) -> ConvergenceReport {
    let qa = ctx.q.norm();
    let ratio = |alphas: &[Complex64], betas: &[Complex64]| -> f64 {
        let num: f64 = alphas.iter().map(|a| a.norm()).product();
        let den: f64 = betas.iter().map(|b| b.norm()).product();
        num / den
    };
    let mut conditions = Vec::new();
    match gate {
        ConvergenceGate::ProductForm {
            mu,
            lambda,
            alphas,
            betas,
        } => {
            conditions.push(ConvergenceCondition {
                label: "mu > 0".into(),
                satisfied: *mu > 0.0,
                margin: *mu,
            });
            let v = qa.powf(lambda - mu) * ratio(alphas, betas);
            conditions.push(ConvergenceCondition {
                label: "|q|^(lambda-mu) |prod alpha / prod beta| < 1".into(),
                satisfied: v < 1.0,
                margin: 1.0 - v,
            });
        }
        ConvergenceGate::Resonant {
            lambda,
            alphas,
            betas,
        } => {
            let v = qa.powf(*lambda) * ratio(alphas, betas);
            conditions.push(ConvergenceCondition {
                label: "|q^lambda prod alpha / prod beta| < 1".into(),
                satisfied: v < 1.0,
                margin: 1.0 - v,
            });
        }
        ConvergenceGate::ExponentGate { lambda, k1, k2 } => {
            let v = lambda + k1 - k2;
            conditions.push(ConvergenceCondition {
                label: "lambda + k1 - k2 > 0".into(),
                satisfied: v > 0.0,
                margin: v,
            });
        }
    }
    let ok = conditions.iter().all(|c| c.satisfied);
    ConvergenceReport { conditions, ok }
}
