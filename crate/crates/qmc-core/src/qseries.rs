//! q-Pochhammer symbols, theta functions and basic hypergeometric series.
//!
//! Infinite products are truncated with a certified tail bound: once
//! `|a| |q|^J <= 1/2`, the remaining factors satisfy
//! `|log prod_{j>=J} (1 - a q^j)| <= 2 |a| |q|^J / (1 - |q|)`,
//! so the truncation error is below `eps_tail` in relative terms as soon as
//! that bound is.  Series are summed by term-ratio recursion and stop only
//! after `w_consec` consecutive terms fall below `eps_term` relative to the
//! running sum, which is robust against single accidentally-small terms.

use crate::{QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;

/// Finite q-Pochhammer symbol `(a;q)_n`.
///
/// Negative orders follow `(a;q)_{-n} = 1 / (a q^{-n}; q)_n`, which fails
/// with [`QError::AtPole`] when a factor in the denominator vanishes.
pub fn poch_finite(ctx: &QContext, a: Complex64, n: i64) -> Result<Complex64> {
    if n >= 0 {
        let mut p = ONE;
        let mut aq = a;
        for _ in 0..n {
            p *= ONE - aq;
            aq *= ctx.q;
        }
        Ok(p)
    } else {
        let m = -n;
        let mut p = ONE;
        let mut aq = a * ctx.q.powi(-(m as i32));
        for _ in 0..m {
            let f = ONE - aq;
            if f.norm() == 0.0 {
                return Err(QError::AtPole(aq));
            }
            p *= f;
            aq *= ctx.q;
        }
        Ok(ONE / p)
    }
}

/// Number of factors needed so the tail of `(a;q)_inf` is below `eps_tail`.
fn tail_cutoff(ctx: &QContext, a_abs: f64) -> Result<usize> {
    let qa = ctx.q.norm();
    let mut bound = a_abs;
    for j in 0..=ctx.n_max {
        if bound <= 0.5 && 2.0 * bound / (1.0 - qa) <= ctx.eps_tail {
            return Ok(j);
        }
        bound *= qa;
    }
    Err(QError::BudgetExceeded(ctx.n_max))
}

/// Infinite q-Pochhammer symbol `(a;q)_inf`.
pub fn poch_inf(ctx: &QContext, a: Complex64) -> Result<Complex64> {
    let j_max = tail_cutoff(ctx, a.norm())?;
    let mut p = ONE;
    let mut aq = a;
    for _ in 0..j_max {
        p *= ONE - aq;
        aq *= ctx.q;
    }
    Ok(p)
}

/// Ratio `prod_k (n_k;q)_inf / prod_k (d_k;q)_inf` with the factor products
/// interleaved per power of `q`.  When the arguments are large the separate
/// symbols overflow (and complex division of huge finite values produces
/// NaN via `norm_sqr`), while the ratio itself stays moderate; interleaving
/// keeps the running value near the final ratio.
pub fn poch_ratio(ctx: &QContext, num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    let mut j_max = 0usize;
    for a in num.iter().chain(den) {
        j_max = j_max.max(tail_cutoff(ctx, a.norm())?);
    }
    let mut p = ONE;
    let mut nq = num.to_vec();
    let mut dq = den.to_vec();
    for _ in 0..j_max {
        for v in nq.iter_mut() {
            p *= ONE - *v;
            *v *= ctx.q;
        }
        for v in dq.iter_mut() {
            let f = ONE - *v;
            if f.norm() < 1e-250 {
                return Err(QError::AtPole(*v));
            }
            p /= f;
            *v *= ctx.q;
        }
    }
    Ok(p)
}

/// Product of infinite Pochhammer symbols `prod_k (a_k;q)_inf`.
pub fn poch_inf_multi(ctx: &QContext, args: &[Complex64]) -> Result<Complex64> {
    let mut p = ONE;
    for &a in args {
        p *= poch_inf(ctx, a)?;
    }
    Ok(p)
}

/// Theta function `theta_q(t) = (t;q)_inf (q/t;q)_inf (q;q)_inf`.
///
/// Satisfies the quasi-periodicity `theta_q(q t) = -theta_q(t)/t`.
pub fn theta(ctx: &QContext, t: Complex64) -> Result<Complex64> {
    if t == ZERO {
        return Err(QError::ZeroArgument);
    }
    poch_inf_multi(ctx, &[t, ctx.q / t, ctx.q])
}

/// Check whether `b` sits on the lattice `q^{-n}`, n >= 0, where a lower
/// parameter of a basic hypergeometric series produces a zero denominator.
fn on_pole_lattice(ctx: &QContext, b: Complex64) -> bool {
    let qa = ctx.q.norm();
    let mut bq = b;
    // Only |b q^n| near 1 can collide with 1; walk down until |b q^n| < 1/2.
    for _ in 0..ctx.n_max {
        if bq.norm() < 0.5 {
            return false;
        }
        if (ONE - bq).norm() < 1e-12 * (1.0 + bq.norm()) {
            return true;
        }
        bq *= ctx.q;
        if qa >= 1.0 {
            break;
        }
    }
    false
}

/// Basic hypergeometric series
/// `r+1_phi_r`-style sum with arbitrary numbers of upper and lower
/// parameters:
///
/// `phi(a; b; z) = sum_n (a_1..a_r;q)_n / ((q;q)_n (b_1..b_s;q)_n)
///                 * [(-1)^n q^(n(n-1)/2)]^(1+s-r) z^n`.
///
/// Terminating series (an upper parameter on `q^{-m}`) are cut off exactly;
/// otherwise the sum stops after `w_consec` consecutive negligible terms and
/// errors with [`QError::BudgetExceeded`] if `n_max` is hit first.
pub fn phi(
    ctx: &QContext,
    upper: &[Complex64],
    lower: &[Complex64],
    z: Complex64,
) -> Result<Complex64> {
    for &b in lower {
        if on_pole_lattice(ctx, b) {
            return Err(QError::LowerParamPole(b));
        }
    }
    let extra = 1 + lower.len() as i32 - upper.len() as i32;
    let mut term = ONE;
    let mut sum = ONE;
    let mut qn = ONE; // q^n
    let mut small = 0usize;
    for n in 0..ctx.n_max {
        // ratio t_{n+1}/t_n
        let mut num = ONE;
        for &a in upper {
            let f = ONE - a * qn;
            // Snap near-exact zeros so terminating series truncate cleanly
            // even when q^{-m} carries exp/log round-off.
            num *= if f.norm() < 1e-13 * (1.0 + (a * qn).norm()) {
                ZERO
            } else {
                f
            };
        }
        let mut den = ONE - ctx.q * qn; // (q;q) factor at n+1
        for &b in lower {
            den *= ONE - b * qn;
        }
        let mut ratio = num / den * z;
        if extra != 0 {
            ratio *= (-qn).powi(extra);
        }
        term *= ratio;
        sum += term;
        qn *= ctx.q;
        if !sum.is_finite() {
            return Err(QError::BudgetExceeded(n));
        }
        if term.norm() <= ctx.eps_term * sum.norm().max(1e-300) {
            small += 1;
            if small >= ctx.w_consec {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(QError::BudgetExceeded(ctx.n_max))
}

/// Convenience wrapper for the ubiquitous `2phi1`.
pub fn phi21(
    ctx: &QContext,
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    phi(ctx, &[a, b], &[c], z)
}
