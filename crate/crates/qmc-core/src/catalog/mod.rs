//! Catalog of concrete q-difference equations and their closed-form
//! solutions, organised by family:
//!
//! * [`qhg`] — the q-hypergeometric equation obtained by convolving a rank-1
//!   system with one pole.
//! * [`jp`] — the q-Jordan-Pochhammer system with `N` poles and its
//!   bilateral-series solutions.
//! * [`deg2`] — the second-degree variant equation (three finite
//!   singularities `t_1`, `t_2`, `infinity`) and its quotient realisation.
//! * [`deg2m`] — the rank-drop case where the shift eigenspace is
//!   one-dimensional, with power and theta non-homogeneous terms.
//! * [`deg3`] — the third-degree variant (singularities `t_1,t_2,t_3`).
//! * [`registry`] — enumerates ready-to-verify (equation, solution) cases
//!   with their convergence gates.
//!
//! Solutions are stored as data ([`PhiSolution`], [`BilateralSeries`])
//! rather than ad-hoc closures so the same evaluator — and the same pole
//! handling — serves every family.

use crate::qseries;
use crate::qsystems::SolutionFn;
use crate::{c, c_power, BranchPolicy, QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;

pub mod deg2;
pub mod deg2m;
pub mod deg3;
pub mod jp;
pub mod qhg;
pub mod registry;

/// A monomial argument `coeff * x^p`; every Pochhammer / series argument in
/// the catalog has this shape with `p` in {-1, 0, 1}.
#[derive(Clone, Copy, Debug)]
pub struct Arg {
    pub coeff: Complex64,
    pub x_power: i32,
}

impl Arg {
    pub fn new(coeff: Complex64, x_power: i32) -> Self {
        Arg { coeff, x_power }
    }

    /// Constant argument.
    pub fn k(coeff: Complex64) -> Self {
        Arg::new(coeff, 0)
    }

    pub fn value(&self, x: Complex64) -> Result<Complex64> {
        if self.x_power < 0 && x == ZERO {
            return Err(QError::ZeroBase);
        }
        Ok(self.coeff * x.powi(self.x_power))
    }
}

/// Whether `(a;q)_inf` vanishes, i.e. `a` lies on the lattice `q^{-m}`,
/// `m >= 0`, up to a relative tolerance.  Used to snap product solutions to
/// exact zero so that one-sided bilateral sums terminate cleanly.
pub fn poch_vanishes(ctx: &QContext, a: Complex64) -> bool {
    lattice_level(ctx, a).is_some()
}

/// The `m >= 0` with `a = q^{-m}` (up to tolerance), if any: the number of
/// downward q-steps from `a` to 1.
pub fn lattice_level(ctx: &QContext, a: Complex64) -> Option<i64> {
    let mut v = a;
    for m in 0..ctx.n_max as i64 {
        if v.norm() < 0.5 {
            return None;
        }
        if (ONE - v).norm() < 1e-10 * (1.0 + v.norm()) {
            return Some(m);
        }
        v *= ctx.q;
    }
    None
}

/// Closed-form solution
/// `coeff * x^e * prod (n_j;q)_inf / prod (d_j;q)_inf * phi(u; l; q, z)`
/// where every argument is a monomial in `x`.
#[derive(Clone, Debug)]
pub struct PhiSolution {
    pub id: String,
    pub coeff: Complex64,
    pub x_exponent: Complex64,
    pub poch_num: Vec<Arg>,
    pub poch_den: Vec<Arg>,
    pub upper: Vec<Arg>,
    pub lower: Vec<Arg>,
    pub z: Arg,
}

impl PhiSolution {
    pub fn solution(&self) -> SolutionFn {
        let s = self.clone();
        SolutionFn::new(self.id.clone(), move |ctx, x| s.eval(ctx, x))
    }

    pub fn eval(&self, ctx: &QContext, x: Complex64) -> Result<Complex64> {
        let num: Vec<Complex64> = self
            .poch_num
            .iter()
            .map(|a| a.value(x))
            .collect::<Result<_>>()?;
        let den: Vec<Complex64> = self
            .poch_den
            .iter()
            .map(|a| a.value(x))
            .collect::<Result<_>>()?;
        let v = self.coeff
            * c_power(BranchPolicy::PrincipalLog, x, self.x_exponent)?
            * qseries::poch_ratio(ctx, &num, &den)?;
        let upper: Vec<Complex64> = self
            .upper
            .iter()
            .map(|a| a.value(x))
            .collect::<Result<_>>()?;
        let lower: Vec<Complex64> = self
            .lower
            .iter()
            .map(|a| a.value(x))
            .collect::<Result<_>>()?;
        Ok(v * qseries::phi(ctx, &upper, &lower, self.z.value(x)?)?)
    }
}

/// Base product solution `s^mu prod (alpha_j s;q)_inf / (beta_j s;q)_inf`
/// with exact-zero snapping on the lattice where a numerator factor
/// vanishes.
pub fn product_solution(id: impl Into<String>, mu: f64, alphas: &[f64], betas: &[f64]) -> SolutionFn {
    let alphas = alphas.to_vec();
    let betas = betas.to_vec();
    SolutionFn::new(id, move |ctx, s| {
        for &a in &alphas {
            if poch_vanishes(ctx, c(a) * s) {
                return Ok(ZERO);
            }
        }
        let num: Vec<Complex64> = alphas.iter().map(|&a| c(a) * s).collect();
        let den: Vec<Complex64> = betas.iter().map(|&b| c(b) * s).collect();
        let v = c_power(BranchPolicy::PrincipalLog, s, c(mu))?;
        Ok(v * qseries::poch_ratio(ctx, &num, &den)?)
    })
}

/// Inverted-argument product solution
/// `s^{mu'} prod (q/(beta_j s);q)_inf / (q/(alpha_j s);q)_inf`, the second
/// solution of the same rank-1 system, used with the alternative kernel.
pub fn inverted_product_solution(
    id: impl Into<String>,
    mu_prime: f64,
    alphas: &[f64],
    betas: &[f64],
) -> SolutionFn {
    let alphas = alphas.to_vec();
    let betas = betas.to_vec();
    SolutionFn::new(id, move |ctx, s| {
        for &b in &betas {
            if poch_vanishes(ctx, ctx.q / (c(b) * s)) {
                return Ok(ZERO);
            }
        }
        let num: Vec<Complex64> = betas.iter().map(|&b| ctx.q / (c(b) * s)).collect();
        let den: Vec<Complex64> = alphas.iter().map(|&a| ctx.q / (c(a) * s)).collect();
        let v = c_power(BranchPolicy::PrincipalLog, s, c(mu_prime))?;
        Ok(v * qseries::poch_ratio(ctx, &num, &den)?)
    })
}

/// Bilateral series
/// `prefactor * sum_n (q^n xi)^mu prod (n_j q^n;q)_inf / prod (d_j q^n;q)_inf`
/// where `n_j`, `d_j` are the factor arguments at `n = 0` (they may depend
/// on the outer variable `x`; every factor shifts by one power of `q` per
/// step).  Summed adaptively in both directions.
#[derive(Clone, Debug)]
pub struct BilateralSeries {
    pub id: String,
    pub prefactor: Complex64,
    pub mu: f64,
    pub xi: Complex64,
    pub num: Vec<Arg>,
    pub den: Vec<Arg>,
}

impl BilateralSeries {
    pub fn solution(&self) -> SolutionFn {
        let s = self.clone();
        SolutionFn::new(self.id.clone(), move |ctx, x| s.eval(ctx, x))
    }

    fn term(&self, ctx: &QContext, x: Complex64, n: i64) -> Result<Complex64> {
        let qn = ctx.q_power(c(n as f64));
        let mut num = ONE;
        for a in &self.num {
            num *= qseries::poch_inf(ctx, a.value(x)? * qn)?;
        }
        let mut den = ONE;
        for a in &self.den {
            let p = qseries::poch_inf(ctx, a.value(x)? * qn)?;
            if p.norm() < 1e-250 {
                return Err(QError::AtPole(x));
            }
            den *= p;
        }
        let head = c_power(BranchPolicy::PrincipalLog, qn * self.xi, c(self.mu))?;
        Ok(head * num / den)
    }

    /// Sum by term-ratio recursion: one anchor term is evaluated directly,
    /// every other term follows from
    /// `t(n+1) = t(n) * q^mu * prod(1 - d_j q^n) / prod(1 - c_j q^n)`.
    /// Absolute Pochhammer products at `n -> -inf` overflow long before the
    /// terms themselves get small, so the recursion is the only stable route
    /// down.  The anchor is placed just above the highest numerator lattice
    /// zero, which also makes one-sided specialisations terminate exactly.
    pub fn eval(&self, ctx: &QContext, x: Complex64) -> Result<Complex64> {
        let cs: Vec<Complex64> = self.num.iter().map(|a| a.value(x)).collect::<Result<_>>()?;
        let ds: Vec<Complex64> = self.den.iter().map(|a| a.value(x)).collect::<Result<_>>()?;
        // Terms with any numerator factor on the zero lattice vanish; the
        // support starts one level above the highest such zero.
        let mut n0 = 0i64;
        for &cv in &cs {
            if let Some(k) = lattice_level(ctx, cv) {
                n0 = n0.max(k + 1);
            }
        }
        let head_up = ctx.q_powf(self.mu);
        let anchor = self.term(ctx, x, n0)?;
        let mut sum = anchor;
        // Upward: n0, n0+1, ...
        let mut t = anchor;
        let mut n = n0;
        let mut small = 0usize;
        loop {
            let mut ratio = head_up;
            let qn = ctx.q_power(c(n as f64));
            for &dv in &ds {
                ratio *= ONE - dv * qn;
            }
            for &cv in &cs {
                let f = ONE - cv * qn;
                if f.norm() < 1e-12 * (1.0 + (cv * qn).norm()) {
                    return Err(QError::AtPole(x));
                }
                ratio /= f;
            }
            t *= ratio;
            n += 1;
            sum += t;
            if t.norm() <= ctx.eps_term * sum.norm().max(1e-300) {
                small += 1;
                if small >= ctx.w_consec {
                    break;
                }
            } else {
                small = 0;
            }
            if (n - n0) as usize > ctx.n_max {
                return Err(QError::BudgetExceeded(ctx.n_max));
            }
        }
        // Downward: n0-1, n0-2, ... — empty when the support is one-sided.
        if n0 == 0 {
            t = anchor;
            n = n0;
            small = 0;
            loop {
                let qn = ctx.q_power(c((n - 1) as f64));
                let mut ratio = ONE / head_up;
                let mut dead = false;
                for &cv in &cs {
                    let f = ONE - cv * qn;
                    if f.norm() < 1e-12 * (1.0 + (cv * qn).norm()) {
                        dead = true;
                    }
                    ratio *= f;
                }
                if dead {
                    break;
                }
                for &dv in &ds {
                    let f = ONE - dv * qn;
                    if f.norm() < 1e-12 * (1.0 + (dv * qn).norm()) {
                        return Err(QError::AtPole(x));
                    }
                    ratio /= f;
                }
                t *= ratio;
                n -= 1;
                sum += t;
                if t.norm() <= ctx.eps_term * sum.norm().max(1e-300) {
                    small += 1;
                    if small >= ctx.w_consec {
                        break;
                    }
                } else {
                    small = 0;
                }
                if (-n) as usize > ctx.n_max {
                    return Err(QError::BudgetExceeded(ctx.n_max));
                }
            }
        }
        Ok(self.prefactor * sum)
    }
}
