//! The q-Jordan-Pochhammer family: the rank-1 system with `N` simple poles
//! `1/alpha_k` whose product solution is
//! `y(s) = s^mu prod_j (alpha_j s;q)_inf / (beta_j s;q)_inf`.
//!
//! Convolving it yields an `(N+1) x (N+1)` tuple; the transform components
//! are bilateral series which this module provides both through the
//! adaptive kernel transform and as explicit [`BilateralSeries`] data, so
//! the two evaluations can be cross-checked.

use crate::catalog::{inverted_product_solution, product_solution, Arg, BilateralSeries};
use crate::jackson::{self, ConvergenceGate, KernelChoice};
use crate::qlinalg::CMatrix;
use crate::qsystems::{SolutionFn, SystemSpec};
use crate::{c, QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct JpParams {
    pub mu: f64,
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl JpParams {
    pub fn new(mu: f64, alphas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if alphas.is_empty() || alphas.len() != betas.len() {
            return Err(QError::DimensionMismatch(
                "need matching, nonempty alpha/beta lists".into(),
            ));
        }
        for (i, &a) in alphas.iter().enumerate() {
            for &a2 in &alphas[..i] {
                if (a - a2).abs() < 1e-12 * a.abs() {
                    return Err(QError::DegenerateParameters(format!(
                        "coalescing alphas near {a}"
                    )));
                }
            }
        }
        Ok(JpParams { mu, alphas, betas })
    }

    pub fn n_poles(&self) -> usize {
        self.alphas.len()
    }

    /// `B_inf = q^mu prod beta / prod alpha`.
    pub fn b_inf(&self, ctx: &QContext) -> Complex64 {
        let pa: f64 = self.alphas.iter().product();
        let pb: f64 = self.betas.iter().product();
        ctx.q_powf(self.mu) * c(pb / pa)
    }

    /// Residue scalar at the pole `1/alpha_k`:
    /// `B_k = q^mu ((alpha_k - beta_k)/alpha_k) prod_{j != k}
    ///        (alpha_k - beta_j)/(alpha_k - alpha_j)`.
    pub fn b_k(&self, ctx: &QContext, k: usize) -> Complex64 {
        let ak = self.alphas[k];
        let mut v = (ak - self.betas[k]) / ak;
        for j in 0..self.n_poles() {
            if j != k {
                v *= (ak - self.betas[j]) / (ak - self.alphas[j]);
            }
        }
        ctx.q_powf(self.mu) * c(v)
    }

    pub fn system(&self, ctx: &QContext) -> Result<SystemSpec> {
        let b = (0..self.n_poles())
            .map(|k| CMatrix::from_rows(&[vec![self.b_k(ctx, k)]]))
            .collect();
        let poles = self.alphas.iter().map(|&a| c(1.0 / a)).collect();
        SystemSpec::new(CMatrix::from_rows(&[vec![self.b_inf(ctx)]]), b, poles)
    }

    pub fn base_solution(&self) -> SolutionFn {
        product_solution("jp-base", self.mu, &self.alphas, &self.betas)
    }

    /// Exponent of the inverted product solution:
    /// `q^{mu'} prod alpha / prod beta = q^mu`.
    pub fn mu_prime(&self, ctx: &QContext) -> f64 {
        let pa: f64 = self.alphas.iter().product();
        let pb: f64 = self.betas.iter().product();
        self.mu - (pa / pb).ln() / ctx.log_q.re
    }

    pub fn alt_base_solution(&self, ctx: &QContext) -> SolutionFn {
        inverted_product_solution("jp-alt-base", self.mu_prime(ctx), &self.alphas, &self.betas)
    }

    /// Convergence gate for the standard-kernel transform of the product
    /// solution.
    pub fn gate(&self, lambda: f64) -> ConvergenceGate {
        ConvergenceGate::ProductForm {
            mu: self.mu,
            lambda,
            alphas: self.alphas.iter().map(|&a| c(a)).collect(),
            betas: self.betas.iter().map(|&b| c(b)).collect(),
        }
    }

    /// Transform component `k` (`k = 0` is the origin component, `k >= 1`
    /// the pole `1/alpha_k`), evaluated by the adaptive kernel sum.
    pub fn transform_component(
        &self,
        kernel: KernelChoice,
        lambda: f64,
        xi: f64,
        k: usize,
    ) -> SolutionFn {
        let y = match kernel {
            KernelChoice::Standard => self.base_solution(),
            // The inverted solution needs mu'; rebuild per-call from ctx is
            // not possible, so capture the params and build lazily.
            KernelChoice::Alternative => {
                let p = self.clone();
                SolutionFn::new("jp-alt-base-lazy", move |ctx: &QContext, s| {
                    p.alt_base_solution(ctx).eval(ctx, s)
                })
            }
        };
        let pole = if k == 0 {
            ZERO
        } else {
            c(1.0 / self.alphas[k - 1])
        };
        SolutionFn::new(format!("jp-transform-{k}"), move |ctx: &QContext, x| {
            let (v, _) = jackson::jackson_adaptive(ctx, kernel, c(lambda), c(xi), &y, k, pole, x)?;
            Ok(v)
        })
    }

    /// Explicit bilateral series for the origin component:
    /// `(1-q) sum_n (q^n xi)^mu (q^{lambda+n+1} xi/x;q)_inf
    ///  prod_j (q^n alpha_j xi;q)_inf /
    ///  ((q^{n+1} xi/x;q)_inf prod_j (q^n beta_j xi;q)_inf)`.
    pub fn bilateral_component0(&self, ctx: &QContext, lambda: f64, xi: f64) -> BilateralSeries {
        let mut num = vec![Arg::new(ctx.q_powf(lambda + 1.0) * c(xi), -1)];
        num.extend(self.alphas.iter().map(|&a| Arg::k(c(a * xi))));
        let mut den = vec![Arg::new(ctx.q * c(xi), -1)];
        den.extend(self.betas.iter().map(|&b| Arg::k(c(b * xi))));
        BilateralSeries {
            id: "jp-bilateral-0".into(),
            prefactor: ONE - ctx.q,
            mu: self.mu,
            xi: c(xi),
            num,
            den,
        }
    }

    /// Explicit bilateral series for the pole component `k >= 1`: the slot
    /// `k` numerator factor is advanced by one extra power of `q` and the
    /// head exponent is `mu + 1`.
    pub fn bilateral_component_k(
        &self,
        ctx: &QContext,
        lambda: f64,
        xi: f64,
        k: usize,
    ) -> BilateralSeries {
        let mut num = vec![Arg::new(ctx.q_powf(lambda + 1.0) * c(xi), -1)];
        for (j, &a) in self.alphas.iter().enumerate() {
            let coeff = if j + 1 == k { ctx.q * c(a * xi) } else { c(a * xi) };
            num.push(Arg::k(coeff));
        }
        let mut den = vec![Arg::new(ctx.q * c(xi), -1)];
        den.extend(self.betas.iter().map(|&b| Arg::k(c(b * xi))));
        BilateralSeries {
            id: format!("jp-bilateral-{k}"),
            prefactor: (ctx.q - ONE) * c(self.alphas[k - 1]),
            mu: self.mu + 1.0,
            xi: c(xi),
            num,
            den,
        }
    }
}
