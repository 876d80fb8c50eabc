//! The q-hypergeometric family: convolving the rank-1 system with residue
//! `q^mu (1 - beta/alpha)` at the pole `1/alpha` produces a 2x2 tuple whose
//! components satisfy variants of the standard second-order
//! q-hypergeometric equation
//! `(x - q) g(x/q) + (a b x - c) g(qx) - ((a+b) x - q - c) g(x) = 0`.
//!
//! This module provides the rank-1 system, its product solutions, the two
//! scalar equations satisfied by the transform components, and a catalog of
//! closed-form series solutions covering both kernels and all three base
//! points `1/alpha`, `q^{-lambda} x` and their limits.

use crate::catalog::{Arg, PhiSolution};
use crate::qlinalg::CMatrix;
use crate::qseries;
use crate::qsystems::{NonHom, Poly, ScalarQDE, SolutionFn, SystemSpec};
use crate::{c, c_power, BranchPolicy, QContext, Result, ONE};
use num_complex::Complex64;

/// Parameters of the rank-1 input system and the shift `lambda`.
#[derive(Clone, Copy, Debug)]
pub struct QhgParams {
    pub mu: f64,
    pub lambda: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl QhgParams {
    /// The 1x1 system `y(qx) = (q^mu beta/alpha + q^mu(1-beta/alpha)/(1-alpha x)) y(x)`.
    pub fn system(&self, ctx: &QContext) -> Result<SystemSpec> {
        let qm = ctx.q_powf(self.mu);
        let r = c(self.beta / self.alpha);
        SystemSpec::new(
            CMatrix::from_rows(&[vec![qm * r]]),
            vec![CMatrix::from_rows(&[vec![qm * (ONE - r)]])],
            vec![c(1.0 / self.alpha)],
        )
    }

    /// Product solution `s^mu (alpha s;q)_inf / (beta s;q)_inf`.
    pub fn base_solution(&self) -> SolutionFn {
        crate::catalog::product_solution("qhg-base", self.mu, &[self.alpha], &[self.beta])
    }

    /// Exponent of the second product solution:
    /// `q^{mu'} alpha/beta = q^mu`.
    pub fn mu_prime(&self, ctx: &QContext) -> f64 {
        self.mu - (self.alpha / self.beta).ln() / ctx.log_q.re
    }

    /// Second solution `s^{mu'} (q/(beta s);q)_inf / (q/(alpha s);q)_inf`,
    /// paired with the alternative kernel.
    pub fn alt_base_solution(&self, ctx: &QContext) -> SolutionFn {
        crate::catalog::inverted_product_solution(
            "qhg-alt-base",
            self.mu_prime(ctx),
            &[self.alpha],
            &[self.beta],
        )
    }

    /// Expected convolved residue matrix at the pole (2x2).
    pub fn expected_f1(&self, ctx: &QContext) -> CMatrix {
        let qm = ctx.q_powf(self.mu);
        let ql = ctx.q_powf(self.lambda);
        let b1 = qm * (ONE - c(self.beta / self.alpha));
        CMatrix::from_rows(&[vec![c(0.0), c(0.0)], vec![ONE - qm, b1 - ONE + ql]])
    }

    /// Expected convolved matrix at infinity (2x2).
    pub fn expected_f_inf(&self, ctx: &QContext) -> CMatrix {
        let qm = ctx.q_powf(self.mu);
        let b1 = qm * (ONE - c(self.beta / self.alpha));
        CMatrix::from_rows(&[vec![qm, -b1], vec![-(ONE - qm), ONE - b1]])
    }

    /// Second-order equation for the 0-component of the transform:
    /// `(x - q^{lambda+1}/beta) f(x/q) + q^{-mu} beta^{-1} (alpha x - q) f(qx)
    ///  - ((q^{-mu} alpha/beta + 1) x - q beta^{-1} (1 + q^{lambda-mu})) f(x) = 0`.
    pub fn component0_equation(&self, ctx: &QContext) -> ScalarQDE {
        let (a, b) = (self.alpha, self.beta);
        let qml = ctx.q_powf(self.lambda + 1.0);
        let qmm = ctx.q_powf(-self.mu);
        let c_m1 = Poly::from_roots(ONE, &[qml / c(b)]);
        let c_p1 = Poly(vec![-ctx.q * qmm / c(b), qmm * c(a / b)]);
        let c_0 = Poly(vec![
            ctx.q * (ONE + ctx.q_powf(self.lambda - self.mu)) / c(b),
            -(qmm * c(a / b) + ONE),
        ]);
        ScalarQDE::new("qhg-comp0", vec![-1, 1, 0], vec![c_m1, c_p1, c_0], NonHom::None)
    }

    /// Second-order equation for the pole component of the transform; it
    /// differs from the 0-component equation only by `q -> 1` in two spots.
    pub fn component1_equation(&self, ctx: &QContext) -> ScalarQDE {
        let (a, b) = (self.alpha, self.beta);
        let qml = ctx.q_powf(self.lambda + 1.0);
        let qmm = ctx.q_powf(-self.mu);
        let c_m1 = Poly::from_roots(ONE, &[qml / c(b)]);
        let c_p1 = Poly(vec![-qmm / c(b), qmm * c(a / b)]);
        let c_0 = Poly(vec![
            (ctx.q + ctx.q_powf(self.lambda - self.mu)) / c(b),
            -(qmm * c(a / b) + ONE),
        ]);
        ScalarQDE::new("qhg-comp1", vec![-1, 1, 0], vec![c_m1, c_p1, c_0], NonHom::None)
    }

    /// Solution with base point `1/alpha` (standard kernel):
    /// `(1-q) alpha^{-mu} q^mu (q^{lambda+2}/(alpha x);q)_inf (q;q)_inf /
    ///  ((q^2/(alpha x);q)_inf (q beta/alpha;q)_inf) * phi21(..., q^mu)`.
    pub fn sol_xi_inv_alpha(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        PhiSolution {
            id: "qhg-xi-1/alpha".into(),
            coeff: c((1.0 - q.re) * a.powf(-self.mu)) * ctx.q_powf(self.mu),
            x_exponent: c(0.0),
            poch_num: vec![
                Arg::new(ctx.q_powf(self.lambda + 2.0) / c(a), -1),
                Arg::k(q),
            ],
            poch_den: vec![Arg::new(q * q / c(a), -1), Arg::k(q * c(b / a))],
            upper: vec![Arg::new(q * q / c(a), -1), Arg::k(q * c(b / a))],
            lower: vec![Arg::new(ctx.q_powf(self.lambda + 2.0) / c(a), -1)],
            z: Arg::k(ctx.q_powf(self.mu)),
        }
    }

    /// Solution with base point `q^{-lambda} x` (standard kernel).
    pub fn sol_xi_qlam_x(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        let ql = ctx.q_powf(-self.lambda);
        PhiSolution {
            id: "qhg-xi-q^-lam*x".into(),
            coeff: (ONE - q) * ctx.q_powf(-self.lambda * self.mu),
            x_exponent: c(self.mu),
            poch_num: vec![Arg::new(ql * c(a), 1), Arg::k(q)],
            poch_den: vec![Arg::new(ql * c(b), 1), Arg::k(ctx.q_powf(1.0 - self.lambda))],
            upper: vec![Arg::new(ql * c(b), 1), Arg::k(ctx.q_powf(1.0 - self.lambda))],
            lower: vec![Arg::new(ql * c(a), 1)],
            z: Arg::k(ctx.q_powf(self.mu)),
        }
    }

    /// Limit solution with base point `1/beta` (standard kernel, argument
    /// `q^{lambda-mu} alpha/beta`).
    pub fn sol_limit_inv_beta(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        PhiSolution {
            id: "qhg-lim-1/beta".into(),
            coeff: c((1.0 - q.re) * b.powf(-self.mu)),
            x_exponent: c(0.0),
            poch_num: vec![
                Arg::new(ctx.q_powf(self.lambda + 1.0) / c(b), -1),
                Arg::k(c(a / b)),
            ],
            poch_den: vec![Arg::new(q / c(b), -1), Arg::k(q)],
            upper: vec![
                Arg::new(ctx.q_powf(-self.lambda) * c(b), 1),
                Arg::k(q * c(b / a)),
            ],
            lower: vec![Arg::new(c(b), 1)],
            z: Arg::k(ctx.q_powf(self.lambda - self.mu) * c(a / b)),
        }
    }

    /// Limit solution with base point `x` (standard kernel).
    pub fn sol_limit_x(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        PhiSolution {
            id: "qhg-lim-x".into(),
            coeff: (ONE - q) * ctx.q_powf(-self.mu),
            x_exponent: c(self.mu),
            poch_num: vec![Arg::new(c(a) / q, 1), Arg::k(ctx.q_powf(self.lambda))],
            poch_den: vec![Arg::new(c(b) / q, 1), Arg::k(q)],
            upper: vec![
                Arg::new(q * q / c(a), -1),
                Arg::k(ctx.q_powf(1.0 - self.lambda)),
            ],
            lower: vec![Arg::new(q * q / c(b), -1)],
            z: Arg::k(ctx.q_powf(self.lambda - self.mu) * c(a / b)),
        }
    }

    /// Alternative-kernel solution with base point `1/beta`.
    pub fn sol_alt_inv_beta(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        let mp = self.mu_prime(ctx);
        PhiSolution {
            id: "qhg-alt-1/beta".into(),
            coeff: c((1.0 - q.re) * b.powf(self.lambda - mp)),
            x_exponent: c(self.lambda),
            poch_num: vec![Arg::new(c(b), 1), Arg::k(q)],
            poch_den: vec![
                Arg::new(ctx.q_powf(-self.lambda) * c(b), 1),
                Arg::k(q * c(b / a)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(-self.lambda) * c(b), 1),
                Arg::k(q * c(b / a)),
            ],
            lower: vec![Arg::new(c(b), 1)],
            z: Arg::k(ctx.q_powf(self.lambda - self.mu) * c(a / b)),
        }
    }

    /// Alternative-kernel solution with base point `x`.
    pub fn sol_alt_x(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        let mp = self.mu_prime(ctx);
        PhiSolution {
            id: "qhg-alt-x".into(),
            coeff: (ONE - q) * ctx.q_powf(self.lambda - self.mu) * c(a / b),
            x_exponent: c(mp),
            poch_num: vec![Arg::new(q * q / c(b), -1), Arg::k(q)],
            poch_den: vec![
                Arg::new(q * q / c(a), -1),
                Arg::k(ctx.q_powf(1.0 - self.lambda)),
            ],
            upper: vec![
                Arg::new(q * q / c(a), -1),
                Arg::k(ctx.q_powf(1.0 - self.lambda)),
            ],
            lower: vec![Arg::new(q * q / c(b), -1)],
            z: Arg::k(ctx.q_powf(self.lambda - self.mu) * c(a / b)),
        }
    }

    /// The base-point-`1/alpha` solution rewritten as a series in `1/x` via
    /// the transformation
    /// `phi21(a,b;c;q,z) = (b,az;q)_inf/(c,z;q)_inf phi21(c/b,z;az;q,b)`;
    /// valid for large `|x|` and equal to `sol_xi_inv_alpha` where both
    /// converge.
    pub fn sol_local_at_infinity(&self, ctx: &QContext) -> PhiSolution {
        let (a, b) = (self.alpha, self.beta);
        let q = ctx.q;
        PhiSolution {
            id: "qhg-local-inf".into(),
            coeff: c((1.0 - q.re) * a.powf(-self.mu)) * ctx.q_powf(self.mu),
            x_exponent: c(0.0),
            poch_num: vec![
                Arg::k(q),
                Arg::k(ctx.q_powf(self.mu + 1.0) * c(b / a)),
            ],
            poch_den: vec![Arg::k(q * c(b / a)), Arg::k(ctx.q_powf(self.mu))],
            upper: vec![
                Arg::k(ctx.q_powf(self.lambda)),
                Arg::k(ctx.q_powf(self.mu)),
            ],
            lower: vec![Arg::k(ctx.q_powf(self.mu + 1.0) * c(b / a))],
            z: Arg::new(q * q / c(a), -1),
        }
    }

    /// Ratio of the two kernel-family prefactors at base point `1/beta`;
    /// invariant under `x -> qx`, so it is a pseudo-constant of the lattice.
    pub fn pseudo_constant_beta(&self) -> SolutionFn {
        let b = self.beta;
        let lam = self.lambda;
        SolutionFn::new("qhg-pseudo-const-beta", move |ctx: &QContext, x| {
            let std_pref = qseries::poch_inf(ctx, ctx.q_powf(lam + 1.0) / (c(b) * x))?
                / qseries::poch_inf(ctx, ctx.q / (c(b) * x))?;
            let alt_pref = c_power(BranchPolicy::PrincipalLog, x, c(lam))?
                * qseries::poch_inf(ctx, c(b) * x)?
                / qseries::poch_inf(ctx, ctx.q_powf(-lam) * c(b) * x)?;
            Ok(std_pref / alt_pref)
        })
    }
}

/// Standard-form q-hypergeometric relation
/// `(x - q) g(x/q) + (a b x - c) g(qx) - ((a+b) x - q - c) g(x) = 0`.
pub fn standard_qhg_equation(
    ctx: &QContext,
    a: Complex64,
    b: Complex64,
    cc: Complex64,
) -> ScalarQDE {
    let c_m1 = Poly(vec![-ctx.q, ONE]);
    let c_p1 = Poly(vec![-cc, a * b]);
    let c_0 = Poly(vec![ctx.q + cc, -(a + b)]);
    ScalarQDE::new("qhg-standard", vec![-1, 1, 0], vec![c_m1, c_p1, c_0], NonHom::None)
}

/// Standard-form parameters `(a, b, c)` satisfied by the 0-component when
/// `q^lambda = beta`.
pub fn standard_params_comp0(ctx: &QContext, p: &QhgParams) -> (Complex64, Complex64, Complex64) {
    (
        ctx.q_powf(-p.mu) * c(p.alpha),
        c(p.beta),
        ctx.q_powf(-p.mu + 1.0) * c(p.beta),
    )
}

/// Standard-form parameters for the pole component when `q^lambda = beta`.
pub fn standard_params_comp1(ctx: &QContext, p: &QhgParams) -> (Complex64, Complex64, Complex64) {
    (
        ctx.q_powf(-p.mu) * c(p.alpha),
        c(p.beta),
        ctx.q_powf(-p.mu) * c(p.beta),
    )
}
