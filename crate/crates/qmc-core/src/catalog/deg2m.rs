//! Resonant second-degree family: the 2-pole rank-1 system with
//! `q^lambda = q^mu b1 b2/(a1 a2)`, where the shift eigenspace of the
//! convolved tuple drops rank and the quotient is 2x2.
//!
//! The first quotient component satisfies a second-order equation with
//! three non-homogeneous shapes: none (base points on the vanishing
//! lattice), a pure power `x^{lambda+1}` (alternative-kernel base points),
//! and a theta-quotient boundary term (generic base point `xi`).

use crate::catalog::jp::JpParams;
use crate::catalog::{Arg, BilateralSeries, PhiSolution};
use crate::jackson::ConvergenceGate;
use crate::qlinalg::CMatrix;
use crate::qsystems::{NonHom, Poly, ScalarQDE, ThetaArg};
use crate::{c, QContext, QError, Result, ONE, ZERO};

/// Non-homogeneous shapes of the resonant second-order equation.
#[derive(Clone, Copy, Debug)]
pub enum Deg2mNonhom {
    Homogeneous,
    /// `+ q(1-q)(1-q^lambda)/a1 * x^{lambda+1}`.
    PowerStyle,
    /// `+ (q^2 (1-q)(1-q^lambda)/(a1 a2)) xi^mu
    ///  theta(q^{lambda+1} xi/x) theta(xi a1) theta(xi a2/q)
    ///  / (theta(xi/x) theta(xi b1) theta(xi b2))`.
    ThetaStyle { xi: f64 },
}

#[derive(Clone, Copy, Debug)]
pub struct Deg2m {
    pub mu: f64,
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
}

impl Deg2m {
    /// `lambda = mu + log_q(b1 b2/(a1 a2))`, the resonance exponent.
    pub fn lambda(&self, ctx: &QContext) -> f64 {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        self.mu + ((b1 * b2) / (a1 * a2)).ln() / ctx.log_q.re
    }

    pub fn jp_params(&self) -> Result<JpParams> {
        JpParams::new(self.mu, self.alpha.to_vec(), self.beta.to_vec())
    }

    /// Fixture: the completion matrix whose last column spans the rank-drop
    /// eigenvector `(1,1,1)`.
    pub fn p_fixture() -> CMatrix {
        CMatrix::from_real_rows(&[
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 1.0],
        ])
    }

    /// Expected 2x2 quotient tuple (in the differenced components).
    pub fn expected_reduced_tuple(&self, ctx: &QContext) -> Result<(CMatrix, CMatrix, CMatrix)> {
        let jp = self.jp_params()?;
        let b1 = jp.b_k(ctx, 0);
        let b2 = jp.b_k(ctx, 1);
        let ql = ctx.q_powf(self.lambda(ctx));
        let z = ZERO;
        let f1 = CMatrix::from_rows(&[vec![b1 - (ONE - ql), b2], vec![z, z]]);
        let f2 = CMatrix::from_rows(&[vec![z, z], vec![b1, b2 - (ONE - ql)]]);
        Ok((CMatrix::identity(2), f1, f2))
    }

    /// The second-order equation with the selected non-homogeneous term.
    pub fn equation(&self, ctx: &QContext, nonhom: Deg2mNonhom) -> Result<ScalarQDE> {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let qm1 = ctx.q_powf(self.mu + 1.0);
        let aa = c(a1 * a2);
        let c_m1 = Poly::from_roots(ONE, &[qm1 * c(b1) / aa, qm1 * c(b2) / aa]);
        let c_p1 = Poly::from_roots(q, &[c(1.0 / a1), q / c(a2)]);
        let c_0 = Poly(vec![
            (ONE + c(b1 * b2) / aa) * qm1 * q / aa,
            -(qm1 * c(b1 + b2) / aa + q / c(a1) + q * q / c(a2)),
            ONE + q,
        ])
        .scale(-ONE);
        let nh = match nonhom {
            Deg2mNonhom::Homogeneous => NonHom::None,
            Deg2mNonhom::PowerStyle => NonHom::Power {
                coeff: q * (ONE - q) * (ONE - ctx.q_powf(lam)) / c(a1),
                exponent: c(lam + 1.0),
            },
            Deg2mNonhom::ThetaStyle { xi } => {
                if xi <= 0.0 {
                    return Err(QError::ConfigError("theta base point must be positive".into()));
                }
                NonHom::Theta {
                    coeff: q * q * (ONE - q) * (ONE - ctx.q_powf(lam)) / aa
                        * c(xi.powf(self.mu)),
                    exponent: ZERO,
                    num: vec![
                        ThetaArg::new(ctx.q_powf(lam + 1.0) * c(xi), -1),
                        ThetaArg::new(c(xi * a1), 0),
                        ThetaArg::new(c(xi * a2) / q, 0),
                    ],
                    den: vec![
                        ThetaArg::new(c(xi), -1),
                        ThetaArg::new(c(xi * b1), 0),
                        ThetaArg::new(c(xi * b2), 0),
                    ],
                    offset: 0.0,
                }
            }
        };
        Ok(ScalarQDE::new(
            "deg2m-comp1",
            vec![-1, 1, 0],
            vec![c_m1, c_p1, c_0],
            nh,
        ))
    }

    /// Bilateral solution at generic `xi > 0`; converges for `mu > 0` and
    /// satisfies the ThetaStyle equation at the same `xi`.
    pub fn bilateral(&self, ctx: &QContext, xi: f64) -> BilateralSeries {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        BilateralSeries {
            id: "deg2m-bilateral".into(),
            prefactor: ctx.q - ONE,
            mu: self.mu,
            xi: c(xi),
            num: vec![
                Arg::new(ctx.q_powf(self.lambda(ctx) + 1.0) * c(xi), -1),
                Arg::k(ctx.q * c(a1 * xi)),
                Arg::k(c(a2 * xi)),
            ],
            den: vec![
                Arg::new(ctx.q * c(xi), -1),
                Arg::k(c(b1 * xi)),
                Arg::k(c(b2 * xi)),
            ],
        }
    }

    /// Homogeneous solution at base point `1/a1` (`mu > 0`).
    pub fn sol_base_inv_a1(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: "deg2m-xi-1/a1".into(),
            coeff: (q - ONE) * c(a1.powf(-self.mu)),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a1), -1),
                Arg::k(q),
                Arg::k(c(a2 / a1)),
            ],
            poch_den: vec![
                Arg::new(q / c(a1), -1),
                Arg::k(c(b1 / a1)),
                Arg::k(c(b2 / a1)),
            ],
            upper: vec![
                Arg::new(q / c(a1), -1),
                Arg::k(c(b1 / a1)),
                Arg::k(c(b2 / a1)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a1), -1),
                Arg::k(c(a2 / a1)),
            ],
            z: Arg::k(ctx.q_powf(self.mu)),
        }
    }

    /// Homogeneous solution at base point `1/a2` (`mu > 0`).
    pub fn sol_base_inv_a2(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: "deg2m-xi-1/a2".into(),
            coeff: (q - ONE) * ctx.q_powf(self.mu) * c(a2.powf(-self.mu)),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + 2.0) / c(a2), -1),
                Arg::k(q * q * c(a1 / a2)),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q * q / c(a2), -1),
                Arg::k(q * c(b1 / a2)),
                Arg::k(q * c(b2 / a2)),
            ],
            upper: vec![
                Arg::new(q * q / c(a2), -1),
                Arg::k(q * c(b1 / a2)),
                Arg::k(q * c(b2 / a2)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + 2.0) / c(a2), -1),
                Arg::k(q * q * c(a1 / a2)),
            ],
            z: Arg::k(ctx.q_powf(self.mu)),
        }
    }

    /// Homogeneous solution at the moving base point `q^{-lambda} x`
    /// (`mu > 0`).
    pub fn sol_base_qlam_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let qml = ctx.q_powf(-lam);
        PhiSolution {
            id: "deg2m-xi-q^-lam*x".into(),
            coeff: (q - ONE) * ctx.q_powf(-lam * self.mu),
            x_exponent: c(self.mu),
            poch_num: vec![
                Arg::k(q),
                Arg::new(q * qml * c(a1), 1),
                Arg::new(qml * c(a2), 1),
            ],
            poch_den: vec![
                Arg::k(q * qml),
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
            ],
            upper: vec![
                Arg::k(q * qml),
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
            ],
            lower: vec![Arg::new(q * qml * c(a1), 1), Arg::new(qml * c(a2), 1)],
            z: Arg::k(ctx.q_powf(self.mu)),
        }
    }

    /// PowerStyle solution at base point `1/b1` (or `1/b2` with `swap`).
    pub fn sol_alt_inv_b(&self, ctx: &QContext, swap: bool) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let (b1, b2) = if swap {
            (self.beta[1], self.beta[0])
        } else {
            (self.beta[0], self.beta[1])
        };
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: if swap {
                "deg2m-alt-1/b2".into()
            } else {
                "deg2m-alt-1/b1".into()
            },
            coeff: (ONE - q) * c(b1 / a1),
            x_exponent: c(lam),
            poch_num: vec![Arg::new(c(b1), 1), Arg::k(q), Arg::k(q * c(b1 / b2))],
            poch_den: vec![
                Arg::new(ctx.q_powf(-lam) * c(b1), 1),
                Arg::k(c(b1 / a1)),
                Arg::k(q * c(b1 / a2)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(-lam) * c(b1), 1),
                Arg::k(c(b1 / a1)),
                Arg::k(q * c(b1 / a2)),
            ],
            lower: vec![Arg::new(c(b1), 1), Arg::k(q * c(b1 / b2))],
            z: Arg::k(q),
        }
    }

    /// PowerStyle solution at the moving base point `x`.
    pub fn sol_alt_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: "deg2m-alt-x".into(),
            coeff: (ONE - q) * q / c(a1),
            x_exponent: c(lam - 1.0),
            poch_num: vec![
                Arg::k(q),
                Arg::new(q * q / c(b1), -1),
                Arg::new(q * q / c(b2), -1),
            ],
            poch_den: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q * q / c(a2), -1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            upper: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q * q / c(a2), -1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            lower: vec![Arg::new(q * q / c(b1), -1), Arg::new(q * q / c(b2), -1)],
            z: Arg::k(q),
        }
    }

    /// Gate: the bilateral transform needs `mu > 0` (the two tail ratios
    /// are `q^mu` and `q^{lambda-mu+1} a1 a2/(b1 b2) = q`).
    /// This family sits exactly on the resonance boundary
    /// `q^{lambda-mu} = prod beta / prod alpha`, so the product-form margin
    /// is identically zero; the meaningful condition is the resonant one,
    /// whose value reduces to `q^mu < 1`.
    pub fn gate(&self, ctx: &QContext) -> ConvergenceGate {
        ConvergenceGate::Resonant {
            lambda: self.lambda(ctx),
            alphas: self.alpha.iter().map(|&a| c(a)).collect(),
            betas: self.beta.iter().map(|&b| c(b)).collect(),
        }
    }
}

/// Variant parameters for the inverted-variable form of the resonant
/// equation; maps to [`Deg2m`] raw coordinates (real `q`).
#[derive(Clone, Copy, Debug)]
pub struct Deg2mVar {
    pub h: [f64; 2],
    pub l: [f64; 2],
    pub k: [f64; 2],
    pub t: [f64; 2],
}

impl Deg2mVar {
    pub fn lambda(&self) -> f64 {
        (self.h[0] + self.h[1] - self.l[0] - self.l[1] - self.k[0] + self.k[1] + 1.0) / 2.0
    }

    /// `mu = lambda + k1 - k2`.
    pub fn mu(&self) -> f64 {
        self.lambda() + self.k[0] - self.k[1]
    }

    /// Raw map: `a1 = q^{h1+1/2} t1`, `a2 = q^{h2+3/2} t2`,
    /// `b_i = q^{lambda+l_i+1/2} t_i`.
    pub fn raw_params(&self, q: f64) -> Deg2m {
        let lam = self.lambda();
        Deg2m {
            mu: self.mu(),
            alpha: [
                q.powf(self.h[0] + 0.5) * self.t[0],
                q.powf(self.h[1] + 1.5) * self.t[1],
            ],
            beta: [
                q.powf(lam + self.l[0] + 0.5) * self.t[0],
                q.powf(lam + self.l[1] + 0.5) * self.t[1],
            ],
        }
    }

    /// The inverted-variable equation satisfied by `f(z) = z^{-mu}
    /// gbar(1/z)` where `gbar` solves the raw homogeneous equation:
    /// `(z - a1)(z - a2/q) f(z/q)
    ///  + (b1 b2/(a1 a2)) (z - q^{-mu-1} a1 a2/b1)(z - q^{-mu-1} a1 a2/b2) f(qz)
    ///  - [(1 + b1 b2/(a1 a2)) z^2
    ///     - (q^{-1}(b1+b2) + q^{-mu} a1 + q^{-mu-1} a2) z
    ///     + q^{-mu-2}(q+1) a1 a2] f(z)`.
    pub fn inverted_equation(&self, ctx: &QContext, q: f64) -> ScalarQDE {
        let raw = self.raw_params(q);
        let [a1, a2] = raw.alpha;
        let [b1, b2] = raw.beta;
        let mu = raw.mu;
        let qc = ctx.q;
        let ratio = c(b1 * b2 / (a1 * a2));
        let c_m1 = Poly::from_roots(ONE, &[c(a1), c(a2) / qc]);
        let c_p1 = Poly::from_roots(
            ratio,
            &[
                ctx.q_powf(-mu - 1.0) * c(a1 * a2 / b1),
                ctx.q_powf(-mu - 1.0) * c(a1 * a2 / b2),
            ],
        );
        let c_0 = Poly(vec![
            ctx.q_powf(-mu - 2.0) * (qc + ONE) * c(a1 * a2),
            -(c(b1 + b2) / qc + ctx.q_powf(-mu) * c(a1) + ctx.q_powf(-mu - 1.0) * c(a2)),
            ONE + ratio,
        ])
        .scale(-ONE);
        ScalarQDE::new(
            "deg2m-inverted",
            vec![-1, 1, 0],
            vec![c_m1, c_p1, c_0],
            NonHom::None,
        )
    }
}
