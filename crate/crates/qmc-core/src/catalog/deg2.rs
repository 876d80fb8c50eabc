//! Second-degree variant family.
//!
//! Raw form ([`Deg2Raw`]): the 2-pole rank-1 system with exponent `mu = 0`
//! convolved with shift `lambda` gives a 3x3 tuple; the pole components
//! satisfy second-order scalar equations, and the bilateral transform of
//! the product solution satisfies the non-homogeneous extension with a
//! linear power term.  For general `mu` the pole component satisfies a
//! third-order equation which factors through the second-order one when
//! `mu = 0`.
//!
//! Variant form ([`Deg2Var`]): the same equations in the
//! `(h_i, l_i, k_i, t_i)` parameterisation with singularities at
//! `q^{h_i+1/2} t_i`, related to the raw form by `g(x) = x^{-k2} y1(x)` and
//! the substitution [`Deg2Var::raw_params`].

use crate::catalog::jp::JpParams;
use crate::catalog::{Arg, BilateralSeries, PhiSolution};
use crate::jackson::ConvergenceGate;
use crate::qlinalg::CMatrix;
use crate::qsystems::{NonHom, Poly, QShiftOp, ScalarQDE};
use crate::{c, QContext, Result, ONE, ZERO};
use num_complex::Complex64;

/// Raw parameters; the second-order equations below assume the system
/// exponent `mu = 0` (the rank-drop case), while the third-order equation
/// and the convolved fixtures keep a general `mu`.
#[derive(Clone, Copy, Debug)]
pub struct Deg2Raw {
    pub mu: f64,
    pub lambda: f64,
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
}

impl Deg2Raw {
    pub fn jp_params(&self) -> Result<JpParams> {
        JpParams::new(self.mu, self.alpha.to_vec(), self.beta.to_vec())
    }

    fn b12(&self, ctx: &QContext) -> (Complex64, Complex64) {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let qm = ctx.q_powf(self.mu);
        (
            qm * c((a1 - b1) * (a1 - b2) / (a1 * (a1 - a2))),
            qm * c((a2 - b1) * (a2 - b2) / (a2 * (a2 - a1))),
        )
    }

    /// Expected 3x3 convolved residue matrices and the matrix at infinity.
    pub fn expected_tuple(&self, ctx: &QContext) -> (CMatrix, CMatrix, CMatrix) {
        let (b1, b2) = self.b12(ctx);
        let qm = ctx.q_powf(self.mu);
        let ql = ctx.q_powf(self.lambda);
        let z = ZERO;
        let f1 = CMatrix::from_rows(&[
            vec![z, z, z],
            vec![ONE - qm, b1 - ONE + ql, b2],
            vec![z, z, z],
        ]);
        let f2 = CMatrix::from_rows(&[
            vec![z, z, z],
            vec![z, z, z],
            vec![ONE - qm, b1, b2 - ONE + ql],
        ]);
        let f_inf = CMatrix::from_rows(&[
            vec![qm, -b1, -b2],
            vec![qm - ONE, ONE - b1, -b2],
            vec![qm - ONE, -b1, ONE - b2],
        ]);
        (f_inf, f1, f2)
    }

    /// Expected quotient tuple for `mu = 0` (2x2, in the pole components).
    pub fn expected_reduced_tuple(&self, ctx: &QContext) -> (CMatrix, CMatrix, CMatrix) {
        let (b1, b2) = self.b12(ctx);
        let ql = ctx.q_powf(self.lambda);
        let z = ZERO;
        let f1 = CMatrix::from_rows(&[vec![b1 - ONE + ql, b2], vec![z, z]]);
        let f2 = CMatrix::from_rows(&[vec![z, z], vec![b1, b2 - ONE + ql]]);
        let f_inf = CMatrix::from_rows(&[vec![ONE - b1, -b2], vec![-b1, ONE - b2]]);
        (f_inf, f1, f2)
    }

    /// Second-order operator for the first pole component (`mu = 0`):
    /// `(x - q^{lambda+1}/b1)(x - q^{lambda+1}/b2) f(x/q)
    ///  + (a1 a2 / (b1 b2)) (x - 1/a1)(x - q/a2) f(qx)
    ///  - [(a1 a2/(b1 b2) + 1) x^2
    ///     - (q(1/b1 + 1/b2) + q^lambda (q a1 + a2)/(b1 b2)) x
    ///     + q^{lambda+1}(1+q)/(b1 b2)] f(x)`.
    fn second_order_coeffs(&self, ctx: &QContext, swap: bool) -> Vec<Poly> {
        let (a1, a2) = if swap {
            (self.alpha[1], self.alpha[0])
        } else {
            (self.alpha[0], self.alpha[1])
        };
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let ql = ctx.q_powf(self.lambda);
        let ratio = c(a1 * a2 / (b1 * b2));
        let c_m1 = Poly::from_roots(ONE, &[q * ql / c(b1), q * ql / c(b2)]);
        let c_p1 = Poly::from_roots(ratio, &[c(1.0 / a1), q / c(a2)]);
        let c_0 = Poly(vec![
            q * ql * (ONE + q) / c(b1 * b2),
            -(q * c(1.0 / b1 + 1.0 / b2) + ql * (q * c(a1) + c(a2)) / c(b1 * b2)),
            ratio + ONE,
        ])
        .scale(-ONE);
        vec![c_m1, c_p1, c_0]
    }

    /// Non-homogeneous second-order equation for the first pole component
    /// with the linear power term `-q(1-q)(1-q^lambda) a1/(b1 b2) x`
    /// (`homogeneous = false`), or the homogeneous equation.
    pub fn component1_equation(&self, ctx: &QContext, homogeneous: bool) -> ScalarQDE {
        let nonhom = if homogeneous {
            NonHom::None
        } else {
            NonHom::Power {
                coeff: -ctx.q
                    * (ONE - ctx.q)
                    * (ONE - ctx.q_powf(self.lambda))
                    * c(self.alpha[0] / (self.beta[0] * self.beta[1])),
                exponent: ONE,
            }
        };
        ScalarQDE::new(
            "deg2-comp1",
            vec![-1, 1, 0],
            self.second_order_coeffs(ctx, false),
            nonhom,
        )
    }

    /// Homogeneous second-order equation for the second pole component; it
    /// is the first with the roles of `a1` and `a2` swapped inside the
    /// shifted-root factors.
    pub fn component2_equation(&self, ctx: &QContext) -> ScalarQDE {
        ScalarQDE::new(
            "deg2-comp2",
            vec![-1, 1, 0],
            self.second_order_coeffs(ctx, true),
            NonHom::None,
        )
    }

    /// Third-order operator annihilating the first pole component for
    /// general `mu`, as polynomials in `x` against shifts `0..3`.
    ///
    /// The `x`-linear term of the shift-2 coefficient carries an extra
    /// factor `q` relative to the shift-1 pattern; dropping it breaks the
    /// `mu = 0` factorisation below and the residual checks.
    pub fn third_order_op(&self, ctx: &QContext) -> QShiftOp {
        let [a1, a2] = [c(self.alpha[0]), c(self.alpha[1])];
        let [b1, b2] = [c(self.beta[0]), c(self.beta[1])];
        let q = ctx.q;
        let ql = ctx.q_powf(self.lambda);
        let qm = ctx.q_powf(self.mu);
        let c3 = Poly::from_roots(q * q * q * a1 * a2, &[ONE / (q * q * a1), ONE / (q * a2)]);
        let c2 = Poly(vec![
            qm * q + (q + ONE) * ql,
            -q * (qm * q * (b1 + b2) + (ql + ONE) * (q * a1 + a2)),
            q * q * (qm * q * b1 * b2 + a1 * a2 * (q + ONE)),
        ])
        .scale(-ONE);
        let c1 = Poly(vec![
            ql * q * (qm * (q + ONE) + ql),
            -q * (qm * q * (b1 + b2) * (ql + ONE) + ql * (q * a1 + a2)),
            q * q * (qm * (q + ONE) * b1 * b2 + a1 * a2),
        ]);
        let c0 = Poly::from_roots(-qm * q * q * b1 * b2, &[ql / b1, ql / b2]);
        QShiftOp::new(vec![c0, c1, c2, c3])
    }

    /// Second-order bracket of the `mu = 0` factorisation: the third-order
    /// operator equals `(T - q)` composed on the left of this bracket.
    pub fn factor_bracket(&self, ctx: &QContext) -> QShiftOp {
        let [a1, a2] = [c(self.alpha[0]), c(self.alpha[1])];
        let [b1, b2] = [c(self.beta[0]), c(self.beta[1])];
        let q = ctx.q;
        let ql = ctx.q_powf(self.lambda);
        let t2 = Poly::from_roots(q * a1 * a2, &[ONE / (q * a1), ONE / a2]);
        let t1 = Poly(vec![
            ql * (q + ONE),
            -(q * (b1 + b2) + ql * (q * a1 + a2)),
            q * (b1 * b2 + a1 * a2),
        ])
        .scale(-ONE);
        let t0 = Poly::from_roots(q * b1 * b2, &[ql / b1, ql / b2]);
        QShiftOp::new(vec![t0, t1, t2])
    }

    /// Gate for the bilateral transform at generic base point `xi`.
    pub fn gate(&self) -> ConvergenceGate {
        ConvergenceGate::Resonant {
            lambda: self.lambda,
            alphas: self.alpha.iter().map(|&a| c(a)).collect(),
            betas: self.beta.iter().map(|&b| c(b)).collect(),
        }
    }

    /// Bilateral series for the first pole component:
    /// `(q-1) a1 sum_n q^n xi (q^{lambda+n+1} xi/x, q^{n+1} xi a1,
    ///  q^n xi a2;q)_inf / (q^{n+1} xi/x, q^n xi b1, q^n xi b2;q)_inf`.
    pub fn bilateral_component1(&self, ctx: &QContext, xi: f64) -> BilateralSeries {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        BilateralSeries {
            id: "deg2-bilateral-1".into(),
            prefactor: (ctx.q - ONE) * c(a1),
            mu: 1.0,
            xi: c(xi),
            num: vec![
                Arg::new(ctx.q_powf(self.lambda + 1.0) * c(xi), -1),
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

    /// One-sided solution at base point `1/a1`; satisfies the
    /// non-homogeneous equation without the resonance gate.
    pub fn sol_base_inv_a1(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        PhiSolution {
            id: "deg2-xi-1/a1".into(),
            coeff: q - ONE,
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(self.lambda + 1.0) / c(a1), -1),
                Arg::k(c(a2 / a1)),
                Arg::k(q),
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
                Arg::new(ctx.q_powf(self.lambda + 1.0) / c(a1), -1),
                Arg::k(c(a2 / a1)),
            ],
            z: Arg::k(q),
        }
    }

    /// One-sided solution at base point `1/a2`.
    pub fn sol_base_inv_a2(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        PhiSolution {
            id: "deg2-xi-1/a2".into(),
            coeff: (q - ONE) * q * c(a1 / a2),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(self.lambda + 2.0) / c(a2), -1),
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
                Arg::new(ctx.q_powf(self.lambda + 2.0) / c(a2), -1),
                Arg::k(q * q * c(a1 / a2)),
            ],
            z: Arg::k(q),
        }
    }

    /// One-sided solution at the moving base point `q^{-lambda} x`.
    pub fn sol_base_qlam_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let qml = ctx.q_powf(-self.lambda);
        PhiSolution {
            id: "deg2-xi-q^-lam*x".into(),
            coeff: (q - ONE) * qml * c(a1),
            x_exponent: ONE,
            poch_num: vec![
                Arg::new(q * qml * c(a1), 1),
                Arg::new(qml * c(a2), 1),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
                Arg::k(q * qml),
            ],
            upper: vec![
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
                Arg::k(q * qml),
            ],
            lower: vec![Arg::new(q * qml * c(a1), 1), Arg::new(qml * c(a2), 1)],
            z: Arg::k(q),
        }
    }

    /// Exponent of the inverted product solution, `q^{mu'} a1 a2/(b1 b2) = 1`.
    pub fn mu_prime(&self, ctx: &QContext) -> f64 {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        -((a1 * a2) / (b1 * b2)).ln() / ctx.log_q.re
    }

    /// Alternative-kernel solution at base point `1/b1`; satisfies the
    /// homogeneous second-order equation under the resonance gate.  `swap`
    /// uses `1/b2` instead.
    pub fn sol_alt_inv_b(&self, ctx: &QContext, swap: bool) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let (b1, b2) = if swap {
            (self.beta[1], self.beta[0])
        } else {
            (self.beta[0], self.beta[1])
        };
        let q = ctx.q;
        let z = ctx.q_powf(self.lambda) * c(a1 * a2 / (b1 * b2));
        PhiSolution {
            id: if swap {
                "deg2-alt-1/b2".into()
            } else {
                "deg2-alt-1/b1".into()
            },
            coeff: (ONE - q) * c(b1.powf(self.lambda - self.mu_prime(ctx))),
            x_exponent: c(self.lambda),
            poch_num: vec![Arg::new(c(b1), 1), Arg::k(q), Arg::k(q * c(b1 / b2))],
            poch_den: vec![
                Arg::new(ctx.q_powf(-self.lambda) * c(b1), 1),
                Arg::k(c(b1 / a1)),
                Arg::k(q * c(b1 / a2)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(-self.lambda) * c(b1), 1),
                Arg::k(c(b1 / a1)),
                Arg::k(q * c(b1 / a2)),
            ],
            lower: vec![Arg::new(c(b1), 1), Arg::k(q * c(b1 / b2))],
            z: Arg::k(z),
        }
    }

    /// Alternative-kernel solution at the moving base point `x`.
    pub fn sol_alt_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2] = self.alpha;
        let [b1, b2] = self.beta;
        let q = ctx.q;
        let z = ctx.q_powf(self.lambda) * c(a1 * a2 / (b1 * b2));
        PhiSolution {
            id: "deg2-alt-x".into(),
            coeff: (ONE - q) * z,
            x_exponent: c(self.mu_prime(ctx)),
            poch_num: vec![
                Arg::new(q * q / c(b1), -1),
                Arg::new(q * q / c(b2), -1),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q * q / c(a2), -1),
                Arg::k(ctx.q_powf(1.0 - self.lambda)),
            ],
            upper: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q * q / c(a2), -1),
                Arg::k(ctx.q_powf(1.0 - self.lambda)),
            ],
            lower: vec![Arg::new(q * q / c(b1), -1), Arg::new(q * q / c(b2), -1)],
            z: Arg::k(z),
        }
    }
}

/// Which non-homogeneous term accompanies the variant equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deg2Nonhom {
    Homogeneous,
    /// `+ (1-q^lambda) q^{l1+l2+k1-1} t1 t2 x^{1-k2}`, matched by the
    /// base-point solutions scaled with the prefactor `q^{l_i-1/2} t_i`.
    ThmStyle,
    /// `- (1-q)(1-q^lambda) q^{l2+k1-1/2} t2 x^{1-k2}`, matched by the same
    /// solutions with prefactor `(q-1)` (first base point) or
    /// `(q-1) q^{-lambda-l1+1/2}/t1` (origin); this constant is the
    /// ThmStyle one scaled by `(q-1) q^{-l1+1/2}/t1`.
    IntroStyle,
}

/// Variant parameters `(h_i, l_i, k_i, t_i)`.
#[derive(Clone, Copy, Debug)]
pub struct Deg2Var {
    pub h: [f64; 2],
    pub l: [f64; 2],
    pub k: [f64; 2],
    pub t: [f64; 2],
}

impl Deg2Var {
    pub fn lambda(&self) -> f64 {
        (self.h[0] + self.h[1] - self.l[0] - self.l[1] - self.k[0] + self.k[1] + 1.0) / 2.0
    }

    /// Raw parameters of the underlying rank-1 system (real `q`):
    /// `a1 = q^{-l1+1/2}/t1`, `a2 = q^{-l2+3/2}/t2`,
    /// `b_i = q^{lambda-h_i+1/2}/t_i`.
    pub fn raw_params(&self, q: f64) -> Deg2Raw {
        let lam = self.lambda();
        Deg2Raw {
            mu: 0.0,
            lambda: lam,
            alpha: [
                q.powf(-self.l[0] + 0.5) / self.t[0],
                q.powf(-self.l[1] + 1.5) / self.t[1],
            ],
            beta: [
                q.powf(lam - self.h[0] + 0.5) / self.t[0],
                q.powf(lam - self.h[1] + 0.5) / self.t[1],
            ],
        }
    }

    pub fn gate(&self) -> ConvergenceGate {
        ConvergenceGate::ExponentGate {
            lambda: self.lambda(),
            k1: self.k[0],
            k2: self.k[1],
        }
    }

    /// The variant equation with the chosen non-homogeneous term.
    pub fn equation(&self, ctx: &QContext, nonhom: Deg2Nonhom) -> ScalarQDE {
        let [h1, h2] = self.h;
        let [l1, l2] = self.l;
        let [k1, k2] = self.k;
        let [t1, t2] = self.t;
        let q = ctx.q;
        let p = ctx.q_powf((h1 + h2 + l1 + l2 + k1 + k2) / 2.0);
        let e = -p
            * ((ctx.q_powf(-h2) + ctx.q_powf(-l2)) * c(t1)
                + (ctx.q_powf(-h1) + ctx.q_powf(-l1)) * c(t2));
        let c_m1 = Poly::from_roots(
            ONE,
            &[
                ctx.q_powf(h1 + 0.5) * c(t1),
                ctx.q_powf(h2 + 0.5) * c(t2),
            ],
        );
        let c_p1 = Poly::from_roots(
            ctx.q_powf(k1 + k2),
            &[
                ctx.q_powf(l1 - 0.5) * c(t1),
                ctx.q_powf(l2 - 0.5) * c(t2),
            ],
        );
        let c_0 = Poly(vec![
            p * (ctx.q_powf(0.5) + ctx.q_powf(-0.5)) * c(t1 * t2),
            e,
            ctx.q_powf(k1) + ctx.q_powf(k2),
        ])
        .scale(-ONE);
        let lam = self.lambda();
        let nh = match nonhom {
            Deg2Nonhom::Homogeneous => NonHom::None,
            Deg2Nonhom::ThmStyle => NonHom::Power {
                coeff: (ONE - ctx.q_powf(lam)) * ctx.q_powf(l1 + l2 + k1 - 1.0) * c(t1 * t2),
                exponent: c(1.0 - k2),
            },
            Deg2Nonhom::IntroStyle => NonHom::Power {
                coeff: -(ONE - q)
                    * (ONE - ctx.q_powf(lam))
                    * ctx.q_powf(l2 + k1 - 0.5)
                    * c(t2),
                exponent: c(1.0 - k2),
            },
        };
        ScalarQDE::new("deg2-variant", vec![-1, 1, 0], vec![c_m1, c_p1, c_0], nh)
    }

    /// Homogeneous solution with base point near the singularity
    /// `q^{h_i+1/2} t_i` (`i` is 0-based); needs the exponent gate.
    pub fn sol_homog(&self, ctx: &QContext, i: usize) -> PhiSolution {
        let j = 1 - i;
        let lam = self.lambda();
        let (hi, hj) = (self.h[i], self.h[j]);
        let (li, lj) = (self.l[i], self.l[j]);
        let (ti, tj) = (self.t[i], self.t[j]);
        let z = ctx.q_powf(lam + self.k[0] - self.k[1]);
        PhiSolution {
            id: format!("deg2-var-homog-{}", i + 1),
            coeff: ONE,
            x_exponent: c(lam - self.k[1]),
            poch_num: vec![Arg::new(ctx.q_powf(lam - hi + 0.5) / c(ti), 1)],
            poch_den: vec![Arg::new(ctx.q_powf(-hi + 0.5) / c(ti), 1)],
            upper: vec![
                Arg::new(ctx.q_powf(-hi + 0.5) / c(ti), 1),
                Arg::k(ctx.q_powf(lam - hi + li)),
                Arg::k(ctx.q_powf(lam - hi + lj) * c(tj / ti)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam - hi + 0.5) / c(ti), 1),
                Arg::k(ctx.q_powf(1.0 - hi + hj) * c(tj / ti)),
            ],
            z: Arg::k(z),
        }
    }

    /// Homogeneous solution expanded at infinity; needs the exponent gate.
    pub fn sol_homog_inf(&self, ctx: &QContext) -> PhiSolution {
        let lam = self.lambda();
        let [h1, h2] = self.h;
        let [l1, l2] = self.l;
        let [t1, t2] = self.t;
        let z = ctx.q_powf(lam + self.k[0] - self.k[1]);
        PhiSolution {
            id: "deg2-var-homog-inf".into(),
            coeff: ONE,
            x_exponent: c(-self.k[0]),
            poch_num: vec![
                Arg::new(ctx.q_powf(-lam + h1 + 1.5) * c(t1), -1),
                Arg::new(ctx.q_powf(-lam + h2 + 1.5) * c(t2), -1),
            ],
            poch_den: vec![
                Arg::new(ctx.q_powf(l1 + 0.5) * c(t1), -1),
                Arg::new(ctx.q_powf(l2 + 0.5) * c(t2), -1),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(l1 + 0.5) * c(t1), -1),
                Arg::new(ctx.q_powf(l2 + 0.5) * c(t2), -1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(-lam + h1 + 1.5) * c(t1), -1),
                Arg::new(ctx.q_powf(-lam + h2 + 1.5) * c(t2), -1),
            ],
            z: Arg::k(z),
        }
    }

    /// ThmStyle solution attached to the singularity `q^{l_i-1/2} t_i`
    /// (`i` 0-based); argument `q` series, no convergence gate.
    pub fn sol_thm_pole(&self, ctx: &QContext, i: usize) -> PhiSolution {
        let j = 1 - i;
        let lam = self.lambda();
        let (hi, hj) = (self.h[i], self.h[j]);
        let (li, lj) = (self.l[i], self.l[j]);
        let (ti, tj) = (self.t[i], self.t[j]);
        let q = ctx.q;
        PhiSolution {
            id: format!("deg2-var-thm-{}", i + 1),
            coeff: ctx.q_powf(li - 0.5) * c(ti),
            x_exponent: c(-self.k[1]),
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + li + 0.5) * c(ti), -1),
                Arg::k(ctx.q_powf(li - lj + 1.0) * c(ti / tj)),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(ctx.q_powf(li + 0.5) * c(ti), -1),
                Arg::k(ctx.q_powf(lam - hi + li)),
                Arg::k(ctx.q_powf(lam - hj + li) * c(ti / tj)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(li + 0.5) * c(ti), -1),
                Arg::k(ctx.q_powf(lam - hi + li)),
                Arg::k(ctx.q_powf(lam - hj + li) * c(ti / tj)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + li + 0.5) * c(ti), -1),
                Arg::k(ctx.q_powf(li - lj + 1.0) * c(ti / tj)),
            ],
            z: Arg::k(q),
        }
    }

    /// ThmStyle solution attached to the origin.
    pub fn sol_thm_origin(&self, ctx: &QContext) -> PhiSolution {
        let lam = self.lambda();
        let [h1, h2] = self.h;
        let [l1, l2] = self.l;
        let [t1, t2] = self.t;
        let q = ctx.q;
        PhiSolution {
            id: "deg2-var-thm-0".into(),
            coeff: ctx.q_powf(-lam),
            x_exponent: c(1.0 - self.k[1]),
            poch_num: vec![
                Arg::new(ctx.q_powf(-lam - l1 + 1.5) / c(t1), 1),
                Arg::new(ctx.q_powf(-lam - l2 + 1.5) / c(t2), 1),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(ctx.q_powf(-h1 + 0.5) / c(t1), 1),
                Arg::new(ctx.q_powf(-h2 + 0.5) / c(t2), 1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(-h1 + 0.5) / c(t1), 1),
                Arg::new(ctx.q_powf(-h2 + 0.5) / c(t2), 1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(-lam - l1 + 1.5) / c(t1), 1),
                Arg::new(ctx.q_powf(-lam - l2 + 1.5) / c(t2), 1),
            ],
            z: Arg::k(q),
        }
    }

    /// IntroStyle solution at the first pole: the ThmStyle pole solution
    /// rescaled by `(q-1) q^{-l1+1/2}/t1`.
    pub fn sol_intro_pole(&self, ctx: &QContext) -> PhiSolution {
        let mut s = self.sol_thm_pole(ctx, 0);
        s.id = "deg2-var-intro-pole".into();
        s.coeff = (ctx.q - ONE) * ctx.q_powf(-self.l[0] + 0.5) / c(self.t[0])
            * s.coeff;
        s
    }

    /// IntroStyle solution at the origin, rescaled the same way.
    pub fn sol_intro_origin(&self, ctx: &QContext) -> PhiSolution {
        let mut s = self.sol_thm_origin(ctx);
        s.id = "deg2-var-intro-0".into();
        s.coeff = (ctx.q - ONE) * ctx.q_powf(-self.l[0] + 0.5) / c(self.t[0])
            * s.coeff;
        s
    }

    /// Bilateral ThmStyle solution at generic base point `xi`, valid under
    /// the exponent gate.
    pub fn bilateral(&self, ctx: &QContext, xi: f64) -> crate::qsystems::SolutionFn {
        let lam = self.lambda();
        let [h1, h2] = self.h;
        let [l1, l2] = self.l;
        let k2 = self.k[1];
        let [t1, t2] = self.t;
        let series = BilateralSeries {
            id: "deg2-var-bilateral".into(),
            prefactor: ONE,
            mu: 1.0,
            xi: c(xi),
            num: vec![
                Arg::new(ctx.q_powf(lam + 1.0) * c(xi), -1),
                Arg::k(ctx.q_powf(-l1 + 1.5) * c(xi / t1)),
                Arg::k(ctx.q_powf(-l2 + 1.5) * c(xi / t2)),
            ],
            den: vec![
                Arg::new(ctx.q * c(xi), -1),
                Arg::k(ctx.q_powf(lam - h1 + 0.5) * c(xi / t1)),
                Arg::k(ctx.q_powf(lam - h2 + 0.5) * c(xi / t2)),
            ],
        };
        series.solution().scaled_power(ONE, c(-k2))
    }
}
