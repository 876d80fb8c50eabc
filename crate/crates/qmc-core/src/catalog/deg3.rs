//! Resonant third-degree family: the 3-pole rank-1 system at `mu = 0` with
//! `q^lambda = b1 b2 b3/(a1 a2 a3)`, where both the origin eigenspace and
//! the shift eigenspace drop rank and the quotient is again 2x2.
//!
//! The first quotient component satisfies a third-order equation whose
//! fourth-order lift factors as two first-order shifts times a
//! second-order bracket; this module provides the equation, the factored
//! operator, the bilateral solution, the lattice-specialised closed forms,
//! and the variant-parameter form together with its eight closed-form
//! solutions.

use crate::catalog::jp::JpParams;
use crate::catalog::{Arg, BilateralSeries, PhiSolution};
use crate::qlinalg::CMatrix;
use crate::qsystems::{coef, NonHom, Poly, QShiftOp, ScalarQDE, System2x2, ThetaArg};
use crate::{c, QContext, Result, ONE, ZERO};
use num_complex::Complex64;

/// Non-homogeneous shapes of the resonant third-order equation.
#[derive(Clone, Copy, Debug)]
pub enum Deg3Nonhom {
    Homogeneous,
    /// `- q^2 (q-1)(1-q^lambda) (a1-a3)/(a1 a2 a3) * x`
    /// (base points on the `1/a_j` lattice or `q^-lambda x`).
    PowerOrigin,
    /// `+ q (q-1)(1-q^lambda) (a1-a3)/(a1 a3) * x^{lambda+2}`
    /// (base points on the `1/b_j` lattice or `x`).
    PowerInfinity,
    /// Theta-quotient boundary term at a generic base point.
    ThetaStyle { xi: f64 },
}

#[derive(Clone, Copy, Debug)]
pub struct Deg3Raw {
    pub alpha: [f64; 3],
    pub beta: [f64; 3],
}

impl Deg3Raw {
    fn pa(&self) -> f64 {
        self.alpha.iter().product()
    }

    fn pb(&self) -> f64 {
        self.beta.iter().product()
    }

    /// `lambda = log_q(b1 b2 b3/(a1 a2 a3))`; `mu` is pinned to 0.
    pub fn lambda(&self, ctx: &QContext) -> f64 {
        (self.pb() / self.pa()).ln() / ctx.log_q.re
    }

    pub fn jp_params(&self) -> Result<JpParams> {
        JpParams::new(0.0, self.alpha.to_vec(), self.beta.to_vec())
    }

    /// Fixture: the completion matrix whose third column spans the shift
    /// eigenvector `(1,1,1,1)` and fourth column the origin kernel
    /// `(1,0,0,0)`.
    pub fn p_fixture() -> CMatrix {
        CMatrix::from_real_rows(&[
            vec![0.0, 0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0, 0.0],
            vec![0.0, 1.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ])
    }

    pub fn p_inverse_fixture() -> CMatrix {
        CMatrix::from_real_rows(&[
            vec![0.0, 1.0, 0.0, -1.0],
            vec![0.0, 0.0, 1.0, -1.0],
            vec![0.0, 0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0, -1.0],
        ])
    }

    /// Expected conjugated tuple `(F~_inf, F~_1, F~_2, F~_3)` in the
    /// completion basis.
    pub fn expected_tilde_tuple(
        &self,
        ctx: &QContext,
    ) -> Result<(CMatrix, CMatrix, CMatrix, CMatrix)> {
        let jp = self.jp_params()?;
        let b1 = jp.b_k(ctx, 0);
        let b2 = jp.b_k(ctx, 1);
        let ql = ctx.q_powf(self.lambda(ctx));
        let z = ZERO;
        let f1 = CMatrix::from_rows(&[
            vec![b1 - (ONE - ql), b2, z, z],
            vec![z, z, z, z],
            vec![z, z, z, z],
            vec![z, z, z, z],
        ]);
        let f2 = CMatrix::from_rows(&[
            vec![z, z, z, z],
            vec![b1, b2 - (ONE - ql), z, z],
            vec![z, z, z, z],
            vec![z, z, z, z],
        ]);
        let f3 = CMatrix::from_rows(&[
            vec![-b1, -b2, z, z],
            vec![-b1, -b2, z, z],
            vec![b1, b2, z, z],
            vec![-b1, -b2, z, z],
        ]);
        let finf = CMatrix::from_rows(&[
            vec![ONE, z, z, z],
            vec![z, ONE, z, z],
            vec![-b1, -b2, ql, z],
            vec![z, z, z, ONE],
        ]);
        Ok((finf, f1, f2, f3))
    }

    /// The 2x2 quotient system for the first two completion components,
    /// built directly from the conjugated tuple:
    /// `A(x) = [upper-left of F~_inf + sum_k F~_k/(1 - a_k x)]`.
    pub fn reduced_system(&self, ctx: &QContext) -> Result<System2x2> {
        let jp = self.jp_params()?;
        let b1 = jp.b_k(ctx, 0);
        let b2 = jp.b_k(ctx, 1);
        let ql = ctx.q_powf(self.lambda(ctx));
        let [a1, a2, a3] = self.alpha;
        let pole = move |x: Complex64, a: f64| ONE - c(a) * x;
        let a11 = coef(move |_: &QContext, x| {
            Ok(ONE + (b1 - (ONE - ql)) / pole(x, a1) - b1 / pole(x, a3))
        });
        let a12 = coef(move |_: &QContext, x| Ok(b2 / pole(x, a1) - b2 / pole(x, a3)));
        let a21 = coef(move |_: &QContext, x| Ok(b1 / pole(x, a2) - b1 / pole(x, a3)));
        let a22 = coef(move |_: &QContext, x| {
            Ok(ONE + (b2 - (ONE - ql)) / pole(x, a2) - b2 / pole(x, a3))
        });
        Ok(System2x2::homogeneous([[a11, a12], [a21, a22]]))
    }

    fn nonhom(&self, ctx: &QContext, which: Deg3Nonhom) -> NonHom {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let resonance = (q - ONE) * (ONE - ctx.q_powf(lam)) * c(a1 - a3);
        match which {
            Deg3Nonhom::Homogeneous => NonHom::None,
            Deg3Nonhom::PowerOrigin => NonHom::Power {
                coeff: -q * q * resonance / c(self.pa()),
                exponent: ONE,
            },
            Deg3Nonhom::PowerInfinity => NonHom::Power {
                coeff: q * resonance / c(a1 * a3),
                exponent: c(lam + 2.0),
            },
            Deg3Nonhom::ThetaStyle { xi } => NonHom::Theta {
                coeff: q * q * resonance / c(self.pa()),
                exponent: ONE,
                num: vec![
                    ThetaArg::new(ctx.q_powf(lam + 1.0) * c(xi), -1),
                    ThetaArg::new(c(xi * a1), 0),
                    ThetaArg::new(c(xi * a2) / q, 0),
                    ThetaArg::new(c(xi * a3), 0),
                ],
                den: vec![
                    ThetaArg::new(c(xi), -1),
                    ThetaArg::new(c(xi * b1), 0),
                    ThetaArg::new(c(xi * b2), 0),
                    ThetaArg::new(c(xi * b3), 0),
                ],
                offset: 1.0,
            },
        }
    }

    /// The third-order equation for the first quotient component.
    pub fn equation(&self, ctx: &QContext, which: Deg3Nonhom) -> ScalarQDE {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let pa = self.pa();
        let pb = self.pb();
        let c_m1 = Poly::from_roots(
            ONE,
            &[
                q * c(b1 * b2 / pa),
                q * c(b2 * b3 / pa),
                q * c(b3 * b1 / pa),
            ],
        );
        let c_p1 = Poly::from_roots(q, &[c(1.0 / a1), q / c(a2), c(1.0 / a3)]);
        let c_0 = Poly(vec![
            q * q * (ONE + q) * c(pb / (pa * pa)),
            -(q * q * c((b1 + b2 + b3) / pa)
                + q * q * c(pb / (a1 * a2 * a2 * a3 * a3))
                + q * q * c(pb / (a1 * a1 * a2 * a2 * a3))
                + q * c(pb / (a1 * a1 * a2 * a3 * a3))),
            q * c(1.0 / a1) + q * q / c(a2) + q * c(1.0 / a3) + q * c((b1 * b2 + b2 * b3 + b3 * b1) / pa),
            -(ONE + q),
        ]);
        ScalarQDE::new(
            "deg3-comp1",
            vec![-1, 1, 0],
            vec![c_m1, c_p1, c_0],
            self.nonhom(ctx, which),
        )
    }

    /// Second-order bracket of the factored fourth-order lift:
    /// `(q a1 x - 1)(a2 x - 1)(q a3 x - 1) T^2 - {...} T
    ///  + q (Pa x - b1 b2)(Pa x - b2 b3)(Pa x - b3 b1)/Pa^2`.
    pub fn factor_bracket(&self, ctx: &QContext) -> QShiftOp {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let pa = self.pa();
        let pb = self.pb();
        let t2 = Poly::from_roots(
            q * q * c(a1 * a2 * a3),
            &[ONE / (q * c(a1)), c(1.0 / a2), ONE / (q * c(a3))],
        );
        let t1 = Poly(vec![
            -(q + ONE) * c(pb / pa),
            q * (c(b1 + b2 + b3) + c(pb / pa) * (c(a1) + c(a2) / q + c(a3))),
            -q * (c(a1 * a2 + a2 * a3) + q * c(a3 * a1) + c(b1 * b2 + b2 * b3 + b3 * b1)),
            q * (q + ONE) * c(pa),
        ])
        .scale(-ONE);
        let t0 = Poly::from_roots(
            q * c(pa),
            &[c(b1 * b2 / pa), c(b2 * b3 / pa), c(b3 * b1 / pa)],
        );
        QShiftOp::new(vec![t0, t1, t2])
    }

    /// The fourth-order operator `(T - q^2 Pb/Pa)(T - q) * bracket`; every
    /// solution of any non-homogeneous shape of [`Self::equation`] is
    /// annihilated by it.
    pub fn fourth_order(&self, ctx: &QContext) -> QShiftOp {
        let shift_eig = ctx.q * ctx.q * c(self.pb() / self.pa());
        self.factor_bracket(ctx)
            .compose_first_order(ctx, ctx.q)
            .compose_first_order(ctx, shift_eig)
    }

    /// Bilateral solution at generic `xi > 0`; satisfies the ThetaStyle
    /// equation at the same `xi`.
    pub fn bilateral(&self, ctx: &QContext, xi: f64) -> BilateralSeries {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        BilateralSeries {
            id: "deg3-bilateral".into(),
            prefactor: (ONE - q) * c(a3 - a1),
            mu: 1.0,
            xi: c(xi),
            num: vec![
                Arg::new(ctx.q_powf(self.lambda(ctx) + 1.0) * c(xi), -1),
                Arg::k(q * c(a1 * xi)),
                Arg::k(c(a2 * xi)),
                Arg::k(q * c(a3 * xi)),
            ],
            den: vec![
                Arg::new(q * c(xi), -1),
                Arg::k(c(b1 * xi)),
                Arg::k(c(b2 * xi)),
                Arg::k(c(b3 * xi)),
            ],
        }
    }

    /// PowerOrigin solution at the base point `1/a1`.
    pub fn sol_base_inv_a1(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: "deg3-xi-1/a1".into(),
            coeff: (ONE - q) * c((a3 - a1) / a1),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a1), -1),
                Arg::k(c(a2 / a1)),
                Arg::k(q * c(a3 / a1)),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q / c(a1), -1),
                Arg::k(c(b1 / a1)),
                Arg::k(c(b2 / a1)),
                Arg::k(c(b3 / a1)),
            ],
            upper: vec![
                Arg::new(q / c(a1), -1),
                Arg::k(c(b1 / a1)),
                Arg::k(c(b2 / a1)),
                Arg::k(c(b3 / a1)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a1), -1),
                Arg::k(c(a2 / a1)),
                Arg::k(q * c(a3 / a1)),
            ],
            z: Arg::k(q),
        }
    }

    /// PowerOrigin solution at the base point `1/a2`.
    pub fn sol_base_inv_a2(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let q2 = q * q;
        PhiSolution {
            id: "deg3-xi-1/a2".into(),
            coeff: (ONE - q) * q * c((a3 - a1) / a2),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + 2.0) / c(a2), -1),
                Arg::k(q2 * c(a1 / a2)),
                Arg::k(q2 * c(a3 / a2)),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q2 / c(a2), -1),
                Arg::k(q * c(b1 / a2)),
                Arg::k(q * c(b2 / a2)),
                Arg::k(q * c(b3 / a2)),
            ],
            upper: vec![
                Arg::new(q2 / c(a2), -1),
                Arg::k(q * c(b1 / a2)),
                Arg::k(q * c(b2 / a2)),
                Arg::k(q * c(b3 / a2)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + 2.0) / c(a2), -1),
                Arg::k(q2 * c(a1 / a2)),
                Arg::k(q2 * c(a3 / a2)),
            ],
            z: Arg::k(q),
        }
    }

    /// PowerOrigin solution at the base point `1/a3`.
    pub fn sol_base_inv_a3(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: "deg3-xi-1/a3".into(),
            coeff: (ONE - q) * c((a3 - a1) / a3),
            x_exponent: ZERO,
            poch_num: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a3), -1),
                Arg::k(q * c(a1 / a3)),
                Arg::k(c(a2 / a3)),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q / c(a3), -1),
                Arg::k(c(b1 / a3)),
                Arg::k(c(b2 / a3)),
                Arg::k(c(b3 / a3)),
            ],
            upper: vec![
                Arg::new(q / c(a3), -1),
                Arg::k(c(b1 / a3)),
                Arg::k(c(b2 / a3)),
                Arg::k(c(b3 / a3)),
            ],
            lower: vec![
                Arg::new(ctx.q_powf(lam + 1.0) / c(a3), -1),
                Arg::k(q * c(a1 / a3)),
                Arg::k(c(a2 / a3)),
            ],
            z: Arg::k(q),
        }
    }

    /// PowerOrigin solution at the moving base point `q^{-lambda} x`.
    pub fn sol_base_qlam_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let qml = ctx.q_powf(-lam);
        PhiSolution {
            id: "deg3-xi-q^-lam*x".into(),
            coeff: (ONE - q) * qml * c(a3 - a1),
            x_exponent: ONE,
            poch_num: vec![
                Arg::new(q * qml * c(a1), 1),
                Arg::new(qml * c(a2), 1),
                Arg::new(q * qml * c(a3), 1),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
                Arg::new(qml * c(b3), 1),
                Arg::k(q * qml),
            ],
            upper: vec![
                Arg::new(qml * c(b1), 1),
                Arg::new(qml * c(b2), 1),
                Arg::new(qml * c(b3), 1),
                Arg::k(q * qml),
            ],
            lower: vec![
                Arg::new(q * qml * c(a1), 1),
                Arg::new(qml * c(a2), 1),
                Arg::new(q * qml * c(a3), 1),
            ],
            z: Arg::k(q),
        }
    }

    /// PowerInfinity solution at the base point `1/b_j` (`j` 0-based); the
    /// selected beta takes the distinguished slot.
    pub fn sol_alt_inv_b(&self, ctx: &QContext, j: usize) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let bj = self.beta[j];
        let others: Vec<f64> = (0..3).filter(|&i| i != j).map(|i| self.beta[i]).collect();
        let q = ctx.q;
        let lam = self.lambda(ctx);
        PhiSolution {
            id: format!("deg3-alt-1/b{}", j + 1),
            coeff: (ONE - q) * c((a3 - a1) / (a1 * a3)) * c(bj),
            x_exponent: c(lam),
            poch_num: vec![
                Arg::new(c(bj), 1),
                Arg::k(q * c(bj / others[0])),
                Arg::k(q * c(bj / others[1])),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(ctx.q_powf(-lam) * c(bj), 1),
                Arg::k(c(bj / a1)),
                Arg::k(q * c(bj / a2)),
                Arg::k(c(bj / a3)),
            ],
            upper: vec![
                Arg::new(ctx.q_powf(-lam) * c(bj), 1),
                Arg::k(c(bj / a1)),
                Arg::k(q * c(bj / a2)),
                Arg::k(c(bj / a3)),
            ],
            lower: vec![
                Arg::new(c(bj), 1),
                Arg::k(q * c(bj / others[0])),
                Arg::k(q * c(bj / others[1])),
            ],
            z: Arg::k(q),
        }
    }

    /// PowerInfinity solution at the moving base point `x`.
    pub fn sol_alt_x(&self, ctx: &QContext) -> PhiSolution {
        let [a1, a2, a3] = self.alpha;
        let [b1, b2, b3] = self.beta;
        let q = ctx.q;
        let lam = self.lambda(ctx);
        let q2 = q * q;
        PhiSolution {
            id: "deg3-alt-x".into(),
            coeff: (ONE - q) * q * c((a3 - a1) / (a1 * a3)),
            x_exponent: c(lam - 1.0),
            poch_num: vec![
                Arg::new(q2 / c(b1), -1),
                Arg::new(q2 / c(b2), -1),
                Arg::new(q2 / c(b3), -1),
                Arg::k(q),
            ],
            poch_den: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q2 / c(a2), -1),
                Arg::new(q / c(a3), -1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            upper: vec![
                Arg::new(q / c(a1), -1),
                Arg::new(q2 / c(a2), -1),
                Arg::new(q / c(a3), -1),
                Arg::k(ctx.q_powf(1.0 - lam)),
            ],
            lower: vec![
                Arg::new(q2 / c(b1), -1),
                Arg::new(q2 / c(b2), -1),
                Arg::new(q2 / c(b3), -1),
            ],
            z: Arg::k(q),
        }
    }
}

/// Non-homogeneous shapes of the variant-parameter third-degree equation.
#[derive(Clone, Copy, Debug)]
pub enum Deg3VarNonhom {
    Homogeneous,
    /// `- q^{a+l1+l2+l3-1/2} t1 t2 t3 (1-q^lambda) x^{1-a}`.
    Style1,
    /// `+ q^a (1-q^lambda) x^{lambda-a+2}`.
    Style2,
}

/// Variant parameters `(h, l, t; a)` of the third-degree equation;
/// `g(x) = x^{-a} gbar(x)` maps it to [`Deg3Raw`] coordinates.
#[derive(Clone, Copy, Debug)]
pub struct Deg3Var {
    pub h: [f64; 3],
    pub l: [f64; 3],
    pub t: [f64; 3],
    pub a: f64,
}

impl Deg3Var {
    pub fn lambda(&self) -> f64 {
        (self.h.iter().sum::<f64>() - self.l.iter().sum::<f64>() + 1.0) / 2.0
    }

    /// Raw map: `a1 = q^{-l1+1/2}/t1`, `a2 = q^{-l2+3/2}/t2`,
    /// `a3 = q^{-l3+1/2}/t3`, `b_j = q^{lambda-h_j+1/2}/t_j`.
    pub fn raw_params(&self, q: f64) -> Deg3Raw {
        let lam = self.lambda();
        Deg3Raw {
            alpha: [
                q.powf(-self.l[0] + 0.5) / self.t[0],
                q.powf(-self.l[1] + 1.5) / self.t[1],
                q.powf(-self.l[2] + 0.5) / self.t[2],
            ],
            beta: [
                q.powf(lam - self.h[0] + 0.5) / self.t[0],
                q.powf(lam - self.h[1] + 0.5) / self.t[1],
                q.powf(lam - self.h[2] + 0.5) / self.t[2],
            ],
        }
    }

    /// The variant equation with the selected non-homogeneous term.
    pub fn equation(&self, ctx: &QContext, which: Deg3VarNonhom) -> ScalarQDE {
        let [h1, h2, h3] = self.h;
        let [l1, l2, l3] = self.l;
        let [t1, t2, t3] = self.t;
        let q = ctx.q;
        let lam = self.lambda();
        let sh = h1 + h2 + h3;
        let sl = l1 + l2 + l3;
        let qa = ctx.q_powf(self.a);
        let c_m1 = Poly::from_roots(
            ONE,
            &[
                ctx.q_powf(h1 + 0.5) * c(t1),
                ctx.q_powf(h2 + 0.5) * c(t2),
                ctx.q_powf(h3 + 0.5) * c(t3),
            ],
        );
        let c_p1 = Poly::from_roots(
            ctx.q_powf(2.0 * self.a + 1.0),
            &[
                ctx.q_powf(l1 - 0.5) * c(t1),
                ctx.q_powf(l2 - 0.5) * c(t2),
                ctx.q_powf(l3 - 0.5) * c(t3),
            ],
        );
        let x2 = ctx.q_powf(0.5)
            * ((ctx.q_powf(h1) + ctx.q_powf(l1)) * c(t1)
                + (ctx.q_powf(h2) + ctx.q_powf(l2)) * c(t2)
                + (ctx.q_powf(h3) + ctx.q_powf(l3)) * c(t3));
        let x1 = ctx.q_powf((sh + sl + 1.0) / 2.0)
            * ((ctx.q_powf(-h1) + ctx.q_powf(-l1)) * c(t2 * t3)
                + (ctx.q_powf(-h2) + ctx.q_powf(-l2)) * c(t1 * t3)
                + (ctx.q_powf(-h3) + ctx.q_powf(-l3)) * c(t1 * t2));
        let x0 = ctx.q_powf((sh + sl) / 2.0) * (q + ONE) * c(t1 * t2 * t3);
        let c_0 = Poly(vec![x0, -x1, x2, -(q + ONE)]).scale(qa);
        let nh = match which {
            Deg3VarNonhom::Homogeneous => NonHom::None,
            Deg3VarNonhom::Style1 => NonHom::Power {
                coeff: -ctx.q_powf(self.a + sl - 0.5)
                    * c(t1 * t2 * t3)
                    * (ONE - ctx.q_powf(lam)),
                exponent: c(1.0 - self.a),
            },
            Deg3VarNonhom::Style2 => NonHom::Power {
                coeff: qa * (ONE - ctx.q_powf(lam)),
                exponent: c(lam - self.a + 2.0),
            },
        };
        ScalarQDE::new(
            "deg3-variant",
            vec![-1, 1, 0],
            vec![c_m1, c_p1, c_0],
            nh,
        )
    }

    /// Style1 solution attached to the pole index `i` (0-based; `(i,i',i'')`
    /// cycles through the three slots).
    pub fn sol_style1_pole(&self, ctx: &QContext, i: usize) -> PhiSolution {
        let (ip, ipp) = ((i + 1) % 3, (i + 2) % 3);
        let q = ctx.q;
        let lam = self.lambda();
        let (li, ti) = (self.l[i], self.t[i]);
        let num = vec![
            Arg::new(ctx.q_powf(lam + li + 0.5) * c(ti), -1),
            Arg::k(ctx.q_powf(li - self.l[ip] + 1.0) * c(ti / self.t[ip])),
            Arg::k(ctx.q_powf(li - self.l[ipp] + 1.0) * c(ti / self.t[ipp])),
            Arg::k(q),
        ];
        let den = vec![
            Arg::new(ctx.q_powf(li + 0.5) * c(ti), -1),
            Arg::k(ctx.q_powf(lam + li - self.h[i])),
            Arg::k(ctx.q_powf(lam + li - self.h[ip]) * c(ti / self.t[ip])),
            Arg::k(ctx.q_powf(lam + li - self.h[ipp]) * c(ti / self.t[ipp])),
        ];
        PhiSolution {
            id: format!("deg3-var-s1-pole{}", i + 1),
            coeff: ctx.q_powf(li - 0.5) * c(ti),
            x_exponent: c(-self.a),
            poch_num: num.clone(),
            poch_den: den.clone(),
            upper: den,
            lower: num[..3].to_vec(),
            z: Arg::k(q),
        }
    }

    /// Style1 solution attached to the origin.
    pub fn sol_style1_origin(&self, ctx: &QContext) -> PhiSolution {
        let q = ctx.q;
        let lam = self.lambda();
        let num: Vec<Arg> = (0..3)
            .map(|j| Arg::new(ctx.q_powf(-lam - self.l[j] + 1.5) / c(self.t[j]), 1))
            .chain([Arg::k(q)])
            .collect();
        let den: Vec<Arg> = (0..3)
            .map(|j| Arg::new(ctx.q_powf(-self.h[j] + 0.5) / c(self.t[j]), 1))
            .chain([Arg::k(ctx.q_powf(1.0 - lam))])
            .collect();
        PhiSolution {
            id: "deg3-var-s1-origin".into(),
            coeff: ctx.q_powf(-lam),
            x_exponent: c(1.0 - self.a),
            poch_num: num.clone(),
            poch_den: den.clone(),
            upper: den,
            lower: num[..3].to_vec(),
            z: Arg::k(q),
        }
    }

    /// Style2 solution attached to the pole index `i` (0-based).
    pub fn sol_style2_pole(&self, ctx: &QContext, i: usize) -> PhiSolution {
        let (ip, ipp) = ((i + 1) % 3, (i + 2) % 3);
        let q = ctx.q;
        let lam = self.lambda();
        let (hi, ti) = (self.h[i], self.t[i]);
        let num = vec![
            Arg::new(ctx.q_powf(lam - hi + 0.5) / c(ti), 1),
            Arg::k(ctx.q_powf(self.h[ip] - hi + 1.0) * c(self.t[ip] / ti)),
            Arg::k(ctx.q_powf(self.h[ipp] - hi + 1.0) * c(self.t[ipp] / ti)),
            Arg::k(q),
        ];
        let den = vec![
            Arg::new(ctx.q_powf(-hi + 0.5) / c(ti), 1),
            Arg::k(ctx.q_powf(lam + self.l[i] - hi)),
            Arg::k(ctx.q_powf(lam + self.l[ip] - hi) * c(self.t[ip] / ti)),
            Arg::k(ctx.q_powf(lam + self.l[ipp] - hi) * c(self.t[ipp] / ti)),
        ];
        PhiSolution {
            id: format!("deg3-var-s2-pole{}", i + 1),
            coeff: ctx.q_powf(lam - hi - 0.5) / c(ti),
            x_exponent: c(lam - self.a),
            poch_num: num.clone(),
            poch_den: den.clone(),
            upper: den,
            lower: num[..3].to_vec(),
            z: Arg::k(q),
        }
    }

    /// Style2 solution attached to the origin.
    pub fn sol_style2_origin(&self, ctx: &QContext) -> PhiSolution {
        let q = ctx.q;
        let lam = self.lambda();
        let num: Vec<Arg> = (0..3)
            .map(|j| Arg::new(ctx.q_powf(-lam + self.h[j] + 1.5) * c(self.t[j]), -1))
            .chain([Arg::k(q)])
            .collect();
        let den: Vec<Arg> = (0..3)
            .map(|j| Arg::new(ctx.q_powf(self.l[j] + 0.5) * c(self.t[j]), -1))
            .chain([Arg::k(ctx.q_powf(1.0 - lam))])
            .collect();
        PhiSolution {
            id: "deg3-var-s2-origin".into(),
            coeff: ONE,
            x_exponent: c(lam - self.a - 1.0),
            poch_num: num.clone(),
            poch_den: den.clone(),
            upper: den,
            lower: num[..3].to_vec(),
            z: Arg::k(q),
        }
    }
}
