//! Linear q-difference systems `Y(qx) = B(x) Y(x)` with simple poles,
//! scalar q-difference equations with polynomial coefficients, residual
//! evaluation, elimination of a 2x2 system to a scalar second-order
//! relation, and composition of q-shift operators.
//!
//! All residuals are relative: the defect is divided by the largest
//! contributing term, so a residual of `1e-10` means ten digits of
//! cancellation regardless of the overall scale of the solution.

use crate::qlinalg::CMatrix;
use crate::qseries;
use crate::{c_power, BranchPolicy, QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;
use std::sync::Arc;

/// Floor used when normalising residuals so exact zeros do not divide by 0.
const SCALE_FLOOR: f64 = 1e-280;

/// A scalar function of `x` that may fail (pole, branch violation, budget).
#[derive(Clone)]
pub struct SolutionFn {
    pub id: String,
    f: Arc<dyn Fn(&QContext, Complex64) -> Result<Complex64> + Send + Sync>,
}

impl SolutionFn {
    pub fn new<F>(id: impl Into<String>, f: F) -> Self
    where
        F: Fn(&QContext, Complex64) -> Result<Complex64> + Send + Sync + 'static,
    {
        SolutionFn {
            id: id.into(),
            f: Arc::new(f),
        }
    }

    pub fn eval(&self, ctx: &QContext, x: Complex64) -> Result<Complex64> {
        (self.f)(ctx, x)
    }

    /// Pointwise difference of two solutions (used for homogeneous checks
    /// on pairs of solutions of the same non-homogeneous equation).
    pub fn difference(a: &SolutionFn, b: &SolutionFn) -> SolutionFn {
        let (fa, fb) = (a.clone(), b.clone());
        SolutionFn::new(format!("({}) - ({})", a.id, b.id), move |ctx, x| {
            Ok(fa.eval(ctx, x)? - fb.eval(ctx, x)?)
        })
    }

    /// Multiply by `coeff * x^expo` (fixed principal branch).
    pub fn scaled_power(&self, coeff: Complex64, expo: Complex64) -> SolutionFn {
        let f = self.clone();
        SolutionFn::new(format!("x^pow * ({})", self.id), move |ctx, x| {
            Ok(coeff * c_power(BranchPolicy::PrincipalLog, x, expo)? * f.eval(ctx, x)?)
        })
    }
}

impl std::fmt::Debug for SolutionFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SolutionFn({})", self.id)
    }
}

/// System `Y(qx) = (B_inf + sum_i B_i / (1 - x/b_i)) Y(x)` with distinct
/// nonzero poles `b_i`.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub b_inf: CMatrix,
    pub b: Vec<CMatrix>,
    pub poles: Vec<Complex64>,
}

impl SystemSpec {
    pub fn new(b_inf: CMatrix, b: Vec<CMatrix>, poles: Vec<Complex64>) -> Result<Self> {
        let m = b_inf.rows();
        if b_inf.cols() != m {
            return Err(QError::DimensionMismatch("B_inf must be square".into()));
        }
        if b.len() != poles.len() {
            return Err(QError::DimensionMismatch(
                "one pole per residue matrix".into(),
            ));
        }
        for bi in &b {
            if bi.rows() != m || bi.cols() != m {
                return Err(QError::DimensionMismatch(
                    "residue matrices must match B_inf".into(),
                ));
            }
        }
        for (i, &p) in poles.iter().enumerate() {
            if p == ZERO {
                return Err(QError::DegenerateParameters("pole at 0".into()));
            }
            for &p2 in &poles[..i] {
                if (p - p2).norm() < 1e-12 * p.norm() {
                    return Err(QError::DegenerateParameters(format!(
                        "coalescing poles near {p}"
                    )));
                }
            }
        }
        Ok(SystemSpec { b_inf, b, poles })
    }

    pub fn dim(&self) -> usize {
        self.b_inf.rows()
    }

    pub fn n_poles(&self) -> usize {
        self.poles.len()
    }

    /// `B_0 = I - B_inf - sum B_i`, the residue "at the origin".
    pub fn b0(&self) -> CMatrix {
        let mut m = CMatrix::identity(self.dim()).sub(&self.b_inf);
        for bi in &self.b {
            m = m.sub(bi);
        }
        m
    }

    /// Evaluate `B(x)`; fails on the pole set.
    pub fn eval_b(&self, x: Complex64) -> Result<CMatrix> {
        let mut m = self.b_inf.clone();
        for (bi, &p) in self.b.iter().zip(&self.poles) {
            let den = ONE - x / p;
            if den.norm() < 1e-12 {
                return Err(QError::AtPole(x));
            }
            m = m.add(&bi.scale(ONE / den));
        }
        Ok(m)
    }
}

/// Relative residual of `Y(qx) = B(x) Y(x)` for a candidate vector function.
pub fn system_residual(
    ctx: &QContext,
    spec: &SystemSpec,
    y: &dyn Fn(&QContext, Complex64) -> Result<Vec<Complex64>>,
    x: Complex64,
) -> Result<f64> {
    let bx = spec.eval_b(x)?;
    let yx = y(ctx, x)?;
    let yqx = y(ctx, ctx.q * x)?;
    if yx.len() != spec.dim() || yqx.len() != spec.dim() {
        return Err(QError::DimensionMismatch(
            "solution dimension vs system".into(),
        ));
    }
    let mut worst: f64 = 0.0;
    for i in 0..spec.dim() {
        let mut rhs = ZERO;
        let mut scale = yqx[i].norm();
        for j in 0..spec.dim() {
            let t = bx.get(i, j) * yx[j];
            rhs += t;
            scale = scale.max(t.norm());
        }
        let defect = (yqx[i] - rhs).norm();
        worst = worst.max(defect / scale.max(SCALE_FLOOR));
    }
    Ok(worst)
}

/// Polynomial with complex coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn constant(v: Complex64) -> Self {
        Poly(vec![v])
    }

    /// `coeff * (x - r1)(x - r2)...`
    pub fn from_roots(coeff: Complex64, roots: &[Complex64]) -> Self {
        let mut p = Poly(vec![coeff]);
        for &r in roots {
            p = p.mul(&Poly(vec![-r, ONE]));
        }
        p
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        // Horner
        let mut acc = ZERO;
        for &c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(c x)` as a polynomial in `x`.
    pub fn scale_arg(&self, c: Complex64) -> Poly {
        let mut out = self.0.clone();
        let mut f = ONE;
        for v in out.iter_mut() {
            *v *= f;
            f *= c;
        }
        Poly(out)
    }

    pub fn scale(&self, s: Complex64) -> Poly {
        Poly(self.0.iter().map(|&v| v * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![ZERO; n];
        for (i, v) in out.iter_mut().enumerate() {
            *v = self.0.get(i).copied().unwrap_or(ZERO) + other.0.get(i).copied().unwrap_or(ZERO);
        }
        Poly(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Argument of a theta factor, `coeff * x^x_power` with `x_power` in
/// {-1, 0, 1} in practice.
#[derive(Clone, Debug)]
pub struct ThetaArg {
    pub coeff: Complex64,
    pub x_power: i32,
}

impl ThetaArg {
    pub fn new(coeff: Complex64, x_power: i32) -> Self {
        ThetaArg { coeff, x_power }
    }

    fn value(&self, x: Complex64) -> Complex64 {
        self.coeff * x.powi(self.x_power)
    }
}

/// Non-homogeneous term of a scalar q-difference equation.
#[derive(Clone, Debug, Default)]
pub enum NonHom {
    #[default]
    None,
    /// `coeff * x^exponent`.
    Power {
        coeff: Complex64,
        exponent: Complex64,
    },
    /// `coeff * x^exponent * (prod theta(num) / prod theta(den) - offset)`,
    /// with `offset` either 0 or 1.
    Theta {
        coeff: Complex64,
        exponent: Complex64,
        num: Vec<ThetaArg>,
        den: Vec<ThetaArg>,
        offset: f64,
    },
}

impl NonHom {
    pub fn eval(&self, ctx: &QContext, x: Complex64) -> Result<Complex64> {
        match self {
            NonHom::None => Ok(ZERO),
            NonHom::Power { coeff, exponent } => {
                Ok(*coeff * c_power(BranchPolicy::PrincipalLog, x, *exponent)?)
            }
            NonHom::Theta {
                coeff,
                exponent,
                num,
                den,
                offset,
            } => {
                let mut ratio = ONE;
                for a in num {
                    ratio *= qseries::theta(ctx, a.value(x))?;
                }
                for a in den {
                    ratio /= qseries::theta(ctx, a.value(x))?;
                }
                Ok(*coeff
                    * c_power(BranchPolicy::PrincipalLog, x, *exponent)?
                    * (ratio - crate::c(*offset)))
            }
        }
    }
}

/// Scalar q-difference equation
/// `sum_k coeffs[k](x) f(q^{shifts[k]} x) + nonhom(x) = 0`.
#[derive(Clone, Debug)]
pub struct ScalarQDE {
    pub id: String,
    pub shifts: Vec<i64>,
    pub coeffs: Vec<Poly>,
    pub nonhom: NonHom,
}

impl ScalarQDE {
    pub fn new(id: impl Into<String>, shifts: Vec<i64>, coeffs: Vec<Poly>, nonhom: NonHom) -> Self {
        assert_eq!(shifts.len(), coeffs.len());
        ScalarQDE {
            id: id.into(),
            shifts,
            coeffs,
            nonhom,
        }
    }
}

/// Relative residual of a scalar equation at `x`.
pub fn scalar_residual(
    ctx: &QContext,
    qde: &ScalarQDE,
    f: &SolutionFn,
    x: Complex64,
) -> Result<f64> {
    let mut sum = ZERO;
    let mut scale: f64 = 0.0;
    for (k, poly) in qde.shifts.iter().zip(&qde.coeffs) {
        let xq = ctx.q.powi(*k as i32) * x;
        let t = poly.eval(x) * f.eval(ctx, xq)?;
        sum += t;
        scale = scale.max(t.norm());
    }
    let nh = qde.nonhom.eval(ctx, x)?;
    sum += nh;
    scale = scale.max(nh.norm());
    Ok(sum.norm() / scale.max(SCALE_FLOOR))
}

/// Coefficient function for a non-polynomial 2x2 system.
pub type CoefFn = Arc<dyn Fn(&QContext, Complex64) -> Result<Complex64> + Send + Sync>;

pub fn coef<F>(f: F) -> CoefFn
where
    F: Fn(&QContext, Complex64) -> Result<Complex64> + Send + Sync + 'static,
{
    Arc::new(f)
}

/// 2x2 first-order system `g(qx) = A(x) g(x) + b(x)` with closure
/// coefficients.
#[derive(Clone)]
pub struct System2x2 {
    pub a: [[CoefFn; 2]; 2],
    pub b: [CoefFn; 2],
}

impl System2x2 {
    pub fn homogeneous(a: [[CoefFn; 2]; 2]) -> Self {
        System2x2 {
            a,
            b: [coef(|_, _| Ok(ZERO)), coef(|_, _| Ok(ZERO))],
        }
    }
}

/// Scalar second-order relation satisfied by the first component of a 2x2
/// system, obtained by eliminating the second component:
///
/// `det A(x/q) * (a12(x)/a12(x/q)) g1(x/q) + g1(qx)
///  - (a11(x) + (a12(x)/a12(x/q)) a22(x/q)) g1(x)
///  - b1(x) + (a12(x)/a12(x/q)) a22(x/q) b1(x/q) - a12(x) b2(x/q) = 0`.
pub struct Eliminated2x2 {
    sys: System2x2,
}

pub fn eliminate_2x2(sys: &System2x2) -> Eliminated2x2 {
    Eliminated2x2 { sys: sys.clone() }
}

impl Eliminated2x2 {
    /// Relation value and the magnitude of its largest term, given the
    /// three samples `g1(x/q), g1(x), g1(qx)`.
    pub fn relation(
        &self,
        ctx: &QContext,
        x: Complex64,
        g1: [Complex64; 3],
    ) -> Result<(Complex64, f64)> {
        let xq = x / ctx.q;
        let a = &self.sys.a;
        let a12_prev = (a[0][1])(ctx, xq)?;
        if a12_prev.norm() < 1e-13 {
            return Err(QError::A12Vanishes);
        }
        let a12 = (a[0][1])(ctx, x)?;
        let a11 = (a[0][0])(ctx, x)?;
        let a11_prev = (a[0][0])(ctx, xq)?;
        let a21_prev = (a[1][0])(ctx, xq)?;
        let a22_prev = (a[1][1])(ctx, xq)?;
        let b1 = (self.sys.b[0])(ctx, x)?;
        let b1_prev = (self.sys.b[0])(ctx, xq)?;
        let b2_prev = (self.sys.b[1])(ctx, xq)?;
        let ratio = a12 / a12_prev;
        let det_prev = a11_prev * a22_prev - a12_prev * a21_prev;
        let terms = [
            det_prev * ratio * g1[0],
            g1[2],
            -(a11 + ratio * a22_prev) * g1[1],
            -b1,
            ratio * a22_prev * b1_prev,
            -a12 * b2_prev,
        ];
        let mut sum = ZERO;
        let mut scale: f64 = 0.0;
        for t in terms {
            sum += t;
            scale = scale.max(t.norm());
        }
        Ok((sum, scale))
    }

    /// Relative residual against a candidate first component.
    pub fn residual(&self, ctx: &QContext, g1: &SolutionFn, x: Complex64) -> Result<f64> {
        let vals = [
            g1.eval(ctx, x / ctx.q)?,
            g1.eval(ctx, x)?,
            g1.eval(ctx, ctx.q * x)?,
        ];
        let (sum, scale) = self.relation(ctx, x, vals)?;
        Ok(sum.norm() / scale.max(SCALE_FLOOR))
    }
}

/// q-shift operator `sum_k coeffs[k](x) T^k` where `(T f)(x) = f(qx)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QShiftOp {
    pub coeffs: Vec<Poly>,
}

impl QShiftOp {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        QShiftOp { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Compose `(T - c)` on the left:
    /// `(T - c)(sum c_k(x) T^k) = sum c_k(qx) T^{k+1} - c sum c_k(x) T^k`.
    pub fn compose_first_order(&self, ctx: &QContext, c: Complex64) -> QShiftOp {
        let n = self.coeffs.len();
        let mut out = vec![Poly::zero(); n + 1];
        for (k, p) in self.coeffs.iter().enumerate() {
            out[k + 1] = out[k + 1].add(&p.scale_arg(ctx.q));
            out[k] = out[k].add(&p.scale(-c));
        }
        QShiftOp::new(out)
    }

    /// Turn the operator into an equation `(op f)(x) + nonhom(x) = 0`.
    pub fn to_qde(&self, id: impl Into<String>, nonhom: NonHom) -> ScalarQDE {
        ScalarQDE::new(
            id,
            (0..self.coeffs.len() as i64).collect(),
            self.coeffs.clone(),
            nonhom,
        )
    }

    /// Largest relative coefficient deviation from `other`.
    pub fn max_rel_diff(&self, other: &QShiftOp) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let scale = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .map(|p| p.max_abs())
            .fold(0.0, f64::max)
            .max(SCALE_FLOOR);
        let mut worst: f64 = 0.0;
        let zero = Poly::zero();
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            let m = a.0.len().max(b.0.len());
            for i in 0..m {
                let va = a.0.get(i).copied().unwrap_or(ZERO);
                let vb = b.0.get(i).copied().unwrap_or(ZERO);
                worst = worst.max((va - vb).norm() / scale);
            }
        }
        worst
    }
}
