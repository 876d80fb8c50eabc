//! Numerical kernels for q-convolution, q-middle convolution and the
//! q-hypergeometric family of difference equations.
//!
//! The crate is organised bottom-up:
//!
//! * [`qseries`] — q-Pochhammer symbols, theta functions and basic
//!   hypergeometric series with certified truncation.
//! * [`qlinalg`] — small dense complex matrices, kernel bases and tuple
//!   conjugation.
//! * [`qsystems`] — linear q-difference systems, scalar q-difference
//!   equations, residual evaluation, 2x2 elimination and operator
//!   composition.
//! * [`convolution`] — the convolution of a system tuple with a shift
//!   parameter, invariant subspaces and the quotient (middle) convolution.
//! * [`jackson`] — truncated Jackson-integral transforms with the two
//!   admissible kernels, adaptive windowing and convergence gates.
//! * [`catalog`] — a registry of concrete equations and closed-form
//!   solutions used for residual verification.
//! * [`suite`] — reproducible residual sweeps over the catalog, used by the
//!   command-line front end and the acceptance tests.
//!
//! All powers `q^w` for non-integer `w` go through a single fixed branch of
//! the logarithm stored in [`QContext`], so that identities relating
//! different exponents hold to machine precision.

use num_complex::Complex64;
use thiserror::Error;

pub mod catalog;
pub mod convolution;
pub mod jackson;
pub mod par;
pub mod qlinalg;
pub mod qseries;
pub mod qsystems;
pub mod suite;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum QError {
    #[error("|q| must lie strictly between 0 and 1, got |q| = {0}")]
    BadModulus(f64),
    #[error("zero base with non-positive exponent in complex power")]
    ZeroBase,
    #[error("branch policy violated: {0}")]
    BranchViolation(String),
    #[error("series budget exceeded after {0} terms")]
    BudgetExceeded(usize),
    #[error("lower parameter {0} lies on the pole lattice q^(-n)")]
    LowerParamPole(Complex64),
    #[error("theta function undefined at t = 0")]
    ZeroArgument,
    #[error("evaluation point {0} hits a pole")]
    AtPole(Complex64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular to working precision")]
    SingularMatrix,
    #[error("kernel argument s/x lies on the lattice q^(-n)")]
    KernelPole,
    #[error("sample point coincides with pole b_{0}")]
    SampleAtPole(usize),
    #[error("a12 vanishes at the elimination point; system is not cyclic there")]
    A12Vanishes,
    #[error("quotient is not invariant to tolerance: off-block mass {0:.3e}")]
    BadQuotient(f64),
    #[error("convergence condition failed: {0}")]
    ConditionViolated(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("configuration error: {0}")]
    ConfigError(String),
}

pub type Result<T> = std::result::Result<T, QError>;

/// How to interpret non-integer complex powers `x^mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BranchPolicy {
    /// Principal branch of the logarithm, defined for all nonzero `x`.
    PrincipalLog,
    /// Only accept `x` on the positive real axis; this is the default for
    /// residual verification, where multivaluedness would otherwise leak
    /// into the comparisons.
    RealPositiveOnly,
}

/// Evaluation context: the base `q`, its fixed logarithm, and the numeric
/// tolerances used by the series and linear-algebra kernels.
#[derive(Clone, Debug)]
pub struct QContext {
    pub q: Complex64,
    /// Fixed branch of log q; every power `q^w` is `exp(w * log_q)`.
    pub log_q: Complex64,
    /// Relative tail bound for infinite products.
    pub eps_tail: f64,
    /// Relative threshold below which a series term counts as negligible.
    pub eps_term: f64,
    /// Hard cap on series/product terms before giving up.
    pub n_max: usize,
    /// Number of consecutive negligible terms required to stop a series.
    pub w_consec: usize,
    /// Relative singular-value threshold for numerical rank decisions.
    pub rank_tol: f64,
    /// Default pass/fail threshold for relative residuals.
    pub residual_tol: f64,
}

impl QContext {
    pub fn new(q: Complex64) -> Result<Self> {
        let r = q.norm();
        if !(r > 0.0 && r < 1.0) {
            return Err(QError::BadModulus(r));
        }
        Ok(QContext {
            q,
            log_q: q.ln(),
            eps_tail: 1e-14,
            eps_term: 1e-14,
            n_max: 10_000,
            w_consec: 5,
            rank_tol: 1e-10,
            residual_tol: 1e-8,
        })
    }

    pub fn real(q: f64) -> Result<Self> {
        Self::new(Complex64::new(q, 0.0))
    }

    /// `q^w` through the fixed logarithm.
    pub fn q_power(&self, w: Complex64) -> Complex64 {
        if w.im == 0.0 && w.re.fract() == 0.0 && w.re.abs() < 64.0 {
            // Exact integer powers avoid exp/log round-off; they are the
            // common case in lattice shifts.
            return self.q.powi(w.re as i32);
        }
        (w * self.log_q).exp()
    }

    /// `q^w` for a real exponent.
    pub fn q_powf(&self, w: f64) -> Complex64 {
        self.q_power(Complex64::new(w, 0.0))
    }
}

/// Complex power `x^mu` under the given branch policy.
pub fn c_power(policy: BranchPolicy, x: Complex64, mu: Complex64) -> Result<Complex64> {
    if x == Complex64::new(0.0, 0.0) {
        if mu == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if mu.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(QError::ZeroBase);
    }
    match policy {
        BranchPolicy::PrincipalLog => Ok((mu * x.ln()).exp()),
        BranchPolicy::RealPositiveOnly => {
            if x.im.abs() > 1e-12 * x.norm() || x.re <= 0.0 {
                return Err(QError::BranchViolation(format!(
                    "x = {x} is not on the positive real axis"
                )));
            }
            if mu.im.abs() > 1e-12 * (1.0 + mu.norm()) {
                return Err(QError::BranchViolation(format!(
                    "exponent {mu} is not real"
                )));
            }
            Ok(Complex64::new(x.re.powf(mu.re), 0.0))
        }
    }
}

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
