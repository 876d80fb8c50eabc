//! Convolution of a q-difference system tuple with a shift parameter
//! `lambda`, the invariant subspaces attached to it, and the quotient
//! (middle) convolution.
//!
//! For a tuple `(B_inf; B_1..B_N)` of `m x m` matrices with
//! `B_0 = I - B_inf - sum B_i`, the convolved tuple consists of
//! `(N+1)m x (N+1)m` matrices: `F_i` has the single nonzero block row `i`
//! equal to `(B_0, ..., B_i - (1-q^lambda) I, ..., B_N)`, and
//! `F_inf = I - Fhat` where `Fhat` stacks `(B_0, ..., B_N)` in every block
//! row.  The quotient is taken over `K + L`, where `K` places `ker B_i` in
//! block `i` (including `i = 0`) and `L = ker(Fhat - (1-q^lambda) I)`.

use crate::qlinalg::{self, CMatrix};
use crate::qsystems::SystemSpec;
use crate::{QContext, QError, Result, ONE, ZERO};
use num_complex::Complex64;

/// Result of the convolution: the big tuple plus enough metadata to build
/// the quotient.
#[derive(Clone, Debug)]
pub struct Convolved {
    pub lambda: Complex64,
    pub block_dim: usize,
    pub n_blocks: usize,
    pub f_inf: CMatrix,
    /// `F_1 .. F_N`.
    pub f: Vec<CMatrix>,
    pub f_hat: CMatrix,
    pub poles: Vec<Complex64>,
}

impl Convolved {
    pub fn dim(&self) -> usize {
        self.block_dim * self.n_blocks
    }

    /// The convolved system `Y(qx) = F(x) Y(x)`.
    pub fn system(&self) -> Result<SystemSpec> {
        SystemSpec::new(self.f_inf.clone(), self.f.clone(), self.poles.clone())
    }
}

/// Apply the convolution with parameter `lambda` to a system tuple.
pub fn convolve(ctx: &QContext, spec: &SystemSpec, lambda: Complex64) -> Result<Convolved> {
    let m = spec.dim();
    let n = spec.n_poles();
    let nb = n + 1;
    let big = nb * m;
    let one_minus_ql = ONE - ctx.q_power(lambda);

    let b0 = spec.b0();
    let blocks: Vec<&CMatrix> = std::iter::once(&b0).chain(spec.b.iter()).collect();

    let mut f_hat = CMatrix::zeros(big, big);
    for row in 0..nb {
        for (col, blk) in blocks.iter().enumerate() {
            f_hat.insert_block(row * m, col * m, blk);
        }
    }

    let mut f = Vec::with_capacity(n);
    for i in 1..=n {
        let mut fi = CMatrix::zeros(big, big);
        for (col, blk) in blocks.iter().enumerate() {
            fi.insert_block(i * m, col * m, blk);
        }
        // subtract (1-q^lambda) I_m on the diagonal block of row i
        for d in 0..m {
            let cur = fi.get(i * m + d, i * m + d);
            fi.set(i * m + d, i * m + d, cur - one_minus_ql);
        }
        f.push(fi);
    }

    let f_inf = CMatrix::identity(big).sub(&f_hat);

    Ok(Convolved {
        lambda,
        block_dim: m,
        n_blocks: nb,
        f_inf,
        f,
        f_hat,
        poles: spec.poles.clone(),
    })
}

/// The invariant subspaces of the convolved tuple.
#[derive(Clone, Debug)]
pub struct Subspaces {
    /// Basis of `K = (+) ker B_i`, each vector supported in one block.
    pub k_basis: Vec<Vec<Complex64>>,
    /// Basis of `L = ker(Fhat - (1-q^lambda) I)`.
    pub l_basis: Vec<Vec<Complex64>>,
    /// Dimension of `K + L` (the two spaces may intersect).
    pub sum_dim: usize,
}

impl Subspaces {
    pub fn k_dim(&self) -> usize {
        self.k_basis.len()
    }

    pub fn l_dim(&self) -> usize {
        self.l_basis.len()
    }
}

/// Compute `K` and `L` for a convolved tuple.
pub fn subspaces(ctx: &QContext, spec: &SystemSpec, conv: &Convolved) -> Result<Subspaces> {
    let m = spec.dim();
    let nb = conv.n_blocks;
    let big = conv.dim();

    let mut k_basis = Vec::new();
    let b0 = spec.b0();
    let blocks: Vec<&CMatrix> = std::iter::once(&b0).chain(spec.b.iter()).collect();
    for (i, blk) in blocks.iter().enumerate() {
        for v in blk.kernel_basis(ctx.rank_tol) {
            let mut big_v = vec![ZERO; big];
            big_v[i * m..(i + 1) * m].copy_from_slice(&v);
            k_basis.push(big_v);
        }
    }
    let _ = nb;

    let shifted = conv
        .f_hat
        .sub(&CMatrix::identity(big).scale(ONE - ctx.q_power(conv.lambda)));
    let l_basis = shifted.kernel_basis(ctx.rank_tol);

    let all: Vec<Vec<Complex64>> = k_basis.iter().chain(l_basis.iter()).cloned().collect();
    let sum_dim = qlinalg::span_dim(ctx, big, &all);

    Ok(Subspaces {
        k_basis,
        l_basis,
        sum_dim,
    })
}

/// The quotient tuple of the middle convolution, together with the change
/// of basis that realised it.
#[derive(Clone, Debug)]
pub struct MiddleConvolved {
    pub f_inf: CMatrix,
    pub f: Vec<CMatrix>,
    pub poles: Vec<Complex64>,
    pub quotient_dim: usize,
    /// Change of basis used: trailing columns span `K + L`.
    pub p: CMatrix,
    /// Largest off-block entry observed in the triangularity check,
    /// relative to the tuple scale.
    pub off_block: f64,
}

impl MiddleConvolved {
    pub fn system(&self) -> Result<SystemSpec> {
        SystemSpec::new(self.f_inf.clone(), self.f.clone(), self.poles.clone())
    }
}

/// Quotient the convolved tuple by `K + L`.
///
/// If `p` is supplied it must be invertible with trailing columns spanning
/// `K + L`; otherwise an orthonormal completion is built from the computed
/// subspaces.  The conjugated matrices must vanish on the upper-right
/// `r x d` block (`r` quotient rows, `d = dim(K+L)`) within `1e-8` of the
/// tuple scale, which certifies that the span is actually invariant; the
/// quotient action is the leading `r x r` block.
pub fn middle_convolve(
    ctx: &QContext,
    spec: &SystemSpec,
    conv: &Convolved,
    p: Option<CMatrix>,
) -> Result<MiddleConvolved> {
    let big = conv.dim();
    let sub = subspaces(ctx, spec, conv)?;
    let d = sub.sum_dim;
    let r = big - d;

    let p = match p {
        Some(p) => {
            if p.rows() != big || p.cols() != big {
                return Err(QError::DimensionMismatch(
                    "change of basis must match the convolved dimension".into(),
                ));
            }
            // Trailing columns must span K + L: appending them to the
            // subspace basis must not increase the dimension.
            let mut vecs: Vec<Vec<Complex64>> = sub
                .k_basis
                .iter()
                .chain(sub.l_basis.iter())
                .cloned()
                .collect();
            for j in r..big {
                vecs.push((0..big).map(|i| p.get(i, j)).collect());
            }
            if qlinalg::span_dim(ctx, big, &vecs) != d {
                return Err(QError::ConfigError(
                    "trailing columns of P do not span K + L".into(),
                ));
            }
            p
        }
        None => {
            let vecs: Vec<Vec<Complex64>> = sub
                .k_basis
                .iter()
                .chain(sub.l_basis.iter())
                .cloned()
                .collect();
            qlinalg::completion_with_trailing_span(ctx, big, &vecs)?
        }
    };

    let (g_inf, g) = qlinalg::conjugate_tuple(&p, &conv.f_inf, &conv.f)?;

    let scale = g
        .iter()
        .chain(std::iter::once(&g_inf))
        .map(|m| m.max_abs())
        .fold(0.0, f64::max)
        .max(1.0);
    let mut off: f64 = 0.0;
    for m in g.iter().chain(std::iter::once(&g_inf)) {
        for i in 0..r {
            for j in r..big {
                off = off.max(m.get(i, j).norm());
            }
        }
    }
    let off_rel = off / scale;
    if off_rel > 1e-8 {
        return Err(QError::BadQuotient(off_rel));
    }

    Ok(MiddleConvolved {
        f_inf: g_inf.block(0, 0, r, r),
        f: g.iter().map(|m| m.block(0, 0, r, r)).collect(),
        poles: conv.poles.clone(),
        quotient_dim: r,
        p,
        off_block: off_rel,
    })
}
