//! Small dense complex matrices with the operations needed by the
//! convolution pipeline: block assembly, inversion, numerical kernels via
//! SVD, and conjugation of whole system tuples.

use crate::{QContext, QError, Result, ONE, ZERO};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Dense complex matrix; a thin wrapper so callers never touch the backing
/// linear-algebra crate directly.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    inner: DMatrix<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        CMatrix {
            inner: DMatrix::identity(n, n),
        }
    }

    /// Build from rows; panics on ragged input (a programming error, not a
    /// runtime condition).
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        let flat: Vec<Complex64> = rows.iter().flatten().copied().collect();
        CMatrix {
            inner: DMatrix::from_row_slice(nr, nc, &flat),
        }
    }

    /// Build from real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let lifted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&lifted)
    }

    pub fn scalar(v: Complex64) -> Self {
        CMatrix {
            inner: DMatrix::from_element(1, 1, v),
        }
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.inner[(i, j)] = v;
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        CMatrix {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        CMatrix {
            inner: &self.inner - &other.inner,
        }
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        CMatrix {
            inner: &self.inner * &other.inner,
        }
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix {
            inner: self.inner.map(|v| v * s),
        }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols() {
            return Err(QError::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols()
            )));
        }
        let mut out = vec![ZERO; self.rows()];
        for i in 0..self.rows() {
            let mut s = ZERO;
            for j in 0..self.cols() {
                s += self.inner[(i, j)] * v[j];
            }
            out[i] = s;
        }
        Ok(out)
    }

    /// Largest entry magnitude; the natural scale for relative comparisons.
    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Copy `block` into position with top-left corner `(i0, j0)`.
    pub fn insert_block(&mut self, i0: usize, j0: usize, block: &CMatrix) {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                self.inner[(i0 + i, j0 + j)] = block.inner[(i, j)];
            }
        }
    }

    pub fn block(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> CMatrix {
        let mut out = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.inner[(i, j)] = self.inner[(i0 + i, j0 + j)];
            }
        }
        out
    }

    pub fn try_inverse(&self) -> Result<CMatrix> {
        self.inner
            .clone()
            .try_inverse()
            .map(|inner| CMatrix { inner })
            .ok_or(QError::SingularMatrix)
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let svd = self.inner.clone().svd(false, false);
        svd.singular_values.iter().cloned().collect()
    }

    /// Numerical rank with threshold `rank_tol * max(sigma_max, 1)`.  The
    /// unit floor keeps a matrix whose every entry is at roundoff level
    /// rank zero instead of full rank; tuples in this crate are O(1).
    pub fn rank(&self, rank_tol: f64) -> usize {
        let sv = self.singular_values();
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        sv.iter().filter(|&&s| s > rank_tol * smax.max(1.0)).count()
    }

    /// Orthonormal basis of the null space, one vector per singular value
    /// below `rank_tol * max(sigma_max, 1)`.  Each vector is normalised so its
    /// largest-magnitude component (lowest index on ties) is real positive,
    /// making the output deterministic and stable for fixture comparison.
    pub fn kernel_basis(&self, rank_tol: f64) -> Vec<Vec<Complex64>> {
        let n = self.cols();
        // Pad with zero rows up to square so the thin SVD still exposes the
        // full set of right singular vectors.
        let mut work = self.inner.clone();
        let r = work.nrows();
        if r < n {
            work = work.insert_rows(r, n - r, ZERO);
        }
        let svd = work.svd(false, true);
        let v_t = svd.v_t.expect("requested v_t");
        let sv = &svd.singular_values;
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        let mut out = Vec::new();
        for k in 0..v_t.nrows() {
            let in_kernel = if k < sv.len() {
                sv[k] <= rank_tol * smax.max(1.0)
            } else {
                true
            };
            if !in_kernel {
                continue;
            }
            let mut v: Vec<Complex64> = (0..n).map(|j| v_t[(k, j)].conj()).collect();
            canonicalize(&mut v);
            out.push(v);
        }
        // Deterministic order: by index of first significant component.
        out.sort_by_key(|v| {
            v.iter()
                .position(|c| c.norm() > 1e-8)
                .unwrap_or(usize::MAX)
        });
        out
    }
}

/// Scale a vector so its largest-magnitude entry is 1 (real positive norm
/// then unit phase on the pivot).
fn canonicalize(v: &mut [Complex64]) {
    let mut pivot = ZERO;
    let mut best = 0.0;
    for &c in v.iter() {
        if c.norm() > best * (1.0 + 1e-12) {
            best = c.norm();
            pivot = c;
        }
    }
    if best > 0.0 {
        for c in v.iter_mut() {
            *c /= pivot;
        }
    }
}

/// Conjugate a full system tuple: returns `(P^{-1} F_inf P, [P^{-1} F_i P])`.
pub fn conjugate_tuple(
    p: &CMatrix,
    f_inf: &CMatrix,
    f: &[CMatrix],
) -> Result<(CMatrix, Vec<CMatrix>)> {
    let p_inv = p.try_inverse()?;
    let conj = |m: &CMatrix| p_inv.mul(m).mul(p);
    Ok((conj(f_inf), f.iter().map(conj).collect()))
}

/// Stack vectors as columns.
pub fn columns_matrix(n: usize, vecs: &[Vec<Complex64>]) -> CMatrix {
    let mut m = CMatrix::zeros(n, vecs.len());
    for (j, v) in vecs.iter().enumerate() {
        for (i, &c) in v.iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

/// Dimension of the span of the given vectors.
pub fn span_dim(ctx: &QContext, n: usize, vecs: &[Vec<Complex64>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    columns_matrix(n, vecs).rank(ctx.rank_tol)
}

/// Orthonormal basis completion: returns a square invertible `P` whose
/// trailing columns span the same space as `vecs` (orthonormalised) and
/// whose leading columns span the orthogonal complement.
pub fn completion_with_trailing_span(
    ctx: &QContext,
    n: usize,
    vecs: &[Vec<Complex64>],
) -> Result<CMatrix> {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    // Gram-Schmidt over the requested span.
    for v in vecs {
        let mut w = v.clone();
        for b in &basis {
            let mut dot = ZERO;
            for i in 0..n {
                dot += b[i].conj() * w[i];
            }
            for i in 0..n {
                w[i] -= dot * b[i];
            }
        }
        let norm: f64 = w.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > ctx.rank_tol {
            for c in w.iter_mut() {
                *c /= Complex64::new(norm, 0.0);
            }
            basis.push(w);
        }
    }
    let d = basis.len();
    // Complement: kernel of the d x n matrix with the basis as rows
    // (conjugated), which is orthogonal to the span.
    let mut rows_m = CMatrix::zeros(d.max(1), n);
    for (i, b) in basis.iter().enumerate() {
        for j in 0..n {
            rows_m.set(i, j, b[j].conj());
        }
    }
    let complement = if d == 0 {
        (0..n)
            .map(|i| {
                let mut e = vec![ZERO; n];
                e[i] = ONE;
                e
            })
            .collect::<Vec<_>>()
    } else {
        rows_m.kernel_basis(ctx.rank_tol)
    };
    if complement.len() + d != n {
        return Err(QError::DimensionMismatch(format!(
            "complement dimension {} + span {} != {}",
            complement.len(),
            d,
            n
        )));
    }
    let mut p = CMatrix::zeros(n, n);
    for (j, v) in complement.iter().chain(basis.iter()).enumerate() {
        for i in 0..n {
            p.set(i, j, v[i]);
        }
    }
    Ok(p)
}
