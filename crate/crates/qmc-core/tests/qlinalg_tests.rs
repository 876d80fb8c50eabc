//! Matrix layer: inversion, numerical kernels, span completion.

use num_complex::Complex64;
use qmc_core::qlinalg::{
    self, columns_matrix, completion_with_trailing_span, conjugate_tuple, span_dim, CMatrix,
};
use qmc_core::QContext;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ci(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn inverse_roundtrip() {
    let m = CMatrix::from_rows(&[
        vec![ci(1.0, 0.5), c(2.0), c(-0.3)],
        vec![c(0.0), ci(0.7, -1.2), c(1.1)],
        vec![c(4.0), c(0.2), ci(-0.9, 0.1)],
    ]);
    let inv = m.try_inverse().unwrap();
    let d = m.mul(&inv).sub(&CMatrix::identity(3)).max_abs();
    assert!(d < 1e-13, "roundtrip defect {d}");
}

#[test]
fn singular_matrix_is_rejected() {
    let m = CMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
    assert!(m.try_inverse().is_err());
}

#[test]
fn kernel_basis_of_rank_one_matrix() {
    let m = CMatrix::from_real_rows(&[vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]]);
    assert_eq!(m.rank(1e-10), 1);
    let ker = m.kernel_basis(1e-10);
    assert_eq!(ker.len(), 2);
    for v in &ker {
        let img = m.mul_vec(v).unwrap();
        let r: f64 = img.iter().map(|c| c.norm()).fold(0.0, f64::max);
        assert!(r < 1e-12, "kernel vector maps to {r}");
    }
    // Canonicalized output is deterministic call to call.
    assert_eq!(ker, m.kernel_basis(1e-10));
}

/// Regression: a matrix whose entries are all at roundoff level must count
/// as the zero matrix (rank 0), not as full rank under a purely relative
/// singular-value threshold.  Kernel dimensions of convolved tuples depend
/// on this.
#[test]
fn roundoff_matrix_has_rank_zero() {
    let eps = 1.5e-16;
    let m = CMatrix::from_real_rows(&[vec![eps, -eps], vec![eps / 3.0, eps]]);
    assert_eq!(m.rank(1e-10), 0);
    assert_eq!(m.kernel_basis(1e-10).len(), 2);
}

#[test]
fn kernel_of_wide_matrix_pads_missing_rows() {
    // 1x3 matrix: kernel is 2-dimensional even though the thin SVD only
    // sees one singular value.
    let m = CMatrix::from_real_rows(&[vec![1.0, 1.0, 1.0]]);
    let ker = m.kernel_basis(1e-10);
    assert_eq!(ker.len(), 2);
}

#[test]
fn span_dim_counts_independent_vectors() {
    let ctx = QContext::real(0.5).unwrap();
    let v1 = vec![c(1.0), c(0.0), c(1.0)];
    let v2 = vec![c(0.0), c(1.0), c(1.0)];
    let v3 = vec![c(1.0), c(1.0), c(2.0)]; // v1 + v2
    assert_eq!(span_dim(&ctx, 3, &[v1.clone()]), 1);
    assert_eq!(span_dim(&ctx, 3, &[v1.clone(), v2.clone()]), 2);
    assert_eq!(span_dim(&ctx, 3, &[v1, v2, v3]), 2);
    assert_eq!(span_dim(&ctx, 3, &[]), 0);
}

#[test]
fn completion_puts_span_in_trailing_columns() {
    let ctx = QContext::real(0.5).unwrap();
    let vecs = vec![
        vec![c(1.0), c(1.0), c(1.0), c(1.0)],
        vec![c(1.0), c(0.0), c(0.0), c(0.0)],
    ];
    let p = completion_with_trailing_span(&ctx, 4, &vecs).unwrap();
    assert!(p.try_inverse().is_ok());
    // Trailing two columns must span the same 2-dimensional space.
    let mut joint = vecs.clone();
    for j in 2..4 {
        joint.push((0..4).map(|i| p.get(i, j)).collect());
    }
    assert_eq!(span_dim(&ctx, 4, &joint), 2);
}

#[test]
fn conjugation_roundtrip() {
    let p = CMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 1.0]]);
    let f_inf = CMatrix::from_real_rows(&[vec![0.3, 0.8], vec![-0.1, 0.5]]);
    let f1 = CMatrix::from_real_rows(&[vec![1.0, 0.0], vec![2.0, -1.0]]);
    let (g_inf, g) = conjugate_tuple(&p, &f_inf, &[f1.clone()]).unwrap();
    let p_inv = p.try_inverse().unwrap();
    let (h_inf, h) = conjugate_tuple(&p_inv, &g_inf, &g).unwrap();
    assert!(h_inf.sub(&f_inf).max_abs() < 1e-13);
    assert!(h[0].sub(&f1).max_abs() < 1e-13);
}

#[test]
fn block_insert_and_extract_roundtrip() {
    let b = CMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
    let mut m = CMatrix::zeros(4, 4);
    m.insert_block(1, 2, &b);
    assert!(m.block(1, 2, 2, 2).sub(&b).max_abs() == 0.0);
    assert_eq!(m.get(0, 0), c(0.0));
    assert_eq!(m.get(2, 3), c(4.0));
}

#[test]
fn mul_vec_checks_dimensions() {
    let m = CMatrix::identity(3);
    assert!(m.mul_vec(&[c(1.0), c(2.0)]).is_err());
    let v = m.mul_vec(&[c(1.0), c(2.0), c(3.0)]).unwrap();
    assert_eq!(v, vec![c(1.0), c(2.0), c(3.0)]);
}

#[test]
fn columns_matrix_layout() {
    let m = columns_matrix(2, &[vec![c(1.0), c(2.0)], vec![c(3.0), c(4.0)]]);
    assert_eq!(m.rows(), 2);
    assert_eq!(m.cols(), 2);
    assert_eq!(m.get(0, 1), c(3.0));
    assert_eq!(m.get(1, 0), c(2.0));
}

#[test]
fn scalar_and_max_abs() {
    let m = qlinalg::CMatrix::scalar(ci(3.0, 4.0));
    assert_eq!(m.rows(), 1);
    assert!((m.max_abs() - 5.0).abs() < 1e-15);
}
