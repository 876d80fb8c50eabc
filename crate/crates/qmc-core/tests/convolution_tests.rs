//! Convolution layer: fixture tuples, invariant subspaces, quotients.

use num_complex::Complex64;
use qmc_core::catalog::qhg::QhgParams;
use qmc_core::catalog::{deg2, deg2m, deg3, jp};
use qmc_core::convolution::{convolve, middle_convolve, subspaces};
use qmc_core::qlinalg::CMatrix;
use qmc_core::{QContext, QError};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ctx() -> QContext {
    QContext::real(0.5).unwrap()
}

fn diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.sub(b).max_abs()
}

#[test]
fn one_pole_fixture() {
    let ctx = ctx();
    let p = QhgParams {
        mu: 0.4,
        lambda: 0.9,
        alpha: 0.6,
        beta: 0.85,
    };
    let conv = convolve(&ctx, &p.system(&ctx).unwrap(), c(p.lambda)).unwrap();
    assert_eq!(conv.dim(), 2);
    assert!(diff(&conv.f[0], &p.expected_f1(&ctx)) < 1e-14);
    assert!(diff(&conv.f_inf, &p.expected_f_inf(&ctx)) < 1e-14);
    // F_inf = I - Fhat by construction.
    let recon = CMatrix::identity(2).sub(&conv.f_hat);
    assert!(diff(&conv.f_inf, &recon) == 0.0);
}

#[test]
fn two_pole_fixture() {
    let ctx = ctx();
    let d2 = deg2::Deg2Raw {
        mu: 0.3,
        lambda: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    let conv = convolve(&ctx, &d2.jp_params().unwrap().system(&ctx).unwrap(), c(d2.lambda)).unwrap();
    assert_eq!(conv.dim(), 3);
    let (einf, e1, e2) = d2.expected_tuple(&ctx);
    assert!(diff(&conv.f_inf, &einf) < 1e-14);
    assert!(diff(&conv.f[0], &e1) < 1e-14);
    assert!(diff(&conv.f[1], &e2) < 1e-14);
}

#[test]
fn three_pole_fixture_in_completion_basis() {
    let ctx = ctx();
    let d3 = deg3::Deg3Raw {
        alpha: [1.6, 1.0, 2.4],
        beta: [3.1, 3.8, 4.5],
    };
    let conv = convolve(
        &ctx,
        &d3.jp_params().unwrap().system(&ctx).unwrap(),
        c(d3.lambda(&ctx)),
    )
    .unwrap();
    assert_eq!(conv.dim(), 4);
    let p = deg3::Deg3Raw::p_fixture();
    let p_inv = deg3::Deg3Raw::p_inverse_fixture();
    assert!(diff(&p.mul(&p_inv), &CMatrix::identity(4)) == 0.0);
    let conj = |m: &CMatrix| p_inv.mul(m).mul(&p);
    let (tinf, t1, t2, t3) = d3.expected_tilde_tuple(&ctx).unwrap();
    assert!(diff(&conj(&conv.f_inf), &tinf) < 1e-13);
    assert!(diff(&conj(&conv.f[0]), &t1) < 1e-13);
    assert!(diff(&conj(&conv.f[1]), &t2) < 1e-13);
    assert!(diff(&conj(&conv.f[2]), &t3) < 1e-13);
}

/// The origin eigenspace is one-dimensional exactly when `mu = 0`; the
/// shift eigenspace exactly on resonance `q^lambda = q^mu prod beta / prod
/// alpha`.
#[test]
fn subspace_dimensions_track_degeneracies() {
    let ctx = ctx();
    for (mu, resonant) in [(0.0, false), (0.4, false), (0.0, true), (0.4, true)] {
        let jp = jp::JpParams::new(mu, vec![0.55, 0.7], vec![0.8, 0.9]).unwrap();
        let spec = jp.system(&ctx).unwrap();
        let lam = if resonant {
            mu + ((0.8f64 * 0.9) / (0.55 * 0.7)).ln() / ctx.log_q.re
        } else {
            0.77
        };
        let conv = convolve(&ctx, &spec, c(lam)).unwrap();
        let sub = subspaces(&ctx, &spec, &conv).unwrap();
        let want_k = usize::from(mu == 0.0);
        let want_l = usize::from(resonant);
        assert_eq!(sub.k_dim(), want_k, "mu={mu} resonant={resonant}");
        assert_eq!(sub.l_dim(), want_l, "mu={mu} resonant={resonant}");
        assert_eq!(sub.sum_dim, want_k + want_l);
    }
}

#[test]
fn quotient_matches_reduced_tuple_for_rank_drop_origin() {
    let ctx = ctx();
    let d2 = deg2::Deg2Raw {
        mu: 0.0,
        lambda: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    let spec = d2.jp_params().unwrap().system(&ctx).unwrap();
    let conv = convolve(&ctx, &spec, c(d2.lambda)).unwrap();
    let mc = middle_convolve(&ctx, &spec, &conv, None).unwrap();
    assert_eq!(mc.quotient_dim, 2);
    assert!(mc.off_block < 1e-12);
    let (rinf, r1, r2) = d2.expected_reduced_tuple(&ctx);
    assert!(diff(&mc.f_inf, &rinf) < 1e-12);
    assert!(diff(&mc.f[0], &r1) < 1e-12);
    assert!(diff(&mc.f[1], &r2) < 1e-12);
}

#[test]
fn quotient_matches_reduced_tuple_on_resonance() {
    let ctx = ctx();
    let m2 = deg2m::Deg2m {
        mu: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    let spec = m2.jp_params().unwrap().system(&ctx).unwrap();
    let conv = convolve(&ctx, &spec, c(m2.lambda(&ctx))).unwrap();
    let mc = middle_convolve(&ctx, &spec, &conv, Some(deg2m::Deg2m::p_fixture())).unwrap();
    assert_eq!(mc.quotient_dim, 2);
    let (rinf, r1, r2) = m2.expected_reduced_tuple(&ctx).unwrap();
    assert!(diff(&mc.f_inf, &rinf) < 1e-12);
    assert!(diff(&mc.f[0], &r1) < 1e-12);
    assert!(diff(&mc.f[1], &r2) < 1e-12);
}

#[test]
fn middle_convolve_rejects_bad_change_of_basis() {
    let ctx = ctx();
    let m2 = deg2m::Deg2m {
        mu: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    let spec = m2.jp_params().unwrap().system(&ctx).unwrap();
    let conv = convolve(&ctx, &spec, c(m2.lambda(&ctx))).unwrap();
    // Wrong dimension.
    assert!(matches!(
        middle_convolve(&ctx, &spec, &conv, Some(CMatrix::identity(2))),
        Err(QError::DimensionMismatch(_))
    ));
    // Right dimension but trailing column misses the eigenspace.
    assert!(matches!(
        middle_convolve(&ctx, &spec, &conv, Some(CMatrix::identity(3))),
        Err(QError::ConfigError(_))
    ));
}

#[test]
fn degenerate_systems_are_rejected() {
    use qmc_core::qsystems::SystemSpec;
    let b = CMatrix::identity(1);
    assert!(matches!(
        SystemSpec::new(b.clone(), vec![b.clone()], vec![c(0.0)]),
        Err(QError::DegenerateParameters(_))
    ));
    assert!(matches!(
        SystemSpec::new(
            b.clone(),
            vec![b.clone(), b.clone()],
            vec![c(1.5), c(1.5)]
        ),
        Err(QError::DegenerateParameters(_))
    ));
    assert!(matches!(
        SystemSpec::new(b.clone(), vec![b, CMatrix::identity(2)], vec![c(1.0), c(2.0)]),
        Err(QError::DimensionMismatch(_))
    ));
}
