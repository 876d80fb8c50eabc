//! End-to-end acceptance checks; each test prints one pass/fail line.

use num_complex::Complex64;
use qmc_core::catalog::qhg::QhgParams;
use qmc_core::catalog::{deg2, deg3, jp};
use qmc_core::convolution::{convolve, subspaces};
use qmc_core::jackson::{boundary_q, yhat_partial, JacksonConfig, KernelChoice};
use qmc_core::qlinalg::CMatrix;
use qmc_core::qseries;
use qmc_core::qsystems::{scalar_residual, system_residual, NonHom, SolutionFn};
use qmc_core::suite::{run_sweep, sample_points, SweepConfig};
use qmc_core::{QContext, QError, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn ctx05() -> QContext {
    QContext::real(0.5).unwrap()
}

fn verdict(label: &str, detail: &str, ok: bool) {
    println!(
        "[acceptance] {label}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{label} failed: {detail}");
}

fn mat_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.sub(b).max_abs()
}

/// Skippable evaluation failures: grid points colliding with lattice poles
/// or falling outside a local series' disk of convergence.
fn skippable(e: &QError) -> bool {
    matches!(
        e,
        QError::AtPole(_)
            | QError::ZeroBase
            | QError::KernelPole
            | QError::BudgetExceeded(_)
            | QError::SampleAtPole(_)
    )
}

#[test]
fn criterion_01_convolution_fixtures() {
    let ctx = ctx05();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        // One pole: 2x2 convolved tuple.
        let mu = rng.gen_range(0.1..0.8);
        let p = QhgParams {
            mu,
            lambda: mu + rng.gen_range(0.1..0.7),
            alpha: rng.gen_range(0.45..0.75),
            beta: rng.gen_range(0.8..0.95),
        };
        let conv = convolve(&ctx, &p.system(&ctx).unwrap(), c(p.lambda)).unwrap();
        worst = worst.max(mat_diff(&conv.f[0], &p.expected_f1(&ctx)));
        worst = worst.max(mat_diff(&conv.f_inf, &p.expected_f_inf(&ctx)));

        // Two poles: 3x3 convolved tuple.
        let d2 = deg2::Deg2Raw {
            mu: rng.gen_range(0.0..0.8),
            lambda: rng.gen_range(0.35..1.1),
            alpha: [rng.gen_range(1.4..1.9), rng.gen_range(0.6..0.9)],
            beta: [rng.gen_range(2.2..2.8), rng.gen_range(3.1..3.7)],
        };
        let conv2 = convolve(
            &ctx,
            &d2.jp_params().unwrap().system(&ctx).unwrap(),
            c(d2.lambda),
        )
        .unwrap();
        let (einf, e1, e2) = d2.expected_tuple(&ctx);
        worst = worst.max(mat_diff(&conv2.f_inf, &einf));
        worst = worst.max(mat_diff(&conv2.f[0], &e1));
        worst = worst.max(mat_diff(&conv2.f[1], &e2));

        // Three poles: 4x4 convolved tuple, compared in the completion
        // basis.
        let d3 = deg3::Deg3Raw {
            alpha: [
                rng.gen_range(1.5..1.8),
                rng.gen_range(0.9..1.1),
                rng.gen_range(2.2..2.6),
            ],
            beta: [
                rng.gen_range(2.9..3.3),
                rng.gen_range(3.6..4.0),
                rng.gen_range(4.3..4.7),
            ],
        };
        let conv3 = convolve(
            &ctx,
            &d3.jp_params().unwrap().system(&ctx).unwrap(),
            c(d3.lambda(&ctx)),
        )
        .unwrap();
        let pf = deg3::Deg3Raw::p_fixture();
        let pi = deg3::Deg3Raw::p_inverse_fixture();
        let conj = |m: &CMatrix| pi.mul(m).mul(&pf);
        let (tinf, t1, t2, t3) = d3.expected_tilde_tuple(&ctx).unwrap();
        worst = worst.max(mat_diff(&conj(&conv3.f_inf), &tinf));
        worst = worst.max(mat_diff(&conj(&conv3.f[0]), &t1));
        worst = worst.max(mat_diff(&conj(&conv3.f[1]), &t2));
        worst = worst.max(mat_diff(&conj(&conv3.f[2]), &t3));
    }
    verdict(
        "criterion 01 convolution fixtures",
        &format!("worst entry deviation {worst:.2e}, tol 1e-12"),
        worst < 1e-12,
    );
}

#[test]
fn criterion_02_finite_window_identity() {
    let ctx = ctx05();
    let p = QhgParams {
        mu: 0.4,
        lambda: 0.9,
        alpha: 0.6,
        beta: 0.85,
    };
    let spec = p.system(&ctx).unwrap();
    let y = p.base_solution();
    let b0 = spec.b0().get(0, 0);
    let b1 = spec.b[0].get(0, 0);
    let pole = spec.poles[0];
    let ql = ctx.q_powf(p.lambda);
    let one = c(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let kk = rng.gen_range(-10i64..=0);
        let ll = rng.gen_range(0i64..=20);
        let cfg = JacksonConfig {
            kernel: KernelChoice::Standard,
            lambda: c(p.lambda),
            xi: c(1.07),
            trunc_lo: kk,
            trunc_hi: ll,
        };
        for x in sample_points(10) {
            let x = c(x);
            let y0 = yhat_partial(&ctx, &cfg, &y, 0, c(0.0), x).unwrap();
            let y1 = yhat_partial(&ctx, &cfg, &y, 1, pole, x).unwrap();
            let y0q = yhat_partial(&ctx, &cfg, &y, 0, c(0.0), ctx.q * x).unwrap();
            let y1q = yhat_partial(&ctx, &cfg, &y, 1, pole, ctx.q * x).unwrap();
            let bnd = boundary_q(&ctx, &cfg, &y, x).unwrap();
            let sum_b = b0 * y0 + b1 * y1;
            let rhs0 = y0 - sum_b + (one - ctx.q) * bnd;
            let rhs1 = y1 - sum_b
                + ((one - ql) * (-y1) + sum_b) / (one - x / pole)
                + (one - ctx.q) * x / (x - pole) * bnd;
            let scale = [y0q.norm(), y1q.norm(), sum_b.norm(), 1e-30]
                .iter()
                .cloned()
                .fold(0.0, f64::max);
            worst = worst.max((y0q - rhs0).norm() / scale);
            worst = worst.max((y1q - rhs1).norm() / scale);
        }
    }
    verdict(
        "criterion 02 finite-window identity",
        &format!("worst relative error {worst:.2e}, tol 1e-10"),
        worst < 1e-10,
    );
}

fn adaptive_residual(ctx: &QContext, jp: &jp::JpParams, lambda: f64) -> (f64, usize) {
    let spec = jp.system(ctx).unwrap();
    let conv = convolve(ctx, &spec, c(lambda)).unwrap();
    let conv_spec = conv.system().unwrap();
    let comps: Vec<_> = (0..=jp.n_poles())
        .map(|k| jp.transform_component(KernelChoice::Standard, lambda, 1.07, k))
        .collect();
    let yv = move |ctx: &QContext, x: Complex64| -> Result<Vec<Complex64>> {
        comps.iter().map(|f| f.eval(ctx, x)).collect()
    };
    let mut worst = 0.0f64;
    let mut used = 0usize;
    for x in sample_points(20) {
        match system_residual(ctx, &conv_spec, &yv, c(x)) {
            Ok(r) => {
                worst = worst.max(r);
                used += 1;
            }
            Err(e) if skippable(&e) => {}
            Err(e) => panic!("hard error at x={x}: {e}"),
        }
    }
    (worst, used)
}

#[test]
fn criterion_03_adaptive_transform_solves_convolved_system() {
    let ctx = ctx05();
    // One pole, gate holds: mu > 0 and |q|^{lambda-mu} alpha/beta < 1.
    let jp1 = jp::JpParams::new(0.4, vec![0.6], vec![0.85]).unwrap();
    let (w1, n1) = adaptive_residual(&ctx, &jp1, 0.9);
    // Three poles.
    let jp3 = jp::JpParams::new(0.5, vec![0.55, 0.7, 0.45], vec![0.8, 0.9, 0.95]).unwrap();
    let (w3, n3) = adaptive_residual(&ctx, &jp3, 1.1);
    verdict(
        "criterion 03 adaptive transform residuals",
        &format!("one-pole {w1:.2e} ({n1} pts), three-pole {w3:.2e} ({n3} pts), tol 1e-8"),
        w1 < 1e-8 && w3 < 1e-8 && n1 >= 15 && n3 >= 15,
    );
}

#[test]
fn criterion_04_full_catalog_residual_sweep() {
    let mut ok = true;
    let mut detail = String::new();
    for q in [0.3, 0.5] {
        let cfg = SweepConfig {
            q,
            ..SweepConfig::default()
        };
        let report = run_sweep(&cfg).unwrap();
        ok &= report.ok() && report.cases.len() == 240;
        let worst = report
            .cases
            .iter()
            .map(|r| r.max_residual)
            .fold(0.0, f64::max);
        detail.push_str(&format!(
            "q={q}: {}/{} pass, worst {worst:.2e}; ",
            report.n_pass,
            report.cases.len()
        ));
    }
    verdict(
        "criterion 04 catalog residual sweep",
        &format!("{detail}tol 1e-8"),
        ok,
    );
}

#[test]
fn criterion_05_solution_differences_are_homogeneous() {
    let ctx = ctx05();
    let mut worst = 0.0f64;
    let mut check = |eq: &qmc_core::qsystems::ScalarQDE, sols: &[SolutionFn]| {
        for i in 0..sols.len() {
            for j in (i + 1)..sols.len() {
                let d = SolutionFn::difference(&sols[i], &sols[j]);
                let mut used = 0usize;
                for x in sample_points(12) {
                    match scalar_residual(&ctx, eq, &d, c(x)) {
                        Ok(r) => {
                            worst = worst.max(r);
                            used += 1;
                        }
                        Err(e) if skippable(&e) => {}
                        Err(e) => panic!("hard error: {e}"),
                    }
                }
                assert!(used > 0, "no usable points for {}", d.id);
            }
        }
    };

    // Second-degree: differences of the particular solutions solve the
    // homogeneous second-order equation.
    let d2 = deg2::Deg2Raw {
        mu: 0.0,
        lambda: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    check(
        &d2.component1_equation(&ctx, true),
        &[
            d2.sol_base_inv_a1(&ctx).solution(),
            d2.sol_base_inv_a2(&ctx).solution(),
            d2.sol_base_qlam_x(&ctx).solution(),
        ],
    );

    // Third-degree raw: both non-homogeneous shapes.
    let d3 = deg3::Deg3Raw {
        alpha: [1.6, 1.0, 2.4],
        beta: [3.1, 3.8, 4.5],
    };
    let homog3 = d3.equation(&ctx, deg3::Deg3Nonhom::Homogeneous);
    check(
        &homog3,
        &[
            d3.sol_base_inv_a1(&ctx).solution(),
            d3.sol_base_inv_a2(&ctx).solution(),
            d3.sol_base_inv_a3(&ctx).solution(),
            d3.sol_base_qlam_x(&ctx).solution(),
        ],
    );
    check(
        &homog3,
        &[
            d3.sol_alt_inv_b(&ctx, 0).solution(),
            d3.sol_alt_inv_b(&ctx, 1).solution(),
            d3.sol_alt_inv_b(&ctx, 2).solution(),
            d3.sol_alt_x(&ctx).solution(),
        ],
    );

    // Third-degree variant parameterisation.
    let v3 = deg3::Deg3Var {
        h: [0.1, -0.2, 0.25],
        l: [-0.1, 0.15, 0.05],
        t: [1.0, 1.75, 2.8],
        a: 0.3,
    };
    let homog_v = v3.equation(&ctx, deg3::Deg3VarNonhom::Homogeneous);
    check(
        &homog_v,
        &[
            v3.sol_style1_pole(&ctx, 0).solution(),
            v3.sol_style1_pole(&ctx, 1).solution(),
            v3.sol_style1_pole(&ctx, 2).solution(),
            v3.sol_style1_origin(&ctx).solution(),
        ],
    );
    check(
        &homog_v,
        &[
            v3.sol_style2_pole(&ctx, 0).solution(),
            v3.sol_style2_origin(&ctx).solution(),
        ],
    );

    verdict(
        "criterion 05 homogenized differences",
        &format!("worst residual {worst:.2e}, tol 1e-8"),
        worst < 1e-8,
    );
}

#[test]
fn criterion_06_operator_factorization() {
    let ctx = ctx05();
    // Rank-drop case: the third-order operator factors through the
    // second-order bracket with a left shift factor (T - q).
    let d2 = deg2::Deg2Raw {
        mu: 0.0,
        lambda: 0.7,
        alpha: [1.6, 0.75],
        beta: [2.5, 3.4],
    };
    let compose_diff = d2
        .third_order_op(&ctx)
        .max_rel_diff(&d2.factor_bracket(&ctx).compose_first_order(&ctx, ctx.q));

    // Every third-degree closed-form solution is annihilated by the
    // fourth-order lift.  The parameters avoid binary-exact pole hits: the
    // fourth-order operator samples four octaves below each grid point, and
    // a solution pole landing exactly on that lattice would dominate the
    // residual scale with O(1) relative error.
    let d3 = deg3::Deg3Raw {
        alpha: [1.61, 0.97, 2.37],
        beta: [3.07, 3.83, 4.52],
    };
    let qde4 = d3.fourth_order(&ctx).to_qde("fourth-order", NonHom::None);
    let mut worst = 0.0f64;
    for sol in [
        d3.sol_base_inv_a1(&ctx),
        d3.sol_base_inv_a2(&ctx),
        d3.sol_base_inv_a3(&ctx),
        d3.sol_base_qlam_x(&ctx),
        d3.sol_alt_inv_b(&ctx, 0),
        d3.sol_alt_inv_b(&ctx, 1),
        d3.sol_alt_inv_b(&ctx, 2),
        d3.sol_alt_x(&ctx),
    ] {
        let s = sol.solution();
        let mut used = 0usize;
        for x in sample_points(12) {
            match scalar_residual(&ctx, &qde4, &s, c(x)) {
                Ok(r) => {
                    worst = worst.max(r);
                    used += 1;
                }
                Err(e) if skippable(&e) => {}
                Err(e) => panic!("hard error for {}: {e}", s.id),
            }
        }
        assert!(used > 0, "no usable points for {}", s.id);
    }
    verdict(
        "criterion 06 operator factorization",
        &format!("compose diff {compose_diff:.2e} (tol 1e-10), annihilation {worst:.2e} (tol 1e-7)"),
        compose_diff < 1e-10 && worst < 1e-7,
    );
}

#[test]
fn criterion_07_subspace_dimensions() {
    let ctx = ctx05();
    let (alphas, betas) = (vec![0.55, 0.7], vec![0.8, 0.9]);
    let lam_res = |mu: f64| mu + ((0.8f64 * 0.9) / (0.55 * 0.7)).ln() / ctx.log_q.re;
    let offsets = [0.0, 1e-2, 2e-2, 3e-2, 4e-2];
    let mut ok = true;
    for &dmu in &offsets {
        for &dlam in &offsets {
            let mu = dmu;
            let jp = jp::JpParams::new(mu, alphas.clone(), betas.clone()).unwrap();
            let spec = jp.system(&ctx).unwrap();
            let lambda = lam_res(mu) + dlam;
            let conv = convolve(&ctx, &spec, c(lambda)).unwrap();
            let sub = subspaces(&ctx, &spec, &conv).unwrap();
            let want_k = usize::from(dmu == 0.0);
            let want_l = usize::from(dlam == 0.0);
            if sub.k_dim() != want_k || sub.l_dim() != want_l {
                ok = false;
                println!(
                    "  mismatch at dmu={dmu} dlam={dlam}: k={} l={}",
                    sub.k_dim(),
                    sub.l_dim()
                );
            }
        }
    }
    verdict(
        "criterion 07 subspace dimensions",
        "k_dim = 1 iff mu exact, l_dim = 1 iff resonance exact, 5x5 grid",
        ok,
    );
}

#[test]
fn criterion_08_heine_and_local_expansion() {
    let ctx = ctx05();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut worst_heine = 0.0f64;
    for _ in 0..20 {
        let a = c(rng.gen_range(0.1..0.9));
        let b = c(rng.gen_range(0.1..0.9));
        let cc = c(rng.gen_range(0.3..0.95));
        let z = c(rng.gen_range(0.05..0.9));
        let lhs = qseries::phi(&ctx, &[a, b], &[cc], z).unwrap();
        let pref = qseries::poch_inf(&ctx, b).unwrap() * qseries::poch_inf(&ctx, a * z).unwrap()
            / (qseries::poch_inf(&ctx, cc).unwrap() * qseries::poch_inf(&ctx, z).unwrap());
        let rhs = pref * qseries::phi(&ctx, &[cc / b, z], &[a * z], b).unwrap();
        worst_heine = worst_heine.max((lhs - rhs).norm() / lhs.norm());
    }

    let p = QhgParams {
        mu: 0.4,
        lambda: 0.9,
        alpha: 0.6,
        beta: 0.85,
    };
    let near = p.sol_xi_inv_alpha(&ctx);
    let far = p.sol_local_at_infinity(&ctx);
    let mut worst_local = 0.0f64;
    for x in [7.0, 12.0, 33.0] {
        let v1 = near.eval(&ctx, c(x)).unwrap();
        let v2 = far.eval(&ctx, c(x)).unwrap();
        worst_local = worst_local.max((v1 - v2).norm() / v1.norm());
    }
    verdict(
        "criterion 08 Heine transform and local expansion",
        &format!("Heine {worst_heine:.2e} (tol 1e-10), local match {worst_local:.2e} (tol 1e-9)"),
        worst_heine < 1e-10 && worst_local < 1e-9,
    );
}

#[test]
fn criterion_09_series_primitive_identities() {
    let mut worst_theta = 0.0f64;
    let mut worst_poch = 0.0f64;
    for q in [0.3, 0.5] {
        let ctx = QContext::real(q).unwrap();
        for t in [0.11, 0.4, 0.9, 1.7, 2.6] {
            let lhs = qseries::theta(&ctx, ctx.q * c(t)).unwrap();
            let rhs = -qseries::theta(&ctx, c(t)).unwrap() / c(t);
            worst_theta = worst_theta.max((lhs - rhs).norm() / rhs.norm().max(1e-30));
        }
        for (a, b, x) in [(0.35, 1.2, 0.7), (0.9, 0.5, 1.4), (1.6, 0.8, 0.33)] {
            let th = |v: f64| qseries::theta(&ctx, c(v)).unwrap();
            let lhs = th(q * a * x) / th(q * b * x);
            let rhs = c(b / a) * th(a * x) / th(b * x);
            worst_theta = worst_theta.max((lhs - rhs).norm() / rhs.norm().max(1e-30));
        }
        for a in [
            Complex64::new(0.4, 0.3),
            Complex64::new(-0.8, 0.1),
            c(0.95),
        ] {
            let lhs = qseries::poch_inf(&ctx, a).unwrap();
            let rhs = (c(1.0) - a) * qseries::poch_inf(&ctx, ctx.q * a).unwrap();
            worst_poch = worst_poch.max((lhs - rhs).norm() / lhs.norm().max(1e-30));
        }
    }

    let ctx = ctx05();
    let p = QhgParams {
        mu: 0.4,
        lambda: 0.9,
        alpha: 0.6,
        beta: 0.85,
    };
    let pc = p.pseudo_constant_beta();
    let mut worst_pc = 0.0f64;
    for x in [0.3, 0.95, 2.2] {
        let v = pc.eval(&ctx, c(x)).unwrap();
        let vq = pc.eval(&ctx, ctx.q * c(x)).unwrap();
        worst_pc = worst_pc.max((v - vq).norm() / v.norm());
    }
    verdict(
        "criterion 09 series primitives",
        &format!(
            "theta {worst_theta:.2e} (tol 1e-10), poch {worst_poch:.2e} (tol 1e-12), pseudo-constant {worst_pc:.2e} (tol 1e-9)"
        ),
        worst_theta < 1e-10 && worst_poch < 1e-12 && worst_pc < 1e-9,
    );
}

#[test]
fn criterion_10_deterministic_reports() {
    let bin = env!("CARGO_BIN_EXE_qmc");
    let work = std::env::temp_dir().join(format!("qmc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let cfg_path = work.join("config.json");
    std::fs::write(
        &cfg_path,
        r#"{"version":1,"verify":{"q":0.5,"seed":99,"draws":2,"families":[],"tol":1e-8,"n_points":20,"parallel":true}}"#,
    )
    .unwrap();

    let run = |out: &std::path::Path| {
        let status = std::process::Command::new(bin)
            .arg("verify")
            .arg("--config")
            .arg(&cfg_path)
            .arg("--out")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
        (
            std::fs::read(out.join("report.json")).unwrap(),
            std::fs::read(out.join("report.csv")).unwrap(),
        )
    };
    let (json_a, csv_a) = run(&work.join("a"));
    let (json_b, csv_b) = run(&work.join("b"));
    let ok = json_a == json_b && csv_a == csv_b && !json_a.is_empty();
    std::fs::remove_dir_all(&work).ok();
    verdict(
        "criterion 10 deterministic reports",
        &format!("report.json {} bytes, byte-identical across runs", json_a.len()),
        ok,
    );
}
