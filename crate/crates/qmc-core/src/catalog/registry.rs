//! Seeded enumeration of ready-to-verify (equation, solution) cases.
//!
//! Every case pairs a scalar q-difference equation with one closed-form
//! solution and, where the solution only exists under a convergence
//! condition, the gate that must be checked before evaluating it.
//! Parameter draws are jittered around admissible base points with a
//! seeded generator, so a `(seed, draws)` pair always produces the same
//! catalog.

use crate::catalog::{deg2, deg2m, deg3, qhg};
use crate::jackson::ConvergenceGate;
use crate::qsystems::{ScalarQDE, SolutionFn};
use crate::{QContext, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One verifiable case: a scalar equation, a claimed solution, and the
/// convergence gate (if any) guarding the solution's series.
pub struct CatalogCase {
    pub id: String,
    pub family: String,
    pub equation: ScalarQDE,
    pub solution: SolutionFn,
    pub gate: Option<ConvergenceGate>,
    /// Parameter values of the draw, for reporting.
    pub params: Vec<(String, f64)>,
}

/// Serializable description of a case (everything except the closures).
#[derive(Clone, Debug, serde::Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub family: String,
    pub equation: String,
    pub params: Vec<(String, f64)>,
    pub gated: bool,
}

impl CatalogCase {
    pub fn record(&self) -> CaseRecord {
        CaseRecord {
            id: self.id.clone(),
            family: self.family.clone(),
            equation: self.equation.id.clone(),
            params: self.params.clone(),
            gated: self.gate.is_some(),
        }
    }
}

pub const FAMILIES: &[&str] = &["qhg", "deg2-raw", "deg2-var", "deg2m", "deg3-raw", "deg3-var"];

fn push_case(
    out: &mut Vec<CatalogCase>,
    family: &str,
    draw: usize,
    equation: ScalarQDE,
    solution: SolutionFn,
    gate: Option<ConvergenceGate>,
    params: &[(String, f64)],
) {
    out.push(CatalogCase {
        id: format!("{family}/d{draw}/{}", solution.id),
        family: family.into(),
        equation,
        solution,
        gate,
        params: params.to_vec(),
    });
}

fn qhg_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    // alpha < beta and lambda > mu keep every series argument inside the
    // unit disk, which is exactly what the product-form gate certifies.
    let mu = rng.gen_range(0.3..0.8);
    let p = qhg::QhgParams {
        mu,
        lambda: mu + rng.gen_range(0.1..0.7),
        alpha: rng.gen_range(0.45..0.75),
        beta: rng.gen_range(0.8..0.95),
    };
    let params = vec![
        ("mu".into(), p.mu),
        ("lambda".into(), p.lambda),
        ("alpha".into(), p.alpha),
        ("beta".into(), p.beta),
    ];
    let gate = ConvergenceGate::ProductForm {
        mu: p.mu,
        lambda: p.lambda,
        alphas: vec![p.alpha.into()],
        betas: vec![p.beta.into()],
    };
    let eq = p.component0_equation(ctx);
    let sols = [
        p.sol_xi_inv_alpha(ctx),
        p.sol_xi_qlam_x(ctx),
        p.sol_limit_inv_beta(ctx),
        p.sol_limit_x(ctx),
        p.sol_alt_inv_beta(ctx),
        p.sol_alt_x(ctx),
    ];
    for s in sols {
        push_case(out, "qhg", draw, eq.clone(), s.solution(), Some(gate.clone()), &params);
    }
    // The 1/x-local rewrite converges only for large |x|; divergent grid
    // points are skipped by the sweep.
    push_case(
        out,
        "qhg",
        draw,
        eq,
        p.sol_local_at_infinity(ctx).solution(),
        None,
        &params,
    );
}

fn deg2_raw_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    let p = deg2::Deg2Raw {
        mu: 0.0,
        lambda: rng.gen_range(0.35..1.1),
        alpha: [rng.gen_range(1.4..1.9), rng.gen_range(0.6..0.9)],
        beta: [rng.gen_range(2.2..2.8), rng.gen_range(3.1..3.7)],
    };
    let params = vec![
        ("lambda".into(), p.lambda),
        ("alpha1".into(), p.alpha[0]),
        ("alpha2".into(), p.alpha[1]),
        ("beta1".into(), p.beta[0]),
        ("beta2".into(), p.beta[1]),
    ];
    let nonhom_eq = p.component1_equation(ctx, false);
    for s in [
        p.sol_base_inv_a1(ctx),
        p.sol_base_inv_a2(ctx),
        p.sol_base_qlam_x(ctx),
    ] {
        push_case(out, "deg2-raw", draw, nonhom_eq.clone(), s.solution(), None, &params);
    }
    let xi = rng.gen_range(0.8..1.4);
    push_case(
        out,
        "deg2-raw",
        draw,
        nonhom_eq,
        p.bilateral_component1(ctx, xi).solution(),
        Some(p.gate()),
        &params,
    );
    let homog_eq = p.component1_equation(ctx, true);
    for s in [
        p.sol_alt_inv_b(ctx, false),
        p.sol_alt_inv_b(ctx, true),
        p.sol_alt_x(ctx),
    ] {
        push_case(
            out,
            "deg2-raw",
            draw,
            homog_eq.clone(),
            s.solution(),
            Some(p.gate()),
            &params,
        );
    }
}

fn deg2_var_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    // Build the draw so the exponent gate margin lambda + k1 - k2 lands in
    // a comfortable band.
    let h = [rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)];
    let l = [rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)];
    let margin = rng.gen_range(0.3..0.7);
    let k1 = rng.gen_range(-0.3..0.3);
    let k2 = k1 - (2.0 * margin - 1.0 - (h[0] + h[1] - l[0] - l[1]));
    let v = deg2::Deg2Var {
        h,
        l,
        k: [k1, k2],
        t: [
            rng.gen_range(1.0..1.3),
            rng.gen_range(2.0..2.5),
        ],
    };
    let params = vec![
        ("h1".into(), v.h[0]),
        ("h2".into(), v.h[1]),
        ("l1".into(), v.l[0]),
        ("l2".into(), v.l[1]),
        ("k1".into(), v.k[0]),
        ("k2".into(), v.k[1]),
        ("t1".into(), v.t[0]),
        ("t2".into(), v.t[1]),
    ];
    let homog = v.equation(ctx, deg2::Deg2Nonhom::Homogeneous);
    for s in [v.sol_homog(ctx, 0), v.sol_homog(ctx, 1), v.sol_homog_inf(ctx)] {
        push_case(
            out,
            "deg2-var",
            draw,
            homog.clone(),
            s.solution(),
            Some(v.gate()),
            &params,
        );
    }
    let thm = v.equation(ctx, deg2::Deg2Nonhom::ThmStyle);
    for s in [v.sol_thm_pole(ctx, 0), v.sol_thm_pole(ctx, 1), v.sol_thm_origin(ctx)] {
        push_case(out, "deg2-var", draw, thm.clone(), s.solution(), None, &params);
    }
    let xi = rng.gen_range(0.9..1.3);
    push_case(
        out,
        "deg2-var",
        draw,
        thm,
        v.bilateral(ctx, xi),
        Some(v.gate()),
        &params,
    );
    let intro = v.equation(ctx, deg2::Deg2Nonhom::IntroStyle);
    for s in [v.sol_intro_pole(ctx), v.sol_intro_origin(ctx)] {
        push_case(out, "deg2-var", draw, intro.clone(), s.solution(), None, &params);
    }
}

fn deg2m_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    let p = deg2m::Deg2m {
        mu: rng.gen_range(0.4..1.0),
        alpha: [rng.gen_range(1.4..1.9), rng.gen_range(0.6..0.9)],
        beta: [rng.gen_range(2.2..2.8), rng.gen_range(3.1..3.7)],
    };
    let params = vec![
        ("mu".into(), p.mu),
        ("alpha1".into(), p.alpha[0]),
        ("alpha2".into(), p.alpha[1]),
        ("beta1".into(), p.beta[0]),
        ("beta2".into(), p.beta[1]),
    ];
    let homog = p
        .equation(ctx, deg2m::Deg2mNonhom::Homogeneous)
        .expect("positive base point");
    for s in [
        p.sol_base_inv_a1(ctx),
        p.sol_base_inv_a2(ctx),
        p.sol_base_qlam_x(ctx),
    ] {
        push_case(
            out,
            "deg2m",
            draw,
            homog.clone(),
            s.solution(),
            Some(p.gate(ctx)),
            &params,
        );
    }
    let power = p
        .equation(ctx, deg2m::Deg2mNonhom::PowerStyle)
        .expect("positive base point");
    for s in [
        p.sol_alt_inv_b(ctx, false),
        p.sol_alt_inv_b(ctx, true),
        p.sol_alt_x(ctx),
    ] {
        push_case(out, "deg2m", draw, power.clone(), s.solution(), None, &params);
    }
    let xi = rng.gen_range(0.9..1.3);
    let theta = p
        .equation(ctx, deg2m::Deg2mNonhom::ThetaStyle { xi })
        .expect("positive base point");
    push_case(
        out,
        "deg2m",
        draw,
        theta,
        p.bilateral(ctx, xi).solution(),
        Some(p.gate(ctx)),
        &params,
    );
}

fn deg3_raw_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    let p = deg3::Deg3Raw {
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
    let mut params = Vec::new();
    for (i, &a) in p.alpha.iter().enumerate() {
        params.push((format!("alpha{}", i + 1), a));
    }
    for (i, &b) in p.beta.iter().enumerate() {
        params.push((format!("beta{}", i + 1), b));
    }
    let origin = p.equation(ctx, deg3::Deg3Nonhom::PowerOrigin);
    for s in [
        p.sol_base_inv_a1(ctx),
        p.sol_base_inv_a2(ctx),
        p.sol_base_inv_a3(ctx),
        p.sol_base_qlam_x(ctx),
    ] {
        push_case(out, "deg3-raw", draw, origin.clone(), s.solution(), None, &params);
    }
    let inf = p.equation(ctx, deg3::Deg3Nonhom::PowerInfinity);
    for s in [
        p.sol_alt_inv_b(ctx, 0),
        p.sol_alt_inv_b(ctx, 1),
        p.sol_alt_inv_b(ctx, 2),
        p.sol_alt_x(ctx),
    ] {
        push_case(out, "deg3-raw", draw, inf.clone(), s.solution(), None, &params);
    }
    let xi = rng.gen_range(0.9..1.3);
    let theta = p.equation(ctx, deg3::Deg3Nonhom::ThetaStyle { xi });
    push_case(
        out,
        "deg3-raw",
        draw,
        theta,
        p.bilateral(ctx, xi).solution(),
        None,
        &params,
    );
}

fn deg3_var_cases(ctx: &QContext, rng: &mut ChaCha8Rng, draw: usize, out: &mut Vec<CatalogCase>) {
    let v = deg3::Deg3Var {
        h: [
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
        ],
        l: [
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
            rng.gen_range(-0.3..0.3),
        ],
        t: [
            rng.gen_range(0.9..1.1),
            rng.gen_range(1.6..1.9),
            rng.gen_range(2.6..3.0),
        ],
        a: rng.gen_range(-0.5..0.5),
    };
    let mut params = vec![("a".into(), v.a)];
    for i in 0..3 {
        params.push((format!("h{}", i + 1), v.h[i]));
        params.push((format!("l{}", i + 1), v.l[i]));
        params.push((format!("t{}", i + 1), v.t[i]));
    }
    let s1 = v.equation(ctx, deg3::Deg3VarNonhom::Style1);
    for s in [
        v.sol_style1_pole(ctx, 0),
        v.sol_style1_pole(ctx, 1),
        v.sol_style1_pole(ctx, 2),
        v.sol_style1_origin(ctx),
    ] {
        push_case(out, "deg3-var", draw, s1.clone(), s.solution(), None, &params);
    }
    let s2 = v.equation(ctx, deg3::Deg3VarNonhom::Style2);
    for s in [
        v.sol_style2_pole(ctx, 0),
        v.sol_style2_pole(ctx, 1),
        v.sol_style2_pole(ctx, 2),
        v.sol_style2_origin(ctx),
    ] {
        push_case(out, "deg3-var", draw, s2.clone(), s.solution(), None, &params);
    }
    // Differences of two solutions of the same non-homogeneous equation
    // solve the homogeneous variant.
    let homog = v.equation(ctx, deg3::Deg3VarNonhom::Homogeneous);
    let diff = SolutionFn::difference(
        &v.sol_style1_pole(ctx, 0).solution(),
        &v.sol_style1_origin(ctx).solution(),
    );
    push_case(out, "deg3-var", draw, homog, diff, None, &params);
}

/// Build the full catalog for one context: `draws` jittered parameter draws
/// for each family in [`FAMILIES`].
pub fn build_catalog(
    ctx: &QContext,
    seed: u64,
    draws: usize,
    families: &[String],
) -> Result<Vec<CatalogCase>> {
    let mut out = Vec::new();
    let want = |f: &str| families.is_empty() || families.iter().any(|g| g == f);
    // One generator per family keeps draws stable when families are
    // filtered.
    for (fi, fam) in FAMILIES.iter().enumerate() {
        if !want(fam) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((fi as u64 + 1) << 32));
        for d in 0..draws {
            match *fam {
                "qhg" => qhg_cases(ctx, &mut rng, d, &mut out),
                "deg2-raw" => deg2_raw_cases(ctx, &mut rng, d, &mut out),
                "deg2-var" => deg2_var_cases(ctx, &mut rng, d, &mut out),
                "deg2m" => deg2m_cases(ctx, &mut rng, d, &mut out),
                "deg3-raw" => deg3_raw_cases(ctx, &mut rng, d, &mut out),
                "deg3-var" => deg3_var_cases(ctx, &mut rng, d, &mut out),
                _ => unreachable!(),
            }
        }
    }
    Ok(out)
}
