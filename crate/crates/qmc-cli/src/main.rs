//! `qmc` — residual-verification harness for the q-convolution catalog.
//!
//! Subcommands:
//!
//! * `verify` — run seeded residual sweeps over catalog suites and emit a
//!   JSON or CSV report; exit status 1 when any gated check fails.
//! * `convolve` — convolve a rank-1 system, report the F-tuple and the
//!   invariant subspace dimensions, optionally the reduced quotient tuple.
//! * `list-suites` — print the available suite identifiers.
//!
//! All randomness is seeded and report assembly is order-normalized, so
//! identical configs produce byte-identical reports.

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use qmc_core::catalog::jp::JpParams;
use qmc_core::convolution::{convolve, middle_convolve, subspaces};
use qmc_core::qlinalg::CMatrix;
use qmc_core::suite::{run_sweep, SweepConfig, SweepReport};
use qmc_core::QContext;
use std::path::PathBuf;
use std::process::ExitCode;

const CONFIG_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "qmc", about = "q-difference equation verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run residual sweeps over catalog suites.
    Verify {
        /// Versioned JSON config file; defaults apply when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Restrict to these suites (repeatable); overrides the config list.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Directory for report.json / report.csv; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stdout format.
        #[arg(long, default_value = "json")]
        format: String,
        /// Override the config seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Convolve a rank-1 system and report the tuple and subspaces.
    Convolve {
        #[arg(long)]
        config: PathBuf,
    },
    /// List available suite identifiers.
    ListSuites,
}

#[derive(serde::Deserialize)]
struct ConfigFile {
    version: u32,
    #[serde(default)]
    verify: Option<SweepConfig>,
    #[serde(default)]
    convolve: Option<ConvolveSection>,
}

#[derive(serde::Deserialize)]
struct ConvolveSection {
    q: f64,
    mu: f64,
    lambda: f64,
    alphas: Vec<f64>,
    betas: Vec<f64>,
    #[serde(default)]
    reduce: bool,
}

fn load_config(path: &PathBuf) -> Result<ConfigFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let cfg: ConfigFile =
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))?;
    if cfg.version != CONFIG_VERSION {
        return Err(format!(
            "unsupported config version {} (expected {CONFIG_VERSION})",
            cfg.version
        ));
    }
    Ok(cfg)
}

fn report_csv(report: &SweepReport) -> String {
    let mut out =
        String::from("id,family,equation,gated,gate_ok,points_used,max_residual,pass,error\n");
    for r in &report.cases {
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.3e},{},{}\n",
            r.case.id,
            r.case.family,
            r.case.equation,
            r.case.gated,
            r.gate_ok,
            r.points_used,
            r.max_residual,
            r.pass,
            r.error.as_deref().unwrap_or("")
        ));
    }
    out
}

fn run_verify(
    config: Option<PathBuf>,
    suites: Vec<String>,
    out: Option<PathBuf>,
    format: String,
    seed: Option<u64>,
) -> Result<ExitCode, String> {
    let mut cfg = match &config {
        Some(p) => load_config(p)?
            .verify
            .ok_or_else(|| "config has no `verify` section".to_string())?,
        None => SweepConfig::default(),
    };
    if !suites.is_empty() {
        cfg.families = suites;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let report = run_sweep(&cfg).map_err(|e| e.to_string())?;
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match out {
        Some(dir) => {
            std::fs::create_dir_all(&dir)
                .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            std::fs::write(dir.join("report.json"), &json).map_err(|e| e.to_string())?;
            std::fs::write(dir.join("report.csv"), report_csv(&report))
                .map_err(|e| e.to_string())?;
        }
        None => match format.as_str() {
            "json" => println!("{json}"),
            "csv" => print!("{}", report_csv(&report)),
            other => return Err(format!("unknown format `{other}`")),
        },
    }
    // An empty suite selection is a successful no-op; failures only count
    // when a case actually ran and missed its tolerance or gate.
    Ok(if report.n_fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn mat_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let v = m.get(i, j);
                    [v.re, v.im]
                })
                .collect()
        })
        .collect()
}

fn run_convolve(config: PathBuf) -> Result<ExitCode, String> {
    let section = load_config(&config)?
        .convolve
        .ok_or_else(|| "config has no `convolve` section".to_string())?;
    let ctx = QContext::real(section.q).map_err(|e| e.to_string())?;
    let jp = JpParams::new(section.mu, section.alphas, section.betas).map_err(|e| e.to_string())?;
    let spec = jp.system(&ctx).map_err(|e| e.to_string())?;
    let lambda = Complex64::new(section.lambda, 0.0);
    let conv = convolve(&ctx, &spec, lambda).map_err(|e| e.to_string())?;
    let sub = subspaces(&ctx, &spec, &conv).map_err(|e| e.to_string())?;

    let mut out = serde_json::json!({
        "dim": conv.dim(),
        "f_inf": mat_rows(&conv.f_inf),
        "f": conv.f.iter().map(mat_rows).collect::<Vec<_>>(),
        "k_dim": sub.k_dim(),
        "l_dim": sub.l_dim(),
        "sum_dim": sub.sum_dim,
    });
    if section.reduce {
        let mc = middle_convolve(&ctx, &spec, &conv, None).map_err(|e| e.to_string())?;
        out["reduced"] = serde_json::json!({
            "quotient_dim": mc.quotient_dim,
            "f_inf": mat_rows(&mc.f_inf),
            "f": mc.f.iter().map(mat_rows).collect::<Vec<_>>(),
            "off_block": mc.off_block,
        });
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            config,
            suites,
            out,
            format,
            seed,
        } => run_verify(config, suites, out, format, seed),
        Command::Convolve { config } => run_convolve(config),
        Command::ListSuites => {
            for f in qmc_core::catalog::registry::FAMILIES {
                println!("{f}");
            }
            Ok(ExitCode::SUCCESS)
        }
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
