//! Command-line surface: evaluate spinors, run the verification sweep,
//! export the catalog, and check orthonormality.
//!
//! Exit codes are stable across subcommands:
//! `0` everything passed, `1` verification failures, `2` usage or input
//! errors.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::indices::HalfInt;
use crate::relations::{catalog, RelationEntry};
use crate::report::{build_report, catalog_document, catalog_markdown, write_csv};
use crate::spinors::eval_spinor;
use crate::verify::{
    orthonormality_check, verify_all, CaseStatus, RadialProfile, SweepConfig, VerificationResult,
};
use crate::{Direction, SpinorIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "spinorium",
    version,
    about = "Spherical spinor evaluation and machine verification of their operator relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a spherical spinor at a direction
    Eval(EvalArgs),
    /// Verify catalog relations against the operator engine
    Verify(VerifyArgs),
    /// Export the relation catalog
    Catalog(CatalogArgs),
    /// Check spinor orthonormality by quadrature
    Ortho(OrthoArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Relativistic angular quantum number (nonzero integer)
    #[arg(long, allow_hyphen_values = true)]
    kappa: i32,
    /// Projection mu, as a decimal ending in .5 or a p/2 fraction
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Polar angle in radians, in [0, pi]
    #[arg(long)]
    theta: f64,
    /// Azimuthal angle in radians
    #[arg(long)]
    phi: f64,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest |kappa| to sweep
    #[arg(long, default_value_t = 6)]
    kappa_max: u32,
    /// Comma-separated relation ids (default: all 91)
    #[arg(long)]
    relations: Option<String>,
    /// Residual tolerance
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Comma-separated radii for the gradient relations
    #[arg(long, default_value = "0.5,1,2")]
    radii: String,
    /// Radial profile name (repeatable; default: all of r2exp, lorentz, power_l)
    #[arg(long = "profile")]
    profiles: Vec<String>,
    /// Write the JSON report here
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the per-case CSV here
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Write catalog JSON to this path ("-" for stdout)
    #[arg(long)]
    json: Option<String>,
    /// Write a markdown table to this path ("-" for stdout)
    #[arg(long)]
    markdown: Option<String>,
}

#[derive(Args)]
struct OrthoArgs {
    /// Largest |kappa| in the Gram matrix
    #[arg(long, default_value_t = 6)]
    kappa_max: u32,
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog(args) => cmd_catalog(args),
        Command::Ortho(args) => cmd_ortho(args),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn cmd_eval(args: EvalArgs) -> i32 {
    if args.kappa == 0 {
        return usage_error("kappa must be nonzero");
    }
    let mu = match HalfInt::parse_exact(&args.mu) {
        Ok(mu) => mu,
        Err(e) => return usage_error(&format!("invalid --mu: {e}")),
    };
    let index = match SpinorIndex::new(args.kappa, mu) {
        Ok(idx) => idx,
        Err(e) => return usage_error(&e.to_string()),
    };
    let dir = match Direction::new(args.theta, args.phi) {
        Ok(d) => d,
        Err(e) => return usage_error(&e.to_string()),
    };
    let value = eval_spinor(index, dir);
    if args.json {
        let doc = serde_json::json!({
            "kappa": args.kappa,
            "mu_times_2": mu.twice(),
            "theta": dir.theta(),
            "phi": dir.phi(),
            "up": { "re": value.up.re, "im": value.up.im },
            "down": { "re": value.down.re, "im": value.down.im },
        });
        println!("{doc}");
    } else {
        println!(
            "Omega(kappa={}, mu={}) at theta={}, phi={}:",
            args.kappa,
            mu,
            dir.theta(),
            dir.phi()
        );
        println!("  up   = {:+.10e} {:+.10e}i", value.up.re, value.up.im);
        println!("  down = {:+.10e} {:+.10e}i", value.down.re, value.down.im);
    }
    EXIT_OK
}

fn parse_verify_config(
    args: &VerifyArgs,
    entries: &[RelationEntry],
) -> Result<SweepConfig, String> {
    if args.kappa_max < 1 {
        return Err("--kappa-max must be at least 1".into());
    }
    if args.tolerance.is_nan() || args.tolerance < 0.0 {
        return Err("--tolerance must be a nonnegative number".into());
    }

    let relations = match &args.relations {
        None => None,
        Some(list) => {
            let ids: Vec<String> = list
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if ids.is_empty() {
                return Err("--relations given but empty".into());
            }
            for id in &ids {
                if !entries.iter().any(|e| e.id == id) {
                    let valid: Vec<&str> = entries.iter().map(|e| e.id).collect();
                    return Err(format!(
                        "unknown relation id `{id}`; valid ids are: {}",
                        valid.join(", ")
                    ));
                }
            }
            Some(ids)
        }
    };

    let mut radii = Vec::new();
    for piece in args.radii.split(',') {
        let r: f64 = piece
            .trim()
            .parse()
            .map_err(|_| format!("invalid radius `{piece}`"))?;
        if r.is_nan() || r <= 0.0 {
            return Err(format!("radius must be positive, got {r}"));
        }
        radii.push(r);
    }
    if radii.is_empty() {
        return Err("--radii must name at least one radius".into());
    }

    let profiles = if args.profiles.is_empty() {
        RadialProfile::all().to_vec()
    } else {
        let mut out = Vec::new();
        for name in &args.profiles {
            let p = RadialProfile::by_name(name).ok_or_else(|| {
                let valid: Vec<&str> = RadialProfile::all().iter().map(|p| p.name()).collect();
                format!(
                    "unknown profile `{name}`; valid profiles: {}",
                    valid.join(", ")
                )
            })?;
            out.push(p);
        }
        out
    };

    Ok(SweepConfig {
        kappa_max: args.kappa_max,
        radii,
        profiles,
        tolerance: args.tolerance,
        relations,
    })
}

fn print_verify_summary(results: &[VerificationResult], elapsed: f64) -> (usize, usize) {
    use std::collections::BTreeMap;
    let mut per_relation: BTreeMap<(&str, crate::relations::VariantTag), (usize, f64, bool)> =
        BTreeMap::new();
    let mut failures = 0usize;
    let mut inapplicable = 0usize;
    for r in results {
        let row = per_relation
            .entry((r.relation_id.as_str(), r.variant))
            .or_insert((0, 0.0, true));
        row.0 += 1;
        if r.status == CaseStatus::Verified {
            row.1 = row.1.max(r.residual);
        } else {
            inapplicable += 1;
        }
        if !r.pass {
            row.2 = false;
            failures += 1;
        }
    }
    for ((id, variant), (cases, max_residual, pass)) in &per_relation {
        let tag = match variant {
            crate::relations::VariantTag::None => String::new(),
            v => format!(" [{v}]"),
        };
        println!(
            "{:8}{:4}  cases {:5}  max residual {:9.2e}  {}",
            id,
            tag,
            cases,
            max_residual,
            if *pass { "pass" } else { "FAIL" }
        );
    }
    println!(
        "checked {} cases in {:.2}s: {} failed, {} inapplicable",
        results.len(),
        elapsed,
        failures,
        inapplicable
    );
    (failures, inapplicable)
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let entries = catalog();
    let config = match parse_verify_config(&args, &entries) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("cannot build thread pool: {e}")),
    };

    let start = Instant::now();
    let results = pool.install(|| verify_all(&entries, &config));
    let elapsed = start.elapsed().as_secs_f64();

    let (failures, _) = print_verify_summary(&results, elapsed);

    if let Some(path) = &args.json {
        let report = build_report(&entries, &config, &results, elapsed);
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }
    if let Some(path) = &args.csv {
        let file = match File::create(path) {
            Ok(f) => f,
            Err(e) => return usage_error(&format!("cannot write {}: {e}", path.display())),
        };
        if let Err(e) = write_csv(std::io::BufWriter::new(file), &results) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }

    if failures > 0 {
        EXIT_VERIFICATION_FAILED
    } else {
        EXIT_OK
    }
}

fn write_to(target: &str, contents: &str) -> Result<(), String> {
    if target == "-" {
        print!("{contents}");
        std::io::stdout().flush().map_err(|e| e.to_string())
    } else {
        std::fs::write(target, contents).map_err(|e| format!("cannot write {target}: {e}"))
    }
}

fn cmd_catalog(args: CatalogArgs) -> i32 {
    if args.json.is_none() && args.markdown.is_none() {
        return usage_error("catalog needs --json PATH or --markdown PATH (\"-\" for stdout)");
    }
    let entries = catalog();
    if let Some(target) = &args.json {
        let doc = catalog_document(&entries);
        let text = serde_json::to_string_pretty(&doc).expect("catalog serializes");
        if let Err(e) = write_to(target, &text) {
            return usage_error(&e);
        }
    }
    if let Some(target) = &args.markdown {
        if let Err(e) = write_to(target, &catalog_markdown(&entries)) {
            return usage_error(&e);
        }
    }
    EXIT_OK
}

fn cmd_ortho(args: OrthoArgs) -> i32 {
    if args.kappa_max < 1 {
        return usage_error("--kappa-max must be at least 1");
    }
    let start = Instant::now();
    let deviation = orthonormality_check(args.kappa_max);
    println!(
        "max Gram deviation {:.1e} over |kappa| <= {} ({:.2}s)",
        deviation,
        args.kappa_max,
        start.elapsed().as_secs_f64()
    );
    if deviation < 1e-12 {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}
