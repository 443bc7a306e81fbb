//! Command-line front end: construction, spectra, scans and table
//! verification as reproducible batch jobs.
//!
//! Output is JSON by default (CSV for the table-shaped reports), always
//! with the full job configuration embedded, and byte-identical across
//! runs and thread counts for identical flags. Exit codes: 0 when every
//! check passes, 1 when a verification finds a mismatch, 2 on usage
//! errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadric_codes::code::{build_code, spectrum_report, weight_spectrum};
use quadric_codes::pencil::{scan_theorem, ScanMode, ThresholdKind};
use quadric_codes::projective::GeometryContext;
use quadric_codes::quadric::{
    classify, field_from_order, point_set, standard_form, Family, QuadraticForm,
};
use quadric_codes::tables::{divisibility_check, verify_family};
use serde_json::{json, Value};
use std::io::Read;

#[derive(Parser)]
#[command(name = "quadric-codes", version, about = "Evaluation codes of quadrics in PG(N,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct GeomArgs {
    /// Quadric family
    #[arg(long)]
    family: Family,
    /// Field order (a prime power up to 256)
    #[arg(long)]
    q: u64,
    /// Projective dimension N (2l+1 for hyperbolic/elliptic, 2l for parabolic)
    #[arg(long, conflicts_with = "l")]
    n: Option<usize>,
    /// Half-dimension parameter l instead of N
    #[arg(long)]
    l: Option<usize>,
}

impl GeomArgs {
    fn n_dim(&self) -> Result<usize, String> {
        match (self.n, self.l) {
            (Some(n), None) => Ok(n),
            (None, Some(l)) => Ok(match self.family {
                Family::Parabolic => 2 * l,
                _ => 2 * l + 1,
            }),
            (None, None) => Err("one of --n or --l is required".into()),
            (Some(_), Some(_)) => Err("--n conflicts with --l".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the point list of the standard quadric
    Points {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Read form lines (`q N a00 a01 ... aNN`) and emit quadric classes
    Classify {
        /// Input file of form lines; standard input when omitted
        #[arg(long)]
        input: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustive weight spectrum of the quadric's evaluation code
    Spectrum {
        #[command(flatten)]
        geom: GeomArgs,
        /// Truncate the reported spectrum at this weight
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Override the enumeration budget guard
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Reconcile the closed-form tables against the pair census and
    /// the brute-force spectrum
    VerifyTables {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        l: usize,
        #[arg(long)]
        q: u16,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Allow parameters outside the verified grid
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Scan the form space for two-hyperplane threshold violations
    PencilScan {
        #[command(flatten)]
        geom: GeomArgs,
        /// Sample this many forms instead of scanning exhaustively
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the q^(l-1) weight divisibility over the full spectrum
    Divisibility {
        #[command(flatten)]
        geom: GeomArgs,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn main() {
    // die quietly when the consumer closes the pipe (e.g. `... | head`)
    // instead of panicking on a failed print
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    std::process::exit(match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    });
}

fn geometry(geom: &GeomArgs) -> Result<(GeometryContext, QuadraticForm), String> {
    let n = geom.n_dim()?;
    let field = field_from_order(geom.q).map_err(|e| e.to_string())?;
    let ctx = GeometryContext::new(n, field).map_err(|e| e.to_string())?;
    let form = standard_form(geom.family, &ctx).map_err(|e| e.to_string())?;
    Ok((ctx, form))
}

fn with_config(mut report: Value, config: Value) -> Value {
    report
        .as_object_mut()
        .expect("reports are objects")
        .insert("config".into(), config);
    report
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Points { geom, format } => {
            let (ctx, form) = geometry(&geom)?;
            let points = point_set(&form, &ctx);
            let config = json!({
                "command": "points",
                "family": geom.family.as_str(),
                "q": ctx.q(),
                "N": ctx.n(),
            });
            match format {
                Format::Json => {
                    let coords: Vec<Vec<u8>> = points
                        .iter()
                        .map(|p| p.coords.iter().map(|c| c.0).collect())
                        .collect();
                    let report = json!({
                        "q": ctx.q(),
                        "N": ctx.n(),
                        "family": geom.family.as_str(),
                        "count": points.len(),
                        "points": coords,
                    });
                    println!("{}", with_config(report, config));
                }
                Format::Csv => {
                    for p in &points {
                        let row: Vec<String> =
                            p.coords.iter().map(|c| c.0.to_string()).collect();
                        println!("{}", row.join(","));
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { input, format } => {
            let mut text = String::new();
            match &input {
                Some(path) => {
                    text = std::fs::read_to_string(path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                }
                None => {
                    std::io::stdin()
                        .read_to_string(&mut text)
                        .map_err(|e| e.to_string())?;
                }
            }
            let mut rows = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (field, form) =
                    QuadraticForm::from_line(line).map_err(|e| e.to_string())?;
                let ctx =
                    GeometryContext::new(form.n_dim, field).map_err(|e| e.to_string())?;
                let class = classify(&form, &ctx).map_err(|e| e.to_string())?;
                rows.push(json!({
                    "line": line,
                    "q": ctx.q(),
                    "N": ctx.n(),
                    "vertex_dim": class.vertex_dim,
                    "base_kind": class.base_kind,
                    "point_count": class.point_count,
                }));
            }
            let config = json!({"command": "classify"});
            match format {
                Format::Json => {
                    println!("{}", with_config(json!({ "classes": rows }), config));
                }
                Format::Csv => {
                    println!("q,N,vertex_dim,base_kind,point_count");
                    for r in &rows {
                        println!(
                            "{},{},{},{},{}",
                            r["q"],
                            r["N"],
                            r["vertex_dim"],
                            r["base_kind"].as_str().unwrap(),
                            r["point_count"]
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Spectrum { geom, max_weight, threads, force, format } => {
            let (ctx, form) = geometry(&geom)?;
            let code = build_code(&form, &ctx).map_err(|e| e.to_string())?;
            let spectrum =
                weight_spectrum(&code, max_weight, threads, force).map_err(|e| e.to_string())?;
            let report = spectrum_report(&code, geom.family.as_str(), &spectrum);
            let config = json!({
                "command": "spectrum",
                "family": geom.family.as_str(),
                "q": ctx.q(),
                "N": ctx.n(),
                "max_weight": max_weight,
                "threads": threads,
                "force": force,
            });
            match format {
                Format::Json => {
                    let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                    println!("{}", with_config(value, config));
                }
                Format::Csv => {
                    println!("weight,count");
                    for e in &report.spectrum {
                        println!("{},{}", e.weight, e.count);
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyTables { family, l, q, threads, force, format } => {
            let report = verify_family(family, l, q, threads, force).map_err(|e| e.to_string())?;
            let config = json!({
                "command": "verify-tables",
                "family": family.as_str(),
                "l": l,
                "q": q,
                "threads": threads,
                "force": force,
            });
            let ok = report.all_match;
            match format {
                Format::Json => {
                    let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                    println!("{}", with_config(value, config));
                }
                Format::Csv => {
                    println!("section,label,weight,predicted,measured,match");
                    for r in &report.size_rows {
                        println!(
                            "size,{},,{},{},{}",
                            r.label,
                            r.predicted_size,
                            r.measured_size.map_or(String::new(), |v| v.to_string()),
                            r.matches
                        );
                    }
                    for r in &report.count_rows {
                        println!(
                            "count,{},{},{},{},{}",
                            r.label, r.weight, r.predicted_count, r.measured_count, r.matches
                        );
                    }
                    for w in &report.weight_lines {
                        println!(
                            "spectrum,,{},{},{},{}",
                            w.weight,
                            w.table_count,
                            w.spectrum_count.map_or(String::new(), |v| v.to_string()),
                            w.spectrum_match.map_or(String::new(), |v| v.to_string()),
                        );
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::PencilScan { geom, sample, seed, threads, force, format } => {
            let (ctx, form) = geometry(&geom)?;
            let code = build_code(&form, &ctx).map_err(|e| e.to_string())?;
            let kind = match (geom.family, ctx.n()) {
                (Family::Hyperbolic, 5) => ThresholdKind::Hyperbolic5Corollary,
                (Family::Parabolic, 4) => ThresholdKind::Parabolic4,
                _ => ThresholdKind::GeneralN,
            };
            let mode = match sample {
                Some(count) => ScanMode::Sampled { count, seed },
                None => ScanMode::Full,
            };
            let report =
                scan_theorem(&code, kind, mode, threads, force).map_err(|e| e.to_string())?;
            let config = json!({
                "command": "pencil-scan",
                "family": geom.family.as_str(),
                "q": ctx.q(),
                "N": ctx.n(),
                "sample": sample,
                "seed": seed,
                "threads": threads,
                "force": force,
            });
            let ok = report.violations.is_empty();
            match format {
                Format::Json => {
                    let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                    println!("{}", with_config(value, config));
                }
                Format::Csv => {
                    println!("key,value");
                    println!("kind,{}", report.kind);
                    println!("threshold,{}", report.threshold);
                    println!("scanned,{}", report.scanned);
                    println!("violations,{}", report.violations.len());
                    println!(
                        "max_V_irreducible_pencils,{}",
                        report
                            .max_v_irreducible_pencils
                            .map_or(String::new(), |v| v.to_string())
                    );
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Divisibility { geom, threads, force, format } => {
            let (ctx, form) = geometry(&geom)?;
            let code = build_code(&form, &ctx).map_err(|e| e.to_string())?;
            let spectrum =
                weight_spectrum(&code, None, threads, force).map_err(|e| e.to_string())?;
            let modulus = (ctx.q() as u64).pow(ctx.l() as u32 - 1);
            let divisible = divisibility_check(&spectrum, ctx.l(), ctx.q());
            let weights: Vec<usize> = spectrum.entries().map(|(w, _)| w).collect();
            let config = json!({
                "command": "divisibility",
                "family": geom.family.as_str(),
                "q": ctx.q(),
                "N": ctx.n(),
                "threads": threads,
                "force": force,
            });
            let report = json!({
                "q": ctx.q(),
                "N": ctx.n(),
                "family": geom.family.as_str(),
                "modulus": modulus,
                "divisible": divisible,
                "weights": weights,
            });
            match format {
                Format::Json => println!("{}", with_config(report, config)),
                Format::Csv => {
                    println!("key,value");
                    println!("modulus,{modulus}");
                    println!("divisible,{divisible}");
                }
            }
            Ok(if divisible { 0 } else { 1 })
        }
    }
}
