//! `theta`: compute with filtered Sullivan models from the command line.
//!
//! Exit codes: 0 success/verified, 1 violation found, 2 input error,
//! 3 inconclusive-only result.

use clap::{Parser, Subcommand};
use distances::{d_cohi_module, HalfValue};
use field_linalg::{GaussianRational, Rational, Scalar};
use interleaving_verify::{lower_bound_scan, verify_certificate};
use model_corpus::{
    entries, field_of, parse_certificate, parse_model, FieldChoice, FormatError, LoadedModel,
};
use persistence_theta::{barcode, build_theta, persistence_cohomology, Barcode};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "theta", about = "Filtered Sullivan models: barcodes, distances, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of the human report.
    #[arg(long, global = true)]
    json: bool,
    /// Require the input files to be over this field (Q or Q(i)).
    #[arg(long, global = true)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a model file: d^2 = 0, base closure, staging, minimality.
    Check { file: PathBuf },
    /// Print the stage filtration: which generators exist at each stage.
    Theta {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the cohomology dimensions of the full algebra through the cap.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the stage-cohomology barcode of a model.
    Barcode {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Module-level cohomology interleaving distance of two models.
    Dist {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Verify an interleaving certificate against two models.
    Verify {
        file_a: PathBuf,
        file_b: PathBuf,
        cert: PathBuf,
    },
    /// Scan for obstructions and certify a lower bound for the distance.
    Obstruct {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Largest half-integer pattern to test (for example 4 or 7/2).
        #[arg(long = "eps-max")]
        eps_max: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Closed-form distance bounds for one model or a pair of spaces.
    Bounds {
        file_a: PathBuf,
        file_b: Option<PathBuf>,
    },
    /// Run every bundled corpus entry and check its expected values.
    RunCorpus,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn violation(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_VIOLATION,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Read a file's field declaration and check it against --field.
fn file_field(text: &str, required: &Option<String>) -> Result<FieldChoice, Failure> {
    let field = field_of(text).map_err(Failure::input)?;
    if let Some(name) = required {
        if name != field.name() {
            return Err(Failure::input(format!(
                "file is over {} but --field {name} was required",
                field.name()
            )));
        }
    }
    Ok(field)
}

fn load<S: Scalar>(text: &str, cap: Option<usize>) -> Result<LoadedModel<S>, Failure> {
    let mut loaded = parse_model::<S>(text).map_err(|e| match e {
        FormatError::Model(_) | FormatError::Algebra(_) => Failure::violation(e),
        other => Failure::input(other),
    })?;
    if let Some(n) = cap {
        if n > loaded.cap {
            loaded.raise_cap(n);
        } else {
            loaded.cap = n;
        }
    }
    Ok(loaded)
}

/// Dispatch a generic command body on the field a file declares.
macro_rules! dispatch {
    ($field:expr, $S:ident, $body:expr) => {
        match $field {
            FieldChoice::Rational => {
                type $S = Rational;
                $body
            }
            FieldChoice::Gaussian => {
                type $S = GaussianRational;
                $body
            }
        }
    };
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { file } => cmd_check(file, cli),
        Command::Theta { file, cap } => cmd_theta(file, *cap, cli),
        Command::Cohomology { file, cap } => cmd_cohomology(file, *cap, cli),
        Command::Barcode { file, cap } => cmd_barcode(file, *cap, cli),
        Command::Dist { file_a, file_b, cap } => cmd_dist(file_a, file_b, *cap, cli),
        Command::Verify { file_a, file_b, cert } => cmd_verify(file_a, file_b, cert, cli),
        Command::Obstruct {
            file_a,
            file_b,
            eps_max,
            cap,
        } => cmd_obstruct(file_a, file_b, eps_max, *cap, cli),
        Command::Bounds { file_a, file_b } => cmd_bounds(file_a, file_b.as_deref(), cli),
        Command::RunCorpus => cmd_run_corpus(cli),
    }
}

fn truncation_note(t: Option<u32>) -> String {
    match t {
        Some(stage) => format!(" (truncated at stage {stage}; results are bounds)"),
        None => String::new(),
    }
}

fn cmd_check(file: &Path, cli: &Cli) -> CmdResult {
    let text = read(file)?;
    let field = file_field(&text, &cli.field)?;
    dispatch!(field, S, {
        let loaded = load::<S>(&text, None)?;
        let m = &loaded.model;
        if cli.json {
            let value = json!({
                "ok": true,
                "field": field.name(),
                "cap": loaded.cap,
                "generators": m.algebra.generators().len(),
                "base": m.base_count,
                "fiber": m.algebra.generators().len() - m.base_count,
                "truncated_at": m.truncated_at,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!(
                "ok: {} generators ({} base, {} fiber) over {}, cap = {}{}",
                m.algebra.generators().len(),
                m.base_count,
                m.algebra.generators().len() - m.base_count,
                field.name(),
                loaded.cap,
                truncation_note(m.truncated_at),
            );
        }
        Ok(EXIT_OK)
    })
}

fn cmd_theta(file: &Path, cap: Option<usize>, cli: &Cli) -> CmdResult {
    let text = read(file)?;
    let field = file_field(&text, &cli.field)?;
    dispatch!(field, S, {
        let loaded = load::<S>(&text, cap)?;
        let report_cap = loaded.cap;
        let truncated = loaded.model.truncated_at;
        let theta = build_theta(loaded.model).map_err(Failure::violation)?;
        let stages: Vec<(u32, Vec<String>)> = (0..=theta.stabilization)
            .map(|s| {
                let allowed = theta.allowed_at(s);
                let names = theta
                    .model
                    .algebra
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(id, _)| allowed[*id])
                    .map(|(_, g)| g.name.clone())
                    .collect();
                (s, names)
            })
            .collect();
        if cli.json {
            let value = json!({
                "cap": report_cap,
                "stabilization": theta.stabilization,
                "truncated_at": truncated,
                "stages": stages.iter().map(|(s, names)| json!({
                    "stage": s,
                    "generators": names,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!(
                "cap = {report_cap}, stabilization index = {}{}",
                theta.stabilization,
                truncation_note(truncated)
            );
            for (s, names) in &stages {
                println!("stage {s}: {}", names.join(", "));
            }
        }
        Ok(EXIT_OK)
    })
}

fn cmd_cohomology(file: &Path, cap: Option<usize>, cli: &Cli) -> CmdResult {
    let text = read(file)?;
    let field = file_field(&text, &cli.field)?;
    dispatch!(field, S, {
        let loaded = load::<S>(&text, cap)?;
        let report_cap = loaded.cap;
        let truncated = loaded.model.truncated_at;
        let theta = build_theta(loaded.model).map_err(Failure::violation)?;
        let h = theta
            .stage_cohomology(theta.stabilization, report_cap)
            .map_err(Failure::violation)?;
        let dims = h.dims();
        if cli.json {
            let value = json!({
                "cap": report_cap,
                "truncated_at": truncated,
                "dims": dims,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!("cap = {report_cap}{}", truncation_note(truncated));
            for (n, dim) in dims.iter().enumerate() {
                println!("H^{n}: dim {dim}");
            }
        }
        Ok(EXIT_OK)
    })
}

fn barcode_json(bc: &Barcode, cap: usize) -> serde_json::Value {
    json!({
        "cap": cap,
        "truncated_at": bc.truncated_at,
        "bars": bc.bars.iter().map(|b| json!({
            "degree": b.degree,
            "birth": b.birth,
            "death": b.death,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_barcode(file: &Path, cap: Option<usize>, cli: &Cli) -> CmdResult {
    let text = read(file)?;
    let field = file_field(&text, &cli.field)?;
    dispatch!(field, S, {
        let loaded = load::<S>(&text, cap)?;
        let report_cap = loaded.cap;
        let theta = build_theta(loaded.model).map_err(Failure::violation)?;
        let module = persistence_cohomology(&theta, report_cap).map_err(Failure::violation)?;
        let bc = barcode(&module);
        if cli.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&barcode_json(&bc, report_cap)).unwrap()
            );
        } else {
            println!("cap = {report_cap}{}", truncation_note(bc.truncated_at));
            print!("{}", bc.serialize());
        }
        Ok(EXIT_OK)
    })
}

/// Load two model files over a shared field and build their filtrations at
/// a shared cap.
fn load_pair_texts(
    file_a: &Path,
    file_b: &Path,
    cli: &Cli,
) -> Result<(String, String, FieldChoice), Failure> {
    let text_a = read(file_a)?;
    let text_b = read(file_b)?;
    let field_a = file_field(&text_a, &cli.field)?;
    let field_b = file_field(&text_b, &cli.field)?;
    if field_a != field_b {
        return Err(Failure::input(format!(
            "cannot mix fields: {} is over {}, {} is over {}",
            file_a.display(),
            field_a.name(),
            file_b.display(),
            field_b.name()
        )));
    }
    Ok((text_a, text_b, field_a))
}

fn cmd_dist(file_a: &Path, file_b: &Path, cap: Option<usize>, cli: &Cli) -> CmdResult {
    let (text_a, text_b, field) = load_pair_texts(file_a, file_b, cli)?;
    dispatch!(field, S, {
        let a = load::<S>(&text_a, cap)?;
        let b = load::<S>(&text_b, cap)?;
        let p = model_corpus::pair(a, b).map_err(Failure::violation)?;
        let report = d_cohi_module(&p.f, &p.g, p.cap).map_err(Failure::violation)?;
        if cli.json {
            let value = json!({
                "cap": p.cap,
                "module_level": true,
                "bound_only": report.bound_only,
                "value": report.value.to_string(),
                "per_degree": report.per_degree.iter().map(|d| json!({
                    "degree": d.degree,
                    "value": d.value.to_string(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!("cap = {}", p.cap);
            print!("{}", report.render());
        }
        Ok(EXIT_OK)
    })
}

fn cmd_verify(file_a: &Path, file_b: &Path, cert: &Path, cli: &Cli) -> CmdResult {
    let (text_a, text_b, field) = load_pair_texts(file_a, file_b, cli)?;
    let cert_text = read(cert)?;
    dispatch!(field, S, {
        let a = load::<S>(&text_a, None)?;
        let b = load::<S>(&text_b, None)?;
        let p = model_corpus::pair(a, b).map_err(Failure::violation)?;
        let certificate =
            parse_certificate::<S>(&cert_text, &p.f.model, &p.g.model).map_err(Failure::input)?;
        let eps = HalfValue::from_halves(certificate.eps_halves);
        match verify_certificate(&certificate, &p.f, &p.g) {
            Ok(()) => {
                if cli.json {
                    let value = json!({
                        "cap": p.cap,
                        "verified": true,
                        "epsilon": eps.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                } else {
                    println!("VERIFIED: interleaving at epsilon = {eps} (cap = {})", p.cap);
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                if cli.json {
                    let value = json!({
                        "cap": p.cap,
                        "verified": false,
                        "epsilon": eps.to_string(),
                        "error": e.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                } else {
                    println!("REJECTED at epsilon = {eps} (cap = {}): {e}", p.cap);
                }
                Ok(EXIT_VIOLATION)
            }
        }
    })
}

fn cmd_obstruct(
    file_a: &Path,
    file_b: &Path,
    eps_max: &Option<String>,
    cap: Option<usize>,
    cli: &Cli,
) -> CmdResult {
    let (text_a, text_b, field) = load_pair_texts(file_a, file_b, cli)?;
    dispatch!(field, S, {
        let a = load::<S>(&text_a, cap)?;
        let b = load::<S>(&text_b, cap)?;
        let p = model_corpus::pair(a, b).map_err(Failure::violation)?;
        let eps_max_halves = match eps_max {
            Some(text) => HalfValue::parse(text)
                .and_then(HalfValue::halves)
                .ok_or_else(|| {
                    Failure::input(format!("--eps-max {text}: expected a finite half-integer"))
                })?,
            None => 2 * p.cap as u32,
        };
        let scan =
            lower_bound_scan(&p.f, &p.g, p.cap, eps_max_halves).map_err(Failure::violation)?;
        if cli.json {
            let value = json!({
                "cap": p.cap,
                "eps_max": HalfValue::from_halves(eps_max_halves).to_string(),
                "bound": scan.bound.to_string(),
                "patterns": scan.verdicts.iter().map(|(h, v)| json!({
                    "epsilon": HalfValue::from_halves(*h).to_string(),
                    "obstructed": v.is_obstructed(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!(
                "cap = {}, patterns up to {}",
                p.cap,
                HalfValue::from_halves(eps_max_halves)
            );
            for (h, verdict) in &scan.verdicts {
                let eps = HalfValue::from_halves(*h);
                match verdict {
                    interleaving_verify::ObstructionVerdict::Obstructed(ws) => {
                        let w = &ws[0];
                        println!(
                            "epsilon = {eps}: OBSTRUCTED ({}, degree {}, stage {}: {})",
                            w.mechanism, w.degree, w.stage, w.description
                        );
                    }
                    interleaving_verify::ObstructionVerdict::NoObstructionFound => {
                        println!("epsilon = {eps}: no obstruction found");
                    }
                }
            }
            println!("certified lower bound: {}", scan.bound);
        }
        if scan.bound > HalfValue::ZERO {
            Ok(EXIT_OK)
        } else {
            Ok(EXIT_INCONCLUSIVE)
        }
    })
}

fn cmd_bounds(file_a: &Path, file_b: Option<&Path>, cli: &Cli) -> CmdResult {
    let text_a = read(file_a)?;
    let field = file_field(&text_a, &cli.field)?;
    match file_b {
        None => dispatch!(field, S, {
            let a = load::<S>(&text_a, None)?;
            let n = distances::bound_n(&a.model);
            let basepoint = distances::bound_basepoint(&a.model)
                .map(|v| v.to_string())
                .ok();
            if cli.json {
                let value = json!({
                    "cap": a.cap,
                    "fiber_degree_bound": n,
                    "basepoint_bound": basepoint,
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("cap = {}", a.cap);
                println!("distance to the identity filtration on the base: <= {n}");
                match basepoint {
                    Some(v) => println!("basepoint-inclusion bound: <= {v}"),
                    None => println!(
                        "basepoint-inclusion bound: n/a (total algebra not contractible)"
                    ),
                }
            }
            Ok(EXIT_OK)
        }),
        Some(file_b) => {
            let (text_a, text_b, field) = load_pair_texts(file_a, file_b, cli)?;
            dispatch!(field, S, {
                let a = load::<S>(&text_a, None)?;
                let b = load::<S>(&text_b, None)?;
                let cap = a.cap.max(b.cap);
                let wht = distances::bound_wht(&a.model.algebra, &b.model.algebra);
                let path =
                    distances::bound_path_fibration(&a.model.algebra, &b.model.algebra);
                if cli.json {
                    let value = json!({
                        "cap": cap,
                        "product_projection_bound": wht,
                        "path_fibration_bound": path.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                } else {
                    println!("cap = {cap}");
                    println!("product-projection filtrations of the product: <= {wht}");
                    println!("path-fibration filtrations: <= {path}");
                }
                Ok(EXIT_OK)
            })
        }
    }
}

fn cmd_run_corpus(cli: &Cli) -> CmdResult {
    let mut results = Vec::new();
    let mut ok = true;
    for entry in entries() {
        let outcome = (entry.run)();
        ok &= outcome.is_ok();
        results.push((entry.name, outcome));
    }
    if cli.json {
        let value = json!({
            "ok": ok,
            "entries": results.iter().map(|(name, outcome)| json!({
                "name": name,
                "ok": outcome.is_ok(),
                "detail": match outcome {
                    Ok(m) => m,
                    Err(m) => m,
                },
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        for (name, outcome) in &results {
            match outcome {
                Ok(m) => println!("PASS {name}: {m}"),
                Err(m) => println!("FAIL {name}: {m}"),
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}
