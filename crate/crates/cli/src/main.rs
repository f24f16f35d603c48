//! Command-line front end: model files in, exact invariants, Jacobians,
//! relation reports, singular-point lists and q-expansions out.
//!
//! Output is JSON by default (keys in sorted order, numbers as exact
//! rational strings); `--plain` switches to line-oriented text.
//! Exit codes: 0 ok, 1 domain error, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use genusone::{
    check_invariant_relations, discriminant_series, eisenstein_series, hasse_congruence_check,
    invariants_of_model, jacobian_of_model, parse_model, pfaffian_quadrics, reduce_rational,
    singular_points_mod_p, GenusOneModel, QSeries, Rational,
};

#[derive(Parser)]
#[command(name = "genusone", version, about = "Exact invariants of genus one models")]
struct Cli {
    /// Line-oriented text output instead of JSON
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalized invariants (c4, c6, delta) of a model of degree 1-4
    Invariants { file: PathBuf },
    /// Jacobian y^2 = 4x^3 - g2*x - g3 of a model of degree 2-4
    Jacobian { file: PathBuf },
    /// Verify the invariant scaling relations between a model and its Jacobian
    Check { file: PathBuf },
    /// F_p-rational singular points of the reduction of a model mod p
    Singular {
        file: PathBuf,
        #[arg(long = "mod", value_name = "P")]
        modulus: u64,
    },
    /// q-expansion of a modular form: E4, E6, E2k:<weight>, or D
    Qexp {
        #[arg(long)]
        form: String,
        #[arg(long)]
        terms: usize,
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Check the congruence E_{p-1} = 1 mod p to the given precision
    Hasse {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        terms: usize,
    },
    /// The five quadrics cut out by a degree-5 model
    Pfaffians { file: PathBuf },
}

fn load_model(file: &PathBuf) -> Result<GenusOneModel<Rational>, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse_model(&text).map_err(|e| e.to_string())
}

/// Render a JSON value as plain text lines: scalars as "key = value",
/// arrays one element per line.
fn plain_render(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Array(items) => {
                    for item in items {
                        out.push_str(&format!("{k}: {}\n", scalar(item)));
                    }
                    if items.is_empty() {
                        out.push_str(&format!("{k}: none\n"));
                    }
                }
                _ => out.push_str(&format!("{k} = {}\n", scalar(val))),
            }
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn qexp_series(form: &str, terms: usize) -> Result<QSeries, String> {
    if terms == 0 {
        return Err("--terms must be at least 1".into());
    }
    match form {
        "E4" => eisenstein_series(4, terms).map_err(|e| e.to_string()),
        "E6" => eisenstein_series(6, terms).map_err(|e| e.to_string()),
        "D" => discriminant_series(terms).map_err(|e| e.to_string()),
        other => match other.strip_prefix("E2k:") {
            Some(w) => {
                let w: u64 = w
                    .parse()
                    .map_err(|_| format!("bad weight in form `{other}`"))?;
                eisenstein_series(w, terms).map_err(|e| e.to_string())
            }
            None => Err(format!(
                "unknown form `{other}` (expected E4, E6, E2k:<weight>, or D)"
            )),
        },
    }
}

fn run(cli: &Cli) -> Result<Value, String> {
    match &cli.command {
        Command::Invariants { file } => {
            let m = load_model(file)?;
            let t = invariants_of_model(&m).map_err(|e| e.to_string())?;
            Ok(json!({
                "degree": m.degree(),
                "c4": t.c4.to_string(),
                "c6": t.c6.to_string(),
                "delta": t.delta.to_string(),
            }))
        }
        Command::Jacobian { file } => {
            let m = load_model(file)?;
            let j = jacobian_of_model(&m).map_err(|e| e.to_string())?;
            Ok(json!({
                "degree": m.degree(),
                "equation": format!("y^2 = 4*x^3 - ({})*x - ({})", j.g2, j.g3),
                "g2": j.g2.to_string(),
                "g3": j.g3.to_string(),
            }))
        }
        Command::Check { file } => {
            let m = load_model(file)?;
            let r = check_invariant_relations(&m).map_err(|e| e.to_string())?;
            Ok(json!({
                "all_ok": r.all_ok(),
                "alpha": r.alpha.to_string(),
                "c4_jacobian": r.jacobian.c4.to_string(),
                "c4_model": r.model.c4.to_string(),
                "c4_ok": r.c4_ok,
                "c6_jacobian": r.jacobian.c6.to_string(),
                "c6_model": r.model.c6.to_string(),
                "c6_ok": r.c6_ok,
                "degree": r.degree,
                "delta_jacobian": r.jacobian.delta.to_string(),
                "delta_model": r.model.delta.to_string(),
                "delta_ok": r.delta_ok,
            }))
        }
        Command::Singular { file, modulus } => {
            let m = load_model(file)?;
            let pts = singular_points_mod_p(&m, *modulus).map_err(|e| e.to_string())?;
            Ok(json!({
                "degree": m.degree(),
                "points": pts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "prime": modulus,
                "smooth": pts.is_empty(),
            }))
        }
        Command::Qexp { form, terms, modulus } => {
            let s = qexp_series(form, *terms)?;
            let (series, coefficients) = match modulus {
                None => (
                    s.to_string(),
                    s.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                ),
                Some(p) => {
                    let mut reduced = Vec::with_capacity(s.precision());
                    for (n, c) in s.coefficients().iter().enumerate() {
                        let r = reduce_rational(c, *p, &format!("coefficient of q^{n}"))
                            .map_err(|e| e.to_string())?;
                        reduced.push(Rational::from_integer(r.residue() as i64));
                    }
                    let rs = QSeries::new(reduced);
                    (
                        rs.to_string(),
                        rs.coefficients().iter().map(|c| c.to_string()).collect(),
                    )
                }
            };
            Ok(json!({
                "coefficients": coefficients,
                "form": form,
                "modulus": modulus,
                "series": series,
                "terms": terms,
            }))
        }
        Command::Hasse { prime, terms } => {
            if *terms == 0 {
                return Err("--terms must be at least 1".into());
            }
            let ok = hasse_congruence_check(*prime, *terms).map_err(|e| e.to_string())?;
            Ok(json!({
                "congruent": ok,
                "prime": prime,
                "terms": terms,
            }))
        }
        Command::Pfaffians { file } => {
            let m = load_model(file)?;
            let pf = match m {
                GenusOneModel::Pfaffian(p) => p,
                other => {
                    return Err(format!(
                        "pfaffians requires a degree-5 model, got degree {}",
                        other.degree()
                    ))
                }
            };
            let quadrics = pfaffian_quadrics(&pf);
            Ok(json!({
                "quadrics": quadrics.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match run(&cli) {
        Ok(payload) => {
            if cli.plain {
                print!("{}", plain_render(&payload));
            } else {
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            }
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
