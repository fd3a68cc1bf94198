//! Front end for the `qsym` binary: argument definitions and dispatch.

pub mod parse;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use qsym_core::json::{element_to_json, poly_to_json, poset_from_json, tensor_to_json};
use qsym_core::oracle::expand;
use qsym_core::ppartitions::{gamma, universal, universal_to_eta};
use qsym_core::qsym::{antipode, basis_convert, coproduct, product};
use qsym_core::verify::run_suite;
use qsym_core::{Basis, Composition, Permutation, QSymElement, TensorElement, TruncatedPoly, ZAlphabet};

pub use parse::{parse_element, ParseError};

#[derive(Parser, Debug)]
#[command(name = "qsym", version, about = "Exact arithmetic in the ring of quasisymmetric functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn basis_arg(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: qsym_core::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rewrite an element in another basis.
    Convert {
        element: String,
        #[arg(long, value_parser = basis_arg)]
        to: Basis,
    },
    /// Multiply two elements.
    Multiply {
        left: String,
        right: String,
        /// Basis of the result; defaults to the left factor's (eta if K is involved).
        #[arg(long, value_parser = basis_arg)]
        basis: Option<Basis>,
    },
    /// Deconcatenation coproduct.
    Coproduct {
        element: String,
        /// Basis of both tensor factors; defaults to the input basis.
        #[arg(long, value_parser = basis_arg)]
        basis: Option<Basis>,
    },
    /// Antipode.
    Antipode {
        element: String,
        /// Basis of the result; defaults to the input basis.
        #[arg(long, value_parser = basis_arg)]
        basis: Option<Basis>,
    },
    /// Expand as a polynomial in x_1..x_N up to degree d.
    Expand {
        element: String,
        /// Number of variables (default: the degree bound).
        #[arg(long)]
        nvars: Option<usize>,
        /// Degree bound (default: the element's degree).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Generating function of enriched P-partitions of a poset given as JSON.
    Gamma {
        #[arg(long)]
        poset: PathBuf,
        /// "P", "Ppm" or an explicit list such as "-1,+1,-2".
        #[arg(long, default_value = "Ppm", allow_hyphen_values = true)]
        zset: String,
        /// N for "P" and "Ppm" (default: the total weight of the poset).
        #[arg(long)]
        nvars: Option<u32>,
    },
    /// Generating function of the weighted chain of a permutation and a composition.
    UFunction {
        /// One-line word, such as "2 1 3" or "213".
        perm: String,
        /// Weights, such as "1,2,1".
        comp: String,
        #[arg(long, default_value = "Ppm", allow_hyphen_values = true)]
        zset: String,
        /// N for "P" and "Ppm" (default: the size of the composition).
        #[arg(long)]
        nvars: Option<u32>,
        /// Print the signed sum of eta functions instead of enumerating.
        #[arg(long)]
        symbolic: bool,
    },
    /// Run the bundled identity checks.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
    },
}

/// What to print and whether the command succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, success: true }
    }
}

fn element(text: &str) -> anyhow::Result<QSymElement> {
    parse_element(text).with_context(|| format!("in element {:?}", text))
}

fn show_element(a: &QSymElement, format: Format) -> String {
    match format {
        Format::Text => a.to_string(),
        Format::Json => element_to_json(a),
    }
}

fn show_tensor(t: &TensorElement, format: Format) -> String {
    match format {
        Format::Text => t.to_string(),
        Format::Json => tensor_to_json(t),
    }
}

fn show_poly(p: &TruncatedPoly, format: Format) -> String {
    match format {
        Format::Text => {
            if p.is_empty() {
                "0".to_string()
            } else {
                p.to_string()
            }
        }
        Format::Json => poly_to_json(p),
    }
}

fn alphabet(spec: &str, nvars: u32) -> anyhow::Result<ZAlphabet> {
    let z = ZAlphabet::from_spec(spec, nvars).with_context(|| format!("in alphabet {:?}", spec))?;
    if z.is_empty() {
        bail!("alphabet {:?} is empty", spec);
    }
    Ok(z)
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Convert { element: text, to } => {
            let a = element(text)?;
            Ok(Outcome::ok(show_element(&basis_convert(&a, *to)?, format)))
        }
        Command::Multiply { left, right, basis } => {
            let (a, b) = (element(left)?, element(right)?);
            let result = match basis {
                Some(Basis::K) | None => product(&a, &b)?,
                Some(x) => product(&basis_convert(&a, *x)?, &b)?,
            };
            let result = match basis {
                Some(x) => basis_convert(&result, *x)?,
                None => result,
            };
            Ok(Outcome::ok(show_element(&result, format)))
        }
        Command::Coproduct { element: text, basis } => {
            let a = element(text)?;
            let target = basis.unwrap_or(a.basis());
            let t = coproduct(&a)?.convert(target, target)?;
            Ok(Outcome::ok(show_tensor(&t, format)))
        }
        Command::Antipode { element: text, basis } => {
            let a = element(text)?;
            let target = basis.unwrap_or(a.basis());
            Ok(Outcome::ok(show_element(&basis_convert(&antipode(&a)?, target)?, format)))
        }
        Command::Expand { element: text, nvars, degree } => {
            let a = element(text)?;
            let d = degree.unwrap_or(a.degree());
            let n = nvars.unwrap_or(d);
            Ok(Outcome::ok(show_poly(&expand(&a, n, d)?, format)))
        }
        Command::Gamma { poset, zset, nvars } => {
            let text = std::fs::read_to_string(poset).with_context(|| format!("reading {}", poset.display()))?;
            let p = poset_from_json(&text).with_context(|| format!("in poset file {}", poset.display()))?;
            let z = alphabet(zset, nvars.unwrap_or(p.total_weight() as u32))?;
            Ok(Outcome::ok(show_poly(&gamma(&p, &z), format)))
        }
        Command::UFunction {
            perm,
            comp,
            zset,
            nvars,
            symbolic,
        } => {
            let pi: Permutation = perm.parse().with_context(|| format!("in permutation {:?}", perm))?;
            let alpha: Composition = comp.parse().with_context(|| format!("in composition {:?}", comp))?;
            if *symbolic {
                return Ok(Outcome::ok(show_element(&universal_to_eta(&pi, &alpha)?, format)));
            }
            let z = alphabet(zset, nvars.unwrap_or(alpha.size() as u32))?;
            Ok(Outcome::ok(show_poly(&universal(&pi, &alpha, &z)?, format)))
        }
        Command::Verify { max_degree } => {
            let reports = run_suite(*max_degree);
            let success = reports.iter().all(|r| r.passed());
            let output = match format {
                Format::Text => {
                    let width = reports.iter().map(|r| r.cases.to_string().len()).max().unwrap_or(1);
                    let mut lines: Vec<String> = Vec::new();
                    for r in &reports {
                        let status = if r.passed() { "PASS" } else { "FAIL" };
                        lines.push(format!("{}  {:>width$} cases  {}", status, r.cases, r.name, width = width));
                        if let Some(cx) = &r.counterexample {
                            lines.push(format!("      counterexample: {}", cx));
                        }
                    }
                    let passed = reports.iter().filter(|r| r.passed()).count();
                    lines.push(format!("{} of {} checks passed", passed, reports.len()));
                    lines.join("\n")
                }
                Format::Json => serde_json::Value::Array(
                    reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "name": r.name,
                                "passed": r.passed(),
                                "cases": r.cases,
                                "counterexample": r.counterexample,
                            })
                        })
                        .collect(),
                )
                .to_string(),
            };
            Ok(Outcome { output, success })
        }
    }
}
