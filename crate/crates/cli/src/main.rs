//! `quadop`: dimensions, Koszul duals and the series test for binary
//! quadratic operads.
//!
//! Exit status: 0 success or inconclusive, 1 not Koszul, 2 usage or parse
//! error, 3 capacity exceeded, 4 internal cross-check failure.

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadop::exactla::format_rational;
use quadop::genseries::{koszul_obstruction, Verdict, DEFAULT_ORDER};
use quadop::idealgen::{dims, DimTable, DimsConfig, FieldStrategy, Method, DEFAULT_DIMS_CAP};
use quadop::idlang::{parse_expression, LinComb, RelationSpace, RelationsFile, RELATION_ARITY};
use quadop::koszul::koszul_dual;
use quadop::lieadm::{jacobiator_conditions, normal_form, QuotientBasis};
use quadop::presets::{self, PRESETS};
use quadop::treekit::DEFAULT_MAX_ARITY;
use quadop::Error;

use report::{DimDetail, DualSection, KoszulSection, ReduceSection, Report, Timing, Versions};

#[derive(Parser, Debug)]
#[command(
    name = "quadop",
    version,
    about = "Exact computations for binary quadratic operads"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of the multilinear components.
    Dims {
        #[command(flatten)]
        operad: OperadArgs,
        #[arg(long, default_value_t = 5)]
        max_arity: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Relations of the Koszul dual.
    Dual {
        #[command(flatten)]
        operad: OperadArgs,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare H(H^!(t)) with t.
    Koszul {
        #[command(flatten)]
        operad: OperadArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normal form of a degree-three expression modulo the relations.
    Reduce {
        #[command(flatten)]
        operad: OperadArgs,
        /// Expression or identity, e.g. "(a*c)*b" or "(a*b)*c = a*(b*c)".
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct OperadArgs {
    /// Built-in relation set.
    #[arg(long)]
    operad: Option<String>,
    /// JSON file {"name": ..., "relations": [...]}.
    #[arg(long)]
    relations_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EngineArgs {
    #[arg(long, default_value = "recursive", value_parser = parse_method)]
    method: Method,
    /// rational, prime:P or auto.
    #[arg(long, default_value = "auto", value_parser = parse_field)]
    field: FieldStrategy,
    /// Largest arity allowed (at most 7).
    #[arg(long, default_value_t = DEFAULT_DIMS_CAP)]
    arity_cap: usize,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long)]
    json: bool,
    /// Leave elapsed time out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Pairing,
    Lieadm,
    Both,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldStrategy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn load(args: &OperadArgs) -> Result<RelationSpace, Error> {
    match (&args.operad, &args.relations_file) {
        (Some(name), _) => presets::relation_space(name),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::RelationsFile(format!("{}: {e}", path.display())))?;
            RelationsFile::from_json(&text)?.relation_space()
        }
        (None, None) => Err(Error::Argument(
            "one of --operad or --relations-file is required".into(),
        )),
    }
}

impl EngineArgs {
    fn config(&self) -> Result<DimsConfig, Error> {
        if self.arity_cap > DEFAULT_MAX_ARITY {
            return Err(Error::Capacity {
                arity: self.arity_cap,
                limit: DEFAULT_MAX_ARITY,
            });
        }
        Ok(DimsConfig {
            method: self.method,
            field: self.field,
            arity_cap: self.arity_cap,
        })
    }
}

fn matching_preset(r: &RelationSpace) -> Option<String> {
    PRESETS
        .iter()
        .find(|p| p.relation_space().is_ok_and(|s| s.same_span(r)))
        .map(|p| p.name.to_string())
}

fn dim_details(t: &DimTable) -> Vec<DimDetail> {
    t.entries
        .iter()
        .map(|e| DimDetail {
            arity: e.arity,
            dim: e.dim,
            method: e.method.map(|m| m.to_string()),
            field: e.field.to_string(),
        })
        .collect()
}

fn rationals(v: &[quadop::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

struct Outcome {
    report: Report,
    status: u8,
}

fn base_report(command: String, r: &RelationSpace, field: String) -> Report {
    Report {
        command,
        operad: r.name().to_string(),
        closure_enlarged: r.closure_enlarged(),
        dims: None,
        dims_detail: None,
        dual: None,
        koszul: None,
        reduce: None,
        field,
        versions: Versions::default(),
        timing: None,
    }
}

fn run(command: &Command, echo: String) -> Result<Outcome, Error> {
    match command {
        Command::Dims {
            operad,
            max_arity,
            engine,
            ..
        } => {
            let config = engine.config()?;
            let r = load(operad)?;
            let table = dims(&r, *max_arity, &config)?;
            let mut report = base_report(echo, &r, config.field.to_string());
            report.dims = Some(table.dims());
            report.dims_detail = Some(dim_details(&table));
            Ok(Outcome { report, status: 0 })
        }
        Command::Dual { operad, route, .. } => {
            let r = load(operad)?;
            let (dual, agree) = match route {
                Route::Pairing => (koszul_dual(&r), None),
                Route::Lieadm => (jacobiator_conditions(&r)?, None),
                Route::Both => {
                    let a = koszul_dual(&r);
                    let b = jacobiator_conditions(&r)?;
                    let agree = a.same_span(&b);
                    (a, Some(agree))
                }
            };
            let mut report = base_report(echo, &r, "rational".into());
            report.dual = Some(DualSection {
                route: format!("{route:?}").to_lowercase(),
                dimension: dual.dim(),
                generators: dual.generators_dsl(),
                routes_agree: agree,
                matches_preset: matching_preset(&dual),
            });
            let status = if agree == Some(false) { 4 } else { 0 };
            Ok(Outcome { report, status })
        }
        Command::Koszul {
            operad,
            order,
            engine,
            ..
        } => {
            let config = engine.config()?;
            let r = load(operad)?;
            let o = koszul_obstruction(&r, *order, &config)?;
            let (status, obstruction_order, obstruction_coefficient) = match &o.verdict {
                Verdict::NotKoszul { order, coefficient } => {
                    (1, Some(*order), Some(format_rational(coefficient)))
                }
                Verdict::Inconclusive { .. } => (0, None, None),
            };
            let mut report = base_report(echo, &r, config.field.to_string());
            report.dims = Some(o.dims.dims());
            report.dims_detail = Some(dim_details(&o.dims));
            report.koszul = Some(KoszulSection {
                verdict: o.verdict.label().to_string(),
                obstruction_order,
                obstruction_coefficient,
                order: *order,
                dual_dims: o.dual_dims.dims(),
                series: rationals(o.series.coeffs()),
                dual_series: rationals(o.dual_series.coeffs()),
                composite: rationals(o.composite.coeffs()),
            });
            Ok(Outcome { report, status })
        }
        Command::Reduce {
            operad, expression, ..
        } => {
            let r = load(operad)?;
            let parsed = parse_expression(expression)?;
            if parsed.lincomb.arity() != RELATION_ARITY {
                return Err(Error::Arity {
                    found: parsed.lincomb.arity(),
                    expected: RELATION_ARITY,
                });
            }
            let nf = normal_form(&parsed.lincomb, &r)?;
            let representatives = QuotientBasis::new(&r)
                .monomials()
                .iter()
                .map(|m| parsed.render(&LinComb::monomial(m)))
                .collect();
            let mut report = base_report(echo, &r, "rational".into());
            report.reduce = Some(ReduceSection {
                input: expression.clone(),
                is_equation: parsed.is_equation,
                normal_form: parsed.render(&nf),
                representatives,
                in_span: nf.is_zero(),
            });
            Ok(Outcome { report, status: 0 })
        }
    }
}

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => 3,
        Error::CrossCheck(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let output = match &cli.command {
        Command::Dims { output, .. }
        | Command::Dual { output, .. }
        | Command::Koszul { output, .. }
        | Command::Reduce { output, .. } => output,
    };
    let start = Instant::now();
    match run(&cli.command, echo) {
        Ok(Outcome { mut report, status }) => {
            if !output.no_timing {
                report.timing = Some(Timing {
                    elapsed_ms: start.elapsed().as_millis(),
                });
            }
            let text = if output.json {
                report.to_json()
            } else {
                report.to_text()
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
