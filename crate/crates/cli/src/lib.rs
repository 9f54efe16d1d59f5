//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the output document, so tests can drive it without a process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use geonum::classify::{clock_walk, emit_tables, TableFormat, TableKind};
use geonum::expr::{evaluate, format};
use geonum::iso::{Report, VerifyOptions};
use geonum::rep::{null_frame, to_matrix, Representer};
use geonum::verify::verify_algebra;
use geonum::{
    build_iso, classify, verify_map_with, ComplexRational, Error, Field, IsoKind, Multivector, Rational, Signature,
    DEFAULT_DIM_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Eval,
    Classify,
    Table,
    Clock,
    Rep,
    Iso,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Evensub,
    Swap,
    Shift4,
}

impl From<Kind> for IsoKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Evensub => IsoKind::EvenSub,
            Kind::Swap => IsoKind::Swap,
            Kind::Shift4 => IsoKind::Shift4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Table1,
    Clock,
    Table4,
}

/// Everything a command needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub p: usize,
    pub q: usize,
    pub field: Field,
    pub json: bool,
    pub samples: usize,
    pub seed: u64,
    pub kind: Option<IsoKind>,
    pub k: Option<usize>,
    pub table: TableKind,
    pub dim_cap: usize,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            command: Command::Classify,
            p: 0,
            q: 0,
            field: Field::Real,
            json: false,
            samples: 100,
            seed: 0,
            kind: None,
            k: None,
            table: TableKind::Table1,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "geonum", version, about = "Exact geometric algebra G(p,q): evaluate, classify, represent, verify")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct Common {
    /// Generators squaring to +1.
    #[arg(long, default_value_t = 0)]
    p: usize,
    /// Generators squaring to -1.
    #[arg(long, default_value_t = 0)]
    q: usize,
    /// Complex coefficients.
    #[arg(long)]
    complex: bool,
    #[arg(long)]
    json: bool,
    /// Sample count for sampled checks.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Evaluate an expression and print it in canonical form.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Matrix algebra isomorphic to G(p,q).
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Print a classification table.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(value_enum, default_value = "table1")]
        which: Which,
    },
    /// Walk the Clifford clock for G(p,q).
    Clock {
        #[command(flatten)]
        common: Common,
    },
    /// Coordinate matrix of an expression.
    Rep {
        #[command(flatten)]
        common: Common,
        /// Use the null frame of G(k,k), or G(k,k+1) when --q is k+1.
        #[arg(long)]
        k: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check a structure-theorem map; (p,q) is the codomain for swap and
    /// shift4 and the domain for evensub.
    Iso {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Run the property suite for G(p,q).
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

/// Parses command-line arguments (program name first) into a config and the
/// positional input. Errors carry the exit code and message.
pub fn parse_args<I, T>(args: I, dim_cap: usize) -> Result<(CliConfig, String), (i32, String)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        (code, e.to_string())
    })?;
    let mut cfg = CliConfig {
        dim_cap,
        ..CliConfig::default()
    };
    let mut input = String::new();
    let common = match cli.command {
        Sub::Eval { common, expr } => {
            cfg.command = Command::Eval;
            input = expr;
            common
        }
        Sub::Classify { common } => {
            cfg.command = Command::Classify;
            common
        }
        Sub::Table { common, which } => {
            cfg.command = Command::Table;
            cfg.table = match which {
                Which::Table1 => TableKind::Table1,
                Which::Clock => TableKind::Clock,
                Which::Table4 => TableKind::Table4,
            };
            common
        }
        Sub::Clock { common } => {
            cfg.command = Command::Clock;
            common
        }
        Sub::Rep { common, k, expr } => {
            cfg.command = Command::Rep;
            cfg.k = k;
            input = expr;
            common
        }
        Sub::Iso { common, kind } => {
            cfg.command = Command::Iso;
            cfg.kind = Some(kind.into());
            common
        }
        Sub::Verify { common } => {
            cfg.command = Command::Verify;
            common
        }
    };
    cfg.p = common.p;
    cfg.q = common.q;
    cfg.field = if common.complex { Field::Complex } else { Field::Real };
    cfg.json = common.json;
    cfg.samples = common.samples;
    cfg.seed = common.seed;
    if cfg.command == Command::Rep {
        if let Some(k) = cfg.k {
            if common.p == 0 && common.q == 0 {
                (cfg.p, cfg.q) = (k, k);
            }
        }
    }
    Ok((cfg, input))
}

/// Dimension cap from `GA_DIM_CAP`, falling back to the default.
pub fn dim_cap_from_env() -> Result<usize, String> {
    match std::env::var("GA_DIM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("GA_DIM_CAP must be a non-negative integer, got '{v}'")),
        Err(_) => Ok(DEFAULT_DIM_CAP),
    }
}

fn fail(e: Error) -> (i32, String) {
    (EXIT_INPUT, format!("error: {e}\n"))
}

fn report_out(cfg: &CliConfig, header: String, report: &Report) -> (i32, String) {
    let code = if report.all_passed() { EXIT_OK } else { EXIT_FAILED };
    let body = if cfg.json {
        format!("{}\n", report.to_json())
    } else {
        let verdict = if report.all_passed() { "all checks passed" } else { "verification FAILED" };
        format!("{header}\n{report}{verdict}\n")
    };
    (code, body)
}

/// Runs one command.
pub fn run(cfg: &CliConfig, input: &str) -> (i32, String) {
    match run_inner(cfg, input) {
        Ok(out) => out,
        Err(e) => fail(e),
    }
}

fn eval_any(sig: Signature, input: &str) -> Result<(String, serde_json::Value), Error> {
    fn doc<S: geonum::Scalar>(g: &Multivector<S>) -> (String, serde_json::Value) {
        let text = format(g);
        let terms: Vec<_> = g
            .terms()
            .map(|(b, c)| json!({"blade": b.literal(&g.sig()), "coefficient": c.to_string()}))
            .collect();
        let value = json!({
            "signature": g.sig().to_string(),
            "text": text,
            "terms": terms,
        });
        (text, value)
    }
    Ok(match sig.field() {
        Field::Real => doc(&evaluate::<Rational>(input, sig)?),
        Field::Complex => doc(&evaluate::<ComplexRational>(input, sig)?),
    })
}

fn run_inner(cfg: &CliConfig, input: &str) -> Result<(i32, String), Error> {
    if cfg.samples == 0 {
        return Ok((EXIT_INPUT, "error: --samples must be at least 1\n".into()));
    }
    let sig = || Signature::with_cap(cfg.p, cfg.q, cfg.field, cfg.dim_cap);
    let out = match cfg.command {
        Command::Eval => {
            let (text, value) = eval_any(sig()?, input)?;
            if cfg.json {
                format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
            } else {
                format!("{text}\n")
            }
        }
        Command::Classify => {
            let s = sig()?;
            let shape = classify(&s);
            if cfg.json {
                let value = json!({
                    "p": s.p(),
                    "q": s.q(),
                    "field": s.field(),
                    "block": shape.block,
                    "matrix_size": shape.size,
                    "text": shape.to_string(),
                });
                format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
            } else {
                format!("{shape}\n")
            }
        }
        Command::Table => {
            let fmt = if cfg.json { TableFormat::Json } else { TableFormat::Text };
            let mut out = emit_tables(cfg.table, fmt);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            out
        }
        Command::Clock => {
            let s = sig()?;
            let walk = clock_walk(s.p(), s.q());
            if cfg.json {
                format!("{}\n", serde_json::to_string_pretty(&walk).expect("json"))
            } else {
                format!("{}\n", walk.narrative())
            }
        }
        Command::Rep => {
            let s = sig()?;
            let g = evaluate::<Rational>(input, s.with_field(Field::Real))?;
            let (m, route) = match cfg.k {
                Some(k) => {
                    let plus_one = match (s.p(), s.q()) {
                        (p, q) if p == k && q == k => false,
                        (p, q) if p == k && q == k + 1 => true,
                        _ => {
                            return Err(Error::Signature(format!(
                                "--k {k} needs G({k},{k}) or G({k},{}), got {s}",
                                k + 1
                            )))
                        }
                    };
                    let frame = null_frame(k, plus_one)?;
                    (to_matrix(&g, frame)?, format!("null frame k={k}\n"))
                }
                None => {
                    let rep = Representer::new(s.with_field(Field::Real))?;
                    (rep.represent(&g)?, rep.route_log())
                }
            };
            if cfg.json {
                format!("{}\n", serde_json::to_string_pretty(&m).expect("json"))
            } else {
                format!("{route}{} over {}\n{m}", m.shape(), m.ring())
            }
        }
        Command::Iso => {
            let kind = cfg
                .kind
                .ok_or_else(|| Error::Iso("--kind is required".into()))?;
            let map = build_iso(kind, cfg.p, cfg.q)?;
            let report = verify_map_with(
                &map,
                VerifyOptions {
                    samples: cfg.samples,
                    seed: cfg.seed,
                },
            );
            let header = format!("{kind:?}: {} -> {}", map.domain(), map.codomain());
            return Ok(report_out(cfg, header, &report));
        }
        Command::Verify => {
            let s = sig()?;
            let report = verify_algebra(
                s,
                VerifyOptions {
                    samples: cfg.samples,
                    seed: cfg.seed,
                },
            );
            let header = format!("{s}: {} samples, seed {}", cfg.samples, cfg.seed);
            return Ok(report_out(cfg, header, &report));
        }
    };
    Ok((EXIT_OK, out))
}
