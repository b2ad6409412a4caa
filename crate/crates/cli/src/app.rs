//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use macllt::combinat::{parse_cells, DyckPath, Partition, ShapeTuple};
use macllt::error::Error;
use macllt::llt::{llt_poly_vars, llt_unicellular};
use macllt::macdonald::{
    b_polynomial, hhl_macdonald_vars, kostka_table, multi_t_macdonald, quotient_schur, two_row_f,
    upper_cells, MultiTAssignment, QuotientOutcome, TWeight,
};
use macllt::mahonian::{stat_rows, StatDistribution, Statistic};
use macllt::polyring::q_multinomial;
use macllt::symfunc::{install_kostka_matrix, kostka_matrix, KostkaMatrix, SymFunc, SymFuncJson};

use crate::cache::Cache;
use crate::output::{self, Format};
use crate::suites::Suite;

const DEFAULT_BUDGET: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "mac",
    version,
    about = "Macdonald and LLT polynomial calculator and verifier"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "MAC_JOBS")]
    pub jobs: Option<usize>,
    /// Cache directory for Kostka matrices and computed expansions.
    #[arg(long, global = true, env = "MAC_CACHE")]
    pub cache: Option<PathBuf>,
    /// Disable the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest degree a compute command accepts; for `verify`, the sweep bound.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Truncate expansions to this many variables.
    #[arg(long, global = true)]
    pub num_vars: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LLT polynomial of a tuple of skew shapes, e.g. "C1;H[2];R[0,2]{1}".
    Llt {
        #[arg(long)]
        tuple: ShapeTuple,
    },
    /// Unicellular LLT polynomial of a Dyck path given by its heights.
    LltDyck {
        #[arg(long)]
        heights: DyckPath,
    },
    /// Modified Macdonald polynomial.
    Hhl {
        #[arg(long)]
        mu: Partition,
    },
    /// Multi-t Macdonald polynomial. Without `--t-powers` each cell gets its
    /// own variable t1, t2, ...
    MultiT {
        #[arg(long)]
        mu: Partition,
        /// Cell order, e.g. "(2,1);(2,2)"; defaults to all cells above the first row.
        #[arg(long)]
        cells: Option<String>,
        /// Specialize t_i to q^e_i, e.g. "1,0".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t_powers: Option<Vec<i64>>,
    },
    /// Two-row specialization for mu = (n-k, k) and heights h_1..h_k.
    TwoRowF {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        heights: Vec<usize>,
    },
    /// The cell generating polynomial B_lambda(q, t).
    Bpoly {
        #[arg(long)]
        lambda: Partition,
    },
    /// Table of (q,t)-Kostka polynomials.
    KostkaTable {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// (H_lambda - H_mu) / (q^k - t) with a Schur positivity verdict.
    Quotient {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        k: u32,
    },
    /// Distributions of maj_ell, maj'_ell and k maj_ell - (n-1) maj'_ell over words.
    Stats {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// Also write one row per word to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        /// Table size for `kostka-table` (same as `--max-n`).
        #[arg(long)]
        n: Option<usize>,
    },
}

/// What to print and which exit code to use.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("macllt"))
}

pub fn open_cache(g: &Global) -> Cache {
    if g.no_cache {
        Cache::in_memory()
    } else {
        Cache::new(g.cache.clone().or_else(default_cache_dir))
    }
}

/// Load the degree-`n` Kostka matrix from the cache or compute and store it.
pub fn warm_kostka(cache: &Cache, n: usize) {
    let args = n.to_string();
    match cache.get::<KostkaMatrix>("kostka-matrix", &args) {
        Some(m) if m.n == n => install_kostka_matrix(m.reindex()),
        _ => cache.put("kostka-matrix", &args, &*kostka_matrix(n)),
    }
}

fn check_budget(g: &Global, n: usize) -> Result<(), CliError> {
    let budget = g.max_n.unwrap_or(DEFAULT_BUDGET);
    if n > budget {
        return Err(CliError::Usage(format!(
            "size {n} exceeds the budget {budget}; raise it with --max-n"
        )));
    }
    Ok(())
}

fn cached_symfunc(
    cache: &Cache,
    op: &str,
    args: &str,
    compute: impl FnOnce() -> Result<SymFunc, Error>,
) -> Result<SymFunc, CliError> {
    let j: SymFuncJson = cache.get_or_compute(op, args, || compute().map(|f| f.to_json()))?;
    Ok(SymFunc::from_json(&j)?)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let cache = open_cache(g);
    let fmt = g.format;
    let ok = |stdout: String| Ok(Outcome { stdout, code: 0 });
    let no_spec = BTreeMap::new();
    match &cli.command {
        Command::Llt { tuple } => {
            let n = tuple.num_cells();
            check_budget(g, n)?;
            warm_kostka(&cache, n);
            let vars = g.num_vars.unwrap_or(n);
            let f = cached_symfunc(&cache, "llt", &format!("{tuple}|{vars}"), || {
                llt_poly_vars(tuple, vars)
            })?;
            ok(output::symfunc(
                &f.to_schur(),
                fmt,
                "llt",
                json!({ "tuple": tuple.to_string(), "num_vars": vars }),
                &no_spec,
            ))
        }
        Command::LltDyck { heights } => {
            let n = heights.heights().len();
            check_budget(g, n)?;
            warm_kostka(&cache, n);
            let f = cached_symfunc(&cache, "llt-dyck", &heights.to_string(), || {
                llt_unicellular(heights)
            })?;
            ok(output::symfunc(
                &f.to_schur(),
                fmt,
                "llt-dyck",
                json!({ "heights": heights.heights() }),
                &no_spec,
            ))
        }
        Command::Hhl { mu } => {
            let n = mu.size();
            check_budget(g, n)?;
            warm_kostka(&cache, n);
            let vars = g.num_vars.unwrap_or(n);
            let f = cached_symfunc(&cache, "hhl", &format!("{mu}|{vars}"), || {
                hhl_macdonald_vars(mu, vars)
            })?;
            ok(output::symfunc(
                &f.to_schur(),
                fmt,
                "hhl",
                json!({ "mu": mu.parts(), "num_vars": vars }),
                &no_spec,
            ))
        }
        Command::MultiT {
            mu,
            cells,
            t_powers,
        } => {
            let n = mu.size();
            check_budget(g, n)?;
            warm_kostka(&cache, n);
            let order = match cells {
                Some(s) => parse_cells(s)?,
                None => upper_cells(mu),
            };
            let assign = match t_powers {
                None => MultiTAssignment::indexed(mu, order)?,
                Some(e) => {
                    if e.len() != order.len() {
                        return Err(CliError::Usage(format!(
                            "{} t-powers for {} cells",
                            e.len(),
                            order.len()
                        )));
                    }
                    MultiTAssignment::new(mu, order, e.iter().map(|&x| TWeight::QPow(x)).collect())?
                }
            };
            let f = multi_t_macdonald(&assign, g.num_vars.unwrap_or(n))?;
            ok(output::symfunc(
                &f.to_schur(),
                fmt,
                "multi-t",
                json!({ "mu": mu.parts() }),
                &assign.specialization(),
            ))
        }
        Command::TwoRowF { n, k, heights } => {
            check_budget(g, *n)?;
            warm_kostka(&cache, *n);
            let f = two_row_f(*n, *k, heights)?;
            let spec = MultiTAssignment::haglund(*n, *k, heights)?.specialization();
            ok(output::symfunc(
                &f.to_schur(),
                fmt,
                "two-row-f",
                json!({ "n": n, "k": k, "heights": heights }),
                &spec,
            ))
        }
        Command::Bpoly { lambda } => ok(output::poly(
            &b_polynomial(lambda),
            fmt,
            "bpoly",
            json!({ "lambda": lambda.parts() }),
        )),
        Command::KostkaTable { n } => {
            check_budget(g, *n)?;
            warm_kostka(&cache, *n);
            ok(output::kostka_table(*n, &kostka_table(*n)?, fmt))
        }
        Command::Quotient { lambda, mu, k } => {
            check_budget(g, lambda.size())?;
            warm_kostka(&cache, lambda.size());
            let out = quotient_schur(lambda, mu, *k)?;
            let args = json!({ "lambda": lambda.parts(), "mu": mu.parts(), "k": k });
            let body = match &out {
                QuotientOutcome::Positive(f) | QuotientOutcome::NotPositive { quotient: f, .. } => {
                    output::symfunc(f, fmt, "quotient", args.clone(), &no_spec)
                }
                QuotientOutcome::NotDivisible { .. } => String::new(),
            };
            let stdout = if fmt == Format::Json && !body.is_empty() {
                let mut v: serde_json::Value =
                    serde_json::from_str(&body).expect("own output parses");
                v["verdict"] = json!(out.verdict());
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("serializes")
                )
            } else if fmt == Format::Json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(
                        &json!({ "op": "quotient", "args": args, "verdict": out.verdict() })
                    )
                    .expect("serializes")
                )
            } else {
                format!("{body}{}\n", out.verdict())
            };
            ok(stdout)
        }
        Command::Stats { mu, k, ell, csv } => {
            check_budget(g, mu.size())?;
            if *k == 0 || *ell == 0 {
                return Err(CliError::Usage("k and ell must be at least 1".into()));
            }
            let a = StatDistribution::compute(mu, Statistic::MajK { k: *ell });
            let b = StatDistribution::compute(mu, Statistic::MajPrime { l: *ell });
            let c = StatDistribution::compute(mu, Statistic::Composite { k: *k, l: *ell });
            let expected = q_multinomial(mu.parts());
            if let Some(path) = csv {
                let mut w = csv::Writer::from_path(path)?;
                for row in stat_rows(mu, *k, *ell) {
                    w.serialize(row)?;
                }
                w.flush()?;
            }
            ok(output::distributions(
                &[("maj", &a), ("maj'", &b), ("composite", &c)],
                &expected,
                fmt,
            ))
        }
        Command::Verify { suite, n } => {
            let max_n = n.or(g.max_n).unwrap_or(suite.default_max_n());
            let report = suite.run(max_n)?;
            Ok(Outcome {
                stdout: output::report(&report, fmt),
                code: if report.passed() { 0 } else { 1 },
            })
        }
    }
}
