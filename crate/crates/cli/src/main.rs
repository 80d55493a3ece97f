//! `kgroth`: command line access to Grothendieck polynomials, the
//! structure constants of their bialgebra and quiver coefficients.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a check that ran and failed.

mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use grothendieck::gamma::{series_identity_sides, SeriesIdentity};
use grothendieck::grothpoly::{groth_double_in_window, stable_truncation};
use grothendieck::quiver::{conjecture_sweep, expand_gw, RankConditions};
use grothendieck::{Engine, GammaElement, IntSeq, Partition, Permutation};
use serde_json::json;

use render::Output;

#[derive(Parser)]
#[command(name = "kgroth", version, about = "Grothendieck polynomials and quiver coefficients")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Coefficient cache file, read before and written after the command.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Print work counters to stderr.
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Double Grothendieck polynomial of a permutation.
    Groth {
        #[arg(long)]
        perm: String,
        /// Symmetric group S_n to compute in (default: smallest).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Truncation of the stable polynomial G_w(x; y).
    Stable {
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        vars: Vars,
        #[arg(long)]
        degree: u32,
    },
    /// Expands G_I for an integer sequence I.
    Straighten {
        #[arg(long)]
        seq: String,
    },
    /// Product G_lambda G_mu, or one coefficient with --nu.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Coproduct of G_lambda, or d^lambda_{mu nu} with --mu and --nu.
    Coprod {
        #[arg(long)]
        lambda: String,
        #[arg(long, requires = "nu")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        nu: Option<String>,
    },
    /// Quiver coefficients of rank conditions.
    Quiver {
        /// File name or inline JSON.
        #[arg(long)]
        ranks: String,
        /// Use the formula for varieties of complexes.
        #[arg(long)]
        complexes: bool,
    },
    /// Checks the alternating sign pattern over all rank conditions.
    Sweep {
        #[arg(long)]
        bundles: usize,
        #[arg(long)]
        max_rank: u32,
    },
    /// Expansion of G_w in the basis G_lambda.
    ExpandGw {
        #[arg(long)]
        perm: String,
    },
    /// Verifies one identity on truncations.
    Check(CheckArgs),
}

#[derive(Args)]
struct Vars {
    #[arg(long, default_value_t = 2)]
    vars_x: usize,
    #[arg(long, default_value_t = 0)]
    vars_y: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    JacobiTrudi,
    Gtos,
    Gysin,
}

#[derive(Args)]
struct CheckArgs {
    kind: CheckKind,
    /// First entry `a` (jacobi-trudi).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    a: i64,
    /// Remaining entries I (jacobi-trudi).
    #[arg(long, default_value = "[]")]
    seq: String,
    /// Index k of G_k (gtos).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    k: i64,
    /// Shift m (gysin).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    m: i64,
    /// Index i (gysin).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    i: i64,
    #[command(flatten)]
    vars: Vars,
    #[arg(long, default_value_t = 5)]
    degree: u32,
}

/// A rendered result; `failed` marks a check that ran and did not hold.
struct Outcome {
    output: Output,
    failed: bool,
}

fn parse<T: std::str::FromStr<Err = grothendieck::Error>>(what: &str, text: &str) -> anyhow::Result<T> {
    text.parse().map_err(|e| anyhow!("invalid {what} {text:?}: {e}"))
}

fn rank_input(arg: &str) -> anyhow::Result<RankConditions> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("cannot read rank file {arg}"))?
    };
    RankConditions::from_json(&text).map_err(|e| anyhow!("invalid rank conditions: {e}"))
}

fn run(cmd: Command, engine: &Engine) -> anyhow::Result<Outcome> {
    let ok = |output| Ok(Outcome { output, failed: false });
    match cmd {
        Command::Groth { perm, window } => {
            let w: Permutation = parse("permutation", &perm)?;
            let n = window.unwrap_or(w.size().max(1));
            if n < w.size() {
                bail!("{w} does not lie in S_{n}");
            }
            let g = groth_double_in_window(&w, n);
            ok(Output::poly(&g.value, json!({ "perm": w.to_string(), "window": n })))
        }
        Command::Stable { perm, vars, degree } => {
            let w: Permutation = parse("permutation", &perm)?;
            let p = stable_truncation(&w, vars.vars_x, vars.vars_y, degree)?;
            ok(Output::poly(&p, json!({ "perm": w.to_string(), "degree": degree })))
        }
        Command::Straighten { seq } => {
            let s: IntSeq = parse("sequence", &seq)?;
            ok(Output::gamma(&engine.straighten(&s)))
        }
        Command::Lr { lambda, mu, nu } => {
            let (l, m): (Partition, Partition) = (parse("partition", &lambda)?, parse("partition", &mu)?);
            match nu {
                Some(nu) => {
                    let n: Partition = parse("partition", &nu)?;
                    ok(Output::integer(engine.lr_coeff(&l, &m, &n)))
                }
                None => ok(Output::gamma(&engine.product_basis(&l, &m))),
            }
        }
        Command::Coprod { lambda, mu, nu } => {
            let l: Partition = parse("partition", &lambda)?;
            match (mu, nu) {
                (Some(mu), Some(nu)) => {
                    let (a, b): (Partition, Partition) = (parse("partition", &mu)?, parse("partition", &nu)?);
                    ok(Output::integer(engine.coprod_coeff(&a, &b, &l)))
                }
                _ => ok(Output::tensor(&engine.coproduct(&GammaElement::basis(l)))),
            }
        }
        Command::Quiver { ranks, complexes } => {
            let r = rank_input(&ranks)?;
            if !r.validate() {
                bail!("rank conditions cannot occur: {}", r.to_json());
            }
            let p = if complexes {
                engine.complexes_coeffs(&r)?
            } else {
                (*engine.quiver_coeffs(&r)?).clone()
            };
            ok(Output::quiver(&p, r.expected_codim()?))
        }
        Command::Sweep { bundles, max_rank } => {
            if bundles < 2 || max_rank < 1 {
                bail!("sweep needs at least 2 bundles and max rank at least 1");
            }
            let report = conjecture_sweep(engine, bundles, max_rank);
            eprintln!("sweep finished in {:.3}s", report.wall_time_secs);
            Ok(Outcome {
                failed: !report.violations.is_empty(),
                output: Output::sweep(&report),
            })
        }
        Command::ExpandGw { perm } => {
            let w: Permutation = parse("permutation", &perm)?;
            ok(Output::gamma(&expand_gw(engine, &w)?))
        }
        Command::Check(args) => {
            let holds = match args.kind {
                CheckKind::JacobiTrudi => {
                    let s: IntSeq = parse("sequence", &args.seq)?;
                    engine.jacobi_trudi_check(args.a, &s, args.degree as usize)
                }
                CheckKind::Gtos => {
                    let kind = SeriesIdentity::Gtos { k: args.k };
                    let (l, r) = series_identity_sides(engine, kind, args.vars.vars_x, 0, args.degree)?;
                    l == r
                }
                CheckKind::Gysin => {
                    let kind = SeriesIdentity::Gysin { m: args.m, i: args.i };
                    let (l, r) = series_identity_sides(engine, kind, args.vars.vars_x, args.vars.vars_y, args.degree)?;
                    l == r
                }
            };
            Ok(Outcome { output: Output::check(holds), failed: !holds })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let engine = Engine::new();
    if let Some(path) = &cli.cache {
        cache::load(&engine, path);
    }
    let start = Instant::now();
    let outcome = run(cli.command, &engine);
    if cli.stats {
        eprintln!(
            "stats: {} ({:.3}s)",
            serde_json::to_string(&engine.stats()).unwrap_or_default(),
            start.elapsed().as_secs_f64()
        );
    }
    match outcome {
        Ok(Outcome { output, failed }) => {
            println!("{}", if cli.json { output.json() } else { output.text() });
            if let Some(path) = &cli.cache {
                cache::store(&engine, path);
            }
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
