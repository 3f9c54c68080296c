//! Command-line front end.
//!
//! Code specifications accepted wherever a code is expected:
//!
//! | spec                    | code                                              |
//! |-------------------------|---------------------------------------------------|
//! | `five`                  | the [[5,1,3]] code                                |
//! | `steane`                | the [[7,1,3]] code                                |
//! | `trivial:M`             | the [[M,M,1]] code                                |
//! | `qrs:M:K`               | quantum Reed–Solomon code over GF(2^M)            |
//! | `search:N:K:D[:SEED]`   | randomized search for an [[N,K]] code, distance D |
//! | `file:PATH` or `PATH`   | generator matrix file                             |
//! | `OUTER*INNER`           | concatenation (split at the last `*`)             |
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
//! refusal.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::addcode::{find_nested_chain, min_weight_outside, ChainRequest, StabilizerCode, DEFAULT_BUDGET};
use crate::bounds::{curve_sample, BoundKind};
use crate::codes;
use crate::concat::{concatenate, generalized_concatenate, ConcatenatedCode, NestedInnerFamily, OuterCode};
use crate::decoder::{simulate, ConcatDecoder, DepolarizingChannel};
use crate::error::{Error, Result};
use crate::io::{format_curve, format_generators, read_generators, read_table, Overlay};
use crate::qrs::QuantumRsCode;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qconcat", version, about = "Concatenated stabilizer codes over GF(4)")]
struct Cli {
    /// Seed for randomized searches and simulation.
    #[arg(long, global = true, env = "QCONCAT_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a code and print its parameters.
    Build {
        #[command(subcommand)]
        what: BuildCmd,
    },
    /// Exact minimum distance by coset enumeration.
    Mindist {
        #[arg(long)]
        code: String,
        /// Largest number of vectors to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Sample a bound curve as `R,delta` CSV.
    Bounds(BoundsArgs),
    /// Monte Carlo logical failure rate under depolarizing noise.
    Simulate {
        /// A concatenated code, `OUTER*INNER`.
        #[arg(long)]
        code: String,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest code length for enumerated families.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum BuildCmd {
    /// Quantum Reed–Solomon code.
    Qrs {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        emit: Emit,
    },
    /// Concatenation of an outer code with an inner code.
    Concat {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[command(flatten)]
        emit: Emit,
    },
    /// Generalized concatenation of order s over a searched nested chain.
    Gconcat {
        #[arg(long)]
        s: usize,
        /// Outer codes, one per level (a single value is reused).
        #[arg(long, required = true)]
        outer: Vec<String>,
        /// Nested inner chain `N:K1,..,Ks:D1,..,Ds`.
        #[arg(long)]
        chain: String,
        #[command(flatten)]
        emit: Emit,
    },
}

#[derive(Debug, Args)]
struct Emit {
    /// Write the stabilizer generator matrix to this file.
    #[arg(long)]
    emit_generators: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Order of generalized concatenation (gcq only).
    #[arg(long)]
    s: Option<usize>,
    /// Inner code table (ktv only).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Number of rate grid points on [0, 1].
    #[arg(long, default_value_t = 101)]
    grid: usize,
    /// External `R,<value>` curves merged as extra columns.
    #[arg(long)]
    overlay: Vec<PathBuf>,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Gv,
    Zyablov,
    Gcq,
    Bz,
    Ktv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Counting,
    Symplectic,
    Rho,
    Distance,
    Decoder,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Counting => Suite::Counting,
            SuiteArg::Symplectic => Suite::Symplectic,
            SuiteArg::Rho => Suite::Rho,
            SuiteArg::Distance => Suite::Distance,
            SuiteArg::Decoder => Suite::Decoder,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A parsed code specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSpec {
    Five,
    Steane,
    Trivial(usize),
    Qrs(usize, usize),
    Search {
        n: usize,
        k: usize,
        d: u32,
        seed: Option<u64>,
    },
    File(PathBuf),
    Concat(Box<CodeSpec>, Box<CodeSpec>),
}

fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

impl std::str::FromStr for CodeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((outer, inner)) = s.rsplit_once('*') {
            return Ok(CodeSpec::Concat(Box::new(outer.parse()?), Box::new(inner.parse()?)));
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts[..] {
            ["five"] => Ok(CodeSpec::Five),
            ["steane"] => Ok(CodeSpec::Steane),
            ["trivial", m] => Ok(CodeSpec::Trivial(num(m, "length")?)),
            ["qrs", m, k] => Ok(CodeSpec::Qrs(num(m, "m")?, num(k, "k")?)),
            ["search", n, k, d] => Ok(CodeSpec::Search {
                n: num(n, "n")?,
                k: num(k, "k")?,
                d: num(d, "d")?,
                seed: None,
            }),
            ["search", n, k, d, seed] => Ok(CodeSpec::Search {
                n: num(n, "n")?,
                k: num(k, "k")?,
                d: num(d, "d")?,
                seed: Some(num(seed, "seed")?),
            }),
            ["file", ..] => Ok(CodeSpec::File(PathBuf::from(&s[5..]))),
            [kw, ..] if ["five", "steane", "trivial", "qrs", "search"].contains(&kw) => {
                Err(Error::Parse(format!("malformed code spec {s:?}")))
            }
            _ if s.is_empty() => Err(Error::Parse("empty code spec".into())),
            _ => Ok(CodeSpec::File(PathBuf::from(s))),
        }
    }
}

impl CodeSpec {
    /// The stabilizer code this spec denotes.
    pub fn stab(&self, seed: u64) -> Result<StabilizerCode> {
        match self {
            CodeSpec::Five => Ok(codes::five_qubit()),
            CodeSpec::Steane => Ok(codes::steane()),
            CodeSpec::Trivial(m) => {
                if *m == 0 {
                    return Err(Error::InvalidParameter("trivial code needs m >= 1".into()));
                }
                Ok(codes::trivial(*m))
            }
            CodeSpec::Qrs(m, k) => Ok(QuantumRsCode::new(*m, *k)?.into_stab()),
            CodeSpec::Search { n, k, d, seed: s } => {
                let req = ChainRequest::new(*n, vec![*k], vec![*d]).seed(s.unwrap_or(seed));
                Ok(find_nested_chain(&req)?.remove(0))
            }
            CodeSpec::File(path) => StabilizerCode::from_stabilizers(read_generators(path)?),
            CodeSpec::Concat(..) => Ok(self.concat(seed)?.into_stab()),
        }
    }

    /// Outer code with blocks of `block` symbols. Quantum RS codes carry
    /// their designed block distance; others are certified by enumeration.
    pub fn outer(&self, block: usize, seed: u64) -> Result<OuterCode> {
        match self {
            CodeSpec::Qrs(m, k) => {
                let q = QuantumRsCode::new(*m, *k)?;
                if q.m() != block {
                    return Err(Error::InvalidParameter(format!(
                        "outer blocks have {} symbols but the inner code encodes {block}",
                        q.m()
                    )));
                }
                Ok(OuterCode::from_qrs(q))
            }
            _ => OuterCode::certified(self.stab(seed)?, block, DEFAULT_BUDGET),
        }
    }

    /// The concatenated code of an `OUTER*INNER` spec.
    pub fn concat(&self, seed: u64) -> Result<ConcatenatedCode> {
        let CodeSpec::Concat(outer, inner) = self else {
            return Err(Error::InvalidParameter(
                "expected a concatenated code OUTER*INNER".into(),
            ));
        };
        let inner = inner.stab(seed)?;
        concatenate(outer.outer(inner.k(), seed)?, inner)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

/// Run the CLI on `args`, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("output: {e}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let seed = cli.seed;
    match &cli.command {
        Command::Build { what } => build(what, seed, out),
        Command::Mindist { code, budget } => {
            let spec: CodeSpec = code.parse()?;
            writeln!(out, "# qconcat mindist code={code} budget={budget} seed={seed}").map_err(io_err)?;
            let q = spec.stab(seed)?;
            let start = Instant::now();
            let d = min_weight_outside(&q, *budget)?;
            writeln!(out, "[[{},{}]] d={d}", q.n(), q.k()).map_err(io_err)?;
            writeln!(err, "elapsed: {:.3}s", start.elapsed().as_secs_f64()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Bounds(args) => bounds(args, out),
        Command::Simulate {
            code,
            p,
            trials,
            threads,
        } => {
            let spec: CodeSpec = code.parse()?;
            let channel = DepolarizingChannel::new(*p)?;
            if threads == &Some(0) {
                return Err(Error::InvalidParameter("--threads must be at least 1".into()));
            }
            let cc = spec.concat(seed)?;
            let dec = ConcatDecoder::new(&cc)?;
            let stats = simulate(&dec, &channel, *trials, seed, *threads)?;
            writeln!(out, "# qconcat simulate code={code} p={p} trials={trials} seed={seed}").map_err(io_err)?;
            writeln!(out, "code: {}", cc.describe()).map_err(io_err)?;
            writeln!(
                out,
                "failures={} trials={} rate={:.6e} ci95=[{:.6e}, {:.6e}]",
                stats.failures, stats.trials, stats.rate, stats.ci_low, stats.ci_high
            )
            .map_err(io_err)?;
            writeln!(err, "wall time: {:.3}s", stats.wall_time.as_secs_f64()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_n } => {
            let opts = verify::Options { max_n: *max_n, seed };
            writeln!(out, "# qconcat verify suite={} seed={seed}", Suite::from(*suite).name()).map_err(io_err)?;
            let report = verify::run((*suite).into(), &opts);
            writeln!(out, "{report}").map_err(io_err)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn emit(code: &StabilizerCode, emit: &Emit, out: &mut dyn Write) -> Result<()> {
    writeln!(out, "{}", code.describe()).map_err(io_err)?;
    writeln!(
        out,
        "stabilizer generators: {}, logical generators: {}",
        code.c().dim(),
        code.logicals().len()
    )
    .map_err(io_err)?;
    if let Some(path) = &emit.emit_generators {
        std::fs::write(path, format_generators(code.c()))
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn build(what: &BuildCmd, seed: u64, out: &mut dyn Write) -> Result<i32> {
    match what {
        BuildCmd::Qrs { m, k, emit: e } => {
            writeln!(out, "# qconcat build qrs m={m} k={k}").map_err(io_err)?;
            let q = QuantumRsCode::new(*m, *k)?;
            emit(q.stab(), e, out)?;
        }
        BuildCmd::Concat { outer, inner, emit: e } => {
            writeln!(out, "# qconcat build concat outer={outer} inner={inner} seed={seed}").map_err(io_err)?;
            let spec = CodeSpec::Concat(Box::new(outer.parse()?), Box::new(inner.parse()?));
            emit(spec.concat(seed)?.stab(), e, out)?;
        }
        BuildCmd::Gconcat {
            s,
            outer,
            chain,
            emit: e,
        } => {
            writeln!(
                out,
                "# qconcat build gconcat s={s} outer={} chain={chain} seed={seed}",
                outer.join(",")
            )
            .map_err(io_err)?;
            let specs: Vec<CodeSpec> = match outer.len() {
                1 => vec![outer[0].parse()?; *s],
                len if len == *s => outer.iter().map(|o| o.parse()).collect::<Result<_>>()?,
                len => {
                    return Err(Error::InvalidParameter(format!("{len} outer codes for order s={s}")));
                }
            };
            let req = parse_chain(chain)?.seed(seed);
            let family = NestedInnerFamily::new(find_nested_chain(&req)?)?;
            let outers = specs
                .iter()
                .map(|sp| sp.outer(family.m(), seed))
                .collect::<Result<Vec<_>>>()?;
            emit(generalized_concatenate(outers, family)?.stab(), e, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_chain(s: &str) -> Result<ChainRequest> {
    let parts: Vec<&str> = s.split(':').collect();
    let [n, ks, ds] = parts[..] else {
        return Err(Error::Parse(format!("chain must be N:K1,..:D1,.. (got {s:?})")));
    };
    let list = |t: &str, what: &str| -> Result<Vec<usize>> { t.split(',').map(|x| num(x, what)).collect() };
    let ds = list(ds, "distance")?.into_iter().map(|d| d as u32).collect();
    Ok(ChainRequest::new(num(n, "n")?, list(ks, "k")?, ds))
}

fn bounds(args: &BoundsArgs, out: &mut dyn Write) -> Result<i32> {
    let kind = match args.kind {
        KindArg::Gv => BoundKind::Gv,
        KindArg::Zyablov => BoundKind::Zyablov,
        KindArg::Bz => BoundKind::Bz,
        KindArg::Ktv => BoundKind::Ktv,
        KindArg::Gcq => BoundKind::Gcq(
            args.s
                .ok_or_else(|| Error::InvalidParameter("--kind gcq needs --s".into()))?,
        ),
    };
    if args.s.is_some() && args.kind != KindArg::Gcq {
        return Err(Error::InvalidParameter("--s applies only to --kind gcq".into()));
    }
    let table = match (&args.table, args.kind) {
        (Some(p), KindArg::Ktv) => Some(read_table(p)?),
        (None, KindArg::Ktv) => return Err(Error::InvalidParameter("--kind ktv needs --table".into())),
        (Some(_), _) => return Err(Error::InvalidParameter("--table applies only to --kind ktv".into())),
        (None, _) => None,
    };
    let overlays = args
        .overlay
        .iter()
        .map(|p| Overlay::read(p))
        .collect::<Result<Vec<_>>>()?;
    let curve = curve_sample(kind, args.grid, table.as_ref())?;
    let mut config = format!("qconcat bounds kind={}", kind.name());
    if let BoundKind::Gcq(s) = kind {
        config.push_str(&format!(" s={s}"));
    }
    config.push_str(&format!(" grid={}", args.grid));
    if let Some(t) = &args.table {
        config.push_str(&format!(" table={}", t.display()));
    }
    for o in &args.overlay {
        config.push_str(&format!(" overlay={}", o.display()));
    }
    let text = format_curve(&curve, &[config], &overlays)?;
    match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_OK)
}
