//! Command-line front end. Every subcommand produces one artifact (JSON or
//! CSV) on stdout or in `--out`, plus `<out>.manifest.json` describing the run.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::chartab::{fourier_coefficients, witten_zeta, CharacterTable};
use crate::dist::{
    exact_distribution, fix_tail, monte_carlo_distribution, uniform, Distribution, Norm,
};
use crate::error::{Error, Result};
use crate::fqlinalg::{centralizer_table, jordan_data, small_centralizer_experiment};
use crate::homcount::{epimorphism_probability, hom_count, subgrowth, EpiMode};
use crate::walkcert::{self, fraction_string, Mode};
use crate::{FiniteGroup, Word};

pub use config::expand_config;

/// Exit status for malformed command lines and configs.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser, Serialize)]
#[command(name = "wordmap", version, about = "Word maps on finite groups")]
pub struct Cli {
    /// Worker threads (default: WORDMAP_THREADS, then all cores).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,

    /// Flat `key = value` file supplying defaults for any option.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampling {
    Exact,
    Mc,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Distribution of a word map, optionally with distances to uniform.
    Dist(DistArgs),
    /// Fourier coefficients a_χ of a word-map distribution.
    Fourier(GroupWord),
    /// Witten zeta function of a group.
    Zeta(ZetaArgs),
    /// The lattice-walk primitivity certificate.
    WalkCert(WalkCertArgs),
    /// P_n for n below a cutoff.
    WalkPn(WalkPnArgs),
    /// Centralizer dimensions and orders in a matrix group.
    Centralizer(CentralizerArgs),
    /// Probability that a word value has a small centralizer.
    SmallCentralizer(SmallCentralizerArgs),
    /// |Hom(Γ, G)| for a one-relator group Γ.
    Homcount(HomcountArgs),
    /// Subgroup and maximal-subgroup counts a_n, m_n.
    Subgrowth(SubgrowthArgs),
    /// Pr[fix(w(σ)) ≥ k] in S_n against its analytic bound.
    Fixtail(FixtailArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct GroupWord {
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args, Serialize)]
pub struct DistArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub target: GroupWord,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Sampling,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add L¹, L², L^∞ distances to the uniform distribution.
    #[arg(long)]
    pub norms: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct ZetaArgs {
    #[arg(long)]
    pub group: String,
    /// Comma-separated exponents.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub s: Vec<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct WalkCertArgs {
    #[arg(long, default_value_t = 1000)]
    pub cutoff: usize,
    #[arg(long, default_value_t = 60)]
    pub prime_cutoff: usize,
    #[arg(long, default_value = "exact")]
    pub mode: String,
}

#[derive(Debug, Args, Serialize)]
pub struct WalkPnArgs {
    #[arg(long, default_value_t = 1000)]
    pub max_n: usize,
    #[arg(long, default_value = "exact")]
    pub mode: String,
}

#[derive(Debug, Args, Serialize)]
pub struct CentralizerArgs {
    #[arg(long)]
    pub group: String,
    /// List every element.
    #[arg(long)]
    pub all: bool,
    /// A single element by encoding.
    #[arg(long)]
    pub element: Option<u32>,
}

#[derive(Debug, Args, Serialize)]
pub struct SmallCentralizerArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub target: GroupWord,
    #[arg(long)]
    pub c: f64,
    /// 0 enumerates every tuple.
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct HomcountArgs {
    #[arg(long)]
    pub relator: String,
    #[arg(long)]
    pub group: String,
    /// Also report the fraction of homomorphisms that are onto.
    #[arg(long, value_enum)]
    pub epi: Option<Sampling>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct SubgrowthArgs {
    #[arg(long)]
    pub relator: String,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct FixtailArgs {
    #[arg(long, default_value = "x1")]
    pub word: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A finished artifact.
pub struct Artifact {
    pub format: Format,
    pub text: String,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dist(_) => "dist",
            Command::Fourier(_) => "fourier",
            Command::Zeta(_) => "zeta",
            Command::WalkCert(_) => "walk-cert",
            Command::WalkPn(_) => "walk-pn",
            Command::Centralizer(_) => "centralizer",
            Command::SmallCentralizer(_) => "small-centralizer",
            Command::Homcount(_) => "homcount",
            Command::Subgrowth(_) => "subgrowth",
            Command::Fixtail(_) => "fixtail",
        }
    }

    /// Tabular outputs default to CSV.
    fn default_format(&self) -> Format {
        match self {
            Command::Zeta(_) | Command::WalkPn(_) | Command::Centralizer(_) | Command::Subgrowth(_) => {
                Format::Csv
            }
            _ => Format::Json,
        }
    }
}

fn word(s: &str) -> Result<Word> {
    s.parse()
}

fn group(spec: &str) -> Result<Arc<FiniteGroup>> {
    FiniteGroup::construct(spec)
}

fn json_text(v: &impl Serialize) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

fn no_csv(cmd: &str) -> Error {
    Error::arg(format!("`{cmd}` has no CSV form"))
}

/// Runs a parsed command and renders its artifact.
pub fn execute(cmd: &Command, format: Option<Format>) -> Result<Artifact> {
    let format = format.unwrap_or(cmd.default_format());
    let text = match cmd {
        Command::Dist(a) => {
            let w = word(&a.target.word)?;
            let g = group(&a.target.group)?;
            let p = match a.mode {
                Sampling::Exact => exact_distribution(&w, &g)?,
                Sampling::Mc => monte_carlo_distribution(&w, &g, a.samples, a.seed)?,
            };
            match format {
                Format::Csv => p.to_csv(),
                Format::Json => {
                    let mut v = p.to_json();
                    v["word"] = json!(w.to_string());
                    if a.norms {
                        v["norms"] = norms(&p)?;
                    }
                    json_text(&v)?
                }
            }
        }
        Command::Fourier(a) => {
            let w = word(&a.word)?;
            let g = group(&a.group)?;
            let t = CharacterTable::compute(&g)?;
            let p = exact_distribution(&w, &g)?;
            let coeffs = fourier_coefficients(&p, &t)?;
            let rows = coeffs.values.iter().zip(t.degrees()).enumerate();
            match format {
                Format::Csv => csv(
                    "character,degree,re,im",
                    rows.map(|(i, (c, d))| format!("{i},{d},{},{}", c.re, c.im)),
                ),
                Format::Json => json_text(&json!({
                    "group": g.spec(),
                    "word": w.to_string(),
                    "max_abs": coeffs.max_abs(),
                    "coefficients": rows
                        .map(|(i, (c, d))| json!({"character": i, "degree": d, "value": [c.re, c.im]}))
                        .collect::<Vec<_>>(),
                }))?,
            }
        }
        Command::Zeta(a) => {
            let g = group(&a.group)?;
            let t = CharacterTable::compute(&g)?;
            let rows: Vec<(f64, f64)> = a.s.iter().map(|&s| (s, witten_zeta(&t, s))).collect();
            match format {
                Format::Csv => csv("s,zeta", rows.iter().map(|(s, z)| format!("{s},{z}"))),
                Format::Json => json_text(&json!({
                    "group": g.spec(),
                    "degrees": t.degrees(),
                    "values": rows.iter().map(|(s, z)| json!({"s": s, "zeta": z})).collect::<Vec<_>>(),
                }))?,
            }
        }
        Command::WalkCert(a) => {
            let mode: Mode = a.mode.parse()?;
            let cert = walkcert::certificate(a.cutoff, a.prime_cutoff, mode)?;
            match format {
                Format::Csv => return Err(no_csv("walk-cert")),
                Format::Json => json_text(&cert)?,
            }
        }
        Command::WalkPn(a) => {
            let mode: Mode = a.mode.parse()?;
            let values = walkcert::primitivity_probabilities(a.max_n, mode)?;
            match format {
                Format::Csv => csv(
                    "n,p_n,float,lower,upper",
                    values.iter().map(|v| {
                        let frac = v.exact.as_ref().map(fraction_string).unwrap_or_default();
                        format!("{},{},{},{},{}", v.n, frac, v.estimate(), v.lower, v.upper)
                    }),
                ),
                Format::Json => json_text(
                    &values
                        .iter()
                        .map(|v| {
                            json!({
                                "n": v.n,
                                "p_n": v.exact.as_ref().map(fraction_string),
                                "float": v.estimate(),
                                "lower": v.lower,
                                "upper": v.upper,
                            })
                        })
                        .collect::<Vec<_>>(),
                )?,
            }
        }
        Command::Centralizer(a) => {
            let g = group(&a.group)?;
            let f = g
                .field()
                .ok_or_else(|| Error::arg(format!("{} is not a matrix group", g.spec())))?;
            let rows = match (a.all, a.element) {
                (true, None) => centralizer_table(&g)?,
                (false, Some(x)) => {
                    if x as usize >= g.order() {
                        return Err(Error::arg(format!("element {x} out of range")));
                    }
                    let m = g.matrix(x).unwrap();
                    let jd = jordan_data(&m, f)?;
                    vec![crate::fqlinalg::CentralizerRow {
                        element: x,
                        code: m.code(f.order()),
                        dim: jd.centralizer_dim(),
                        order: g.centralizer_order(x) as u128,
                    }]
                }
                _ => return Err(Error::arg("pass exactly one of --all and --element")),
            };
            match format {
                Format::Csv => csv(
                    "element,code,dim,order",
                    rows.iter()
                        .map(|r| format!("{},{},{},{}", r.element, r.code, r.dim, r.order)),
                ),
                Format::Json => json_text(&rows)?,
            }
        }
        Command::SmallCentralizer(a) => {
            let w = word(&a.target.word)?;
            let r = small_centralizer_experiment(&w, &a.target.group, a.samples, a.c, a.seed)?;
            match format {
                Format::Csv => return Err(no_csv("small-centralizer")),
                Format::Json => json_text(&r)?,
            }
        }
        Command::Homcount(a) => {
            let w = word(&a.relator)?;
            let g = group(&a.group)?;
            let count = hom_count(&w, &g)?;
            let epi = match a.epi {
                None => None,
                Some(Sampling::Exact) => Some(epimorphism_probability(&w, &g, EpiMode::Exact)?),
                Some(Sampling::Mc) => Some(epimorphism_probability(
                    &w,
                    &g,
                    EpiMode::MonteCarlo {
                        samples: a.samples,
                        seed: a.seed,
                    },
                )?),
            };
            match format {
                Format::Csv => csv("relator,group,count", [format!("{w},{},{count}", g.spec())]),
                Format::Json => json_text(&json!({
                    "relator": w.to_string(),
                    "arity": w.arity(),
                    "group": g.spec(),
                    "order": g.order(),
                    "count": count,
                    "epimorphisms": epi,
                }))?,
            }
        }
        Command::Subgrowth(a) => {
            let w = word(&a.relator)?;
            let rows = subgrowth(&w, a.max_n)?;
            match format {
                Format::Csv => csv(
                    "n,a_n,m_n,free_ratio",
                    rows.iter().map(|r| {
                        let ratio = r.free_ratio.map(|x| x.to_string()).unwrap_or_default();
                        format!("{},{},{},{}", r.n, r.a_n, r.m_n, ratio)
                    }),
                ),
                Format::Json => json_text(&rows)?,
            }
        }
        Command::Fixtail(a) => {
            let w = word(&a.word)?;
            let r = fix_tail(&w, a.n, a.k, a.samples, a.seed)?;
            match format {
                Format::Csv => return Err(no_csv("fixtail")),
                Format::Json => json_text(&r)?,
            }
        }
    };
    Ok(Artifact { format, text })
}

fn norms(p: &Distribution) -> Result<serde_json::Value> {
    let u = uniform(p.group());
    Ok(json!({
        "l1": p.lp_distance(&u, Norm::L1)?,
        "l2": p.lp_distance(&u, Norm::L2)?,
        "linf": p.lp_distance(&u, Norm::Inf)?,
    }))
}

fn thread_count(cli: Option<usize>) -> Result<Option<usize>> {
    if cli.is_some() {
        return Ok(cli);
    }
    match std::env::var("WORDMAP_THREADS") {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::arg(format!("WORDMAP_THREADS=`{s}` is not a thread count"))),
        _ => Ok(None),
    }
}

fn manifest_path(out: &std::path::Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn run_parsed(cli: &Cli) -> Result<()> {
    let threads = thread_count(cli.threads)?;
    if let Some(t) = threads {
        if t == 0 {
            return Err(Error::arg("--threads must be positive"));
        }
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let started = Instant::now();
    let artifact = execute(&cli.command, cli.format)?;
    let elapsed = started.elapsed().as_secs_f64();
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &artifact.text)?;
            let manifest = json!({
                "subcommand": cli.command.name(),
                "config": cli,
                "format": artifact.format,
                "version": env!("CARGO_PKG_VERSION"),
                "threads": rayon::current_num_threads(),
                "wall_time_seconds": elapsed,
            });
            std::fs::write(manifest_path(path), json_text(&manifest)?)?;
        }
        None => {
            std::io::stdout().write_all(artifact.text.as_bytes())?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_parsed(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
