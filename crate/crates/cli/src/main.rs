//! `hurwitz` command-line front end.
//!
//! Exit codes: 0 success, 1 domain error or failed verification, 2 refusal
//! (enumeration budget or degree cap), 64 usage error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hurwitz::characters::{self, character_table, verify_orthogonality, TableCache};
use hurwitz::hurwitz::{
    deformed_hurwitz, generating_series, hurwitz as hurwitz_value, moebius_functional,
    verify_connected_evolution, verify_cut_suite, verify_cutjoin_evolution, HurwitzQuery,
    SurfaceSpec,
};
use hurwitz::oracles::tuple::{
    conjugation_orbit_check, tuple_hurwitz, tuple_hurwitz_naive, DEFAULT_BUDGET,
};
use hurwitz::oracles::wick::{verify_theorem, wick_contract, CombinatorialMap};
use hurwitz::partitions::{self, enumerate_partitions, parse_profile_list};
use hurwitz::rational;
use hurwitz::selftest::{self, Level};
use hurwitz::symfun::{cut_and_join_apply, cutjoin_eigencheck, PowerSumPoly};
use hurwitz::yangmills::{
    int_tau_cases, tau_hypergeometric, tau_jm, verify_char_map, verify_int_tau,
    verify_schur_expectation, verify_tau_jm, verify_tilde_h, ym_correlator, ym_correlator_numeric,
    ClassSpec, TauKind,
};
use hurwitz::{Error, Partition};

const EXIT_DOMAIN: u8 = 1;
const EXIT_REFUSAL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact Hurwitz numbers of closed surfaces"
)]
struct Cli {
    /// Character-table cache directory.
    #[arg(long, global = true, env = "HURWITZ_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Enumeration budget for the brute-force oracles.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    /// Largest degree any computation may use.
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of d in canonical order.
    Partitions {
        #[arg(long)]
        d: usize,
    },
    /// Character table of S_d.
    CharTable {
        #[arg(long)]
        d: usize,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// Hurwitz number of a closed surface.
    Hurwitz(HurwitzArgs),
    /// The cut-and-join operator on power-sum polynomials.
    Cutjoin(CutjoinArgs),
    /// Brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Yang–Mills partition functions and correlators.
    Ym(YmArgs),
    /// Tau-function series.
    #[command(subcommand)]
    Tau(TauCommand),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Character-table cache management.
    #[command(subcommand)]
    Cache(CacheCommand),
    /// Run the built-in acceptance checks.
    Selftest {
        #[arg(long, default_value = "fast")]
        level: Level,
    },
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true)]
    euler: i64,
    /// Defaults to true for even Euler characteristic.
    #[arg(long)]
    orientable: Option<bool>,
}

impl SurfaceArgs {
    fn surface(&self) -> hurwitz::Result<SurfaceSpec> {
        match self.orientable {
            Some(o) => SurfaceSpec::new(self.euler, o),
            None => SurfaceSpec::with_euler(self.euler),
        }
    }
}

#[derive(Args)]
struct HurwitzArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Bracketed profiles, e.g. "[3],[2,1]".
    #[arg(long, default_value = "")]
    profiles: String,
    /// Degree; required when no profile is given.
    #[arg(long)]
    d: Option<usize>,
    /// Deform by exp(t Σ q^contents) with q = s²; prints a t-series.
    #[arg(long)]
    s: Option<String>,
    #[arg(long, default_value_t = 3)]
    t_order: u32,
}

#[derive(Args)]
struct CutjoinArgs {
    /// Apply L° to a power-sum polynomial: a partition like '[2]' or JSON
    /// {"coeffs":{...}}.
    #[arg(long, conflicts_with_all = ["eigen", "series"])]
    apply: Option<String>,
    /// Check L° s_λ = (Σ contents) s_λ.
    #[arg(long)]
    eigen: Option<String>,
    /// Print the generating series of 1-Hurwitz numbers.
    #[arg(long)]
    series: bool,
    #[arg(long, default_value_t = 3)]
    dmax: usize,
    #[arg(long, default_value_t = 3)]
    m: u32,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Count permutation tuples satisfying the surface relation.
    Tuple {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        profiles: String,
        /// Use the plain enumerator instead of convolution.
        #[arg(long)]
        naive: bool,
        /// Also count conjugation orbits.
        #[arg(long)]
        orbits: bool,
    },
    /// Contract Wick pairings along a combinatorial map.
    Wick {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        d: usize,
        /// Compare every entry with tuple counting and the engine.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct YmArgs {
    #[arg(long, allow_hyphen_values = true)]
    euler: i64,
    /// Numeric coupling; exact mode (formal ρ) when omitted.
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<f64>,
    #[arg(long = "N")]
    n: i64,
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    /// JSON list of classes, e.g. [{"kind":"identity"}].
    #[arg(long)]
    classes: Option<PathBuf>,
    /// Order in ρ in exact mode.
    #[arg(long, default_value_t = 2)]
    rho_order: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tl,
    Bkp,
}

impl From<KindArg> for TauKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tl => TauKind::Tl,
            KindArg::Bkp => TauKind::Bkp,
        }
    }
}

#[derive(Subcommand)]
enum TauCommand {
    /// Jucys–Murphy tau series in times t_1..t_times.
    Jm {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long, default_value_t = 2)]
        t_order: u32,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        /// Compare with deformed Hurwitz numbers.
        #[arg(long)]
        check: bool,
    },
    /// Hypergeometric tau series in a formal t.
    Hyper {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        #[arg(long = "N")]
        n: i64,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        #[arg(long, default_value_t = 2)]
        t_order: u32,
        /// JSON list of matrix arguments; symbolic when omitted.
        #[arg(long)]
        args: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Handle, surface and cross-cap cut relations.
    Cuts {
        #[arg(long)]
        d: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "2,1,0,-1"
        )]
        eulers: Vec<i64>,
    },
    /// Character orthogonality for all degrees up to d.
    Orthogonality {
        #[arg(long)]
        d: usize,
    },
    /// Cut-and-join evolution of F° and of log F°.
    Evolution {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, default_value_t = 3)]
        m: u32,
    },
    /// Tau coefficients against deformed Hurwitz numbers.
    Tau {
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        #[arg(long, default_value_t = 2)]
        t_order: u32,
        #[arg(long, default_value = "2/3")]
        s: String,
    },
    /// s_λ(𝕀_N) and its powers as polynomials in N.
    CharMap {
        #[arg(long, default_value_t = 5)]
        dmax: usize,
    },
    /// 1/N coefficients of Yang–Mills correlators.
    TildeH {
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        #[arg(long, default_value_t = 0)]
        classes: usize,
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        #[arg(long, default_value_t = 2)]
        rho_order: u32,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Schur expectations over a map, Wick route against the closed form.
    Schur {
        #[arg(long)]
        map: PathBuf,
        /// One diagram per face, e.g. "[2],[2]".
        #[arg(long)]
        lambdas: String,
        #[arg(long = "N")]
        n: i64,
    },
    /// Integrals of tau-function products over the example maps.
    IntTau {
        #[arg(long = "N", default_value_t = 3)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        #[arg(long, default_value_t = 2)]
        rho_order: u32,
    },
}

#[derive(Subcommand)]
enum CacheCommand {
    /// List cached tables.
    List,
    /// Compute and store tables for all d ≤ dmax.
    Warm {
        #[arg(long)]
        dmax: usize,
    },
    /// Validate cached tables, recomputing rejected ones.
    Check,
    /// Delete all cached tables.
    Clear,
}

/// A command's result: its JSON form and whether it represents success.
struct Output {
    value: Value,
    ok: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, ok: true }
    }

    fn report(value: Value) -> Self {
        let ok = value.get("passed").and_then(Value::as_bool).unwrap_or(true);
        Output { value, ok }
    }
}

fn to_value(x: &impl serde::Serialize) -> hurwitz::Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.budget == 0 {
        eprintln!("error: --budget must be positive");
        return ExitCode::from(EXIT_USAGE);
    }
    characters::set_cache_dir(cli.cache_dir.clone());
    if let Some(d) = cli.max_degree {
        if let Err(e) = partitions::set_max_degree(d) {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let format = match &cli.command {
        Command::CharTable { json: true, .. } => Format::Json,
        _ => cli.format,
    };
    match run(&cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.value),
                Format::Table => print!("{}", render::table(&out.value)),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DOMAIN)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() {
                EXIT_REFUSAL
            } else {
                EXIT_DOMAIN
            })
        }
    }
}

fn read_file(path: &PathBuf) -> hurwitz::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn read_classes(path: &Option<PathBuf>) -> hurwitz::Result<Option<Vec<ClassSpec>>> {
    path.as_ref()
        .map(|p| Ok(serde_json::from_str(&read_file(p)?)?))
        .transpose()
}

fn run(cli: &Cli) -> hurwitz::Result<Output> {
    let budget = cli.budget;
    match &cli.command {
        Command::Partitions { d } => {
            partitions::check_degree(*d)?;
            let parts = enumerate_partitions(*d);
            Ok(Output::ok(
                json!({ "d": d, "count": parts.len(), "partitions": parts }),
            ))
        }
        Command::CharTable { d, .. } => {
            let t = character_table(*d)?;
            Ok(Output::ok(json!({
                "d": d,
                "partitions": t.partitions(),
                "table": t.values(),
            })))
        }
        Command::Hurwitz(args) => hurwitz_cmd(args),
        Command::Cutjoin(args) => cutjoin_cmd(args),
        Command::Oracle(OracleCommand::Tuple {
            surface,
            profiles,
            naive,
            orbits,
        }) => {
            let surface = surface.surface()?;
            let profiles = parse_profile_list(profiles)?;
            let d = profiles
                .first()
                .map(Partition::weight)
                .ok_or_else(|| Error::InvalidArgument("at least one profile is required".into()))?;
            if *orbits {
                let r = conjugation_orbit_check(&surface, d, &profiles, budget)?;
                return Ok(Output::report(to_value(&r)?));
            }
            let value = if *naive {
                tuple_hurwitz_naive(&surface, d, &profiles, budget)?
            } else {
                tuple_hurwitz(&surface, d, &profiles, budget)?
            };
            Ok(Output::ok(json!({ "value": rational::to_string(&value) })))
        }
        Command::Oracle(OracleCommand::Wick { map, d, check }) => {
            let map = CombinatorialMap::from_json(&read_file(map)?)?;
            if *check {
                Ok(Output::report(to_value(&verify_theorem(
                    &map, *d, budget,
                )?)?))
            } else {
                Ok(Output::ok(to_value(&wick_contract(&map, *d, budget)?)?))
            }
        }
        Command::Ym(args) => {
            let classes = read_classes(&args.classes)?.unwrap_or_default();
            match args.rho {
                Some(rho) => Ok(Output::ok(to_value(&ym_correlator_numeric(
                    args.euler, rho, &classes, args.n, args.dmax,
                )?)?)),
                None => Ok(Output::ok(to_value(&ym_correlator(
                    args.euler,
                    &classes,
                    args.n,
                    args.dmax,
                    args.rho_order,
                )?)?)),
            }
        }
        Command::Tau(TauCommand::Jm {
            kind,
            k,
            s,
            times,
            t_order,
            dmax,
            check,
        }) => {
            let s = rational::parse(s)?;
            if *check {
                let r = verify_tau_jm((*kind).into(), *k, &s, *times, *t_order, *dmax)?;
                Ok(Output::report(to_value(&r)?))
            } else {
                let t = tau_jm((*kind).into(), *k, &s, *times, *t_order, *dmax)?;
                Ok(Output::ok(to_value(&t)?))
            }
        }
        Command::Tau(TauCommand::Hyper {
            kind,
            a,
            n,
            dmax,
            t_order,
            args,
        }) => {
            let kind: TauKind = (*kind).into();
            let args = read_classes(args)?.unwrap_or_else(|| match kind {
                TauKind::Tl => vec![ClassSpec::Symbolic; 2],
                TauKind::Bkp => vec![ClassSpec::Symbolic],
            });
            let t = tau_hypergeometric(kind, &args, *a, *n, *dmax, *t_order)?;
            Ok(Output::ok(to_value(&t)?))
        }
        Command::Verify(v) => verify_cmd(v, budget),
        Command::Cache(c) => cache_cmd(c, cli.cache_dir.clone()),
        Command::Selftest { level } => {
            let r = selftest::run(*level);
            for c in &r.checks {
                eprintln!("{}", c.line());
            }
            Ok(Output::report(to_value(&r)?))
        }
    }
}

fn hurwitz_cmd(args: &HurwitzArgs) -> hurwitz::Result<Output> {
    let surface = args.surface.surface()?;
    let profiles = if args.profiles.trim().is_empty() {
        Vec::new()
    } else {
        parse_profile_list(&args.profiles)?
    };
    let q = match (args.d, profiles.is_empty()) {
        (Some(d), _) => HurwitzQuery::with_degree(surface, d, profiles)?,
        (None, false) => HurwitzQuery::new(surface, profiles)?,
        (None, true) => {
            return Err(Error::InvalidArgument(
                "give --profiles or --d for an unbranched cover".into(),
            ))
        }
    };
    match &args.s {
        Some(s) => {
            let series = deformed_hurwitz(&q, &rational::parse(s)?, args.t_order)?;
            Ok(Output::ok(json!({ "series": to_value(&series)? })))
        }
        None => {
            let mut out = json!({ "value": rational::to_string(&hurwitz_value(&q)?) });
            if surface == SurfaceSpec::projective_plane() && q.profiles.len() == 1 {
                let d = moebius_functional(&q.profiles[0])?;
                out["moebius"] = json!(rational::to_string(&d));
            }
            Ok(Output::ok(out))
        }
    }
}

fn cutjoin_cmd(args: &CutjoinArgs) -> hurwitz::Result<Output> {
    if let Some(input) = &args.apply {
        let f: PowerSumPoly = if input.trim_start().starts_with('{') {
            serde_json::from_str(input)?
        } else {
            PowerSumPoly::monomial(input.parse()?, rational::int(1))
        };
        return Ok(Output::ok(to_value(&cut_and_join_apply(&f))?));
    }
    if let Some(lam) = &args.eigen {
        return Ok(Output::report(to_value(&cutjoin_eigencheck(
            &lam.parse()?,
        )?)?));
    }
    if args.series {
        return Ok(Output::ok(to_value(&generating_series(
            args.dmax, args.m,
        )?)?));
    }
    Err(Error::InvalidArgument(
        "give one of --apply, --eigen or --series".into(),
    ))
}

fn verify_cmd(v: &VerifyCommand, budget: u128) -> hurwitz::Result<Output> {
    let value = match v {
        VerifyCommand::Cuts { d, eulers } => to_value(&verify_cut_suite(*d, eulers)?)?,
        VerifyCommand::Orthogonality { d } => {
            let reports = (0..=*d)
                .map(|k| Ok(verify_orthogonality(&*character_table(k)?)))
                .collect::<hurwitz::Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.passed);
            json!({ "passed": passed, "degrees": reports })
        }
        VerifyCommand::Evolution { dmax, m } => {
            let disconnected = verify_cutjoin_evolution(*dmax, *m)?;
            let connected = verify_connected_evolution((*dmax).min(3), *m)?;
            json!({
                "passed": disconnected.passed && connected.passed,
                "disconnected": disconnected,
                "connected": connected,
            })
        }
        VerifyCommand::Tau { dmax, t_order, s } => {
            let s = rational::parse(s)?;
            let tl = verify_tau_jm(TauKind::Tl, 1, &s, 2, *t_order, *dmax)?;
            let bkp = verify_tau_jm(TauKind::Bkp, 1, &s, 2, *t_order, *dmax)?;
            json!({ "passed": tl.passed && bkp.passed, "tl": tl, "bkp": bkp })
        }
        VerifyCommand::CharMap { dmax } => {
            to_value(&verify_char_map(*dmax, &[-2, -1, 1, 2, 3], 6)?)?
        }
        VerifyCommand::TildeH {
            euler,
            classes,
            dmax,
            rho_order,
            depth,
        } => to_value(&verify_tilde_h(
            *euler, *classes, *dmax, *rho_order, *depth,
        )?)?,
        VerifyCommand::Schur { map, lambdas, n } => {
            let map = CombinatorialMap::from_json(&read_file(map)?)?;
            let lambdas = parse_profile_list(lambdas)?;
            to_value(&verify_schur_expectation(&map, &lambdas, *n, budget)?)?
        }
        VerifyCommand::IntTau { n, dmax, rho_order } => {
            let reports = int_tau_cases()
                .iter()
                .map(|c| verify_int_tau(c, *n, *dmax, *rho_order, budget))
                .collect::<hurwitz::Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.passed);
            json!({ "passed": passed, "cases": reports })
        }
    };
    Ok(Output::report(value))
}

fn cache_cmd(c: &CacheCommand, dir: Option<PathBuf>) -> hurwitz::Result<Output> {
    let Some(dir) = dir else {
        return Err(Error::InvalidArgument(
            "no cache directory: pass --cache-dir or set HURWITZ_CACHE_DIR".into(),
        ));
    };
    let cache = TableCache::new(Some(dir.clone()));
    let listing = |cache: &TableCache| -> hurwitz::Result<Value> {
        Ok(cache
            .entries()?
            .into_iter()
            .map(|(d, path)| json!({ "d": d, "path": path.display().to_string() }))
            .collect())
    };
    match c {
        CacheCommand::List => Ok(Output::ok(json!({
            "dir": dir.display().to_string(),
            "entries": listing(&cache)?,
        }))),
        CacheCommand::Warm { dmax } => {
            let outcomes = (0..=*dmax)
                .map(|d| {
                    let (_, o) = cache.load_or_compute(d)?;
                    Ok(json!({ "d": d, "outcome": format!("{o:?}") }))
                })
                .collect::<hurwitz::Result<Vec<_>>>()?;
            Ok(Output::ok(
                json!({ "dir": dir.display().to_string(), "tables": outcomes }),
            ))
        }
        CacheCommand::Check => {
            let outcomes = cache
                .entries()?
                .into_iter()
                .map(|(d, _)| {
                    let (_, o) = cache.load_or_compute(d)?;
                    Ok(json!({ "d": d, "outcome": format!("{o:?}") }))
                })
                .collect::<hurwitz::Result<Vec<_>>>()?;
            Ok(Output::ok(
                json!({ "dir": dir.display().to_string(), "tables": outcomes }),
            ))
        }
        CacheCommand::Clear => Ok(Output::ok(json!({ "removed": cache.clear()? }))),
    }
}
