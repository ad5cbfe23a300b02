mod cache;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use equistat::bijections;
use equistat::error::Error;
use equistat::genfunc::{self, CommSeries, LeftCrossingVariant};
use equistat::ncseries::{self, NCSeries, Refinement, SeriesFamily, Variant};
use equistat::objects::{BarredPermutation, Filling, HattedPermutation, MarkedMatching, Matching};
use equistat::oracle::checks::substitute_xyz;
use equistat::oracle::distribution::{distribution, matching_distribution};
use equistat::oracle::enumerate::{nlm_matchings, nlm_matchings_by_filter, perms};
use equistat::oracle::{check_conjecture, check_theorem, CheckReport, Family, TheoremId, MAX_N};

use cache::Cache;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Cap(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Core(Error::BoundExceeded { .. } | Error::TooLarge { .. }) => 4,
            CliError::Core(_) => 2,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("json: {e}"))
    }
}

/// Enumerate permutations and matchings, verify equidistribution results
/// and expand generating series.
#[derive(Parser, Debug)]
#[command(name = "equistat", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Result cache directory.
    #[arg(long, global = true, env = "EQUISTAT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all objects of a family, or the joint distribution of statistics.
    Enumerate(EnumerateArgs),
    /// Check a theorem or conjecture exhaustively.
    Verify(VerifyArgs),
    /// Expand a generating series.
    Series(SeriesArgs),
    /// Apply a named map to a JSON object read from stdin.
    Bijection(BijectionArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Perms,
    #[value(alias = "nlm", alias = "matchings")]
    NlmMatchings,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Perms => Family::Perms,
            FamilyArg::NlmMatchings => Family::NlmMatchings,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    NcsText,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Comma-separated statistic names; lowercase for counts, capitalized for sets.
    #[arg(long, value_delimiter = ',')]
    stats: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Generate matchings by filtering all perfect matchings (slow, n ≤ 6).
    #[arg(long)]
    by_filter: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("check").required(true).args(["theorem", "conjecture"])))]
struct VerifyArgs {
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long)]
    conjecture: Option<u8>,
    #[arg(long)]
    n_max: usize,
    /// Report file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Witness file written on a counterexample (default: `<check>.witness.json`).
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formula {
    Fishburn,
    MainXyz,
    MainSxy,
    Conj20,
    LeftcrossXyzu,
    LeftcrossSxyu,
    NcMain,
    NcAscbottom,
    Brute,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    GeneralW,
    SillyS,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RefinementArg {
    Pqr,
    SillyS,
    SillyHatS,
    AscentBottom,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long, value_enum, default_value = "general-w")]
    variant: VariantArg,
    /// Word-length truncation for noncommutative series.
    #[arg(long, default_value_t = 5)]
    max_degree: usize,
    /// Number of terms for commutative series.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Object family for `brute`.
    #[arg(long, value_enum, default_value = "perms")]
    family: FamilyArg,
    /// Statistic refinement for `brute`.
    #[arg(long, value_enum, default_value = "pqr")]
    refinement: RefinementArg,
    /// Rewrite `brute` output in the alphabet of `nc-main`.
    #[arg(long)]
    substitute: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    Phi,
    PhiInv,
    PhiSilly,
    PhiSillyInv,
    Psi,
    PsiInv,
    FMarked,
    FMarkedInv,
    Steepen,
    Flatten,
    G,
    GInv,
    Iota,
    Leftcross,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    #[arg(value_enum)]
    name: MapName,
}

fn cap(what: &str, n: usize) -> Result<(), CliError> {
    if n > MAX_N {
        return Err(CliError::Cap(format!("{what} = {n} exceeds the cap {MAX_N}")));
    }
    Ok(())
}

fn emit(out: Option<&PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, bytes)?,
        None => io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn to_json(v: &impl Serialize) -> Result<Vec<u8>, CliError> {
    let mut s = serde_json::to_vec_pretty(v)?;
    s.push(b'\n');
    Ok(s)
}

fn to_csv<R: Serialize>(header: &[&str], rows: impl IntoIterator<Item = R>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner()
        .map_err(|e| CliError::Io(io::Error::other(e.to_string())))
}

fn enumerate(args: &EnumerateArgs, cache: &Cache) -> Result<(), CliError> {
    cap("n", args.n)?;
    if args.format == Format::NcsText {
        return Err(CliError::Usage("enumerate writes csv or json".into()));
    }
    let family = Family::from(args.family);
    if args.by_filter && family != Family::NlmMatchings {
        return Err(CliError::Usage("--by-filter applies to matchings only".into()));
    }
    let key = json!({
        "command": "enumerate",
        "family": family.name(),
        "n": args.n,
        "stats": args.stats,
        "format": format!("{:?}", args.format),
        "by_filter": args.by_filter,
    });
    let bytes = cache.get_or_compute(key, || {
        let matchings = || {
            if args.by_filter {
                nlm_matchings_by_filter(args.n)
            } else {
                nlm_matchings(args.n)
            }
        };
        if args.stats.is_empty() {
            let objects: Vec<String> = match family {
                Family::Perms => perms(args.n)?.iter().map(|p| p.to_string()).collect(),
                Family::NlmMatchings => matchings()?.iter().map(|m| m.to_string()).collect(),
            };
            return match args.format {
                Format::Json => match family {
                    Family::Perms => to_json(&perms(args.n)?),
                    Family::NlmMatchings => to_json(&matchings()?),
                },
                _ => to_csv(&["n", "object"], objects.into_iter().map(|o| (args.n, o))),
            };
        }
        let schema: Vec<&str> = args.stats.iter().map(|s| s.as_str()).collect();
        let d = if args.by_filter {
            matching_distribution(args.n, &matchings()?, &schema)?
        } else {
            distribution(family, args.n, &schema)?
        };
        match args.format {
            Format::Json => to_json(&d),
            _ => to_csv(&["n", "key", "count"], d.rows()),
        }
    })?;
    emit(args.out.as_ref(), &bytes)
}

fn verify(args: &VerifyArgs, cache: &Cache) -> Result<bool, CliError> {
    cap("n-max", args.n_max)?;
    let key = json!({
        "command": "verify",
        "theorem": args.theorem,
        "conjecture": args.conjecture,
        "n_max": args.n_max,
    });
    let bytes = cache.get_or_compute(key, || {
        let report = match (&args.theorem, args.conjecture) {
            (Some(t), _) => check_theorem(
                TheoremId::parse(t).map_err(|e| CliError::Usage(e.to_string()))?,
                args.n_max,
            )?,
            (None, Some(c)) => check_conjecture(c, args.n_max).map_err(|e| match e {
                Error::Unknown(m) => CliError::Usage(format!("unknown identifier: {m}")),
                e => e.into(),
            })?,
            (None, None) => unreachable!("clap requires one"),
        };
        to_json(&report)
    })?;
    let report: CheckReport = serde_json::from_slice(&bytes)?;
    emit(args.out.as_ref(), &bytes)?;
    if report.verified() {
        return Ok(true);
    }
    let path = args
        .witness
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.witness.json", report.check_id)));
    fs::write(&path, to_json(&report)?)?;
    eprintln!(
        "counterexample for {}; witness written to {}",
        report.check_id,
        path.display()
    );
    Ok(false)
}

fn comm_series(s: &CommSeries, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => to_json(&s.table()),
        Format::Csv => to_csv(&["n", "monomial", "coefficient"], s.table()),
        Format::NcsText => Err(CliError::Usage("ncs-text applies to noncommutative series".into())),
    }
}

fn nc_series(s: &NCSeries, format: Format) -> Result<Vec<u8>, CliError> {
    let rows = || s.terms().map(|(w, c)| (s.spell(w), c.to_string())).collect::<Vec<_>>();
    match format {
        Format::NcsText => Ok(s.to_ncs_text().into_bytes()),
        Format::Json => {
            let terms: Vec<_> = rows()
                .into_iter()
                .map(|(w, c)| json!({ "word": w, "coefficient": c }))
                .collect();
            to_json(&json!({ "alphabet": s.alphabet(), "max_degree": s.max_degree(), "terms": terms }))
        }
        Format::Csv => to_csv(&["word", "coefficient"], rows()),
    }
}

fn series(args: &SeriesArgs, cache: &Cache) -> Result<(), CliError> {
    cap("max-degree", args.max_degree)?;
    cap("n-max", args.n_max)?;
    let variant = match args.variant {
        VariantArg::GeneralW => Variant::GeneralW,
        VariantArg::SillyS => Variant::SillyS,
        VariantArg::Full => Variant::Full,
    };
    let refinement = match args.refinement {
        RefinementArg::Pqr => Refinement::Pqr,
        RefinementArg::SillyS => Refinement::SillyS,
        RefinementArg::SillyHatS => Refinement::SillyHatS,
        RefinementArg::AscentBottom => Refinement::AscentBottom,
    };
    let noncommutative = matches!(args.formula, Formula::NcMain | Formula::NcAscbottom | Formula::Brute);
    let format = args
        .format
        .unwrap_or(if noncommutative { Format::NcsText } else { Format::Csv });
    let key = json!({
        "command": "series",
        "formula": format!("{:?}", args.formula),
        "variant": format!("{:?}", args.variant),
        "max_degree": args.max_degree,
        "n_max": args.n_max,
        "family": format!("{:?}", args.family),
        "refinement": format!("{:?}", args.refinement),
        "substitute": args.substitute,
        "format": format!("{format:?}"),
    });
    let bytes = cache.get_or_compute(key, || {
        let d = args.max_degree;
        let n = args.n_max;
        match args.formula {
            Formula::Fishburn => {
                if format == Format::Json {
                    let values: Vec<String> = genfunc::eval_fishburn(n).iter().map(|v| v.to_string()).collect();
                    return to_json(&values);
                }
                let line: Vec<String> = genfunc::eval_fishburn(n).iter().map(|v| v.to_string()).collect();
                Ok(format!("{}\n", line.join(",")).into_bytes())
            }
            Formula::MainXyz => comm_series(&genfunc::eval_theorem_main_xyz(n)?, format),
            Formula::MainSxy => comm_series(&genfunc::eval_theorem_main_sxy(n)?, format),
            Formula::Conj20 => comm_series(&genfunc::eval_conj20_formula(n)?, format),
            Formula::LeftcrossXyzu => comm_series(&genfunc::eval_leftcrossing(n, LeftCrossingVariant::Xyzu)?, format),
            Formula::LeftcrossSxyu => comm_series(&genfunc::eval_leftcrossing(n, LeftCrossingVariant::Sxyu)?, format),
            Formula::NcMain => nc_series(&ncseries::eval_main(variant, d)?, format),
            Formula::NcAscbottom => nc_series(&ncseries::eval_ascentbottom_nc(d)?, format),
            Formula::Brute => {
                let family = match args.family {
                    FamilyArg::Perms => SeriesFamily::Perms,
                    FamilyArg::NlmMatchings => SeriesFamily::NlmMatchings,
                };
                let s = ncseries::brute_series(family, d, refinement)?;
                let s = match (args.substitute, refinement) {
                    (false, _) | (true, Refinement::AscentBottom) => s,
                    (true, Refinement::Pqr) => substitute_xyz(&s, Variant::GeneralW.alphabet())?,
                    (true, _) => substitute_xyz(&s, Variant::SillyS.alphabet())?,
                };
                nc_series(&s, format)
            }
        }
    })?;
    emit(args.out.as_ref(), &bytes)
}

fn apply<A: DeserializeOwned, B: Serialize>(
    input: &str,
    f: impl Fn(&A) -> Result<B, Error>,
) -> Result<Vec<u8>, CliError> {
    let a: A = serde_json::from_str(input)?;
    to_json(&f(&a)?)
}

fn bijection(args: &BijectionArgs) -> Result<(), CliError> {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input)?;
    use bijections as b;
    let out = match args.name {
        MapName::Phi => apply::<Filling, _>(&input, b::phi)?,
        MapName::PhiInv => apply::<BarredPermutation, _>(&input, b::phi_inv)?,
        MapName::PhiSilly => apply::<Filling, _>(&input, b::phi_silly)?,
        MapName::PhiSillyInv => apply::<HattedPermutation, _>(&input, b::phi_silly_inv)?,
        MapName::Psi => apply::<Matching, _>(&input, b::psi)?,
        MapName::PsiInv => apply::<Filling, _>(&input, b::psi_inv)?,
        MapName::FMarked => apply::<Filling, _>(&input, b::f_marked)?,
        MapName::FMarkedInv => apply::<MarkedMatching, _>(&input, b::f_marked_inv)?,
        MapName::Steepen => apply::<Filling, _>(&input, b::steepen)?,
        MapName::Flatten => apply::<Filling, _>(&input, b::flatten)?,
        MapName::G => apply::<Filling, _>(&input, b::g)?,
        MapName::GInv => apply::<Filling, _>(&input, b::g_inv)?,
        MapName::Iota => apply::<Filling, _>(&input, b::iota)?,
        MapName::Leftcross => apply::<Matching, _>(&input, b::leftcross_to_perm)?,
    };
    emit(None, &out)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cache = Cache::new(cli.cache_dir);
    match &cli.command {
        Command::Enumerate(a) => enumerate(a, &cache).map(|_| true),
        Command::Verify(a) => verify(a, &cache),
        Command::Series(a) => series(a, &cache).map(|_| true),
        Command::Bijection(a) => bijection(a).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("equistat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
