use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use twistdem::json::{
    character_record, decomposition_json, partition_tuple_json, relation_json, report_json, RootRecord,
};
use twistdem::suite::{default_threads, run_cases, Case, Suite};
use twistdem_core::demazure::{demazure_character, demazure_character_untwisted};
use twistdem_core::finite::{
    branch_parent_to_g, decompose, dominant_multiplicities, irreducible_character, weyl_dimension,
    Decomposition,
};
use twistdem_core::presentations::{build_xi, simplified_relations, theorem_relations};
use twistdem_core::root_data::UntwistedData;
use twistdem_core::{
    AffineTypeDescriptor, FiniteType, GradedCharacter, HalfInt, RootSystem, RootSystemData, TwistedFamily, Weight,
};

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => {
        writeln!(std::io::stdout().lock(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "twistdem", version, about = "Demazure modules of twisted affine Kac-Moody algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Text,
    Json,
}

#[derive(Args)]
struct TypeArgs {
    /// a2n_2, a2n-1_2, dn+1_2, e6_2 or d4_3.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    n: usize,
    /// Allow ranks below the family's usual range.
    #[arg(long)]
    nonstandard: bool,
}

impl TypeArgs {
    fn descriptor(&self) -> Result<AffineTypeDescriptor> {
        let family: TwistedFamily = self.family.parse().map_err(|e| anyhow!("{e}"))?;
        let ty = if self.nonstandard {
            AffineTypeDescriptor::new_nonstandard(family, self.n)
        } else {
            AffineTypeDescriptor::new(family, self.n)
        };
        ty.map_err(|e| anyhow!("{e}"))
    }

    fn root_data(&self) -> Result<RootSystemData> {
        RootSystemData::new(self.descriptor()?).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, labels and positive real roots up to a delta bound.
    Rootsys {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "1")]
        grade_bound: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Graded character of D(level, lambda).
    CharDemazure {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        level: i64,
        /// Comma-separated fundamental-weight coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Use the untwisted parent; the weight is then a parent weight.
        #[arg(long)]
        untwisted: bool,
        /// Forget the grading.
        #[arg(long)]
        collapse: bool,
        /// Decompose into irreducibles instead of listing terms.
        #[arg(long)]
        decompose: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dimension and dominant weight multiplicities of a finite irreducible.
    CharIrr {
        /// A finite type such as A4, B3, C2, F4, G2.
        #[arg(long)]
        finite_type: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Restriction of a parent irreducible to the fixed-point subalgebra.
    Branch {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        parent_weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The partition tuple xi(level, lambda).
    Xi {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Relations of the simplified presentation of D(level, lambda).
    Relations {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        level: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// The per-root relation lists before any rectangular reduction.
        #[arg(long)]
        per_root: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification cases; exits nonzero if any case fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Qsystem,
    Ses,
    Tensor,
    Dims,
    Fusion,
    Branching,
    Matrices,
    Indexsets,
    Presentation,
    Engine,
    /// Optional stability probes.
    Probe,
    All,
}

impl Kind {
    fn key(self) -> &'static str {
        match self {
            Kind::Qsystem => "qsystem",
            Kind::Ses => "ses",
            Kind::Tensor => "tensor",
            Kind::Dims => "dims",
            Kind::Fusion => "fusion",
            Kind::Branching => "branching",
            Kind::Matrices => "matrices",
            Kind::Indexsets => "indexsets",
            Kind::Presentation => "presentation",
            Kind::Engine => "engine",
            Kind::Probe => "probe",
            Kind::All => "all",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// A suite file; the built-in suite otherwise.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    threads: Option<usize>,
    /// Overrides for matrix cases.
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long)]
    max_size: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides for index-set cases.
    #[arg(long)]
    rmax: Option<u32>,
    #[arg(long)]
    smax: Option<u32>,
    #[arg(long)]
    kmax: Option<usize>,
}

fn parse_weight(s: &str) -> Result<Weight> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    if body.trim().is_empty() {
        return Ok(Weight::new(Vec::new()));
    }
    let coords = body
        .split(',')
        .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad coordinate {c:?} in {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Weight::new(coords))
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    outln!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn print_character(ch: &GradedCharacter, format: Format) -> Result<()> {
    if format == Format::Json {
        return print_json(&serde_json::to_value(character_record(ch))?);
    }
    outln!("level {}, {} terms, dimension {}", ch.level(), ch.len(), ch.dimension());
    outln!("{:>6}  {:<20} {}", "grade", "weight", "coeff");
    for (w, g, c) in ch.terms() {
        outln!("{:>6}  {:<20} {}", g.to_string(), w.to_string(), c);
    }
    Ok(())
}

fn print_decomposition(d: &Decomposition, format: Format) -> Result<()> {
    if format == Format::Json {
        return print_json(&decomposition_json(d));
    }
    for (w, m) in d.iter() {
        outln!("{m} x V({w})");
    }
    Ok(())
}

fn rootsys(ty: &TypeArgs, grade_bound: &str, format: Format) -> Result<()> {
    let rsd = ty.root_data()?;
    let bound: HalfInt = grade_bound.parse().map_err(|e| anyhow!("{e}"))?;
    let desc = rsd.descriptor();
    let (alpha0, alpha0_delta) = rsd.alpha0();
    let roots = rsd.positive_real_roots(bound);
    if format == Format::Json {
        let records: Vec<RootRecord> = roots.iter().map(RootRecord::from).collect();
        return print_json(&json!({
            "type": desc.label(),
            "g": desc.finite_type().to_string(),
            "parent": desc.parent_type().to_string(),
            "hyperspecial": desc.is_hyperspecial(),
            "affine_cartan": rsd.affine_cartan(),
            "labels": rsd.labels(),
            "dual_labels": rsd.dual_labels(),
            "theta": rsd.theta().coords,
            "alpha0": {"finite": alpha0.coords(), "delta": alpha0_delta.to_string()},
            "grade_bound": bound.to_string(),
            "roots": records,
        }));
    }
    outln!("{}: g = {}, parent {}", desc.label(), desc.finite_type(), desc.parent_type());
    outln!("affine Cartan matrix (node 0 first):");
    for row in rsd.affine_cartan() {
        outln!("  {row:?}");
    }
    outln!("labels {:?}, dual labels {:?}", rsd.labels(), rsd.dual_labels());
    outln!("theta {:?}, alpha0 = {alpha0_delta}d - ({alpha0})", rsd.theta().coords);
    outln!("{} positive real roots with delta <= {bound}:", roots.len());
    for r in &roots {
        let sign = if r.sign() > 0 { "+" } else { "-" };
        let len = if r.long { "long" } else { "short" };
        let half = if r.half { " (half)" } else { "" };
        outln!("  {:?} + {}d  {sign} {len} d={}{half}", r.classical, r.delta, r.d);
    }
    Ok(())
}

fn char_demazure(
    ty: &TypeArgs,
    level: i64,
    weight: &str,
    untwisted: bool,
    collapse: bool,
    decompose_into_irreducibles: bool,
    format: Format,
) -> Result<()> {
    let lambda = parse_weight(weight)?;
    let desc = ty.descriptor()?;
    let (ch, finite) = if untwisted {
        let parent = UntwistedData::parent_of(&desc).map_err(|e| anyhow!("{e}"))?;
        let ch = demazure_character_untwisted(&parent, level, &lambda).map_err(|e| anyhow!("{e}"))?;
        (ch, parent.finite().clone())
    } else {
        let rsd = RootSystemData::new(desc).map_err(|e| anyhow!("{e}"))?;
        let ch = demazure_character(&rsd, level, &lambda).map_err(|e| anyhow!("{e}"))?;
        (ch, rsd.finite().clone())
    };
    if decompose_into_irreducibles {
        let d = decompose(&finite, &ch.classical()).map_err(|e| anyhow!("{e}"))?;
        if format != Format::Json {
            outln!("dimension {}", ch.dimension());
        }
        return print_decomposition(&d, format);
    }
    print_character(&if collapse { ch.forget_grade() } else { ch }, format)
}

fn char_irr(finite_type: &str, weight: &str, format: Format) -> Result<()> {
    let ty: FiniteType = finite_type.parse().map_err(|e| anyhow!("{e}"))?;
    let rs = RootSystem::new(ty).map_err(|e| anyhow!("{e}"))?;
    let lambda = parse_weight(weight)?;
    if format == Format::Json {
        let ch = irreducible_character(&rs, &lambda).map_err(|e| anyhow!("{e}"))?;
        return print_character(&ch, format);
    }
    let dim = weyl_dimension(&rs, &lambda).map_err(|e| anyhow!("{e}"))?;
    let mults = dominant_multiplicities(&rs, &lambda).map_err(|e| anyhow!("{e}"))?;
    outln!("V({lambda}) of {ty}: dimension {dim}");
    outln!("dominant weight multiplicities:");
    for (w, c) in &mults {
        outln!("  {w}: {c}");
    }
    Ok(())
}

fn branch(ty: &TypeArgs, parent_weight: &str, format: Format) -> Result<()> {
    let rsd = ty.root_data()?;
    let parent = UntwistedData::parent_of(&rsd.descriptor()).map_err(|e| anyhow!("{e}"))?;
    let lambda = parse_weight(parent_weight)?;
    let d = branch_parent_to_g(rsd.finite(), parent.finite(), rsd.folding(), &lambda).map_err(|e| anyhow!("{e}"))?;
    print_decomposition(&d, format)
}

fn xi(ty: &TypeArgs, level: i64, weight: &str, format: Format) -> Result<()> {
    let rsd = ty.root_data()?;
    let xi = build_xi(&rsd, level, &parse_weight(weight)?).map_err(|e| anyhow!("{e}"))?;
    if format == Format::Json {
        return print_json(&partition_tuple_json(&xi));
    }
    for e in &xi.entries {
        outln!("{:?}: {} (s = {}, m = {})", e.root, e.partition, e.s, e.m);
    }
    Ok(())
}

fn relations(ty: &TypeArgs, level: i64, weight: &str, per_root: bool, format: Format) -> Result<()> {
    let rsd = ty.root_data()?;
    let xi = build_xi(&rsd, level, &parse_weight(weight)?).map_err(|e| anyhow!("{e}"))?;
    let rels = if per_root { theorem_relations(&rsd, &xi) } else { simplified_relations(&rsd, &xi) }
        .map_err(|e| anyhow!("{e}"))?;
    if format == Format::Json {
        return print_json(&serde_json::Value::Array(rels.iter().map(relation_json).collect()));
    }
    for r in &rels {
        outln!("{r}");
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let suite = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Suite::parse(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => Suite::default_suite(),
    };
    let mut cases = suite.select(args.kind.key());
    for c in &mut cases {
        match c {
            Case::Matrices { cases, max_size, seed, .. } => {
                *cases = args.cases.unwrap_or(*cases);
                *max_size = args.max_size.unwrap_or(*max_size);
                *seed = args.seed.unwrap_or(*seed);
            }
            Case::Indexsets { rmax, smax, kmax } => {
                *rmax = args.rmax.unwrap_or(*rmax);
                *smax = args.smax.unwrap_or(*smax);
                *kmax = args.kmax.unwrap_or(*kmax);
            }
            _ => {}
        }
    }
    if cases.is_empty() {
        bail!("no {} cases in the suite", args.kind.key());
    }
    let reports = run_cases(&cases, args.threads.unwrap_or_else(default_threads));
    let failures = reports.iter().filter(|r| r.failed()).count();
    if args.format == Format::Json {
        print_json(&serde_json::Value::Array(reports.iter().map(report_json).collect()))?;
    } else {
        for r in &reports {
            let ms = r.timing.map_or(0.0, |t| t.as_secs_f64() * 1e3);
            outln!("{r} [{ms:.1} ms]");
            if r.failed() {
                for d in &r.details {
                    outln!("    {d}");
                }
            }
        }
        outln!("{} reports, {} failed", reports.len(), failures);
    }
    Ok(failures == 0)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Rootsys { ty, grade_bound, format } => rootsys(&ty, &grade_bound, format)?,
        Command::CharDemazure { ty, level, weight, untwisted, collapse, decompose, format } => {
            char_demazure(&ty, level, &weight, untwisted, collapse, decompose, format)?
        }
        Command::CharIrr { finite_type, weight, format } => char_irr(&finite_type, &weight, format)?,
        Command::Branch { ty, parent_weight, format } => branch(&ty, &parent_weight, format)?,
        Command::Xi { ty, level, weight, format } => xi(&ty, level, &weight, format)?,
        Command::Relations { ty, level, weight, per_root, format } => {
            relations(&ty, level, &weight, per_root, format)?
        }
        Command::Verify(args) => return verify(&args),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
