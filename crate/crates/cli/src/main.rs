//! Batch front end for the poset-ramsey library. Every command reads JSON
//! files, writes JSON (or a derived table, or DOT) to stdout, and reports
//! failures on stderr as a single JSON line with a stable reason code.
//! Exit codes: 0 success, 1 rejected input, 2 broken internal invariant.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poset_ramsey::ambient::{
    build_ambient, realization_experiment, AmbientPoset, BuildStrategy, RealizationCensus,
    AMBIENT_SIZE_CAP,
};
use poset_ramsey::dot::tree_to_dot;
use poset_ramsey::enumerate::{
    big_ramsey_degree_with, enumerate_types_with, DegreeError, DegreeReport, EnumerateError,
    EnumerateOptions, Enumeration, EnumerationMode, ENUMERATION_SIZE_CAP,
};
use poset_ramsey::files::{parse_ambient_json, parse_poset_json, parse_type_json, PosetFile};
use poset_ramsey::pipeline::{chi, phi, psi_construct, PsiError, PsiOutput};
use poset_ramsey::poset::FinitePoset;
use poset_ramsey::tree::{is_poset_type, leaf_poset, PosetTree, TypeFailure};
use serde_json::json;

#[derive(Parser)]
#[command(name = "poset-ramsey", version, disable_help_subcommand = true)]
#[command(about = "Big Ramsey degrees of finite posets via poset-type enumeration")]
struct Cli {
    /// Worker threads; defaults to RAMSEY_POSET_THREADS, then all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a big Ramsey degree report for a poset
    Degree(DegreeArgs),
    /// List every poset-type of a poset, with certificates
    Enumerate(DegreeArgs),
    /// Check that a type file is a valid poset-type
    Validate(ValidateArgs),
    /// Print the direct and the level-by-level word images of a poset
    Embed(EmbedArgs),
    /// Colour every embedding of a pattern into an ambient poset
    Color(CensusArgs),
    /// Compare realized colours against the enumerated expectation
    Realize(CensusArgs),
    /// Render a type file, or a poset's image tree, as DOT
    ExportDot(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct DegreeArgs {
    /// Poset JSON file: {"n": 2, "lt": [[0, 1]]}
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum, default_value_t = Mode::Diagonal)]
    mode: Mode,
    /// Override the sound search depth (output is flagged when truncated)
    #[arg(long)]
    depth_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Diagonal,
    Verbatim,
}

impl From<Mode> for EnumerationMode {
    fn from(m: Mode) -> EnumerationMode {
        match m {
            Mode::Diagonal => EnumerationMode::Diagonal,
            Mode::Verbatim => EnumerationMode::Verbatim,
        }
    }
}

#[derive(Args)]
struct ValidateArgs {
    /// Type JSON file: {"leaves": ["XL", "RRX"]}
    #[arg(long = "type")]
    type_file: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct CensusArgs {
    /// Pattern poset JSON file
    #[arg(long)]
    poset: String,
    /// Ambient poset JSON file; alternative to growing one here
    #[arg(long, conflicts_with_all = ["ambient_size", "seed", "strategy"])]
    ambient: Option<String>,
    /// Grow an ambient poset of this size instead of reading one
    #[arg(long)]
    ambient_size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Strategy::Exhaustive)]
    strategy: Strategy,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Exhaustive,
    Random,
}

impl From<Strategy> for BuildStrategy {
    fn from(s: Strategy) -> BuildStrategy {
        match s {
            Strategy::Exhaustive => BuildStrategy::Exhaustive,
            Strategy::Random => BuildStrategy::Random,
        }
    }
}

#[derive(Args)]
struct ExportArgs {
    /// Type JSON file to render
    #[arg(long = "type", conflicts_with = "poset")]
    type_file: Option<String>,
    /// Poset JSON file: renders the tree of its level-by-level image
    #[arg(long)]
    poset: Option<String>,
}

/// A diagnostic bound for stderr: a stable reason code, a human detail
/// line, and the exit status it forces.
struct Failure {
    exit: u8,
    reason: &'static str,
    detail: String,
}

impl Failure {
    fn rejected(reason: &'static str, detail: impl Into<String>) -> Failure {
        Failure { exit: 1, reason, detail: detail.into() }
    }

    fn internal(detail: impl Into<String>) -> Failure {
        Failure { exit: 2, reason: "internal", detail: detail.into() }
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::rejected("io", format!("cannot read {path}: {e}")))
}

fn load_poset(path: &str) -> Result<FinitePoset, Failure> {
    parse_poset_json(&read_file(path)?)
        .map_err(|e| Failure::rejected("invalid-poset", format!("{path}: {e}")))
}

fn load_tree(path: &str) -> Result<PosetTree, Failure> {
    parse_type_json(&read_file(path)?)
        .map_err(|e| Failure::rejected("invalid-type", format!("{path}: {e}")))
}

fn load_ambient(args: &CensusArgs) -> Result<AmbientPoset, Failure> {
    match (&args.ambient, args.ambient_size) {
        (Some(path), None) => {
            let (poset, _, _) = parse_ambient_json(&read_file(path)?)
                .map_err(|e| Failure::rejected("invalid-poset", format!("{path}: {e}")))?;
            Ok(AmbientPoset::external(poset))
        }
        (None, Some(size)) => build_ambient(size, args.seed, args.strategy.into())
            .map_err(|e| {
                Failure::rejected("size-cap", format!("{e} (cap {AMBIENT_SIZE_CAP})"))
            }),
        (None, None) => Err(Failure::rejected(
            "bad-args",
            "one of --ambient or --ambient-size is required",
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn enumeration_options(args: &DegreeArgs) -> EnumerateOptions {
    EnumerateOptions {
        mode: args.mode.into(),
        size_cap: ENUMERATION_SIZE_CAP,
        depth_cap: args.depth_cap,
    }
}

fn map_enumerate_error(e: EnumerateError) -> Failure {
    match e {
        EnumerateError::EmptyPoset => {
            Failure::rejected("empty-poset", "the empty poset has no types")
        }
        EnumerateError::SizeCap(c) => Failure::rejected("size-cap", c.to_string()),
    }
}

fn event_strings(events: &[poset_ramsey::tree::LevelEvent]) -> Vec<String> {
    events.iter().map(|e| e.to_string()).collect()
}

fn leaf_strings(tree: &PosetTree) -> Vec<String> {
    tree.canonical_leaves().iter().map(|w| w.to_string()).collect()
}

fn cmd_degree(args: &DegreeArgs) -> Result<String, Failure> {
    let q = load_poset(&args.poset)?;
    let report = big_ramsey_degree_with(&q, enumeration_options(args)).map_err(|e| match e {
        DegreeError::Enumerate(e) => map_enumerate_error(e),
        DegreeError::Internal(detail) => Failure::internal(detail),
    })?;
    Ok(match args.format {
        Format::Json => pretty(&report),
        Format::Table => degree_table(&report),
    })
}

fn degree_table(report: &DegreeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "poset            n = {}, strict pairs = {:?}", report.q.n, report.q.lt);
    let _ = writeln!(out, "mode             {}", report.mode);
    let _ = writeln!(out, "types            {}", report.t_count);
    let _ = writeln!(out, "automorphisms    {}", report.aut);
    let _ = writeln!(out, "degree           {}", report.degree);
    let _ = writeln!(out, "depth cap        {}", report.depth_cap);
    let _ = writeln!(out, "complete         {}", report.complete);
    for (i, t) in report.types.iter().enumerate() {
        let leaves: Vec<String> = t.leaves.iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "type {:<4} leaves [{}]", i, leaves.join(", "));
    }
    out
}

fn cmd_enumerate(args: &DegreeArgs) -> Result<String, Failure> {
    let q = load_poset(&args.poset)?;
    let enumeration =
        enumerate_types_with(&q, enumeration_options(args)).map_err(map_enumerate_error)?;
    Ok(match args.format {
        Format::Json => {
            let types: Vec<serde_json::Value> = enumeration
                .types
                .iter()
                .map(|t| {
                    let certificate = is_poset_type(t).expect("enumerated tree validates");
                    json!({
                        "leaves": leaf_strings(t),
                        "certificate": event_strings(certificate.events()),
                    })
                })
                .collect();
            pretty(&json!({
                "poset": PosetFile::from_poset(&q),
                "mode": enumeration.mode,
                "depth_cap": enumeration.depth_cap,
                "complete": enumeration.complete,
                "count": enumeration.types.len(),
                "types": types,
            }))
        }
        Format::Table => enumerate_table(&q, &enumeration),
    })
}

fn enumerate_table(q: &FinitePoset, enumeration: &Enumeration) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} types of the {}-element poset ({}, depth cap {}, complete {})",
        enumeration.types.len(),
        q.n(),
        enumeration.mode,
        enumeration.depth_cap,
        enumeration.complete
    );
    for (i, t) in enumeration.types.iter().enumerate() {
        let certificate = is_poset_type(t).expect("enumerated tree validates");
        let _ = writeln!(
            out,
            "{:>4}  [{}]  {}",
            i,
            leaf_strings(t).join(", "),
            event_strings(certificate.events()).join("; ")
        );
    }
    out
}

fn cmd_validate(args: &ValidateArgs) -> Result<String, Failure> {
    let tree = load_tree(&args.type_file)?;
    let certificate = is_poset_type(&tree).map_err(|e| match &e {
        TypeFailure::NoMatch { level } => {
            Failure::rejected("no-match", format!("no-match at level {level}: {e}"))
        }
        TypeFailure::Ambiguous { level, .. } => {
            Failure::rejected("ambiguous", format!("ambiguous at level {level}: {e}"))
        }
    })?;
    let (poset, _) = leaf_poset(&tree)
        .map_err(|e| Failure::rejected("invalid-type", e.to_string()))?;
    Ok(match args.format {
        Format::Json => pretty(&json!({
            "leaves": leaf_strings(&tree),
            "certificate": event_strings(certificate.events()),
            "diagonal": tree.is_diagonal(),
            "leaf_poset": PosetFile::from_poset(&poset),
        })),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "valid poset-type on [{}]", leaf_strings(&tree).join(", "));
            let _ = writeln!(out, "diagonal   {}", tree.is_diagonal());
            let _ = writeln!(out, "leaf poset n = {}, strict pairs = {:?}", poset.n(), poset.pairs());
            for (i, e) in certificate.events().iter().enumerate() {
                let _ = writeln!(out, "level {:<4} {}", i, e);
            }
            out
        }
    })
}

fn psi_or_failure(q: &FinitePoset) -> Result<PsiOutput, Failure> {
    psi_construct(q).map_err(|e| match e {
        PsiError::EmptyPoset => {
            Failure::rejected("empty-poset", "the empty poset has no image")
        }
        PsiError::Bug(bug) => Failure::internal(bug.to_string()),
    })
}

fn cmd_embed(args: &EmbedArgs) -> Result<String, Failure> {
    let q = load_poset(&args.poset)?;
    let direct = phi(&q);
    let image = psi_or_failure(&q)?;
    let direct_words: Vec<String> = direct.map.iter().map(|w| w.to_string()).collect();
    let image_words: Vec<String> = image.words.map.iter().map(|w| w.to_string()).collect();
    Ok(match args.format {
        Format::Json => pretty(&json!({
            "poset": PosetFile::from_poset(&q),
            "direct_words": direct_words,
            "image_words": image_words,
            "image_leaves": leaf_strings(&image.words.tree),
            "certificate": event_strings(image.certificate.events()),
        })),
        Format::Table => {
            let mut out = String::new();
            let width = direct_words.iter().map(String::len).max().unwrap_or(0).max(6);
            let _ = writeln!(out, "element  direct{}  image", " ".repeat(width - 6));
            for i in 0..q.n() {
                let _ = writeln!(out, "{:>7}  {:<width$}  {}", i, direct_words[i], image_words[i]);
            }
            let _ = writeln!(out, "certificate: {}", event_strings(image.certificate.events()).join("; "));
            out
        }
    })
}

fn ambient_json(ambient: &AmbientPoset) -> serde_json::Value {
    let mut v = json!({
        "n": ambient.poset.n(),
        "lt": ambient.poset.pairs(),
        "richness": ambient.richness,
    });
    if let poset_ramsey::ambient::Provenance::Built { seed, strategy } = &ambient.provenance {
        v["seed"] = json!(seed);
        v["strategy"] = json!(strategy);
    }
    v
}

fn cmd_color(args: &CensusArgs) -> Result<String, Failure> {
    let pattern = load_poset(&args.poset)?;
    let ambient = load_ambient(args)?;
    let image = psi_or_failure(&ambient.poset)?;
    let embeddings = pattern.all_embeddings(&ambient.poset);
    let colours: Result<Vec<_>, Failure> = embeddings
        .iter()
        .map(|f| {
            chi(&pattern, f, &image.words)
                .map(|c| (f.as_slice().to_vec(), c))
                .map_err(|e| Failure::internal(format!("colouring a real embedding failed: {e}")))
        })
        .collect();
    let colours = colours?;
    Ok(match args.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = colours
                .iter()
                .map(|(f, c)| {
                    json!({
                        "embedding": f,
                        "type_leaves": leaf_strings(&c.tree),
                        "assignment": c.assignment,
                    })
                })
                .collect();
            pretty(&json!({
                "pattern": PosetFile::from_poset(&pattern),
                "ambient": ambient_json(&ambient),
                "embedding_count": colours.len(),
                "colours": rows,
            }))
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} embeddings of the pattern into an ambient of size {}",
                colours.len(),
                ambient.poset.n()
            );
            for (f, c) in &colours {
                let _ = writeln!(
                    out,
                    "{:?}  ->  [{}]  assignment {:?}",
                    f,
                    leaf_strings(&c.tree).join(", "),
                    c.assignment
                );
            }
            out
        }
    })
}

fn cmd_realize(args: &CensusArgs) -> Result<String, Failure> {
    let pattern = load_poset(&args.poset)?;
    let ambient = load_ambient(args)?;
    let census = realization_experiment(&pattern, &ambient).map_err(|e| {
        use poset_ramsey::ambient::RealizeError;
        match e {
            RealizeError::Pattern(e) => map_enumerate_error(e),
            RealizeError::Ambient(e) => match e {
                PsiError::EmptyPoset => {
                    Failure::rejected("empty-poset", "the ambient poset is empty")
                }
                PsiError::Bug(bug) => Failure::internal(bug.to_string()),
            },
            RealizeError::Colour(e) => {
                Failure::internal(format!("colouring a real embedding failed: {e}"))
            }
        }
    })?;
    if !census.unsound.is_empty() {
        return Err(Failure::internal(format!(
            "{} realized colour(s) fall outside the enumerated expectation",
            census.unsound.len()
        )));
    }
    Ok(match args.format {
        Format::Json => pretty(&census),
        Format::Table => census_table(&census, &ambient),
    })
}

fn census_table(census: &RealizationCensus, ambient: &AmbientPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "pattern n = {}, ambient n = {} (richness {})",
        census.pattern.n, census.ambient_size, census.ambient_richness
    );
    if let poset_ramsey::ambient::Provenance::Built { seed, strategy } = &ambient.provenance {
        let _ = writeln!(out, "ambient grown with strategy {strategy}, seed {seed}");
    }
    let _ = writeln!(out, "embeddings       {}", census.embedding_count);
    let _ = writeln!(
        out,
        "colours realized {} of {} expected ({:.1}%)",
        census.realized_count(),
        census.expected_count,
        100.0 * census.coverage()
    );
    for c in &census.realized {
        let _ = writeln!(
            out,
            "{:>6}  [{}]  assignment {:?}",
            c.count,
            leaf_strings(&c.colour.tree).join(", "),
            c.colour.assignment
        );
    }
    if !census.unrealized.is_empty() {
        let _ = writeln!(out, "unrealized:");
        for c in &census.unrealized {
            let _ = writeln!(
                out,
                "        [{}]  assignment {:?}",
                leaf_strings(&c.tree).join(", "),
                c.assignment
            );
        }
    }
    out
}

fn cmd_export_dot(args: &ExportArgs) -> Result<String, Failure> {
    let tree = match (&args.type_file, &args.poset) {
        (Some(path), None) => load_tree(path)?,
        (None, Some(path)) => psi_or_failure(&load_poset(path)?)?.words.tree,
        _ => {
            return Err(Failure::rejected(
                "bad-args",
                "exactly one of --type or --poset is required",
            ))
        }
    };
    Ok(tree_to_dot(&tree))
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization");
    s.push('\n');
    s
}

fn configure_threads(flag: Option<usize>) -> Result<(), Failure> {
    let threads = match flag {
        Some(t) => t,
        None => match std::env::var("RAMSEY_POSET_THREADS") {
            Ok(v) => v.parse().map_err(|_| {
                Failure::rejected(
                    "bad-args",
                    format!("RAMSEY_POSET_THREADS must be a number, got {v:?}"),
                )
            })?,
            Err(_) => 0,
        },
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::internal(format!("thread pool: {e}")))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    configure_threads(cli.threads)?;
    match &cli.command {
        Cmd::Degree(args) => cmd_degree(args),
        Cmd::Enumerate(args) => cmd_enumerate(args),
        Cmd::Validate(args) => cmd_validate(args),
        Cmd::Embed(args) => cmd_embed(args),
        Cmd::Color(args) => cmd_color(args),
        Cmd::Realize(args) => cmd_realize(args),
        Cmd::ExportDot(args) => cmd_export_dot(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprintln!("{}", json!({"error": "bad-args", "detail": e.to_string()}));
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help and --version land here; clap prints to stdout
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", json!({"error": f.reason, "detail": f.detail}));
            ExitCode::from(f.exit)
        }
    }
}
