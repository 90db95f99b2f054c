//! Command-line front end for `shy-core`.

pub mod schema;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use shy_core::constructions::{interval, product_image, rooted_tree, simple_closed_curve, three_branch_tree, wedge_image};
use shy_core::maps::NotShy;
use shy_core::verification::corpus::{corpus_up_to, generated_trees, graphs_up_to};
use shy_core::verification::{
    enumerate_maps, EnumerationSpec, MapFilter, MapRecord, Suite, VerificationReport, Verifier, DEFAULT_ENUMERATION_BOUND,
};
use shy_core::{DigitalImage, MapClassification, Point, PointSet};

use crate::schema::{map_from_doc, parse_image, parse_map_doc, serialize_image};

#[derive(Debug, Parser)]
#[command(name = "shy", version, about = "Continuity and shyness of maps between finite digital images")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Cap on |codomain|^|domain| candidate maps per enumeration.
    #[arg(long, global = true, value_parser = positive)]
    pub bound: Option<u128>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one map.
    Check(CheckArgs),
    /// List the connected components of an image.
    Components {
        image: PathBuf,
    },
    /// Normal product of two images.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Wedge of two images meeting at one point.
    Wedge {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Shared point, e.g. `0` or `1,-2`.
        #[arg(long, allow_hyphen_values = true)]
        junction: String,
    },
    /// List the maps between two images that pass a filter.
    Enumerate {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Stop after this many maps; lifts the bound.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build a standard image.
    Construct {
        #[command(subcommand)]
        shape: Shape,
    },
    /// Run a theorem audit, or `all` of them at default settings.
    Verify(Box<VerifyArgs>),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Defaults to the map file's `domain` entry.
    #[arg(long)]
    pub domain: Option<PathBuf>,
    /// Defaults to the map file's `codomain` entry.
    #[arg(long)]
    pub codomain: Option<PathBuf>,
    #[arg(long)]
    pub map: PathBuf,
    /// Exit with status 1 unless the map has this property.
    #[arg(long, value_enum)]
    pub expect: Option<Property>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Continuous,
    Surjective,
    Injective,
    Shy,
    Isomorphism,
}

impl Property {
    fn holds(self, c: &MapClassification) -> bool {
        match self {
            Property::Continuous => c.continuous,
            Property::Surjective => c.surjective,
            Property::Injective => c.injective,
            Property::Shy => c.shy,
            Property::Isomorphism => c.isomorphism,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Continuous,
    ContinuousSurjections,
    Shy,
}

impl From<FilterArg> for MapFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => MapFilter::All,
            FilterArg::Continuous => MapFilter::Continuous,
            FilterArg::ContinuousSurjections => MapFilter::ContinuousSurjections,
            FilterArg::Shy => MapFilter::Shy,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Shape {
    /// `[from, to]` under c_1.
    Interval {
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
    /// Cycle on `size` labelled points.
    Cycle {
        #[arg(long)]
        size: usize,
    },
    /// The eleven-vertex tree with three branches at its root.
    Tree,
}

#[derive(Debug, Default, Args)]
pub struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(value_parser = suite_name)]
    pub suite: String,

    /// monotone: domain `[0, xlen]`.
    #[arg(long)]
    pub xlen: Option<i64>,
    /// monotone: codomain `[0, ylen]`.
    #[arg(long)]
    pub ylen: Option<i64>,

    /// closed-curve: cycle size; repeatable.
    #[arg(long)]
    pub size: Vec<usize>,
    /// closed-curve: largest codomain `[0, kmax]`.
    #[arg(long)]
    pub kmax: Option<i64>,

    /// cu-product: left factor c_m.
    #[arg(long)]
    pub m: Option<usize>,
    /// cu-product: right factor c_n.
    #[arg(long)]
    pub n: Option<usize>,
    /// cu-product: half-width of the coordinate box.
    #[arg(long)]
    pub radius: Option<i64>,

    /// wedge: longest interval on either side of the junction.
    #[arg(long)]
    pub max_len: Option<i64>,

    /// cut-vertex: explicit-adjacency tree file.
    #[arg(long, requires = "root")]
    pub tree: Option<PathBuf>,
    /// cut-vertex: root of `--tree`.
    #[arg(long, allow_hyphen_values = true)]
    pub root: Option<String>,
    /// cut-vertex: codomains `[0, j]` for `j <= k`.
    #[arg(long)]
    pub k: Option<i64>,
    /// cut-vertex: number of generated trees.
    #[arg(long)]
    pub trees: Option<usize>,
    /// cut-vertex: vertex cap for generated trees.
    #[arg(long)]
    pub max_vertices: Option<usize>,

    /// Corpus suites: images with at most this many points. The product and
    /// composition suites range over every graph of that size.
    #[arg(long)]
    pub max_points: Option<usize>,
    /// equivalences: a single domain image.
    #[arg(long, requires = "codomain")]
    pub domain: Option<PathBuf>,
    /// equivalences: a single codomain image.
    #[arg(long, requires = "domain")]
    pub codomain: Option<PathBuf>,
}

fn positive(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || Suite::from_name(s).is_some() {
        Ok(s.to_string())
    } else {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        Err(format!("unknown suite; expected `all` or one of: {}", names.join(", ")))
    }
}

/// Parses `3`, `1,-2`, `[1,-2]` or `(1,-2)`.
pub fn parse_point(s: &str) -> Result<Point> {
    let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>().with_context(|| format!("bad coordinate {c:?} in point {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::new(coords))
}

/// Rendered report and whether the command counts as a success.
#[derive(Debug)]
pub struct Outcome {
    pub report: String,
    pub success: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, success: true }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_image(path: &Path) -> Result<Arc<DigitalImage>> {
    let img = parse_image(&read(path)?).with_context(|| format!("invalid image {}", path.display()))?;
    Ok(Arc::new(img))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn set_text(set: &PointSet) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn points_text(points: &[Point]) -> String {
    let items: Vec<String> = points.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn record_text(r: &MapRecord) -> String {
    r.pairs
        .iter()
        .map(|(x, y)| format!("{x}->{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let verifier = Verifier::new(cli.bound.unwrap_or(DEFAULT_ENUMERATION_BOUND));
    match &cli.command {
        Command::Check(args) => check(args, cli.format),
        Command::Components { image } => components(&*load_image(image)?, cli.format),
        Command::Product { left, right } => {
            let img = product_image(&*load_image(left)?, &*load_image(right)?);
            Ok(Outcome::ok(image_report(&img, cli.format)))
        }
        Command::Wedge { left, right, junction } => {
            let w = wedge_image(&*load_image(left)?, &*load_image(right)?, parse_point(junction)?)?;
            Ok(Outcome::ok(image_report(&w.whole, cli.format)))
        }
        Command::Enumerate {
            domain,
            codomain,
            filter,
            limit,
        } => enumerate(&verifier, domain, codomain, *filter, *limit, cli.format),
        Command::Construct { shape } => {
            let img = match shape {
                Shape::Interval { from, to } => interval(*from, *to)?,
                Shape::Cycle { size } => simple_closed_curve(*size)?,
                Shape::Tree => (*three_branch_tree().image).clone(),
            };
            Ok(Outcome::ok(image_report(&img, cli.format)))
        }
        Command::Verify(args) => verify(&verifier, args, cli.format),
    }
}

fn image_report(img: &DigitalImage, format: Format) -> String {
    match format {
        Format::Json => serialize_image(img) + "\n",
        Format::Text => {
            format!(
                "{} points, {} edges, dimension {}\n{}\n",
                img.len(),
                img.edge_count(),
                img.dim(),
                points_text(img.points())
            )
        }
    }
}

#[derive(Serialize)]
struct ShyFailure {
    reason: &'static str,
    witness: Vec<Point>,
}

impl From<NotShy> for ShyFailure {
    fn from(e: NotShy) -> Self {
        ShyFailure {
            reason: e.reason(),
            witness: e.witness(),
        }
    }
}

#[derive(Serialize)]
struct Expectation {
    property: Property,
    holds: bool,
}

#[derive(Serialize)]
struct CheckReport {
    classification: MapClassification,
    #[serde(skip_serializing_if = "Option::is_none")]
    not_shy: Option<ShyFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expect: Option<Expectation>,
}

fn image_ref(flag: &Option<PathBuf>, doc_ref: &Option<String>, map_path: &Path, name: &str) -> Result<PathBuf> {
    match (flag, doc_ref) {
        (Some(p), _) => Ok(p.clone()),
        (None, Some(r)) => Ok(map_path.parent().unwrap_or(Path::new(".")).join(r)),
        (None, None) => bail!("no {name} image: pass --{name} or name it in the map file"),
    }
}

fn check(args: &CheckArgs, format: Format) -> Result<Outcome> {
    let doc = parse_map_doc(&read(&args.map)?).with_context(|| format!("invalid map {}", args.map.display()))?;
    let domain = load_image(&image_ref(&args.domain, &doc.domain, &args.map, "domain")?)?;
    let codomain = load_image(&image_ref(&args.codomain, &doc.codomain, &args.map, "codomain")?)?;
    let f = map_from_doc(&doc, domain, codomain).with_context(|| format!("invalid map {}", args.map.display()))?;
    let classification = f.classify();
    let report = CheckReport {
        classification,
        not_shy: f.shyness().err().map(ShyFailure::from),
        expect: args.expect.map(|property| Expectation {
            property,
            holds: property.holds(&classification),
        }),
    };
    let success = report.expect.as_ref().is_none_or(|e| e.holds);
    let text = match format {
        Format::Json => json(&report),
        Format::Text => {
            let c = &report.classification;
            let mut s = String::new();
            for (name, value) in [
                ("continuous", c.continuous),
                ("surjective", c.surjective),
                ("injective", c.injective),
                ("shy", c.shy),
                ("isomorphism", c.isomorphism),
            ] {
                writeln!(s, "{name}: {value}").unwrap();
            }
            if let Some(n) = &report.not_shy {
                writeln!(s, "not shy: {} {}", n.reason, points_text(&n.witness)).unwrap();
            }
            if let Some(e) = &report.expect {
                let verdict = if e.holds { "holds" } else { "fails" };
                writeln!(s, "expected {}: {verdict}", json(&e.property).trim().trim_matches('"')).unwrap();
            }
            s
        }
    };
    Ok(Outcome { report: text, success })
}

#[derive(Serialize)]
struct ComponentsReport {
    connected: bool,
    components: Vec<PointSet>,
}

fn components(img: &DigitalImage, format: Format) -> Result<Outcome> {
    let report = ComponentsReport {
        connected: img.is_connected(),
        components: img.connected_components(),
    };
    Ok(Outcome::ok(match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut s = format!("{} component(s)\n", report.components.len());
            for c in &report.components {
                writeln!(s, "{}", set_text(c)).unwrap();
            }
            s
        }
    }))
}

#[derive(Serialize)]
struct EnumerationReport {
    count: usize,
    maps: Vec<MapRecord>,
}

fn enumerate(
    verifier: &Verifier,
    domain: &Path,
    codomain: &Path,
    filter: FilterArg,
    limit: Option<usize>,
    format: Format,
) -> Result<Outcome> {
    let mut spec = EnumerationSpec::new(load_image(domain)?, load_image(codomain)?, filter.into()).with_bound(verifier.bound);
    if let Some(l) = limit {
        spec = spec.with_limit(l);
    }
    let maps: Vec<MapRecord> = enumerate_maps(&spec)
        .context("pass --limit or raise --bound")?
        .map(|f| MapRecord::from(&f))
        .collect();
    let report = EnumerationReport { count: maps.len(), maps };
    Ok(Outcome::ok(match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut s = format!("{} map(s)\n", report.count);
            for m in &report.maps {
                writeln!(s, "{}", record_text(m)).unwrap();
            }
            s
        }
    }))
}

fn verify(verifier: &Verifier, args: &VerifyArgs, format: Format) -> Result<Outcome> {
    let reports = if args.suite == "all" {
        if let Some(flag) = set_flags(args).first() {
            bail!("--{flag} does not apply to `verify all`");
        }
        verifier.run_all()?
    } else {
        let suite = Suite::from_name(&args.suite).expect("validated by clap");
        vec![verify_suite(verifier, suite, args)?]
    };
    let success = reports.iter().all(|r| r.passed);
    let text = match format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        Format::Text => reports.iter().map(report_text).collect(),
    };
    Ok(Outcome { report: text, success })
}

fn report_text(r: &VerificationReport) -> String {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let mut s = format!(
        "{}: {verdict} ({} instances, {:.3}s)\n",
        r.theorem_id,
        r.instances_checked,
        r.wall_time.as_secs_f64()
    );
    for c in &r.counterexamples {
        writeln!(s, "  counterexample: {}", c.description).unwrap();
        for m in &c.maps {
            writeln!(s, "    map: {}", record_text(m)).unwrap();
        }
        if !c.witness.is_empty() {
            writeln!(s, "    witness: {}", points_text(&c.witness)).unwrap();
        }
    }
    s
}

fn set_flags(a: &VerifyArgs) -> Vec<&'static str> {
    let flags = [
        ("xlen", a.xlen.is_some()),
        ("ylen", a.ylen.is_some()),
        ("size", !a.size.is_empty()),
        ("kmax", a.kmax.is_some()),
        ("m", a.m.is_some()),
        ("n", a.n.is_some()),
        ("radius", a.radius.is_some()),
        ("max-len", a.max_len.is_some()),
        ("tree", a.tree.is_some()),
        ("root", a.root.is_some()),
        ("k", a.k.is_some()),
        ("trees", a.trees.is_some()),
        ("max-vertices", a.max_vertices.is_some()),
        ("max-points", a.max_points.is_some()),
        ("domain", a.domain.is_some()),
        ("codomain", a.codomain.is_some()),
    ];
    flags.into_iter().filter(|(_, set)| *set).map(|(name, _)| name).collect()
}

fn allowed_flags(suite: Suite) -> &'static [&'static str] {
    match suite {
        Suite::Monotone => &["xlen", "ylen"],
        Suite::ClosedCurve => &["size", "kmax"],
        Suite::CuProduct => &["m", "n", "radius"],
        Suite::Wedge => &["max-len"],
        Suite::CutVertex => &["tree", "root", "k", "trees", "max-vertices"],
        Suite::Equivalences => &["max-points", "domain", "codomain"],
        Suite::ContinuityOracle
        | Suite::ShynessOracle
        | Suite::Product
        | Suite::ProductMaps
        | Suite::Composition
        | Suite::Isomorphism
        | Suite::ConstantMaps => &["max-points"],
    }
}

fn verify_suite(v: &Verifier, suite: Suite, a: &VerifyArgs) -> Result<VerificationReport> {
    let flags = set_flags(a);
    if let Some(bad) = flags.iter().find(|f| !allowed_flags(suite).contains(f)) {
        bail!("--{bad} does not apply to suite {}", suite.name());
    }
    if flags.is_empty() {
        return Ok(v.run_suite(suite)?);
    }
    let started = Instant::now();
    let corpus = |default: usize| corpus_up_to(a.max_points.unwrap_or(default));
    let graphs = |default: usize| graphs_up_to(a.max_points.unwrap_or(default));
    let mut report = match suite {
        Suite::Monotone => match (a.xlen, a.ylen) {
            (Some(x), Some(y)) => v.monotone_characterization(x, y)?,
            _ => bail!("--xlen and --ylen go together"),
        },
        Suite::ClosedCurve => {
            let sizes = if a.size.is_empty() { vec![4, 6, 8] } else { a.size.clone() };
            let kmax = a.kmax.unwrap_or(3);
            let parts = sizes
                .into_iter()
                .map(|m| v.scc_image_bound(m, kmax))
                .collect::<Result<Vec<_>, _>>()?;
            VerificationReport::merge(suite.name(), parts)
        }
        Suite::CuProduct => v.cu_product_identity(a.m.unwrap_or(1), a.n.unwrap_or(1), a.radius.unwrap_or(1))?,
        Suite::Wedge => v.wedge_theorem_intervals(a.max_len.unwrap_or(2))?,
        Suite::CutVertex => {
            let k = a.k.unwrap_or(3);
            let trees = match (&a.tree, &a.root) {
                (Some(path), Some(root)) => {
                    let img = load_image(path)?;
                    let edges: Vec<(Point, Point)> = match img.adjacency() {
                        shy_core::Adjacency::Explicit(e) => e.edges().map(|(x, y)| (x.clone(), y.clone())).collect(),
                        _ => bail!("--tree needs an explicit-adjacency image"),
                    };
                    let tree = rooted_tree(&edges, parse_point(root)?)?;
                    if tree.image.len() != img.len() {
                        bail!("--tree has isolated points");
                    }
                    vec![tree]
                }
                _ => {
                    let mut trees = vec![three_branch_tree()];
                    trees.extend(generated_trees(a.trees.unwrap_or(20), a.max_vertices.unwrap_or(9)));
                    trees
                }
            };
            v.cut_vertex_bound_over(&trees, k)?
        }
        Suite::Equivalences => match (&a.domain, &a.codomain) {
            (Some(x), Some(y)) => v.equivalences(&load_image(x)?, &load_image(y)?)?,
            _ => v.equivalences_over(&corpus(6))?,
        },
        Suite::ContinuityOracle => v.continuity_oracle(&corpus(6))?,
        Suite::ShynessOracle => v.shyness_oracle(&corpus(6))?,
        Suite::Product => v.product_theorem_over(&graphs(3))?,
        Suite::ProductMaps => v.product_map_laws(&graphs(3))?,
        Suite::Composition => v.composition_closure(&graphs(4))?,
        Suite::Isomorphism => v.isomorphism_laws(&corpus(6))?,
        Suite::ConstantMaps => v.constant_maps(&corpus(6))?,
    };
    report.wall_time = started.elapsed();
    Ok(report)
}

/// Writes the report and maps the result to an exit status.
pub fn finish(cli: &Cli, result: Result<Outcome>) -> u8 {
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &outcome.report).map_err(|e| anyhow!("cannot write {}: {e}", path.display())),
        None => {
            print!("{}", outcome.report);
            Ok(())
        }
    };
    match written {
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
        Ok(()) if outcome.success => 0,
        Ok(()) => 1,
    }
}
