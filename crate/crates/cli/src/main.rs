use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use xdist::coloring::{
    chi_bound_formulas, default_sub_colorings, exact_chromatic, layered_coloring, table1_report, table1_text,
    validate_coloring, LayeredVariant, Table1Options, DEFAULT_COLOR_BUDGET,
};
use xdist::connectivity::{hypercube_characterization, product_connectivity};
use xdist::corpus::{random_pairs, seeded_random_graph, DEFAULT_SEED};
use xdist::families::{complete, cycle, edgeless, hypercube, johnson, kneser_general, path, star};
use xdist::hypercube::{
    antipodal_matching_check, degree_law_check, even_distance_decomposition_with_budget,
    johnson_complement_isomorphism, level_induces_johnson_check, parity_components_with_budget,
    qn_nminus1_isomorphism,
};
use xdist::identities::{
    cartesian_identity, cartesian_second_identity, direct2_identity, direct2_strong_identity, grid_window_check,
    is_triangle_free, lex_identity, strong_identity, GridKind, IdentityReport,
};
use xdist::io::{read_coloring_dimacs, read_coloring_json, read_graph_auto, write_coloring_dimacs, write_dimacs,
    write_graph_json, write_xdg};
use xdist::{exact_distance_graph, product, Graph, ProductKind};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "xdist", version, about = "Exact distance graphs of graph products and hypercubes")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Node budget for searches; exhausting it exits with status 3.
    #[arg(long, global = true, default_value_t = DEFAULT_COLOR_BUDGET)]
    budget_nodes: u64,
    /// Output format; graphs default to xdg, reports to json (table1 to text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Xdg,
    Dimacs,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: path|cycle|complete|edgeless|star|hypercube N, johnson|kneser N K I, random N DENSITY.
    Gen {
        family: Family,
        #[arg(num_args = 1..=3, allow_negative_numbers = false)]
        params: Vec<String>,
    },
    /// Exact distance-p graph of a graph file.
    Xdist {
        input: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// Product of two graph files, optionally followed by its exact distance-p graph.
    Product {
        kind: Kind,
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Check a product identity on random factor pairs, or the grid windows.
    Verify {
        identity: Identity,
        /// Largest factor order.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Window side for grid-window.
        #[arg(long, default_value_t = 12)]
        m: usize,
    },
    /// Predicted connectivity against the component count of the built graph.
    Connectivity {
        kind: ConnKind,
        #[arg(long, required_unless_present = "d")]
        g: Option<PathBuf>,
        #[arg(long, required_unless_present = "d")]
        h: Option<PathBuf>,
        /// Hypercube dimension, for `hypercube`.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        p: usize,
    },
    /// Structural checks on exact distance graphs of hypercubes.
    HypercubeChecks {
        check: Check,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Chromatic numbers, bounds and colorings.
    Chi {
        #[command(subcommand)]
        command: ChiCommand,
    },
    /// Bounds on the chromatic number of Q_n^[p] for 6 <= n <= 10 against the published cells.
    Table1 {
        #[command(flatten)]
        opts: TableArgs,
    },
}

#[derive(Subcommand)]
enum ChiCommand {
    /// Exact chromatic number within the node budget.
    Exact { input: PathBuf },
    /// Formula bounds for Q_n^[p].
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    Table1 {
        #[command(flatten)]
        opts: TableArgs,
    },
    /// Check a coloring file (JSON or DIMACS solution lines) against a graph file.
    Validate { graph: PathBuf, coloring: PathBuf },
    /// Level-by-level coloring of Q_n^[p] for p in {n-2, n-3, n-4}.
    Layered {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        variant: Variant,
    },
}

#[derive(clap::Args)]
struct TableArgs {
    /// Skip the exact solver and the constructions.
    #[arg(long)]
    formula_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Edgeless,
    Star,
    Hypercube,
    Johnson,
    Kneser,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
}

impl From<Kind> for ProductKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cartesian => ProductKind::Cartesian,
            Kind::Strong => ProductKind::Strong,
            Kind::Direct => ProductKind::Direct,
            Kind::Lexicographic => ProductKind::Lexicographic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConnKind {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
    Hypercube,
}

#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    CartesianIdentity,
    CartesianSecond,
    StrongIdentity,
    DirectIdentity,
    DirectTriangleFree,
    LexIdentity,
    GridWindow,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Decomposition,
    FMap,
    Complement,
    Level,
    Parity,
    Degree,
    Matching,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    NMinus2,
    NMinus3,
    NMinus4First,
    NMinus4Second,
}

impl From<Variant> for LayeredVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::NMinus2 => LayeredVariant::NMinus2,
            Variant::NMinus3 => LayeredVariant::NMinus3,
            Variant::NMinus4First => LayeredVariant::NMinus4First,
            Variant::NMinus4Second => LayeredVariant::NMinus4Second,
        }
    }
}

struct Out<'a> {
    cli: &'a Cli,
}

impl Out<'_> {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.cli.output {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                if !text.ends_with('\n') {
                    stdout.write_all(b"\n")?;
                }
                Ok(())
            }
        }
    }

    fn json(&self, value: &impl Serialize) -> Result<()> {
        self.emit(&(serde_json::to_string_pretty(value)? + "\n"))
    }

    fn graph(&self, g: &Graph) -> Result<()> {
        match self.cli.format.unwrap_or(Format::Xdg) {
            Format::Xdg => self.emit(&write_xdg(g)),
            Format::Dimacs => self.emit(&write_dimacs(g)?),
            Format::Json => self.emit(&(write_graph_json(g) + "\n")),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_graph_auto(&text).with_context(|| format!("parsing {}", path.display()))
}

fn num<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params.get(i).ok_or_else(|| anyhow!(Usage(format!("missing parameter {what}"))))?;
    raw.parse().map_err(|_| anyhow!(Usage(format!("bad value `{raw}` for {what}"))))
}

/// Error that maps to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn generate(family: Family, params: &[String], seed: u64) -> Result<Graph> {
    let arity = match family {
        Family::Johnson | Family::Kneser => 3,
        Family::Random => 2,
        _ => 1,
    };
    if params.len() != arity {
        bail!(Usage(format!("expected {arity} parameter(s), got {}", params.len())));
    }
    let n: usize = num(params, 0, "N")?;
    Ok(match family {
        Family::Path => path(n)?,
        Family::Cycle => cycle(n)?,
        Family::Complete => complete(n)?,
        Family::Edgeless => edgeless(n)?,
        Family::Star => star(n)?,
        Family::Hypercube => hypercube(n)?,
        Family::Johnson => johnson(n, num(params, 1, "K")?, num(params, 2, "I")?)?,
        Family::Kneser => kneser_general(n, num(params, 1, "K")?, num(params, 2, "I")?)?,
        Family::Random => {
            let d: f64 = num(params, 1, "DENSITY")?;
            if !(0.0..=1.0).contains(&d) {
                bail!(Usage(format!("density {d} is outside [0, 1]")));
            }
            seeded_random_graph(seed, n, d)
        }
    })
}

fn verify(cli: &Cli, out: &Out, identity: Identity, n: usize, p: usize, trials: usize, m: usize) -> Result<u8> {
    let reports: Vec<IdentityReport> = if identity == Identity::GridWindow {
        vec![grid_window_check(m, GridKind::Cartesian)?, grid_window_check(m, GridKind::Direct)?]
    } else {
        if n == 0 {
            bail!(Usage("--n must be at least 1".into()));
        }
        let isolate_free = |g: &Graph, h: &Graph| g.is_isolate_free() && h.is_isolate_free();
        let pairs = match identity {
            Identity::DirectIdentity => random_pairs(cli.seed, trials, 1, n, isolate_free),
            Identity::DirectTriangleFree => random_pairs(cli.seed, trials, 1, n, |g, h| {
                isolate_free(g, h) && is_triangle_free(g) && is_triangle_free(h)
            }),
            Identity::LexIdentity => random_pairs(cli.seed, trials, 1, n, |g, _| g.order() >= 2 && g.is_isolate_free()),
            _ => random_pairs(cli.seed, trials, 1, n, |_, _| true),
        };
        pairs
            .iter()
            .map(|(g, h)| match identity {
                Identity::CartesianIdentity => cartesian_identity(g, h, p),
                Identity::CartesianSecond => cartesian_second_identity(g, h, p),
                Identity::StrongIdentity => strong_identity(g, h, p),
                Identity::DirectIdentity => direct2_identity(g, h),
                Identity::DirectTriangleFree => direct2_strong_identity(g, h),
                Identity::LexIdentity => lex_identity(g, h, p),
                Identity::GridWindow => unreachable!("handled above"),
            })
            .collect::<xdist::Result<_>>()?
    };
    let failed = reports.iter().filter(|r| !r.pass).count();
    if cli.format == Some(Format::Json) {
        out.json(&reports)?;
    } else {
        let mut text = String::new();
        for (i, r) in reports.iter().enumerate() {
            text.push_str(&format!("{} {} {} [{}]", i + 1, if r.pass { "pass" } else { "FAIL" }, r.identity, r.instance));
            if !r.pass {
                text.push_str(&format!(
                    " only-lhs {:?} only-rhs {:?} {:?}",
                    r.only_in_lhs, r.only_in_rhs, r.failures
                ));
            }
            text.push('\n');
        }
        text.push_str(&format!("{} of {} passed\n", reports.len() - failed, reports.len()));
        out.emit(&text)?;
    }
    Ok(if failed == 0 { OK } else { FAILED })
}

#[derive(Serialize)]
struct CheckLine {
    check: String,
    instance: String,
    pass: bool,
}

fn hypercube_checks(cli: &Cli, check: Check, n: usize, p: Option<usize>, k: Option<usize>, i: Option<usize>) -> Result<(u8, serde_json::Value)> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| anyhow!(Usage(format!("--{name} is required for this check"))));
    let budget = cli.budget_nodes;
    let value = match check {
        Check::Decomposition => {
            let r = even_distance_decomposition_with_budget(n, need(p, "p")?, budget)?;
            (r.pass, serde_json::to_value(r)?)
        }
        Check::FMap => {
            let r = qn_nminus1_isomorphism(n)?;
            (r.pass, serde_json::to_value(r)?)
        }
        Check::Complement => {
            let r = johnson_complement_isomorphism(n, need(k, "k")?, need(i, "i")?)?;
            (r.pass, serde_json::to_value(r)?)
        }
        Check::Level => {
            let r = level_induces_johnson_check(n, need(p, "p")?, need(i, "i")?)?;
            (r.pass, serde_json::to_value(r)?)
        }
        Check::Parity => {
            let r = parity_components_with_budget(n, need(p, "p")?, budget)?;
            (r.pass, serde_json::to_value(r)?)
        }
        Check::Degree => {
            let p = need(p, "p")?;
            let ok = degree_law_check(n, p)?;
            (ok, serde_json::json!({ "check": "degree-law", "n": n, "p": p, "pass": ok }))
        }
        Check::Matching => {
            let ok = antipodal_matching_check(n)?;
            (ok, serde_json::json!({ "check": "antipodal-matching", "n": n, "pass": ok }))
        }
        Check::All => {
            let mut lines = Vec::new();
            let mut add = |check: &str, instance: String, pass: bool| lines.push(CheckLine { check: check.into(), instance, pass });
            for p in 0..=n {
                add("degree-law", format!("n={n}, p={p}"), degree_law_check(n, p)?);
            }
            add("antipodal-matching", format!("n={n}"), antipodal_matching_check(n)?);
            if n % 2 == 0 {
                add("f-map", format!("n={n}"), qn_nminus1_isomorphism(n)?.pass);
            }
            if n <= 7 {
                for p in 1..=n / 2 {
                    add("decomposition", format!("n={n}, p={p}"), even_distance_decomposition_with_budget(n, p, budget)?.pass);
                }
            }
            for p in (2..=n).step_by(2) {
                for i in p / 2..=n - p / 2 {
                    add("level-johnson", format!("n={n}, p={p}, i={i}"), level_induces_johnson_check(n, p, i)?.pass);
                }
            }
            for p in (0..=n).step_by(2) {
                add("parity", format!("n={n}, p={p}"), parity_components_with_budget(n, p, budget.min(100_000))?.pass);
            }
            (lines.iter().all(|l| l.pass), serde_json::to_value(lines)?)
        }
    };
    Ok((if value.0 { OK } else { FAILED }, value.1))
}

fn table(cli: &Cli, out: &Out, opts: &TableArgs) -> Result<u8> {
    let mut o = Table1Options {
        exact_budget: cli.budget_nodes.min(Table1Options::default().exact_budget),
        ..Default::default()
    };
    if opts.formula_only {
        o.max_component_order = 0;
        o.constructive = false;
    }
    let report = table1_report(&o)?;
    if cli.format == Some(Format::Json) {
        out.json(&report)?;
    } else {
        out.emit(&table1_text(&report))?;
    }
    Ok(if report.all_match { OK } else { FAILED })
}

fn run(cli: &Cli) -> Result<u8> {
    let out = Out { cli };
    match &cli.command {
        Command::Gen { family, params } => {
            out.graph(&generate(*family, params, cli.seed)?)?;
            Ok(OK)
        }
        Command::Xdist { input, p } => {
            out.graph(&exact_distance_graph(&read_graph(input)?, *p)?)?;
            Ok(OK)
        }
        Command::Product { kind, g, h, p } => {
            let mut prod = product((*kind).into(), &read_graph(g)?, &read_graph(h)?)?;
            if let Some(p) = p {
                prod = exact_distance_graph(&prod, *p)?;
            }
            out.graph(&prod)?;
            Ok(OK)
        }
        Command::Verify { identity, n, p, trials, m } => verify(cli, &out, *identity, *n, *p, *trials, *m),
        Command::Connectivity { kind, g, h, d, p } => {
            let verdict = match kind {
                ConnKind::Hypercube => {
                    let d = d.ok_or_else(|| anyhow!(Usage("--d is required for hypercube".into())))?;
                    hypercube_characterization(d, *p)?
                }
                _ => {
                    let kind = match kind {
                        ConnKind::Cartesian => ProductKind::Cartesian,
                        ConnKind::Strong => ProductKind::Strong,
                        ConnKind::Direct => ProductKind::Direct,
                        _ => ProductKind::Lexicographic,
                    };
                    let (g, h) = (g.as_ref().expect("clap requires --g"), h.as_ref().expect("clap requires --h"));
                    product_connectivity(kind, &read_graph(g)?, &read_graph(h)?, *p)?
                }
            };
            out.json(&verdict)?;
            Ok(if verdict.agrees() { OK } else { FAILED })
        }
        Command::HypercubeChecks { check, n, p, k, i } => {
            let (code, value) = hypercube_checks(cli, *check, *n, *p, *k, *i)?;
            out.json(&value)?;
            Ok(code)
        }
        Command::Chi { command } => match command {
            ChiCommand::Exact { input } => {
                let g = read_graph(input)?;
                let outcome = exact_chromatic(&g, cli.budget_nodes)?;
                match cli.format {
                    Some(Format::Dimacs) => out.emit(&write_coloring_dimacs(outcome.coloring()))?,
                    _ => out.json(&outcome)?,
                }
                Ok(if outcome.exact().is_some() { OK } else { UNDECIDED })
            }
            ChiCommand::Bounds { n, p } => {
                out.json(&chi_bound_formulas(*n, *p)?)?;
                Ok(OK)
            }
            ChiCommand::Table1 { opts } => table(cli, &out, opts),
            ChiCommand::Validate { graph, coloring } => {
                let g = read_graph(graph)?;
                let text = fs::read_to_string(coloring).with_context(|| format!("reading {}", coloring.display()))?;
                let c = if text.trim_start().starts_with('{') { read_coloring_json(&text)? } else { read_coloring_dimacs(&text)? };
                let verdict = validate_coloring(&g, &c)?;
                out.json(&verdict)?;
                Ok(if verdict.proper { OK } else { FAILED })
            }
            ChiCommand::Layered { n, variant } => {
                let variant: LayeredVariant = (*variant).into();
                let subs = default_sub_colorings(*n, variant, cli.budget_nodes.min(1_000_000))?;
                let report = layered_coloring(*n, variant, &subs)?;
                out.json(&report)?;
                Ok(if report.proper { OK } else { FAILED })
            }
        },
        Command::Table1 { opts } => table(cli, &out, opts),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<xdist::Error>() {
            return match e {
                xdist::Error::BudgetExceeded(_) => UNDECIDED,
                _ => USAGE,
            };
        }
    }
    USAGE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
