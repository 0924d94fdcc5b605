use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use bkverify::corpus::{self, graph6_string, Record as InputRecord};
use bkverify::deadline::Deadline;
use bkverify::enumerate::all_graphs;
use bkverify::harness::{verify_records, Check, VerifyConfig};
use bkverify::relaxed::{search_relaxed, RelaxedConfig, RelaxedReport};
use bkverify::report::{Record, RunHeader, Summary, VerificationReport};
use bkverify::sampler::sample_sizes;
use bkverify_core::graph6::from_graph6;
use bkverify_core::patterns::{catalog, catalog_entry, ClassSpec, Membership, Pattern};
use bkverify_core::solvers::{chromatic_number, max_clique};
use bkverify_core::{Error as CoreError, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exit status for a clean run.
const EXIT_OK: u8 = 0;
/// Violations, undecided results or malformed input.
const EXIT_FOUND: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "bkverify", version, about = "Verify colouring bounds on graph corpora")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Forbidden-pattern class: p6c4, p6c4k7, p6c4c5plus or custom:<file>.
    #[arg(long, global = true, default_value = "p6c4c5plus")]
    class: String,
    /// Solver time per graph, in seconds.
    #[arg(long, global = true, env = "BKVERIFY_BUDGET_SECS", default_value_t = 10.0)]
    budget_secs: f64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a catalog or parametric pattern (P<k>, C<k>, K<k>).
    Pattern {
        name: Option<String>,
        /// List the catalog instead.
        #[arg(long)]
        list: bool,
    },
    /// Test class membership and print a witness for the first violation.
    Detect {
        #[command(flatten)]
        input: Input,
        /// Patterns to look for instead of the class, comma separated.
        #[arg(long, value_delimiter = ',')]
        patterns: Vec<String>,
    },
    /// Exact chromatic number with a colouring.
    Color {
        #[command(flatten)]
        input: Input,
    },
    /// Exact clique number with a maximum clique.
    Clique {
        #[command(flatten)]
        input: Input,
    },
    /// Run the bound checks on every graph of the input.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Sample class members and verify them, or search a corpus for relaxed graphs.
    Scan {
        /// Corpus files to scan instead of sampling.
        #[arg(long = "input", short = 'i')]
        inputs: Vec<PathBuf>,
        /// Vertex count or inclusive range such as 10..16.
        #[arg(long, default_value = "10..16")]
        n: String,
        /// Graphs to sample.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Required maximum degree of sampled graphs.
        #[arg(long)]
        delta: Option<usize>,
        /// Run the relaxed-graph search instead of the bound checks.
        #[arg(long)]
        relaxed: bool,
        /// Fraction of each stage's drops to re-check in the relaxed search.
        #[arg(long, default_value_t = 0.01)]
        audit_rate: f64,
        /// Also write the sampled graphs to this file as graph6.
        #[arg(long)]
        save: Option<PathBuf>,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Write every graph on n vertices, one per isomorphism class, as graph6.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
}

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Catalog or parametric pattern name.
    #[arg(long)]
    named: Option<String>,
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct VerifyOpts {
    /// Checks to run, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "brooks,bk,ratio")]
    checks: Vec<Check>,
    /// Exit 0 even when some graphs are undecided.
    #[arg(long)]
    allow_undecided: bool,
    /// Human format: print passing graphs too.
    #[arg(long)]
    verbose: bool,
}

/// A failure that ends the run with a specific exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FOUND)
        }
    }
}

struct Ctx {
    global: Global,
    class: ClassSpec,
    budget: Duration,
    workers: usize,
    out: BufWriter<io::Stdout>,
}

impl Ctx {
    fn json(&self) -> bool {
        self.global.format == Format::Json
    }

    fn header(&mut self, command: &str, options: BTreeMap<&'static str, String>) -> io::Result<()> {
        if !self.json() {
            return Ok(());
        }
        let header = RunHeader {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            class: self.global.class.clone(),
            budget_secs: self.global.budget_secs,
            workers: self.workers,
            seed: self.global.seed,
            options,
        };
        writeln!(self.out, "{}", Record::Config(&header).to_line())
    }

    fn line(&mut self, value: serde_json::Value) -> io::Result<()> {
        writeln!(self.out, "{value}")
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if !(g.budget_secs.is_finite() && g.budget_secs > 0.0) {
        return Err(Failure::Usage("--budget-secs must be positive".into()));
    }
    if g.workers == Some(0) {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let class = load_class(&g.class)?;
    let workers = g
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut ctx = Ctx {
        global: g.clone(),
        class,
        budget: Duration::from_secs_f64(g.budget_secs),
        workers,
        out: BufWriter::new(io::stdout()),
    };
    let code = match &cli.command {
        Command::Pattern { name, list } => cmd_pattern(&mut ctx, name.as_deref(), *list),
        Command::Detect { input, patterns } => cmd_detect(&mut ctx, input, patterns),
        Command::Color { input } => cmd_color(&mut ctx, input),
        Command::Clique { input } => cmd_clique(&mut ctx, input),
        Command::Verify { input, opts } => cmd_verify(&mut ctx, input, opts),
        Command::Scan {
            inputs,
            n,
            count,
            delta,
            relaxed,
            audit_rate,
            save,
            opts,
        } => {
            let scan = ScanArgs {
                inputs,
                n: parse_range(n)?,
                count: *count,
                delta: *delta,
                relaxed: *relaxed,
                audit_rate: *audit_rate,
                save: save.as_deref(),
                opts,
            };
            cmd_scan(&mut ctx, &scan)
        }
        Command::Generate { n, output } => cmd_generate(&mut ctx, *n, output.as_deref()),
    };
    ctx.out.flush()?;
    code
}

/// `custom:<file>` lists one pattern name or `graph6:<code>` per line.
fn load_class(spec: &str) -> Result<ClassSpec, Failure> {
    let Some(path) = spec.strip_prefix("custom:") else {
        return ClassSpec::preset(spec).map_err(|_| {
            Failure::Usage(format!(
                "unknown class `{spec}` (expected p6c4, p6c4k7, p6c4c5plus or custom:<file>)"
            ))
        });
    };
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let mut patterns = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        let bad = |e: CoreError| Failure::Usage(format!("{path}:{}: {e}", i + 1));
        let pattern = match entry.strip_prefix("graph6:") {
            Some(code) => Pattern::inline(entry, from_graph6(code.trim().as_bytes()).map_err(bad)?),
            None => Pattern::named(entry).map_err(bad)?,
        };
        patterns.push(pattern);
    }
    ClassSpec::new(format!("custom:{path}"), patterns).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("--n expects N or A..B, got `{text}`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn resolve_pattern(name: &str) -> Result<Pattern, Failure> {
    Pattern::named(name).map_err(|_| {
        let keys: Vec<&str> = catalog().iter().map(|e| e.key).collect();
        Failure::Usage(format!(
            "unknown pattern `{name}`\navailable: {}, P<k>, C<k>, K<k>",
            keys.join(", ")
        ))
    })
}

/// Parsed input records. A single `--graph6` or `--named` graph becomes one record.
fn read_input(input: &Input) -> Result<Vec<InputRecord>, Failure> {
    if let Some(code) = &input.graph6 {
        let graph = from_graph6(code.trim().as_bytes()).map_err(|e| e.to_string());
        return Ok(vec![InputRecord {
            line: 1,
            text: code.clone(),
            graph,
        }]);
    }
    if let Some(name) = &input.named {
        let p = resolve_pattern(name)?;
        let graph = match catalog_entry(name) {
            Ok(entry) => entry.graph(),
            Err(_) => p.graph().clone(),
        };
        return Ok(vec![InputRecord {
            line: 1,
            text: name.clone(),
            graph: Ok(graph),
        }]);
    }
    let path = input.input.as_ref().expect("clap enforces one input");
    if path == Path::new("-") {
        Ok(corpus::read_records(io::stdin().lock())?)
    } else {
        corpus::read_file(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn edge_list(g: &Graph) -> Vec<(String, String)> {
    g.edges().map(|(a, b)| (g.display_name(a), g.display_name(b))).collect()
}

fn names(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.display_name(v)).collect::<Vec<_>>().join(" ")
}

fn cmd_pattern(ctx: &mut Ctx, name: Option<&str>, list: bool) -> Outcome {
    ctx.header("pattern", BTreeMap::new())?;
    if list || name.is_none() {
        for e in catalog() {
            let g = e.graph();
            if ctx.json() {
                ctx.line(json!({
                    "record": "pattern", "key": e.key, "aliases": e.aliases, "tier": e.tier.as_str(),
                    "n": g.n(), "m": g.edge_count(), "graph6": graph6_string(&g), "note": e.note,
                }))?;
            } else {
                let aliases = if e.aliases.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", e.aliases.join(", "))
                };
                writeln!(
                    ctx.out,
                    "{:<10} {:<8} n={:<2} m={:<2} {}{aliases}",
                    e.key,
                    e.tier.as_str(),
                    g.n(),
                    g.edge_count(),
                    e.note
                )?;
            }
        }
        if !ctx.json() {
            writeln!(ctx.out, "parametric: P<k> (path), C<k> (cycle), K<k> (complete)")?;
        }
        return Ok(EXIT_OK);
    }
    let name = name.expect("checked above");
    let p = resolve_pattern(name)?;
    let g = catalog_entry(name)
        .map(|e| e.graph())
        .unwrap_or_else(|_| p.graph().clone());
    let edges = edge_list(&g);
    if ctx.json() {
        ctx.line(json!({
            "record": "pattern", "key": p.name(), "n": g.n(), "m": g.edge_count(),
            "graph6": graph6_string(&g), "labels": g.labels(), "edges": edges,
        }))?;
    } else {
        writeln!(ctx.out, "{}", graph6_string(&g))?;
        writeln!(ctx.out, "# {}: {} vertices, {} edges", p.name(), g.n(), g.edge_count())?;
        for (a, b) in edges {
            writeln!(ctx.out, "{a} {b}")?;
        }
    }
    Ok(EXIT_OK)
}

/// Exit 1 when any input graph is not a member.
fn cmd_detect(ctx: &mut Ctx, input: &Input, patterns: &[String]) -> Outcome {
    let class = if patterns.is_empty() {
        ctx.class.clone()
    } else {
        let ps = patterns
            .iter()
            .map(|n| resolve_pattern(n))
            .collect::<Result<Vec<_>, _>>()?;
        ClassSpec::new(patterns.join(","), ps).map_err(|e| Failure::Usage(e.to_string()))?
    };
    let records = read_input(input)?;
    let mut opts = BTreeMap::new();
    opts.insert(
        "patterns",
        class
            .forbidden()
            .iter()
            .map(|p| p.name().to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    ctx.header("detect", opts)?;
    let mut code = EXIT_OK;
    for rec in &records {
        let g = match &rec.graph {
            Ok(g) => g,
            Err(msg) => {
                code = EXIT_FOUND;
                report_error(ctx, rec, msg)?;
                continue;
            }
        };
        match class.membership(g) {
            Membership::Member => {
                if ctx.json() {
                    ctx.line(
                        json!({"record": "detect", "line": rec.line, "graph6": graph6_string(g), "member": true}),
                    )?;
                } else {
                    writeln!(ctx.out, "{}: member of {}", rec.text, class.name())?;
                }
            }
            Membership::Violates { pattern, witness } => {
                code = EXIT_FOUND;
                let forbidden = class
                    .forbidden()
                    .iter()
                    .find(|p| p.name() == pattern)
                    .expect("reported pattern is in the class");
                if !witness.validate(g, forbidden.graph()) {
                    return Err(Failure::Input(format!(
                        "internal error: witness for {pattern} failed validation"
                    )));
                }
                if ctx.json() {
                    ctx.line(json!({
                        "record": "detect", "line": rec.line, "graph6": graph6_string(g), "member": false,
                        "pattern": pattern, "witness": witness.mapping,
                    }))?;
                } else {
                    writeln!(
                        ctx.out,
                        "{}: not a member, contains induced {pattern} on [{}]",
                        rec.text,
                        names(g, &witness.mapping)
                    )?;
                }
            }
        }
    }
    Ok(code)
}

fn report_error(ctx: &mut Ctx, rec: &InputRecord, msg: &str) -> io::Result<()> {
    if ctx.json() {
        ctx.line(json!({"record": "error", "line": rec.line, "input": rec.text, "message": msg}))
    } else {
        writeln!(ctx.out, "line {}: {msg}", rec.line)
    }
}

fn cmd_color(ctx: &mut Ctx, input: &Input) -> Outcome {
    let records = read_input(input)?;
    ctx.header("color", BTreeMap::new())?;
    let mut code = EXIT_OK;
    for rec in &records {
        let g = match &rec.graph {
            Ok(g) => g,
            Err(msg) => {
                code = EXIT_FOUND;
                report_error(ctx, rec, msg)?;
                continue;
            }
        };
        match chromatic_number(g, &mut Deadline::after(ctx.budget)) {
            Ok((chi, coloring)) => {
                let colors = coloring.one_based();
                if ctx.json() {
                    ctx.line(json!({"record": "color", "line": rec.line, "graph6": graph6_string(g), "chi": chi, "coloring": colors}))?;
                } else {
                    writeln!(ctx.out, "{}: chi = {chi}", rec.text)?;
                    for c in 1..=chi as u32 {
                        let class: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == c).collect();
                        writeln!(ctx.out, "  color {c}: {}", names(g, &class))?;
                    }
                }
            }
            Err(_) => {
                code = EXIT_FOUND;
                undecided(ctx, rec, "color")?;
            }
        }
    }
    Ok(code)
}

fn cmd_clique(ctx: &mut Ctx, input: &Input) -> Outcome {
    let records = read_input(input)?;
    ctx.header("clique", BTreeMap::new())?;
    let mut code = EXIT_OK;
    for rec in &records {
        let g = match &rec.graph {
            Ok(g) => g,
            Err(msg) => {
                code = EXIT_FOUND;
                report_error(ctx, rec, msg)?;
                continue;
            }
        };
        match max_clique(g, &mut Deadline::after(ctx.budget)) {
            Ok(cert) => {
                if ctx.json() {
                    ctx.line(json!({"record": "clique", "line": rec.line, "graph6": graph6_string(g), "omega": cert.size(), "clique": cert.vertices}))?;
                } else {
                    writeln!(ctx.out, "{}: omega = {}", rec.text, cert.size())?;
                    writeln!(ctx.out, "  clique: {}", names(g, &cert.vertices))?;
                }
            }
            Err(_) => {
                code = EXIT_FOUND;
                undecided(ctx, rec, "clique")?;
            }
        }
    }
    Ok(code)
}

fn undecided(ctx: &mut Ctx, rec: &InputRecord, what: &str) -> io::Result<()> {
    if ctx.json() {
        ctx.line(json!({"record": what, "line": rec.line, "input": rec.text, "status": "undecided"}))
    } else {
        writeln!(ctx.out, "{}: undecided within the budget", rec.text)
    }
}

fn verify_config(ctx: &Ctx, opts: &VerifyOpts) -> VerifyConfig {
    let mut checks = opts.checks.clone();
    checks.sort();
    checks.dedup();
    VerifyConfig {
        checks,
        class: ctx.class.clone(),
        budget: ctx.budget,
    }
}

fn check_names(cfg: &VerifyConfig) -> String {
    cfg.checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")
}

fn cmd_verify(ctx: &mut Ctx, input: &Input, opts: &VerifyOpts) -> Outcome {
    let records = read_input(input)?;
    let cfg = verify_config(ctx, opts);
    let mut options = BTreeMap::new();
    options.insert("checks", check_names(&cfg));
    ctx.header("verify", options)?;
    let run = verify_records(&records, &cfg, ctx.workers);
    emit_verification(ctx, &run.reports, &run.errors, opts)
}

fn emit_verification(
    ctx: &mut Ctx,
    reports: &[VerificationReport],
    errors: &[bkverify::report::ErrorRecord],
    opts: &VerifyOpts,
) -> Outcome {
    use bkverify_core::checks::Verdict;
    let summary = Summary::from_reports(reports, errors.len());
    if ctx.json() {
        // Graph and error records interleave by input position.
        let (mut r, mut e) = (reports.iter().peekable(), errors.iter().peekable());
        loop {
            let take_error = match (r.peek(), e.peek()) {
                (Some(a), Some(b)) => b.index < a.index,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (None, None) => break,
            };
            let line = if take_error {
                Record::Error(e.next().expect("peeked")).to_line()
            } else {
                Record::Graph(r.next().expect("peeked")).to_line()
            };
            writeln!(ctx.out, "{line}")?;
        }
        writeln!(ctx.out, "{}", Record::Summary(&summary).to_line())?;
    } else {
        for rep in reports {
            if !opts.verbose && matches!(rep.status, Verdict::Pass | Verdict::Skipped) {
                continue;
            }
            let detail: Vec<String> = rep
                .checks
                .iter()
                .filter(|c| opts.verbose || matches!(c.verdict, Verdict::Fail | Verdict::Undecided))
                .map(|c| match c.bound {
                    Some(b) => format!("{}={} (bound {b})", c.name, c.verdict.as_str()),
                    None => format!("{}={}", c.name, c.verdict.as_str()),
                })
                .collect();
            let show = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
            writeln!(
                ctx.out,
                "#{} {} n={} Δ={} ω={} χ={} {}: {}",
                rep.index,
                rep.graph6,
                rep.n,
                rep.max_degree,
                show(rep.omega),
                show(rep.chi),
                rep.status.as_str(),
                detail.join(", ")
            )?;
        }
        for err in errors {
            let at = err.line.map_or(String::new(), |l| format!("line {l}: "));
            writeln!(ctx.out, "{at}{}: {}", err.input, err.message)?;
        }
        writeln!(
            ctx.out,
            "graphs {}  members {}  errors {}  pass {}  fail {}  undecided {}  skipped {}",
            summary.graphs,
            summary.members,
            summary.errors,
            summary.status.pass,
            summary.status.fail,
            summary.status.undecided,
            summary.status.skipped
        )?;
        for (name, c) in &summary.checks {
            let tight = summary.tight.get(name).copied().unwrap_or(0);
            writeln!(
                ctx.out,
                "  {name:<10} pass {:<6} fail {:<4} undecided {:<4} skipped {:<6} tight {tight}",
                c.pass, c.fail, c.undecided, c.skipped
            )?;
        }
    }
    Ok(if summary.clean(opts.allow_undecided) {
        EXIT_OK
    } else {
        EXIT_FOUND
    })
}

struct ScanArgs<'a> {
    inputs: &'a [PathBuf],
    n: RangeInclusive<usize>,
    count: usize,
    delta: Option<usize>,
    relaxed: bool,
    audit_rate: f64,
    save: Option<&'a Path>,
    opts: &'a VerifyOpts,
}

fn cmd_scan(ctx: &mut Ctx, scan: &ScanArgs) -> Outcome {
    if !(0.0..=1.0).contains(&scan.audit_rate) {
        return Err(Failure::Usage("--audit-rate must lie in [0, 1]".into()));
    }
    let mut options = BTreeMap::new();
    let mut records = Vec::new();
    if scan.inputs.is_empty() {
        options.insert("n", format!("{}..{}", scan.n.start(), scan.n.end()));
        options.insert("count", scan.count.to_string());
        if let Some(d) = scan.delta {
            options.insert("delta", d.to_string());
        }
        let sampled = sample_sizes(&ctx.class, scan.n.clone(), scan.count, ctx.global.seed, scan.delta);
        if let Some(w) = &sampled.warning {
            eprintln!("warning: {w}");
        }
        if let Some(path) = scan.save {
            corpus::write_graphs(BufWriter::new(File::create(path)?), &sampled.graphs)?;
        }
        records.extend(sampled.graphs.into_iter().enumerate().map(|(i, g)| InputRecord {
            line: i + 1,
            text: graph6_string(&g),
            graph: Ok(g),
        }));
    } else {
        let paths: Vec<String> = scan.inputs.iter().map(|p| p.display().to_string()).collect();
        options.insert("inputs", paths.join(","));
        for path in scan.inputs {
            let recs = corpus::read_file(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            records.extend(recs);
        }
    }
    if !scan.relaxed {
        let cfg = verify_config(ctx, scan.opts);
        options.insert("checks", check_names(&cfg));
        ctx.header("scan", options)?;
        let mut run = verify_records(&records, &cfg, ctx.workers);
        // Indices run across all inputs; line numbers stay per file.
        for (i, r) in run.reports.iter_mut().enumerate() {
            r.index = r.index.max(i);
        }
        return emit_verification(ctx, &run.reports, &run.errors, scan.opts);
    }

    options.insert("mode", "relaxed".into());
    options.insert("audit_rate", scan.audit_rate.to_string());
    ctx.header("scan", options)?;
    let mut malformed = 0;
    let mut graphs = Vec::with_capacity(records.len());
    for rec in &records {
        match &rec.graph {
            Ok(g) => graphs.push(g.clone()),
            Err(msg) => {
                malformed += 1;
                report_error(ctx, rec, msg)?;
            }
        }
    }
    let cfg = RelaxedConfig {
        class: ctx.class.clone(),
        budget: ctx.budget,
        audit_rate: scan.audit_rate,
        seed: ctx.global.seed,
        workers: ctx.workers,
    };
    let report = search_relaxed(&graphs, &cfg);
    emit_relaxed(ctx, &report)?;
    let clean = malformed == 0
        && report.candidates.is_empty()
        && report.bk_violations.is_empty()
        && report.audit_passed()
        && (scan.opts.allow_undecided || report.undecided.is_empty());
    Ok(if clean { EXIT_OK } else { EXIT_FOUND })
}

fn emit_relaxed(ctx: &mut Ctx, report: &RelaxedReport) -> io::Result<()> {
    if ctx.json() {
        let mut value = serde_json::to_value(report).expect("report serializes");
        value["record"] = json!("relaxed");
        value["audit_passed"] = json!(report.audit_passed());
        return ctx.line(value);
    }
    writeln!(ctx.out, "scanned {}", report.scanned)?;
    for a in &report.audit {
        writeln!(
            ctx.out,
            "  {:<11} dropped {:<7} audited {:<4} confirmed {}",
            a.stage.name(),
            a.dropped,
            a.sampled,
            a.confirmed
        )?;
    }
    for u in &report.undecided {
        writeln!(ctx.out, "undecided at {}: #{} {}", u.stage.name(), u.index, u.graph6)?;
    }
    for d in &report.discarded {
        writeln!(
            ctx.out,
            "no 8-colouring, dropped at {}: #{} {} ({})",
            d.stage.name(),
            d.index,
            d.graph6,
            d.reason
        )?;
    }
    for c in &report.candidates {
        writeln!(
            ctx.out,
            "candidate #{} {} u={} omega={}",
            c.index, c.graph6, c.u, c.omega
        )?;
    }
    writeln!(
        ctx.out,
        "candidates {}  bound violations {}  undecided {}  audit {}",
        report.candidates.len(),
        report.bk_violations.len(),
        report.undecided.len(),
        if report.audit_passed() { "passed" } else { "FAILED" }
    )
}

fn cmd_generate(ctx: &mut Ctx, n: usize, output: Option<&Path>) -> Outcome {
    if n > 9 {
        return Err(Failure::Usage("generate supports n <= 9".into()));
    }
    let codes = all_graphs(n);
    let write = |w: &mut dyn Write| -> io::Result<()> {
        for code in &codes {
            w.write_all(code)?;
            w.write_all(b"\n")?;
        }
        w.flush()
    };
    match output {
        Some(path) => {
            write(&mut BufWriter::new(File::create(path)?))?;
            eprintln!("{} graphs written to {}", codes.len(), path.display());
        }
        None => write(&mut ctx.out)?,
    }
    Ok(EXIT_OK)
}
