//! The `spectral-ds` command line. [`run`] is the whole program; `main` only
//! wires it to the process streams.
//!
//! Data goes to the output stream, diagnostics and human summaries to the
//! error stream. Exit status: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::canon::{canonical_labeling, orbits};
use crate::constructions::{
    figure1_family, gm_switch, join_pair, kn_minus_pair, path_mates, union_pair, CospectralPair, PairKind,
};
use crate::enumeration::{
    ds_verify_many, generate_by_edges, multiplicity_survey, survey_kn_minus, GraphStream, Mode,
};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::{from_graph6, parse_list, to_graph6};
use crate::invariants::{
    brute_force_counts, complement_4walks, complement_triangles, profile, subgraph_counts, InvariantProfile,
    SubgraphCounts,
};
use crate::named::{make_named, parse_family};
use crate::spectra::{
    char_poly, closed_walks, count_roots_greater_than, integer_eigenvalue_multiplicity, is_cospectral,
    is_r_cospectral, structure_check_one_positive, CharPoly, MAX_WALK_LENGTH,
};
use crate::sturm::parse_rational;

/// Which library operations each subcommand exposes. Every operation appears
/// exactly once.
pub const COMMAND_TABLE: &[(&str, &[&str])] = &[
    (
        "spectrum",
        &[
            "char_poly",
            "closed_walks",
            "integer_eigenvalue_multiplicity",
            "count_roots_greater_than",
        ],
    ),
    (
        "invariants",
        &[
            "profile",
            "complement_triangles",
            "complement_4walks",
            "structure_check_one_positive",
        ],
    ),
    ("counts", &["subgraph_counts", "brute_force_counts"]),
    ("cospectral", &["is_cospectral", "is_r_cospectral"]),
    ("canon", &["canonical_form", "to_graph6", "from_graph6"]),
    ("enumerate", &["generate_graphs", "generate_by_edges"]),
    ("survey", &["survey_kn_minus"]),
    ("ds-verify", &["ds_verify"]),
    ("multiplicity-survey", &["multiplicity_survey"]),
    ("construct named", &["make_named"]),
    ("construct complement", &["complement"]),
    ("construct join", &["join"]),
    ("construct union", &["disjoint_union"]),
    ("construct join-pair", &["join_pair"]),
    ("construct union-pair", &["union_pair"]),
    ("construct kn-minus-pair", &["kn_minus_pair"]),
    ("construct gm-switch", &["gm_switch"]),
    ("construct figure1", &["figure1_family"]),
    ("construct path-mates", &["path_mates"]),
];

#[derive(Parser, Debug)]
#[command(
    name = "spectral-ds",
    version,
    about = "Exact spectral tools for small simple graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Suppress the human summary on the error stream.
    #[arg(long, short, global = true)]
    quiet: bool,
    /// Read additional input graphs from a graph6 list file.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true, env = "SPECTRAL_DS_JOBS",
          value_parser = clap::value_parser!(u32).range(1..=1024))]
    jobs: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// One JSON object per line.
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graphs in graph6.
    #[arg(value_name = "GRAPH6")]
    graphs: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial and eigenvalue summary.
    Spectrum {
        #[command(flatten)]
        input: GraphArgs,
        /// Count eigenvalues strictly greater than this rational (e.g. 2, -1/3, 1.5).
        #[arg(long, value_name = "Q", allow_hyphen_values = true)]
        above: Option<String>,
        /// Exact multiplicity of an integer eigenvalue (repeatable).
        #[arg(long, value_name = "LAMBDA", allow_hyphen_values = true)]
        eigenvalue: Vec<i64>,
        /// Closed-walk counts tr(A^k) for k = 0..=K.
        #[arg(long, value_name = "K")]
        walks: Option<usize>,
    },
    /// Spectral profile, complement closed forms and the one-positive-eigenvalue structure test.
    Invariants {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Subgraph counts (P3, 2K2, P4, C4, triangles).
    Counts {
        #[command(flatten)]
        input: GraphArgs,
        /// Count by exhaustive search instead of closed forms.
        #[arg(long)]
        brute_force: bool,
    },
    /// Compare two graphs.
    Cospectral {
        #[command(flatten)]
        input: GraphArgs,
        /// Also compare the complements.
        #[arg(long)]
        generalized: bool,
    },
    /// Canonical graph6 form.
    Canon {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// List all graphs of an order, or all edge patterns without isolated vertices.
    Enumerate {
        #[command(flatten)]
        size: EnumerateSize,
    },
    /// Cospectral classes of K_n minus every pattern with a given edge count.
    Survey {
        #[arg(long = "n", value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        deleted: usize,
        #[arg(long)]
        generalized: bool,
        /// Also write the summary, CSV and per-class graph6 lists here.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Search all graphs of the same order for spectral mates.
    DsVerify {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        generalized: bool,
    },
    /// Build graphs and cospectral pairs.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// All graphs whose eigenvalue -1 has multiplicity n - deficiency.
    MultiplicitySurvey {
        #[arg(long = "n", value_name = "N")]
        n: usize,
        #[arg(long, value_name = "D")]
        deficiency: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct EnumerateSize {
    #[arg(long, value_name = "N")]
    vertices: Option<usize>,
    #[arg(long, value_name = "M")]
    edges: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// A named family expression, e.g. 'kn_minus(7, union(star(4), complete(2)))'.
    Named { expr: String },
    /// Complement of one graph.
    Complement {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Join of two graphs.
    Join {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Disjoint union of two graphs.
    Union {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// G1 G2 H1 H2 -> (G1 v H1, G2 v H2).
    JoinPair {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// G1 G2 H1 H2 -> (G1 + H1, G2 + H2).
    UnionPair {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// G1 G2 -> (K_n \ G1, K_n \ G2).
    KnMinusPair {
        #[arg(long = "n", value_name = "N")]
        n: usize,
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Godsil-McKay switching with respect to a vertex set.
    GmSwitch {
        #[arg(long, value_name = "V,V,...", value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[command(flatten)]
        input: GraphArgs,
    },
    /// C6+K1 and S(2,2,2), each with a pendant path on ELL vertices.
    Figure1 {
        #[arg(long, value_name = "ELL", default_value_t = 0)]
        ell: usize,
    },
    /// P_{2m+1}+K1 and P_m+Y_{m+2}.
    PathMates {
        #[arg(long = "m", value_name = "M")]
        m: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Argument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Ctx<'a> {
    format: Format,
    quiet: bool,
    file: Option<PathBuf>,
    jobs: usize,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.out, "{}", s.as_ref())
    }

    fn json(&mut self, v: Value) -> io::Result<()> {
        writeln!(self.out, "{v}")
    }

    fn note(&mut self, s: impl AsRef<str>) -> io::Result<()> {
        if self.quiet {
            Ok(())
        } else {
            writeln!(self.err, "{}", s.as_ref())
        }
    }

    fn graphs(&self, args: &[String]) -> std::result::Result<Vec<Graph>, Failure> {
        let mut out = Vec::new();
        for a in args {
            out.push(from_graph6(a).map_err(|e| Failure::Domain(format!("graph6 '{a}': {e}")))?);
        }
        if let Some(path) = &self.file {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            out.extend(parse_list(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?);
        }
        Ok(out)
    }

    fn some_graphs(&self, args: &[String]) -> std::result::Result<Vec<Graph>, Failure> {
        let gs = self.graphs(args)?;
        if gs.is_empty() {
            return Err(Failure::Usage(
                "no input graphs (give graph6 arguments or --file)".into(),
            ));
        }
        Ok(gs)
    }

    fn exactly<const K: usize>(&self, args: &[String]) -> std::result::Result<[Graph; K], Failure> {
        let gs = self.graphs(args)?;
        let got = gs.len();
        gs.try_into()
            .map_err(|_| Failure::Usage(format!("expected exactly {K} graphs, got {got}")))
    }
}

/// Runs the program on `argv` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let jobs = cli
        .global
        .jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut ctx = Ctx {
        format: cli.global.format,
        quiet: cli.global.quiet,
        file: cli.global.file,
        jobs,
        out,
        err,
    };
    let result = dispatch(&mut ctx, cli.command).and_then(|()| Ok(ctx.out.flush()?));
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(ctx.err, "error: {e}");
            1
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Outcome {
    match command {
        Command::Spectrum {
            input,
            above,
            eigenvalue,
            walks,
        } => spectrum(ctx, &input.graphs, above.as_deref(), &eigenvalue, walks),
        Command::Invariants { input } => invariants(ctx, &input.graphs),
        Command::Counts { input, brute_force } => counts(ctx, &input.graphs, brute_force),
        Command::Cospectral { input, generalized } => cospectral(ctx, &input.graphs, generalized),
        Command::Canon { input } => canon(ctx, &input.graphs),
        Command::Enumerate { size } => enumerate(ctx, size),
        Command::Survey {
            n,
            deleted,
            generalized,
            out_dir,
        } => survey(ctx, n, deleted, mode(generalized), out_dir.as_deref()),
        Command::DsVerify { input, generalized } => ds(ctx, &input.graphs, mode(generalized)),
        Command::MultiplicitySurvey { n, deficiency } => multiplicity(ctx, n, deficiency),
        Command::Construct { what } => construct(ctx, what),
    }
}

fn mode(generalized: bool) -> Mode {
    if generalized {
        Mode::Generalized
    } else {
        Mode::Plain
    }
}

fn root_summary(p: &CharPoly) -> Vec<(String, usize)> {
    p.approximate_roots()
        .into_iter()
        .map(|(r, k)| {
            let i = r.round();
            if (r - i).abs() < 1e-6 && p.root_multiplicity(&BigInt::from(i as i64)) == k {
                (format!("{}", i as i64), k)
            } else {
                (format!("{r:.9}"), k)
            }
        })
        .collect()
}

fn spectrum(
    ctx: &mut Ctx<'_>,
    args: &[String],
    above: Option<&str>,
    eigenvalues: &[i64],
    walks: Option<usize>,
) -> Outcome {
    let q = match above {
        Some(text) => Some(
            parse_rational(text)
                .ok_or_else(|| Failure::Usage(format!("--above: not a rational number: '{text}'")))?,
        ),
        None => None,
    };
    if let Some(k) = walks {
        if k > MAX_WALK_LENGTH {
            return Err(Failure::Usage(format!(
                "--walks is at most {MAX_WALK_LENGTH}, got {k}"
            )));
        }
    }
    let graphs = ctx.some_graphs(args)?;
    if ctx.format == Format::Csv {
        let mut header = String::from("graph6,char_poly,roots");
        if let Some(q) = &q {
            header.push_str(&format!(",above_{q}"));
        }
        for l in eigenvalues {
            header.push_str(&format!(",mult_{l}"));
        }
        if walks.is_some() {
            header.push_str(",walks");
        }
        ctx.line(header)?;
    }
    for g in &graphs {
        let p = char_poly(g);
        let roots = root_summary(&p);
        let count = q.as_ref().map(|q| count_roots_greater_than(&p, q));
        let mults: Vec<usize> = eigenvalues
            .iter()
            .map(|&l| integer_eigenvalue_multiplicity(g, l))
            .collect();
        let walk_counts = match walks {
            Some(k) => Some(
                (0..=k)
                    .map(|j| closed_walks(g, j))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            None => None,
        };
        match ctx.format {
            Format::Text => {
                ctx.line(format!("{}  n={}", to_graph6(g), g.order()))?;
                ctx.line(format!("  char_poly: {p}"))?;
                let rs: Vec<String> = roots
                    .iter()
                    .map(|(r, k)| if *k > 1 { format!("{r} (x{k})") } else { r.clone() })
                    .collect();
                ctx.line(format!("  roots: {}", rs.join(", ")))?;
                if let (Some(q), Some(c)) = (&q, count) {
                    ctx.line(format!("  roots above {q}: {c}"))?;
                }
                for (l, k) in eigenvalues.iter().zip(&mults) {
                    ctx.line(format!("  mult({l}): {k}"))?;
                }
                if let Some(w) = &walk_counts {
                    let ws: Vec<String> = w.iter().map(u64::to_string).collect();
                    ctx.line(format!("  walks: {}", ws.join(" ")))?;
                }
            }
            Format::Json => {
                let mut v = json!({
                    "graph6": to_graph6(g),
                    "n": g.order(),
                    "char_poly": p.to_string(),
                    "roots": roots.iter().map(|(r, k)| json!({"value": r, "multiplicity": k})).collect::<Vec<_>>(),
                });
                if let (Some(q), Some(c)) = (&q, count) {
                    v["above"] = json!({"q": q.to_string(), "count": c});
                }
                if !eigenvalues.is_empty() {
                    v["multiplicities"] = eigenvalues
                        .iter()
                        .zip(&mults)
                        .map(|(l, k)| json!({"eigenvalue": l, "multiplicity": k}))
                        .collect();
                }
                if let Some(w) = &walk_counts {
                    v["walks"] = json!(w);
                }
                ctx.json(v)?;
            }
            Format::Csv => {
                let rs: Vec<String> = roots.iter().map(|(r, k)| format!("{r}:{k}")).collect();
                let mut row = format!("{},{},{}", to_graph6(g), p, rs.join(" "));
                if let Some(c) = count {
                    row.push_str(&format!(",{c}"));
                }
                for k in &mults {
                    row.push_str(&format!(",{k}"));
                }
                if let Some(w) = &walk_counts {
                    let ws: Vec<String> = w.iter().map(u64::to_string).collect();
                    row.push_str(&format!(",{}", ws.join(" ")));
                }
                ctx.line(row)?;
            }
        }
    }
    Ok(())
}

fn invariants(ctx: &mut Ctx<'_>, args: &[String]) -> Outcome {
    let graphs = ctx.some_graphs(args)?;
    if ctx.format == Format::Csv {
        ctx.line(format!(
            "graph6,{},complement_triangles,complement_4walks,one_positive_structure",
            InvariantProfile::CSV_HEADER
        ))?;
    }
    for g in &graphs {
        let prof = profile(g);
        let ct = complement_triangles(g);
        let cw = complement_4walks(g);
        let structure = structure_check_one_positive(g);
        match ctx.format {
            Format::Text => {
                ctx.line(to_graph6(g))?;
                ctx.line(format!(
                    "  n={} m={} t={} w4={} mult(-1)={}",
                    prof.n, prof.m, prof.t, prof.w4, prof.mult_minus1
                ))?;
                ctx.line(format!("  complement: t={ct} w4={cw}"))?;
                ctx.line(format!(
                    "  complete multipartite plus isolated vertices: {structure}"
                ))?;
            }
            Format::Json => ctx.json(json!({
                "graph6": to_graph6(g),
                "profile": prof,
                "complement_triangles": ct,
                "complement_4walks": cw,
                "one_positive_structure": structure,
            }))?,
            Format::Csv => ctx.line(format!(
                "{},{},{ct},{cw},{structure}",
                to_graph6(g),
                prof.csv_row()
            ))?,
        }
    }
    Ok(())
}

fn counts(ctx: &mut Ctx<'_>, args: &[String], brute: bool) -> Outcome {
    let graphs = ctx.some_graphs(args)?;
    if ctx.format == Format::Csv {
        ctx.line("graph6,m,m1,m2,m3,m4,t")?;
    }
    for g in &graphs {
        let c: SubgraphCounts = if brute {
            brute_force_counts(g)?
        } else {
            subgraph_counts(g)
        };
        match ctx.format {
            Format::Text => ctx.line(format!(
                "{}  m={} m1={} m2={} m3={} m4={} t={}",
                to_graph6(g),
                c.m,
                c.m1,
                c.m2,
                c.m3,
                c.m4,
                c.t
            ))?,
            Format::Json => ctx.json(json!({"graph6": to_graph6(g), "counts": c}))?,
            Format::Csv => ctx.line(format!(
                "{},{},{},{},{},{},{}",
                to_graph6(g),
                c.m,
                c.m1,
                c.m2,
                c.m3,
                c.m4,
                c.t
            ))?,
        }
    }
    Ok(())
}

fn cospectral(ctx: &mut Ctx<'_>, args: &[String], generalized: bool) -> Outcome {
    let [g, h] = ctx.exactly::<2>(args)?;
    let co = is_cospectral(&g, &h);
    let rco = generalized.then(|| is_r_cospectral(&g, &h));
    match ctx.format {
        Format::Text => {
            ctx.line(format!("cospectral: {co}"))?;
            if let Some(r) = rco {
                ctx.line(format!("r-cospectral: {r}"))?;
            }
        }
        Format::Json => {
            let mut v = json!({"left": to_graph6(&g), "right": to_graph6(&h), "cospectral": co});
            if let Some(r) = rco {
                v["r_cospectral"] = json!(r);
            }
            ctx.json(v)?;
        }
        Format::Csv => {
            if let Some(r) = rco {
                ctx.line("left,right,cospectral,r_cospectral")?;
                ctx.line(format!("{},{},{co},{r}", to_graph6(&g), to_graph6(&h)))?;
            } else {
                ctx.line("left,right,cospectral")?;
                ctx.line(format!("{},{},{co}", to_graph6(&g), to_graph6(&h)))?;
            }
        }
    }
    Ok(())
}

fn canon(ctx: &mut Ctx<'_>, args: &[String]) -> Outcome {
    let graphs = ctx.some_graphs(args)?;
    if ctx.format == Format::Csv {
        ctx.line("graph6,canonical,orbits")?;
    }
    let mut distinct = std::collections::BTreeSet::new();
    for g in &graphs {
        let lab = canonical_labeling(g);
        let canonical = to_graph6(&lab.form.to_graph());
        distinct.insert(canonical.clone());
        let orb = orbits(g.order(), &lab.generators);
        let orb_text: Vec<String> = orb.iter().map(usize::to_string).collect();
        match ctx.format {
            Format::Text => ctx.line(&canonical)?,
            Format::Json => ctx.json(json!({
                "graph6": to_graph6(g),
                "canonical": canonical,
                "orbits": orb,
            }))?,
            Format::Csv => ctx.line(format!("{},{canonical},{}", to_graph6(g), orb_text.join(" ")))?,
        }
    }
    ctx.note(format!(
        "{} graphs, {} isomorphism classes",
        graphs.len(),
        distinct.len()
    ))?;
    Ok(())
}

fn emit_graph(ctx: &mut Ctx<'_>, g: &Graph) -> io::Result<()> {
    match ctx.format {
        Format::Json => ctx.json(json!({"graph6": to_graph6(g)})),
        Format::Text | Format::Csv => ctx.line(to_graph6(g)),
    }
}

fn enumerate(ctx: &mut Ctx<'_>, size: EnumerateSize) -> Outcome {
    if ctx.format == Format::Csv {
        ctx.line("graph6")?;
    }
    let mut count = 0usize;
    match (size.vertices, size.edges) {
        (Some(n), _) => {
            for g in GraphStream::new(n)? {
                emit_graph(ctx, &g)?;
                count += 1;
            }
            ctx.note(format!("{count} graphs on {n} vertices"))?;
        }
        (None, Some(m)) => {
            for g in generate_by_edges(m)? {
                emit_graph(ctx, &g)?;
                count += 1;
            }
            ctx.note(format!("{count} graphs with {m} edges and no isolated vertices"))?;
        }
        (None, None) => unreachable!("clap requires one of --vertices, --edges"),
    }
    Ok(())
}

fn survey(ctx: &mut Ctx<'_>, n: usize, deleted: usize, mode: Mode, out_dir: Option<&Path>) -> Outcome {
    let report = survey_kn_minus(n, deleted, mode)?;
    match ctx.format {
        Format::Text => write!(ctx.out, "{}", report.summary())?,
        Format::Csv => write!(ctx.out, "{}", report.csv())?,
        Format::Json => {
            ctx.json(json!({
                "type": "summary",
                "n": report.n,
                "deleted": report.deleted,
                "mode": report.mode,
                "patterns": report.patterns,
                "skipped": report.skipped,
                "graphs": report.total_graphs(),
                "classes": report.classes.len(),
                "singleton": report.singleton_classes(),
                "nontrivial": report.nontrivial_classes(),
            }))?;
            for c in &report.classes {
                ctx.json(json!({
                    "type": "class",
                    "key_hash": c.key.short_hash(),
                    "key": c.key.to_string(),
                    "size": c.members.len(),
                    "members": c.members.iter().map(to_graph6).collect::<Vec<_>>(),
                }))?;
            }
        }
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("summary.txt"), report.summary())?;
        fs::write(dir.join("classes.csv"), report.csv())?;
        for (name, body) in report.class_files() {
            fs::write(dir.join(name), body)?;
        }
    }
    ctx.note(format!(
        "{} graphs, {} classes, {} nontrivial",
        report.total_graphs(),
        report.classes.len(),
        report.nontrivial_classes()
    ))?;
    Ok(())
}

fn ds(ctx: &mut Ctx<'_>, args: &[String], mode: Mode) -> Outcome {
    let targets = ctx.some_graphs(args)?;
    let results = ds_verify_many(&targets, mode, ctx.jobs)?;
    if ctx.format == Format::Csv {
        ctx.line("graph6,mate")?;
    }
    for (g, mates) in targets.iter().zip(&results) {
        let name = to_graph6(g);
        match ctx.format {
            Format::Text => {
                if mates.is_empty() {
                    ctx.line(format!("# {name}: no {mode} mates on {} vertices", g.order()))?;
                } else {
                    ctx.line(format!("# {name}: {} {mode} mate(s)", mates.len()))?;
                }
                for h in mates {
                    ctx.line(to_graph6(h))?;
                }
            }
            Format::Json => ctx.json(json!({
                "graph6": name,
                "mode": mode,
                "determined": mates.is_empty(),
                "mates": mates.iter().map(to_graph6).collect::<Vec<_>>(),
            }))?,
            Format::Csv => {
                for h in mates {
                    ctx.line(format!("{name},{}", to_graph6(h)))?;
                }
            }
        }
    }
    Ok(())
}

fn multiplicity(ctx: &mut Ctx<'_>, n: usize, deficiency: usize) -> Outcome {
    let found = multiplicity_survey(n, deficiency, ctx.jobs)?;
    let target = n.saturating_sub(deficiency);
    match ctx.format {
        Format::Text => {
            ctx.line(format!("# n={n} mult(-1)={target}: {} graphs", found.len()))?;
            for g in &found {
                ctx.line(to_graph6(g))?;
            }
        }
        Format::Json => {
            for g in &found {
                ctx.json(json!({"graph6": to_graph6(g), "n": n, "mult_minus1": target}))?;
            }
        }
        Format::Csv => {
            ctx.line("graph6,n,mult_minus1")?;
            for g in &found {
                ctx.line(format!("{},{n},{target}", to_graph6(g)))?;
            }
        }
    }
    ctx.note(format!("all {} graphs match the classification", found.len()))?;
    Ok(())
}

fn emit_pair(ctx: &mut Ctx<'_>, p: &CospectralPair) -> io::Result<()> {
    match ctx.format {
        Format::Text => ctx.line(p.to_string()),
        Format::Json => ctx.json(json!({
            "left": to_graph6(p.left()),
            "right": to_graph6(p.right()),
            "kind": p.kind(),
        })),
        Format::Csv => {
            ctx.line("left,right,kind")?;
            ctx.line(format!(
                "{},{},{}",
                to_graph6(p.left()),
                to_graph6(p.right()),
                p.kind()
            ))
        }
    }
}

fn r_pair(g: Graph, h: Graph) -> std::result::Result<CospectralPair, Failure> {
    Ok(CospectralPair::new(g, h, PairKind::ClaimedRCospectral)?)
}

fn construct(ctx: &mut Ctx<'_>, what: Construct) -> Outcome {
    let single = |ctx: &mut Ctx<'_>, g: Graph| -> Outcome {
        if ctx.format == Format::Csv {
            ctx.line("graph6")?;
        }
        Ok(emit_graph(ctx, &g)?)
    };
    match what {
        Construct::Named { expr } => {
            let family = parse_family(&expr).map_err(|e| Failure::Usage(format!("'{expr}': {e}")))?;
            single(ctx, make_named(&family)?)
        }
        Construct::Complement { input } => {
            let [g] = ctx.exactly::<1>(&input.graphs)?;
            single(ctx, g.complement())
        }
        Construct::Join { input } => {
            let [g, h] = ctx.exactly::<2>(&input.graphs)?;
            single(ctx, g.join(&h)?)
        }
        Construct::Union { input } => {
            let [g, h] = ctx.exactly::<2>(&input.graphs)?;
            single(ctx, g.disjoint_union(&h)?)
        }
        Construct::GmSwitch { set, input } => {
            let [g] = ctx.exactly::<1>(&input.graphs)?;
            single(ctx, gm_switch(&g, &set)?)
        }
        Construct::JoinPair { input } => {
            let [g1, g2, h1, h2] = ctx.exactly::<4>(&input.graphs)?;
            let p = join_pair(&r_pair(g1, g2)?, &r_pair(h1, h2)?)?;
            Ok(emit_pair(ctx, &p)?)
        }
        Construct::UnionPair { input } => {
            let [g1, g2, h1, h2] = ctx.exactly::<4>(&input.graphs)?;
            let p = union_pair(&r_pair(g1, g2)?, &r_pair(h1, h2)?)?;
            Ok(emit_pair(ctx, &p)?)
        }
        Construct::KnMinusPair { n, input } => {
            let [g1, g2] = ctx.exactly::<2>(&input.graphs)?;
            let p = kn_minus_pair(n, &r_pair(g1, g2)?)?;
            Ok(emit_pair(ctx, &p)?)
        }
        Construct::Figure1 { ell } => Ok(emit_pair(ctx, &figure1_family(ell)?)?),
        Construct::PathMates { m } => Ok(emit_pair(ctx, &path_mates(m)?)?),
    }
}
