//! `boxcube`: analyze graphs, build and check cube representations, and run
//! the tightness sweeps.
//!
//! Exit codes: 0 success, 1 a representation does not match its graph,
//! 2 bad input or arguments.

use std::fmt::Display;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boxcube::families::random_graph;
use boxcube::interval::compare_graphs;
use boxcube::invariants::chromatic_number;
use boxcube::io::detect_format;
use boxcube::{
    adiga_upper_bound, construct_cube_representation, diameter, exact_independence_number,
    known_boxicity, known_cubicity, parse_graph, theorem_upper_bound, tightness_experiment,
    volume_lower_bound, BoxSource, ColoringSource, ConstructOptions, Format, Graph, Rational,
    RepresentationDoc, Verdict, DEFAULT_ORACLE_LIMIT, TIGHTNESS_CSV_HEADER,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "boxcube", version, about = "Boxicity and cubicity toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants, exact box/cub where feasible, and the bounds.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        limit: OracleLimit,
    },
    /// Build a cube representation and write it with its report as JSON.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = ColoringArg::Exact)]
        coloring: ColoringArg,
        #[arg(long, value_enum, default_value_t = BoxRepArg::Oracle)]
        boxrep: BoxRepArg,
        /// Box representation JSON, required with `--boxrep file`.
        #[arg(long)]
        boxrep_file: Option<PathBuf>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limit: OracleLimit,
    },
    /// Check a representation file against a graph.
    Verify {
        representation: PathBuf,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print a CSV sweep.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for stdin.
    graph: String,
    /// Input format; guessed from the content when absent.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
}

#[derive(Args)]
struct OracleLimit {
    /// Largest vertex count handed to the exact oracles.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    max_n: usize,
    /// Run the exact oracles whatever the vertex count.
    #[arg(long)]
    force: bool,
}

impl OracleLimit {
    fn for_graph(&self, g: &Graph) -> usize {
        if self.force {
            self.max_n.max(g.n())
        } else {
            self.max_n
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ColoringArg {
    Exact,
    Greedy,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoxRepArg {
    Oracle,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    /// Balanced complete k-partite graphs.
    Tk,
    /// Seeded G(n, p) samples.
    Random,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: BenchFamily,
    /// Part count for `tk`.
    #[arg(long)]
    k: Option<usize>,
    /// Vertex counts, comma separated (`random` takes one).
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[command(flatten)]
    limit: OracleLimit,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: boxcube::Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_text(&input.graph)?;
    let format = input.format.unwrap_or_else(|| detect_format(&text));
    parse_graph(&text, format).map_err(|e| usage(format!("{}: {e}", input.graph)))
}

/// Reads a representation, either bare or wrapped as `construct` writes it.
fn read_doc(path: &Path) -> Result<RepresentationDoc, Failure> {
    let fail = |e: &dyn Display| usage(format!("{}: {e}", path.display()));
    let text = std::fs::read_to_string(path).map_err(|e| fail(&e))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| fail(&e))?;
    let text = match value.get("representation") {
        Some(inner) => inner.to_string(),
        None => text,
    };
    RepresentationDoc::from_json(&text).map_err(|e| fail(&e))
}

fn print_diff(verdict: &Verdict) {
    if let Verdict::Mismatch { missing, extra } = verdict {
        for (u, v) in missing {
            eprintln!("missing {u} {v}");
        }
        for (u, v) in extra {
            eprintln!("extra {u} {v}");
        }
    }
}

fn analyze(input: &GraphInput, limit: &OracleLimit) -> Outcome {
    let g = read_graph(input)?;
    let max_n = limit.for_graph(&g);
    let alpha = exact_independence_number(&g);
    let chi = chromatic_number(&g);
    let d = diameter(&g);

    let mut out = Map::new();
    out.insert("n".into(), json!(g.n()));
    out.insert("m".into(), json!(g.edge_count()));
    out.insert("alpha".into(), json!(alpha));
    out.insert("chi".into(), json!(chi));
    out.insert("diameter".into(), json!(d.value));
    out.insert("connected".into(), json!(d.connected));
    let b = match known_boxicity::<Rational>(&g, max_n) {
        Ok((b, _)) => {
            out.insert("box".into(), json!(b));
            Some(b)
        }
        Err(e) => {
            out.insert("box_omitted".into(), json!(e.to_string()));
            None
        }
    };
    match known_cubicity::<Rational>(&g, max_n) {
        Ok((k, _)) => out.insert("cub".into(), json!(k)),
        Err(e) => out.insert("cub_omitted".into(), json!(e.to_string())),
    };
    out.insert("volume_lb".into(), json!(volume_lower_bound(&g)));
    if let Some(b) = b {
        out.insert(
            "theorem_bound".into(),
            json!(theorem_upper_bound(chi, alpha, b)),
        );
        out.insert("adiga_bound".into(), json!(adiga_upper_bound(alpha, b)));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&Value::Object(out)).expect("json")
    );
    Ok(ExitCode::SUCCESS)
}

fn construct(
    input: &GraphInput,
    coloring: ColoringArg,
    boxrep: BoxRepArg,
    boxrep_file: Option<&Path>,
    out: Option<&Path>,
    limit: &OracleLimit,
) -> Outcome {
    let g = read_graph(input)?;
    let box_rep = match (boxrep, boxrep_file) {
        (BoxRepArg::Oracle, None) => BoxSource::Oracle,
        (BoxRepArg::File, Some(path)) => BoxSource::Given(read_doc(path)?.to_box().map_err(usage)?),
        (BoxRepArg::File, None) => return Err(usage("--boxrep file needs --boxrep-file")),
        (BoxRepArg::Oracle, Some(_)) => return Err(usage("--boxrep-file needs --boxrep file")),
    };
    let options = ConstructOptions::<Rational> {
        coloring: match coloring {
            ColoringArg::Exact => ColoringSource::Exact,
            ColoringArg::Greedy => ColoringSource::Greedy,
        },
        box_rep,
        oracle_limit: limit.for_graph(&g),
        ..Default::default()
    };
    let (cube, report) = construct_cube_representation(&g, &options).map_err(usage)?;
    let doc = RepresentationDoc::from_cube(&cube);
    let text = json!({ "representation": doc, "report": report }).to_string();
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    if report.verified {
        Ok(ExitCode::SUCCESS)
    } else {
        print_diff(&compare_graphs(&cube.graph(), &g));
        Ok(ExitCode::from(1))
    }
}

fn verify(representation: &Path, input: &GraphInput) -> Outcome {
    let doc = read_doc(representation)?;
    let g = read_graph(input)?;
    if doc.n != g.n() {
        return Err(usage(format!(
            "representation has {} vertices, graph has {}",
            doc.n,
            g.n()
        )));
    }
    let rep = doc.to_box().map_err(usage)?;
    let verdict = compare_graphs(&rep.graph(), &g);
    if verdict.is_equal() {
        println!("equal");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("mismatch");
        print_diff(&verdict);
        Ok(ExitCode::from(1))
    }
}

fn bench(args: &BenchArgs) -> Outcome {
    match args.family {
        BenchFamily::Tk => {
            let k = args.k.ok_or_else(|| usage("--family tk needs --k"))?;
            let rows = args
                .n
                .iter()
                .map(|&n| tightness_experiment(k, n).map(|r| r.csv_row()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?;
            println!("{TIGHTNESS_CSV_HEADER}");
            for row in rows {
                println!("{row}");
            }
        }
        BenchFamily::Random => {
            let &[n] = args.n.as_slice() else {
                return Err(usage("--family random takes a single --n"));
            };
            if !(0.0..=1.0).contains(&args.p) {
                return Err(usage(format!("--p {} is not a probability", args.p)));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut rows = Vec::with_capacity(args.count);
            for _ in 0..args.count {
                let g = random_graph(n, args.p, &mut rng);
                rows.push(random_row(&g, args.limit.for_graph(&g))?);
            }
            println!("# seed={} p={}", args.seed, args.p);
            println!("{TIGHTNESS_CSV_HEADER}");
            for row in rows {
                println!("{row}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// `k` is χ and the cubicity column is exact; the ratio is left empty when
/// the cubicity is 0.
fn random_row(g: &Graph, max_n: usize) -> Result<String, Failure> {
    let options = ConstructOptions::<Rational> {
        oracle_limit: max_n,
        ..Default::default()
    };
    let (_, report) = construct_cube_representation(g, &options).map_err(usage)?;
    let (cub, _) = known_cubicity::<Rational>(g, max_n).map_err(usage)?;
    let ratio = if cub == 0 {
        String::new()
    } else {
        format!("{:.6}", report.theorem_bound as f64 / cub as f64)
    };
    Ok(format!(
        "{},{},{},{},{},{}",
        report.chi_used,
        g.n(),
        cub,
        report.total_dims,
        report.theorem_bound,
        ratio
    ))
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { input, limit } => analyze(input, limit),
        Command::Construct {
            input,
            coloring,
            boxrep,
            boxrep_file,
            out,
            limit,
        } => construct(
            input,
            *coloring,
            *boxrep,
            boxrep_file.as_deref(),
            out.as_deref(),
            limit,
        ),
        Command::Verify {
            representation,
            input,
        } => verify(representation, input),
        Command::Bench(args) => bench(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
