//! `vmr`: census runs, orbit tools, certificates and tables.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use vmr::bounds::{bound_table, BoundRow};
use vmr::classifier::{classify_stream, numbered, ClassifyOptions, PhaseCounts};
use vmr::codec::{encode, Graph6Code, Graph6Reader};
use vmr::generator::{generate_level, GenOptions, DESK_MAX_ORDER};
use vmr::invariants::{char_poly, format_degree_sequence, InvariantRecord, CHAR_POLY_MAX_ORDER};
use vmr::orbit::{make_certificate, verify_certificate, Certificate, OrbitExplorer};
use vmr::par::Execution;
use vmr::structure::{
    find_induced_pattern_in_orbit, identify_named, lc_class_partition, ObstructionPattern,
};
use vmr::{Error, Graph};

/// Orders whose classification is a long run.
const LONG_RUN_CLASSIFY_ORDER: usize = 11;

#[derive(Parser)]
#[command(name = "vmr", version, about = "Vertex-minor Ramsey census tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a census of graphs into phases P1, P2, P3 and P3_BUDGETED.
    Classify(ClassifyArgs),
    /// Orbit statistics or the full member list of one graph.
    Orbit(OrbitArgs),
    /// Write a certificate that no orbit member has an independent k-set.
    Certify(CertifyArgs),
    /// Recompute a certificate and compare.
    Verify(VerifyArgs),
    /// Print one graph per isomorphism class on n vertices.
    Gen(GenArgs),
    /// Invariant table, LC classes and obstruction search for given graphs.
    Analyze(AnalyzeArgs),
    /// Lower and upper bound table.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

#[derive(Args)]
struct ParallelArgs {
    /// Worker threads (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

impl ParallelArgs {
    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }

    /// Runs `f` inside a pool of the requested size.
    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
        #[cfg(feature = "parallel")]
        if let Some(w) = self.workers {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w as usize)
                .build()
                .context("building worker pool")?;
            return Ok(pool.install(f));
        }
        #[cfg(not(feature = "parallel"))]
        if self.workers.is_some_and(|w| w > 1) {
            eprintln!("warning: built without the parallel feature; running sequentially");
        }
        Ok(f())
    }
}

#[derive(Args)]
struct ClassifyArgs {
    /// Target size of the edgeless vertex-minor.
    #[arg(long)]
    k: usize,
    /// Maximum orbit members tested per graph.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    /// graph6 input file, or `-` for standard input.
    #[arg(long, default_value = "-", conflicts_with = "n_from_gen")]
    input: PathBuf,
    /// Classify the internal census of order N instead of reading input.
    #[arg(long, value_name = "N")]
    n_from_gen: Option<usize>,
    /// Write the codes of Phase-3 graphs (including budgeted ones) here.
    #[arg(long, value_name = "PATH")]
    emit_phase3: Option<PathBuf>,
    /// Write full Phase-3 records (code, phase, explored, max_alpha) here.
    #[arg(long, value_name = "PATH")]
    emit_records: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Acknowledge a long run (generation at n >= 10, classification at n >= 11).
    #[arg(long)]
    long_run_ack: bool,
    /// Decide disconnected graphs from the orbits of their components.
    #[arg(long)]
    fast_path_disconnected: bool,
    #[command(flatten)]
    par: ParallelArgs,
}

#[derive(Args)]
struct OrbitArgs {
    /// graph6 code of the root graph.
    code: String,
    /// Print orbit size and largest independence number (default).
    #[arg(long, conflicts_with = "list")]
    stats: bool,
    /// Print every member in BFS order as graph6.
    #[arg(long)]
    list: bool,
    /// Also run the search for an independent k-set.
    #[arg(long)]
    k: Option<usize>,
    /// Maximum members enumerated or tested.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
}

#[derive(Args)]
struct CertifyArgs {
    code: String,
    #[arg(long)]
    k: usize,
    /// Certificate file (default: standard output).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    certificate: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Connected graphs only.
    #[arg(long)]
    connected: bool,
    /// Acknowledge a long run (n = 10).
    #[arg(long)]
    long_run_ack: bool,
    #[command(flatten)]
    par: ParallelArgs,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 codes to analyze.
    codes: Vec<String>,
    /// Add the join of two 5-cycles to the list.
    #[arg(long)]
    c5_join_c5: bool,
    /// Skip LC-class and obstruction columns, which enumerate whole orbits.
    #[arg(long)]
    no_orbit: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 9)]
    k_max: usize,
}

/// A failure with its exit status.
struct Failure {
    status: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            status: 2,
            error: e.into(),
        }
    }
}

fn verification_failure(error: anyhow::Error) -> Failure {
    Failure { status: 1, error }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Bounds(a) => cmd_bounds(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.status)
        }
    }
}

fn parse_code(s: &str) -> anyhow::Result<Graph6Code> {
    Graph6Code::new(s).with_context(|| format!("invalid graph6 code {s:?}"))
}

fn open_input(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn gen_options(n: usize, long_run_ack: bool, execution: Execution) -> anyhow::Result<GenOptions> {
    if n > DESK_MAX_ORDER && !long_run_ack {
        bail!("generating order {n} is a long run; pass --long-run-ack to proceed");
    }
    Ok(GenOptions {
        long_run: long_run_ack,
        execution,
    })
}

fn cmd_classify(a: ClassifyArgs) -> CmdResult {
    let start = Instant::now();
    let opts = ClassifyOptions {
        budget: a.budget.map(|b| b as usize),
        disconnected_fast_path: a.fast_path_disconnected,
        execution: a.par.execution(),
    };
    let mut phase3 = a.emit_phase3.as_deref().map(create).transpose()?;
    let mut records = a.emit_records.as_deref().map(create).transpose()?;
    let k = a.k;
    let ack = a.long_run_ack;

    let counts: PhaseCounts = a.par.install(|| -> anyhow::Result<PhaseCounts> {
        let mut sink = |r: &vmr::classifier::PhaseRecord| -> vmr::Result<()> {
            if let Some(w) = phase3.as_mut() {
                writeln!(w, "{}", r.code)?;
            }
            if let Some(w) = records.as_mut() {
                writeln!(w, "{r}")?;
            }
            Ok(())
        };
        let counts = match a.n_from_gen {
            Some(n) => {
                let level = generate_level(n, gen_options(n, ack, opts.execution)?)?;
                eprintln!(
                    "generated {} graphs on {n} vertices in {:.2?}",
                    level.emitted(),
                    start.elapsed()
                );
                classify_stream(numbered(level.graphs()), k, &opts, &mut sink)?
            }
            None => {
                let reader = Graph6Reader::new(open_input(&a.input)?).map(|item| {
                    let (line, g) = item?;
                    if g.order() >= LONG_RUN_CLASSIFY_ORDER && !ack {
                        return Err(Error::Line {
                            line,
                            source: Box::new(Error::LongRunRequired(g.order())),
                        });
                    }
                    Ok((line, g))
                });
                classify_stream(reader, k, &opts, &mut sink)?
            }
        };
        Ok(counts)
    })??;

    for w in [phase3.as_mut(), records.as_mut()].into_iter().flatten() {
        w.flush()?;
    }
    let mut out = io::stdout().lock();
    match a.format {
        Format::Tsv => {
            writeln!(out, "{}", PhaseCounts::TSV_HEADER)?;
            writeln!(out, "{}", counts.tsv_row())?;
        }
        Format::Text => writeln!(out, "{counts}")?,
    }
    eprintln!(
        "classified {} graphs in {:.2?}",
        counts.total,
        start.elapsed()
    );
    Ok(())
}

fn cmd_orbit(a: OrbitArgs) -> CmdResult {
    let code = parse_code(&a.code)?;
    let g = code.decode();
    let budget = a.budget.map(|b| b as usize);
    let mut explorer = OrbitExplorer::new();
    let mut out = BufWriter::new(io::stdout().lock());
    if a.list {
        for m in &explorer.enumerate(&g, budget).members {
            writeln!(out, "{}", encode(m))?;
        }
        out.flush()?;
        return Ok(());
    }
    let orbit = explorer.enumerate(&g, budget);
    let max_alpha = orbit
        .members
        .iter()
        .map(vmr::invariants::independence_number)
        .max()
        .expect("an orbit contains its root");
    writeln!(out, "code\torbit_size\ttruncated\tmax_alpha")?;
    writeln!(
        out,
        "{code}\t{}\t{}\t{max_alpha}",
        orbit.members.len(),
        orbit.truncated
    )?;
    if let Some(k) = a.k {
        let s = explorer.search(&g, k, budget)?;
        writeln!(out, "k\toutcome\texplored\tmax_alpha_seen")?;
        writeln!(
            out,
            "{k}\t{}\t{}\t{}",
            s.outcome, s.explored, s.max_alpha_seen
        )?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_certify(a: CertifyArgs) -> CmdResult {
    let code = parse_code(&a.code)?;
    let cert = match make_certificate(&code, a.k) {
        Ok(c) => c,
        Err(e @ Error::WitnessExists { .. }) => return Err(verification_failure(e.into())),
        Err(e) => return Err(e.into()),
    };
    match a.output {
        Some(path) => {
            let mut w = create(&path)?;
            write!(w, "{cert}")?;
            w.flush()?;
        }
        None => print!("{cert}"),
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let text = std::fs::read_to_string(&a.certificate)
        .with_context(|| format!("reading {}", a.certificate.display()))?;
    let cert: Certificate = text
        .parse()
        .with_context(|| format!("parsing {}", a.certificate.display()))?;
    match verify_certificate(&cert) {
        Ok(()) => {
            println!(
                "ok\t{}\tk={}\torbit_size={}",
                cert.code, cert.k, cert.orbit_size
            );
            Ok(())
        }
        Err(m) => Err(verification_failure(anyhow::Error::new(m))),
    }
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let opts = gen_options(a.n, a.long_run_ack, a.par.execution())?;
    let level = a.par.install(|| generate_level(a.n, opts))??;
    let mut out = BufWriter::new(io::stdout().lock());
    for g in level.graphs().filter(|g| !a.connected || g.is_connected()) {
        writeln!(out, "{}", encode(&g))?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs) -> CmdResult {
    let mut codes = a
        .codes
        .iter()
        .map(|s| parse_code(s))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if a.c5_join_c5 {
        let c5 = Graph::cycle(5)?;
        codes.push(encode(&c5.join(&c5)?));
    }
    if codes.is_empty() {
        return Err(anyhow::anyhow!("no graphs given").into());
    }
    let partition = (!a.no_orbit).then(|| lc_class_partition(&codes));
    let patterns = ObstructionPattern::all();

    let mut out = BufWriter::new(io::stdout().lock());
    write!(
        out,
        "code\tn\tedges\talpha\tomega\tchi\tdiameter\tgirth\tdegree_sequence\tconnected\tnamed\tchar_poly\tlc_class"
    )?;
    for p in &patterns {
        write!(out, "\t{}", p.name)?;
    }
    writeln!(out)?;
    for code in &codes {
        let g = code.decode();
        let r = InvariantRecord::of(&g);
        let named: Vec<String> = identify_named(&g).iter().map(ToString::to_string).collect();
        let named = if named.is_empty() {
            "-".to_string()
        } else {
            named.join(",")
        };
        let poly = if g.order() <= CHAR_POLY_MAX_ORDER {
            char_poly(&g)?.to_string()
        } else {
            "-".to_string()
        };
        let class = partition
            .as_ref()
            .and_then(|p| p.class_of(code))
            .map_or_else(|| "-".to_string(), |c| (c + 1).to_string());
        write!(
            out,
            "{code}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{named}\t{poly}\t{class}",
            r.order,
            r.edge_count,
            r.alpha,
            r.omega,
            r.chi,
            r.diameter,
            r.girth,
            format_degree_sequence(&r.degree_sequence),
            r.connected
        )?;
        for p in &patterns {
            let cell = if a.no_orbit {
                "-".to_string()
            } else {
                match find_induced_pattern_in_orbit(&g, p) {
                    Some(w) => format!("member {}: {}", w.index, w.vertices),
                    None => "none".to_string(),
                }
            };
            write!(out, "\t{cell}")?;
        }
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_bounds(a: BoundsArgs) -> CmdResult {
    let rows = bound_table(a.k_max)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", BoundRow::TSV_HEADER)?;
    for r in rows {
        writeln!(out, "{}", r.tsv_row())?;
    }
    Ok(())
}
