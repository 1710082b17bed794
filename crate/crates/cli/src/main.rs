use std::collections::BTreeSet;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fourecc::graph::read_graph;
use fourecc::oracle::{generate, GenSpec, Model};
use fourecc::verify::{model_from_flags, verify, Candidate, Fast, ModelFlags, Outcome};
use fourecc::{all_3cuts, count_minimal_3cuts, cuts_with_rsize, four_ecc_general, is_4_edge_connected};
use fourecc::{MultiGraph, Partition};

#[derive(Parser)]
#[command(name = "fourecc", version, about = "Edge connectivity up to four for multigraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the 4-edge-connected components, one class per line.
    Components { input: String },
    /// List every 3-edge cut of a 3-edge-connected graph.
    Cuts { input: String },
    /// Count the minimal 3-edge cuts.
    #[command(name = "count-min3")]
    CountMin3 { input: String },
    /// Print `yes` if the graph is 4-edge-connected, `no` otherwise.
    Check4 { input: String },
    /// Compare the fast algorithms with the brute-force oracles.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 100)]
        iters: usize,
        /// Test hook: run the harness against a broken candidate.
        #[arg(long, hide = true)]
        inject_bug: bool,
    },
    /// Print a generated graph.
    Gen {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Time the full decomposition on random 3-edge-connected graphs with m = 2n.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// complete, cycle, theta, prism, wheel, twin_k5, random_3ec, random_general or grid.
    #[arg(long, default_value = "random_3ec")]
    model: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra random chords for random_3ec (default n/2).
    #[arg(long)]
    extra: Option<usize>,
    /// Edge count for random_general (default 2n).
    #[arg(long)]
    m: Option<usize>,
    /// Columns for grid (default n).
    #[arg(long)]
    cols: Option<usize>,
}

impl ModelArgs {
    fn model(&self) -> Result<Model, String> {
        let flags = ModelFlags { name: self.model.clone(), n: self.n, extra: self.extra, m: self.m, cols: self.cols };
        model_from_flags(&flags).map_err(|e| e.to_string())
    }
}

/// Drops one cut whenever there is any.
struct Broken;

impl Candidate for Broken {
    fn three_cuts(&self, g: &MultiGraph) -> fourecc::Result<BTreeSet<[usize; 3]>> {
        let mut s = Fast.three_cuts(g)?;
        s.pop_first();
        Ok(s)
    }
    fn four_ecc(&self, g: &MultiGraph) -> Partition {
        Fast.four_ecc(g)
    }
    fn count_min3(&self, g: &MultiGraph) -> u128 {
        Fast.count_min3(g)
    }
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Components { input } => {
            let g = read_graph(&input)?;
            for class in four_ecc_general(&g).classes() {
                let line: Vec<String> = class.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Cmd::Cuts { input } => {
            let g = read_graph(&input)?;
            for (c, r) in cuts_with_rsize(&g)? {
                let [a, b, d] = c.edges;
                writeln!(out, "{a} {b} {d} type={} rsize={r}", c.kind())?;
            }
        }
        Cmd::CountMin3 { input } => {
            let g = read_graph(&input)?;
            writeln!(out, "{}", count_minimal_3cuts(&g))?;
        }
        Cmd::Check4 { input } => {
            let g = read_graph(&input)?;
            writeln!(out, "{}", if is_4_edge_connected(&g) { "yes" } else { "no" })?;
        }
        Cmd::Verify { model, iters, inject_bug } => {
            let m = model.model()?;
            let cand: &dyn Candidate = if inject_bug { &Broken } else { &Fast };
            match verify(cand, m, iters, model.seed)? {
                Outcome::Ok(k) => writeln!(out, "ok {k}")?,
                Outcome::Mismatch(x) => {
                    // Comment lines keep the output a readable graph file.
                    writeln!(out, "# mismatch at iteration {} (seed {})", x.iteration, x.seed)?;
                    writeln!(out, "# {}", x.what)?;
                    write!(out, "{}", x.graph.to_text())?;
                    out.flush()?;
                    return Err(Failure::Mismatch);
                }
            }
        }
        Cmd::Gen { model } => {
            let g = generate(&GenSpec { model: model.model()?, seed: model.seed })?;
            write!(out, "{}", g.to_text())?;
        }
        Cmd::Bench { sizes, seed } => {
            if sizes.iter().any(|&n| n < 4) {
                return Err(Failure::Usage("--sizes entries must be at least 4".into()));
            }
            if sizes.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Failure::Usage("--sizes must be strictly ascending".into()));
            }
            writeln!(out, "n,m,cuts,millis")?;
            for n in sizes {
                let g = generate(&GenSpec { model: Model::Random3ec { n, extra: n / 2 }, seed })?;
                let start = Instant::now();
                let p = four_ecc_general(&g);
                let millis = start.elapsed().as_millis();
                std::hint::black_box(p);
                let cuts = all_3cuts(&g)?.len();
                writeln!(out, "{n},{},{cuts},{millis}", g.m())?;
                out.flush()?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Mismatch), _) => ExitCode::from(2),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
