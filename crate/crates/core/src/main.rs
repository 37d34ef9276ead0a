use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use brooks::bench::{bench, write_csv};
use brooks::dimacs::{emit_colouring, parse_colouring, parse_dimacs, write_dimacs};
use brooks::generate::Family;
use brooks::{brooks_bound, brooks_colour, verify_colouring, Graph};

/// Brooks colouring of DIMACS graphs in linear time.
#[derive(Parser)]
#[command(name = "brooks", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a DIMACS graph with at most Δ colours (Δ+1 for complete graphs and odd cycles).
    Color {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a colouring file against a graph and its Brooks bound.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Generate a graph: cycle N | complete N | split N | random N M |
    /// block-chain K S | theta P Q R | petersen.
    Gen {
        kind: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time Brooks colouring on random connected graphs with m = 3n.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: PathBuf,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_dimacs(BufReader::new(file))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn output(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Color { graph, out } => {
            let g = read_graph(&graph)?;
            let result = brooks_colour(&g);
            let bound = brooks_bound(&g);
            let violations = verify_colouring(&g, &result.colouring, Some(bound));
            if let Some(v) = violations.first() {
                return Err(Failure::Verification(v.to_string()));
            }
            let mut w = output(out.as_deref())?;
            emit_colouring(&result.colouring, &mut w)?;
            w.flush()?;
            for c in &result.components {
                eprintln!(
                    "component at vertex {}: {} vertices, {} edges, {:?}, delta {}, {} colours (bound {})",
                    c.first_vertex + 1,
                    c.vertices,
                    c.edges,
                    c.kind,
                    c.max_degree,
                    c.colours_used,
                    c.bound
                );
            }
        }
        Command::Verify { graph, colouring } => {
            let g = read_graph(&graph)?;
            let file = File::open(&colouring)
                .map_err(|e| Failure::Input(format!("{}: {e}", colouring.display())))?;
            let c = parse_colouring(BufReader::new(file), g.n())
                .map_err(|e| Failure::Input(format!("{}: {e}", colouring.display())))?;
            let bound = brooks_bound(&g);
            let violations = verify_colouring(&g, &c, Some(bound));
            if !violations.is_empty() {
                let lines: Vec<_> = violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::Verification(lines.join("\n")));
            }
            println!("ok: {} colours, bound {bound}", c.num_colours());
        }
        Command::Gen {
            kind,
            params,
            seed,
            out,
        } => {
            let g = Family::parse(&kind, &params)?.generate(seed)?;
            let mut w = output(out.as_deref())?;
            write_dimacs(&g, &mut w)?;
            w.flush()?;
        }
        Command::Bench {
            sizes,
            repeats,
            seed,
            csv,
        } => {
            let records = bench(&sizes, repeats, seed)?;
            for r in &records {
                eprintln!(
                    "n={} m={} build={}ns colour={}ns colours={} delta={}",
                    r.n, r.m, r.build_ns, r.colour_ns, r.colours, r.delta
                );
            }
            let mut w = output(Some(&csv))?;
            write_csv(&records, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
