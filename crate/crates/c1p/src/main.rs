//! Command-line front end. Exit codes: 0 success (including "C1P" results),
//! 1 "not C1P" from `check` (and harness failures), 2 usage or input errors,
//! 3 certificate verification failures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use c1p::bounds::{reproduce_table, stress_bound};
use c1p::certify::{
    parse_certificate, serialize_certificate, shortest_odd_cycle, verify_forcing_path,
    verify_odd_cycle, Certificate,
};
use c1p::graph::{
    build_forcing_graph, build_incompatibility_graph, forcing_to_dot, incompat_to_dot, is_bipartite,
    Bipartiteness,
};
use c1p::matrix::{BinaryMatrix, DEFAULT_ORACLE_CAP};
use c1p::pattern::{tucker_pattern, TuckerKind};
use c1p::tucker::find_tucker;

#[derive(Parser)]
#[command(name = "c1p", about = "Certifying tools for the consecutive ones property", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphChoice {
    Incompat,
    Forcing,
}

#[derive(Subcommand)]
enum Command {
    /// Decide C1P; prints a witness permutation or a shortest odd cycle
    Check { file: PathBuf },
    /// Emit a shortest odd-cycle certificate for a non-C1P matrix
    Certify {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate a Tucker pattern submatrix in a non-C1P matrix
    Tucker { file: PathBuf },
    /// Print a canonical Tucker pattern in matrix file format
    Gen {
        kind: String,
        k: Option<usize>,
    },
    /// Verify a certificate file against a matrix file
    Verify { file: PathBuf, cert: PathBuf },
    /// Reproduce the golden bound table over a range of k
    Bounds {
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Random-matrix stress test of the odd-cycle bound
    Stress {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Write either graph of a matrix as DOT
    ExportGraph {
        file: PathBuf,
        #[arg(long)]
        graph: GraphChoice,
        #[arg(long)]
        dot: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_matrix(path: &PathBuf) -> anyhow::Result<BinaryMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(BinaryMatrix::parse(&text)?)
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Check { file } => {
            let m = read_matrix(&file)?;
            let g = build_incompatibility_graph(&m);
            match is_bipartite(&g) {
                Bipartiteness::TwoColoring(_) => {
                    if m.cols() <= DEFAULT_ORACLE_CAP {
                        let p = m
                            .brute_force_c1p()?
                            .expect("bipartite implies a C1P ordering exists");
                        println!("C1P");
                        println!("witness permutation: {p}");
                    } else {
                        println!("C1P (bipartite); witness omitted, n > {DEFAULT_ORACLE_CAP}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Bipartiteness::OddClosedWalk(_) => {
                    let cycle = shortest_odd_cycle(&g).expect("non-bipartite");
                    println!("not C1P");
                    let verts: Vec<String> =
                        cycle.vertices.iter().map(|v| v.to_string()).collect();
                    println!("odd cycle (length {}): {}", cycle.len(), verts.join(" "));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Certify { file, out } => {
            let m = read_matrix(&file)?;
            let g = build_incompatibility_graph(&m);
            match shortest_odd_cycle(&g) {
                None => {
                    println!("C1P; no certificate");
                    Ok(ExitCode::SUCCESS)
                }
                Some(cycle) => {
                    let text = serialize_certificate(&Certificate::OddCycle(cycle));
                    write_or_print(&out, &text)?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Tucker { file } => {
            let m = read_matrix(&file)?;
            let found = find_tucker(&m)?;
            print!("{}", found.report());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { kind, k } => {
            let kind = TuckerKind::from_name(&kind, k)?;
            print!("{}", tucker_pattern(kind)?.serialize());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, cert } => {
            let m = read_matrix(&file)?;
            let text = fs::read_to_string(&cert)
                .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", cert.display()))?;
            let outcome = match parse_certificate(&text, m.cols())? {
                Certificate::OddCycle(c) => verify_odd_cycle(&m, &c)
                    .map(|()| format!("VALID: odd cycle of length {}", c.len())),
                Certificate::ForcingPath(p) => verify_forcing_path(&m, &p)
                    .map(|()| format!("VALID: forcing path with {} vertices", p.len())),
            };
            match outcome {
                Ok(msg) => {
                    println!("{msg}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(violation) => {
                    println!("INVALID: {violation}");
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Bounds { kmin, kmax, csv } => {
            let report = reproduce_table(kmin, kmax)?;
            if csv {
                print!("{}", report.render_csv());
            } else {
                print!("{}", report.render_table());
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Stress {
            rows,
            cols,
            density,
            trials,
            seed,
        } => {
            let report = stress_bound(trials, rows, cols, density, seed)?;
            print!("{}", report.render());
            Ok(if report.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ExportGraph { file, graph, dot } => {
            let m = read_matrix(&file)?;
            let text = match graph {
                GraphChoice::Incompat => incompat_to_dot(&build_incompatibility_graph(&m)),
                GraphChoice::Forcing => forcing_to_dot(&build_forcing_graph(&m)),
            };
            fs::write(&dot, text)
                .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", dot.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
