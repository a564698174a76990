//! Command-line front end: count maximum independent sets, generate
//! extremal families, enumerate trees, run the verifiers, and execute the
//! symmetrization procedure.
//!
//! Exit codes: 0 on success (and zero violations), 2 when a verifier
//! finds any violation or characterization mismatch, 1 on usage or input
//! errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use misx::codec::{graph6_decode, graph6_encode};
use misx::count::{conditional_count_tree, count_mis_exact, count_mis_tree};
use misx::enumerate::enumerate_trees;
use misx::family::{FamilySpec, P3Policy};
use misx::turan::{turan_complement, turan_graph};
use misx::verify::{
    figure1_check, verify_corollary1, verify_theorem1, verify_theorem2, verify_theorem3,
    verify_theorem4, VerifyReport,
};
use misx::zykov::zykov_symmetrize;

#[derive(Parser)]
#[command(name = "misx", version, about = "Exact workbench for maximum independent set counts")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    SubdividedStar,
    Caterpillar,
    P3Tree,
    Turan,
    TuranComplement,
    MixedExtremal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    T1,
    #[value(name = "2")]
    T2,
    #[value(name = "3")]
    T3,
    #[value(name = "4")]
    T4,
    Cor1,
    Fig1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print "alpha count" for each graph6 line of the input file.
    Count {
        /// Input file with one graph6 string per line.
        #[arg(long)]
        input: PathBuf,
        /// Use the tree-only counter (rejects non-trees).
        #[arg(long)]
        tree: bool,
        /// Also split the count by membership of this vertex (trees only).
        #[arg(long, value_name = "V")]
        conditional: Option<usize>,
    },
    /// Generate one member of an extremal family as graph6.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Seed for the random attachment policy of p3-tree.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all non-isomorphic trees of one order as graph6 lines.
    Enum {
        #[arg(long)]
        n: usize,
        /// Restrict to trees with maximum degree 3.
        #[arg(long)]
        subcubic: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one exhaustive verifier and emit its report.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Largest order to verify (ignored by fig1).
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Worker count; defaults to MISX_JOBS or 1.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the symmetrization procedure on the first graph of the input.
    Symmetrize {
        #[arg(long)]
        input: PathBuf,
        /// Forbidden clique order.
        #[arg(long)]
        p: usize,
        /// Counted clique order.
        #[arg(long)]
        q: usize,
        /// Write the full step trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
}

fn write_out(out: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn default_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("MISX_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn run_count(input: &PathBuf, tree: bool, conditional: Option<usize>) -> Result<(), String> {
    let text = fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line.as_bytes()).map_err(|e| format!("line {}: {e}", i + 1))?;
        let ac = if tree || conditional.is_some() {
            count_mis_tree(&g).map_err(|e| format!("line {}: {e}", i + 1))?
        } else {
            count_mis_exact(&g).map_err(|e| format!("line {}: {e}", i + 1))?
        };
        match conditional {
            None => println!("{} {}", ac.alpha, ac.count),
            Some(v) => {
                let split =
                    conditional_count_tree(&g, v).map_err(|e| format!("line {}: {e}", i + 1))?;
                println!(
                    "{} {} with={} without={}",
                    ac.alpha, ac.count, split.with_vertex, split.without_vertex
                );
            }
        }
    }
    Ok(())
}

fn run_gen(
    family: Family,
    n: Option<usize>,
    alpha: Option<usize>,
    k: Option<usize>,
    seed: Option<u64>,
    out: Option<&PathBuf>,
) -> Result<(), String> {
    let need = |name: &str, v: Option<usize>| v.ok_or(format!("--{name} is required here"));
    let g = match family {
        Family::SubdividedStar => FamilySpec::SubdividedStar {
            n: need("n", n)?,
            alpha: need("alpha", alpha)?,
        }
        .build(),
        Family::Caterpillar => FamilySpec::Caterpillar { k: need("k", k)? }.build(),
        Family::P3Tree => FamilySpec::P3Tree {
            steps: need("k", k)?,
            policy: match seed {
                Some(s) => P3Policy::SeededRandom(s),
                None => P3Policy::DeterministicChain,
            },
        }
        .build(),
        Family::Turan => turan_graph(need("n", n)?, need("k", k)?),
        Family::TuranComplement => turan_complement(need("n", n)?, need("alpha", alpha)?),
        Family::MixedExtremal => FamilySpec::MixedExtremal {
            n: need("n", n)?,
            alpha: need("alpha", alpha)?,
        }
        .build(),
    }
    .map_err(|e| e.to_string())?;
    write_out(out, &format!("{}\n", graph6_encode(&g))).map_err(|e| e.to_string())
}

fn run_enum(n: usize, subcubic: bool, out: Option<&PathBuf>) -> Result<(), String> {
    let stream = enumerate_trees(n, subcubic).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for g in stream {
        text.push_str(&graph6_encode(&g));
        text.push('\n');
    }
    write_out(out, &text).map_err(|e| e.to_string())
}

fn run_verify(
    theorem: Theorem,
    max_n: Option<usize>,
    jobs: usize,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<VerifyReport, String> {
    let need_n = || max_n.ok_or("--max-n is required here".to_string());
    let report = match theorem {
        Theorem::T1 => verify_theorem1(need_n()?, jobs),
        Theorem::T2 => verify_theorem2(need_n()?, jobs),
        Theorem::T3 => verify_theorem3(need_n()?, jobs),
        Theorem::T4 => verify_theorem4(need_n()?, jobs),
        Theorem::Cor1 => verify_corollary1(need_n()?, jobs),
        Theorem::Fig1 => Ok(figure1_check()),
    }
    .map_err(|e| e.to_string())?;
    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json => format!("{:#}\n", report.to_json()),
    };
    write_out(out, &text).map_err(|e| e.to_string())?;
    eprintln!("{}", report.summary_line());
    Ok(report)
}

fn run_symmetrize(
    input: &PathBuf,
    p: usize,
    q: usize,
    trace_out: Option<&PathBuf>,
) -> Result<(), String> {
    let text = fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or("input holds no graph")?;
    let g = graph6_decode(line.as_bytes()).map_err(|e| e.to_string())?;
    let trace = zykov_symmetrize(&g, p, q).map_err(|e| e.to_string())?;
    println!("{}", graph6_encode(&trace.final_graph));
    eprintln!(
        "steps={} initial={} final={}",
        trace.steps.len(),
        trace.initial_count,
        trace.final_count
    );
    if let Some(path) = trace_out {
        fs::write(path, format!("{:#}\n", trace.to_json())).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Count {
            input,
            tree,
            conditional,
        } => run_count(&input, tree, conditional).map(|()| 0),
        Cmd::Gen {
            family,
            n,
            alpha,
            k,
            seed,
            out,
        } => run_gen(family, n, alpha, k, seed, out.as_ref()).map(|()| 0),
        Cmd::Enum { n, subcubic, out } => run_enum(n, subcubic, out.as_ref()).map(|()| 0),
        Cmd::Verify {
            theorem,
            max_n,
            jobs,
            format,
            out,
        } => run_verify(theorem, max_n, default_jobs(jobs), format, out.as_ref())
            .map(|report| if report.passed() { 0 } else { 2 }),
        Cmd::Symmetrize { input, p, q, trace } => {
            run_symmetrize(&input, p, q, trace.as_ref()).map(|()| 0)
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
