//! Command-line front end: decision and optimization solves, kernel and
//! width-bound extraction, the brute-force oracle, decomposition checks,
//! instance generation, and the acceptance suite.
//!
//! Exit codes: 0 for Yes/success, 1 for No (or an invalid decomposition
//! under `validate-td`, or a failed acceptance run), 2 for usage, parse,
//! or resource errors.

use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lcp::dp::{solve_decision, DecidedBy};
use lcp::gen::{self, Family};
use lcp::graph::{evaluate_coloring, Graph, TwoColoring};
use lcp::io::{emit_graph, emit_td, parse_graph, parse_td, ResultRecord};
use lcp::kernel::{kernelize, ReductionEvent};
use lcp::oracle::{brute_force_mu_capped, DEFAULT_CAP};
use lcp::treedecomp::{bounded_width_or_coloring, make_nice, validate, WidthOrColoring};
use lcp::{optimize_klcp, solve_klcp, solve_optimize, AcceptConfig};

#[derive(Parser)]
#[command(name = "lcp", version, about = "Exact solver for the load coloring problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether mu(G) >= k.
    Solve {
        #[arg(long)]
        k: usize,
        /// Graph file in `p lcp` format; `-` reads stdin.
        #[arg(long, default_value = "-")]
        input: String,
        /// Solve over this decomposition instead of the built-in pipeline.
        #[arg(long)]
        td: Option<String>,
        /// Report the witness coloring on Yes.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute mu(G) and an optimal coloring.
    Optimize {
        #[arg(long, default_value = "-")]
        input: String,
        /// Optimize over this decomposition instead of the built-in pipeline.
        #[arg(long)]
        td: Option<String>,
        /// Include the coloring's vertex lists in the output.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the reduced instance for parameter k, with a removal trace.
    Kernel {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Emit a width-2k decomposition or a k-red/k-blue coloring.
    TwBound {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Brute-force mu(G) by enumerating colorings (small graphs only).
    Oracle {
        #[arg(long, default_value = "-")]
        input: String,
        /// Largest vertex count the enumeration will attempt.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a decomposition against a graph; exit 1 if invalid.
    ValidateTd {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        td: String,
    },
    /// Generate an instance from a named family.
    Gen {
        /// One of: random-gnm, path, cycle, star, double-star,
        /// disjoint-cliques, grid.
        #[arg(long)]
        family: String,
        /// Family parameters, comma-separated (e.g. `--params 10,15`).
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite; exit 1 if any criterion fails.
    Accept {
        #[arg(long, default_value_t = AcceptConfig::default().seed)]
        seed: u64,
        /// Trimmed workload for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

fn fail(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_graph(path: &str) -> Result<Graph, String> {
    parse_graph(&read_source(path)?).map_err(|e| format!("{path}: {e}"))
}

fn print_record(record: &ResultRecord, format: Format) {
    match format {
        Format::Text => print!("{}", record.render_text()),
        Format::Kv => print!("{}", record.render_kv()),
    }
}

fn verdict_code(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_solve(
    k: usize,
    input: &str,
    td: Option<&str>,
    witness: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let record = match td {
        Some(td_path) => {
            let td = parse_td(&read_source(td_path)?).map_err(|e| format!("{td_path}: {e}"))?;
            let ntd = make_nice(&g, &td).map_err(|e| format!("{td_path}: {e}"))?;
            let (yes, coloring) = solve_decision(&g, &ntd, k).map_err(|e| e.to_string())?;
            let mut record = ResultRecord {
                verdict: yes,
                k: Some(k),
                mu: None,
                witness: None,
                red_edges: None,
                blue_edges: None,
                decided_by: Some(DecidedBy::Dp),
                extras: Vec::new(),
            };
            if witness {
                if let Some(f) = &coloring {
                    attach_witness(&mut record, &g, f);
                }
            }
            record
        }
        None => {
            let result = solve_klcp(&g, k, witness).map_err(|e| e.to_string())?;
            ResultRecord::from_decision(&g, &result)
        }
    };
    print_record(&record, format);
    Ok(verdict_code(record.verdict))
}

fn attach_witness(record: &mut ResultRecord, g: &Graph, f: &TwoColoring) {
    let profile = evaluate_coloring(g, f).expect("witness colorings are total");
    record.witness = Some((
        f.red_vertices().into_iter().map(|v| v.0).collect(),
        f.blue_vertices().into_iter().map(|v| v.0).collect(),
    ));
    record.red_edges = Some(profile.red_edges);
    record.blue_edges = Some(profile.blue_edges);
}

fn run_optimize(
    input: &str,
    td: Option<&str>,
    witness: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let (mu, coloring) = match td {
        Some(td_path) => {
            let td = parse_td(&read_source(td_path)?).map_err(|e| format!("{td_path}: {e}"))?;
            let ntd = make_nice(&g, &td).map_err(|e| format!("{td_path}: {e}"))?;
            solve_optimize(&g, &ntd).map_err(|e| e.to_string())?
        }
        None => optimize_klcp(&g).map_err(|e| e.to_string())?,
    };
    let mut record = ResultRecord::from_optimization(&g, mu, &coloring);
    if !witness {
        record.witness = None;
    }
    print_record(&record, format);
    Ok(ExitCode::SUCCESS)
}

fn run_kernel(k: usize, input: &str) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let (reduced, trace) = kernelize(&g, k).map_err(|e| e.to_string())?;
    print!("{}", emit_graph(&reduced));
    for event in &trace.events {
        match event {
            ReductionEvent::Isolated(v) => println!("c trace isolated {v}"),
            ReductionEvent::Pendant { pendant, hub } => {
                println!("c trace pendant {pendant} hub {hub}")
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_tw_bound(k: usize, input: &str, format: Format) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    match bounded_width_or_coloring(&g, k).map_err(|e| e.to_string())? {
        WidthOrColoring::Coloring(f) => {
            let mut record = ResultRecord {
                verdict: true,
                k: Some(k),
                mu: None,
                witness: None,
                red_edges: None,
                blue_edges: None,
                decided_by: Some(DecidedBy::TwBoundColoring),
                extras: Vec::new(),
            };
            attach_witness(&mut record, &g, &f);
            print_record(&record, format);
        }
        WidthOrColoring::Decomposition(td) => {
            let width = td.width().expect("constructed decompositions have bags");
            println!("c width {width} (bound {})", 2 * k);
            print!("{}", emit_td(&td));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(input: &str, cap: usize, format: Format) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let (mu, coloring) = brute_force_mu_capped(&g, cap).map_err(|e| e.to_string())?;
    let record = ResultRecord::from_optimization(&g, mu, &coloring);
    print_record(&record, format);
    Ok(ExitCode::SUCCESS)
}

fn run_validate_td(input: &str, td_path: &str) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let td = parse_td(&read_source(td_path)?).map_err(|e| format!("{td_path}: {e}"))?;
    let report = validate(&g, &td);
    if report.is_valid() {
        let width = td.width().expect("valid decompositions have bags");
        println!("valid: {} bags, width {width}", td.node_count());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("invalid:");
        print!("{report}");
        Ok(ExitCode::from(1))
    }
}

fn family_from_args(name: &str, params: &[usize]) -> Result<Family, String> {
    let arity = |want: usize, shape: &str| {
        if params.len() == want {
            Ok(())
        } else {
            Err(format!(
                "family {name} takes --params {shape} ({} values, got {})",
                want,
                params.len()
            ))
        }
    };
    match name {
        "random-gnm" => {
            arity(2, "<n>,<m>")?;
            Ok(Family::RandomGnm {
                n: params[0],
                m: params[1],
            })
        }
        "path" => {
            arity(1, "<n>")?;
            Ok(Family::Path { n: params[0] })
        }
        "cycle" => {
            arity(1, "<n>")?;
            Ok(Family::Cycle { n: params[0] })
        }
        "star" => {
            arity(1, "<leaves>")?;
            Ok(Family::Star { leaves: params[0] })
        }
        "double-star" => {
            arity(2, "<left>,<right>")?;
            Ok(Family::DoubleStar {
                left: params[0],
                right: params[1],
            })
        }
        "disjoint-cliques" => {
            arity(2, "<count>,<size>")?;
            Ok(Family::DisjointCliques {
                count: params[0],
                size: params[1],
            })
        }
        "grid" => {
            arity(2, "<rows>,<cols>")?;
            Ok(Family::Grid {
                rows: params[0],
                cols: params[1],
            })
        }
        _ => Err(format!("unknown family '{name}'")),
    }
}

fn run_gen(name: &str, params: &[usize], seed: u64) -> Result<ExitCode, String> {
    let family = family_from_args(name, params)?;
    let g = gen::generate(&family, seed).map_err(|e| e.to_string())?;
    print!("{}", emit_graph(&g));
    Ok(ExitCode::SUCCESS)
}

fn run_accept(seed: u64, quick: bool) -> ExitCode {
    let mut cfg = if quick {
        AcceptConfig::quick()
    } else {
        AcceptConfig::default()
    };
    cfg.seed = seed;
    let report = lcp::run_acceptance(&cfg);
    print!("{}", report.render());
    verdict_code(report.all_passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve {
            k,
            input,
            td,
            witness,
            format,
        } => run_solve(*k, input, td.as_deref(), *witness, *format),
        Command::Optimize {
            input,
            td,
            witness,
            format,
        } => run_optimize(input, td.as_deref(), *witness, *format),
        Command::Kernel { k, input } => run_kernel(*k, input),
        Command::TwBound { k, input, format } => run_tw_bound(*k, input, *format),
        Command::Oracle { input, cap, format } => run_oracle(input, *cap, *format),
        Command::ValidateTd { input, td } => run_validate_td(input, td),
        Command::Gen {
            family,
            params,
            seed,
        } => run_gen(family, params, *seed),
        Command::Accept { seed, quick } => return run_accept(*seed, *quick),
    };
    outcome.unwrap_or_else(fail)
}
