use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use mcov_core::constructors::{enumerate_family_g, named_graph, staircase};
use mcov_core::to_graph6;
use mcov_harness::census::{bundled_census_text, connected_cubic, BUNDLED_MAX_ORDER};
use mcov_harness::{analyze_records, parse_census, run_checks, select, HarnessError, RunOptions, REGISTRY};

#[derive(Parser)]
#[command(name = "mcov", version, about = "Removable edges and bricks in matching covered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarise every graph of a graph6 file ("-" reads stdin).
    #[command(group(ArgGroup::new("format").args(["json", "csv"])))]
    Analyze {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run checks over a graph6 census and report violations.
    #[command(group(ArgGroup::new("source").args(["input", "census"])))]
    Verify {
        /// Comma-separated check ids, or `all`.
        #[arg(long)]
        check: String,
        /// graph6 file ("-" reads stdin).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Use the bundled census of connected cubic graphs up to this order.
        #[arg(long, value_name = "MAX_N")]
        census: Option<usize>,
        /// Worker threads (MCOV_JOBS takes precedence).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the reports as a JSON array to this file.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Print graphs in graph6 to stdout.
    Generate {
        #[arg(long, required_unless_present = "name")]
        family: Option<Family>,
        /// Staircase index.
        #[arg(long)]
        k: Option<usize>,
        /// Largest order for `gfamily`; the exact order for `cubic`.
        #[arg(long = "max-n", alias = "n")]
        max_n: Option<usize>,
        /// A catalog entry.
        #[arg(long, conflicts_with = "family")]
        name: Option<String>,
    },
    /// List the registered checks.
    Checks,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Staircase,
    Gfamily,
    Cubic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("mcov: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, HarnessError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn jobs(flag: Option<usize>) -> Result<RunOptions, HarnessError> {
    match std::env::var("MCOV_JOBS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(|j| RunOptions { jobs: Some(j) })
            .map_err(|_| HarnessError::Usage(format!("MCOV_JOBS must be a positive integer, got `{v}`"))),
        Err(_) => Ok(RunOptions { jobs: flag }),
    }
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Checks => {
            for c in REGISTRY.iter() {
                writeln!(out, "{:<20} {}", c.id(), c.statement())?;
            }
            Ok(0)
        }
        Command::Analyze { input, json, csv, jobs: j } => {
            let records = parse_census(&read_input(&input)?)?;
            let rows = analyze_records(&records, jobs(j)?)?;
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(line, g6, r)| serde_json::json!({"line": line, "graph6": g6, "analysis": r}))
                    .collect();
                serde_json::to_writer_pretty(&mut out, &items)?;
                writeln!(out)?;
            } else if csv {
                let mut w = csv::Writer::from_writer(out);
                w.write_record([
                    "line",
                    "graph6",
                    "order",
                    "size",
                    "cubic",
                    "matching_covered",
                    "brick",
                    "brace",
                    "near_bipartite",
                    "essentially_4ec",
                    "removable_edge_count",
                    "doubleton_count",
                    "removable_class_count",
                    "max_removable_matching",
                    "neither_count",
                ])?;
                let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
                for (line, g6, r) in &rows {
                    w.write_record([
                        line.to_string(),
                        g6.clone(),
                        r.order.to_string(),
                        r.size.to_string(),
                        r.cubic.to_string(),
                        r.matching_covered.to_string(),
                        r.brick.to_string(),
                        r.brace.to_string(),
                        r.near_bipartite.to_string(),
                        r.essentially_4ec.to_string(),
                        opt(r.removable_edge_count),
                        opt(r.doubleton_count),
                        opt(r.removable_class_count),
                        opt(r.max_removable_matching),
                        opt(r.neither_count),
                    ])?;
                }
                w.flush()?;
            } else {
                let na = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
                for (line, g6, r) in &rows {
                    writeln!(
                        out,
                        "{line}\t{g6}\tn={} mc={} brick={} brace={} removable={} doubletons={} classes={} max_removable_matching={}",
                        r.order,
                        r.matching_covered,
                        r.brick,
                        r.brace,
                        na(r.removable_edge_count),
                        na(r.doubleton_count),
                        na(r.removable_class_count),
                        na(r.max_removable_matching),
                    )?;
                }
            }
            Ok(0)
        }
        Command::Verify { check, input, census, jobs: j, json } => {
            let checks = select(&check)?;
            let text = match (input, census) {
                (Some(path), _) => read_input(&path)?,
                (None, Some(max_n)) => {
                    if max_n > BUNDLED_MAX_ORDER {
                        return Err(HarnessError::Usage(format!("the bundled census stops at order {BUNDLED_MAX_ORDER}")));
                    }
                    bundled_census_text(max_n)
                }
                (None, None) if checks.iter().all(|c| c.fixed_inputs().is_some()) => String::new(),
                (None, None) => return Err(HarnessError::Usage("give --input FILE or --census MAX_N".into())),
            };
            let records = parse_census(&text)?;
            let reports = run_checks(&records, &checks, jobs(j)?)?;
            for r in &reports {
                writeln!(out, "{}", r.headline())?;
                for v in r.violations.iter().take(10) {
                    writeln!(out, "  line {} {}: {}", v.line, v.graph6, v.detail)?;
                }
                if r.violations.len() > 10 {
                    writeln!(out, "  ... {} more", r.violations.len() - 10)?;
                }
            }
            if let Some(path) = json {
                let file = std::fs::File::create(path)?;
                let mut w = std::io::BufWriter::new(file);
                serde_json::to_writer_pretty(&mut w, &reports)?;
                writeln!(w)?;
            }
            Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
        Command::Generate { family, k, max_n, name } => {
            let graphs = match (family, name) {
                (_, Some(name)) => vec![named_graph(&name)?],
                (Some(Family::Staircase), None) => {
                    let k = k.ok_or_else(|| HarnessError::Usage("--family staircase needs --k".into()))?;
                    vec![staircase(k)?]
                }
                (Some(Family::Gfamily), None) => {
                    let n = max_n.ok_or_else(|| HarnessError::Usage("--family gfamily needs --max-n".into()))?;
                    enumerate_family_g(n)?
                }
                (Some(Family::Cubic), None) => {
                    let n = max_n.ok_or_else(|| HarnessError::Usage("--family cubic needs --n".into()))?;
                    connected_cubic(n)?.remove(&n).unwrap_or_default()
                }
                (None, None) => return Err(HarnessError::Usage("give --family or --name".into())),
            };
            for g in graphs {
                writeln!(out, "{}", to_graph6(&g)?)?;
            }
            Ok(0)
        }
    }
}
