//! `fedcount` command-line interface.

mod family;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use fedcount::census::{colored_forest_census, colored_recurrence};
use fedcount::harness::{
    fed_status, sweep_all_graphs, sweep_colored_gr, sweep_known_fed_families, SweepReport, Verdict,
};
use fedcount::structure::{degree_plan, forest_plan};
use fedcount::tridiagonal::{count_gr, gr_collision_census, gr_recurrence_sequence, EntrySet};
use fedcount::{Budget, Error, Exact, Graph};

use family::{parse_family, GRAMMAR_VERSION};
use output::{render, Format};

const SCHEMA: &str = "fedcount-report/1";

#[derive(Parser, Debug)]
#[command(name = "fedcount", version, about = "Exact subforest and degree-tuple counting")]
struct Cli {
    /// Maximum elementary evaluations per brute-force routine.
    #[arg(long, global = true, env = "FEDCOUNT_BUDGET", default_value = "4294967296", value_parser = parse_budget)]
    budget: u128,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "FEDCOUNT_WORKERS")]
    workers: Option<usize>,
    /// Seed for randomized families.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn parse_budget(s: &str) -> Result<u128, String> {
    let value = match s.split_once('^') {
        Some((b, e)) => {
            let b: u128 = b.parse().map_err(|_| format!("bad budget base {b:?}"))?;
            let e: u32 = e.parse().map_err(|_| format!("bad budget exponent {e:?}"))?;
            b.checked_pow(e).ok_or("budget overflows u128")?
        }
        None => s.parse().map_err(|_| format!("budget must be a positive integer or B^E, got {s:?}"))?,
    };
    if value == 0 {
        return Err("budget must be positive".into());
    }
    Ok(value)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count subforests or distinct degree tuples of one graph.
    Count {
        #[arg(value_enum)]
        what: CountWhat,
        #[command(flatten)]
        source: GraphSource,
        /// Also report F, D and the FED/FLD status.
        #[arg(long)]
        status: bool,
    },
    /// Size of the row/column sum set of order-n tridiagonal matrices over {q..q+k}.
    Gr {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Predecessor census (binary entries only).
        #[arg(long)]
        collisions: bool,
    },
    /// Colored forests on the ladder with n columns and k colors.
    Colored {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        /// Exhaustive census only.
        #[arg(long, conflicts_with = "recurrence")]
        census: bool,
        /// Recurrence only.
        #[arg(long)]
        recurrence: bool,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Integer sequences.
    Sequence {
        #[command(subcommand)]
        which: SequenceKind,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum CountWhat {
    Forests,
    Degrees,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph file: `n m` header, then one `u v` line per edge.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family string, e.g. grid2:3, kbip:2,3, book:3,4:nobase.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// F <= D on all labeled graphs, with equality exactly on bipartite ones.
    Fed {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        bipartite_only: bool,
    },
    /// Colored census, recurrence and GR count agree cell by cell.
    ColoredGr {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_k: u32,
    },
    /// Ladders, trees, cacti and books.
    Families {
        #[arg(long, default_value_t = 20)]
        max_size: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SequenceKind {
    /// Terms of the binary tridiagonal GR recurrence.
    Gr {
        #[arg(long)]
        terms: usize,
    },
}

/// Outcome of a command: the `result` object and whether it records a
/// violation.
struct Outcome {
    command: String,
    result: Value,
    violation: bool,
}

fn exact(v: &Exact) -> Value {
    Value::String(v.to_string())
}

fn load_graph(source: &GraphSource) -> Result<(String, Graph)> {
    if let Some(path) = &source.graph {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let g = Graph::parse(&text).with_context(|| format!("malformed graph file {}", path.display()))?;
        Ok((path.display().to_string(), g))
    } else if let Some(f) = &source.family {
        Ok((f.clone(), parse_family(f)?))
    } else {
        bail!("one of --graph or --family is required")
    }
}

fn sweep(command: String, report: SweepReport) -> Result<Outcome> {
    let violation = report.verdict == Verdict::ViolationFound;
    let mut result = serde_json::to_value(&report)?;
    // timing lives at the top level of the report
    if let Some(obj) = result.as_object_mut() {
        obj.remove("timing");
    }
    Ok(Outcome { command, result, violation })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Count { what, source, status } => {
            let (name, g) = load_graph(source)?;
            let plan = match what {
                CountWhat::Forests => forest_plan(&g, budget)?,
                CountWhat::Degrees => degree_plan(&g, budget)?,
            };
            let quantity = match what {
                CountWhat::Forests => "forests",
                CountWhat::Degrees => "degrees",
            };
            let mut result = json!({
                "graph": name,
                "vertices": g.vertex_count().to_string(),
                "edges": g.edge_count().to_string(),
                "quantity": quantity,
                "value": exact(plan.value()),
                "plan": serde_json::to_value(&plan.root)?,
            });
            let mut violation = false;
            if *status {
                let check = fed_status(&g, budget)?;
                violation = check.status == fedcount::harness::FedStatus::Violation;
                result["F"] = exact(&check.f);
                result["D"] = exact(&check.d);
                result["bipartite"] = Value::Bool(check.bipartite);
                result["fed_status"] = Value::String(check.status.to_string());
            }
            Ok(Outcome { command: format!("count {quantity}"), result, violation })
        }
        Command::Gr { n, q, k, collisions } => {
            let x = EntrySet::new(*q, *k);
            let count = count_gr(*n, x, budget)?;
            let mut result = json!({
                "n": n.to_string(), "q": q.to_string(), "k": k.to_string(), "count": count.to_string(),
            });
            if *collisions {
                if x != EntrySet::BINARY {
                    bail!("--collisions needs --q 0 --k 1");
                }
                let c = gr_collision_census(*n, budget)?;
                result["extends_one"] = c.extends_one.to_string().into();
                result["extends_two"] = c.extends_two.to_string().into();
                result["extends_more"] = c.extends_more.to_string().into();
                result["predicted_two"] = c.predicted_two.to_string().into();
                result["unique_extension_failures"] = c.unique_extension_failures.len().to_string().into();
            }
            Ok(Outcome { command: "gr".into(), result, violation: false })
        }
        Command::Colored { n, k, census, recurrence } => {
            let mut result = json!({ "n": n.to_string(), "k": k.to_string() });
            if !*recurrence {
                let c = colored_forest_census(*n, *k, budget)?;
                result["census_a"] = exact(&c.a);
                result["census_semicyclic"] = exact(&c.a_semi);
                result["census_not_semicyclic"] = exact(&c.a_not);
            }
            if !*census {
                let a: Exact = colored_recurrence(*n, *k)?;
                result["recurrence_a"] = exact(&a);
            }
            Ok(Outcome { command: "colored".into(), result, violation: false })
        }
        Command::Verify { target } => match target {
            VerifyTarget::Fed { max_vertices, bipartite_only } => {
                sweep("verify fed".into(), sweep_all_graphs(*max_vertices, *bipartite_only, budget)?)
            }
            VerifyTarget::ColoredGr { max_n, max_k } => {
                sweep("verify colored-gr".into(), sweep_colored_gr(*max_n, *max_k, budget)?)
            }
            VerifyTarget::Families { max_size } => {
                sweep("verify families".into(), sweep_known_fed_families(*max_size, cli.seed, budget)?)
            }
        },
        Command::Sequence { which: SequenceKind::Gr { terms } } => {
            let seq: Vec<BigUint> = gr_recurrence_sequence(*terms)?;
            let rows: Vec<Value> = seq
                .iter()
                .enumerate()
                .map(|(i, v)| json!({ "n": (i + 1).to_string(), "value": exact(v) }))
                .collect();
            let result = json!({ "terms": seq.iter().map(exact).collect::<Vec<_>>(), "rows": rows });
            Ok(Outcome { command: "sequence gr".into(), result, violation: false })
        }
    }
}

fn report(cli: &Cli, outcome: &Outcome, elapsed_micros: u128) -> Value {
    json!({
        "schema": SCHEMA,
        "family_grammar": GRAMMAR_VERSION,
        "command": outcome.command,
        "config": {
            "budget": cli.budget.to_string(),
            "seed": cli.seed.to_string(),
        },
        "result": outcome.result,
        "timing": { "elapsed_micros": elapsed_micros.to_string() },
    })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(workers) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global() {
            eprintln!("error: cannot configure {workers} workers: {e}");
            return ExitCode::from(1);
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let value = report(&cli, &outcome, start.elapsed().as_micros());
    let text = match render(&value, cli.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(if outcome.violation { 3 } else { 0 })
}
