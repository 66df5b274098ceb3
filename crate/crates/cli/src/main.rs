//! `lrpos`: decide, count and decompose Littlewood-Richardson coefficients.
//!
//! Exit status: 0 on success (and "positive" for `decide`, "no
//! disagreements" for `sweep`), 1 for a negative verdict, 2 for usage or
//! input errors, 3 when an enumeration budget runs out.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lrpos::{
    build_lr_system, count_lr_tableaux, decide_with, decompose_tensor, integral_witness,
    resolve_rank, saturation_probe, sweep, DecideOptions, Decision, Error, Execution,
    OracleOutcome, Partition, Route, SweepConfig, DEFAULT_BUDGET,
};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "lrpos",
    version,
    about = "Positivity of Littlewood-Richardson coefficients for GL_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Triple {
    /// α, as a comma-separated weakly decreasing list, e.g. "2,1"
    #[arg(value_parser = parse_partition)]
    alpha: Partition,
    /// β
    #[arg(value_parser = parse_partition)]
    beta: Partition,
    /// γ
    #[arg(value_parser = parse_partition)]
    gamma: Partition,
}

#[derive(Args, Debug)]
struct Common {
    /// Rank n of GL_n (default: the largest height involved)
    #[arg(long)]
    rank: Option<usize>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
    /// Node budget for tableau enumeration
    #[arg(long, env = "LRPOS_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether c_{α,β}^γ > 0 by LP feasibility
    Decide {
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        common: Common,
        /// Print the constraint system as JSON before the result
        #[arg(long)]
        dump_lp: bool,
        /// Also search for an integral witness (an LR tableau)
        #[arg(long)]
        integral: bool,
    },
    /// Exact coefficient by tableau enumeration
    Coeff {
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose V_α ⊗ V_β (default rank: height(α) + height(β))
    Decompose {
        #[arg(value_parser = parse_partition)]
        alpha: Partition,
        #[arg(value_parser = parse_partition)]
        beta: Partition,
        #[command(flatten)]
        common: Common,
    },
    /// An LR tableau of shape γ/α and content β, or "none"
    Witness {
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the GL_n module V_λ
    Dim {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide (qα, qβ, qγ) for each q and compare with enumeration
    Probe {
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        common: Common,
        /// Comma-separated scale factors
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<BigUint>,
    },
    /// Compare the LP route against enumeration over all small triples
    Sweep {
        #[arg(long)]
        max_size: u64,
        #[arg(long)]
        max_n: usize,
        /// Comma-separated scale factors for the saturation check
        #[arg(long, value_delimiter = ',')]
        q: Vec<u64>,
        #[arg(long, env = "LRPOS_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Run on a single thread
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    lrpos::parse_partition(s).map_err(|e| e.to_string())
}

/// `coeff` output.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct Coefficient {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    rank: usize,
    coefficient: String,
}

/// `dim` output.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct Dimension {
    lambda: Partition,
    rank: usize,
    dimension: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value).expect("stdout");
    let _ = writeln!(out);
}

fn run(command: Command) -> lrpos::Result<u8> {
    match command {
        Command::Decide {
            triple: Triple { alpha, beta, gamma },
            common,
            dump_lp,
            integral,
        } => {
            let opts = DecideOptions {
                rank: common.rank,
                integral_witness: integral,
                budget: common.budget,
            };
            let n = resolve_rank(&alpha, &beta, &gamma, opts.rank)?;
            if dump_lp {
                emit(&build_lr_system(&alpha, &beta, &gamma, n)?);
            }
            let d = decide_with(&alpha, &beta, &gamma, &opts)?;
            if common.json {
                emit(&d);
            } else {
                print_decision(&d);
            }
            Ok(if d.positive { 0 } else { 1 })
        }
        Command::Coeff {
            triple: Triple { alpha, beta, gamma },
            common,
        } => {
            let n = resolve_rank(&alpha, &beta, &gamma, common.rank)?;
            let c = count_lr_tableaux(&alpha, &beta, &gamma, n, common.budget)?;
            if common.json {
                emit(&Coefficient {
                    alpha,
                    beta,
                    gamma,
                    rank: n,
                    coefficient: c.to_string(),
                });
            } else {
                println!("{c}");
            }
            Ok(0)
        }
        Command::Decompose {
            alpha,
            beta,
            common,
        } => {
            let n = common
                .rank
                .unwrap_or((alpha.height() + beta.height()).max(1));
            let d = decompose_tensor(&alpha, &beta, n, common.budget)?;
            if common.json {
                emit(&d);
            } else {
                for t in &d.terms {
                    println!("{}\t{}", t.gamma, t.mult);
                }
            }
            Ok(0)
        }
        Command::Witness {
            triple: Triple { alpha, beta, gamma },
            common,
        } => {
            let n = resolve_rank(&alpha, &beta, &gamma, common.rank)?;
            let w = integral_witness(&alpha, &beta, &gamma, n, common.budget)?;
            if common.json {
                emit(&w);
            } else if let Some(w) = w {
                let tableau = w.decode(&alpha)?;
                println!(
                    "{}",
                    lrpos::VariableIndex::all(n)
                        .iter()
                        .zip(w.counts())
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                for (off, row) in tableau.offsets.iter().zip(&tableau.rows) {
                    let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                    println!("{}{}", ". ".repeat(*off), cells.join(" "));
                }
            } else {
                println!("none");
            }
            Ok(0)
        }
        Command::Dim { lambda, rank, json } => {
            let d = lambda.weyl_dimension(rank)?;
            if json {
                emit(&Dimension {
                    lambda,
                    rank,
                    dimension: d.to_string(),
                });
            } else {
                println!("{d}");
            }
            Ok(0)
        }
        Command::Probe {
            triple: Triple { alpha, beta, gamma },
            common,
            q,
        } => {
            let r = saturation_probe(&alpha, &beta, &gamma, common.rank, &q, common.budget)?;
            if common.json {
                emit(&r);
            } else {
                for e in &r.entries {
                    let oracle = match &e.oracle {
                        OracleOutcome::Count { count } => format!("oracle count {count}"),
                        OracleOutcome::BudgetExceeded => "oracle: budget exceeded".into(),
                        OracleOutcome::TooLarge => "oracle: parts too large".into(),
                    };
                    println!(
                        "q={}\t{}\t{}",
                        e.q,
                        if e.positive {
                            "positive"
                        } else {
                            "not positive"
                        },
                        oracle
                    );
                }
                println!(
                    "{}",
                    if r.disagreement {
                        "DISAGREEMENT"
                    } else {
                        "consistent"
                    }
                );
            }
            Ok(if r.disagreement { 1 } else { 0 })
        }
        Command::Sweep {
            max_size,
            max_n,
            q,
            budget,
            sequential,
            json,
        } => {
            let mut cfg = SweepConfig::new(max_size, max_n, q);
            cfg.budget = budget;
            if sequential {
                cfg.execution = Execution::Sequential;
            }
            let r = sweep(&cfg);
            if json {
                emit(&r);
            } else {
                println!("instances: {}", r.instances);
                println!("lp positive: {}", r.lp_positive);
                println!(
                    "lp negative: {} ({} trivial)",
                    r.lp_negative, r.trivial_rejects
                );
                println!("oracle checked: {}", r.oracle_checked);
                println!("saturation checked: {}", r.saturation_checked);
                println!(
                    "witnesses checked: {} rational, {} integral",
                    r.rational_witnesses_checked, r.integral_witnesses_checked
                );
                println!("decompositions checked: {}", r.decompositions_checked);
                println!("budget failures: {}", r.budget_failures);
                println!("disagreements: {}", r.disagreements.len());
                for d in &r.disagreements {
                    emit(d);
                }
            }
            Ok(if r.is_clean() { 0 } else { 1 })
        }
    }
}

fn print_decision(d: &Decision) {
    match d.route {
        Route::TrivialReject => {
            let why = d.obstruction.map(|o| o.to_string()).unwrap_or_default();
            println!("not positive (trivial: {why})");
        }
        Route::LpInfeasible => println!("not positive (lp infeasible)"),
        Route::LpFeasible => {
            println!("positive");
            println!(
                "route: lp feasible, rank {}, {} pivots",
                d.rank, d.pivot_count
            );
            if let Some(w) = &d.rational_witness {
                let coords: Vec<String> =
                    w.coords.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("witness: {}", coords.join(" "));
            }
            if let Some(w) = &d.integral_witness {
                println!(
                    "integral witness: {}",
                    serde_json::to_string(w).expect("serializable")
                );
            }
        }
    }
}
