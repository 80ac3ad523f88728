//! Command-line front end: compute quantities of group expressions, run
//! verification suites, and print Landau tables and inequality grids.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 guard exceeded.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use groupcycles::bounds::check_full_grid;
use groupcycles::cli::{cmd_compute, parse_group_expr, EvalOptions, Quantity};
use groupcycles::numtheory::{check_landau_exponential, check_massias, landau_g};
use groupcycles::verify::{run_suite, Suite, SuiteItem};
use groupcycles::Error;

#[derive(Parser)]
#[command(
    name = "groupcycles",
    about = "Cycle structure of automorphisms and periodic affine maps of finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one quantity of a group expression.
    Compute(ComputeArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Print Landau's function with its classical bounds.
    LandauTable(LandauArgs),
    /// Check the case-inequality grid over the classical families.
    BoundsGrid(GridArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Group expression, e.g. "PSL2:9", "Alt:5 ^ 2", "PGammaL2:9 wr Sym:2",
    /// "Aut(PSL2:5)", "Hol(Cyclic:12)".
    expr: String,
    /// Quantity: order, meo, mao, exponent, lambda, lambda-aff,
    /// radical-index, socle-order.
    #[arg(long, short)]
    quantity: String,
    /// Largest group order the evaluator will enumerate.
    #[arg(long, default_value_t = EvalOptions::default().max_group_order)]
    max_group_order: u64,
    /// Largest |G|*|Aut(G)| allowed for affine sweeps.
    #[arg(long, default_value_t = EvalOptions::default().max_affine_sweep)]
    max_affine_sweep: u64,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: table1, psl-theo, regular-cycle, shift-lemmas,
    /// wreath-order, landau, case-inequalities, main-cor.
    suite: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LandauArgs {
    /// Largest n to tabulate.
    #[arg(long, default_value_t = 40)]
    max_n: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 64)]
    max_q: u64,
    #[arg(long, default_value_t = 8)]
    max_d: u32,
    #[arg(long, default_value_t = 6)]
    max_m: u32,
    #[arg(long, default_value_t = 12)]
    max_n: u32,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::GuardExceeded { .. } => 3,
        _ => 2,
    }
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    suite: &'a str,
    items: &'a [SuiteItem],
    passed: usize,
    failed: usize,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => run_compute(&args),
        Command::Verify(args) => run_verify(&args),
        Command::LandauTable(args) => run_landau(&args),
        Command::BoundsGrid(args) => run_grid(&args),
    };
    std::process::exit(code);
}

fn run_compute(args: &ComputeArgs) -> i32 {
    let expr = match parse_group_expr(&args.expr) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let quantity = match args.quantity.parse::<Quantity>() {
        Ok(q) => q,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let opts = EvalOptions {
        max_group_order: args.max_group_order,
        max_affine_sweep: args.max_affine_sweep,
    };
    match cmd_compute(&expr, quantity, &opts) {
        Ok(report) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("group:    {}", report.group);
                println!("order:    {}", report.order);
                print!("{}: {}", report.quantity, report.value);
                if let Some(f) = &report.fraction {
                    print!("  ({}/{} of |G|)", f.num, f.den);
                }
                println!();
                if let Some(w) = &report.witness {
                    println!("witness:  {w}");
                }
                println!("wall:     {} ms", report.wall_ms);
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let suite = match args.suite.parse::<Suite>() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match run_suite(suite) {
        Ok(items) => {
            let passed = items.iter().filter(|i| i.pass).count();
            let failed = items.len() - passed;
            if args.json {
                let report = SuiteReport { suite: suite.name(), items: &items, passed, failed };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                for item in &items {
                    let mark = if item.pass { "PASS" } else { "FAIL" };
                    println!("[{mark}] {} — {}", item.label, item.detail);
                }
                println!("{}: {passed} passed, {failed} failed", suite.name());
            }
            if failed == 0 {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[derive(Serialize)]
struct LandauRow {
    n: u64,
    g: String,
    exponential_bound_holds: bool,
    massias_holds: bool,
}

fn run_landau(args: &LandauArgs) -> i32 {
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        let g = match landau_g(n) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code_for(&e);
            }
        };
        let (holds, _) = check_landau_exponential(n).unwrap();
        let massias = if n >= 2 { check_massias(n).unwrap() } else { true };
        rows.push(LandauRow {
            n,
            g: g.to_string(),
            exponential_bound_holds: holds,
            massias_holds: massias,
        });
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
    } else {
        println!("{:>4}  {:>24}  {:>6}  {:>7}", "n", "g(n)", "3^n/3", "massias");
        for r in &rows {
            println!(
                "{:>4}  {:>24}  {:>6}  {:>7}",
                r.n,
                r.g,
                if r.exponential_bound_holds { "ok" } else { "FAIL" },
                if r.massias_holds { "ok" } else { "FAIL" }
            );
        }
    }
    if rows.iter().all(|r| r.exponential_bound_holds && r.massias_holds) {
        0
    } else {
        1
    }
}

fn run_grid(args: &GridArgs) -> i32 {
    match check_full_grid(args.max_q, args.max_d, args.max_m, args.max_n) {
        Ok(cells) => {
            let failed = cells.iter().filter(|c| !c.all_hold).count();
            if args.json {
                #[derive(Serialize)]
                struct Cell<'a> {
                    label: &'a str,
                    all_hold: bool,
                    failures: &'a [u32],
                }
                let rows: Vec<Cell> = cells
                    .iter()
                    .map(|c| Cell { label: &c.label, all_hold: c.all_hold, failures: &c.failures })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                for c in &cells {
                    if c.all_hold {
                        println!("[PASS] {}", c.label);
                    } else {
                        println!("[FAIL] {} at n = {:?}", c.label, c.failures);
                    }
                }
                println!("{} cells, {} failing", cells.len(), failed);
            }
            if failed == 0 {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
