//! Command-line front end: black-box netlists, compose and tensor them,
//! translate circuit terms to signal-flow terms, evaluate signal-flow
//! terms, and run the law/property suites.
//!
//! Exit codes: 0 success, 1 a check suite found a failure, 2 input or
//! usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use circat::circuit::{
    boundary_names, ee_semantics, element_label_pool, netlist_text, parse_netlist, random_circuit,
    Circuit,
};
use circat::freeprop::{
    parse_term, random_term, signal_flow_relation, term_text, term_to_circuit, to_signal_flow,
    Signature,
};
use circat::laws::law_suite;
use circat::symplag::{is_lagrangian_affine, AffRel};

#[derive(Parser)]
#[command(
    name = "circat",
    version,
    about = "Exact circuit semantics: black-boxing, composition, translation, and law checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relation a netlist imposes on its boundary
    Blackbox { netlist: PathBuf },
    /// Glue the second netlist onto the outputs of the first and write the result
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Place two netlists side by side and write the result
    Tensor {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Translate a circuit term file into a signal-flow term
    Translate { term: PathBuf },
    /// Evaluate a signal-flow term file to its linear relation
    Eval { term: PathBuf },
    /// Run a law or property suite
    Check {
        #[arg(long, value_enum)]
        suite: SuiteName,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum SuiteName {
    /// Frobenius and bimonoid equations in every structure
    Frobenius,
    /// Black-boxing preserves composition and tensor on random circuits
    Functoriality,
    /// Translated terms denote the black-boxed relation on random terms
    Square,
    /// Black-boxed relations are Lagrangian on random circuits
    Lagrangian,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_circuit(path: &Path) -> Result<Circuit, String> {
    parse_netlist(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Blackbox { netlist } => {
            let circuit = load_circuit(&netlist)?;
            let sem = ee_semantics(&circuit).map_err(|e| e.to_string())?;
            let rel = circuit.blackbox(&sem).map_err(|e| e.to_string())?;
            for line in rel.to_lines_named(&boundary_names(circuit.dom(), circuit.cod())) {
                println!("{line}");
            }
            Ok(true)
        }
        Command::Compose { first, second, out } => {
            let composed = load_circuit(&first)?
                .compose(&load_circuit(&second)?)
                .map_err(|e| e.to_string())?;
            write_netlist(&out, &composed)
        }
        Command::Tensor { first, second, out } => {
            let tensored = load_circuit(&first)?.tensor(&load_circuit(&second)?);
            write_netlist(&out, &tensored)
        }
        Command::Translate { term } => {
            let term = parse_term(&read(&term)?).map_err(|e| e.to_string())?;
            let translated = to_signal_flow(&term).map_err(|e| e.to_string())?;
            print!("{}", term_text(&translated));
            Ok(true)
        }
        Command::Eval { term } => {
            let term = parse_term(&read(&term)?).map_err(|e| e.to_string())?;
            let rel = signal_flow_relation(&term).map_err(|e| e.to_string())?;
            for line in rel.to_lines() {
                println!("{line}");
            }
            Ok(true)
        }
        Command::Check { suite, seed, cases } => {
            if cases == 0 {
                return Err("check requires --cases ≥ 1".to_string());
            }
            match suite {
                SuiteName::Frobenius => check_frobenius(),
                SuiteName::Functoriality => check_functoriality(seed, cases),
                SuiteName::Square => check_square(seed, cases),
                SuiteName::Lagrangian => check_lagrangian(seed, cases),
            }
        }
    }
}

fn write_netlist(out: &Path, circuit: &Circuit) -> Result<bool, String> {
    let text = netlist_text(circuit).map_err(|e| e.to_string())?;
    fs::write(out, text).map_err(|e| format!("{}: {e}", out.display()))?;
    Ok(true)
}

fn check_frobenius() -> Result<bool, String> {
    let reports = law_suite().map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for r in &reports {
        let status = if r.as_expected() {
            "ok"
        } else {
            failures.push(format!("{} / {}", r.structure, r.law));
            "FAIL"
        };
        println!("{} / {}: {status}", r.structure, r.law);
    }
    println!("frobenius: {} checks, {} failed", reports.len(), failures.len());
    if let Some(first) = failures.first() {
        println!("first counterexample: {first}");
    }
    Ok(failures.is_empty())
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(case as u64))
}

fn summarize(name: &str, cases: usize, failed: &[usize], seed: u64) -> bool {
    println!("{name}: {cases} cases, {} failed", failed.len());
    if let Some(first) = failed.first() {
        println!("first counterexample: case {first} of --seed {seed}");
        return false;
    }
    true
}

fn check_functoriality(seed: u64, cases: usize) -> Result<bool, String> {
    let pool = element_label_pool();
    let mut failed = Vec::new();
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let (a, b, c) = (
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
            rng.gen_range(0..=3usize),
        );
        let f = random_circuit(&mut rng, a, b, 5, 5, &pool);
        let g = random_circuit(&mut rng, b, c, 5, 5, &pool);
        let ok = (|| -> Result<bool, circat::Error> {
            let box_f = f.blackbox(&ee_semantics(&f)?)?;
            let box_g = g.blackbox(&ee_semantics(&g)?)?;
            let composed = f.compose(&g)?;
            let compose_ok =
                composed.blackbox(&ee_semantics(&composed)?)? == box_f.compose(&box_g)?;
            let tensored = f.tensor(&g);
            let tensor_ok =
                tensored.blackbox(&ee_semantics(&tensored)?)? == box_f.tensor(&box_g);
            Ok(compose_ok && tensor_ok)
        })()
        .map_err(|e| e.to_string())?;
        if !ok {
            failed.push(case);
        }
    }
    Ok(summarize("functoriality", cases, &failed, seed))
}

fn check_square(seed: u64, cases: usize) -> Result<bool, String> {
    let sig = Signature::circuit_elements();
    let mut failed = Vec::new();
    for case in 0..cases {
        let term = random_term(&sig, 12, seed.wrapping_add(case as u64));
        let ok = (|| -> Result<bool, circat::Error> {
            let circuit = term_to_circuit(&term)?;
            let boxed = circuit.blackbox(&ee_semantics(&circuit)?)?;
            let denoted = AffRel::from_linear(signal_flow_relation(&to_signal_flow(&term)?)?);
            Ok(boxed == denoted)
        })()
        .map_err(|e| e.to_string())?;
        if !ok {
            failed.push(case);
        }
    }
    Ok(summarize("square", cases, &failed, seed))
}

fn check_lagrangian(seed: u64, cases: usize) -> Result<bool, String> {
    let pool = element_label_pool();
    let mut failed = Vec::new();
    for case in 0..cases {
        let mut rng = case_rng(seed, case);
        let (m, n) = (rng.gen_range(0..=3usize), rng.gen_range(0..=3usize));
        let circuit = random_circuit(&mut rng, m, n, 5, 5, &pool);
        let ok = (|| -> Result<bool, circat::Error> {
            let rel = circuit.blackbox(&ee_semantics(&circuit)?)?;
            is_lagrangian_affine(&rel, m, n)
        })()
        .map_err(|e| e.to_string())?;
        if !ok {
            failed.push(case);
        }
    }
    Ok(summarize("lagrangian", cases, &failed, seed))
}
