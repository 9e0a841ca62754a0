use std::process::ExitCode;

use asgenus::poly::DEFAULT_SEED;
use asgenus::report::{run, Options};
use asgenus::zeta::DEFAULT_BUDGET;
use clap::Parser;

/// Genus theory of the Artin–Schreier extension y^p - y = D of F_q(t).
#[derive(Parser, Debug)]
#[command(name = "as-genus", version)]
struct Args {
    /// Base field: a prime power q, "p^n", or "p^n:c0,c1,...,1" with an explicit modulus.
    #[arg(long)]
    field: String,

    /// The rational function D in t, e.g. "1/t + t". Use g for the field generator.
    #[arg(long = "d", allow_hyphen_values = true)]
    d: String,

    /// Count points and compute the L-polynomial and class number.
    #[arg(long)]
    zeta: bool,

    /// Largest field size q^k enumerated when counting points.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Modulus for F_q over F_p as comma-separated coefficients, constant term first.
    #[arg(long)]
    modulus: Option<String>,

    /// Emit a JSON document.
    #[arg(long, conflicts_with = "text")]
    json: bool,

    /// Emit a human-readable report (the default).
    #[arg(long)]
    text: bool,

    /// Seed for the randomized polynomial factorization.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options {
        zeta: args.zeta,
        budget: args.budget,
        seed: args.seed,
    };
    match run(&args.field, args.modulus.as_deref(), &args.d, &opts) {
        Ok(report) => {
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("as-genus: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
