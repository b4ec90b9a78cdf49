mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations with 3-dimensional quadratic algebras, twisted
/// superpotentials and Hesse elliptic curves.
#[derive(Parser, Debug)]
#[command(name = "asreg", version)]
pub struct Cli {
    /// Coefficient field: q, q-zeta3 or fp:<prime>.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every pseudorandom choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Parameter binding name=value; repeatable.
    #[arg(long = "bind", global = true, value_name = "NAME=VALUE")]
    pub bind: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Is the potential cyclically invariant?
    CheckSp { file: PathBuf },
    /// Search for θ′ with (θ′⊗id⊗id)φ(w) = w.
    CheckTsp { file: PathBuf },
    /// The twist w^θ = (θ²⊗θ⊗id)(w).
    Twist {
        file: PathBuf,
        /// Nine comma-separated entries, row-major; row i is the image of x_i.
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Relations of the derivation-quotient algebra D(w).
    Dqa { file: PathBuf },
    /// Regularity verdict with the trace of each stage.
    Regular { file: PathBuf },
    /// Nakayama automorphism of D(w) or of the algebra given by relations.
    Nakayama { file: PathBuf },
    /// Run the catalog verification pipeline.
    Verify(VerifyArgs),
    /// Print the encoded tables as Markdown.
    Tables,
    /// Hesse elliptic curve operations.
    Ec(EcArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Table1,
    Table2,
    Table3,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub table: Table,
    /// Restrict to one type, e.g. T1, S'1, TL4.
    #[arg(long = "type")]
    pub type_id: Option<String>,
    /// Sampled bindings per row (ignored when --bind is given).
    #[arg(long, default_value_t = 3)]
    pub count: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EcOp {
    J,
    Add,
    Torsion,
    Sklyanin,
    Regular,
    G1,
    Extension,
}

#[derive(Args, Debug)]
pub struct EcArgs {
    pub op: EcOp,
    /// Hesse parameter λ (λ³ ≠ 1).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Work over 𝔽_p; overrides --field.
    #[arg(long)]
    pub prime: Option<u64>,
    /// A point a,b,c on the curve; sampled when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Second point for `add`.
    #[arg(long, allow_hyphen_values = true)]
    pub point2: Option<String>,
    /// Power of τ in σ = σ_p τⁱ.
    #[arg(long, default_value_t = 0)]
    pub i: u32,
    /// Torsion order for `torsion`.
    #[arg(long, default_value_t = 3)]
    pub n: i64,
    /// Number of sampled points for `g1` and `extension`.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
