//! `trop`: command-line access to the `tropical` crate with JSON in and out.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod run;

#[derive(Parser, Debug)]
#[command(name = "trop", version, about = "Exact tropical algebra from the command line")]
pub struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a tropical polynomial at a point.
    Eval {
        #[arg(short = 'f', long = "poly")]
        poly: PathBuf,
        /// Comma-separated coordinates, e.g. `1,-1/2,inf`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// List the bend relations of a polynomial, optionally testing a point.
    Bend {
        #[arg(short = 'f', long = "poly")]
        poly: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Cells of the tropical hypersurface, with plot data in the plane.
    Hypersurface {
        #[arg(short = 'f', long = "poly")]
        poly: PathBuf,
    },
    /// Tropicalize the degree truncation of an ideal.
    Tropicalize(TropicalizeArgs),
    /// Valuated matroid operations.
    Matroid {
        #[command(subcommand)]
        op: MatroidOp,
    },
    /// Tropical exterior algebra operations.
    Exterior {
        #[command(subcommand)]
        op: ExteriorOp,
    },
    /// Tropical Clifford algebras.
    Clifford {
        #[command(subcommand)]
        op: CliffordOp,
    },
    /// Maslov-dequantized addition `log_ℓ(ℓ^a + ℓ^b)`.
    Dequantize {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long)]
        ell: f64,
    },
    /// Valuation of a field element given as `5/6` or Puiseux JSON.
    Valuate {
        #[arg(long, default_value = "trivial")]
        valuation: String,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
}

#[derive(Args, Debug)]
pub struct TropicalizeArgs {
    /// JSON file with `{"nvars": n, "generators": [...]}`.
    #[arg(long)]
    pub gens: PathBuf,
    /// `trivial`, `padic:<p>` or `puiseux`.
    #[arg(long, default_value = "trivial")]
    pub valuation: String,
    #[arg(long)]
    pub degree: u32,
    /// Use the degree-`d` part instead of everything of degree at most `d`.
    #[arg(long)]
    pub homogeneous: bool,
    /// Tropical polynomial to test for membership in the truncation.
    #[arg(long)]
    pub member: Option<PathBuf>,
    /// Number of sampled elimination-axiom trials.
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum MatroidOp {
    /// Check the valuated exchange axiom.
    Check {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
    },
    Circuits {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
    },
    Cocircuits {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
    },
    Dual {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
    },
    /// Membership of a point in the tropical linear space.
    Member {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Vector elimination of `f` and `g` at index `beta` (1-based).
    Eliminate {
        #[arg(short = 'm', long = "matroid")]
        matroid: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        beta: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExteriorOp {
    Wedge {
        #[arg(short = 'a')]
        a: PathBuf,
        #[arg(short = 'b')]
        b: PathBuf,
    },
    /// Circuit forms read off from `e_i ∧ p`.
    Circuits {
        #[arg(short = 'p')]
        p: PathBuf,
    },
    Dual {
        #[arg(short = 'p')]
        p: PathBuf,
    },
    Member {
        #[arg(short = 'p')]
        p: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CliffordOp {
    /// The full basis multiplication table of `C_n^trop`.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Compare `C_m ⊗ C_n` with `C_{m+n}`.
    TensorCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run::main(cli)
}
