use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twinllt_core::{Basis, HessFn, Role};
use twinllt_gkm::{Action, Solver, Variant};

/// Unicellular LLT polynomials, chromatic quasisymmetric functions and the
/// cohomology of twin manifolds and Hessenberg varieties.
#[derive(Parser, Debug)]
#[command(name = "twinllt", version, about, long_about = None)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory of the memo cache for the recursive engines.
    #[arg(long, global = true, env = "TWINLLT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the memo cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Seed for the two random primes of mod-p arithmetic.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Use exact rational elimination instead of two primes.
    #[arg(long, global = true)]
    pub exact: bool,
}

/// Hessenberg functions to act on: explicit lists, all of one size, or both.
#[derive(Args, Debug, Clone)]
pub struct Targets {
    /// A Hessenberg function such as 2,3,3 (repeatable).
    #[arg(long = "h", value_name = "LIST")]
    pub h: Vec<HessFn>,
    /// Every Hessenberg function of this size.
    #[arg(long = "all", value_name = "N")]
    pub all: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Recursive,
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    #[command(flatten)]
    pub targets: Targets,
    #[arg(long, value_enum, default_value_t = Method::Direct)]
    pub method: Method,
    /// Output basis: m, e, h, p or s.
    #[arg(long, default_value = "m")]
    pub basis: Basis,
    #[arg(long)]
    pub json: bool,
    /// Emit the recursion's derivation tree as JSON (needs --method recursive).
    #[arg(long)]
    pub trace: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FRecursions,
    Palindromicity,
    Laws,
    Plethystic,
    GkmLlt,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The unicellular LLT polynomial of h.
    Llt(EngineArgs),
    /// The chromatic quasisymmetric function of h.
    Csf(EngineArgs),
    /// The Poincaré polynomial, the sum of q^asc over permutations.
    Poincare {
        #[command(flatten)]
        targets: Targets,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Modular triples in which h plays the given role.
    Triples {
        #[arg(long = "h", value_name = "LIST")]
        h: HessFn,
        #[arg(long, default_value = "middle")]
        role: Role,
        /// Restrict to one r (default: every r).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Split h into indecomposable blocks.
    Decompose {
        #[arg(long = "h", value_name = "LIST")]
        h: HessFn,
        #[arg(long)]
        json: bool,
    },
    /// The transpose of h.
    Transpose {
        #[arg(long = "h", value_name = "LIST")]
        h: HessFn,
        #[arg(long)]
        json: bool,
    },
    /// List every Hessenberg function of size n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Congruence presentations: Betti numbers, Frobenius characteristics, ξ.
    Gkm {
        #[command(subcommand)]
        command: GkmCommand,
    },
    /// Run identity suites and report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GkmCommon {
    #[command(flatten)]
    pub targets: Targets,
    /// isotypic (default) or full.
    #[arg(long, default_value = "isotypic")]
    pub solver: Solver,
    /// Permit n = 5, which is slow.
    #[arg(long)]
    pub allow_n5: bool,
}

#[derive(Subcommand, Debug)]
pub enum GkmCommand {
    /// Hilbert series and Betti polynomial.
    Betti {
        #[command(flatten)]
        common: GkmCommon,
        #[arg(long, default_value = "twin")]
        variant: Variant,
        #[arg(long)]
        json: bool,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Graded Frobenius characteristic of the dagger or dot action.
    Frobenius {
        #[command(flatten)]
        common: GkmCommon,
        #[arg(long, default_value = "dagger")]
        action: Action,
        #[arg(long, default_value = "s")]
        basis: Basis,
        #[arg(long)]
        json: bool,
    },
    /// Check that ξ maps twin solutions isomorphically onto Hessenberg ones.
    Xi {
        #[command(flatten)]
        common: GkmCommon,
        /// Highest degree (default N + n).
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}
