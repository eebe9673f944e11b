use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cupprv::{GlWeight, RootType, Weight};

#[derive(Parser, Debug)]
#[command(
    name = "cupprv",
    version,
    about = "Cohomological components of tensor products"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Tsv,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Root system type: A, B, C, D or G.
    #[arg(long = "type", short = 't')]
    pub root_type: Option<RootType>,
    #[arg(long, short = 'r')]
    pub rank: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Read weights as GL(n+1) tuples; the type is then A_n.
    #[arg(long)]
    pub gl: bool,
    /// First weight, e.g. 1,2 (fundamental-weight coordinates unless --gl).
    #[arg(long, allow_hyphen_values = true)]
    pub lam: Weight,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Weight,
}

#[derive(Args, Debug, Clone)]
pub struct TripleWords {
    /// Reduced words with 1-indexed letters, e.g. 1,2; empty or "e" for the identity.
    #[arg(long, allow_hyphen_values = true)]
    pub w1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w3: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root system tables, using the cache directory when configured.
    Rootsys {
        #[command(flatten)]
        system: SystemArgs,
        /// Cache directory (overrides CUPPRV_CACHE_DIR).
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Tensor product decomposition, or weight multiplicities without --mu.
    Decompose {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        gl: bool,
        #[arg(long, allow_hyphen_values = true)]
        lam: Weight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<Weight>,
    },
    /// Generalized PRV components with the component table.
    Prv {
        #[command(flatten)]
        pair: PairArgs,
        /// Largest scale for the stability check.
        #[arg(short = 'K', long = "k-max", default_value_t = 2)]
        k_max: usize,
    },
    /// Cohomological components and their witnesses.
    Cohomological {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Surjectivity verdict for arbitrary characters.
    Theorem1 {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Admissible triples as JSON lines.
    Triples {
        #[command(flatten)]
        system: SystemArgs,
        /// Skip triples with an identity entry.
        #[arg(long)]
        nontrivial: bool,
    },
    /// Partitions of the positive roots of A_n into n inversion sets.
    Catalan {
        #[arg(long)]
        n: usize,
    },
    /// Reduction pattern of a GL triple.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        lam: GlWeight,
        #[arg(long, allow_hyphen_values = true)]
        mu: GlWeight,
        #[arg(long, allow_hyphen_values = true)]
        nu: GlWeight,
        /// List weak patterns instead.
        #[arg(long)]
        weak: bool,
        #[arg(long, default_value_t = cupprv::reduction::DEFAULT_CHAIN_CAP)]
        cap: usize,
    },
    /// Structure constant d_{w1,w2}^{w3} for permutations in one-line notation.
    SchubertD {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long)]
        w3: String,
    },
    /// Scans over conjectures and open questions.
    Scans {
        #[command(subcommand)]
        scan: Scan,
    },
    /// Hull of the tensor product support slice.
    LrSlice {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'k', long = "k-max", default_value_t = cupprv::lrcone::DEFAULT_K_MAX)]
        k_max: usize,
    },
    /// Dimension of the cone of an admissible triple.
    ConeDim {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        words: TripleWords,
        /// Every admissible triple.
        #[arg(long)]
        all: bool,
    },
    /// SVG drawing of a rank-two slice.
    Figure {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'k', long = "k-max", default_value_t = cupprv::lrcone::DEFAULT_K_MAX)]
        k_max: usize,
    },
    /// Reruns the fixed worked examples; exits 0 iff all match.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
pub enum Scan {
    /// Admissible triples have d = 1.
    Claim0 {
        #[arg(long, default_value_t = 4)]
        letters: usize,
        /// Allow six letters.
        #[arg(long)]
        long: bool,
    },
    /// Additive triples with d != 0 are admissible.
    Claim10 {
        #[arg(long, default_value_t = 4)]
        letters: usize,
        #[arg(long)]
        long: bool,
    },
    /// Both scans for a root system; only type A is supported.
    Q0 {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        long: bool,
    },
    /// Weak reduction patterns against cohomological components.
    Q5 {
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
    },
    /// Vertices of the slice against cohomological components.
    Q7 {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'k', long = "k-max", default_value_t = cupprv::lrcone::DEFAULT_K_MAX)]
        k_max: usize,
    },
    /// Vertex and component counts over a grid of pairs.
    Q8 {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 2)]
        max_entry: i64,
        #[arg(short = 'k', long = "k-max", default_value_t = 1)]
        k_max: usize,
    },
    /// Additive lengths plus a nonzero coefficient against surjectivity.
    Q22 {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Stable multiplicity one against cohomological components.
    Conjecture {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'K', long = "k-max", default_value_t = 2)]
        k_max: usize,
    },
}
