use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact values and winners for the partizan domination game on colored graphs.
///
/// INPUT is a family description such as `star(center=A,a=1,b=1,c=0)`, an
/// inline edge list (`v 1 A; v 2 B; e 1 2`), or the path of a file holding
/// either form.
#[derive(Parser, Debug)]
#[command(name = "domgame", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical value, its classification and, for solved families, the
    /// closed form checked against the exhaustive search.
    Value {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Winner under optimal play.
    Winner {
        input: String,
        #[arg(long, value_enum, default_value_t = FirstArg::Alice)]
        first: FirstArg,
        #[command(flatten)]
        common: Common,
    },
    /// Outcome class: AliceAlways, BobAlways, FirstPlayerWins or SecondPlayerWins.
    Outcome {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Value of the disjoint union of several inputs, component by component.
    Sum {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites (all of them by default).
    Verify {
        /// kernel-identities, stars, bipartite, split, paths-cycles, laws,
        /// star-forests, nimbers or all.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Random graphs drawn by the laws suite.
        #[arg(long)]
        samples: Option<usize>,
        /// Random forests drawn by the star-forests suite.
        #[arg(long)]
        forests: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Comma-separated vertex labels that start out dominated.
    #[arg(long, value_delimiter = ',')]
    pub predominate: Vec<String>,
    /// Largest graph or component handed to the exhaustive search.
    #[arg(long, default_value_t = 22)]
    pub max_vertices: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FirstArg {
    Alice,
    Bob,
}
