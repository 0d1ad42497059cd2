use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "csf", version, about = "Chromatic symmetric functions of labelled graphs, centred at a vertex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Largest instance size for `verify` and `scan-e-positivity`.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,

    /// Stop a suite at its first failure.
    #[arg(long, global = true)]
    pub fail_fast: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print y_{G:v}, the chromatic symmetric function centred at a vertex.
    ComputeY {
        #[command(flatten)]
        graph: GraphArgs,
        /// Centre vertex: an index in 1..=n, or `last`.
        #[arg(long, default_value = "last")]
        vertex: String,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
    },
    /// Print X_G in Sym.
    ComputeX {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
    },
    /// Run a verification suite; exits 1 if any instance fails.
    Verify {
        /// Suite name; `csf verify list` prints them.
        suite: String,
        #[command(flatten)]
        graph: GraphArgs,
        /// Random labelled graphs added at n = max-n once max-n >= 6.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print a member of a named family as graph JSON.
    Family {
        /// Family name; `csf family list` prints them.
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Report (e)-positivity of y_{G:v}: every vertex of one graph, or the last
    /// vertex of every unit interval graph up to --max-n.
    ScanEPositivity {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct GraphArgs {
    /// Graph JSON file, or `-` for stdin.
    #[arg(long)]
    pub graph: Option<PathBuf>,

    /// Named family; parameters come from --params or the shorthand flags.
    #[arg(long)]
    pub family: Option<String>,

    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Family parameters as key=value.
    #[arg(long = "params", short = 'p', num_args = 1.., value_parser = parse_kv)]
    pub params: Vec<(String, String)>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
}

impl ParamArgs {
    pub fn to_map(&self) -> BTreeMap<String, String> {
        let mut out: BTreeMap<String, String> = self.params.iter().cloned().collect();
        for (key, v) in [("m", self.m), ("n", self.n), ("k", self.k), ("l", self.l), ("d", self.d)] {
            if let Some(v) = v {
                out.insert(key.to_string(), v.to_string());
            }
        }
        out
    }
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisArg {
    E,
    P,
    M,
}

impl From<BasisArg> for csf_core::algebra::Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::E => Self::E,
            BasisArg::P => Self::P,
            BasisArg::M => Self::M,
        }
    }
}
