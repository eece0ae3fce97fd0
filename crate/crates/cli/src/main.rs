//! `geomonoid`: command-line front end to the geomonoid library.
//!
//! Exit status is 0 for a definite answer, 2 for an inconclusive one and 1
//! for usage or input errors.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "geomonoid", version, about = "Geometry of finitely generated monoids at desk scale")]
pub struct Cli {
    /// Search depth: rewriting steps for equality search, BFS depth for distances.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Cap on words, vertices or 2-path steps visited.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for subcommands that sample.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// A ball of a presentation given by builtin name or file path.
#[derive(Debug, Clone, Args)]
pub struct BallArgs {
    #[arg(long)]
    pub pres: String,
    #[arg(long = "L")]
    pub radius: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub eps: String,
    #[arg(long, default_value = "0")]
    pub mu: String,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long = "x-pres")]
    pub x_pres: String,
    #[arg(long = "x-L")]
    pub x_radius: usize,
    #[arg(long = "y-pres")]
    pub y_pres: String,
    #[arg(long = "y-L")]
    pub y_radius: usize,
    /// Distance strategy: `ball` or `subspace`.
    #[arg(long, default_value = "ball")]
    pub metric: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a presentation and print it back.
    Parse {
        #[arg(long)]
        pres: String,
    },
    /// Normal form under a declared confluent orientation.
    Nf {
        #[arg(long)]
        pres: String,
        #[arg(long)]
        w: String,
    },
    /// Decide u = v and report the minimal number of relation applications.
    Area {
        #[arg(long)]
        pres: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Sample the Dehn function up to n_max.
    Dehn {
        #[arg(long)]
        pres: String,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Enumerate a ball of the right Cayley graph.
    Ball {
        #[command(flatten)]
        ball: BallArgs,
    },
    /// Directed distance between two vertices, or between sampled pairs.
    Dist {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Sample this many random pairs instead (uses --seed).
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long, default_value = "ball")]
        metric: String,
    },
    /// Check d(x,y) <= lambda d(y,x) + mu on a ball.
    Qmetric {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "ball")]
        metric: String,
    },
    /// Strongly connected components (R-classes).
    Scc {
        #[command(flatten)]
        ball: BallArgs,
    },
    /// The Schützenberger graph of a vertex.
    Schutz {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        h: String,
    },
    /// 2-cells of K_n rooted at a vertex.
    KnCells {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        root: String,
    },
    /// Shortest 2-path between two parallel paths in K_n.
    Homotopy {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        root: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        /// Print the whole 2-path, not just its length.
        #[arg(long)]
        full: bool,
    },
    /// Sample the Dehn function of K_n at the given roots.
    Gamma {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        n: usize,
        #[arg(long = "i-max")]
        i_max: usize,
        /// Comma-separated root words or `#id`s.
        #[arg(long, default_value = "1")]
        roots: String,
    },
    /// Check n-quasi-simple-connectedness on a ball.
    Qsc {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long)]
        n: usize,
        #[arg(long = "i-max")]
        i_max: usize,
    },
    /// Verify a map X -> Y as a quasi-isometric embedding.
    QiCheck {
        #[command(flatten)]
        spaces: PairArgs,
        /// Vertex-map file with lines `src -> dst`.
        #[arg(long)]
        map: String,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Check that a vertex set is mu-quasi-dense.
    QiDensity {
        #[command(flatten)]
        ball: BallArgs,
        /// Comma-separated ids, or `@file`.
        #[arg(long)]
        image: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "ball")]
        metric: String,
    },
    /// Build a quasi-inverse X -> Y of a quasi-isometry g: Y -> X.
    QiInverse {
        #[command(flatten)]
        spaces: PairArgs,
        /// Vertex-map file for g, from Y to X.
        #[arg(long)]
        map: String,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// The cell-size bound m for transporting simple connectivity.
    Mbound {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: u64,
    },
    /// Compare growth tables: f(j) <= a g(aj) + aj.
    TypeCmp {
        /// CSV file `n,value`.
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, conflicts_with = "a_max")]
        a: Option<u64>,
        /// Search for the smallest witness a up to this value.
        #[arg(long = "a-max")]
        a_max: Option<u64>,
    },
    /// Check the bushy-tree degree hypotheses on an undirected ball.
    Bushy {
        #[command(flatten)]
        ball: BallArgs,
        #[arg(long, default_value_t = 3)]
        floor: usize,
        #[arg(long)]
        cap: usize,
    },
    /// Normal form in M(X).
    MxNf {
        #[arg(long)]
        x: String,
        #[arg(long)]
        w: String,
    },
    /// Word problem in M(X).
    MxWp {
        #[arg(long)]
        x: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Ball of M(X) built from normal forms.
    MxBall {
        #[arg(long)]
        x: String,
        #[arg(long = "L")]
        radius: usize,
    },
    /// Compare the unlabelled balls of M(X) and M(Y).
    MxIso {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long = "L")]
        radius: usize,
    },
    /// Ball of the free group of rank two.
    F2Ball {
        #[arg(long = "L")]
        radius: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let newline = if out.text.ends_with('\n') { "" } else { "\n" };
            // a closed pipe downstream is not our error
            let _ = write!(stdout, "{}{newline}", out.text).and_then(|_| stdout.flush());
            ExitCode::from(if out.definite { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
