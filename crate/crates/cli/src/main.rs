mod commands;
mod parse;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multitree::{Bounds, Error};

#[derive(Parser)]
#[command(name = "multitree", version, about = "Exact enumeration of multitype Cayley trees, forests and planar cacti")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    /// Human-oriented output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Limits {
    /// Largest vertex set the tree and forest generators accept.
    #[arg(long, global = true, env = "MULTITREE_LIMIT_VERTICES")]
    limit_vertices: Option<usize>,
    /// Largest number of types for skeleton enumeration.
    #[arg(long, global = true, env = "MULTITREE_LIMIT_TYPES")]
    limit_types: Option<usize>,
    /// Largest plane tree size.
    #[arg(long, global = true, env = "MULTITREE_LIMIT_PLANE_VERTICES")]
    limit_plane_vertices: Option<usize>,
    /// Largest term count of a generating-function expansion.
    #[arg(long, global = true, env = "MULTITREE_LIMIT_GF_TERMS")]
    limit_gf_terms: Option<usize>,
    /// Largest cactus size (number of polygons).
    #[arg(long, global = true, env = "MULTITREE_LIMIT_CACTUS_SIZE")]
    limit_cactus_size: Option<usize>,
    /// Largest polygon degree for cacti.
    #[arg(long, global = true, env = "MULTITREE_LIMIT_CACTUS_D")]
    limit_cactus_d: Option<usize>,
}

impl Limits {
    fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut b.max_vertices, self.limit_vertices);
        set(&mut b.max_types, self.limit_types);
        set(&mut b.max_plane_vertices, self.limit_plane_vertices);
        set(&mut b.max_gf_terms, self.limit_gf_terms);
        set(&mut b.max_cactus_size, self.limit_cactus_size);
        set(&mut b.max_cactus_d, self.limit_cactus_d);
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form count.
    Count(CountArgs),
    /// Expand a generating function.
    Gf(GfArgs),
    /// Enumerate objects as JSON Lines.
    List(ListArgs),
    /// Apply or check the tree bijections.
    #[command(subcommand)]
    Bijection(BijectionCommand),
    /// Coefficients of a functional system, by several routes.
    Lagrange(LagrangeArgs),
    /// Planar cacti: counts, listings and bijections.
    #[command(subcommand)]
    Cacti(CactiCommand),
    /// Run the oracle suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    UnitypeDegree,
    EdgeTypes,
    InjectiveEdgeTypes,
    Embedded,
    InjectiveEmbedded,
    Indegree,
    DegreeClasses,
    CompleteTypes,
    CompleteSpecial,
    Plane,
    CactiDegree,
    CactiTotal,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    stat: Stat,
    /// Number of types; checked against --profile when both are given.
    #[arg(long)]
    d: Option<usize>,
    /// Vertex counts per type, e.g. `2,2`.
    #[arg(long)]
    profile: Option<String>,
    /// Root type.
    #[arg(long)]
    root: Option<u32>,
    /// Degree sequence (`unitype-degree`) or indegree entries `s,t,i:k;…` (`indegree`).
    #[arg(long)]
    gamma: Option<String>,
    /// Edge-type counts `s,t:k;…`.
    #[arg(long)]
    m: Option<String>,
    /// Allowed edge types `s,t;…`.
    #[arg(long)]
    digraph: Option<String>,
    /// Class counts: `t:c_1,…,c_d:k;…`, or `t,u:c_1,…,c_d:k;…` for complete types.
    #[arg(long)]
    classes: Option<String>,
    /// Plane tree degree distribution `N_0,N_1,…`.
    #[arg(long)]
    counts: Option<String>,
    /// Cactus vertex degrees in type-major order.
    #[arg(long)]
    degrees: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GfKind {
    Multitype,
    Forests,
    Delta,
    Star,
}

#[derive(Args)]
struct GfArgs {
    #[arg(long, value_enum, default_value = "multitype")]
    kind: GfKind,
    #[arg(long)]
    profile: String,
    #[arg(long)]
    root: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListKind {
    Trees,
    Forests,
    Unrooted,
    Plane,
    Skeletons,
    Cacti,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long, value_enum)]
    kind: ListKind,
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    root: Option<u32>,
    /// Vertex count (`unrooted`, `plane`).
    #[arg(long)]
    n: Option<usize>,
    /// Number of types (`skeletons`).
    #[arg(long)]
    d: Option<usize>,
    /// Stop after this many lines.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Subcommand)]
enum BijectionCommand {
    /// Move the marked edge of an unrooted tree from vertex `from` to vertex `to`.
    Unitype {
        /// Tree JSON `{"n":…,"edges":[…]}`, `@file`, or `-` for stdin.
        #[arg(long)]
        tree: String,
        /// Marked edge `a,b`.
        #[arg(long)]
        mark: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Move a type-s child of `(t, from)` onto `(t, to)`.
    Marked {
        /// Also map the image back and check it returns the input.
        #[arg(long)]
        verify: bool,
        /// Marked tree JSON, `@file`, or `-`.
        #[arg(long)]
        tree: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// The star vector, reduction factor and schedule of an indegree vector.
    Star {
        #[arg(long)]
        profile: String,
        /// Entries `s,t,i:k;…`.
        #[arg(long)]
        gamma: String,
    },
    /// Exhaustively check the bijections.
    Verify(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    #[arg(long, default_value_t = 3)]
    max_d: usize,
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Every route, plus whether they agree.
    All,
    /// Coefficients of the fixed-point solution.
    Solve,
    /// Weighted sums over multitype trees.
    #[value(alias = "tree")]
    Treesum,
    /// `G_{d+1}` composed with the solution.
    Direct,
    /// The determinant form of the inversion formula.
    Rhs,
}

#[derive(Args)]
struct LagrangeArgs {
    /// System record JSON `{"d":…,"order":…,"g":[…]}`, `@file`, or `-`.
    #[arg(long)]
    system: String,
    /// Truncation order, overriding the one in the record.
    #[arg(long)]
    order: Option<u32>,
    /// Multi-index `n_1,…,n_d`.
    #[arg(long, alias = "n")]
    coefficient: String,
    #[arg(long, value_enum, default_value = "all")]
    route: Route,
}

#[derive(Subcommand)]
enum CactiCommand {
    /// Count cacti of a profile, optionally with fixed vertex degrees.
    Count {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        degrees: Option<String>,
    },
    /// List the cacti of a profile as JSON Lines.
    List {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Move the polygon after `g_j` around `(s,j)` onto `(s,k)`.
    Phi {
        /// Cactus JSON, `@file`, or `-`.
        #[arg(long)]
        cactus: String,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
    },
    /// Merge the last type-r vertex into `(r,1)` and split a fresh type-s vertex.
    Psi {
        #[arg(long)]
        cactus: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Exhaustively check the cactus counts and bijections.
    Verify {
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 7)]
    max_vertices: usize,
    #[arg(long, default_value_t = 3)]
    max_d: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Include elapsed milliseconds in each report.
    #[arg(long)]
    timing: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonIntegral(_) => 1,
        Error::SizeBound { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = cli.limits.bounds();
    let mut stdout = io::BufWriter::new(io::stdout().lock());
    let result = commands::run(cli.command, &bounds, cli.pretty, &mut stdout);
    let _ = stdout.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
