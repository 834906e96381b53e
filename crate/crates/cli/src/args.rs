//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Pop-stack dynamics on weak orders, Cambrian lattices and torsion classes.
#[derive(Debug, Parser)]
#[command(name = "cambrian-pop", version, about, propagate_version = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Tag JSON objects with `"schema":"cambrian-pop/1"`.
    #[arg(long, global = true)]
    pub envelope: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots of a root system.
    Roots(TypeArgs),
    /// A weak order or Cambrian lattice: elements and cover relations.
    Lattice(LatticeArgs),
    /// Apply pop-stack sorting (or its dual) to one element.
    Pop(PopArgs),
    /// Forward orbit of an element, or orbit statistics of a lattice.
    Orbit(OrbitArgs),
    /// Image of pop-stack sorting on a Cambrian lattice.
    Image(CoxArgs),
    /// Canonical join complex: facets and the facet polynomial.
    Cjc(KindArgs),
    /// Arc diagrams: the diagram of a permutation, or sortable arcs and maximal diagrams.
    Arcs(ArcsArgs),
    /// Motzkin paths: counts, listings and the inverse of the arc-diagram bijection.
    Motzkin(MotzkinArgs),
    /// Heap of the Coxeter word and the maximal-orbit element.
    Heap(CoxArgs),
    /// Indecomposable representations of the quiver of a Coxeter element.
    Rep(RepArgs),
    /// Torsion classes as semibrick pairs, and their mutation.
    Smc(SmcArgs),
    /// Run a verification sweep; exit 2 on failure.
    Verify(VerifyArgs),
    /// Tabulate data for open conjectures (nothing is asserted).
    Lab(LabArgs),
}

/// `--type`: a finite irreducible type such as `A4`, `B 3`, `E6`, `H3`, `I2:5`.
#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Coxeter type, e.g. `A4`, `A 4`, `D5`, `I2:7`.
    #[arg(long = "type", value_name = "TYPE", num_args = 1..=2, required = true)]
    pub ty: Vec<String>,
}

/// A type together with a Coxeter element.
#[derive(Debug, Args)]
pub struct CoxArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Coxeter element as a comma-separated word of generator labels.
    #[arg(long, value_name = "WORD", conflicts_with = "bipartite")]
    pub coxeter: Option<String>,
    /// Use the bipartite Coxeter element (default: the linear one).
    #[arg(long)]
    pub bipartite: bool,
}

/// Which lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// The weak order on `W`.
    Weak,
    /// The Cambrian lattice of `c`.
    Cambrian,
}

/// A lattice selection.
#[derive(Debug, Args)]
pub struct KindArgs {
    /// `weak` or `cambrian`.
    #[arg(value_enum)]
    pub kind: Kind,
    #[command(flatten)]
    pub cox: CoxArgs,
}

/// `lattice` options.
#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub lattice: KindArgs,
    /// Label DOT edges by shard labels.
    #[arg(long)]
    pub shards: bool,
    /// Write a CSV legend (index, element) for DOT output to this file.
    #[arg(long, value_name = "PATH")]
    pub legend: Option<PathBuf>,
}

/// One group element.
#[derive(Debug, Args)]
pub struct ElementArgs {
    /// One-line permutation (type A only), e.g. `52341`.
    #[arg(long, value_name = "PERM", conflicts_with = "word")]
    pub perm: Option<String>,
    /// Word in generator labels, e.g. `1,2,1`; `e` is the identity.
    #[arg(long, value_name = "WORD")]
    pub word: Option<String>,
}

/// `pop` options.
#[derive(Debug, Args)]
pub struct PopArgs {
    #[command(flatten)]
    pub lattice: KindArgs,
    #[command(flatten)]
    pub element: ElementArgs,
    /// Apply the dual operator `pop↑`.
    #[arg(long)]
    pub up: bool,
}

/// `orbit` options.
#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub lattice: KindArgs,
    #[command(flatten)]
    pub element: ElementArgs,
}

/// `arcs` options.
#[derive(Debug, Args)]
pub struct ArcsArgs {
    /// Permutation whose arc diagram to compute.
    #[arg(long, value_name = "PERM", conflicts_with_all = ["n", "coxeter", "bipartite"])]
    pub perm: Option<String>,
    /// Rank `n` of `A_n` (arcs on `n + 1` points).
    #[arg(long)]
    pub n: Option<usize>,
    /// Coxeter element of `A_n` as a label word.
    #[arg(long, value_name = "WORD", conflicts_with = "bipartite")]
    pub coxeter: Option<String>,
    /// Use the bipartite Coxeter element.
    #[arg(long)]
    pub bipartite: bool,
    /// List every maximal sortable arc diagram.
    #[arg(long)]
    pub mad: bool,
}

/// `motzkin` options.
#[derive(Debug, Args)]
pub struct MotzkinArgs {
    /// Path length.
    #[arg(long)]
    pub n: usize,
    /// Print only the counts of all paths and of paths without height-one peaks.
    #[arg(long)]
    pub count: bool,
    /// Restrict listings to paths without height-one peaks.
    #[arg(long)]
    pub no_low_peaks: bool,
    /// Apply the inverse bijection to this path (length `n`) and print the arc diagram.
    #[arg(long, value_name = "PATH")]
    pub psi_inverse: Option<String>,
}

/// `rep` options.
#[derive(Debug, Args)]
pub struct RepArgs {
    #[command(flatten)]
    pub cox: CoxArgs,
    /// Also report Hom and Ext¹ dimensions between indecomposables `a,b`.
    #[arg(long, value_name = "A,B")]
    pub hom: Option<String>,
}

/// `smc` subcommands.
#[derive(Debug, Args)]
pub struct SmcArgs {
    #[command(subcommand)]
    pub action: SmcAction,
}

/// `smc list` or `smc mutate`.
#[derive(Debug, Subcommand)]
pub enum SmcAction {
    /// Every torsion class with its id and collection `(D, U)`.
    List(CoxArgs),
    /// Mutate the collection of a torsion class.
    Mutate(MutateArgs),
}

/// `smc mutate` options.
#[derive(Debug, Args)]
pub struct MutateArgs {
    #[command(flatten)]
    pub cox: CoxArgs,
    /// Torsion class id as printed by `smc list`.
    #[arg(long)]
    pub torsion: usize,
    /// Subset to mutate at: `d:` or `u:` followed by positions in `D` or `U`, e.g. `d:0,1`.
    #[arg(long, value_name = "SIDE:POSITIONS")]
    pub at: String,
}

/// Verification sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Image of pop on Cambrian lattices.
    Image,
    /// Pop on torsion classes equals mutation.
    PopMutation,
    /// Preimages and one- and two-pop sortability.
    Preimages,
    /// Facet generating function of the bipartite Cambrian lattices.
    GeneratingFunction,
    /// The arc-diagram to Motzkin-path bijection.
    Bijection,
    /// Orbit maxima and the maximal-orbit element.
    Orbits,
    /// Interval equivalences and the dynamical identity.
    Intervals,
    /// Image sizes, facet counts and facet polynomials.
    Bookkeeping,
    /// Extension and approximation dimension lemmas.
    Appendix,
    /// Published worked examples.
    Vectors,
    /// The full acceptance suite.
    Acceptance,
}

/// `verify` options.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which sweep.
    #[arg(value_enum)]
    pub check: Check,
    /// Restrict to one type (otherwise the full acceptance range runs).
    #[arg(long = "type", value_name = "TYPE", num_args = 1..=2)]
    pub ty: Vec<String>,
    /// One Coxeter element.
    #[arg(long, value_name = "WORD", conflicts_with_all = ["bipartite", "all_coxeter"])]
    pub coxeter: Option<String>,
    /// The bipartite Coxeter element.
    #[arg(long, conflicts_with = "all_coxeter")]
    pub bipartite: bool,
    /// Every Coxeter element (the default when `--type` is given).
    #[arg(long)]
    pub all_coxeter: bool,
    /// Rank bound for the type-A sweeps.
    #[arg(long)]
    pub n: Option<usize>,
    /// Worker threads for sweeps over Coxeter elements.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

/// Lab experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Image size of pop per Coxeter element, with linear and bipartite flagged.
    ImageSizeExtremes,
    /// Elements whose orbit has the maximal size.
    UpsilonCensus,
    /// Largest pop orbit in quotients by random congruences of the weak order.
    QuotientOrbitBound,
}

/// `lab` options.
#[derive(Debug, Args)]
pub struct LabArgs {
    /// Which experiment.
    #[arg(value_enum)]
    pub experiment: Experiment,
    #[command(flatten)]
    pub cox: CoxArgs,
    /// Number of random congruences.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Seed for random sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
