use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jetframe",
    version,
    about = "Moving frames and differential invariants of the KdV equation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the invariant table of a solution jet.
    Eval(EvalArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolutionKind {
    Soliton,
    Rational,
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    /// `U_T = ±1`, pivot `u_t + u u_x`.
    T,
    /// `U_X = ±1`, pivot `u_x`.
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchPolicy {
    /// Reject jets whose pivot is negative.
    StrictPositive,
    /// Use the branch given by the sign of the pivot.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    JsonLines,
    Csv,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub solution: SolutionKind,
    /// Soliton speed.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Soliton phase.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phase: f64,
    /// Value of the constant solution.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x0: f64,
    #[arg(long, value_enum)]
    pub frame: FrameArg,
    /// Largest `|α|` in the table.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = BranchPolicy::Auto)]
    pub branch_policy: BranchPolicy,
    #[arg(long, value_enum, default_value_t = Format::JsonLines)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    pub suites: String,
    #[arg(long, env = "JETFRAME_SEED")]
    pub seed: Option<u64>,
    /// Samples per suite; each suite has its own default.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 6)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::JsonLines)]
    pub format: Format,
}
