use std::collections::BTreeMap;
use std::io::{self, Write};

use jetframe::verify::{parse_suites, run_suite, VerifyConfig};
use jetframe::{invariant_table, Branch, Error, FrameKind, Solution};

use crate::args::{
    BranchPolicy, Cli, Command, EvalArgs, Format, FrameArg, SolutionKind, VerifyArgs,
};
use crate::output::{
    to_json_line, write_checks_csv, write_table_csv, CheckRecord, OutputRecord, SummaryRecord,
    TableRecord,
};

/// Seed used when neither `--seed` nor `JETFRAME_SEED` is given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    VerificationFailed,
    /// Singular frame or a point outside a solution's domain.
    Domain,
    Usage,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::VerificationFailed => 1,
            ExitStatus::Domain => 2,
            ExitStatus::Usage => 64,
        }
    }

    pub fn of(err: &Error) -> ExitStatus {
        match err {
            Error::Usage(_) | Error::UnsupportedFrame(_) => ExitStatus::Usage,
            Error::Domain(_)
            | Error::SingularFrame { .. }
            | Error::Degenerate { .. }
            | Error::Evaluation(_) => ExitStatus::Domain,
        }
    }
}

enum Failure {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs a parsed command, writing records to `out` and diagnostics to `diag`.
pub fn run(cli: Cli, out: &mut dyn Write, diag: &mut dyn Write) -> ExitStatus {
    let result = match cli.command {
        Command::Eval(args) => eval(&args, out),
        Command::Verify(args) => verify(&args, out, diag),
    };
    match result {
        Ok(status) => status,
        Err(Failure::Core(e)) => {
            let _ = writeln!(diag, "jetframe: {e}");
            ExitStatus::of(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(diag, "jetframe: cannot write output: {e}");
            ExitStatus::VerificationFailed
        }
    }
}

fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<ExitStatus, Failure> {
    if args.order == 0 || args.order > jetframe::MAX_ORDER {
        return Err(Error::Usage(format!(
            "--order must be between 1 and {}, got {}",
            jetframe::MAX_ORDER,
            args.order
        ))
        .into());
    }
    let (solution, parameters) = match args.solution {
        SolutionKind::Soliton => (
            Solution::soliton(args.c, args.phase),
            BTreeMap::from([("c".to_string(), args.c), ("phase".to_string(), args.phase)]),
        ),
        SolutionKind::Rational => (Solution::Rational, BTreeMap::new()),
        SolutionKind::Constant => (
            Solution::Constant { value: args.u0 },
            BTreeMap::from([("u0".to_string(), args.u0)]),
        ),
    };
    let kind = match args.frame {
        FrameArg::T => FrameKind::TNormalized,
        FrameArg::X => FrameKind::XNormalized,
    };
    let jet = solution.jet_at(args.t0, args.x0, args.order)?;
    let table = invariant_table(&jet, kind, args.order)?;
    if args.branch_policy == BranchPolicy::StrictPositive && table.branch == Branch::Negative {
        return Err(Error::Domain(format!(
            "{} = {:e} is negative; rerun with --branch-policy auto to use the negative branch",
            kind.pivot_kind(),
            table.pivot
        ))
        .into());
    }
    let record = TableRecord::new(solution.name(), parameters, (args.t0, args.x0), &table);
    match args.format {
        Format::JsonLines => writeln!(out, "{}", to_json_line(&OutputRecord::Table(record)))?,
        Format::Csv => write_table_csv(out, &record)?,
    }
    Ok(ExitStatus::Success)
}

fn verify(
    args: &VerifyArgs,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<ExitStatus, Failure> {
    let config = VerifyConfig {
        suites: parse_suites(&args.suites)?,
        seed: args.seed.unwrap_or(DEFAULT_SEED),
        samples: args.samples,
        order: args.order,
        ..VerifyConfig::default()
    };
    let reports = run_suite(&config)?;
    for r in &reports {
        writeln!(diag, "{r}")?;
    }
    let checks: Vec<CheckRecord> = reports
        .iter()
        .map(|r| CheckRecord::new(r, config.order))
        .collect();
    let summary = SummaryRecord {
        passed: reports.iter().all(|r| r.passed),
        seed: config.seed,
        order: config.order,
        suites: reports.len(),
        failed: reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.name.clone())
            .collect(),
    };
    match args.format {
        Format::JsonLines => {
            for c in &checks {
                writeln!(out, "{}", to_json_line(&OutputRecord::Check(c.clone())))?;
            }
            writeln!(
                out,
                "{}",
                to_json_line(&OutputRecord::Summary(summary.clone()))
            )?;
        }
        Format::Csv => write_checks_csv(out, &checks, &summary)?,
    }
    Ok(if summary.passed {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailed
    })
}
