use std::io;
use std::process::ExitCode;

use clap::Parser;
use jetframe_cli::{run, Cli, ExitStatus};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::Usage.code()
            } else {
                0
            });
        }
    };
    let status = run(cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status.code())
}
