use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;

fn main() -> anyhow::Result<ExitCode> {
    let outcome = folcan::cli::run(std::env::args_os());
    std::io::stdout()
        .write_all(outcome.stdout.as_bytes())
        .context("writing to stdout")?;
    std::io::stderr()
        .write_all(outcome.stderr.as_bytes())
        .context("writing to stderr")?;
    Ok(ExitCode::from(outcome.status as u8))
}
