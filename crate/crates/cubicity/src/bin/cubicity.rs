use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cubicity::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(err) => {
            let reason = err.to_string().replace('\n', " ");
            eprintln!("error[{}]: {reason}", err.kind());
            err.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(status as u8)
}
