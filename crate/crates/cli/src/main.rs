use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use groth_cli::{run, Cli, CAPS_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_caps = std::env::var(CAPS_ENV).ok();
    match run(&cli, env_caps.as_deref()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("groth: some checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("groth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
