use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use totdom_cli::{execute, write_file, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli).and_then(|o| {
        match &cli.out {
            Some(path) => write_file(path, &o.output)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(o.output.as_bytes());
            }
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => {
            eprint!("{}", o.notes);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("totdom: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
