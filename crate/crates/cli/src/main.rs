use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use roman_petersen_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let code = match run(cli, &mut out, &mut err) {
        Ok(kind) => kind as u8,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.kind as u8
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
