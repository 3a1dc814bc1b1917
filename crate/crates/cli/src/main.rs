use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = oposet_cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut out, &mut err);
    let _ = io::stdout().write_all(&out);
    let _ = io::stderr().write_all(&err);
    ExitCode::from(code as u8)
}
