use std::process::ExitCode;

use qchar::cli::{run_from_args, EXIT_USAGE};

fn main() -> ExitCode {
    let (code, text) = run_from_args(std::env::args_os());
    if code == EXIT_USAGE {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
