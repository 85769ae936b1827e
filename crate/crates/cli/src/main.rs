use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mexkit_cli::run(std::env::args_os()))
}
