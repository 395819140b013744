use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qdivisor_cli::run(std::env::args_os()))
}
