use std::process::ExitCode;

fn main() -> ExitCode {
    constangle_cli::app::run()
}
