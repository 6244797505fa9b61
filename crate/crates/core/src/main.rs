use std::process::ExitCode;

fn main() -> ExitCode {
    charvar::cli::run()
}
