use std::process::ExitCode;

fn main() -> ExitCode {
    let status = geocipher::cli::cli_main(std::env::args_os());
    ExitCode::from(status as u8)
}
