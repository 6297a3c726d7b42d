use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = nhuff_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(status.clamp(0, 255) as u8)
}
