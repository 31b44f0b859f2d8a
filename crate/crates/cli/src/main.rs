use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(msg) = macdonald_lab_cli::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let out = macdonald_lab_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
