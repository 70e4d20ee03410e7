use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let report = powersum::run(&args);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = match &report.help {
        Some(text) => write!(out, "{text}"),
        None => report.lines().iter().try_for_each(|l| writeln!(out, "{l}")),
    };
    // A closed pipe is not an error worth reporting.
    let _ = written.and_then(|_| out.flush());
    for d in &report.diagnostics {
        eprintln!("{}", d.trim_end());
    }
    ExitCode::from(report.exit_code)
}
