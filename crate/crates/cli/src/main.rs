use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = skewbrace_cli::run(std::env::args_os());
    let written = if result.status == skewbrace_cli::STATUS_ERROR && !result.report.trim_start().starts_with('{') {
        std::io::stderr().write_all(result.report.as_bytes())
    } else {
        std::io::stdout().write_all(result.report.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(result.status as u8)
}
