use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env = std::env::var("ASSOC_MAX_WEIGHT").ok();
    let outcome = assoc_cli::run(std::env::args_os(), env.as_deref());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
