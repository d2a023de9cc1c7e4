use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout();
    ExitCode::from(fakequad::cli::run(&args, &mut stdout) as u8)
}
