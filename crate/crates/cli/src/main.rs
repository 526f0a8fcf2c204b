use std::process::ExitCode;

fn main() -> ExitCode {
    let (report, code) = dsgeom_cli::run(std::env::args_os());
    print!("{}", report.render());
    ExitCode::from(code as u8)
}
