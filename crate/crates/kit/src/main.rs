use std::process::ExitCode;

fn main() -> ExitCode {
    let cap = std::env::var("HEAWOOD_CAP").ok();
    let code = heawood_kit::cli::run(
        std::env::args_os(),
        cap.as_deref(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    ExitCode::from(code as u8)
}
