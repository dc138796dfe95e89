use std::process::ExitCode;

use lorentz_harmonics_cli::{execute, parse_args};

fn main() -> ExitCode {
    let (cfg, env_quad_order) = match parse_args(std::env::args_os()) {
        Ok(parsed) => parsed,
        Err(e) => e.exit(),
    };
    match execute(&cfg, env_quad_order, &mut std::io::stdout().lock()) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
