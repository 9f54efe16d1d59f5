use std::process::ExitCode;

use geonum_cli::{dim_cap_from_env, parse_args, run, EXIT_INPUT};

fn main() -> ExitCode {
    let cap = match dim_cap_from_env() {
        Ok(cap) => cap,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let (code, out) = match parse_args(std::env::args_os(), cap) {
        Ok((cfg, input)) => run(&cfg, &input),
        Err(e) => e,
    };
    if code == 0 || code == 2 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    ExitCode::from(code as u8)
}
