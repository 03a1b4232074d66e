use std::process::ExitCode;

use steinfill::{parse, render, run, CliError};

fn main() -> ExitCode {
    let code = match parse(std::env::args().skip(1)) {
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            e.exit_code()
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
        Ok(cmd) => match run(&cmd) {
            Ok(report) => {
                print!("{}", render(&report, cmd.format));
                report.exit_code()
            }
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
    };
    ExitCode::from(code as u8)
}
