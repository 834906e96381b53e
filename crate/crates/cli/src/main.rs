//! `cambrian-pop`: pop-stack dynamics on weak orders, Cambrian lattices and
//! torsion classes from the command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a `verify`
//! sweep finds a counterexample.

mod args;
mod checks;
mod common;
mod lattices;
mod output;
mod quiver;
mod typea;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, SmcAction};
use output::Output;

fn dispatch(command: &Command) -> Result<(&'static str, Output)> {
    Ok(match command {
        Command::Roots(a) => ("roots", lattices::roots(a)?),
        Command::Lattice(a) => ("lattice", lattices::lattice(a)?),
        Command::Pop(a) => ("pop", lattices::pop(a)?),
        Command::Orbit(a) => ("orbit", lattices::orbit(a)?),
        Command::Image(a) => ("image", lattices::image(a)?),
        Command::Cjc(a) => ("cjc", lattices::cjc(a)?),
        Command::Arcs(a) => ("arcs", typea::arcs(a)?),
        Command::Motzkin(a) => ("motzkin", typea::motzkin(a)?),
        Command::Heap(a) => ("heap", lattices::heap(a)?),
        Command::Rep(a) => ("rep", quiver::rep(a)?),
        Command::Smc(a) => match &a.action {
            SmcAction::List(c) => ("smc list", quiver::smc_list(c)?),
            SmcAction::Mutate(m) => ("smc mutate", quiver::smc_mutate(m)?),
        },
        Command::Verify(a) => ("verify", checks::verify(a)?),
        Command::Lab(a) => ("lab", checks::lab(a)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = dispatch(&cli.command).and_then(|(name, out)| Ok((out.render(cli.format, cli.envelope, name)?, out.failed)));
    match result {
        Ok((text, failed)) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
