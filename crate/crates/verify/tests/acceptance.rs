//! The acceptance suite: every criterion runs exhaustively and prints one
//! `PASS` or `FAIL` line; the process exits nonzero if any criterion fails.
//!
//! This target has no libtest harness, so the lines are printed by a plain
//! `cargo test` without `--nocapture`.

use std::process::ExitCode;

use cambrian_verify::{run, TITLES};

fn main() -> ExitCode {
    println!("\nrunning {} acceptance criteria", TITLES.len());
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() as u8 {
        match run(id) {
            Ok(outcome) => {
                println!("{}", outcome.line());
                for note in &outcome.notes {
                    println!("    note: {note}");
                }
                if !outcome.passed() {
                    failed.push(id);
                }
            }
            Err(e) => {
                println!("FAIL criterion {id} ({}): error: {e}", TITLES[id as usize - 1]);
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed\n", TITLES.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}\n");
        ExitCode::FAILURE
    }
}
