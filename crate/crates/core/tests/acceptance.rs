//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

fn main() -> ExitCode {
    let results = qaffine::acceptance::run_all();
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
