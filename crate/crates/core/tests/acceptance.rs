//! Acceptance suite: one line per criterion, each against its time limit.

use hurwitz::selftest::{criteria, Level};

fn main() {
    let mut failed = 0;
    for c in criteria() {
        let r = c.run(Level::Full);
        println!("{}", r.line());
        if !r.ok() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria().len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
