//! Runs the built-in reproductions and prints each check.

use detdeform::cli::{cmd_reproduce, EXAMPLE_IDS};

fn main() -> detdeform::Result<()> {
    for id in EXAMPLE_IDS {
        let r = cmd_reproduce(id, false)?;
        println!("{id}: {}", if r.passed() { "ok" } else { "MISMATCH" });
        for c in &r.checks {
            println!("  {:<22} expected {:<12} found {}", c.name, c.expected, c.found);
        }
    }
    Ok(())
}
