//! Runs the verification suite at reduced size and prints the report, or
//! the JSON form with `--json`.

use pentile::verify::{run_verification, VerifyConfig, VerifyOptions};

fn main() {
    let json = std::env::args().any(|a| a == "--json");
    let report = run_verification(&VerifyConfig::quick(2024), &VerifyOptions::default());
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}
