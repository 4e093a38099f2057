// Every published item next to its derived counterpart.

use kfold_partitions::errata::{errata_report, Form};
use kfold_partitions::report::Status;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let entries = errata_report(1..=40)?;
    for e in &entries {
        let form = match e.form {
            Form::Published => "published",
            Form::Derived => "derived",
        };
        let note = if e.expected == Status::Fail { "  (known misprint)" } else { "" };
        println!("{:<34} {:<9} {}{note}", e.item, form, e.report.summary());
    }
    assert!(entries.iter().all(|e| e.as_expected()));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
