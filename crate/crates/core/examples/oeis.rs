// Cross-checks the bundled b-files, and a freshly fetched one when
// `KFOLD_FETCH=1` is set.

use kfold_partitions::counting::FamilyCounts;
use kfold_partitions::oeis::{self, FetchPolicy};
use kfold_partitions::partition::ClassTag;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let counts = FamilyCounts::build(2, 1000)?;
    let s2 = ClassTag::smallest(2)?;

    let a9 = oeis::bundled("A000009").ok_or("A000009 not bundled")?;
    println!("{}", oeis::compare(&a9, |n| counts.count(ClassTag::STRICT, n), a9.last_index())?.summary());

    let a87 = oeis::bundled("A087135").ok_or("A087135 not bundled")?;
    let report = oeis::compare(&a87, |n| Ok(counts.count(s2, n)? + counts.count(ClassTag::STRICT, n)?), a87.last_index())?;
    println!("{}", report.summary());

    if std::env::var_os("KFOLD_FETCH").is_some() {
        let policy = FetchPolicy { allow_network: true, ..FetchPolicy::offline() };
        let text = oeis::fetch("A000009", &policy)?;
        let fetched = oeis::parse_bfile("A000009", &text, oeis::Source::Fetched)?;
        println!("{}", oeis::compare(&fetched, |n| counts.count(ClassTag::STRICT, n), 1000.min(fetched.last_index()))?.summary());
        println!("fetched {} terms, cached under {}", fetched.values.len(), policy.cache_dir.display());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
