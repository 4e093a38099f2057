// Exact counts far beyond machine integers.

use kfold_partitions::counting::{q_table, FamilyCounts};
use kfold_partitions::partition::{count_oracle, ClassTag};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = q_table(2000)?;
    println!("q(2000) = {}", q.get(2000)?);

    let counts = FamilyCounts::build(5, 60)?;
    println!("{:>4} {:>8} {:>8} {:>8} {:>8}", "n", "s_2", "s_5", "l_2", "l_5");
    for n in (0..=60).step_by(10) {
        let row: Vec<String> = [ClassTag::smallest(2)?, ClassTag::smallest(5)?, ClassTag::largest(2)?, ClassTag::largest(5)?]
            .iter()
            .map(|&t| counts.count(t, n).map(|c| format!("{c:>8}")))
            .collect::<Result<_, _>>()?;
        println!("{n:>4} {}", row.join(" "));
    }

    let tag = ClassTag::largest(3)?;
    assert_eq!(counts.count(tag, 30)?, count_oracle(tag, 30));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
