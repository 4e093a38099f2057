// Expands s_k and l_k in terms of q and checks the resulting bounds.

use kfold_partitions::counting::FamilyCounts;
use kfold_partitions::identity::{expand_largest, expand_smallest, to_inequality};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let counts = FamilyCounts::build(6, 300)?;
    for k in 2..=6 {
        let expr = expand_smallest(k)?;
        println!("{} = {}, n >= {}", expr.label(), expr, expr.n_min());
        let bound = to_inequality(&expr)?;
        println!("  {}", bound);
        println!("  {}", bound.verify(1..=300, counts.q())?.summary());
    }
    for k in 2..=5 {
        let expr = expand_largest(k)?;
        println!("{} = {}", expr.label(), expr);
        let back = to_inequality(&expr)?.normalize_backward()?;
        println!("  {}", back);
        println!("  {}", back.verify(1..=300, counts.q())?.summary());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
