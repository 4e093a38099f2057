// Prints the C, D and L correspondences and applies one map by hand.

use kfold_partitions::bijection::{apply, bijection_table, MapName};
use kfold_partitions::partition::Partition;
use kfold_partitions::table::render_text;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (map, n, k) in [(MapName::C, 10, 3), (MapName::D, 10, 3), (MapName::L, 12, 3)] {
        let rows = bijection_table(map, n, k)?;
        println!("{}", render_text(map, n, k, &rows)?);
    }

    let row = apply(MapName::L, &Partition::new([4, 4, 4])?, 3)?;
    println!("{} in {} -> {} in {}", row.source, row.source_class, row.image, row.image_class);

    // Preconditions are enforced: (5,3,1) has no repeated smallest part.
    let err = apply(MapName::D, &Partition::new([5, 3, 1])?, 3).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
