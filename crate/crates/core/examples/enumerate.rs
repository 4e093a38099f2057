// Lists the members of each family at a small weight.

use kfold_partitions::partition::{classify, enumerate, ClassTag, Partition};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for tag in [ClassTag::strict(), ClassTag::smallest(2)?, ClassTag::largest(2)?] {
        let members: Vec<String> = enumerate(tag, 8).iter().map(ToString::to_string).collect();
        println!("{tag}(8): {}", members.join(" "));
    }
    // (4,4) sits in both S_2(8) and L_2(8); classify picks one canonical tag.
    let p = Partition::new([4, 4])?;
    println!("classify{p} = {:?}", classify(&p)?.map(|t| t.to_string()));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
