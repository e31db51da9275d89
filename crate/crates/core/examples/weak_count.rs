// Weak Hurwitz numbers: strong classes merged by orientation reversal and
// by exchanging equal partitions (colour swap, duality).
//
// cargo run --example weak_count

use hurwitz::text::parse_datum;
use hurwitz::weak_count;

pub fn run_example() -> hurwitz::Result<()> {
    println!("{:<26} {:>6} {:>6} {:>4}", "datum", "strong", "mirror", "nu");
    for text in [
        "[2,2,1],[5],[5]",
        "[2,2,2,1],[7],[6,1]",
        "[2,2,2,2,1],[5,2,2],[4,3,2]",
        "[2,2,2,2,1],[7,2],[7,2]",
        "[2,2,2,2,1],[9],[9]",
    ] {
        let w = weak_count(&parse_datum(text)?)?;
        println!("{text:<26} {:>6} {:>6} {:>4}", w.strong_count(), w.mirror_classes, w.nu);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
