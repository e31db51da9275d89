// Riemann-Hurwitz compatibility, covering genus and Zieve status of a few
// branch data, including members of the odd-degree family.
//
// cargo run --example compatibility

use hurwitz::text::parse_partitions;
use hurwitz::{heart_datum, zieve_status, BranchDatum, HeartParams, Partition};

pub fn run_example() -> hurwitz::Result<()> {
    for text in ["[2,2,1],[2,3],[2,3]", "[2,2],[2,2],[3,1]", "[3,1],[3,1],[3,1]", "[3,3],[3,3],[3,3]", "[3]"] {
        match BranchDatum::from_partitions(parse_partitions(text)?) {
            Ok(d) => println!("{text:<22} genus {}  zieve {}", d.cover_genus(), zieve_status(&d)),
            Err(e) => println!("{text:<22} {e}"),
        }
    }

    println!();
    for (k, h, pi) in [(4, 2, vec![3, 3, 3]), (4, 3, vec![7, 2]), (4, 4, vec![9]), (5, 4, vec![11])] {
        let datum = heart_datum(&HeartParams::new(k, h, Partition::new(pi)?))?;
        println!("k={k} h={h}: {datum}  genus {}", datum.cover_genus());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
