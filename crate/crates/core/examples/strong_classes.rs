// Strong classes of a datum: one representative per conjugacy class of
// constellations, with the order of its automorphism group.
//
// cargo run --example strong_classes

use hurwitz::text::parse_datum;
use hurwitz::{enumerate_strong, frobenius_tuple_count};

pub fn run_example() -> hurwitz::Result<()> {
    let datum = parse_datum("[2,2,2,2,1],[7,2],[7,2]")?;
    let set = enumerate_strong(&datum)?;
    println!("{datum}: {} strong classes, {} transitive triples", set.len(), set.tuple_count);
    for class in &set.classes {
        let [a, b, c] = class.representative.perms();
        println!("  |Aut| = {}  {a} | {b} | {c}", class.automorphism_order);
    }

    let ps = datum.partitions();
    let frobenius = frobenius_tuple_count([&ps[0], &ps[1], &ps[2]], datum.degree())?;
    println!("product-one triples: enumerated {}, characters {frobenius}", set.raw_tuple_count);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
