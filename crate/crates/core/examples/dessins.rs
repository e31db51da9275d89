// Dessins of the five weak classes of `[2,2,2,2,1],[7,2],[7,2]` as Graphviz
// graphs, with their regions.
//
// cargo run --example dessins

use hurwitz::dessin::dessins_for;
use hurwitz::text::parse_datum;

pub fn run_example() -> hurwitz::Result<()> {
    let datum = parse_datum("[2,2,2,2,1],[7,2],[7,2]")?;
    for (i, d) in dessins_for(&datum)?.iter().enumerate() {
        println!("// regions {:?}", d.regions);
        print!("{}", d.to_dot(&format!("dessin_{i}")));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
