// Character table of S_5 by Murnaghan-Nakayama and the Frobenius count of
// product-one triples, checked against direct search.
//
// cargo run --example characters

use hurwitz::{count_product_one_triples, CharacterTable, Partition};

pub fn run_example() -> hurwitz::Result<()> {
    let table = CharacterTable::new(5);
    let ps = table.partitions();
    print!("{:>12}", "chi \\ class");
    for mu in ps {
        print!("{:>12}", mu.to_string());
    }
    println!();
    for lambda in ps {
        print!("{:>12}", lambda.to_string());
        for mu in ps {
            print!("{:>12}", table.value(lambda, mu)?);
        }
        println!();
    }

    let t = |v: &[usize]| Partition::new(v.to_vec());
    let (a, b, c) = (t(&[2, 2, 1])?, t(&[2, 2, 1])?, t(&[5])?);
    println!(
        "\n{a},{b},{c}: characters {}, search {}",
        table.product_one_triples([&a, &b, &c])?,
        count_product_one_triples([&a, &b, &c])?
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
