// Closed formulas for the family `[2,...,2,1], [2,...,2,2h+1], pi` next to
// brute-force weak counts.
//
// cargo run --example closed_formulas

use hurwitz::formulas::{claim_counts_g1_h3, nu_g1_h2, nu_g1_h3, nu_g2_decomposition, nu_g2_h4};
use hurwitz::{heart_datum, weak_count, HeartParams, Partition};

fn enumerated(k: usize, h: usize, pi: &[usize]) -> hurwitz::Result<usize> {
    Ok(weak_count(&heart_datum(&HeartParams::new(k, h, Partition::new(pi.to_vec())?))?)?.nu)
}

pub fn run_example() -> hurwitz::Result<()> {
    for k in 2..=5usize {
        println!("genus 1, [{}]: formula {}, enumerated {}", 2 * k + 1, nu_g1_h2(k as u64)?, enumerated(k, 2, &[2 * k + 1])?);
    }
    for (k, p) in [(3usize, 4usize), (3, 5), (4, 6), (4, 7), (4, 8)] {
        let claims = claim_counts_g1_h3(k as u64, p as u64)?;
        println!(
            "genus 1, k={k} [{p},{}]: claims {:?}, formula {}, enumerated {}",
            2 * k + 1 - p,
            claims.as_array(),
            nu_g1_h3(k as u64, p as u64)?,
            enumerated(k, 3, &[p, 2 * k + 1 - p])?
        );
    }
    for k in 4..=5usize {
        let (asym, sym) = nu_g2_decomposition(k as u64);
        println!(
            "genus 2, k={k}: {asym}+{sym} embeddings, formula {}, enumerated {}",
            nu_g2_h4(k as u64)?,
            enumerated(k, 4, &[2 * k + 1])?
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
