// Weak counts of every compatible three-point datum of degrees 4 to 6 and
// the exceptional data among them.
//
// cargo run --example scan

use hurwitz::scanner::{conjecture_report, scan_degree, ScanConfig};

pub fn run_example() -> hurwitz::Result<()> {
    for d in 4..=6 {
        let entries = scan_degree(d, &ScanConfig::default())?;
        let report = conjecture_report(&entries);
        println!("degree {d}: {} compatible data, {} exceptional", report.data, report.exceptional.len());
        for e in entries.iter().filter(|e| e.is_exceptional()) {
            println!("  {}  genus {}  {}", e.datum, e.datum.cover_genus(), e.zieve);
        }
        assert!(report.holds());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
