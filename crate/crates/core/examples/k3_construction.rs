//! Build the rank-19 parabolic lattice N inside the K3 lattice, extend the
//! eighteen isometries, and certify that they generate a free abelian group of rank 18.

use salemlat::k3pipeline::{run_pipeline, verify_construction, PrimeSelection};

fn main() -> salemlat::Result<()> {
    let report = run_pipeline(&PrimeSelection::standard())?;
    println!("primes {}", report.primes.to_json());
    for c in &report.checks {
        println!("  [{}] {:<36} {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    println!("|L*/L| = {}", report.disc_order);
    println!("extension orders {:?}", report.extension_orders);
    println!("group rank {:?}", report.group_rank);

    // scaling primes that are too small break definiteness of N̄
    let weak = verify_construction(&PrimeSelection::small_scaling())?;
    let c = weak.check("Nbar_negative_definite").expect("always reported");
    println!("\nsmall scaling primes: {} ({})", if c.passed { "definite" } else { "indefinite" }, c.detail);
    Ok(())
}
