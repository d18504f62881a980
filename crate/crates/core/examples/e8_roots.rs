//! Enumerate the roots of E8(-1) with Fincke–Pohst.

use num_bigint::BigInt;
use salemlat::latticecore::catalog::e8_negative;
use salemlat::latticecore::vectors_of_norm;

fn main() -> salemlat::Result<()> {
    let e8 = e8_negative();
    let pairs = vectors_of_norm(&e8, &BigInt::from(-2))?;
    println!("norm -2 vectors: {} (in {} sign pairs)", 2 * pairs.len(), pairs.len());
    for v in pairs.iter().take(5) {
        println!("  {:?}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
    let fours = vectors_of_norm(&e8, &BigInt::from(-4))?;
    println!("norm -4 vectors: {}", 2 * fours.len());
    Ok(())
}
