//! Enumerate Salem polynomials by degree and trace.

use salemlat::polyalg::enumerate_salem;

fn main() -> salemlat::Result<()> {
    for (degree, lo, hi) in [(2, -1, 4), (4, 1, 1), (4, -1, 2), (6, 0, 1)] {
        let found = enumerate_salem(degree, lo, hi)?;
        println!("degree {degree}, trace in [{lo}, {hi}]: {} polynomials", found.len());
        for c in &found {
            println!("  trace {:>2}  alpha ~ {:.9}  {}", c.trace, c.salem_number_interval.lo_f64(), c.polynomial.pretty("x"));
        }
    }
    Ok(())
}
