//! Verify isometries, compute orders, classify spectra and bound entropy.

use salemlat::arith::rat;
use salemlat::isomgroup::{classify_isometry, entropy, express_in_powers, order, verify_isometry};
use salemlat::latticecore::catalog::diagonal;
use salemlat::latticecore::GramLattice;
use salemlat::linalg::ZMatrix;

fn main() -> salemlat::Result<()> {
    let pell = verify_isometry(&ZMatrix::from_i64(&[&[3, 4], &[2, 3]]), &diagonal(&[2, -4]))?;
    let a2 = GramLattice::from_i64(&[&[2, 1], &[1, 2]])?;
    let rot = verify_isometry(&ZMatrix::from_i64(&[&[-1, -1], &[1, 0]]), &a2)?;
    let mixed = verify_isometry(
        &ZMatrix::from_i64(&[&[-1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 3, 4], &[0, 0, 2, 3]]),
        &diagonal(&[2, 2, 2, -4]),
    )?;
    for (name, g) in [("pell", &pell), ("rotation", &rot), ("mixed", &mixed)] {
        let h = entropy(g, &rat(1, 1 << 30))?;
        println!("{name:<9} order {:?}", order(g));
        println!("          {}", classify_isometry(g).to_json());
        println!("          entropy in [{:.10}, {:.10}]", h.lo_f64(), h.hi_f64());
    }
    let phi = express_in_powers(&pell, &pell.inverse())?.expect("inverse is a polynomial in g");
    let terms: Vec<String> = phi
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("({c}) g"),
            _ => format!("({c}) g^{k}"),
        })
        .collect();
    println!("g^-1 = {}", terms.join(" + "));

    let bad = verify_isometry(&ZMatrix::from_i64(&[&[2, 0], &[0, 1]]), &diagonal(&[2, -4]));
    println!("non-isometry: {}", bad.unwrap_err());
    Ok(())
}
