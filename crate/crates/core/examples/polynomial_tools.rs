//! Factorization, cyclotomic recognition, unit-circle layout and spectral radius.

use salemlat::arith::rat;
use salemlat::polyalg::{
    cyclotomic_order, cyclotomic_polynomial, factor_monic, is_cyclotomic_product, spectral_radius,
    unit_circle_layout, IntPolynomial,
};

fn main() -> salemlat::Result<()> {
    let mut c = vec![0i64; 13];
    c[0] = -1;
    c[12] = 1;
    let f = IntPolynomial::from_i64(&c);
    println!("{} factors as:", f.pretty("x"));
    for (g, m) in factor_monic(&f)? {
        println!("  ({})^{m}   Phi_{}", g.pretty("x"), cyclotomic_order(&g).unwrap_or(0));
    }
    println!("Phi_30 = {}", cyclotomic_polynomial(30).pretty("x"));

    let mixed = IntPolynomial::from_i64(&[1, -1, -1, -1, 1]).mul(&IntPolynomial::from_i64(&[1, 1]).pow(2));
    println!("\n{}", mixed.pretty("x"));
    println!("  cyclotomic product: {}", is_cyclotomic_product(&mixed));
    let lay = unit_circle_layout(&mixed)?;
    println!("  roots outside / on / inside the unit circle: {} / {} / {}", lay.outside, lay.on_circle, lay.inside);
    let r = spectral_radius(&mixed, &rat(1, 1 << 40))?;
    println!("  spectral radius in [{:.12}, {:.12}]", r.lo_f64(), r.hi_f64());
    Ok(())
}
