//! Exact period point on T = Z e0 + T̄ and the minimal primitive sublattice
//! containing it.

use salemlat::k3pipeline::{build_sublattices, minimal_primitive_sublattice, period_point, PrimeSelection};
use salemlat::latticecore::catalog::diagonal;
use salemlat::latticecore::GramLattice;

fn main() -> salemlat::Result<()> {
    let tbar = GramLattice::from_i64(&[&[2, 1], &[1, 2]])?;
    let t = diagonal(&[0]).direct_sum(&tbar);
    let sigma = period_point(&tbar, &t)?;
    let (ss, sbar) = sigma.identities(t.gram());
    println!("A = {}", sigma.big_a());
    println!("(s, s) = {}", ss.to_json());
    println!("(s, conj s) = {}", sbar.to_json());
    println!("minimal primitive sublattice rank {}", minimal_primitive_sublattice(&sigma, &t)?.rank());

    let c = build_sublattices(&PrimeSelection::standard())?;
    let sigma = c.period_point()?;
    println!("\nK3 data: T̄ = [[{}, {}], [{}, {}]], A = {}", 2 * &sigma.a, sigma.b, sigma.b, 2 * &sigma.c, sigma.big_a());
    let m = minimal_primitive_sublattice(&sigma, &c.lambda)?;
    println!("minimal primitive sublattice equals T: {}", m.same_span(&c.t));
    Ok(())
}
