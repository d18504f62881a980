//! Unipotent coordinates of the K3 generators restricted to N, and the rank
//! of the abelian group they span.

use salemlat::k3pipeline::{build_sublattices, generate_isometries, PrimeSelection};
use salemlat::rankkit::{parabolic_coordinates, parabolic_group_rank};

fn main() -> salemlat::Result<()> {
    let c = build_sublattices(&PrimeSelection::standard())?;
    let n = c.n.lattice();
    let restricted = generate_isometries(&c)?
        .into_iter()
        .map(|g| g.big_phi.restrict(&c.n))
        .collect::<salemlat::Result<Vec<_>>>()?;
    let first = parabolic_coordinates(&restricted[0], &n)?;
    let nonzero: Vec<usize> = (0..first.vector.len()).filter(|&i| first.vector[i] != 0.into()).collect();
    println!("generator 1: sign {}, nonzero coordinates at {nonzero:?}", first.sign);
    println!("rank of the span: {} (bound {})", parabolic_group_rank(&restricted, &n)?, n.rank() - 1);
    Ok(())
}
