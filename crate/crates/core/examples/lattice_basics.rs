//! Signatures, classes, discriminant groups, complements and radicals.

use salemlat::latticecore::catalog::{a_n, diagonal, e8_negative, hyperbolic_plane, sum};
use salemlat::latticecore::{
    classify, discriminant_group, orthogonal_complement, quotient_by_radical, signature, SublatticeEmbedding,
};
use salemlat::linalg::ZMatrix;

fn main() -> salemlat::Result<()> {
    let examples = [
        ("U", hyperbolic_plane()),
        ("E8(-1)", e8_negative()),
        ("U + E8(-1)", sum(&[hyperbolic_plane(), e8_negative()])),
        ("A2", a_n(2)),
        ("<0> + <-2>", diagonal(&[0, -2])),
    ];
    for (name, l) in &examples {
        let disc = discriminant_group(l)
            .map(|d| format!("{:?}", d.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .unwrap_or_else(|_| "degenerate".into());
        println!("{name:<12} signature {}  {:?}  discriminant {disc}", signature(l), classify(l));
    }

    let uu = sum(&[hyperbolic_plane(), hyperbolic_plane()]);
    let line = SublatticeEmbedding::new(&uu, ZMatrix::from_i64(&[&[0, 0, 1, -3]]))?;
    let perp = orthogonal_complement(&line);
    println!("\ncomplement of <e1 - 3 f1> in U + U: {:?}", perp.basis());

    let frame = quotient_by_radical(&diagonal(&[0, -2, -2]))?;
    println!("radical generator {:?}, quotient class {:?}", frame.v, frame.quotient_class);
    Ok(())
}
