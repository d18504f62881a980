//! Random isometries. Products of reflections on U + E8(-1) never push more
//! than one eigenvalue off the unit circle. Isometries of signature (3, 0, t)
//! forms that turn a positive 2-plane are built from Salem companion matrices;
//! every such isometry classifies as Salem type.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use salemlat::isomgroup::{
    classify_isometry, companion_matrix, eigenvalue_layout, isometry_with_positive_index, ReflectionSampler,
};
use salemlat::latticecore::catalog::{e8_negative, hyperbolic_plane, sum};
use salemlat::latticecore::signature;
use salemlat::polyalg::enumerate_salem;

fn main() -> salemlat::Result<()> {
    let hyperbolic = sum(&[hyperbolic_plane(), e8_negative()]);
    let mut s = ReflectionSampler::from_env(&hyperbolic, 2024)?;
    let mut worst = 0;
    let mut kinds = BTreeMap::new();
    for _ in 0..200 {
        let g = s.sample(8);
        worst = worst.max(eigenvalue_layout(&g)?.outside);
        *kinds.entry(classify_isometry(&g).label()).or_insert(0) += 1;
    }
    println!("U + E8(-1): max roots outside the unit circle = {worst}; kinds {kinds:?}");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut kinds = BTreeMap::new();
    for cert in enumerate_salem(6, -1, 2)? {
        let c = companion_matrix(&cert.polynomial);
        let Some(g) = isometry_with_positive_index(&c, 3, 200, &mut rng) else {
            continue;
        };
        assert_eq!(signature(g.lattice()).n_plus, 3);
        *kinds.entry(classify_isometry(&g).label()).or_insert(0) += 1;
    }
    println!("signature (3, 0, 3) twists of sextic Salem companions: kinds {kinds:?}");
    Ok(())
}
