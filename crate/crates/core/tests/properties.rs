//! Randomized invariants for the arithmetic, polynomial, lattice and isometry
//! layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use salemlat::arith::{parse_rational, rat, rat_to_string, RationalInterval};
use salemlat::isomgroup::{char_poly, order, verify_isometry, Order, ReflectionSampler};
use salemlat::latticecore::catalog::{a_n, e8_negative, hyperbolic_plane, sum};
use salemlat::latticecore::{
    discriminant_group, orthogonal_complement, signature, vectors_of_norm, GramLattice, SublatticeEmbedding,
};
use salemlat::linalg::{smith_normal_form, ZMatrix};
use salemlat::polyalg::salem::{from_trace_polynomial, trace_polynomial};
use salemlat::polyalg::{factor_monic, is_cyclotomic_product, cyclotomic_polynomial, IntPolynomial};

fn monic(coeffs: Vec<i64>) -> IntPolynomial {
    let mut c = coeffs;
    c.push(1);
    IntPolynomial::from_i64(&c)
}

fn small_matrix(n: usize) -> impl Strategy<Value = ZMatrix> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| ZMatrix::from_flat(n, n, v.into_iter().map(BigInt::from).collect()))
}

/// Unimodular matrix as a product of elementary column operations.
fn unimodular(n: usize) -> impl Strategy<Value = ZMatrix> {
    prop::collection::vec((0..n, 1..n, -2i64..=2), 0..8).prop_map(move |ops| {
        let mut u = ZMatrix::identity(n);
        for (i, shift, c) in ops {
            let j = (i + shift) % n;
            for r in 0..n {
                let add = &u[(r, i)] * BigInt::from(c);
                u[(r, j)] += add;
            }
        }
        u
    })
}

fn positive_definite_gram(n: usize) -> impl Strategy<Value = GramLattice> {
    // Aᵀ A + I is positive definite
    small_matrix(n).prop_map(move |a| {
        let g = a.transpose().mul(&a).add(&ZMatrix::identity(n));
        GramLattice::new(g).expect("symmetric")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let x = rat(n, d);
        prop_assert_eq!(parse_rational(&rat_to_string(&x)).unwrap(), x);
    }

    #[test]
    fn interval_sums_contain_sums(a in -100i64..100, w1 in 0i64..50, b in -100i64..100, w2 in 0i64..50, t in 0i64..=10) {
        let i = RationalInterval::new(rat(a, 7), rat(a + w1, 7)).unwrap();
        let j = RationalInterval::new(rat(b, 3), rat(b + w2, 3)).unwrap();
        let x = rat(a, 7) + rat(w1 * t, 70);
        let y = rat(b, 3) + rat(w2 * t, 30);
        prop_assert!(i.add(&j).contains(&(x + y)));
    }

    #[test]
    fn exact_division_roundtrip(a in prop::collection::vec(-5i64..=5, 1..6), b in prop::collection::vec(-5i64..=5, 0..5)) {
        let f = IntPolynomial::from_i64(&a);
        let g = monic(b);
        prop_assume!(!f.is_zero());
        prop_assert_eq!(f.mul(&g).div_exact(&g), Some(f));
    }

    #[test]
    fn factorization_multiplies_back(parts in prop::collection::vec(prop::collection::vec(-3i64..=3, 1..4), 1..4)) {
        let f = parts.into_iter().fold(IntPolynomial::one(), |acc, p| acc.mul(&monic(p)));
        let factors = factor_monic(&f).unwrap();
        let prod = factors.iter().fold(IntPolynomial::one(), |acc, (g, m)| acc.mul(&g.pow(*m)));
        prop_assert_eq!(prod, f);
        for (g, _) in &factors {
            prop_assert!(g.is_monic());
        }
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(parts in prop::collection::vec((prop::collection::vec(-3i64..=3, 1..3), 1usize..3), 1..3)) {
        let f = parts.into_iter().fold(IntPolynomial::one(), |acc, (p, e)| acc.mul(&monic(p).pow(e)));
        let prod = f
            .squarefree_decomposition()
            .iter()
            .fold(IntPolynomial::one(), |acc, (g, m)| acc.mul(&g.pow(*m)));
        prop_assert_eq!(prod.primitive_part(), f.primitive_part());
    }

    #[test]
    fn trace_polynomial_roundtrip(half in prop::collection::vec(-4i64..=4, 1..5)) {
        // palindromic monic of degree 2m
        let m = half.len();
        let mut c = vec![0i64; 2 * m + 1];
        c[0] = 1;
        c[2 * m] = 1;
        for (i, &a) in half.iter().enumerate().skip(1) {
            c[i] = a;
            c[2 * m - i] = a;
        }
        c[m] = half[0];
        let p = IntPolynomial::from_i64(&c);
        let q = trace_polynomial(&p).unwrap();
        prop_assert_eq!(q.degree(), m);
        prop_assert_eq!(from_trace_polynomial(&q), p);
    }

    #[test]
    fn cyclotomic_products_recognized(ns in prop::collection::vec(1u64..30, 1..4)) {
        let f = ns.iter().fold(IntPolynomial::one(), |acc, &n| acc.mul(&cyclotomic_polynomial(n)));
        prop_assert!(is_cyclotomic_product(&f));
        // a Salem factor spoils it
        prop_assert!(!is_cyclotomic_product(&f.mul(&IntPolynomial::from_i64(&[1, -3, 1]))));
    }

    #[test]
    fn smith_form_is_certified(m in small_matrix(3)) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
        let d = s.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(u in unimodular(4)) {
        let l = sum(&[hyperbolic_plane(), a_n(2).scaled(-1)]);
        let l2 = GramLattice::new(u.transpose().mul(l.gram()).mul(&u)).unwrap();
        prop_assert_eq!(signature(&l), signature(&l2));
        prop_assert_eq!(discriminant_group(&l).unwrap(), discriminant_group(&l2).unwrap());
    }

    #[test]
    fn discriminant_order_is_determinant(l in positive_definite_gram(3)) {
        prop_assert_eq!(discriminant_group(&l).unwrap().order, l.det().abs());
    }

    #[test]
    fn short_vectors_match_box_search(l in positive_definite_gram(3), target in 1i64..12) {
        let t = BigInt::from(target);
        let got = vectors_of_norm(&l, &t).unwrap();
        // x^T G x >= |x|^2 since G - I is positive semidefinite, so |x_i| <= sqrt(target)
        let r = (target as f64).sqrt() as i64;
        let mut naive = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    let v: Vec<BigInt> = [a, b, c].iter().map(|&x| BigInt::from(x)).collect();
                    let first_positive = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive());
                    if first_positive && l.norm(&v) == t {
                        naive.push(v);
                    }
                }
            }
        }
        naive.sort();
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn complements_are_orthogonal(row in prop::collection::vec(-3i64..=3, 10)) {
        let l = sum(&[hyperbolic_plane(), e8_negative()]);
        let v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let e = SublatticeEmbedding::new(&l, ZMatrix::from_rows(vec![v.clone()]).unwrap()).unwrap();
        let c = orthogonal_complement(&e);
        prop_assert_eq!(c.rank(), 9);
        for i in 0..c.rank() {
            prop_assert!(l.pair(c.basis().row(i), &v).is_zero());
        }
    }

    #[test]
    fn isometry_invariants(seed in 0u64..1_000, len in 1usize..12) {
        let l = sum(&[hyperbolic_plane(), a_n(4).scaled(-1)]);
        let mut s = ReflectionSampler::new(&l, seed).unwrap();
        let g = s.sample_between(len, len);
        let det = g.det();
        prop_assert!((&det * &det).is_one());
        let c0 = char_poly(&g).coeff(0);
        prop_assert!(c0 == det || c0 == -det.clone());
        prop_assert!(g.compose(&g.inverse()).is_identity());
        prop_assert!(verify_isometry(g.matrix(), &l).is_ok());
        if let Order::Finite(k) = order(&g) {
            prop_assert!(g.pow(k).is_identity());
            for d in 1..k {
                if k % d == 0 {
                    prop_assert!(!g.pow(d).is_identity());
                }
            }
        }
    }
}

#[test]
fn rational_interval_rejects_reversed_bounds() {
    assert!(RationalInterval::new(BigRational::one(), BigRational::zero()).is_err());
}
