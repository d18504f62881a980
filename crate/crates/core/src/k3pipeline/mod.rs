//! A parabolic lattice of rank 19 inside the K3 lattice, the eighteen
//! commuting isometries built on it, the exact period point of its
//! orthogonal complement, and a rank certificate for the group they generate.
//!
//! Basis of `Λ = U³ ⊕ E8(-1)²`: `e₀, f₀, e₁, f₁, e₂, f₂, v₁₁…v₁₈, v₂₁…v₂₈`.

mod isometries;
mod period;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::vector_to_value;
use crate::latticecore::catalog::{e8_negative, hyperbolic_plane, sum};
use crate::latticecore::{
    classify, discriminant_group, is_primitive, orthogonal_complement, radical, represents, saturation,
    signature, signature_with_witness, GramLattice, LatticeClass, SublatticeEmbedding,
};
use crate::linalg::ZMatrix;

pub use isometries::{
    alpha_map, build_phi, extend_to_lambda, extension_order, generate_isometries, group_rank_via_alpha,
    torelli_certificate, Generator, TorelliCertificate,
};
pub use period::{minimal_primitive_sublattice, period_point, PeriodPoint, QuarticAlgebra, QuarticAlgebraElement};

pub const E0: usize = 0;
pub const F0: usize = 1;
const E1: usize = 2;
const F1: usize = 3;
const E2: usize = 4;
const F2: usize = 5;
const V1: usize = 6;
const V2: usize = 14;

/// The K3 lattice on the fixed basis above.
pub fn k3_lattice() -> GramLattice {
    let u = hyperbolic_plane();
    let e8 = e8_negative();
    sum(&[u.clone(), u.clone(), u, e8.clone(), e8])
}

pub fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(1);
    v
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Eighteen distinct primes: `p`, `q` scale `f₁`, `f₂`; `p_list`, `q_list`
/// scale the two `E8(-1)` bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSelection {
    pub p: u64,
    pub q: u64,
    pub p_list: Vec<u64>,
    pub q_list: Vec<u64>,
}

impl PrimeSelection {
    pub fn new(p: u64, q: u64, p_list: Vec<u64>, q_list: Vec<u64>) -> Result<Self> {
        if p_list.len() != 8 || q_list.len() != 8 {
            return Err(Error::Precondition("p_list and q_list need eight primes each".into()));
        }
        let mut all: Vec<u64> = [p, q].into_iter().chain(p_list.iter().copied()).chain(q_list.iter().copied()).collect();
        if let Some(bad) = all.iter().find(|&&x| !is_prime(x)) {
            return Err(Error::Precondition(format!("{bad} is not prime")));
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("prime {} is used twice", w[0])));
        }
        Ok(Self { p, q, p_list, q_list })
    }

    /// Default selection; every check passes for it.
    pub fn standard() -> Self {
        Self::new(2, 3, vec![37, 41, 43, 47, 53, 59, 61, 67], vec![71, 73, 79, 83, 89, 97, 101, 103])
            .expect("distinct primes")
    }

    /// Scaling primes 7…67: distinct, but too small for `N̄` to be definite.
    pub fn small_scaling() -> Self {
        Self::new(2, 3, vec![7, 11, 13, 17, 19, 23, 29, 31], vec![37, 41, 43, 47, 53, 59, 61, 67])
            .expect("distinct primes")
    }

    /// `p = 29` against the smallest scaling primes.
    pub fn adversarial() -> Self {
        Self::new(29, 31, vec![2, 3, 5, 7, 11, 13, 17, 19], vec![37, 41, 43, 47, 53, 59, 61, 67])
            .expect("distinct primes")
    }

    pub fn to_json(&self) -> Value {
        json!({ "p": self.p, "q": self.q, "p_list": self.p_list, "q_list": self.q_list })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = |key: &str| -> Result<u64> {
            v.get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a positive integer")))
        };
        let list = |key: &str| -> Result<Vec<u64>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("\"{key}\" must be an array")))?
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| Error::Parse(format!("\"{key}\" entries must be integers"))))
                .collect()
        };
        Self::new(num("p")?, num("q")?, list("p_list")?, list("q_list")?)
    }
}

/// `Λ` with the sublattices `N̄ ⊂ N ⊂ L` and the complements `T`, `T̄`.
#[derive(Clone, Debug)]
pub struct K3Construction {
    pub primes: PrimeSelection,
    pub lambda: GramLattice,
    /// Rows `w₁ … w₁₈`.
    pub n_bar: SublatticeEmbedding,
    /// Rows `e₀, w₁ … w₁₈`.
    pub n: SublatticeEmbedding,
    /// Rows `e₀, f₀, w₁ … w₁₈`.
    pub l: SublatticeEmbedding,
    /// Rows `e₀, u₁, u₂` when `T = Z e₀ ⊕ T̄`, otherwise the complement basis.
    pub t: SublatticeEmbedding,
    /// Rows `u₁, u₂`.
    pub t_bar: SublatticeEmbedding,
    pub t_splits: bool,
}

impl K3Construction {
    pub fn e0(&self) -> Vec<BigInt> {
        unit_vector(22, E0)
    }

    pub fn w(&self, i: usize) -> &[BigInt] {
        self.n_bar.basis().row(i)
    }

    /// Period point of `T` in `Λ` coordinates.
    pub fn period_point(&self) -> Result<PeriodPoint> {
        if !self.t_splits {
            return Err(Error::Shape("T does not split as Z e₀ ⊕ T̄".into()));
        }
        period_point(&self.t_bar.lattice(), &self.t.lattice())?.in_ambient(&self.t)
    }
}

/// `N̄`, `N`, `L`, `T`, `T̄` for a prime selection.
pub fn build_sublattices(primes: &PrimeSelection) -> Result<K3Construction> {
    let lambda = k3_lattice();
    let n = lambda.rank();
    let mut w = Vec::with_capacity(18);
    let pb = |x: u64| BigInt::from(x);
    let mut first = unit_vector(n, E1);
    first[F1] = -pb(primes.p);
    w.push(first);
    let mut second = unit_vector(n, E2);
    second[F2] = -pb(primes.q);
    w.push(second);
    for (j, &pj) in primes.p_list.iter().enumerate() {
        let mut v = unit_vector(n, E1);
        v[V1 + j] = -pb(pj);
        w.push(v);
    }
    for (j, &qj) in primes.q_list.iter().enumerate() {
        let mut v = unit_vector(n, E2);
        v[V2 + j] = -pb(qj);
        w.push(v);
    }
    let n_bar = SublatticeEmbedding::new(&lambda, ZMatrix::from_rows(w.clone())?)?;
    let mut n_rows = vec![unit_vector(n, E0)];
    n_rows.extend(w.iter().cloned());
    let n_emb = SublatticeEmbedding::new(&lambda, ZMatrix::from_rows(n_rows)?)?;
    let mut l_rows = vec![unit_vector(n, E0), unit_vector(n, F0)];
    l_rows.extend(w.iter().cloned());
    let l_emb = SublatticeEmbedding::new(&lambda, ZMatrix::from_rows(l_rows)?)?;
    let t_complement = orthogonal_complement(&n_emb);
    let t_bar = orthogonal_complement(&l_emb);
    let mut split_rows = vec![unit_vector(n, E0)];
    split_rows.extend(t_bar.basis().to_rows());
    let split = SublatticeEmbedding::new(&lambda, ZMatrix::from_rows(split_rows)?)?;
    let t_splits = split.same_span(&t_complement);
    let t = if t_splits { split } else { t_complement };
    Ok(K3Construction {
        primes: primes.clone(),
        lambda,
        n_bar,
        n: n_emb,
        l: l_emb,
        t,
        t_bar,
        t_splits,
    })
}

/// One named check with an optional witness vector in `Λ` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Vec<BigInt>>,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String, witness: Option<Vec<BigInt>>) -> Self {
        Self {
            name,
            passed,
            detail,
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witness": self.witness.as_ref().map(|w| vector_to_value(w)),
        })
    }
}

/// Checks, and for passing selections the full isometry data.
#[derive(Clone, Debug)]
pub struct K3ConstructionReport {
    pub primes: PrimeSelection,
    pub checks: Vec<Check>,
    pub disc_order: BigInt,
    pub extension_orders: Vec<u64>,
    pub group_rank: Option<usize>,
}

impl K3ConstructionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "primes": self.primes.to_json(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "disc_order": self.disc_order.to_string(),
            "extension_orders": self.extension_orders,
            "group_rank": self.group_rank,
        })
    }
}

/// A vector of `sub` outside the span of `e`'s basis, or `None` when equal.
fn saturation_witness(e: &SublatticeEmbedding) -> Option<Vec<BigInt>> {
    let sat = saturation(e);
    (0..sat.rank())
        .map(|i| sat.basis().row(i).to_vec())
        .find(|v| e.coordinates_of(v).is_none())
}

/// Lattice-level checks on `N`, `L`, `N̄`, `T`, `T̄`, each failure with a witness.
pub fn verify_checks(c: &K3Construction) -> Vec<Check> {
    let mut out = Vec::new();
    let n_lat = c.n.lattice();
    let l_lat = c.l.lattice();
    let nbar_lat = c.n_bar.lattice();

    let sn = signature(&n_lat);
    let rad = radical(&n_lat);
    let rad_vec = (rad.rank() > 0).then(|| c.n.to_ambient(rad.basis().row(0)));
    out.push(Check::new(
        "N_parabolic_rank_19",
        n_lat.rank() == 19 && classify(&n_lat) == LatticeClass::Parabolic,
        format!("rank {}, signature {sn}", n_lat.rank()),
        rad_vec,
    ));

    let wl = signature_with_witness(&l_lat);
    out.push(Check::new(
        "L_hyperbolic_rank_20",
        l_lat.rank() == 20 && classify(&l_lat) == LatticeClass::Hyperbolic,
        format!("rank {}, signature {}", l_lat.rank(), wl.signature),
        wl.positive.first().map(|(v, _)| c.l.to_ambient(v)),
    ));

    for (name, e) in [("N_primitive", &c.n), ("L_primitive", &c.l)] {
        let ok = is_primitive(e);
        let witness = if ok { None } else { saturation_witness(e) };
        out.push(Check::new(name, ok, if ok { "saturated".into() } else { "finite-index overlattice exists".into() }, witness));
    }

    let wn = signature_with_witness(&nbar_lat);
    let definite = wn.signature.n_minus == 18;
    let bad = wn.positive.first().map(|(v, norm)| (v.clone(), norm.clone()));
    let zero_norm = (wn.signature.n_zero > 0).then(|| radical(&nbar_lat).basis().row(0).to_vec());
    let (witness, detail) = match (bad, zero_norm) {
        (Some((v, norm)), _) => (Some(c.n_bar.to_ambient(&v)), format!("signature {}, witness norm {norm}", wn.signature)),
        (None, Some(v)) => (Some(c.n_bar.to_ambient(&v)), format!("signature {}, isotropic witness", wn.signature)),
        (None, None) => (None, format!("signature {}", wn.signature)),
    };
    out.push(Check::new("Nbar_negative_definite", definite, detail, witness.clone()));

    let minus_two = BigInt::from(-2);
    let rep = match represents(&n_lat, &minus_two) {
        Ok(None) => Check::new("N_no_minus_2", true, "exhaustive search on N / radical".into(), None),
        Ok(Some(v)) => {
            let amb = c.n.to_ambient(&v);
            Check::new("N_no_minus_2", false, format!("norm {}", c.lambda.norm(&amb)), Some(amb))
        }
        Err(e) => Check::new("N_no_minus_2", false, format!("undecided: {e}"), witness),
    };
    out.push(rep);

    let tb = c.t_bar.lattice();
    let st = signature(&tb);
    let wt = signature_with_witness(&tb);
    out.push(Check::new(
        "Tbar_positive_definite_rank_2",
        tb.rank() == 2 && st.n_plus == 2,
        format!("rank {}, signature {st}", tb.rank()),
        wt.negative.first().map(|(v, _)| c.t_bar.to_ambient(v)),
    ));
    out.push(Check::new(
        "T_splits_as_e0_plus_Tbar",
        c.t_splits,
        format!("rank T = {}", c.t.rank()),
        None,
    ));
    out
}

/// All lattice checks; the isometry part is left empty.
pub fn verify_construction(primes: &PrimeSelection) -> Result<K3ConstructionReport> {
    let c = build_sublattices(primes)?;
    let disc = discriminant_group(&c.l.lattice())?;
    Ok(K3ConstructionReport {
        primes: primes.clone(),
        checks: verify_checks(&c),
        disc_order: disc.order,
        extension_orders: Vec::new(),
        group_rank: None,
    })
}

/// Checks, then (if they pass) the eighteen extended isometries, their
/// commutation, the period-fixing certificates, and the rank of the group.
pub fn run_pipeline(primes: &PrimeSelection) -> Result<K3ConstructionReport> {
    let c = build_sublattices(primes)?;
    let mut report = verify_construction(primes)?;
    if !report.all_passed() {
        return Ok(report);
    }
    let gens = generate_isometries(&c)?;
    report.extension_orders = gens.iter().map(|g| g.k).collect();
    let bound_ok = gens.iter().all(|g| BigInt::from(g.k) <= report.disc_order);
    report.checks.push(Check::new(
        "extension_orders_within_disc_order",
        bound_ok,
        format!("max k = {}", report.extension_orders.iter().max().copied().unwrap_or(0)),
        None,
    ));
    let mut commute = true;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            commute &= gens[i].big_phi.commutes_with(&gens[j].big_phi);
        }
    }
    report.checks.push(Check::new("generators_commute", commute, format!("{} generators", gens.len()), None));
    let sigma = c.period_point()?;
    let e0 = c.e0();
    let mut fixed = true;
    for g in &gens {
        let cert = torelli_certificate(&g.big_phi, &sigma, &c.t, &e0);
        fixed &= cert.passed();
    }
    report.checks.push(Check::new(
        "generators_fix_T_and_e0",
        fixed,
        "identity on T, e₀ fixed, σ fixed".into(),
        None,
    ));
    let lem = minimal_primitive_sublattice(&sigma, &c.lambda)?;
    report
        .checks
        .push(Check::new("period_spans_T", lem.same_span(&c.t), format!("rank {}", lem.rank()), None));
    let phis: Vec<_> = gens.iter().map(|g| g.big_phi.clone()).collect();
    let rank = group_rank_via_alpha(&phis, &c)?;
    if report.all_passed() {
        report.group_rank = Some(rank);
    }
    Ok(report)
}
