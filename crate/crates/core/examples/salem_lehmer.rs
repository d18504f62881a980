//! Classify Lehmer's polynomial and print a certified enclosure of its Salem number.

use salemlat::arith::{rat, rat_to_string};
use salemlat::polyalg::{classify_salem, IntPolynomial, SalemVerdict};

fn main() -> salemlat::Result<()> {
    let lehmer = IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    println!("p(x) = {}", lehmer.pretty("x"));
    match classify_salem(&lehmer, &rat(1, 1_000_000_000))? {
        SalemVerdict::Salem(cert) => {
            println!("Salem of degree {}, trace {}", cert.degree, cert.trace);
            println!("alpha in [{}, {}]", cert.salem_number_interval.lo_f64(), cert.salem_number_interval.hi_f64());
            println!("exact: [{}, {}]", rat_to_string(cert.salem_lo()), rat_to_string(cert.salem_hi()));
            println!("unit-circle root pairs: {}", cert.unit_circle_root_pairs);
        }
        SalemVerdict::Rejected(r) => println!("not Salem: {}", r.reason()),
    }
    for c in [&[1, -3, 1][..], &[1, 1, 1], &[1, -1, -2, -1, 1], &[1, 0, 0, 0, 1]] {
        let p = IntPolynomial::from_i64(c);
        let v = classify_salem(&p, &rat(1, 1 << 20))?;
        let verdict = match &v {
            SalemVerdict::Salem(_) => "Salem".to_string(),
            SalemVerdict::Rejected(r) => format!("rejected ({})", r.reason()),
        };
        println!("{:<28} {verdict}", p.pretty("x"));
    }
    Ok(())
}
