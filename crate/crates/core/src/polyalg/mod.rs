//! Exact integer polynomials, real-root isolation, and Salem/cyclotomic
//! classification.

pub mod cyclotomic;
pub mod factor;
pub mod layout;
pub mod modp;
mod poly;
pub mod salem;
pub mod sturm;

pub use cyclotomic::{cyclotomic_order, cyclotomic_polynomial, euler_phi, is_cyclotomic_product};
pub use factor::{factor_monic, is_irreducible_over_integers};
pub use layout::{spectral_radius, unit_circle_layout, UnitCircleLayout};
pub use poly::IntPolynomial;
pub use salem::{
    bounded_power_products, classify_salem, enumerate_salem, is_reciprocal, trace_polynomial,
    SalemCertificate, SalemRejection, SalemVerdict,
};
pub use sturm::sturm_count;
