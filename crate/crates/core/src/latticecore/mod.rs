//! Integer lattices with symmetric bilinear forms.
//!
//! A [`GramLattice`] is a Gram matrix on a fixed basis. Signatures are computed
//! by exact symmetric reduction over the rationals; primitivity, complements and
//! discriminant groups go through the Smith normal form; short vectors through
//! Fincke–Pohst enumeration with an exact `LDLᵀ` decomposition.

mod enumerate;
mod gram;
mod signature;
mod sublattice;

pub use enumerate::{represents, vectors_of_norm};
pub use gram::{catalog, GramLattice};
pub use signature::{classify, signature, signature_with_witness, LatticeClass, SignatureTriple, SignatureWitness};
pub use sublattice::{
    discriminant_group, index_of_sum, is_primitive, orthogonal_complement, quotient_by_radical,
    radical, saturation, smith_normal_form, DiscriminantGroup, Index, ParabolicFrame,
    SublatticeEmbedding,
};
