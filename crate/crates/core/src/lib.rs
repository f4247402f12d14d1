//! Exact computation of graded and multigraded Betti tables of monomial
//! ideals over fields of arbitrary characteristic.
//!
//! The pipeline: monomial ideals are polarized to squarefree ones, the
//! Stanley-Reisner dictionary turns them into simplicial complexes, and
//! Hochster's formula reads graded Betti numbers off the reduced homology
//! of induced subcomplexes. Homology is computed over the integers (Smith
//! normal form), so torsion — and with it the exact set of characteristics
//! where the Betti table jumps — is detected, not sampled.
//!
//! On top of that sit the generative constructions (whiskering, coning,
//! bipartite complex/ideal pairs) and structural checks
//! (vertex-decomposability, consecutive cancellation, componentwise
//! linearity).

pub mod betti;
pub mod complex;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod field;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod mask;
pub mod morse;
pub mod render;
pub mod snf;

#[cfg(test)]
pub(crate) mod testutil;

pub use betti::{
    betti_table, cancellation_feasible, char_dependence_scan, hochster_multigraded,
    is_componentwise_linear, is_linear_resolution, koszul_multigraded, powers_report, BettiTable,
    CancellationStep, Capacity, CharDependenceReport, Convention, MultigradedBetti,
};
pub use complex::{sr_complex, sr_ideal, SheddingWitness, SimplicialComplex};
pub use error::Error;
pub use field::FieldSpec;
pub use homology::HomologyGroup;
pub use ideal::{Monomial, MonomialIdeal, Ring};
pub use mask::VertexMask;

pub type Result<T> = std::result::Result<T, Error>;
