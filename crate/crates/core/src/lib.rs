//! Exact-arithmetic local cohomology of Stanley-Reisner rings.
//!
//! The crate computes, over Q or a prime field:
//!
//! - simplicial cohomology of pairs (Δ, cost F) and the maps induced by
//!   contrastar inclusions ([`cohomology`]);
//! - graded dimensions of H^*_m(k[Δ]), singularity dimension, and the
//!   Cohen-Macaulay / Buchsbaum predicates ([`hochster`]);
//! - the graded module structure as explicit matrices, multiplication by
//!   generic linear forms, and kernel intersections with their binomial
//!   closed forms ([`graebe`]);
//! - graded dimensions of the quotient by generic forms and the
//!   "singularity dimension < m ⟺ finite local cohomology" equivalence
//!   ([`quotient`]).
//!
//! All arithmetic is exact and every computation is deterministic given the
//! complex, the field and (where applicable) a seed.

pub mod cohomology;
pub mod combinat;
pub mod complex;
pub mod error;
pub mod graebe;
pub mod hochster;
pub mod linalg;
pub mod quotient;

pub use cohomology::{CohomologyBasis, Workspace};
pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use graebe::{
    generic_matrix, graded_piece, kernel_dims, theta_action, GenericMatrix, GradedPiece,
    KernelReport, MatrixProvenance, MatrixStrategy,
};
pub use hochster::{
    graded_dim_table, is_buchsbaum, is_cohen_macaulay, lc_graded_dim, singularity_dimension,
    GradedDimTable, SingularityDimension, SingularityVerdict, SingularWitness,
};
pub use linalg::{FieldSpec, Matrix, Scalar};
pub use quotient::{
    check_main_theorem, has_flc, isolated_quotient_lc, quotient_lc_dim, quotient_lc_table,
    BruteForceConfig, IsolatedQuotientDims, QuotientLcTable, TheoremCheck, TheoremVerdict,
};
