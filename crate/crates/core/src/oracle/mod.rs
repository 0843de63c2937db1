//! A brute-force model of the representations involved: exact arithmetic in `F_q` and
//! `GR(p^2, f)`, explicit modules of `K/K_2` and `I/I_2`, and their socles and composition
//! factors. Used to check the combinatorial descriptions independently.

pub mod field;
pub mod group;
pub mod linalg;
pub mod module;
pub mod structure;
pub mod verify;

pub use field::{Field, FqElem, GrElem};
pub use group::{GroupContext, Mat2, Subgroup};
pub use linalg::{Matrix, Subspace, Vector};
pub use module::{Domain, ExplicitModule, Level};
pub use structure::{cosocle, jh_multiset, socle, socle_series, SocleData, WeightCounts};
