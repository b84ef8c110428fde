//! Exact eigenweights of the operator `∇̄` on the augmentation quotient
//! `V = I/I²` for the classical groups of types A, B, C and D.
//!
//! Two independent routes are provided:
//!
//! * [`formulas`] evaluates closed character-theoretic expressions built on
//!   symmetric-group characters ([`characters`]) and tableau counts
//!   ([`partitions`]);
//! * [`gysin`] implements the defining integral `∫ η·∂_μ f` by equivariant
//!   localization over exact polynomial arithmetic ([`polyalg`]) and reduces
//!   the result modulo `I²`.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals.

pub mod characters;
pub mod error;
pub mod exec;
pub mod formulas;
pub mod group;
mod linalg;
pub mod gysin;
pub mod partitions;
pub mod polyalg;

pub use error::{Error, Result};
pub use exec::Exec;
pub use formulas::{formula_eigen, Block, EigenResult};
pub use group::{Coweight, Family, Generator, GroupSpec};
pub use gysin::{gysin_integrate, nabla_bar, oracle_eigen, Oracle, ReducedVector};
pub use partitions::{BorderStrip, Partition};
pub use polyalg::{MultiPoly, Rational};
