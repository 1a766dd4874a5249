pub mod arith;
pub mod cyclic;
pub mod error;
pub mod format;
pub mod galois;
pub mod linalg;
pub mod linear_code;
pub mod polynomial;
pub mod quasi_cyclic;
pub mod selftest;

pub use cyclic::{construct_isodual_cyclic, CyclicCode, IsodualVariant};
pub use error::{Error, Result};
pub use galois::{Elem, Field, FieldElement, FieldKind};
pub use linear_code::{equivalence_search, EquivalenceMode, LinearCode, MonomialMap};
pub use polynomial::{factor_cyclic_modulus, FactorClassification, Poly};
pub use quasi_cyclic::QuasiCyclicCode;
