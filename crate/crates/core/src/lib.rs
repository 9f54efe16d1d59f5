//! Exact real and complex geometric algebras G(p,q): multivectors, their
//! classification as matrix algebras, the structure-theorem isomorphisms and
//! explicit coordinate matrices.

pub mod blade;
pub mod classify;
pub mod error;
pub mod expr;
pub mod iso;
pub mod linalg;
pub mod multivector;
pub mod random;
pub mod rep;
pub mod scalar;
pub mod signature;
pub mod verify;

pub use blade::Blade;
pub use classify::{classify, classify_complex, classify_real, BuildingBlock, MatrixAlgebraShape};
pub use error::{Error, Result};
pub use iso::{apply_map, build_iso, verify_map, verify_map_with, GeneratorMap, IsoKind};
pub use multivector::{vector_kvector_split, Conjugation, Multivector};
pub use rep::{represent, BlockMatrix, RingElement};
pub use scalar::{int, rat, ComplexRational, Rational, Scalar, ZERO_TOL};
pub use signature::{Field, Signature, DEFAULT_DIM_CAP};
