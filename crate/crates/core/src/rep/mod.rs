//! Coordinate matrices: ring arithmetic, block matrices, null frames and the
//! recursive representation of G(p,q).

pub mod frame;
pub mod matrix;
pub mod represent;
pub mod ring;

pub use frame::{from_matrix, null_frame, null_vectors, to_matrix, NullFrame, NullVectors, MAX_FRAME_K};
pub use matrix::BlockMatrix;
pub use represent::{represent, theorem2_block, Representer, RouteStep};
pub use ring::{ring_arith, RingElement, RingOp};
