//! Left-covariant first order differential calculi on the quantum group SL_q(2),
//! built exactly from right coideals of its dual Hopf algebra.

pub mod error;
pub mod scalar;
pub mod uq;
pub mod oq;
pub mod linalg;
pub mod lists;
pub mod coideal;
pub mod fodc;
pub mod structures;
pub mod cohomology;
pub mod fixtures;
pub mod verify;
pub mod parse;

pub use error::{Error, Result};
pub use scalar::{qfact, qnum, GroupLabel, RealForm, Scalar};
