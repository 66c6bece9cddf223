//! Euler characteristics of symplectic local systems on the moduli of genus-3
//! curves and of principally polarized abelian threefolds.

pub mod a3;
pub mod branching;
pub mod character;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod lowgenus;
pub mod matgroup;
pub mod partition;
pub mod poly;
pub mod ring;
pub mod strata;
pub mod verify;

pub use a3::{A3Breakdown, Evaluator};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use lowgenus::{H3Provider, M2Provider, RowSelection};
pub use num_bigint::BigInt;
pub use partition::{Sp4Weight, Sp6Weight};
