//! Exact combinatorics for characters of finite classical groups: Lusztig symbols,
//! Fock spaces, colored weight functions and first occurrences in theta towers.

pub mod characters;
pub mod charged;
pub mod ffield;
pub mod fock;
pub mod partitions;
pub mod qarith;
pub mod semisimple;
pub mod symbols;
pub mod theta;

use serde::{Deserialize, Serialize};

pub use characters::{CharacterLabel, CuspidalSupport, Family, StarPart};
pub use charged::{ChargedPartition, InterlacingSequence};
pub use ffield::{FqContext, FqPoly, GammaClass, GammaDescriptor};
pub use fock::{ChargedMultipartition, FockVector, Weight};
pub use partitions::{BetaSet, Partition};
pub use qarith::{QIndex, RootRatio, Sign};
pub use symbols::{Bipartition, Symbol};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("validation failed: {}", .0.join("; "))]
    Violations(Vec<String>),
    #[error("{0}")]
    Unsupported(String),
}

/// The prime power `q`; every sign in scope depends on it only through `q mod 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GlobalContext {
    q: u64,
}

impl GlobalContext {
    pub fn new(q: u64) -> Result<GlobalContext, Error> {
        match ffield::prime_power(q) {
            Some((p, _)) if p != 2 => Ok(GlobalContext { q }),
            _ => Err(Error::Invalid(format!("q = {q} must be an odd prime power"))),
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_mod_4(&self) -> u64 {
        self.q % 4
    }

    /// `ζ(-1) = (-1)^{(q-1)/2}`.
    pub fn zeta_minus_one(&self) -> Sign {
        ffield::zeta_minus_one(self.q)
    }
}
