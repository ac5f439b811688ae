use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology: the rationals or `Z/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    /// Field of the given characteristic; `0` means the rationals.
    pub fn with_characteristic(p: u32) -> Result<Self> {
        match p {
            0 => Ok(Field::Rational),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::precondition(format!(
                "characteristic {p} is neither 0 nor a prime"
            ))),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).all(|d| p % d != 0)
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.characteristic())
    }
}
