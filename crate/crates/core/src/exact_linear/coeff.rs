use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combo::Combo;
use crate::error::{Error, Result};

/// Coefficients: the integers, or `Z/m` with `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CoeffRing {
    Integers,
    Modular(u64),
}

impl CoeffRing {
    pub fn modular(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::UnsupportedRing(format!("Z/{m} needs m >= 2")));
        }
        Ok(CoeffRing::Modular(m))
    }

    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            CoeffRing::Integers => None,
            CoeffRing::Modular(m) => Some(BigInt::from(*m)),
        }
    }

    /// `Z/p` for prime `p`.
    pub fn is_field(&self) -> bool {
        match *self {
            CoeffRing::Integers => false,
            CoeffRing::Modular(m) => (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0),
        }
    }

    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self {
            CoeffRing::Integers => x.clone(),
            CoeffRing::Modular(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }

    pub fn reduce_combo<K: Ord + Clone>(&self, c: &mut Combo<K>) {
        if let Some(m) = self.modulus() {
            c.reduce_mod(&m);
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        self.reduce(x).is_zero()
    }

    /// Multiplicative inverse, if it exists.
    pub fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        match self {
            CoeffRing::Integers => {
                if x.abs().is_one() {
                    Some(x.clone())
                } else {
                    None
                }
            }
            CoeffRing::Modular(m) => {
                let m = BigInt::from(*m);
                let e = x.mod_floor(&m).extended_gcd(&m);
                e.gcd.is_one().then(|| e.x.mod_floor(&m))
            }
        }
    }

    pub fn require_field(&self) -> Result<u64> {
        match *self {
            CoeffRing::Modular(p) if self.is_field() => Ok(p),
            other => Err(Error::UnsupportedRing(format!("{other} is not a prime field"))),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "z"),
            CoeffRing::Modular(m) => write!(f, "zmod:{m}"),
        }
    }
}

impl FromStr for CoeffRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("z") {
            return Ok(CoeffRing::Integers);
        }
        if let Some(m) = s.strip_prefix("zmod:") {
            let m: u64 = m.parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            return CoeffRing::modular(m);
        }
        Err(Error::Parse(format!("unknown ring {s:?}; use z or zmod:<m>")))
    }
}

impl TryFrom<String> for CoeffRing {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CoeffRing> for String {
    fn from(r: CoeffRing) -> String {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("z".parse::<CoeffRing>().unwrap(), CoeffRing::Integers);
        assert_eq!("zmod:5".parse::<CoeffRing>().unwrap(), CoeffRing::Modular(5));
        assert!("zmod:1".parse::<CoeffRing>().is_err());
        assert!("q".parse::<CoeffRing>().is_err());
        assert_eq!(CoeffRing::Modular(7).to_string(), "zmod:7");
    }

    #[test]
    fn inverses_mod_p() {
        let r = CoeffRing::Modular(5);
        assert_eq!(r.inverse(&BigInt::from(24)), Some(BigInt::from(4)));
        assert_eq!(r.inverse(&BigInt::from(10)), None);
        assert!(r.is_field());
        assert!(!CoeffRing::Modular(4).is_field());
    }
}
