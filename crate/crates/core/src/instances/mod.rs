//! The shipped ring instances and the selector strings naming them.

mod hurwitz;
mod integer;
mod mat2f2;
mod modular;
mod parse;
mod polyq;

use std::fmt;
use std::str::FromStr;

pub use hurwitz::{Hurwitz, HurwitzRing};
pub use integer::IntegerRing;
pub use mat2f2::{Bits2x2, Mat2F2Ring};
pub use modular::ModularRing;
pub use polyq::{Poly, PolyRing};

use crate::error::{Error, ParseError};

/// `int`, `polyq`, `zmod:<n>`, `hurwitz` or `mat2f2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSelector {
    Integers,
    RationalPolynomials,
    Modular(u64),
    Hurwitz,
    Mat2F2,
}

impl FromStr for RingSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "int" => Ok(RingSelector::Integers),
            "polyq" => Ok(RingSelector::RationalPolynomials),
            "hurwitz" => Ok(RingSelector::Hurwitz),
            "mat2f2" => Ok(RingSelector::Mat2F2),
            _ => {
                let Some(n) = s.strip_prefix("zmod:") else {
                    return Err(ParseError::new(0, format!("unknown ring selector `{s}`")).into());
                };
                let n: u64 = n
                    .parse()
                    .map_err(|_| Error::from(ParseError::new(5, format!("bad modulus in `{s}`"))))?;
                ModularRing::new(n)?;
                Ok(RingSelector::Modular(n))
            }
        }
    }
}

impl fmt::Display for RingSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSelector::Integers => f.write_str("int"),
            RingSelector::RationalPolynomials => f.write_str("polyq"),
            RingSelector::Modular(n) => write!(f, "zmod:{n}"),
            RingSelector::Hurwitz => f.write_str("hurwitz"),
            RingSelector::Mat2F2 => f.write_str("mat2f2"),
        }
    }
}
