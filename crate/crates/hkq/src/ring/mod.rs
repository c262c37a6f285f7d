//! Exact coefficient rings: arbitrary-precision integers, rationals,
//! polynomials in `k`, and the quadratic extension adjoining `s = sqrt(k^2+4)`.
//!
//! Every sequence term and quaternion component is a [`RingElement`]. Binary
//! operations require both operands in the same ring; promotion along
//! `Integer -> Rational -> Poly -> Quad` is explicit and injective.

pub mod poly;
pub mod quad;

pub use poly::{PolyK, PolyParseError, MAX_PARSE_EXPONENT};
pub use quad::{NonPureSurd, QuadExt};

use num::{BigInt, BigRational, One, Zero};
use std::fmt;
use thiserror::Error;

/// Ring descriptor. `Quad` carries the image of the sequence parameter so
/// symbolic and numeric extension rings stay distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Integer,
    Rational,
    Poly,
    Quad(PolyK),
}

impl Ring {
    pub fn zero(&self) -> RingElement {
        match self {
            Ring::Integer => RingElement::Integer(BigInt::zero()),
            Ring::Rational => RingElement::Rational(BigRational::zero()),
            Ring::Poly => RingElement::Poly(PolyK::zero()),
            Ring::Quad(kimage) => RingElement::Quad(QuadExt::zero(kimage.clone())),
        }
    }

    pub fn one(&self) -> RingElement {
        match self {
            Ring::Integer => RingElement::Integer(BigInt::one()),
            Ring::Rational => RingElement::Rational(BigRational::one()),
            Ring::Poly => RingElement::Poly(PolyK::one()),
            Ring::Quad(kimage) => RingElement::Quad(QuadExt::one(kimage.clone())),
        }
    }

    /// Position in the promotion chain.
    fn level(&self) -> u8 {
        match self {
            Ring::Integer => 0,
            Ring::Rational => 1,
            Ring::Poly => 2,
            Ring::Quad(_) => 3,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "integer"),
            Ring::Rational => write!(f, "rational"),
            Ring::Poly => write!(f, "poly"),
            Ring::Quad(kimage) => write!(f, "quad(k = {kimage})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring mismatch: {left} vs {right}")]
    Mismatch { left: String, right: String },
    #[error("cannot promote {from} into {to}")]
    InvalidPromotion { from: String, to: String },
    #[error(transparent)]
    NonPureSurd(#[from] NonPureSurd),
}

/// An exact value in one of the four coefficient rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Poly(PolyK),
    Quad(QuadExt),
}

impl RingElement {
    pub fn from_i64(v: i64) -> Self {
        RingElement::Integer(BigInt::from(v))
    }

    pub fn ring(&self) -> Ring {
        match self {
            RingElement::Integer(_) => Ring::Integer,
            RingElement::Rational(_) => Ring::Rational,
            RingElement::Poly(_) => Ring::Poly,
            RingElement::Quad(q) => Ring::Quad(q.kimage().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(v) => v.is_zero(),
            RingElement::Rational(v) => v.is_zero(),
            RingElement::Poly(v) => v.is_zero(),
            RingElement::Quad(v) => v.is_zero(),
        }
    }

    fn mismatch(&self, other: &Self) -> RingError {
        RingError::Mismatch {
            left: self.ring().to_string(),
            right: other.ring().to_string(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => {
                Ok(RingElement::Integer(a + b))
            }
            (RingElement::Rational(a), RingElement::Rational(b)) => {
                Ok(RingElement::Rational(a + b))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a + b)),
            (RingElement::Quad(a), RingElement::Quad(b)) if a.same_ring(b) => {
                Ok(RingElement::Quad(a.add(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => {
                Ok(RingElement::Integer(a - b))
            }
            (RingElement::Rational(a), RingElement::Rational(b)) => {
                Ok(RingElement::Rational(a - b))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a - b)),
            (RingElement::Quad(a), RingElement::Quad(b)) if a.same_ring(b) => {
                Ok(RingElement::Quad(a.sub(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        match (self, other) {
            (RingElement::Integer(a), RingElement::Integer(b)) => {
                Ok(RingElement::Integer(a * b))
            }
            (RingElement::Rational(a), RingElement::Rational(b)) => {
                Ok(RingElement::Rational(a * b))
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a * b)),
            (RingElement::Quad(a), RingElement::Quad(b)) if a.same_ring(b) => {
                Ok(RingElement::Quad(a.mul(b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            RingElement::Integer(v) => RingElement::Integer(-v),
            RingElement::Rational(v) => RingElement::Rational(-v),
            RingElement::Poly(v) => RingElement::Poly(-v),
            RingElement::Quad(v) => RingElement::Quad(v.neg()),
        }
    }

    /// Lift into `target`, which must sit at or above this value's ring in the
    /// promotion chain.
    pub fn promote_to(&self, target: &Ring) -> Result<Self, RingError> {
        let from = self.ring();
        if from.level() > target.level() {
            return Err(RingError::InvalidPromotion {
                from: from.to_string(),
                to: target.to_string(),
            });
        }
        let rational = match self {
            RingElement::Integer(v) => BigRational::from_integer(v.clone()),
            RingElement::Rational(v) => v.clone(),
            RingElement::Poly(p) => {
                return match target {
                    Ring::Poly => Ok(self.clone()),
                    Ring::Quad(kimage) => Ok(RingElement::Quad(QuadExt::from_poly(
                        kimage.clone(),
                        p.clone(),
                    ))),
                    _ => unreachable!("level ordering checked above"),
                };
            }
            RingElement::Quad(_) => return Ok(self.clone()),
        };
        Ok(match target {
            Ring::Integer => self.clone(),
            Ring::Rational => RingElement::Rational(rational),
            Ring::Poly => RingElement::Poly(PolyK::constant(rational)),
            Ring::Quad(kimage) => RingElement::Quad(QuadExt::from_poly(
                kimage.clone(),
                PolyK::constant(rational),
            )),
        })
    }

    /// Lower to the smallest ring that represents the value exactly:
    /// a surd-free quad becomes a polynomial, a constant polynomial becomes a
    /// rational, a denominator-1 rational becomes an integer.
    pub fn demote(&self) -> Self {
        let mut current = self.clone();
        loop {
            current = match current {
                RingElement::Quad(q) if q.surd_part().is_zero() => {
                    RingElement::Poly(q.rat_part().clone())
                }
                RingElement::Poly(p) => match p.as_constant() {
                    Some(c) => RingElement::Rational(c),
                    None => return RingElement::Poly(p),
                },
                RingElement::Rational(r) if r.denom().is_one() => {
                    RingElement::Integer(r.numer().clone())
                }
                other => return other,
            };
        }
    }

    /// Specialize the sequence parameter to a rational constant. Polynomials
    /// evaluate to rationals; quad values move to the numeric extension ring.
    pub fn eval_k(&self, value: &BigRational) -> Self {
        match self {
            RingElement::Integer(_) | RingElement::Rational(_) => self.clone(),
            RingElement::Poly(p) => RingElement::Rational(p.eval(value)),
            RingElement::Quad(q) => RingElement::Quad(q.specialize(value)),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(v) => write!(f, "{v}"),
            RingElement::Rational(v) => write!(f, "{v}"),
            RingElement::Poly(v) => write!(f, "{v}"),
            RingElement::Quad(v) => write!(f, "{v}"),
        }
    }
}
