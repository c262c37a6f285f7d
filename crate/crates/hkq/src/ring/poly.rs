//! Dense univariate polynomial in the sequence parameter `k` over
//! arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial, and the last stored
//! coefficient is nonzero otherwise. Equality is therefore structural.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Largest exponent the text parser accepts. Dense storage allocates
/// `exponent + 1` coefficients, so untrusted input must not pick the degree.
pub const MAX_PARSE_EXPONENT: usize = 10_000;

/// A dense univariate polynomial with `BigRational` coefficients; `coeffs[i]`
/// is the coefficient of `k^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyK {
    coeffs: Vec<BigRational>,
}

impl PolyK {
    /// Strip trailing zero coefficients to keep the canonical invariant.
    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    // ---- Constructors ----

    /// The zero polynomial.
    pub fn zero() -> Self {
        PolyK { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        PolyK::constant(BigRational::one())
    }

    /// A constant polynomial. The zero constant yields the zero polynomial.
    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PolyK { coeffs: vec![c] }
        }
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        PolyK {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    /// The monomial `c * k^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        PolyK { coeffs }
    }

    /// Construct from ascending-order coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = PolyK { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients (ascending order).
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    // ---- Queries ----

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `k^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Read-only access to the coefficient slice.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for degree <= 0.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value if degree <= 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// True if every coefficient has denominator 1.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    // ---- Arithmetic helpers ----

    /// Multiply every coefficient by a scalar.
    pub fn scalar_mul(&self, c: &BigRational) -> PolyK {
        if c.is_zero() {
            return PolyK::zero();
        }
        PolyK {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Raise to a nonnegative power by repeated squaring.
    pub fn pow(&self, exp: u32) -> PolyK {
        let mut result = PolyK::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluate at `x` by Horner's rule. Evaluation is a ring homomorphism.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &PolyK {
    type Output = PolyK;
    fn add(self, rhs: &PolyK) -> PolyK {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        PolyK::from_coeffs(coeffs)
    }
}

impl Sub for &PolyK {
    type Output = PolyK;
    fn sub(self, rhs: &PolyK) -> PolyK {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        PolyK::from_coeffs(coeffs)
    }
}

impl Neg for &PolyK {
    type Output = PolyK;
    fn neg(self) -> PolyK {
        PolyK {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyK {
    type Output = PolyK;
    fn mul(self, rhs: &PolyK) -> PolyK {
        if self.is_zero() || rhs.is_zero() {
            return PolyK::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // Leading coefficients are nonzero and rationals have no zero divisors,
        // so no trailing trim is needed; keep it anyway for safety.
        PolyK::from_coeffs(coeffs)
    }
}

// ---- Text rendering ----
//
// Report grammar: descending powers, `^` for exponents, no explicit `*`,
// e.g. `k^3 + 2k` or `k^4 + 3k^2 + 1`.

impl fmt::Display for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", abs)?,
                1 => {
                    if !abs.is_one() {
                        write!(f, "{}", abs)?;
                    }
                    write!(f, "k")?;
                }
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}", abs)?;
                    }
                    write!(f, "k^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

/// Failure to parse the polynomial text grammar.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar { at: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("zero denominator at byte {at}")]
    ZeroDenominator { at: usize },
    #[error("exponent at byte {at} exceeds {MAX_PARSE_EXPONENT}")]
    ExponentTooLarge { at: usize },
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn err_here(&self) -> PolyParseError {
        match self.peek() {
            Some(b) => PolyParseError::UnexpectedChar {
                at: self.pos,
                found: b as char,
            },
            None => PolyParseError::UnexpectedEnd,
        }
    }

    /// A nonempty decimal digit run as a `BigInt`.
    fn parse_uint(&mut self) -> Result<BigInt, PolyParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err_here());
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(BigInt::from_str(digits).unwrap())
    }

    /// Unsigned rational: `uint` or `uint/uint`.
    fn parse_coeff(&mut self) -> Result<BigRational, PolyParseError> {
        let numer = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom_at = self.pos;
            let denom = self.parse_uint()?;
            if denom.is_zero() {
                return Err(PolyParseError::ZeroDenominator { at: denom_at });
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// `k` optionally followed by `^uint`; returns the exponent.
    fn parse_power(&mut self) -> Result<usize, PolyParseError> {
        debug_assert_eq!(self.peek(), Some(b'k'));
        self.pos += 1;
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let exp_at = self.pos;
        let exp = self.parse_uint()?;
        match usize::try_from(&exp) {
            Ok(e) if e <= MAX_PARSE_EXPONENT => Ok(e),
            _ => Err(PolyParseError::ExponentTooLarge { at: exp_at }),
        }
    }

    /// One term: `coeff`, `coeff k^e`, or `k^e`. The sign is handled by the caller.
    fn parse_term(&mut self) -> Result<(BigRational, usize), PolyParseError> {
        match self.peek() {
            Some(b'k') => Ok((BigRational::one(), self.parse_power()?)),
            Some(b'0'..=b'9') => {
                let coeff = self.parse_coeff()?;
                if self.peek() == Some(b'k') {
                    Ok((coeff, self.parse_power()?))
                } else {
                    Ok((coeff, 0))
                }
            }
            _ => Err(self.err_here()),
        }
    }

    fn parse_poly(&mut self) -> Result<PolyK, PolyParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(PolyParseError::Empty);
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        }
        let mut acc: Vec<BigRational> = Vec::new();
        loop {
            let (coeff, exp) = self.parse_term()?;
            if acc.len() <= exp {
                acc.resize(exp + 1, BigRational::zero());
            }
            if negative {
                acc[exp] -= coeff;
            } else {
                acc[exp] += coeff;
            }
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err_here()),
            }
            self.pos += 1;
            self.skip_ws();
        }
        Ok(PolyK::from_coeffs(acc))
    }
}

impl FromStr for PolyK {
    type Err = PolyParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        Parser::new(text).parse_poly()
    }
}
