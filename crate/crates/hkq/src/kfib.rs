//! k-Fibonacci and k-Lucas sequence engine.
//!
//! `F_{k,0} = 0`, `F_{k,1} = 1`, `F_{k,n+1} = k F_{k,n} + F_{k,n-1}`, extended
//! to negative indices by running the recurrence backward
//! (`F_{k,n-1} = F_{k,n+1} - k F_{k,n}`). The companion sequence is defined by
//! `L_{k,n} = F_{k,n+1} + F_{k,n-1}`, never by independent seeds, so the two
//! sequences cannot drift apart by convention.
//!
//! Two numeric kernels cover large indices: a streaming iterative pass and a
//! Lucas-companion fast-doubling pass (`F_{2n} = F_n L_n`,
//! `L_{2n} = L_n^2 - 2(-1)^n`), each O(log n) big multiplications per step of
//! the binary expansion.

use crate::ring::{PolyK, Ring, RingElement};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// How the sequence parameter is interpreted: as the indeterminate `k` or as
/// a fixed rational value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KMode {
    Symbolic,
    Numeric(BigRational),
}

impl KMode {
    pub fn numeric_i64(v: i64) -> Self {
        KMode::Numeric(BigRational::from_integer(BigInt::from(v)))
    }

    /// The coefficient ring sequence values live in.
    pub fn ring(&self) -> Ring {
        match self {
            KMode::Symbolic => Ring::Poly,
            KMode::Numeric(_) => Ring::Rational,
        }
    }

    /// The parameter itself as a ring element.
    pub fn k_element(&self) -> RingElement {
        match self {
            KMode::Symbolic => RingElement::Poly(PolyK::k()),
            KMode::Numeric(v) => RingElement::Rational(v.clone()),
        }
    }

    /// The image of `k` used to build the quadratic extension ring.
    pub fn kimage(&self) -> PolyK {
        match self {
            KMode::Symbolic => PolyK::k(),
            KMode::Numeric(v) => PolyK::constant(v.clone()),
        }
    }
}

impl fmt::Display for KMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMode::Symbolic => write!(f, "symbolic"),
            KMode::Numeric(v) => write!(f, "{v}"),
        }
    }
}

/// Invalid `--k` value or k-mode text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid k mode {text:?}: expected \"symbolic\", an integer, or a rational like 7/2")]
pub struct KModeParseError {
    pub text: String,
}

impl FromStr for KMode {
    type Err = KModeParseError;

    /// Accepts `symbolic` or a rational literal (`3`, `-2`, `7/2`).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        if trimmed == "symbolic" {
            return Ok(KMode::Symbolic);
        }
        let err = || KModeParseError {
            text: text.to_string(),
        };
        let (numer_text, denom_text) = match trimmed.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (trimmed, None),
        };
        let numer = BigInt::from_str(numer_text).map_err(|_| err())?;
        let denom = match denom_text {
            Some(d) => {
                let d = BigInt::from_str(d).map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(KMode::Numeric(BigRational::new(numer, denom)))
    }
}

/// Numeric-only kernels refuse symbolic mode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("operation requires numeric k; symbolic k would blow up coefficient degree")]
    SymbolicKUnsupported,
}

/// Memoized sequence values for one parameter mode. Single-writer: one cache
/// per worker; all returned elements are immutable clones.
#[derive(Clone, Debug)]
pub struct SeqCache {
    mode: KMode,
    k: RingElement,
    fwd: Vec<RingElement>,
    bwd: Vec<RingElement>,
    lucas: BTreeMap<i64, RingElement>,
}

impl SeqCache {
    pub fn new(mode: KMode) -> Self {
        let ring = mode.ring();
        let k = mode.k_element();
        SeqCache {
            mode,
            k,
            fwd: vec![ring.zero(), ring.one()],
            bwd: Vec::new(),
            lucas: BTreeMap::new(),
        }
    }

    pub fn mode(&self) -> &KMode {
        &self.mode
    }

    pub fn ring(&self) -> Ring {
        self.mode.ring()
    }

    /// The parameter `k` in this cache's ring.
    pub fn k_element(&self) -> RingElement {
        self.k.clone()
    }

    /// `F_{k,n}`, extending the cache forward or backward as needed.
    pub fn fib(&mut self, n: i64) -> RingElement {
        if n >= 0 {
            let idx = n as usize;
            while self.fwd.len() <= idx {
                let len = self.fwd.len();
                let next = self
                    .k
                    .mul(&self.fwd[len - 1])
                    .and_then(|kf| kf.add(&self.fwd[len - 2]))
                    .expect("cache elements share one ring");
                self.fwd.push(next);
            }
            self.fwd[idx].clone()
        } else {
            let idx = (-n - 1) as usize;
            while self.bwd.len() <= idx {
                // F_{m-1} = F_{m+1} - k F_m for m = -len(bwd)
                let len = self.bwd.len();
                let (f_next, f_cur) = if len == 0 {
                    (self.fwd[1].clone(), self.fwd[0].clone())
                } else if len == 1 {
                    (self.fwd[0].clone(), self.bwd[0].clone())
                } else {
                    (self.bwd[len - 2].clone(), self.bwd[len - 1].clone())
                };
                let prev = f_next
                    .sub(&self.k.mul(&f_cur).expect("cache elements share one ring"))
                    .expect("cache elements share one ring");
                self.bwd.push(prev);
            }
            self.bwd[idx].clone()
        }
    }

    /// `L_{k,n} = F_{k,n+1} + F_{k,n-1}`.
    pub fn lucas(&mut self, n: i64) -> RingElement {
        if let Some(v) = self.lucas.get(&n) {
            return v.clone();
        }
        let v = self
            .fib(n + 1)
            .add(&self.fib(n - 1))
            .expect("cache elements share one ring");
        self.lucas.insert(n, v.clone());
        v
    }
}

/// `F_{k,-n} = (-1)^{n+1} F_{k,n}` for positive `n`; must agree with the
/// backward recurrence.
pub fn fib_negate_index(n: u64, f_n: &RingElement) -> RingElement {
    assert!(n > 0, "index must be positive");
    if n % 2 == 1 {
        f_n.clone()
    } else {
        f_n.neg()
    }
}

/// Multiplication tally for the numeric kernels. `big` counts products of two
/// sequence-sized values; `scalar` counts products by the small constants `k`
/// and `k^2 + 4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MulCount {
    pub big: u64,
    pub scalar: u64,
}

/// A sampled point of the iterative kernel.
#[derive(Clone, Debug)]
pub struct FibCheckpoint {
    pub n: u64,
    pub fib: RingElement,
    pub fib_next: RingElement,
}

// ---- Numeric kernel scaffolding ----

trait SeqNum: Clone + PartialEq {
    fn from_small(v: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn halve_exact(&self) -> Self;
    fn to_element(&self) -> RingElement;
}

impl SeqNum for BigInt {
    fn from_small(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn halve_exact(&self) -> Self {
        debug_assert!(!self.bit(0), "halving an odd value");
        self / 2
    }
    fn to_element(&self) -> RingElement {
        RingElement::Rational(BigRational::from_integer(self.clone()))
    }
}

impl SeqNum for BigRational {
    fn from_small(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn halve_exact(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }
    fn to_element(&self) -> RingElement {
        RingElement::Rational(self.clone())
    }
}

/// Lucas-companion doubling: carries `(F_t, L_t)` along the binary expansion
/// of `n`. Each processed bit costs two big multiplications; the advance step
/// `F_{t+1} = (L_t + k F_t)/2`, `L_{t+1} = ((k^2+4) F_t + k L_t)/2` costs only
/// scalar multiplications.
fn doubling_kernel<T: SeqNum>(k: &T, n: u64, count: &mut MulCount) -> (T, T) {
    if n == 0 {
        return (T::from_small(0), T::from_small(1));
    }
    let disc = {
        count.scalar += 1;
        k.mul(k).add(&T::from_small(4))
    };
    let advance = |f: &T, l: &T, count: &mut MulCount| -> (T, T) {
        count.scalar += 2;
        let f1 = l.add(&k.mul(f)).halve_exact();
        let l1 = disc.mul(f).add(&k.mul(l)).halve_exact();
        (f1, l1)
    };
    // state: (F_t, L_t) with t = 1 after consuming the most significant bit
    let mut f = T::from_small(1);
    let mut l = k.clone();
    let mut t_odd = true;
    let bits = 64 - n.leading_zeros();
    for i in (0..bits - 1).rev() {
        count.big += 2;
        let two = T::from_small(2);
        let f2 = f.mul(&l);
        let l2 = if t_odd {
            l.mul(&l).add(&two)
        } else {
            l.mul(&l).sub(&two)
        };
        f = f2;
        l = l2;
        t_odd = false;
        if (n >> i) & 1 == 1 {
            let (f1, l1) = advance(&f, &l, count);
            f = f1;
            l = l1;
            t_odd = true;
        }
    }
    let (f_next, _) = advance(&f, &l, count);
    (f, f_next)
}

/// `(F_{k,n}, F_{k,n+1})` in O(log n) big multiplications, with the tally.
pub fn fib_pair_doubling_counted(
    mode: &KMode,
    n: u64,
) -> Result<((RingElement, RingElement), MulCount), SeqError> {
    let kval = match mode {
        KMode::Symbolic => return Err(SeqError::SymbolicKUnsupported),
        KMode::Numeric(v) => v,
    };
    let mut count = MulCount::default();
    let pair = if kval.denom().is_one() {
        let (f, f1) = doubling_kernel(kval.numer(), n, &mut count);
        (f.to_element(), f1.to_element())
    } else {
        let (f, f1) = doubling_kernel(kval, n, &mut count);
        (f.to_element(), f1.to_element())
    };
    Ok((pair, count))
}

/// `(F_{k,n}, F_{k,n+1})`; must agree exactly with the iterative kernel.
pub fn fib_pair_doubling(mode: &KMode, n: u64) -> Result<(RingElement, RingElement), SeqError> {
    fib_pair_doubling_counted(mode, n).map(|(pair, _)| pair)
}

/// Single iterative pass up to the largest checkpoint, sampling
/// `(F_n, F_{n+1})` at each requested index. Checkpoints may arrive unsorted;
/// results come back sorted ascending.
pub fn fib_iterative_pairs(
    mode: &KMode,
    checkpoints: &[u64],
) -> Result<Vec<FibCheckpoint>, SeqError> {
    let kval = match mode {
        KMode::Symbolic => return Err(SeqError::SymbolicKUnsupported),
        KMode::Numeric(v) => v,
    };
    let mut wanted: Vec<u64> = checkpoints.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    if kval.denom().is_one() {
        Ok(iterative_kernel_int(kval.numer(), &wanted))
    } else {
        Ok(iterative_kernel_generic(kval, &wanted))
    }
}

/// Integer-k pass with reused buffers: one add per step for k = ±1, otherwise
/// copy + scalar multiply + add.
fn iterative_kernel_int(k: &BigInt, wanted: &[u64]) -> Vec<FibCheckpoint> {
    let mut out = Vec::with_capacity(wanted.len());
    let mut prev: BigInt = Zero::zero(); // F_n
    let mut cur: BigInt = One::one(); // F_{n+1}
    let mut scratch: BigInt = Zero::zero();
    let mut n: u64 = 0;
    let k_is_one = k.is_one();
    for &target in wanted {
        while n < target {
            if k_is_one {
                prev += &cur;
            } else {
                scratch.clone_from(&cur);
                scratch *= k;
                scratch += &prev;
                std::mem::swap(&mut prev, &mut scratch);
            }
            std::mem::swap(&mut prev, &mut cur);
            n += 1;
        }
        out.push(FibCheckpoint {
            n,
            fib: prev.to_element(),
            fib_next: cur.to_element(),
        });
    }
    out
}

fn iterative_kernel_generic(k: &BigRational, wanted: &[u64]) -> Vec<FibCheckpoint> {
    let mut out = Vec::with_capacity(wanted.len());
    let mut prev = <BigRational as Zero>::zero();
    let mut cur = <BigRational as One>::one();
    let mut n: u64 = 0;
    for &target in wanted {
        while n < target {
            let next = k * &cur + &prev;
            prev = std::mem::replace(&mut cur, next);
            n += 1;
        }
        out.push(FibCheckpoint {
            n,
            fib: prev.to_element(),
            fib_next: cur.to_element(),
        });
    }
    out
}
