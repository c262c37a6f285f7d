//! Hyperbolic quaternions over an exact coefficient ring.
//!
//! The unit rules are `i^2 = j^2 = k^2 = 1`, `ij = k = -ji`, `jk = i = -kj`,
//! `ki = j = -ik`. The algebra is neither commutative nor associative, so no
//! three-factor product is ever formed here; callers parenthesize explicitly.
//!
//! The product is implemented twice: hardcoded component formulas and a
//! table-driven bilinear expansion. The table-driven form is the oracle for
//! transcription errors in the component formulas; the two must always agree.
//!
//! Internally the units are `e1, e2, e3` (the third quaternion unit would
//! otherwise collide with the sequence parameter `k`); rendering uses the
//! conventional `i, j, k`.

use crate::kfib::SeqCache;
use crate::ring::{Ring, RingElement, RingError};
use num::BigRational;
use std::fmt;

/// Sign attached to a unit product.
pub type UnitProduct = (i8, usize);

/// The 4x4 signed product table of the basis `{1, e1, e2, e3}`.
pub struct UnitTable;

impl UnitTable {
    const TABLE: [[UnitProduct; 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (1, 0)],
    ];

    /// Signed product of two basis units by index (0 is the scalar unit).
    pub fn product(a: usize, b: usize) -> UnitProduct {
        Self::TABLE[a][b]
    }
}

/// A hyperbolic quaternion: scalar component plus coefficients of `i, j, k`,
/// all in one coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HQuat {
    c: [RingElement; 4],
}

impl HQuat {
    /// Build from components, verifying they share one ring.
    pub fn new(components: [RingElement; 4]) -> Result<Self, RingError> {
        let ring = components[0].ring();
        for c in &components[1..] {
            if c.ring() != ring {
                return Err(RingError::Mismatch {
                    left: ring.to_string(),
                    right: c.ring().to_string(),
                });
            }
        }
        Ok(HQuat { c: components })
    }

    /// The zero quaternion of a ring.
    pub fn zero(ring: &Ring) -> Self {
        HQuat {
            c: [ring.zero(), ring.zero(), ring.zero(), ring.zero()],
        }
    }

    /// Basis unit `idx` (0 = scalar unit, 1..=3 the hyperbolic units).
    pub fn unit(ring: &Ring, idx: usize) -> Self {
        let mut q = Self::zero(ring);
        q.c[idx] = ring.one();
        q
    }

    /// Embed a ring element as a pure scalar quaternion.
    pub fn from_scalar(value: RingElement) -> Self {
        let ring = value.ring();
        let mut q = Self::zero(&ring);
        q.c[0] = value;
        q
    }

    pub fn ring(&self) -> Ring {
        self.c[0].ring()
    }

    pub fn components(&self) -> &[RingElement; 4] {
        &self.c
    }

    pub fn component(&self, idx: usize) -> &RingElement {
        &self.c[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(RingElement::is_zero)
    }

    fn require_same_ring(&self, other: &Self) -> Result<(), RingError> {
        let (left, right) = (self.ring(), other.ring());
        if left == right {
            Ok(())
        } else {
            Err(RingError::Mismatch {
                left: left.to_string(),
                right: right.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.require_same_ring(other)?;
        let c = [
            self.c[0].add(&other.c[0])?,
            self.c[1].add(&other.c[1])?,
            self.c[2].add(&other.c[2])?,
            self.c[3].add(&other.c[3])?,
        ];
        Ok(HQuat { c })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.require_same_ring(other)?;
        let c = [
            self.c[0].sub(&other.c[0])?,
            self.c[1].sub(&other.c[1])?,
            self.c[2].sub(&other.c[2])?,
            self.c[3].sub(&other.c[3])?,
        ];
        Ok(HQuat { c })
    }

    pub fn neg(&self) -> Self {
        HQuat {
            c: [
                self.c[0].neg(),
                self.c[1].neg(),
                self.c[2].neg(),
                self.c[3].neg(),
            ],
        }
    }

    /// Multiply every component by a ring scalar.
    pub fn scale(&self, scalar: &RingElement) -> Result<Self, RingError> {
        let c = [
            scalar.mul(&self.c[0])?,
            scalar.mul(&self.c[1])?,
            scalar.mul(&self.c[2])?,
            scalar.mul(&self.c[3])?,
        ];
        Ok(HQuat { c })
    }

    /// Hardcoded component formulas of the hyperbolic product:
    /// scalar `a0b0 + a1b1 + a2b2 + a3b3`,
    /// i `a0b1 + a1b0 + a2b3 - a3b2`,
    /// j `a0b2 + a2b0 - a1b3 + a3b1`,
    /// k `a0b3 + a3b0 + a1b2 - a2b1`.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        self.require_same_ring(other)?;
        let a = &self.c;
        let b = &other.c;
        let p = |i: usize, j: usize| a[i].mul(&b[j]).expect("components share one ring");
        let sum4 = |w: RingElement, x: RingElement, y: RingElement, z: RingElement| {
            w.add(&x)
                .and_then(|acc| acc.add(&y))
                .and_then(|acc| acc.add(&z))
                .expect("components share one ring")
        };
        let c0 = sum4(p(0, 0), p(1, 1), p(2, 2), p(3, 3));
        let c1 = sum4(p(0, 1), p(1, 0), p(2, 3), p(3, 2).neg());
        let c2 = sum4(p(0, 2), p(2, 0), p(1, 3).neg(), p(3, 1));
        let c3 = sum4(p(0, 3), p(3, 0), p(1, 2), p(2, 1).neg());
        Ok(HQuat {
            c: [c0, c1, c2, c3],
        })
    }

    /// Generic bilinear expansion over [`UnitTable`]; must agree with
    /// [`HQuat::mul`] everywhere.
    pub fn mul_table(&self, other: &Self) -> Result<Self, RingError> {
        self.require_same_ring(other)?;
        let ring = self.ring();
        let mut acc = [ring.zero(), ring.zero(), ring.zero(), ring.zero()];
        for s in 0..4 {
            for t in 0..4 {
                let (sign, idx) = UnitTable::product(s, t);
                let term = self.c[s].mul(&other.c[t])?;
                acc[idx] = if sign > 0 {
                    acc[idx].add(&term)?
                } else {
                    acc[idx].sub(&term)?
                };
            }
        }
        Ok(HQuat { c: acc })
    }

    /// Conjugate: negate the three vector components.
    pub fn conj(&self) -> Self {
        HQuat {
            c: [
                self.c[0].clone(),
                self.c[1].neg(),
                self.c[2].neg(),
                self.c[3].neg(),
            ],
        }
    }

    /// `q0^2 - q1^2 - q2^2 - q3^2`; equals the scalar part of `q * conj(q)`,
    /// whose vector part vanishes.
    pub fn norm_sq(&self) -> RingElement {
        let sq = |i: usize| self.c[i].mul(&self.c[i]).expect("components share one ring");
        sq(0)
            .sub(&sq(1))
            .and_then(|acc| acc.sub(&sq(2)))
            .and_then(|acc| acc.sub(&sq(3)))
            .expect("components share one ring")
    }

    /// Split into the scalar part and the pure-vector quaternion.
    pub fn scalar_vector(&self) -> (RingElement, HQuat) {
        let ring = self.ring();
        let vector = HQuat {
            c: [
                ring.zero(),
                self.c[1].clone(),
                self.c[2].clone(),
                self.c[3].clone(),
            ],
        };
        (self.c[0].clone(), vector)
    }

    /// Lift every component into `target`.
    pub fn promote_to(&self, target: &Ring) -> Result<Self, RingError> {
        let c = [
            self.c[0].promote_to(target)?,
            self.c[1].promote_to(target)?,
            self.c[2].promote_to(target)?,
            self.c[3].promote_to(target)?,
        ];
        Ok(HQuat { c })
    }

    /// Specialize the sequence parameter in every component.
    pub fn eval_k(&self, value: &BigRational) -> Self {
        HQuat {
            c: [
                self.c[0].eval_k(value),
                self.c[1].eval_k(value),
                self.c[2].eval_k(value),
                self.c[3].eval_k(value),
            ],
        }
    }
}

impl fmt::Display for HQuat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({}) i + ({}) j + ({}) k",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// Hyperbolic k-Fibonacci quaternion: components
/// `(F_{k,n}, F_{k,n+1}, F_{k,n+2}, F_{k,n+3})`.
pub fn hfib(cache: &mut SeqCache, n: i64) -> HQuat {
    HQuat::new([
        cache.fib(n),
        cache.fib(n + 1),
        cache.fib(n + 2),
        cache.fib(n + 3),
    ])
    .expect("cache values share one ring")
}

/// Hyperbolic k-Lucas quaternion: components
/// `(L_{k,n}, L_{k,n+1}, L_{k,n+2}, L_{k,n+3})`.
pub fn hlucas(cache: &mut SeqCache, n: i64) -> HQuat {
    HQuat::new([
        cache.lucas(n),
        cache.lucas(n + 1),
        cache.lucas(n + 2),
        cache.lucas(n + 3),
    ])
    .expect("cache values share one ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kfib::KMode;
    use crate::ring::PolyK;
    use num::BigInt;

    fn sym_cache() -> SeqCache {
        SeqCache::new(KMode::Symbolic)
    }

    fn poly(coeffs: &[i64]) -> RingElement {
        RingElement::Poly(PolyK::from_i64s(coeffs))
    }

    fn int_quat(c: [i64; 4]) -> HQuat {
        HQuat::new(c.map(RingElement::from_i64)).unwrap()
    }

    #[test]
    fn unit_table_matches_defining_rules() {
        let ring = Ring::Integer;
        let one = HQuat::unit(&ring, 0);
        let i = HQuat::unit(&ring, 1);
        let j = HQuat::unit(&ring, 2);
        let kk = HQuat::unit(&ring, 3);
        // i^2 = j^2 = k^2 = 1
        for u in [&i, &j, &kk] {
            assert_eq!(u.mul(u).unwrap(), one);
        }
        // ij = k = -ji, jk = i = -kj, ki = j = -ik
        assert_eq!(i.mul(&j).unwrap(), kk);
        assert_eq!(j.mul(&i).unwrap(), kk.neg());
        assert_eq!(j.mul(&kk).unwrap(), i);
        assert_eq!(kk.mul(&j).unwrap(), i.neg());
        assert_eq!(kk.mul(&i).unwrap(), j);
        assert_eq!(i.mul(&kk).unwrap(), j.neg());
        // scalar unit is the two-sided identity
        for u in [&i, &j, &kk] {
            assert_eq!(one.mul(u).unwrap(), *u);
            assert_eq!(u.mul(&one).unwrap(), *u);
        }
    }

    #[test]
    fn non_commutative_non_associative_witnesses() {
        let ring = Ring::Integer;
        let i = HQuat::unit(&ring, 1);
        let j = HQuat::unit(&ring, 2);
        let ij = i.mul(&j).unwrap();
        let ji = j.mul(&i).unwrap();
        assert_ne!(ij, ji);
        let left = i.mul(&i).unwrap().mul(&j).unwrap();
        let right = i.mul(&i.mul(&j).unwrap()).unwrap();
        assert_eq!(left, j);
        assert_eq!(right, j.neg());
        assert_ne!(left, right);
    }

    #[test]
    fn fibonacci_quaternion_components() {
        let mut c = sym_cache();
        let hf0 = hfib(&mut c, 0);
        assert_eq!(
            *hf0.components(),
            [poly(&[]), poly(&[1]), poly(&[0, 1]), poly(&[1, 0, 1])]
        );
        let hf1 = hfib(&mut c, 1);
        assert_eq!(
            *hf1.components(),
            [
                poly(&[1]),
                poly(&[0, 1]),
                poly(&[1, 0, 1]),
                poly(&[0, 2, 0, 1])
            ]
        );
        let hfm1 = hfib(&mut c, -1);
        assert_eq!(
            *hfm1.components(),
            [poly(&[1]), poly(&[]), poly(&[1]), poly(&[0, 1])]
        );
    }

    #[test]
    fn lucas_quaternion_components() {
        let mut c = sym_cache();
        let hl0 = hlucas(&mut c, 0);
        assert_eq!(
            *hl0.components(),
            [
                poly(&[2]),
                poly(&[0, 1]),
                poly(&[2, 0, 1]),
                poly(&[0, 3, 0, 1])
            ]
        );
        let mut numeric = SeqCache::new(KMode::numeric_i64(1));
        let hl0_num = hlucas(&mut numeric, 0);
        let expect: Vec<RingElement> = [2i64, 1, 3, 4]
            .iter()
            .map(|&v| RingElement::Rational(num::BigRational::from_integer(BigInt::from(v))))
            .collect();
        assert_eq!(hl0_num.components().as_slice(), expect.as_slice());
        // HF_{k,n+1} + HF_{k,n-1} = HL_{k,n} at n = 2
        let sum = hfib(&mut c, 3).add(&hfib(&mut c, 1)).unwrap();
        assert_eq!(sum, hlucas(&mut c, 2));
    }

    #[test]
    fn addition_is_componentwise_and_commutative() {
        let mut c = sym_cache();
        let sum = hfib(&mut c, 1).add(&hfib(&mut c, -1)).unwrap();
        assert_eq!(
            *sum.components(),
            [
                poly(&[2]),
                poly(&[0, 1]),
                poly(&[2, 0, 1]),
                poly(&[0, 3, 0, 1])
            ]
        );
        let a = int_quat([3, -1, 4, 1]);
        let b = int_quat([-5, 9, 2, 6]);
        assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        let zero = HQuat::zero(&Ring::Poly);
        assert_eq!(hfib(&mut c, 0).add(&zero).unwrap(), hfib(&mut c, 0));
    }

    #[test]
    fn product_spot_value_at_k1() {
        // HF_{1,1} = (1,1,2,3); its square expands to (15, 2, 4, 6)
        let hf = int_quat([1, 1, 2, 3]);
        assert_eq!(hf.mul(&hf).unwrap(), int_quat([15, 2, 4, 6]));
        assert_eq!(hf.mul_table(&hf).unwrap(), int_quat([15, 2, 4, 6]));
    }

    #[test]
    fn conjugation() {
        let mut c = sym_cache();
        let hf0 = hfib(&mut c, 0);
        assert_eq!(
            *hf0.conj().components(),
            [poly(&[]), poly(&[-1]), poly(&[0, -1]), poly(&[-1, 0, -1])]
        );
        let a = int_quat([2, -3, 5, 7]);
        assert_eq!(a.conj().conj(), a);
        let scalar = HQuat::from_scalar(RingElement::from_i64(9));
        assert_eq!(scalar.conj(), scalar);
    }

    #[test]
    fn norm_and_conjugate_product() {
        let mut c = sym_cache();
        let hf0 = hfib(&mut c, 0);
        // 0 - 1 - k^2 - (k^2+1)^2
        let expected = poly(&[])
            .sub(&poly(&[1]))
            .unwrap()
            .sub(&poly(&[0, 0, 1]))
            .unwrap()
            .sub(&poly(&[1, 0, 1]).mul(&poly(&[1, 0, 1])).unwrap())
            .unwrap();
        assert_eq!(hf0.norm_sq(), expected);

        let scalar = HQuat::from_scalar(poly(&[0, 3]));
        assert_eq!(scalar.norm_sq(), poly(&[0, 0, 9]));

        // at k = 1, n = 1: 1 - 1 - 4 - 9 = -13
        let hf = int_quat([1, 1, 2, 3]);
        assert_eq!(hf.norm_sq(), RingElement::from_i64(-13));

        // q * conj(q) is a pure scalar equal to the norm
        for q in [int_quat([2, -3, 5, 7]), int_quat([0, 1, 1, 2]), hf] {
            let prod = q.mul(&q.conj()).unwrap();
            let (scalar_part, vector) = prod.scalar_vector();
            assert!(vector.is_zero());
            assert_eq!(scalar_part, q.norm_sq());
        }
    }

    #[test]
    fn scalar_vector_reassembles() {
        let mut c = sym_cache();
        let q = hfib(&mut c, 4);
        let (s, v) = q.scalar_vector();
        assert_eq!(s, c.fib(4));
        let rebuilt = HQuat::from_scalar(s).add(&v).unwrap();
        assert_eq!(rebuilt, q);
        let pure = HQuat::from_scalar(RingElement::from_i64(5));
        let (s, v) = pure.scalar_vector();
        assert_eq!(s, RingElement::from_i64(5));
        assert!(v.is_zero());
    }

    #[test]
    fn square_identity_holds_for_any_quaternion() {
        // a^2 = 2 q0 a - a conj(a): a consequence of the unit table alone
        for a in [
            int_quat([3, -2, 7, 1]),
            int_quat([0, 4, -4, 9]),
            int_quat([-6, 0, 0, 5]),
        ] {
            let lhs = a.mul(&a).unwrap();
            let two_q0 = RingElement::from_i64(2).mul(a.component(0)).unwrap();
            let rhs = a
                .scale(&two_q0)
                .unwrap()
                .sub(&a.mul(&a.conj()).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let mut sym = sym_cache();
        let mut num = SeqCache::new(KMode::numeric_i64(2));
        let a = hfib(&mut sym, 1);
        let b = hfib(&mut num, 1);
        assert!(matches!(a.add(&b), Err(RingError::Mismatch { .. })));
        assert!(matches!(a.mul(&b), Err(RingError::Mismatch { .. })));
        assert!(matches!(
            HQuat::new([
                RingElement::from_i64(1),
                poly(&[1]),
                RingElement::from_i64(0),
                RingElement::from_i64(0)
            ]),
            Err(RingError::Mismatch { .. })
        ));
    }

    #[test]
    fn rendering() {
        let mut c = sym_cache();
        assert_eq!(
            hfib(&mut c, 0).to_string(),
            "(0) + (1) i + (k) j + (k^2 + 1) k"
        );
    }
}
