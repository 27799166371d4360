//! Truncated p-adic arithmetic.
//!
//! A [`PadicNum`] stores a value `u * p^v` with the unit `u` known modulo
//! `p^K` (so the value itself is known modulo `p^(v+K)`). Addition
//! propagates absolute precision pessimistically: the result is known
//! modulo the smaller of the two operands' absolute precisions, and full
//! cancellation at that precision collapses to the zero element.
//!
//! Only odd primes `p >= 5` are accepted; every congruence verified by
//! this crate has 2 and 3 in its denominators.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Inverse of `a` modulo `m`, in `[1, m)`.
pub fn mod_inverse(a: &BigInt, m: &BigUint) -> Result<BigUint> {
    let m_int = BigInt::from(m.clone());
    let e = a.extended_gcd(&m_int);
    if !e.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a.clone(),
            modulus: m.clone(),
        });
    }
    let x = e.x.mod_floor(&m_int);
    Ok(x.to_biguint()
        .expect("mod_floor yields a nonnegative value"))
}

/// `mod_inverse` over machine words.
pub fn mod_inverse_u64(a: u64, m: u64) -> Result<u64> {
    let inv = mod_inverse(&BigInt::from(a), &BigUint::from(m))?;
    Ok(inv.to_u64().expect("inverse is below the u64 modulus"))
}

/// `base^exp mod m` for word-sized moduli.
pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m < (1 << 63));
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` by Euler's criterion, for an odd prime `p`.
pub fn legendre_symbol(a: i64, p: u64) -> i32 {
    debug_assert!(p >= 3 && p % 2 == 1);
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let e = pow_mod_u64(r, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    }
}

/// p-adic valuation of a nonzero integer, together with its p-free part.
fn strip_p(x: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0i64;
    let mut cur = x.clone();
    loop {
        let (q, r) = cur.div_rem(&pb);
        if r.is_zero() {
            v += 1;
            cur = q;
        } else {
            return (v, cur);
        }
    }
}

/// p-adic valuation of a rational; `None` for zero.
pub fn rat_valuation(r: &Rat, p: u64) -> Option<i64> {
    if r.numer().is_zero() {
        return None;
    }
    let (vn, _) = strip_p(r.numer(), p);
    let (vd, _) = strip_p(r.denom(), p);
    Some(vn - vd)
}

/// p-adic valuation of an integer; `None` for zero.
pub fn int_valuation(x: &BigInt, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(strip_p(x, p).0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Indistinguishable from 0 modulo `p^abs`.
    Zero { abs: i64 },
    /// `unit * p^val + O(p^(val+rel))`, with `gcd(unit, p) = 1` and `unit < p^rel`.
    Finite { val: i64, unit: BigUint, rel: u32 },
}

/// An element of the p-adic numbers, truncated at finite precision.
#[derive(Debug, Clone)]
pub struct PadicNum {
    prime: u64,
    repr: Repr,
}

fn check_prime(p: u64) -> Result<()> {
    if p < 5 || p.is_multiple_of(2) || p.is_multiple_of(3) {
        return Err(Error::InapplicablePrime {
            prime: p,
            reason: "p-adic ring requires an odd prime with p >= 5 and p != 3",
        });
    }
    Ok(())
}

fn pow_p(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

impl PadicNum {
    /// The zero element, known to vanish modulo `p^abs_precision`.
    pub fn zero(prime: u64, abs_precision: i64) -> Result<Self> {
        check_prime(prime)?;
        Ok(Self {
            prime,
            repr: Repr::Zero { abs: abs_precision },
        })
    }

    /// The unit 1 carrying `rel_precision` significant digits.
    pub fn one(prime: u64, rel_precision: u32) -> Result<Self> {
        check_prime(prime)?;
        assert!(rel_precision >= 1);
        Ok(Self {
            prime,
            repr: Repr::Finite {
                val: 0,
                unit: BigUint::one(),
                rel: rel_precision,
            },
        })
    }

    /// Build `num/den` as a p-adic number with `precision` significant digits.
    ///
    /// The valuation is `v_p(num) - v_p(den)`; negative valuations are legal.
    /// `num = 0` yields the zero element at absolute precision `precision`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prime: u64, precision: u32) -> Result<Self> {
        check_prime(prime)?;
        assert!(precision >= 1, "precision must be positive");
        assert!(!den.is_zero(), "denominator must be nonzero");
        if num.is_zero() {
            return Self::zero(prime, precision as i64);
        }
        let (vn, nn) = strip_p(num, prime);
        let (vd, nd) = strip_p(den, prime);
        let pk = pow_p(prime, precision);
        let den_inv = mod_inverse(&nd, &pk)?;
        let n_mod = nn.mod_floor(&BigInt::from(pk.clone()));
        let unit = (n_mod.to_biguint().expect("mod_floor is nonnegative") * den_inv) % &pk;
        debug_assert!(!unit.is_zero());
        Ok(Self {
            prime,
            repr: Repr::Finite {
                val: vn - vd,
                unit,
                rel: precision,
            },
        })
    }

    pub fn from_integer(x: i64, prime: u64, precision: u32) -> Result<Self> {
        Self::from_ratio(&BigInt::from(x), &BigInt::one(), prime, precision)
    }

    pub fn from_rat(r: &Rat, prime: u64, precision: u32) -> Result<Self> {
        Self::from_ratio(r.numer(), r.denom(), prime, precision)
    }

    /// Wrap a residue known modulo `p^rel` as a unit with valuation 0.
    ///
    /// Used to inject externally computed residues (Bernoulli values known
    /// only mod p, Gamma_p values known mod p^N) at their honest precision.
    pub fn from_unit_residue(unit: &BigUint, prime: u64, rel: u32) -> Result<Self> {
        check_prime(prime)?;
        let pk = pow_p(prime, rel);
        let u = unit % &pk;
        if u.is_zero() {
            return Self::zero(prime, rel as i64);
        }
        let (v, stripped) = strip_p(&BigInt::from(u), prime);
        debug_assert!(v < rel as i64);
        Ok(Self {
            prime,
            repr: Repr::Finite {
                val: v,
                unit: stripped.to_biguint().expect("positive"),
                rel: rel - v as u32,
            },
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `None` for the zero element (valuation +infinity).
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Finite { val, .. } => Some(*val),
        }
    }

    /// Exponent a such that the value is known modulo `p^a`.
    pub fn abs_precision(&self) -> i64 {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Finite { val, rel, .. } => val + *rel as i64,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    /// Unit part modulo `p^rel`; `None` for the zero element.
    pub fn unit(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Finite { unit, .. } => Some(unit),
        }
    }

    fn require_same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch {
                left: self.prime,
                right: other.prime,
            });
        }
        Ok(())
    }

    /// Exact sum at the jointly supported precision.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_same_prime(other)?;
        let p = self.prime;
        match (&self.repr, &other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => Self::zero(p, (*a).min(*b)),
            (Repr::Zero { abs }, Repr::Finite { val, unit, rel })
            | (Repr::Finite { val, unit, rel }, Repr::Zero { abs }) => {
                let m = (*abs).min(val + *rel as i64);
                if *val >= m {
                    return Self::zero(p, m);
                }
                let digits = (m - val) as u32;
                let unit = unit % pow_p(p, digits);
                debug_assert!(!unit.is_zero());
                Ok(Self {
                    prime: p,
                    repr: Repr::Finite {
                        val: *val,
                        unit,
                        rel: digits,
                    },
                })
            }
            (
                Repr::Finite {
                    val: vx,
                    unit: ux,
                    rel: rx,
                },
                Repr::Finite {
                    val: vy,
                    unit: uy,
                    rel: ry,
                },
            ) => {
                let v = (*vx).min(*vy);
                let m = (vx + *rx as i64).min(vy + *ry as i64);
                debug_assert!(v < m);
                let digits = (m - v) as u32;
                let pk = pow_p(p, digits);
                let lift = |val: i64, unit: &BigUint| -> BigUint {
                    let shift = (val - v) as u32;
                    if shift >= digits {
                        BigUint::zero()
                    } else {
                        (unit * pow_p(p, shift)) % &pk
                    }
                };
                let sum = (lift(*vx, ux) + lift(*vy, uy)) % &pk;
                if sum.is_zero() {
                    return Self::zero(p, m);
                }
                let (t, stripped) = strip_p(&BigInt::from(sum), p);
                debug_assert!(t < digits as i64);
                Ok(Self {
                    prime: p,
                    repr: Repr::Finite {
                        val: v + t,
                        unit: stripped.to_biguint().expect("positive"),
                        rel: digits - t as u32,
                    },
                })
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Finite { val, unit, rel } => Self {
                prime: self.prime,
                repr: Repr::Finite {
                    val: *val,
                    unit: pow_p(self.prime, *rel) - unit,
                    rel: *rel,
                },
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Valuations add; units multiply at the smaller relative precision.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_same_prime(other)?;
        let p = self.prime;
        match (&self.repr, &other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => Self::zero(p, a + b),
            (Repr::Zero { abs }, Repr::Finite { val, .. })
            | (Repr::Finite { val, .. }, Repr::Zero { abs }) => Self::zero(p, abs + val),
            (
                Repr::Finite {
                    val: vx,
                    unit: ux,
                    rel: rx,
                },
                Repr::Finite {
                    val: vy,
                    unit: uy,
                    rel: ry,
                },
            ) => {
                let rel = (*rx).min(*ry);
                let unit = (ux * uy) % pow_p(p, rel);
                debug_assert!(!unit.is_zero());
                Ok(Self {
                    prime: p,
                    repr: Repr::Finite {
                        val: vx + vy,
                        unit,
                        rel,
                    },
                })
            }
        }
    }

    /// Multiplicative inverse; the zero element has none.
    pub fn inv(&self) -> Result<Self> {
        match &self.repr {
            Repr::Zero { .. } => Err(Error::DivisionByZero),
            Repr::Finite { val, unit, rel } => {
                let pk = pow_p(self.prime, *rel);
                let inv = mod_inverse(&BigInt::from(unit.clone()), &pk)?;
                Ok(Self {
                    prime: self.prime,
                    repr: Repr::Finite {
                        val: -val,
                        unit: inv,
                        rel: *rel,
                    },
                })
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// Small nonnegative power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = match &self.repr {
            Repr::Finite { rel, .. } => Self::one(self.prime, *rel)?,
            Repr::Zero { .. } => Self::one(self.prime, 1)?,
        };
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiply by the exact power `p^e` (precision is preserved).
    pub fn scale_pow_p(&self, e: i64) -> Self {
        let repr = match &self.repr {
            Repr::Zero { abs } => Repr::Zero { abs: abs + e },
            Repr::Finite { val, unit, rel } => Repr::Finite {
                val: val + e,
                unit: unit.clone(),
                rel: *rel,
            },
        };
        Self {
            prime: self.prime,
            repr,
        }
    }

    /// The value reduced modulo `p^e`, when determined: requires
    /// a nonnegative valuation and absolute precision at least `e`.
    pub fn integer_residue(&self, e: u32) -> Option<BigUint> {
        match &self.repr {
            Repr::Zero { abs } => (*abs >= e as i64).then(BigUint::zero),
            Repr::Finite { val, unit, rel } => {
                if *val < 0 {
                    return None;
                }
                if *val >= e as i64 {
                    return Some(BigUint::zero());
                }
                if val + (*rel as i64) < e as i64 {
                    return None;
                }
                let pe = pow_p(self.prime, e);
                Some((unit * pow_p(self.prime, *val as u32)) % pe)
            }
        }
    }

    /// `v_p(self - other)` capped at `cap`; the cap also stands in for the
    /// valuation of a difference that vanishes at its known precision.
    pub fn diff_valuation(&self, other: &Self, cap: i64) -> Result<i64> {
        let d = self.sub(other)?;
        Ok(match d.repr {
            Repr::Zero { abs } => abs.min(cap),
            Repr::Finite { val, .. } => val.min(cap),
        })
    }
}

/// Equal when both are zero, or the valuations agree and the units are
/// congruent at the smaller relative precision.
impl PartialEq for PadicNum {
    fn eq(&self, other: &Self) -> bool {
        if self.prime != other.prime {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Zero { .. }, Repr::Zero { .. }) => true,
            (
                Repr::Finite {
                    val: vx,
                    unit: ux,
                    rel: rx,
                },
                Repr::Finite {
                    val: vy,
                    unit: uy,
                    rel: ry,
                },
            ) => {
                if vx != vy {
                    return false;
                }
                let pk = pow_p(self.prime, (*rx).min(*ry));
                ux % &pk == uy % &pk
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for PadicNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Zero { abs } => write!(f, "O({}^{})", self.prime, abs),
            Repr::Finite { val, unit, rel } => {
                write!(
                    f,
                    "{}*{}^{} + O({}^{})",
                    unit,
                    self.prime,
                    val,
                    self.prime,
                    val + *rel as i64
                )
            }
        }
    }
}

/// Sign-aware residue of an exact rational modulo `p^e` (denominator must
/// be a unit); used to freeze expected values in reports and tests.
pub fn rat_residue(r: &Rat, p: u64, e: u32) -> Result<BigUint> {
    let pe = pow_p(p, e);
    let den = r.denom();
    let (vd, nd) = if den.is_zero() {
        unreachable!("Rat denominators are nonzero")
    } else {
        strip_p(den, p)
    };
    if vd > 0 {
        return Err(Error::DenominatorNotUnit {
            prime: p,
            denominator: den.clone(),
            index: None,
        });
    }
    let inv = mod_inverse(&nd, &pe)?;
    let num = r.numer().mod_floor(&BigInt::from(pe.clone()));
    Ok((num.to_biguint().expect("nonnegative") * inv) % pe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn n(x: i64, d: i64, p: u64, k: u32) -> PadicNum {
        PadicNum::from_ratio(&BigInt::from(x), &BigInt::from(d), p, k).unwrap()
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse_u64(3, 2401).unwrap(), 1601);
        assert_eq!(mod_inverse_u64(1, 49).unwrap(), 1);
        assert!(matches!(
            mod_inverse_u64(7, 49),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn from_ratio_examples() {
        let x = n(1, 3, 7, 4);
        assert_eq!(x.valuation(), Some(0));
        assert_eq!(x.unit().unwrap(), &BigUint::from(1601u32));

        let z = n(0, 5, 7, 4);
        assert!(z.is_zero());
        assert_eq!(z.abs_precision(), 4);

        let y = n(14, 3, 7, 4);
        assert_eq!(y.valuation(), Some(1));
        assert_eq!(y.unit().unwrap(), &BigUint::from(801u32));
    }

    #[test]
    fn negative_valuation_is_legal() {
        let x = n(1, 49, 7, 4);
        assert_eq!(x.valuation(), Some(-2));
        assert_eq!(x.unit().unwrap(), &BigUint::from(1u32));
        assert!(x.integer_residue(2).is_none());
    }

    #[test]
    fn rejects_p_two_and_three() {
        for p in [2u64, 3] {
            assert!(matches!(
                PadicNum::from_integer(1, p, 4),
                Err(Error::InapplicablePrime { .. })
            ));
        }
    }

    #[test]
    fn add_examples() {
        let x = n(1, 3, 7, 4);
        let z = PadicNum::zero(7, 4).unwrap();
        assert_eq!(x.add(&z).unwrap(), x);

        let sum = n(1, 3, 7, 4).add(&n(2, 3, 7, 4)).unwrap();
        assert_eq!(sum.valuation(), Some(0));
        assert_eq!(sum.unit().unwrap(), &BigUint::one());

        // full cancellation: 1 + (p^4 - 1) vanishes at precision 4
        let a = PadicNum::one(7, 4).unwrap();
        let b = n(2400, 1, 7, 4);
        let s = a.add(&b).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.abs_precision(), 4);
    }

    #[test]
    fn add_tracks_joint_precision() {
        // v=0 at rel 4 (abs 4) plus v=2 at rel 2 (abs 4): result abs 4
        let x = n(1, 1, 5, 4);
        let y = n(25, 1, 5, 2);
        let s = x.add(&y).unwrap();
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.abs_precision(), 4);
        assert_eq!(s.integer_residue(4).unwrap(), BigUint::from(26u32));
    }

    #[test]
    fn mul_examples() {
        let x = n(2 * 5, 1, 5, 4); // v=1, u=2
        let y = n(3 * 25, 1, 5, 4); // v=2, u=3
        let m = x.mul(&y).unwrap();
        assert_eq!(m.valuation(), Some(3));
        assert_eq!(m.unit().unwrap(), &BigUint::from(6u32));

        let one = PadicNum::one(7, 4).unwrap();
        let t = n(1, 3, 7, 4);
        assert_eq!(t.mul(&one).unwrap(), t);
        let three = n(3, 1, 7, 4);
        assert_eq!(t.mul(&three).unwrap(), one);
    }

    #[test]
    fn inv_examples() {
        let t = n(1, 3, 7, 4);
        let i = t.inv().unwrap();
        assert_eq!(i.valuation(), Some(0));
        assert_eq!(i.unit().unwrap(), &BigUint::from(3u32));
        let one = PadicNum::one(7, 4).unwrap();
        assert_eq!(one.inv().unwrap(), one);
        assert!(matches!(
            PadicNum::zero(7, 4).unwrap().inv(),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(t.mul(&i).unwrap(), one);
    }

    #[test]
    fn prime_mismatch() {
        let x = n(1, 1, 5, 4);
        let y = n(1, 1, 7, 4);
        assert!(matches!(x.add(&y), Err(Error::PrimeMismatch { .. })));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(-3, 7), 1);
        assert_eq!(legendre_symbol(-3, 5), -1);
        assert_eq!(legendre_symbol(14, 7), 0);
    }

    #[test]
    fn legendre_minus_three_tracks_mod_three_class() {
        // classical: (-3/p) = 1 iff p = 1 (mod 3)
        for p in crate::primes::primes_in(5, 10_000) {
            let expect = if p % 3 == 1 { 1 } else { -1 };
            assert_eq!(legendre_symbol(-3, p), expect, "p = {p}");
        }
    }

    #[test]
    fn residue_of_rational() {
        assert_eq!(
            rat_residue(&rat(364, 297), 7, 4).unwrap(),
            BigUint::from(1036u32)
        );
        assert_eq!(
            rat_residue(&rat(-305, 189), 5, 4).unwrap(),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn round_trip_small() {
        let p = 7u64;
        let k = 6u32;
        for num in -40i64..=40 {
            for den in 1i64..=12 {
                if den % p as i64 == 0 || num == 0 {
                    continue;
                }
                let x = n(num, den, p, k);
                if x.valuation().unwrap() < 0 {
                    continue;
                }
                let back = x.integer_residue(k).unwrap();
                let expect = rat_residue(&rat(num, den), p, k).unwrap();
                assert_eq!(back, expect, "{num}/{den}");
            }
        }
    }
}
