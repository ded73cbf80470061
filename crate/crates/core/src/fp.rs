//! Prime-field elements with a runtime modulus.
//!
//! A modulus of 0 marks a wildcard constant: `Fp::zero()` and `Fp::one()`
//! carry no modulus and adopt the modulus of whatever they are combined with.
//! Mixing two different nonzero moduli panics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::scalar::{parse_ratio, Scalar, ScalarError};

/// 2^61 - 1, the default modulus for identity tests.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

#[derive(Clone, Copy)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        Fp {
            value: (value as i128).rem_euclid(modulus as i128) as u64,
            modulus,
        }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, modulus: u64) -> Self {
        Fp {
            value: rng.gen_range(0..modulus),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn centered(&self) -> i64 {
        if self.modulus != 0 && self.value > self.modulus / 2 {
            -((self.modulus - self.value) as i64)
        } else {
            self.value as i64
        }
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, m) | (m, 0) => m,
            (m, n) if m == n => m,
            (m, n) => panic!("mixing moduli {m} and {n}"),
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let m = self.modulus;
        let mut base = *self;
        let mut acc = Fp { value: 1, modulus: m };
        if m == 1 {
            acc.value = 0;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Legendre symbol style test; zero counts as a square.
    pub fn is_square(&self) -> bool {
        let p = self.modulus;
        self.value == 0 || p == 2 || self.pow((p - 1) / 2).value == 1
    }

    /// A square root by Tonelli-Shanks, if one exists.
    pub fn sqrt(&self) -> Option<Fp> {
        let p = self.modulus;
        if self.value == 0 || p == 2 {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::from_u64(2, p);
        while z.is_square() {
            z = z + Fp::from_u64(1, p);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }

    /// All `k`-th roots in the prime field, by exhaustive search for small
    /// `p` and by exponentiation when `gcd(k, p - 1) = 1`.
    pub fn roots(&self, k: u64) -> Vec<Fp> {
        let p = self.modulus;
        if self.value == 0 {
            return vec![*self];
        }
        if (p - 1).gcd(&k) == 1 {
            let inv = mod_inverse(k % (p - 1), p - 1).expect("coprime");
            return vec![self.pow(inv)];
        }
        assert!(p <= 1 << 20, "root search needs a small prime");
        (1..p)
            .map(|v| Fp::from_u64(v, p))
            .filter(|r| r.pow(k) == *self)
            .collect()
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && (self.modulus == other.modulus || self.modulus == 0 || other.modulus == 0)
    }
}

impl Eq for Fp {}

impl Hash for Fp {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { value: 0, modulus: 0 }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { value: 1, modulus: 0 }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            return Fp {
                value: self.value + rhs.value,
                modulus: 0,
            };
        }
        let s = self.value as u128 + rhs.value as u128;
        Fp {
            value: (s % m as u128) as u64,
            modulus: m,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        match (self.value, self.modulus) {
            (0, m) => Fp { value: 0, modulus: m },
            (_, 0) => panic!("negating an unbound constant"),
            (v, m) => Fp {
                value: m - v,
                modulus: m,
            },
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            assert!(self.value >= rhs.value, "negative unbound constant");
            return Fp {
                value: self.value - rhs.value,
                modulus: 0,
            };
        }
        let a = Fp::from_u64(self.value, m);
        let b = Fp::from_u64(rhs.value, m);
        a + (-b)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = Fp::join(self.modulus, rhs.modulus);
        if m == 0 {
            return Fp {
                value: self.value * rhs.value,
                modulus: 0,
            };
        }
        Fp {
            value: ((self.value as u128 * rhs.value as u128) % m as u128) as u64,
            modulus: m,
        }
    }
}

impl<'a> AddAssign<&'a Fp> for Fp {
    fn add_assign(&mut self, rhs: &'a Fp) {
        *self = *self + *rhs;
    }
}

impl<'a> SubAssign<&'a Fp> for Fp {
    fn sub_assign(&mut self, rhs: &'a Fp) {
        *self = *self - *rhs;
    }
}

impl<'a> MulAssign<&'a Fp> for Fp {
    fn mul_assign(&mut self, rhs: &'a Fp) {
        *self = *self * *rhs;
    }
}

impl Scalar for Fp {
    type Domain = u64;

    fn domain(&self) -> u64 {
        self.modulus
    }

    fn join_domains(a: &u64, b: &u64) -> Result<u64, ScalarError> {
        match (*a, *b) {
            (0, m) | (m, 0) => Ok(m),
            (m, n) if m == n => Ok(m),
            (m, n) => Err(ScalarError::DomainMismatch(format!("F_{m}"), format!("F_{n}"))),
        }
    }

    fn from_i64_in(p: &u64, v: i64) -> Self {
        if *p == 0 {
            assert!(v >= 0, "negative unbound constant");
            return Fp {
                value: v as u64,
                modulus: 0,
            };
        }
        Fp {
            value: (v as i128).rem_euclid(*p as i128) as u64,
            modulus: *p,
        }
    }

    fn from_ratio_in(p: &u64, num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        let pm = BigInt::from(*p);
        let reduce = |x: &BigInt| x.mod_floor(&pm).to_u64().expect("reduced below p");
        let n = Fp::from_u64(reduce(num), *p);
        let d = Fp::from_u64(reduce(den), *p);
        let di = d.inv().ok_or_else(|| ScalarError::NotInvertible(den.to_string()))?;
        Ok(n * di)
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        assert!(self.modulus != 0, "inverting an unbound constant");
        mod_inverse(self.value, self.modulus).map(|v| Fp {
            value: v,
            modulus: self.modulus,
        })
    }

    fn to_coeff_string(&self) -> String {
        self.value.to_string()
    }

    fn parse_coeff(p: &u64, s: &str) -> Result<Self, ScalarError> {
        let (n, d) = parse_ratio(s)?;
        Fp::from_ratio_in(p, &n, &d)
    }

    fn pow_u64(&self, e: u64) -> Self {
        self.pow(e)
    }
}

/// Image of a rational polynomial in F_p[vars]; fails when p divides a
/// denominator.
pub fn reduce_mod(poly: &crate::QPoly, p: u64) -> Result<crate::FpPoly, ScalarError> {
    for (_, c) in poly.terms() {
        Fp::from_ratio_in(&p, &c.numer(), &c.denom())?;
    }
    Ok(poly.map_coeffs(&p, |c| {
        Fp::from_ratio_in(&p, &c.numer(), &c.denom()).expect("checked above")
    }))
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wildcard_constants_adopt_modulus() {
        let a = Fp::new(5, 7);
        assert_eq!(a + Fp::one(), Fp::new(6, 7));
        assert_eq!((a * Fp::zero()).modulus(), 7);
        assert_eq!(Fp::one() - a, Fp::new(3, 7));
    }

    #[test]
    fn inverse_and_sqrt() {
        let p = 101;
        for v in 1..p {
            let x = Fp::from_u64(v, p);
            assert_eq!(x * x.inv().unwrap(), Fp::from_u64(1, p));
            let sq = x * x;
            let r = sq.sqrt().unwrap();
            assert_eq!(r * r, sq);
        }
        let big = Fp::new(-3, MERSENNE_61);
        assert_eq!(big.value(), MERSENNE_61 - 3);
        assert_eq!(big * big.inv().unwrap(), Fp::from_u64(1, MERSENNE_61));
    }

    #[test]
    fn primality() {
        assert!(is_prime(101));
        assert!(is_prime(MERSENNE_61));
        assert!(!is_prime(MERSENNE_61 - 2));
        assert!(!is_prime(1));
    }

    #[test]
    fn fifth_roots() {
        // 5 divides 100, so 32 has five fifth roots mod 101 but only one mod 103
        let x = Fp::from_u64(32, 101);
        let rs = x.roots(5);
        assert!(rs.contains(&Fp::from_u64(2, 101)));
        assert!(rs.iter().all(|r| r.pow(5) == x));
        let y = Fp::from_u64(32, 103);
        assert_eq!(y.roots(5), vec![Fp::from_u64(2, 103)]);
    }

    #[test]
    fn ratio_parsing() {
        let h = Fp::parse_coeff(&101, "1/2").unwrap();
        assert_eq!(h * Fp::from_u64(2, 101), Fp::from_u64(1, 101));
        assert!(Fp::parse_coeff(&101, "1/101").is_err());
    }
}
