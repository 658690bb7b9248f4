//! Prime field arithmetic.
//!
//! Residues are stored as `u64` with a modulus below 2^32, so a product of two
//! residues always fits in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Default prime used when a caller does not care about the characteristic.
pub const DEFAULT_PRIME: u64 = 10007;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks that `p` is a prime usable as a matrix modulus.
pub fn check_modulus(p: u64) -> Result<()> {
    if !is_prime(p) || p >= MAX_MODULUS {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

#[inline]
pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub fn mod_inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    mod_pow(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce_signed(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group of `F_p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("a prime field always has a primitive root")
}

/// An element of `F_p` that carries its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElem {
    residue: u64,
    modulus: u64,
}

impl FieldElem {
    pub fn new(value: i64, modulus: u64) -> Self {
        FieldElem {
            residue: reduce_signed(value, modulus),
            modulus,
        }
    }

    pub fn from_residue(residue: u64, modulus: u64) -> Self {
        FieldElem {
            residue: residue % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        FieldElem { residue: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        FieldElem {
            residue: 1 % modulus,
            modulus,
        }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        FieldElem {
            residue: mod_pow(self.residue, exp, self.modulus),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FieldElem {
                residue: mod_inv(self.residue, self.modulus),
                modulus: self.modulus,
            })
        }
    }

    /// Checked combination; fails if the moduli differ.
    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    fn same_field(self, rhs: Self) -> Result<()> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(self.modulus, rhs.modulus));
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

// The unchecked operators panic on mixed moduli; use the `checked_*` methods
// when the operands come from untrusted input.
impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FieldElem {
            residue: mod_add(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FieldElem {
            residue: mod_sub(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FieldElem {
            residue: mod_mul(self.residue, rhs.residue, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> Self {
        FieldElem {
            residue: mod_sub(0, self.residue, self.modulus),
            modulus: self.modulus,
        }
    }
}
