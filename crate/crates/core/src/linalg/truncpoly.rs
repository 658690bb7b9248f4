//! Polynomials over `F_p` truncated at `t^N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{mod_add, mod_mul, mod_sub, FieldElem};
use crate::error::{Error, Result};

/// An element of `F_p[t]/(t^N)`, coefficients in increasing degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncPoly {
    coeffs: Vec<u64>,
    p: u64,
}

impl TruncPoly {
    pub fn zero(n: usize, p: u64) -> Self {
        assert!(n > 0, "truncation order must be positive");
        TruncPoly {
            coeffs: vec![0; n],
            p,
        }
    }

    pub fn one(n: usize, p: u64) -> Self {
        let mut x = TruncPoly::zero(n, p);
        x.coeffs[0] = 1 % p;
        x
    }

    /// The monomial `c * t^e`, zero when `e >= n`.
    pub fn monomial(c: u64, e: usize, n: usize, p: u64) -> Self {
        let mut x = TruncPoly::zero(n, p);
        if e < n {
            x.coeffs[e] = c % p;
        }
        x
    }

    /// Coefficients beyond `n` are discarded.
    pub fn from_coeffs(coeffs: &[u64], n: usize, p: u64) -> Self {
        let mut x = TruncPoly::zero(n, p);
        for (slot, &c) in x.coeffs.iter_mut().zip(coeffs) {
            *slot = c % p;
        }
        x
    }

    pub fn from_elems(coeffs: &[FieldElem], n: usize) -> Result<Self> {
        let p = coeffs
            .first()
            .map(|c| c.modulus())
            .ok_or_else(|| Error::ShapeMismatch("no coefficients".into()))?;
        if let Some(bad) = coeffs.iter().find(|c| c.modulus() != p) {
            return Err(Error::ModulusMismatch(p, bad.modulus()));
        }
        let residues: Vec<u64> = coeffs.iter().map(|c| c.residue()).collect();
        Ok(TruncPoly::from_coeffs(&residues, n, p))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> u64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Image under `t -> 0`.
    pub fn constant_term(&self) -> FieldElem {
        FieldElem::from_residue(self.coeffs[0], self.p)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn checked_mul(&self, rhs: &TruncPoly) -> Result<TruncPoly> {
        self.compatible(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_add(&self, rhs: &TruncPoly) -> Result<TruncPoly> {
        self.compatible(rhs)?;
        Ok(self + rhs)
    }

    fn compatible(&self, rhs: &TruncPoly) -> Result<()> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p, rhs.p));
        }
        if self.order() != rhs.order() {
            return Err(Error::ShapeMismatch(format!(
                "truncation orders {} and {}",
                self.order(),
                rhs.order()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{e}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " (mod {}, t^{})", self.p, self.order())
    }
}

impl Add for &TruncPoly {
    type Output = TruncPoly;
    fn add(self, rhs: &TruncPoly) -> TruncPoly {
        self.compatible(rhs).expect("incompatible truncated polynomials");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| mod_add(a, b, self.p))
            .collect();
        TruncPoly { coeffs, p: self.p }
    }
}

impl Sub for &TruncPoly {
    type Output = TruncPoly;
    fn sub(self, rhs: &TruncPoly) -> TruncPoly {
        self.compatible(rhs).expect("incompatible truncated polynomials");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| mod_sub(a, b, self.p))
            .collect();
        TruncPoly { coeffs, p: self.p }
    }
}

impl Neg for &TruncPoly {
    type Output = TruncPoly;
    fn neg(self) -> TruncPoly {
        let coeffs = self.coeffs.iter().map(|&a| mod_sub(0, a, self.p)).collect();
        TruncPoly { coeffs, p: self.p }
    }
}

impl Mul for &TruncPoly {
    type Output = TruncPoly;
    fn mul(self, rhs: &TruncPoly) -> TruncPoly {
        self.compatible(rhs).expect("incompatible truncated polynomials");
        let n = self.order();
        let p = self.p;
        let mut out = vec![0u64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] = mod_add(out[i + j], mod_mul(a, b, p), p);
            }
        }
        TruncPoly { coeffs: out, p }
    }
}
