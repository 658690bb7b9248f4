//! Bounded cochain complexes of modules and chain maps between them.
//!
//! The differential `d^n: X^n -> X^{n+1}` is a `dim X^n x dim X^{n+1}`
//! matrix acting on row vectors, so `d^n d^{n+1} = 0` as a matrix product.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::homotopy::chain_map_basis;
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::module::{combine, is_module_map, same_algebra, Module};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    algebra: Arc<Algebra>,
    low: i64,
    terms: Vec<Module>,
    diffs: Vec<Matrix>,
    zero: Module,
}

fn sign(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

impl Complex {
    /// Terms in degrees `low, low+1, ...`; `diffs[k]` goes from `terms[k]`
    /// to `terms[k+1]`.
    pub fn new(algebra: Arc<Algebra>, low: i64, terms: Vec<Module>, diffs: Vec<Matrix>) -> Result<Self> {
        let c = Complex::unchecked(algebra, low, terms, diffs)?;
        c.verify()?;
        Ok(c)
    }

    pub(crate) fn unchecked(
        algebra: Arc<Algebra>,
        low: i64,
        terms: Vec<Module>,
        diffs: Vec<Matrix>,
    ) -> Result<Self> {
        if diffs.len() != terms.len().saturating_sub(1) {
            return Err(Error::NotAComplex(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for t in &terms {
            if !same_algebra(&algebra, t.algebra()) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let zero = Module::zero(algebra.clone());
        Ok(Complex {
            algebra,
            low,
            terms,
            diffs,
            zero,
        })
    }

    /// Checks that differentials are module maps and square to zero.
    pub fn verify(&self) -> Result<()> {
        for (k, d) in self.diffs.iter().enumerate() {
            let n = self.low + k as i64;
            if !is_module_map(&self.terms[k], &self.terms[k + 1], d) {
                return Err(Error::NotAComplex(format!("d^{n} is not a module map")));
            }
            if k + 1 < self.diffs.len() && !(d * &self.diffs[k + 1]).is_zero() {
                return Err(Error::NotAComplex(format!("d^{} d^{n} != 0", n + 1)));
            }
        }
        Ok(())
    }

    /// A module concentrated in one degree.
    pub fn stalk(m: Module, degree: i64) -> Self {
        let algebra = m.algebra().clone();
        Complex::unchecked(algebra, degree, vec![m], Vec::new()).expect("stalk complex")
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        Complex::unchecked(algebra, 0, Vec::new(), Vec::new()).expect("zero complex")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Lowest degree with a stored term.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest degree with a stored term (below `low` when empty).
    pub fn high(&self) -> i64 {
        self.low + self.terms.len() as i64 - 1
    }

    pub fn term(&self, n: i64) -> &Module {
        if n < self.low || n > self.high() {
            return &self.zero;
        }
        &self.terms[(n - self.low) as usize]
    }

    pub fn terms(&self) -> &[Module] {
        &self.terms
    }

    pub fn dim(&self, n: i64) -> usize {
        self.term(n).dim()
    }

    /// `d^n`, a zero matrix of the right shape outside the stored range.
    pub fn diff(&self, n: i64) -> Matrix {
        if n >= self.low && n < self.high() {
            return self.diffs[(n - self.low) as usize].clone();
        }
        Matrix::zeros(self.dim(n), self.dim(n + 1), self.algebra.modulus())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// Every term is a tagged sum of indecomposable projectives.
    pub fn has_projective_terms(&self) -> bool {
        self.terms.iter().all(|t| t.is_tagged_projective())
    }

    /// `X[n]^k = X^{k+n}` with differential multiplied by `(-1)^n`.
    pub fn shift(&self, n: i64) -> Complex {
        let diffs = if sign(n) {
            self.diffs.iter().map(|d| d.neg()).collect()
        } else {
            self.diffs.clone()
        };
        Complex {
            algebra: self.algebra.clone(),
            low: self.low - n,
            terms: self.terms.clone(),
            diffs,
            zero: self.zero.clone(),
        }
    }

    /// Termwise twist by an automorphism; differentials are unchanged.
    pub fn twist(&self, sigma: &AlgebraMorphism) -> Result<Complex> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.twist(sigma))
            .collect::<Result<Vec<_>>>()?;
        Complex::unchecked(self.algebra.clone(), self.low, terms, self.diffs.clone())
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.low..=self.high())
            .map(|n| if sign(n) { -(self.dim(n) as i64) } else { self.dim(n) as i64 })
            .sum()
    }

    fn diff_rank(&self, n: i64) -> usize {
        if n >= self.low && n < self.high() {
            self.diffs[(n - self.low) as usize].rank()
        } else {
            0
        }
    }

    pub fn homology_dim(&self, n: i64) -> usize {
        self.dim(n) - self.diff_rank(n) - self.diff_rank(n - 1)
    }

    pub fn homology_dims(&self) -> Vec<(i64, usize)> {
        (self.low..=self.high()).map(|n| (n, self.homology_dim(n))).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        (self.low..=self.high()).all(|n| self.homology_dim(n) == 0)
    }

    /// `H^n(X)` as a subquotient module.
    pub fn homology(&self, n: i64) -> Result<Module> {
        let x = self.term(n);
        let (z, zincl) = x.kernel_of(&self.diff(n))?;
        let boundary = self.diff(n - 1).row_space_basis();
        if boundary.rows() == 0 {
            return Ok(z);
        }
        let in_z = Matrix::solve_left(&zincl, &boundary)
            .map_err(|_| Error::NotAComplex(format!("image of d^{} not in ker d^{n}", n - 1)))?;
        Ok(z.quotient(&in_z)?.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    low: i64,
    comps: Vec<Matrix>,
}

impl ChainMap {
    /// Components `comps[k]: X^{low+k} -> Y^{low+k}`; missing degrees are zero.
    pub fn new(source: Complex, target: Complex, low: i64, comps: Vec<Matrix>) -> Result<Self> {
        let f = ChainMap {
            source,
            target,
            low,
            comps,
        };
        f.verify()?;
        Ok(f)
    }

    pub(crate) fn unchecked(source: Complex, target: Complex, low: i64, comps: Vec<Matrix>) -> Self {
        ChainMap {
            source,
            target,
            low,
            comps,
        }
    }

    pub fn verify(&self) -> Result<()> {
        if !same_algebra(self.source.algebra(), self.target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        for (k, c) in self.comps.iter().enumerate() {
            let n = self.low + k as i64;
            let (x, y) = (self.source.term(n), self.target.term(n));
            if c.rows() != x.dim() || c.cols() != y.dim() {
                return Err(Error::NotAChainMap(format!("component {n} has the wrong shape")));
            }
            if !is_module_map(x, y, c) {
                return Err(Error::NotAChainMap(format!("component {n} is not a module map")));
            }
        }
        let lo = self.source.low().min(self.target.low()) - 1;
        let hi = self.source.high().max(self.target.high()) + 1;
        for n in lo..=hi {
            let left = &self.source.diff(n) * &self.component(n + 1);
            let right = &self.component(n) * &self.target.diff(n);
            if left != right {
                return Err(Error::NotAChainMap(format!("square at degree {n} does not commute")));
            }
        }
        Ok(())
    }

    pub fn identity(x: &Complex) -> Self {
        let p = x.algebra().modulus();
        let comps = (x.low()..=x.high()).map(|n| Matrix::identity(x.dim(n), p)).collect();
        ChainMap::unchecked(x.clone(), x.clone(), x.low(), comps)
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component(&self, n: i64) -> Matrix {
        let k = n - self.low;
        if k >= 0 && (k as usize) < self.comps.len() {
            return self.comps[k as usize].clone();
        }
        Matrix::zeros(self.source.dim(n), self.target.dim(n), self.source.algebra().modulus())
    }

    /// `f[n]`: same components, reindexed.
    pub fn shift(&self, n: i64) -> ChainMap {
        ChainMap::unchecked(self.source.shift(n), self.target.shift(n), self.low - n, self.comps.clone())
    }

    pub fn twist(&self, sigma: &AlgebraMorphism) -> Result<ChainMap> {
        Ok(ChainMap::unchecked(
            self.source.twist(sigma)?,
            self.target.twist(sigma)?,
            self.low,
            self.comps.clone(),
        ))
    }

    pub fn is_quasi_iso(&self) -> Result<bool> {
        Ok(cone(self)?.is_acyclic())
    }
}

/// The mapping cone of `f: X -> Y`, with `cone^n = X^{n+1} + Y^n`.
///
/// In column form the differential is `[[-d_X[1], 0], [f, d_Y]]`; acting on
/// row vectors `(x, y)` it is `(x, y) -> (-x d_X, x f + y d_Y)`.
pub fn cone(f: &ChainMap) -> Result<Complex> {
    let (x, y) = (f.source(), f.target());
    let algebra = x.algebra().clone();
    let p = algebra.modulus();
    let low = (x.low() - 1).min(y.low());
    let high = (x.high() - 1).max(y.high());
    if high < low {
        return Ok(Complex::zero(algebra));
    }
    let mut terms = Vec::new();
    for n in low..=high {
        terms.push(Module::direct_sum(&algebra, &[x.term(n + 1).clone(), y.term(n).clone()])?);
    }
    let mut diffs = Vec::new();
    for n in low..high {
        let (xa, ya) = (x.dim(n + 1), y.dim(n));
        let (xb, yb) = (x.dim(n + 2), y.dim(n + 1));
        let mut d = Matrix::zeros(xa + ya, xb + yb, p);
        d.paste(0, 0, &x.diff(n + 1).neg());
        d.paste(0, xb, &f.component(n + 1));
        d.paste(xa, xb, &y.diff(n));
        diffs.push(d);
    }
    Complex::new(algebra, low, terms, diffs)
}

/// Searches random combinations of chain maps `model -> target` for a
/// quasi-isomorphism.
pub fn find_quasi_iso(model: &Complex, target: &Complex, seed: u64) -> Result<ChainMap> {
    let basis = chain_map_basis(model, target)?;
    if basis.is_empty() {
        return Err(Error::VerificationFailed("no chain maps between the complexes".into()));
    }
    let p = model.algebra().modulus();
    let lo = model.low().min(target.low());
    let hi = model.high().max(target.high());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..32 {
        let coeffs: Vec<u64> = if basis.len() == 1 && trial == 0 {
            vec![1]
        } else {
            (0..basis.len()).map(|_| rng.gen_range(0..p)).collect()
        };
        let comps = (lo..=hi)
            .map(|n| {
                let mats: Vec<Matrix> = basis.iter().map(|f| f.component(n)).collect();
                combine(&mats, &coeffs, model.dim(n), target.dim(n), p)
            })
            .collect();
        let f = ChainMap::unchecked(model.clone(), target.clone(), lo, comps);
        if f.is_quasi_iso()? {
            return Ok(f);
        }
    }
    Err(Error::VerificationFailed("no quasi-isomorphism found".into()))
}
