//! Minimal projective resolutions over graded algebras.

use super::complex::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::Module;

/// `... -> P_1 -> P_0 -> M -> 0` with each `P_n` a projective cover of the
/// previous kernel. `maps[0]` is the augmentation `P_0 -> M` and
/// `maps[n]` is `d_n: P_n -> P_{n-1}` for `n >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolution {
    module: Module,
    terms: Vec<Module>,
    maps: Vec<Matrix>,
    kernel_dims: Vec<usize>,
    complete: bool,
}

/// Resolves `m` up to homological degree `depth`.
///
/// Kernels are stored in a canonical basis (reduced row echelon form per
/// vertex) and covers use canonical generators, so equal kernels yield
/// literally equal differentials.
pub fn minimal_projective_resolution(m: &Module, depth: usize) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut kernel_dims = Vec::new();
    let mut current = m.clone();
    // inclusion of the current kernel into the previous term (identity for M)
    let mut incl = Matrix::identity(m.dim(), m.modulus());
    let mut complete = m.is_zero();
    for _ in 0..=depth {
        if current.is_zero() {
            complete = true;
            break;
        }
        let (cover, pi) = current.projective_cover()?;
        maps.push(&pi * &incl);
        let (kernel, kincl) = cover.kernel_of(&pi)?;
        kernel_dims.push(kernel.dim());
        terms.push(cover);
        current = kernel;
        incl = kincl;
    }
    if current.is_zero() {
        complete = true;
    }
    Ok(Resolution {
        module: m.clone(),
        terms,
        maps,
        kernel_dims,
        complete,
    })
}

impl Resolution {
    pub fn module(&self) -> &Module {
        &self.module
    }

    /// Number of computed projective terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the resolution ended because a kernel vanished.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `P_n`, or `None` past the computed range.
    pub fn term(&self, n: usize) -> Option<&Module> {
        self.terms.get(n)
    }

    pub fn terms(&self) -> &[Module] {
        &self.terms
    }

    /// `d_n: P_n -> P_{n-1}` for `n >= 1`.
    pub fn differential(&self, n: usize) -> Option<&Matrix> {
        if n == 0 {
            None
        } else {
            self.maps.get(n)
        }
    }

    pub fn augmentation(&self) -> Option<&Matrix> {
        self.maps.first()
    }

    /// Dimensions of `ker(P_n -> ...)` for each computed `n`.
    pub fn kernel_dims(&self) -> &[usize] {
        &self.kernel_dims
    }

    /// Vertex tags (0-based) of each term.
    pub fn term_vertices(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| t.projective_summands().unwrap_or(&[]).to_vec())
            .collect()
    }

    /// Can `P_n` and the map out of it be trusted for degree `n` computations?
    pub(crate) fn require(&self, n: usize) -> Result<()> {
        if self.complete || n < self.terms.len() {
            Ok(())
        } else {
            Err(Error::InsufficientDepth {
                needed: n,
                available: self.terms.len().saturating_sub(1),
            })
        }
    }

    /// `P_k -> ... -> P_0` in degrees `-k..0` (all computed terms when `k` exceeds the length).
    pub fn truncation(&self, k: usize) -> Result<Complex> {
        let top = k.min(self.terms.len().saturating_sub(1));
        if self.terms.is_empty() {
            return Ok(Complex::zero(self.module.algebra().clone()));
        }
        let terms: Vec<Module> = (0..=top).rev().map(|n| self.terms[n].clone()).collect();
        let diffs: Vec<Matrix> = (1..=top).rev().map(|n| self.maps[n].clone()).collect();
        Complex::new(self.module.algebra().clone(), -(top as i64), terms, diffs)
    }

    /// The chain map from the truncation at `k` to `M` in degree 0.
    pub fn augmentation_map(&self, k: usize) -> Result<ChainMap> {
        let x = self.truncation(k)?;
        let target = Complex::stalk(self.module.clone(), 0);
        let aug = self
            .augmentation()
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(0, self.module.dim(), self.module.modulus()));
        ChainMap::new(x, target, 0, vec![aug])
    }

    /// Smallest `q > 0` such that terms and differentials satisfy
    /// `P_{n+q} = P_n` and `d_{n+q} = d_n` for all `n >= 1` in range.
    /// `None` for a finite resolution or when no period with `2q <= depth` fits.
    pub fn detect_periodicity(&self) -> Result<Option<usize>> {
        if self.complete {
            return Ok(None);
        }
        let last = self.terms.len() - 1;
        if last < 2 {
            return Err(Error::InsufficientDepth {
                needed: 2,
                available: last,
            });
        }
        // a full period must repeat at least once after degree 1
        for q in 1..=last / 2 {
            let periodic = (1..=last - q).all(|n| {
                self.terms[n + q] == self.terms[n] && self.maps[n + q] == self.maps[n]
            });
            if periodic {
                return Ok(Some(q));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_cyclic_nakayama;

    #[test]
    fn projective_resolves_in_one_step() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let p = Module::projective(&a, 2).unwrap();
        let res = minimal_projective_resolution(&p, 4).unwrap();
        assert_eq!(res.len(), 1);
        assert!(res.is_complete());
        assert_eq!(res.detect_periodicity().unwrap(), None);
    }

    #[test]
    fn simple_over_lambda_two_alternates() {
        let a = build_cyclic_nakayama(2, 101).unwrap().algebra().clone();
        let s = Module::simple(&a, 1).unwrap();
        let res = minimal_projective_resolution(&s, 4).unwrap();
        assert_eq!(res.term_vertices(), vec![vec![0], vec![1], vec![0], vec![1], vec![0]]);
        assert_eq!(res.detect_periodicity().unwrap(), Some(2));
    }

    #[test]
    fn kernel_dimensions_alternate() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s = Module::simple(&a, 1).unwrap();
        let res = minimal_projective_resolution(&s, 5).unwrap();
        assert_eq!(res.kernel_dims(), &[2, 1, 2, 1, 2, 1]);
        let x = res.truncation(5).unwrap();
        assert_eq!(x.homology_dim(0), 1);
        assert!((-4..0).all(|n| x.homology_dim(n) == 0));
        assert!(res.augmentation_map(5).unwrap().verify().is_ok());
    }
}
