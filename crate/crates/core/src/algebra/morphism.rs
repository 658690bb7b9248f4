//! Linear maps between algebras and their verification.

use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A linear map given by its matrix in the row convention: row `a` holds
/// the image of basis element `a` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

/// Outcome of [`AlgebraMorphism::verify_isomorphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoWitness {
    /// The map is an isomorphism with this inverse.
    Inverse(Matrix),
    NotUnital,
    /// `f(x_a x_b) != f(x_a) f(x_b)`.
    NotMultiplicative(usize, usize),
    Singular,
}

impl IsoWitness {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoWitness::Inverse(_))
    }
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if source.modulus() != target.modulus() || matrix.modulus() != source.modulus() {
            return Err(Error::ModulusMismatch(source.modulus(), target.modulus()));
        }
        Ok(AlgebraMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let m = Matrix::identity(a.dim(), a.modulus());
        AlgebraMorphism {
            source: a.clone(),
            target: a,
            matrix: m,
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, x: &[u64]) -> Vec<u64> {
        self.matrix.apply_row(x)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if self.target.as_ref() != next.source.as_ref() {
            return Err(Error::AlgebraMismatch);
        }
        AlgebraMorphism::new(
            self.source.clone(),
            next.target.clone(),
            self.matrix.try_mul(&next.matrix)?,
        )
    }

    /// `self` composed with itself `k` times; requires source = target.
    pub fn power(&self, k: usize) -> Result<AlgebraMorphism> {
        let mut acc = AlgebraMorphism::identity(self.source.clone());
        for _ in 0..k {
            acc = acc.then(self)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix == Matrix::identity(self.source.dim(), self.matrix.modulus())
    }

    pub fn is_unital(&self) -> bool {
        self.image(self.source.one()) == self.target.one()
    }

    /// First basis pair on which multiplicativity fails.
    pub fn first_nonmultiplicative_pair(&self) -> Option<(usize, usize)> {
        let s = &self.source;
        let images: Vec<Vec<u64>> = (0..s.dim()).map(|a| self.matrix.row_vec(a)).collect();
        for a in 0..s.dim() {
            for b in 0..s.dim() {
                let mut lhs = vec![0u64; s.dim()];
                for &(c, v) in s.mul_basis(a, b) {
                    lhs[c] = v;
                }
                if self.image(&lhs) != self.target.mul(&images[a], &images[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn verify_isomorphism(&self) -> Result<IsoWitness> {
        if self.source.dim() != self.target.dim() {
            return Err(Error::DimensionMismatch {
                source_dim: self.source.dim(),
                target_dim: self.target.dim(),
            });
        }
        if !self.is_unital() {
            return Ok(IsoWitness::NotUnital);
        }
        if let Some((a, b)) = self.first_nonmultiplicative_pair() {
            return Ok(IsoWitness::NotMultiplicative(a, b));
        }
        Ok(match self.matrix.inverse() {
            Some(inv) => IsoWitness::Inverse(inv),
            None => IsoWitness::Singular,
        })
    }

    /// The inverse morphism, provided this is a verified isomorphism.
    pub fn inverse(&self) -> Result<AlgebraMorphism> {
        match self.verify_isomorphism()? {
            IsoWitness::Inverse(inv) => {
                AlgebraMorphism::new(self.target.clone(), self.source.clone(), inv)
            }
            other => Err(Error::NotAutomorphism(format!("{other:?}"))),
        }
    }

    /// Checks that this is an automorphism, returning its inverse.
    pub fn require_automorphism(&self) -> Result<AlgebraMorphism> {
        if self.source != self.target {
            return Err(Error::NotAutomorphism("source and target differ".into()));
        }
        self.inverse()
    }

    /// For an automorphism of a graded algebra permuting the vertex
    /// idempotents: `perm[v]` is the vertex of `sigma(e_v)`.
    pub fn vertex_permutation(&self) -> Option<Vec<usize>> {
        let gs = self.source.grading()?;
        let gt = self.target.grading()?;
        gs.idempotents
            .iter()
            .map(|&e| {
                let img = self.matrix.row_vec(e);
                gt.idempotents
                    .iter()
                    .position(|&f| img.iter().enumerate().all(|(i, &x)| x == u64::from(i == f)))
            })
            .collect()
    }
}
