//! Finite-dimensional algebras given by structure constants.
//!
//! Basis elements are numbered `0..dim`; `x_a * x_b = sum_c c[a][b][c] x_c`.
//! Elements are coordinate vectors of residues.

mod basic;
mod morphism;
mod path;
mod radical;

pub use basic::{basic_algebra, discover_idempotents, BasicAlgebra};
pub use morphism::{AlgebraMorphism, IsoWitness};
pub use path::{build_cyclic_nakayama, rotation_automorphism, Path, PathAlgebra, Quiver};
pub use radical::jacobson_radical;

use crate::error::{Error, Result};
use crate::linalg::{mod_add, mod_mul, Matrix};

/// Vertex data for an algebra whose basis is compatible with a complete set
/// of primitive orthogonal idempotents.
///
/// Vertices are numbered from 0. Every basis element `x` satisfies
/// `e_{src(x)} x e_{tgt(x)} = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub vertices: usize,
    /// Basis index of the idempotent of each vertex.
    pub idempotents: Vec<usize>,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Basis indices that generate the algebra together with the idempotents.
    pub arrows: Vec<usize>,
    /// Basis indices spanning the Jacobson radical.
    pub radical: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    p: u64,
    dim: usize,
    table: Vec<Vec<(usize, u64)>>,
    one: Vec<u64>,
    labels: Vec<String>,
    grading: Option<Grading>,
}

impl Algebra {
    /// `table[a * dim + b]` lists the nonzero `(c, coeff)` of `x_a x_b`.
    pub fn new(
        p: u64,
        dim: usize,
        table: Vec<Vec<(usize, u64)>>,
        one: Vec<u64>,
        labels: Vec<String>,
    ) -> Result<Self> {
        crate::linalg::check_modulus(p)?;
        if table.len() != dim * dim || one.len() != dim || labels.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "structure constants for dimension {dim}"
            )));
        }
        let table = table
            .into_iter()
            .map(|entries| {
                let mut dense = std::collections::BTreeMap::new();
                for (c, v) in entries {
                    let slot = dense.entry(c).or_insert(0u64);
                    *slot = mod_add(*slot, v % p, p);
                }
                dense.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        let alg = Algebra {
            p,
            dim,
            table,
            one: one.into_iter().map(|x| x % p).collect(),
            labels,
            grading: None,
        };
        for a in 0..dim {
            let x = alg.basis_vector(a);
            if alg.mul(&alg.one, &x) != x || alg.mul(&x, &alg.one) != x {
                return Err(Error::VerificationFailed(format!(
                    "identity law fails on basis element {}",
                    alg.labels[a]
                )));
            }
        }
        Ok(alg)
    }

    /// Attaches a grading after checking it against the multiplication.
    pub fn with_grading(mut self, g: Grading) -> Result<Self> {
        let n = self.dim;
        let bad = |msg: &str| Err(Error::VerificationFailed(format!("grading: {msg}")));
        if g.src.len() != n || g.tgt.len() != n || g.idempotents.len() != g.vertices {
            return bad("wrong lengths");
        }
        let mut sum = vec![0u64; n];
        for (v, &e) in g.idempotents.iter().enumerate() {
            if g.src[e] != v || g.tgt[e] != v {
                return bad("idempotent not at its own vertex");
            }
            sum[e] = mod_add(sum[e], 1, self.p);
        }
        if sum != self.one {
            return bad("idempotents do not sum to 1");
        }
        for x in 0..n {
            let left = self.mul_basis(g.idempotents[g.src[x]], x);
            let right = self.mul_basis(x, g.idempotents[g.tgt[x]]);
            if left != [(x, 1)] || right != [(x, 1)] {
                return bad("basis element not homogeneous");
            }
        }
        self.grading = Some(g);
        Ok(self)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn require_grading(&self) -> Result<&Grading> {
        self.grading.as_ref().ok_or(Error::NotGraded)
    }

    pub fn basis_vector(&self, a: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[a] = 1;
        v
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &[(usize, u64)] {
        &self.table[a * self.dim + b]
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let s = mod_mul(xa, yb, p);
                for &(c, v) in self.mul_basis(a, b) {
                    out[c] = mod_add(out[c], mod_mul(s, v, p), p);
                }
            }
        }
        out
    }

    /// Matrix of `y -> y x` in the row convention (row `b` holds `x_b x`).
    pub fn right_mult_matrix(&self, x: &[u64]) -> Matrix {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|b| self.mul(&self.basis_vector(b), x))
            .collect();
        Matrix::from_row_vectors(self.dim, self.p, &rows)
    }

    /// Matrix of `y -> x y` in the row convention.
    pub fn left_mult_matrix(&self, x: &[u64]) -> Matrix {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|b| self.mul(x, &self.basis_vector(b)))
            .collect();
        Matrix::from_row_vectors(self.dim, self.p, &rows)
    }

    /// Checks `(x_a x_b) x_c = x_a (x_b x_c)` on every basis triple.
    pub fn is_associative(&self) -> bool {
        self.first_nonassociative_triple().is_none()
    }

    pub fn first_nonassociative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(&self.basis_vector(a), &self.basis_vector(b));
                for c in 0..n {
                    let bc = self.mul(&self.basis_vector(b), &self.basis_vector(c));
                    let left = self.mul(&ab, &self.basis_vector(c));
                    let right = self.mul(&self.basis_vector(a), &bc);
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Basis indices `b` with `e_v x_b = x_b`, i.e. a basis of `e_v A`.
    pub fn projective_basis(&self, v: usize) -> Result<Vec<usize>> {
        let g = self.require_grading()?;
        Ok((0..self.dim).filter(|&b| g.src[b] == v).collect())
    }

    /// Basis indices spanning `A e_v`.
    pub fn left_projective_basis(&self, v: usize) -> Result<Vec<usize>> {
        let g = self.require_grading()?;
        Ok((0..self.dim).filter(|&b| g.tgt[b] == v).collect())
    }

    /// Radical basis as rows; uses the grading when present.
    pub fn radical_basis(&self) -> Result<Matrix> {
        match &self.grading {
            Some(g) => {
                let rows: Vec<Vec<u64>> =
                    g.radical.iter().map(|&b| self.basis_vector(b)).collect();
                Ok(Matrix::from_row_vectors(self.dim, self.p, &rows))
            }
            None => jacobson_radical(self),
        }
    }

    /// Algebra generators: idempotents plus arrows when graded, the whole basis otherwise.
    pub fn generators(&self) -> Vec<usize> {
        match &self.grading {
            Some(g) => g.idempotents.iter().chain(&g.arrows).copied().collect(),
            None => (0..self.dim).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix_algebra(n: usize, p: u64) -> Algebra {
        let idx = |a: usize, b: usize| a * n + b;
        let dim = n * n;
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    table[idx(a, b) * dim + idx(b, d)].push((idx(a, d), 1));
                }
            }
        }
        let mut one = vec![0; dim];
        for a in 0..n {
            one[idx(a, a)] = 1;
        }
        let labels = (0..dim).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect();
        Algebra::new(p, dim, table, one, labels).unwrap()
    }

    #[test]
    fn matrix_algebra_is_associative() {
        assert!(matrix_algebra(3, 7).is_associative());
    }

    #[test]
    fn bad_identity_is_rejected() {
        let table = vec![vec![(0, 1)]];
        assert!(Algebra::new(5, 1, table, vec![2], vec!["x".into()]).is_err());
    }
}
