//! Reduction of an algebra to its basic algebra `eAe`.

use std::sync::Arc;

use super::radical::product_space;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `eAe` for `e` a sum of one idempotent per isomorphism class of
/// indecomposable projectives.
#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    pub algebra: Arc<Algebra>,
    /// Chosen idempotents, as basis indices of the original algebra.
    pub idempotents: Vec<usize>,
    /// Classes of the supplied idempotents under `e_i A ≅ e_j A`.
    pub classes: Vec<Vec<usize>>,
    /// Rows: the basis of `eAe` in coordinates of the original algebra.
    pub embedding: Matrix,
    pivots: Vec<usize>,
}

impl BasicAlgebra {
    /// Coordinates in the basic algebra of an element of `eAe`.
    pub fn coordinates(&self, x: &[u64]) -> Result<Vec<u64>> {
        let coords: Vec<u64> = self.pivots.iter().map(|&c| x[c]).collect();
        if self.embedding.apply_row(&coords) != x {
            return Err(Error::VerificationFailed(
                "element does not lie in the corner algebra".into(),
            ));
        }
        Ok(coords)
    }
}

/// Basis elements that are idempotent, pairwise orthogonal and sum to 1.
pub fn discover_idempotents(a: &Algebra) -> Result<Vec<usize>> {
    let idem: Vec<usize> = (0..a.dim())
        .filter(|&x| a.mul_basis(x, x) == [(x, 1)])
        .collect();
    let orthogonal = idem
        .iter()
        .all(|&x| idem.iter().all(|&y| x == y || a.mul_basis(x, y).is_empty()));
    let mut sum = vec![0u64; a.dim()];
    for &x in &idem {
        sum[x] = 1;
    }
    if idem.is_empty() || !orthogonal || sum != a.one() {
        return Err(Error::IdempotentDiscoveryFailed);
    }
    Ok(idem)
}

fn corner(a: &Algebra, e: &[u64], f: &[u64]) -> Matrix {
    let rows: Vec<Vec<u64>> = (0..a.dim())
        .map(|x| a.mul(&a.mul(e, &a.basis_vector(x)), f))
        .collect();
    Matrix::from_row_vectors(a.dim(), a.modulus(), &rows).row_space_basis()
}

/// Computes the basic algebra of `a`. Idempotents are basis indices; when
/// `None`, they are discovered among the basis elements.
pub fn basic_algebra(a: &Arc<Algebra>, idempotents: Option<&[usize]>) -> Result<BasicAlgebra> {
    let idem = match idempotents {
        Some(list) => list.to_vec(),
        None => discover_idempotents(a)?,
    };
    let p = a.modulus();
    let vecs: Vec<Vec<u64>> = idem.iter().map(|&i| a.basis_vector(i)).collect();

    // e_i A ≅ e_j A iff e_i lies in the ideal e_i A e_j A e_i of the local ring e_i A e_i.
    let mut class_of: Vec<Option<usize>> = vec![None; idem.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..idem.len() {
        if class_of[i].is_some() {
            continue;
        }
        let c = classes.len();
        class_of[i] = Some(c);
        let mut members = vec![idem[i]];
        for j in i + 1..idem.len() {
            if class_of[j].is_some() {
                continue;
            }
            let ij = corner(a, &vecs[i], &vecs[j]);
            let ji = corner(a, &vecs[j], &vecs[i]);
            let span = product_space(a, &ij, &ji);
            let with_ei = span.vstack(&Matrix::from_row_vectors(a.dim(), p, &[vecs[i].clone()]));
            if span.rows() > 0 && with_ei.rank() == span.rows() {
                class_of[j] = Some(c);
                members.push(idem[j]);
            }
        }
        classes.push(members);
    }
    let chosen: Vec<usize> = classes.iter().map(|c| c[0]).collect();

    if chosen.len() == idem.len() {
        let pivots = (0..a.dim()).collect();
        return Ok(BasicAlgebra {
            algebra: a.clone(),
            idempotents: chosen,
            classes,
            embedding: Matrix::identity(a.dim(), p),
            pivots,
        });
    }

    let mut e = vec![0u64; a.dim()];
    for &i in &chosen {
        e[i] = 1;
    }
    let basis = corner(a, &e, &e);
    let mut probe = basis.clone();
    let pivots = probe.rref();
    let k = basis.rows();
    let coords = |x: &[u64]| -> Vec<u64> { pivots.iter().map(|&c| x[c]).collect() };
    let mut table = vec![Vec::new(); k * k];
    for i in 0..k {
        for j in 0..k {
            let prod = coords(&a.mul(basis.row(i), basis.row(j)));
            table[i * k + j] = prod
                .into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .collect();
        }
    }
    let labels = pivots.iter().map(|&c| a.labels()[c].clone()).collect();
    let algebra = Algebra::new(p, k, table, coords(&e), labels)?;
    Ok(BasicAlgebra {
        algebra: Arc::new(algebra),
        idempotents: chosen,
        classes,
        embedding: basis,
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat2(p: u64) -> Arc<Algebra> {
        let idx = |a: usize, b: usize| a * 2 + b;
        let mut table = vec![Vec::new(); 16];
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..2 {
                    table[idx(a, b) * 4 + idx(b, d)].push((idx(a, d), 1));
                }
            }
        }
        let labels = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
        Arc::new(Algebra::new(p, 4, table, vec![1, 0, 0, 1], labels).unwrap())
    }

    #[test]
    fn matrix_algebra_reduces_to_the_field() {
        let b = basic_algebra(&mat2(5), None).unwrap();
        assert_eq!(b.algebra.dim(), 1);
        assert_eq!(b.idempotents, vec![0]);
        assert_eq!(b.classes, vec![vec![0, 3]]);
    }

    #[test]
    fn basic_algebra_is_returned_unchanged() {
        let l = crate::algebra::build_cyclic_nakayama(3, 101).unwrap();
        let b = basic_algebra(l.algebra(), Some(&l.algebra().grading().unwrap().idempotents)).unwrap();
        assert!(Arc::ptr_eq(&b.algebra, l.algebra()));
    }
}
