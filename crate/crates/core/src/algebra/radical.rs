//! Jacobson radical of an ungraded algebra.

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{mod_add, mod_mul, Matrix};

/// Basis (as rows) of the Jacobson radical.
///
/// The radical always lies in the kernel of the trace form
/// `(x, y) -> tr(y -> y x y')`. The kernel is accepted only after checking
/// that it is a nilpotent two-sided ideal, which forces equality in any
/// characteristic.
pub fn jacobson_radical(a: &Algebra) -> Result<Matrix> {
    let n = a.dim();
    let p = a.modulus();
    let mults: Vec<Matrix> = (0..n)
        .map(|i| a.right_mult_matrix(&a.basis_vector(i)))
        .collect();
    let mut form = Matrix::zeros(n, n, p);
    for i in 0..n {
        for j in i..n {
            let mut tr = 0u64;
            for u in 0..n {
                for v in 0..n {
                    let x = mults[i].get(u, v);
                    if x != 0 {
                        tr = mod_add(tr, mod_mul(x, mults[j].get(v, u), p), p);
                    }
                }
            }
            form.set(i, j, tr);
            form.set(j, i, tr);
        }
    }
    let candidate = form.kernel_basis().transpose().row_space_basis();
    if candidate.rows() == 0 {
        return Ok(candidate);
    }
    if !is_two_sided_ideal(a, &candidate) {
        return Err(Error::RadicalUndetermined);
    }
    let mut power = candidate.clone();
    for _ in 0..=n {
        if power.rows() == 0 {
            return Ok(candidate);
        }
        let prev = power.rows();
        power = product_space(a, &power, &candidate);
        if power.rows() == prev {
            break;
        }
    }
    Err(Error::RadicalUndetermined)
}

fn is_two_sided_ideal(a: &Algebra, span: &Matrix) -> bool {
    let rank = span.rows();
    (0..span.rows()).all(|k| {
        let x = span.row_vec(k);
        (0..a.dim()).all(|b| {
            let e = a.basis_vector(b);
            let images = [a.mul(&x, &e), a.mul(&e, &x)];
            images.iter().all(|img| {
                let m = Matrix::from_row_vectors(a.dim(), a.modulus(), &[img.clone()]);
                span.vstack(&m).rank() == rank
            })
        })
    })
}

/// Span of all products `u v` with `u` in the first space, `v` in the second.
pub(crate) fn product_space(a: &Algebra, left: &Matrix, right: &Matrix) -> Matrix {
    let mut rows = Vec::new();
    for i in 0..left.rows() {
        for j in 0..right.rows() {
            rows.push(a.mul(left.row(i), right.row(j)));
        }
    }
    Matrix::from_row_vectors(a.dim(), a.modulus(), &rows).row_space_basis()
}
