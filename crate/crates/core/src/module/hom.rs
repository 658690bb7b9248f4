//! Hom spaces between modules.

use super::{same_algebra, Module};
use crate::error::{Error, Result};
use crate::linalg::{mod_sub, Matrix};

/// True when `f` is a module map `M -> N`.
pub fn is_module_map(m: &Module, n: &Module, f: &Matrix) -> bool {
    if f.rows() != m.dim() || f.cols() != n.dim() || !same_algebra(m.algebra(), n.algebra()) {
        return false;
    }
    (0..m.algebra().dim()).all(|a| &m.actions()[a] * f == f * &n.actions()[a])
}

/// A basis of `Hom_A(M, N)`.
///
/// Over a graded algebra the unknowns are the vertex blocks `F_v`, and each
/// arrow `x: s -> t` contributes `rho_M(x) F_t = F_s rho_N(x)`.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(Vec::new());
    }
    match m.algebra().grading() {
        Some(_) => graded_hom(m, n),
        None => ungraded_hom(m, n),
    }
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

fn graded_hom(m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    let a = m.algebra();
    let g = a.require_grading()?;
    let p = a.modulus();
    let mv: Vec<Vec<usize>> = (0..g.vertices).map(|v| m.vertex_basis(v)).collect();
    let nv: Vec<Vec<usize>> = (0..g.vertices).map(|v| n.vertex_basis(v)).collect();
    let mut offset = vec![0usize; g.vertices + 1];
    for v in 0..g.vertices {
        offset[v + 1] = offset[v] + mv[v].len() * nv[v].len();
    }
    let unknowns = offset[g.vertices];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + i * nv[v].len() + j;

    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for &x in &g.arrows {
        let (s, t) = (g.src[x], g.tgt[x]);
        let am = m.action(x);
        let an = n.action(x);
        for (ii, &i) in mv[s].iter().enumerate() {
            for (jj, &j) in nv[t].iter().enumerate() {
                let mut row = vec![0u64; unknowns];
                for (kk, &k) in mv[t].iter().enumerate() {
                    let c = am.get(i, k);
                    if c != 0 {
                        let u = var(t, kk, jj);
                        row[u] = (row[u] + c) % p;
                    }
                }
                for (ll, &l) in nv[s].iter().enumerate() {
                    let c = an.get(l, j);
                    if c != 0 {
                        let u = var(s, ii, ll);
                        row[u] = mod_sub(row[u], c, p);
                    }
                }
                if row.iter().any(|&c| c != 0) {
                    eqs.push(row);
                }
            }
        }
    }
    let kernel = if eqs.is_empty() {
        Matrix::identity(unknowns, p)
    } else {
        Matrix::from_row_vectors(unknowns, p, &eqs).kernel_basis()
    };
    Ok((0..kernel.cols())
        .map(|c| {
            let mut f = Matrix::zeros(m.dim(), n.dim(), p);
            for v in 0..g.vertices {
                for (ii, &i) in mv[v].iter().enumerate() {
                    for (jj, &j) in nv[v].iter().enumerate() {
                        f.set(i, j, kernel.get(var(v, ii, jj), c));
                    }
                }
            }
            f
        })
        .collect())
}

fn ungraded_hom(m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    let a = m.algebra();
    let p = a.modulus();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let var = |i: usize, j: usize| i * dn + j;
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for x in a.generators() {
        let am = m.action(x);
        let an = n.action(x);
        for i in 0..dm {
            for j in 0..dn {
                let mut row = vec![0u64; unknowns];
                for k in 0..dm {
                    let c = am.get(i, k);
                    if c != 0 {
                        row[var(k, j)] = (row[var(k, j)] + c) % p;
                    }
                }
                for l in 0..dn {
                    let c = an.get(l, j);
                    if c != 0 {
                        row[var(i, l)] = mod_sub(row[var(i, l)], c, p);
                    }
                }
                if row.iter().any(|&c| c != 0) {
                    eqs.push(row);
                }
            }
        }
    }
    let kernel = if eqs.is_empty() {
        Matrix::identity(unknowns, p)
    } else {
        Matrix::from_row_vectors(unknowns, p, &eqs).kernel_basis()
    };
    Ok((0..kernel.cols())
        .map(|c| Matrix::from_vec(dm, dn, p, kernel.col_vec(c)))
        .collect())
}
