//! The total Hom complex `Hom^m(X, Y) = prod_k Hom_A(X^k, Y^{k+m})` with
//! `(delta f)_k = f_k d_Y - (-1)^m d_X f_{k+1}`.
//!
//! Its degree-`n` cohomology is `Hom_K(X, Y[n])`, which for a complex of
//! projectives `X` bounded above is `Hom_D(X, Y[n])`.

use super::complex::{ChainMap, Complex};
use super::resolution::minimal_projective_resolution;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{hom_space, same_algebra, Module};

struct HomDegree {
    /// `(k, basis of Hom(X^k, Y^{k+m}))`
    blocks: Vec<(i64, Vec<Matrix>)>,
}

impl HomDegree {
    fn new(x: &Complex, y: &Complex, m: i64) -> Result<Self> {
        let mut blocks = Vec::new();
        for k in x.low()..=x.high() {
            let (a, b) = (x.term(k), y.term(k + m));
            if a.dim() == 0 || b.dim() == 0 {
                continue;
            }
            let basis = hom_space(a, b)?;
            if !basis.is_empty() {
                blocks.push((k, basis));
            }
        }
        Ok(HomDegree { blocks })
    }

    fn dim(&self) -> usize {
        self.blocks.iter().map(|(_, b)| b.len()).sum()
    }
}

/// Offsets of the flattened blocks `X^k x Y^{k+m}`.
fn ambient_offsets(x: &Complex, y: &Complex, m: i64) -> (Vec<usize>, usize) {
    let mut offs = Vec::new();
    let mut total = 0;
    for k in x.low()..=x.high() {
        offs.push(total);
        total += x.dim(k) * y.dim(k + m);
    }
    (offs, total)
}

/// Rows: images under `delta^m` of the basis of `Hom^m`, flattened.
fn differential(x: &Complex, y: &Complex, m: i64, deg: &HomDegree) -> Matrix {
    let p = x.algebra().modulus();
    let (offs, total) = ambient_offsets(x, y, m + 1);
    let flip = m.rem_euclid(2) == 0; // -(-1)^m = -1 for even m
    let mut rows = Vec::with_capacity(deg.dim());
    for (k, basis) in &deg.blocks {
        let k = *k;
        let dy = y.diff(k + m);
        let dx_prev = x.diff(k - 1);
        for h in basis {
            let mut row = vec![0u64; total];
            let own = h * &dy;
            let off = offs[(k - x.low()) as usize];
            row[off..off + own.data().len()].copy_from_slice(own.data());
            if k > x.low() {
                let mut other = &dx_prev * h;
                if flip {
                    other = other.neg();
                }
                let off = offs[(k - 1 - x.low()) as usize];
                for (slot, &v) in row[off..off + other.data().len()].iter_mut().zip(other.data()) {
                    *slot = (*slot + v) % p;
                }
            }
            rows.push(row);
        }
    }
    Matrix::from_row_vectors(total, p, &rows)
}

fn rank_of(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

/// `dim Hom_K(X, Y[n])` for a bounded complex of projectives `X`.
pub fn hom_homotopy_dim(x: &Complex, y: &Complex, n: i64) -> Result<usize> {
    if !x.has_projective_terms() {
        return Err(Error::NotProjectiveTerms);
    }
    homotopy_classes_dim(x, y, n)
}

/// `dim Ext^n(M, N)` as `dim Hom_K(P, N[n])` for the truncation `P` of the
/// minimal resolution of `M` at `n + 1`. Independent of [`super::ext_dim`],
/// which works in generator coordinates.
pub fn ext_dim_via_hom_complex(m: &Module, n_mod: &Module, n: usize) -> Result<usize> {
    let res = minimal_projective_resolution(m, n + 1)?;
    let x = res.truncation(n + 1)?;
    let y = Complex::stalk(n_mod.clone(), 0);
    hom_homotopy_dim(&x, &y, n as i64)
}

/// Degree-`n` cohomology of the total Hom complex, for any source.
fn homotopy_classes_dim(x: &Complex, y: &Complex, n: i64) -> Result<usize> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let here = HomDegree::new(x, y, n)?;
    let below = HomDegree::new(x, y, n - 1)?;
    let rank_out = rank_of(&differential(x, y, n, &here));
    let rank_in = rank_of(&differential(x, y, n - 1, &below));
    Ok(here.dim() - rank_out - rank_in)
}

/// A basis of the chain maps `X -> Y`.
pub fn chain_map_basis(x: &Complex, y: &Complex) -> Result<Vec<ChainMap>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let p = x.algebra().modulus();
    let deg = HomDegree::new(x, y, 0)?;
    if deg.dim() == 0 {
        return Ok(Vec::new());
    }
    let delta = differential(x, y, 0, &deg);
    let cycles = if delta.cols() == 0 {
        Matrix::identity(deg.dim(), p)
    } else {
        delta.left_kernel()
    };
    let low = x.low();
    let mut out = Vec::with_capacity(cycles.rows());
    for c in 0..cycles.rows() {
        let coeffs = cycles.row(c);
        let mut comps: Vec<Matrix> = (x.low()..=x.high())
            .map(|k| Matrix::zeros(x.dim(k), y.dim(k), p))
            .collect();
        let mut idx = 0;
        for (k, basis) in &deg.blocks {
            for h in basis {
                comps[(k - low) as usize].add_scaled(h, coeffs[idx]);
                idx += 1;
            }
        }
        out.push(ChainMap::unchecked(x.clone(), y.clone(), low, comps));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_cyclic_nakayama;
    use crate::homalg::ext_dim_modules;

    #[test]
    fn projectives_have_one_dimensional_homs() {
        let a = build_cyclic_nakayama(4, 101).unwrap().algebra().clone();
        for i in 1..=4 {
            for j in 1..=4 {
                let x = Complex::stalk(Module::projective(&a, i).unwrap(), 0);
                let y = Complex::stalk(Module::projective(&a, j).unwrap(), 0);
                assert_eq!(hom_homotopy_dim(&x, &y, 0).unwrap(), 1);
                assert_eq!(hom_homotopy_dim(&x, &y, 1).unwrap(), 0);
            }
        }
    }

    #[test]
    fn non_projective_source_is_rejected() {
        let a = build_cyclic_nakayama(2, 101).unwrap().algebra().clone();
        let s = Complex::stalk(Module::simple(&a, 1).unwrap(), 0);
        assert_eq!(hom_homotopy_dim(&s, &s, 0), Err(Error::NotProjectiveTerms));
    }

    #[test]
    fn both_ext_paths_agree_on_simples() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        for j in 1..=3 {
            for k in 1..=3 {
                let (sj, sk) = (Module::simple(&a, j).unwrap(), Module::simple(&a, k).unwrap());
                for n in 0..5 {
                    assert_eq!(
                        ext_dim_via_hom_complex(&sj, &sk, n).unwrap(),
                        ext_dim_modules(&sj, &sk, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn chain_maps_verify() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let p1 = Module::projective(&a, 1).unwrap();
        let p2 = Module::projective(&a, 2).unwrap();
        let d = hom_space(&p2, &p1).unwrap()[0].clone();
        let x = Complex::new(a.clone(), -1, vec![p2, p1], vec![d]).unwrap();
        let maps = chain_map_basis(&x, &x).unwrap();
        assert!(!maps.is_empty());
        for f in maps {
            assert!(f.verify().is_ok());
        }
    }
}
