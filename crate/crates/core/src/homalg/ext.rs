//! Ext groups from minimal resolutions, Yoneda products, and the
//! polynomial-Ext test for `P^{inf,q}`-objects.
//!
//! `Hom_A(P, N)` for `P = e_{v_1}A + ... + e_{v_k}A` is identified with
//! `N e_{v_1} + ... + N e_{v_k}` through the images of the generators.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::resolution::{minimal_projective_resolution, Resolution};
use crate::error::{Error, Result};
use crate::linalg::{complement_rows, Matrix};
use crate::module::{generator_rows, map_from_generators, Module};

/// Coordinates of `Hom(P, N)`: for each summand its generator row in `P`
/// and the basis of `N e_v`.
struct GenCoords {
    gens: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    dim: usize,
}

impl GenCoords {
    fn new(p: &Module, n: &Module) -> Result<Self> {
        let gens = generator_rows(p)?;
        let blocks: Vec<Vec<usize>> = gens.iter().map(|&(v, _)| n.vertex_basis(v)).collect();
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut dim = 0;
        for b in &blocks {
            offsets.push(dim);
            dim += b.len();
        }
        Ok(GenCoords {
            gens,
            blocks,
            offsets,
            dim,
        })
    }

    /// Coordinates of a map `F: P -> N`.
    fn of_map(&self, f: &Matrix) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (s, &(_, row)) in self.gens.iter().enumerate() {
            for (j, &c) in self.blocks[s].iter().enumerate() {
                out[self.offsets[s] + j] = f.get(row, c);
            }
        }
        out
    }

    /// The map `P -> N` with the given coordinates.
    fn to_map(&self, p: &Module, n: &Module, coords: &[u64]) -> Result<Matrix> {
        let images: Vec<Vec<u64>> = (0..self.gens.len())
            .map(|s| {
                let mut img = vec![0u64; n.dim()];
                for (j, &c) in self.blocks[s].iter().enumerate() {
                    img[c] = coords[self.offsets[s] + j];
                }
                img
            })
            .collect();
        map_from_generators(p, n, &images)
    }
}

/// Matrix of `Hom(P_k, N) -> Hom(P_{k+1}, N)`, `phi -> d_{k+1} phi`, in
/// generator coordinates.
fn induced(res: &Resolution, n: &Module, k: usize) -> Result<Matrix> {
    let pk = res.term(k).expect("term in range");
    let src = GenCoords::new(pk, n)?;
    let p = n.modulus();
    let Some(next) = res.term(k + 1) else {
        return Ok(Matrix::zeros(src.dim, 0, p));
    };
    let dst = GenCoords::new(next, n)?;
    let d = res.differential(k + 1).expect("differential in range");
    let a = pk.algebra();
    let mut out = Matrix::zeros(src.dim, dst.dim, p);
    for (s, &(v, _)) in src.gens.iter().enumerate() {
        let basis = a.projective_basis(v)?;
        let off_p = generator_offset(pk, s)?;
        for (t, &(_, row)) in dst.gens.iter().enumerate() {
            // component of d_{k+1}(generator t) in summand s, as an algebra element
            let y = d.row(row);
            for (j, &b) in basis.iter().enumerate() {
                let coeff = y[off_p + j];
                if coeff == 0 {
                    continue;
                }
                let act = n.action(b);
                for (ii, &i) in src.blocks[s].iter().enumerate() {
                    for (jj, &c) in dst.blocks[t].iter().enumerate() {
                        let x = act.get(i, c);
                        if x != 0 {
                            let cur = out.get(src.offsets[s] + ii, dst.offsets[t] + jj);
                            out.set(src.offsets[s] + ii, dst.offsets[t] + jj, cur + coeff * x % p);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn generator_offset(p: &Module, s: usize) -> Result<usize> {
    let tags = p.projective_summands().ok_or(Error::NotProjectiveTerms)?;
    let a = p.algebra();
    let mut off = 0;
    for &v in &tags[..s] {
        off += a.projective_basis(v)?.len();
    }
    Ok(off)
}

fn rank_of(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

/// `dim Ext^n(M, N)` as `dim H^n(Hom(P_., N))` for the resolution of `M`.
pub fn ext_dim(res: &Resolution, n_mod: &Module, n: usize) -> Result<usize> {
    if n >= res.len() {
        res.require(n + 1)?;
        return Ok(0);
    }
    res.require(n + 1)?;
    let here = GenCoords::new(res.term(n).expect("in range"), n_mod)?.dim;
    let out = rank_of(&induced(res, n_mod, n)?);
    let inc = if n == 0 { 0 } else { rank_of(&induced(res, n_mod, n - 1)?) };
    Ok(here - out - inc)
}

/// Convenience wrapper resolving `m` to the depth needed for degree `n`.
pub fn ext_dim_modules(m: &Module, n_mod: &Module, n: usize) -> Result<usize> {
    let res = minimal_projective_resolution(m, n + 1)?;
    ext_dim(&res, n_mod, n)
}

/// A class in `Ext^n(M, N)` represented by a cocycle `P_n -> N` on the
/// minimal resolution of `M`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    resolution: Arc<Resolution>,
    target: Module,
    degree: usize,
    cocycle: Matrix,
}

impl ExtClass {
    /// Checks that `cocycle: P_n -> N` is a module map killed by `d_{n+1}`.
    pub fn new(resolution: Arc<Resolution>, target: Module, degree: usize, cocycle: Matrix) -> Result<Self> {
        resolution.require(degree + 1)?;
        let class = ExtClass {
            resolution,
            target,
            degree,
            cocycle,
        };
        let pn = class.resolution.term(degree);
        let ok_shape = match pn {
            Some(pn) => {
                class.cocycle.rows() == pn.dim()
                    && class.cocycle.cols() == class.target.dim()
                    && crate::module::is_module_map(pn, &class.target, &class.cocycle)
            }
            None => class.cocycle.rows() == 0,
        };
        if !ok_shape {
            return Err(Error::NotAModule("cocycle is not a module map P_n -> N".into()));
        }
        if let Some(d) = class.resolution.differential(degree + 1) {
            if !(d * &class.cocycle).is_zero() {
                return Err(Error::VerificationFailed("cocycle condition fails".into()));
            }
        }
        Ok(class)
    }

    /// The class of the identity in `Ext^0(M, M)`.
    pub fn identity(resolution: Arc<Resolution>) -> Result<Self> {
        let aug = resolution
            .augmentation()
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(0, resolution.module().dim(), resolution.module().modulus()));
        let m = resolution.module().clone();
        ExtClass::new(resolution, m, 0, aug)
    }

    pub fn resolution(&self) -> &Arc<Resolution> {
        &self.resolution
    }

    pub fn source(&self) -> &Module {
        self.resolution.module()
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cocycle(&self) -> &Matrix {
        &self.cocycle
    }

    /// True when the cocycle is a coboundary.
    pub fn is_zero(&self) -> Result<bool> {
        let Some(pn) = self.resolution.term(self.degree) else {
            return Ok(true);
        };
        let coords = GenCoords::new(pn, &self.target)?;
        let v = coords.of_map(&self.cocycle);
        if v.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if self.degree == 0 {
            return Ok(false);
        }
        let bound = induced(&self.resolution, &self.target, self.degree - 1)?;
        let bound = bound.row_space_basis();
        let p = self.target.modulus();
        let stacked = bound.vstack(&Matrix::from_row_vectors(coords.dim, p, &[v]));
        Ok(stacked.rank() == bound.rows())
    }

    /// Same degree, source resolution and target, and the difference is a coboundary.
    pub fn same_class(&self, other: &ExtClass) -> Result<bool> {
        if self.degree != other.degree
            || self.resolution != other.resolution
            || self.target != other.target
        {
            return Ok(false);
        }
        let diff = &self.cocycle - &other.cocycle;
        ExtClass {
            resolution: self.resolution.clone(),
            target: self.target.clone(),
            degree: self.degree,
            cocycle: diff,
        }
        .is_zero()
    }

    pub fn scale(&self, c: u64) -> ExtClass {
        ExtClass {
            cocycle: self.cocycle.scale(c),
            ..self.clone()
        }
    }
}

/// Representatives of a basis of `Ext^n(M, N)`.
pub fn ext_basis(res: &Arc<Resolution>, n_mod: &Module, n: usize) -> Result<Vec<ExtClass>> {
    res.require(n + 1)?;
    let Some(pn) = res.term(n) else {
        return Ok(Vec::new());
    };
    let coords = GenCoords::new(pn, n_mod)?;
    let p = n_mod.modulus();
    let out = induced(res, n_mod, n)?;
    let cocycles = if out.cols() == 0 {
        Matrix::identity(coords.dim, p)
    } else {
        out.left_kernel()
    };
    let bounds = if n == 0 {
        Matrix::zeros(0, coords.dim, p)
    } else {
        induced(res, n_mod, n - 1)?.row_space_basis()
    };
    let reps = complement_rows(&bounds, &cocycles);
    (0..reps.rows())
        .map(|k| {
            let f = coords.to_map(pn, n_mod, reps.row(k))?;
            ExtClass::new(res.clone(), n_mod.clone(), n, f)
        })
        .collect()
}

/// Solves `F E = h` for a module map `F: P -> Q` out of a tagged projective,
/// one generator at a time.
fn lift(p: &Module, q: &Module, e: &Matrix, h: &Matrix, step: usize) -> Result<Matrix> {
    let gens = generator_rows(p)?;
    let mut images = Vec::with_capacity(gens.len());
    for &(v, row) in &gens {
        let qv = q.vertex_basis(v);
        let target = Matrix::from_row_vectors(h.cols(), h.modulus(), &[h.row_vec(row)]);
        let mut img = vec![0u64; q.dim()];
        if !qv.is_empty() {
            let ev = e.select_rows(&qv);
            let u = Matrix::solve_left(&ev, &target).map_err(|_| Error::LiftingFailed(step))?;
            for (j, &c) in qv.iter().enumerate() {
                img[c] = u.get(0, j);
            }
        } else if target.data().iter().any(|&x| x != 0) {
            return Err(Error::LiftingFailed(step));
        }
        images.push(img);
    }
    map_from_generators(p, q, &images)
}

/// The Yoneda product of `f in Ext^m(M, N)` and `g in Ext^n(N, L)`, an
/// element of `Ext^{m+n}(M, L)`: `f` is lifted to maps
/// `f_k: P^M_{m+k} -> P^N_k` and the result is `f_n g`.
pub fn yoneda_product(f: &ExtClass, g: &ExtClass) -> Result<ExtClass> {
    if f.target() != g.source() {
        return Err(Error::DegreeMismatch(
            "target of the first class is not the source of the second".into(),
        ));
    }
    let (m, n) = (f.degree, g.degree);
    let rm = &f.resolution;
    let rn = &g.resolution;
    rm.require(m + n + 1)?;
    let p = f.target.modulus();
    let l = g.target.clone();
    let zero_result = |rows: usize| ExtClass::new(rm.clone(), l.clone(), m + n, Matrix::zeros(rows, l.dim(), p));

    let Some(pm) = rm.term(m) else {
        return zero_result(0);
    };
    let Some(pn0) = rn.term(0) else {
        return zero_result(pm.dim());
    };
    let mut fk = lift(pm, pn0, rn.augmentation().expect("P_0 maps to N"), &f.cocycle, 0)?;
    for k in 1..=n {
        let Some(next_m) = rm.term(m + k) else {
            return zero_result(0);
        };
        let Some(next_n) = rn.term(k) else {
            return zero_result(next_m.dim());
        };
        let h = rm.differential(m + k).expect("in range") * &fk;
        fk = lift(next_m, next_n, rn.differential(k).expect("in range"), &h, k)?;
    }
    ExtClass::new(rm.clone(), l, m + n, &fk * &g.cocycle)
}

/// Result of [`is_p_infty_object`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PInftyReport {
    pub q: usize,
    pub depth: usize,
    pub ext_dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    /// `theta^m != 0` for `m = 1, 2, ...` with `q m <= depth`.
    pub powers_nonzero: Vec<bool>,
    pub verdict: bool,
}

/// Checks `Ext^*(S, S) = k[theta]` with `deg theta = q` up to degree `depth`:
/// the dimensions are `[q | k]` and the powers of a generator are nonzero.
pub fn is_p_infty_object(s: &Module, q: usize, depth: usize) -> Result<PInftyReport> {
    if q == 0 {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let res = Arc::new(minimal_projective_resolution(s, depth + 1)?);
    let ext_dims = (0..=depth)
        .map(|k| ext_dim(&res, s, k))
        .collect::<Result<Vec<_>>>()?;
    let expected_dims: Vec<usize> = (0..=depth).map(|k| usize::from(k % q == 0)).collect();
    let mut powers_nonzero = Vec::new();
    if q <= depth && ext_dims[q] == 1 {
        let theta = ext_basis(&res, s, q)?.remove(0);
        let mut power = theta.clone();
        powers_nonzero.push(!power.is_zero()?);
        let mut deg = q;
        while deg + q <= depth {
            power = yoneda_product(&theta, &power)?;
            deg += q;
            powers_nonzero.push(!power.is_zero()?);
        }
    }
    let needed_powers = depth / q;
    let verdict = ext_dims == expected_dims
        && powers_nonzero.len() == needed_powers
        && powers_nonzero.iter().all(|&b| b);
    Ok(PInftyReport {
        q,
        depth,
        ext_dims,
        expected_dims,
        powers_nonzero,
        verdict,
    })
}

/// The canonical `theta in Ext^2(S, S)`: when `P_2 = P_0`, the augmentation
/// read on `P_2`, which is the identity in each degree below `-1` after lifting.
pub fn canonical_theta(res: &Arc<Resolution>) -> Result<ExtClass> {
    res.require(3)?;
    let (Some(p0), Some(p2)) = (res.term(0), res.term(2)) else {
        return Err(Error::VerificationFailed("resolution too short for theta".into()));
    };
    if p0 != p2 {
        return Err(Error::VerificationFailed("P_2 differs from P_0".into()));
    }
    let aug = res.augmentation().expect("P_0 present").clone();
    ExtClass::new(res.clone(), res.module().clone(), 2, aug)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_cyclic_nakayama;

    #[test]
    fn ext_between_simples() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s: Vec<Module> = (1..=3).map(|i| Module::simple(&a, i).unwrap()).collect();
        for j in 0..3 {
            let res = minimal_projective_resolution(&s[j], 7).unwrap();
            for k in 0..3 {
                for n in 0..=6 {
                    let expected = (k == j && n % 2 == 0) || (k == (j + 1) % 3 && n % 2 == 1);
                    assert_eq!(ext_dim(&res, &s[k], n).unwrap(), usize::from(expected));
                }
            }
        }
    }

    #[test]
    fn insufficient_depth_is_reported() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s = Module::simple(&a, 1).unwrap();
        let res = minimal_projective_resolution(&s, 2).unwrap();
        assert!(matches!(ext_dim(&res, &s, 4), Err(Error::InsufficientDepth { .. })));
    }

    #[test]
    fn projective_source_has_no_higher_ext() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let p = Module::projective(&a, 1).unwrap();
        let s = Module::simple(&a, 1).unwrap();
        assert_eq!(ext_dim_modules(&p, &s, 0).unwrap(), 1);
        for n in 1..4 {
            assert_eq!(ext_dim_modules(&p, &s, n).unwrap(), 0);
        }
    }

    #[test]
    fn theta_squared_is_nonzero() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s = Module::simple(&a, 1).unwrap();
        let res = Arc::new(minimal_projective_resolution(&s, 6).unwrap());
        let theta = canonical_theta(&res).unwrap();
        let t2 = yoneda_product(&theta, &theta).unwrap();
        assert_eq!(t2.degree(), 4);
        assert!(!t2.is_zero().unwrap());
        let id = ExtClass::identity(res.clone()).unwrap();
        assert!(yoneda_product(&id, &theta).unwrap().same_class(&theta).unwrap());
        assert!(yoneda_product(&theta, &id).unwrap().same_class(&theta).unwrap());
    }

    #[test]
    fn p_infty_patterns() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s = Module::simple(&a, 2).unwrap();
        assert!(is_p_infty_object(&s, 2, 8).unwrap().verdict);
        assert!(!is_p_infty_object(&s, 3, 8).unwrap().verdict);
        let p = Module::projective(&a, 2).unwrap();
        assert!(!is_p_infty_object(&p, 2, 8).unwrap().verdict);
    }
}
