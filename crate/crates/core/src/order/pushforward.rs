//! Pushforward of `Lambda_r`-modules along `Gamma / t^N -> Gamma / t`, the
//! Ext table between pushed-forward simples from the lattice resolutions
//! `0 -> L^(k+1) -> L^(k) -> i_* S_k -> 0`, and derived restriction.

use serde::{Deserialize, Serialize};

use super::fiber::{FiberIso, TruncatedOrderAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::{is_isomorphic, same_algebra, Module};

fn require_basic(iso: &FiberIso, tr: &TruncatedOrderAlgebra) -> Result<()> {
    if !tr.order().is_basic() {
        return Err(Error::NotBasic);
    }
    if !same_algebra(&iso.basic.algebra, &iso.fiber) || tr.order().size() != iso.corners.len() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// `M` as a `Gamma / t^N`-module: `t^e E_ab` acts as `phi^{-1}(E_ab)` when
/// `e = v_ab` and as zero otherwise.
pub fn pushforward_module(m: &Module, iso: &FiberIso, tr: &TruncatedOrderAlgebra) -> Result<Module> {
    require_basic(iso, tr)?;
    if !same_algebra(m.algebra(), iso.lambda.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let inv = iso.inverse()?;
    let n = tr.order().size();
    let p = m.modulus();
    let mut action = vec![Matrix::zeros(m.dim(), m.dim(), p); tr.algebra().dim()];
    for a in 0..n {
        for b in 0..n {
            let i = tr.index(a, b, tr.order().v(a, b)).expect("k = 0 is always present");
            let x = inv.image(&iso.fiber.basis_vector(a * n + b));
            action[i] = m.element_action(&x);
        }
    }
    Module::from_actions(tr.algebra().clone(), m.dim(), action)
}

/// A `Gamma / t^N`-module killed by `t`, transported back to `Lambda_r`.
pub fn restrict_to_lambda(m: &Module, iso: &FiberIso, tr: &TruncatedOrderAlgebra) -> Result<Module> {
    require_basic(iso, tr)?;
    if !same_algebra(m.algebra(), tr.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if !m.element_action(&tr.t_element()?).is_zero() {
        return Err(Error::NotAModule("t does not act by zero".into()));
    }
    let n = tr.order().size();
    let lambda = iso.lambda.algebra();
    let action = (0..lambda.dim())
        .map(|x| {
            let img = iso.morphism.image(&lambda.basis_vector(x));
            let mut lifted = vec![0u64; tr.algebra().dim()];
            for (ab, &c) in img.iter().enumerate() {
                let (a, b) = (ab / n, ab % n);
                lifted[tr.index(a, b, tr.order().v(a, b)).expect("k = 0")] = c;
            }
            m.element_action(&lifted)
        })
        .collect();
    Module::from_actions(lambda.clone(), m.dim(), action)
}

/// `Hom(L^(k), M) = M e_k -> Hom(L^(k+1), M) = M e_{k+1}`, `g -> g x_k`
/// with `x_k = E_{k,k+1}`, or `t E_{r,1}` at the wrap.
fn lattice_map(m: &Module, tr: &TruncatedOrderAlgebra, k: usize) -> Result<Matrix> {
    let r = tr.order().size();
    let next = (k + 1) % r;
    let e = if next == 0 { 1 } else { 0 };
    let x = tr
        .index(k, next, e)
        .ok_or_else(|| Error::InvalidParameter("truncation too short for the wrapping inclusion".into()))?;
    let action = m.action(x);
    let rows = m.vertex_basis(k);
    let cols = m.vertex_basis(next);
    Ok(action.select_rows(&rows).select(&(0..rows.len()).collect::<Vec<_>>(), &cols))
}

fn rank_of(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushforwardExtTable {
    pub r: usize,
    /// `ext[n][k][j] = dim Ext^n(i_* S_k, i_* S_j)` for `n = 0, 1, 2`, 0-based `k, j`.
    pub ext: Vec<Vec<Vec<usize>>>,
    /// `lattice_hom[a][k] = dim Hom(L^(a), i_* S_k)`.
    pub lattice_hom: Vec<Vec<usize>>,
    pub matches_expected: bool,
    pub orthogonal: bool,
    pub rotation_invariant: bool,
    pub verdict: bool,
}

/// Ext between pushed-forward simples from the two-term lattice resolutions;
/// `Ext^{>= 2}` vanishes because the resolutions have length one.
pub fn pushforward_ext_table(iso: &FiberIso, tr: &TruncatedOrderAlgebra) -> Result<PushforwardExtTable> {
    require_basic(iso, tr)?;
    let r = tr.order().size();
    let lambda = iso.lambda.algebra();
    let pushed = (1..=r)
        .map(|j| pushforward_module(&Module::simple(lambda, j)?, iso, tr))
        .collect::<Result<Vec<_>>>()?;
    let mut ext = vec![vec![vec![0usize; r]; r]; 3];
    for k in 0..r {
        for (j, m) in pushed.iter().enumerate() {
            let f = lattice_map(m, tr, k)?;
            let rank = rank_of(&f);
            ext[0][k][j] = f.rows() - rank;
            ext[1][k][j] = f.cols() - rank;
        }
    }
    let lattice_hom: Vec<Vec<usize>> = (0..r)
        .map(|a| pushed.iter().map(|m| m.vertex_basis(a).len()).collect())
        .collect();
    let matches_expected = (0..r).all(|k| {
        (0..r).all(|j| {
            ext[0][k][j] == usize::from(j == k) && ext[1][k][j] == usize::from(j == (k + 1) % r) && ext[2][k][j] == 0
        })
    });
    let orthogonal = (0..r).all(|a| (0..r).all(|k| lattice_hom[a][k] == usize::from(a == k)));
    let rotation_invariant = ext
        .iter()
        .all(|t| (0..r).all(|k| (0..r).all(|j| t[k][j] == t[(k + 1) % r][(j + 1) % r])));
    Ok(PushforwardExtTable {
        r,
        ext,
        lattice_hom,
        matches_expected,
        orthogonal,
        rotation_invariant,
        verdict: matches_expected && orthogonal && rotation_invariant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedRestriction {
    /// 1-based vertex.
    pub k: usize,
    pub h_minus1: Vec<usize>,
    pub h0: Vec<usize>,
    pub h_minus1_is_simple: bool,
    pub h0_is_simple: bool,
    pub euler: i64,
    pub verdict: bool,
}

/// `L i^* i_* S_k` through `0 -> Gamma --t--> Gamma -> Gamma/t -> 0`:
/// `H^{-1} = ker(t)` and `H^0 = coker(t)` on `i_* S_k`, both compared with `S_k`.
pub fn derived_restriction_cohomology(iso: &FiberIso, tr: &TruncatedOrderAlgebra, k: usize) -> Result<DerivedRestriction> {
    require_basic(iso, tr)?;
    let lambda = iso.lambda.algebra();
    let s = Module::simple(lambda, k)?;
    let m = pushforward_module(&s, iso, tr)?;
    let t = m.element_action(&tr.t_element()?);
    let (ker, _) = m.kernel_of(&t)?;
    let image = t.row_space_basis();
    let coker = if image.rows() == 0 { m.clone() } else { m.quotient(&image)?.0 };
    let h_minus1 = restrict_to_lambda(&ker, iso, tr)?;
    let h0 = restrict_to_lambda(&coker, iso, tr)?;
    let h_minus1_is_simple = is_isomorphic(&h_minus1, &s)?;
    let h0_is_simple = is_isomorphic(&h0, &s)?;
    let euler = h0.dim() as i64 - h_minus1.dim() as i64;
    Ok(DerivedRestriction {
        k,
        h_minus1: h_minus1.dim_vector()?,
        h0: h0.dim_vector()?,
        h_minus1_is_simple,
        h0_is_simple,
        euler,
        verdict: h_minus1_is_simple && h0_is_simple && euler == 0,
    })
}
