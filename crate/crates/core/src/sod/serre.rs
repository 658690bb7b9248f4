//! Serre duality on perfect complexes through the Nakayama twist, and the
//! rotation symmetry of `Lambda_r`.

use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::certificate::{build_generation_certificate, rotate_certificate, verify_certificate, SodKind};
use crate::algebra::{rotation_automorphism, Algebra, AlgebraMorphism, PathAlgebra};
use crate::error::{Error, Result};
use crate::homalg::{hom_homotopy_dim, minimal_projective_resolution, Complex};
use crate::module::{combine, hom_space, is_isomorphic, random_module, Module};

/// `nu(X)`: termwise twist, so `nu(P_i) = P_{i+1}` with unchanged differentials.
pub fn nakayama_functor(x: &Complex, sigma: &AlgebraMorphism) -> Result<Complex> {
    x.twist(sigma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreCheck {
    pub degrees: Vec<i64>,
    /// `dim Hom(X, Y[n])`
    pub lhs: Vec<usize>,
    /// `dim Hom(Y, nu X[-n])`
    pub rhs: Vec<usize>,
    pub verdict: bool,
}

/// Compares `dim Hom_K(X, Y[n])` with `dim Hom_K(Y, nu(X)[-n])` for `|n| <= depth`.
pub fn serre_duality_check(x: &Complex, y: &Complex, sigma: &AlgebraMorphism, depth: usize) -> Result<SerreCheck> {
    if !x.has_projective_terms() || !y.has_projective_terms() {
        return Err(Error::NotProjectiveTerms);
    }
    let nx = nakayama_functor(x, sigma)?;
    let d = depth as i64;
    let degrees: Vec<i64> = (-d..=d).collect();
    let mut lhs = Vec::with_capacity(degrees.len());
    let mut rhs = Vec::with_capacity(degrees.len());
    for &n in &degrees {
        lhs.push(hom_homotopy_dim(x, y, n)?);
        rhs.push(hom_homotopy_dim(y, &nx, -n)?);
    }
    let verdict = lhs == rhs;
    Ok(SerreCheck {
        degrees,
        lhs,
        rhs,
        verdict,
    })
}

fn random_vertices<R: Rng>(r: usize, rng: &mut R) -> Vec<usize> {
    let k = rng.gen_range(1..=2);
    (0..k).map(|_| rng.gen_range(0..r)).collect()
}

/// A small random bounded complex of projectives: a stalk, a random
/// two-term complex, or a truncated resolution of a random module.
pub fn random_perfect_complex<R: Rng>(a: &Arc<Algebra>, rng: &mut R) -> Result<Complex> {
    let r = a.require_grading()?.vertices;
    let p = a.modulus();
    let low = rng.gen_range(-2..=1);
    match rng.gen_range(0..3) {
        0 => Ok(Complex::stalk(Module::projective_sum(a, &random_vertices(r, rng))?, low)),
        1 => {
            let src = Module::projective_sum(a, &random_vertices(r, rng))?;
            let tgt = Module::projective_sum(a, &random_vertices(r, rng))?;
            let basis = hom_space(&src, &tgt)?;
            let coeffs: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..p)).collect();
            let d = combine(&basis, &coeffs, src.dim(), tgt.dim(), p);
            Complex::new(a.clone(), low, vec![src, tgt], vec![d])
        }
        _ => {
            let m = random_module(a, rng)?;
            let depth = rng.gen_range(1..=3);
            let res = minimal_projective_resolution(&m, depth)?;
            Ok(res.truncation(depth)?.shift(-low))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationCheck {
    pub sigma_order_divides_r: bool,
    pub simples_rotate: bool,
    pub projectives_rotate: bool,
    /// Every rotated certificate re-verified at the next vertex.
    pub certificates_rotate: bool,
    /// `r` rotations reproduce the original certificates exactly.
    pub index_sets_return: bool,
    pub verdict: bool,
}

/// Twisting by the rotation permutes simples and projectives, carries
/// verified certificates at `i` to verified certificates at `i + 1`, and
/// returns to the start after `r` steps.
pub fn rotation_periodicity_check(pa: &PathAlgebra, depth: usize) -> Result<RotationCheck> {
    let a = pa.algebra().clone();
    let r = pa.vertex_count();
    let sigma = rotation_automorphism(pa)?;
    let sigma_order_divides_r = sigma.power(r)?.is_identity();
    let mut simples_rotate = true;
    let mut projectives_rotate = true;
    for j in 1..=r {
        let next = j % r + 1;
        simples_rotate &= is_isomorphic(&Module::simple(&a, j)?.twist(&sigma)?, &Module::simple(&a, next)?)?;
        projectives_rotate &= is_isomorphic(&Module::projective(&a, j)?.twist(&sigma)?, &Module::projective(&a, next)?)?;
    }
    let mut certificates_rotate = true;
    let mut index_sets_return = true;
    for kind in [SodKind::Projective, SodKind::Injective] {
        let start = build_generation_certificate(&a, kind, 0, depth)?;
        let mut cur = start.clone();
        for _ in 0..r {
            cur = rotate_certificate(&cur, &sigma)?;
            certificates_rotate &= matches!(verify_certificate(&cur), Ok(c) if c.verdict);
        }
        index_sets_return &= cur == start;
    }
    let verdict = sigma_order_divides_r && simples_rotate && projectives_rotate && certificates_rotate && index_sets_return;
    Ok(RotationCheck {
        sigma_order_divides_r,
        simples_rotate,
        projectives_rotate,
        certificates_rotate,
        index_sets_return,
        verdict,
    })
}
