//! Isomorphism tests for modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{combine, hom_space, same_algebra, Module};
use crate::error::{Error, Result};

const RANDOM_TRIALS: usize = 32;
const DEFAULT_SEED: u64 = 0x5eed;

/// Decides `M ≅ N`: dimension vectors first, then random elements of
/// `Hom(M, N)`, then the uniserial comparison over Nakayama algebras.
/// Returns `Inconclusive` rather than a possibly wrong `false`.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

pub fn is_isomorphic_seeded(m: &Module, n: &Module, seed: u64) -> Result<bool> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m.algebra().grading().is_some() && m.dim_vector()? != n.dim_vector()? {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let p = m.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        if combine(&basis, &coeffs, m.dim(), n.dim(), p).is_invertible() {
            return Ok(true);
        }
    }
    match uniserial_comparison(m, n)? {
        Some(answer) => Ok(answer),
        None => Err(Error::Inconclusive),
    }
}

/// Deterministic comparison for uniserial modules over a Nakayama algebra
/// (each vertex has at most one outgoing and one incoming arrow). Such a
/// module is determined by the vertex sequence of its radical layers.
/// Returns `None` when the hypotheses fail.
pub fn uniserial_comparison(m: &Module, n: &Module) -> Result<Option<bool>> {
    let Some(g) = m.algebra().grading() else {
        return Ok(None);
    };
    let mut out_deg = vec![0; g.vertices];
    let mut in_deg = vec![0; g.vertices];
    for &x in &g.arrows {
        out_deg[g.src[x]] += 1;
        in_deg[g.tgt[x]] += 1;
    }
    if out_deg.iter().chain(&in_deg).any(|&d| d > 1) {
        return Ok(None);
    }
    let lm = m.radical_layers()?;
    let ln = n.radical_layers()?;
    let uniserial = |layers: &[Vec<usize>]| layers.iter().all(|l| l.iter().sum::<usize>() == 1);
    if !uniserial(&lm) || !uniserial(&ln) {
        return Ok(None);
    }
    Ok(Some(lm == ln))
}
