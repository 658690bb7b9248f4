//! Small random modules for property tests and sampled checks.

use std::sync::Arc;

use rand::Rng;

use super::Module;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::Matrix;

/// A nonzero quotient of `P_{v_1} + ... + P_{v_k}` (`k <= 2`) by the
/// submodule generated by one or two random elements.
pub fn random_module<R: Rng>(a: &Arc<Algebra>, rng: &mut R) -> Result<Module> {
    let r = a.require_grading()?.vertices;
    let p = a.modulus();
    let count = rng.gen_range(1..=2);
    let vertices: Vec<usize> = (0..count).map(|_| rng.gen_range(0..r)).collect();
    let proj = Module::projective_sum(a, &vertices)?;
    // relations from the radical keep the quotient nonzero
    let rad = proj.radical_rows()?;
    if rad.rows() == 0 || rng.gen_bool(0.2) {
        return Ok(proj);
    }
    let gens = rng.gen_range(1..=2);
    let rows: Vec<Vec<u64>> = (0..gens)
        .map(|_| {
            let coeffs: Vec<u64> = (0..rad.rows()).map(|_| rng.gen_range(0..p)).collect();
            rad.apply_row(&coeffs)
        })
        .collect();
    let (_, sub) = proj.generated_submodule(&Matrix::from_row_vectors(proj.dim(), p, &rows))?;
    if sub.rows() == 0 {
        return Ok(proj);
    }
    Ok(proj.quotient(&sub)?.0)
}
