//! `Hom_D(X, Y[n])` for the objects that appear in decompositions: bounded
//! complexes of projectives, and stalk complexes of arbitrary modules
//! (replaced by a truncated minimal resolution).

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homalg::{hom_homotopy_dim, minimal_projective_resolution, Complex};
use crate::module::same_algebra;

/// The unique degree carrying a nonzero term, if there is exactly one.
pub fn stalk_degree(x: &Complex) -> Option<i64> {
    let mut found = None;
    for n in x.low()..=x.high() {
        if x.dim(n) > 0 {
            if found.is_some() {
                return None;
            }
            found = Some(n);
        }
    }
    found
}

/// `dim Hom_D(X, Y[n])` for each `n` in `degrees`.
///
/// A stalk source `M[-d]` is replaced by its minimal resolution, truncated
/// below the lowest degree that can reach `Y[n]`.
pub fn derived_hom_dims(x: &Complex, y: &Complex, degrees: RangeInclusive<i64>) -> Result<Vec<usize>> {
    if x.is_zero() || y.is_zero() {
        return Ok(degrees.map(|_| 0).collect());
    }
    if x.has_projective_terms() {
        return degrees.map(|n| hom_homotopy_dim(x, y, n)).collect();
    }
    let d = stalk_degree(x).ok_or(Error::NotProjectiveTerms)?;
    let top = *degrees.end();
    let depth = (d + top - y.low() + 1).max(0) as usize;
    let res = minimal_projective_resolution(x.term(d), depth)?;
    let px = res.truncation(depth)?.shift(-d);
    degrees.map(|n| hom_homotopy_dim(&px, y, n)).collect()
}

pub fn derived_hom_dim(x: &Complex, y: &Complex, n: i64) -> Result<usize> {
    Ok(derived_hom_dims(x, y, n..=n)?[0])
}

/// True iff the self-Hom dimensions in degrees `0..=depth` are `1, 0, 0, ...`.
pub fn check_exceptional(x: &Complex, depth: usize) -> Result<bool> {
    let dims = derived_hom_dims(x, x, 0..=depth as i64)?;
    Ok(dims[0] == 1 && dims[1..].iter().all(|&d| d == 0))
}

/// `dim Hom(objs[later], objs[earlier][degree])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub later: usize,
    pub earlier: usize,
    pub degree: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiorthogonalTable {
    pub depth: usize,
    pub entries: Vec<TableEntry>,
    pub verdict: bool,
}

impl SemiorthogonalTable {
    /// The first entry that should vanish but does not.
    pub fn offending(&self) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.dim != 0)
    }
}

/// All `Hom(objs[a], objs[b][n])` with `a > b` and `0 <= n <= depth`; the
/// sequence is semiorthogonal iff they all vanish.
pub fn check_semiorthogonal_sequence(objs: &[Complex], depth: usize) -> Result<SemiorthogonalTable> {
    if let Some(first) = objs.first() {
        if objs.iter().any(|o| !same_algebra(o.algebra(), first.algebra())) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let mut entries = Vec::new();
    for later in 0..objs.len() {
        for earlier in 0..later {
            let dims = derived_hom_dims(&objs[later], &objs[earlier], 0..=depth as i64)?;
            for (degree, dim) in dims.into_iter().enumerate() {
                entries.push(TableEntry {
                    later,
                    earlier,
                    degree,
                    dim,
                });
            }
        }
    }
    let verdict = entries.iter().all(|e| e.dim == 0);
    Ok(SemiorthogonalTable {
        depth,
        entries,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_cyclic_nakayama;
    use crate::module::Module;

    #[test]
    fn projective_is_exceptional_simple_is_not() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let p = Complex::stalk(Module::projective(&a, 2).unwrap(), 0);
        let s = Complex::stalk(Module::simple(&a, 2).unwrap(), 0);
        assert!(check_exceptional(&p, 8).unwrap());
        assert!(!check_exceptional(&s, 8).unwrap());
        assert!(!check_exceptional(&Complex::zero(a), 8).unwrap());
    }

    #[test]
    fn stalk_homs_match_ext_pattern() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s1 = Complex::stalk(Module::simple(&a, 1).unwrap(), 0);
        let s2 = Complex::stalk(Module::simple(&a, 2).unwrap(), 0);
        assert_eq!(derived_hom_dims(&s1, &s2, 0..=5).unwrap(), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(derived_hom_dims(&s2, &s1, 0..=5).unwrap(), vec![0; 6]);
        // shifting the target moves the pattern
        assert_eq!(derived_hom_dim(&s1, &s1.shift(2), 0).unwrap(), 1);
        assert_eq!(derived_hom_dim(&s1, &s1.shift(-1), 1).unwrap(), 1);
        assert_eq!(derived_hom_dim(&s1, &s1.shift(-1), 0).unwrap(), 0);
    }

    #[test]
    fn reversed_simples_are_not_semiorthogonal() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let s = |i| Complex::stalk(Module::simple(&a, i).unwrap(), 0);
        let good = check_semiorthogonal_sequence(&[s(1), s(2)], 6).unwrap();
        assert!(good.verdict);
        let bad = check_semiorthogonal_sequence(&[s(2), s(1)], 6).unwrap();
        assert!(!bad.verdict);
        let e = bad.offending().unwrap();
        assert_eq!((e.later, e.earlier, e.degree, e.dim), (1, 0, 1, 1));
        assert!(check_semiorthogonal_sequence(&[s(1)], 6).unwrap().verdict);
    }
}
