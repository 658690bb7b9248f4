//! The skew group algebra `k[t]/(t^r) # mu_r`, where the generator `g` of
//! `mu_r` acts on `t` by a primitive `r`-th root of unity, and its
//! identification with `Lambda_r`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_cyclic_nakayama, Algebra, AlgebraMorphism, PathAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{check_modulus, mod_inv, mod_mul, mod_pow, primitive_root, Matrix};
use crate::module::Module;

#[derive(Clone, Debug)]
pub struct SkewGroupAlgebra {
    r: usize,
    zeta: u64,
    algebra: Arc<Algebra>,
}

impl SkewGroupAlgebra {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn zeta(&self) -> u64 {
        self.zeta
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Basis index of `t^a g^b`.
    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.r + b % self.r
    }

    /// The character idempotent `eps_i = (1/r) sum_b zeta^{-ib} g^b`.
    pub fn character_idempotent(&self, i: usize) -> Vec<u64> {
        let (r, p) = (self.r, self.algebra.modulus());
        let inv_r = mod_inv(r as u64 % p, p);
        let zinv = mod_inv(self.zeta, p);
        let mut x = vec![0u64; r * r];
        for b in 0..r {
            x[self.index(0, b)] = mod_mul(inv_r, mod_pow(zinv, (i * b) as u64, p), p);
        }
        x
    }
}

/// Builds `k[t]/(t^r) # mu_r` over `F_p` with basis `t^a g^b` and
/// `(t^a g^b)(t^c g^d) = zeta^{bc} t^{a+c} g^{b+d}`, so `g t = zeta t g`.
/// `zeta` is `gamma^{(p-1)/r}` for the smallest primitive root `gamma`.
pub fn build_skew_group(r: usize, p: u64) -> Result<SkewGroupAlgebra> {
    check_modulus(p)?;
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    if (p - 1) % r as u64 != 0 {
        return Err(Error::NoRootOfUnity { r, p });
    }
    let zeta = mod_pow(primitive_root(p), (p - 1) / r as u64, p);
    let dim = r * r;
    let mut table = vec![Vec::new(); dim * dim];
    for a in 0..r {
        for b in 0..r {
            for c in 0..r - a {
                for d in 0..r {
                    let coeff = mod_pow(zeta, (b * c) as u64, p);
                    table[(a * r + b) * dim + c * r + d] = vec![((a + c) * r + (b + d) % r, coeff)];
                }
            }
        }
    }
    let mut one = vec![0u64; dim];
    one[0] = 1;
    let labels = (0..dim)
        .map(|i| match (i / r, i % r) {
            (0, 0) => "1".to_string(),
            (0, b) => format!("g^{b}"),
            (a, 0) => format!("t^{a}"),
            (a, b) => format!("t^{a}g^{b}"),
        })
        .collect();
    let algebra = Algebra::new(p, dim, table, one, labels)?;
    if let Some((x, y, z)) = algebra.first_nonassociative_triple() {
        return Err(Error::VerificationFailed(format!("skew group algebra not associative at ({x}, {y}, {z})")));
    }
    Ok(SkewGroupAlgebra {
        r,
        zeta,
        algebra: Arc::new(algebra),
    })
}

/// The verified isomorphism `Lambda_r -> k[t]/(t^r) # mu_r` with
/// `e_v -> eps_{c(v)}` and `mu_{v,v+1} -> eps_{c(v)} t eps_{c(v+1)}`, where
/// `c(v) = offset + orientation * v (mod r)`.
#[derive(Clone, Debug)]
pub struct SkewIso {
    pub lambda: PathAlgebra,
    pub morphism: AlgebraMorphism,
    pub offset: usize,
    pub orientation: i64,
}

impl SkewIso {
    pub fn character_of_vertex(&self, v: usize) -> usize {
        let r = self.lambda.vertex_count() as i64;
        (self.offset as i64 + self.orientation * v as i64).rem_euclid(r) as usize
    }
}

fn candidate(s: &SkewGroupAlgebra, lambda: &PathAlgebra, offset: usize, orientation: i64) -> Result<AlgebraMorphism> {
    let r = s.r as i64;
    let a = &s.algebra;
    let c = |v: usize| (offset as i64 + orientation * v as i64).rem_euclid(r) as usize;
    let t = a.basis_vector(s.index(1 % s.r, 0));
    let vertex: Vec<Vec<u64>> = (0..s.r).map(|v| s.character_idempotent(c(v))).collect();
    let arrow: Vec<Vec<u64>> = (0..s.r)
        .map(|v| a.mul(&a.mul(&vertex[v], &t), &vertex[(v + 1) % s.r]))
        .collect();
    let mut m = Matrix::zeros(lambda.algebra().dim(), a.dim(), a.modulus());
    for (row, path) in lambda.paths().iter().enumerate() {
        let mut img = vertex[path.source].clone();
        for &x in &path.arrows {
            img = a.mul(&img, &arrow[x]);
        }
        for (col, &x) in img.iter().enumerate() {
            m.set(row, col, x);
        }
    }
    AlgebraMorphism::new(lambda.algebra().clone(), a.clone(), m)
}

/// Searches the index normalizations in a fixed order and returns the first
/// assignment that verifies as an isomorphism.
pub fn iso_to_lambda(s: &SkewGroupAlgebra) -> Result<SkewIso> {
    let lambda = build_cyclic_nakayama(s.r, s.algebra.modulus())?;
    for orientation in [1, -1] {
        for offset in 0..s.r {
            let morphism = candidate(s, &lambda, offset, orientation)?;
            if morphism.verify_isomorphism()?.is_iso() {
                return Ok(SkewIso {
                    lambda,
                    morphism,
                    offset,
                    orientation,
                });
            }
        }
    }
    Err(Error::VerificationFailed("no index normalization gives an isomorphism".into()))
}

/// The 1-dimensional module on which `g` acts by `zeta^i` and `t` by zero.
pub fn character_module(s: &SkewGroupAlgebra, i: usize) -> Result<Module> {
    let p = s.algebra.modulus();
    let action = (0..s.algebra.dim())
        .map(|x| {
            let (a, b) = (x / s.r, x % s.r);
            let v = if a == 0 { mod_pow(s.zeta, (i * b) as u64, p) } else { 0 };
            Matrix::from_vec(1, 1, p, vec![v])
        })
        .collect();
    Module::from_actions(s.algebra.clone(), 1, action)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleCorrespondence {
    /// `perm[i] = v`: the character `zeta^i` pulls back to `S_{v+1}`.
    pub perm: Vec<usize>,
    /// `perm[i+1] - perm[i]` (mod r), when constant.
    pub shift: Option<i64>,
}

/// Pulls each character module back along the isomorphism and reads off
/// which simple it becomes.
pub fn simple_correspondence(s: &SkewGroupAlgebra, iso: &SkewIso) -> Result<SimpleCorrespondence> {
    let r = s.r;
    let lambda = iso.lambda.algebra();
    let g = lambda.require_grading()?;
    let mut perm = Vec::with_capacity(r);
    for i in 0..r {
        let m = character_module(s, i)?.pullback(&iso.morphism)?;
        let hits: Vec<usize> = (0..r).filter(|&v| !m.action(g.idempotents[v]).is_zero()).collect();
        if hits.len() != 1 || m != Module::simple(lambda, hits[0] + 1)? {
            return Err(Error::NotBijective);
        }
        perm.push(hits[0]);
    }
    let mut seen = vec![false; r];
    for &v in &perm {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotBijective);
        }
    }
    let shift = (r > 0).then(|| (perm[1 % r] as i64 - perm[0] as i64).rem_euclid(r as i64)).filter(|&d| {
        (0..r).all(|i| (perm[(i + 1) % r] as i64 - perm[i] as i64).rem_euclid(r as i64) == d)
    });
    let shift = shift.map(|d| if r > 1 && d == r as i64 - 1 { -1 } else { d });
    Ok(SimpleCorrespondence { perm, shift })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rotation_automorphism;

    #[test]
    fn lambda_two_over_five() {
        let s = build_skew_group(2, 5).unwrap();
        assert_eq!(s.zeta(), 4);
        assert_eq!(s.character_idempotent(0), vec![3, 3, 0, 0]);
        assert_eq!(s.character_idempotent(1), vec![3, 2, 0, 0]);
        let a = s.algebra();
        let g = a.basis_vector(s.index(0, 1));
        let t = a.basis_vector(s.index(1, 0));
        let tg = a.basis_vector(s.index(1, 1));
        assert_eq!(a.mul(&g, &t), tg.iter().map(|x| x * 4).collect::<Vec<_>>());
    }

    #[test]
    fn requires_roots_of_unity() {
        assert_eq!(build_skew_group(4, 7).unwrap_err(), Error::NoRootOfUnity { r: 4, p: 7 });
        assert_eq!(build_skew_group(1, 101).unwrap().algebra().dim(), 1);
    }

    #[test]
    fn isomorphisms_and_correspondences() {
        for (r, p) in [(1, 101), (2, 103), (3, 103), (4, 113), (5, 101), (6, 103)] {
            let s = build_skew_group(r, p).unwrap();
            let iso = iso_to_lambda(&s).unwrap();
            let corr = simple_correspondence(&s, &iso).unwrap();
            let mut sorted = corr.perm.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..r).collect::<Vec<_>>());
            if r > 2 {
                assert_eq!(corr.shift, Some(-1));
            }
        }
    }

    #[test]
    fn twist_moves_along_the_correspondence() {
        let s = build_skew_group(4, 113).unwrap();
        let iso = iso_to_lambda(&s).unwrap();
        let sigma = rotation_automorphism(&iso.lambda).unwrap();
        let corr = simple_correspondence(&s, &iso).unwrap();
        for i in 0..4 {
            let m = character_module(&s, i).unwrap().pullback(&iso.morphism).unwrap();
            let next = Module::simple(iso.lambda.algebra(), (corr.perm[i] + 1) % 4 + 1).unwrap();
            assert_eq!(m.twist(&sigma).unwrap(), next);
            assert_eq!(corr.perm[(i + 3) % 4], (corr.perm[i] + 1) % 4);
        }
    }
}
