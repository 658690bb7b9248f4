//! Fibers `Gamma / (t - c)` and truncations `Gamma / t^N` as structure
//! constant algebras, and the identification of the basic fiber at `t = 0`
//! with `Lambda_r`.

use std::sync::Arc;

use super::ValuationOrder;
use crate::algebra::{basic_algebra, build_cyclic_nakayama, Algebra, AlgebraMorphism, BasicAlgebra, Grading, PathAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{mod_pow, Matrix};

fn entry_label(a: usize, b: usize) -> String {
    format!("E{},{}", a + 1, b + 1)
}

/// The fiber at `t = c`, in the basis `E_ab` standing for `t^{v_ab} E_ab`:
/// `E_ab E_bd = c^{v_ab + v_bd - v_ad} E_ad` with `0^0 = 1`.
pub fn fiber(o: &ValuationOrder, c: u64) -> Result<Arc<Algebra>> {
    let n = o.size();
    let p = o.modulus();
    let c = c % p;
    let mut table = vec![Vec::new(); n.pow(4)];
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let e = o.v(a, b) + o.v(b, d) - o.v(a, d);
                if e < 0 {
                    return Err(Error::InvalidParameter("valuation matrix is not an order".into()));
                }
                let coeff = mod_pow(c, e as u64, p);
                if coeff != 0 {
                    table[(a * n + b) * n * n + b * n + d] = vec![(a * n + d, coeff)];
                }
            }
        }
    }
    let mut one = vec![0u64; n * n];
    for a in 0..n {
        one[a * n + a] = 1;
    }
    let labels = (0..n * n).map(|i| entry_label(i / n, i % n)).collect();
    Ok(Arc::new(Algebra::new(p, n * n, table, one, labels)?))
}

/// `Gamma / t^N Gamma` with basis `t^e E_ab` for `v_ab <= e < v_ab + N`.
#[derive(Clone, Debug)]
pub struct TruncatedOrderAlgebra {
    order: ValuationOrder,
    trunc: usize,
    algebra: Arc<Algebra>,
}

impl TruncatedOrderAlgebra {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn order(&self) -> &ValuationOrder {
        &self.order
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Basis index of `t^e E_ab`, if it is nonzero in the truncation.
    pub fn index(&self, a: usize, b: usize, e: i64) -> Option<usize> {
        let n = self.order.size();
        let k = e - self.order.v(a, b);
        (a < n && b < n && k >= 0 && (k as usize) < self.trunc).then(|| (a * n + b) * self.trunc + k as usize)
    }

    /// The central element `t = sum_a t E_aa`.
    pub fn t_element(&self) -> Result<Vec<u64>> {
        let mut x = vec![0u64; self.algebra.dim()];
        for a in 0..self.order.size() {
            let i = self
                .index(a, a, 1)
                .ok_or_else(|| Error::InvalidParameter("t vanishes in Gamma / t".into()))?;
            x[i] = 1;
        }
        Ok(x)
    }
}

/// Builds `Gamma / t^N`; for basic standard orders the result carries the
/// grading by the diagonal idempotents, with arrows `E_{a,a+1}` and `t E_{r,1}`.
pub fn truncated_algebra(o: &ValuationOrder, trunc: usize) -> Result<TruncatedOrderAlgebra> {
    if trunc == 0 {
        return Err(Error::InvalidParameter("truncation must be positive".into()));
    }
    let n = o.size();
    let p = o.modulus();
    let dim = n * n * trunc;
    let idx = |a: usize, b: usize, k: usize| (a * n + b) * trunc + k;
    let mut table = vec![Vec::new(); dim * dim];
    for a in 0..n {
        for b in 0..n {
            for k in 0..trunc {
                let e = o.v(a, b) + k as i64;
                for d in 0..n {
                    for l in 0..trunc {
                        let f = o.v(b, d) + l as i64;
                        let g = e + f - o.v(a, d);
                        if g < 0 {
                            return Err(Error::InvalidParameter("valuation matrix is not an order".into()));
                        }
                        if (g as usize) < trunc {
                            table[idx(a, b, k) * dim + idx(b, d, l)] = vec![(idx(a, d, g as usize), 1)];
                        }
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; dim];
    for a in 0..n {
        one[idx(a, a, 0)] = 1;
    }
    let labels = (0..dim)
        .map(|i| {
            let (ab, k) = (i / trunc, i % trunc);
            let (a, b) = (ab / n, ab % n);
            match o.v(a, b) + k as i64 {
                0 => entry_label(a, b),
                1 => format!("t{}", entry_label(a, b)),
                e => format!("t^{e}{}", entry_label(a, b)),
            }
        })
        .collect();
    let mut algebra = Algebra::new(p, dim, table, one, labels)?;
    let mut out = TruncatedOrderAlgebra {
        order: o.clone(),
        trunc,
        algebra: Arc::new(algebra.clone()),
    };
    if o.is_basic() {
        let wrap = out.index(n - 1, 0, 1);
        let mut arrows: Vec<usize> = (0..n.saturating_sub(1)).filter_map(|a| out.index(a, a + 1, 0)).collect();
        arrows.extend(wrap);
        let idempotents: Vec<usize> = (0..n).map(|a| idx(a, a, 0)).collect();
        let grading = Grading {
            vertices: n,
            src: (0..dim).map(|i| i / trunc / n).collect(),
            tgt: (0..dim).map(|i| i / trunc % n).collect(),
            radical: (0..dim).filter(|i| !idempotents.contains(i)).collect(),
            idempotents,
            arrows,
        };
        algebra = algebra.with_grading(grading)?;
        out.algebra = Arc::new(algebra);
    }
    Ok(out)
}

/// The verified isomorphism `Lambda_r -> basic algebra of Gamma / t Gamma`.
#[derive(Clone, Debug)]
pub struct FiberIso {
    pub lambda: PathAlgebra,
    pub fiber: Arc<Algebra>,
    pub basic: BasicAlgebra,
    pub morphism: AlgebraMorphism,
    /// Row index of the idempotent `E_{alpha_i alpha_i}` for each vertex.
    pub corners: Vec<usize>,
}

impl FiberIso {
    /// `phi^{-1}`: basic fiber to `Lambda_r`.
    pub fn inverse(&self) -> Result<AlgebraMorphism> {
        self.morphism.inverse()
    }
}

/// Reduces `Gamma / t` to its basic algebra with the block-corner idempotents
/// and checks that `e_i -> E_{alpha_i alpha_i}`, `mu_{i,i+1} -> E_{alpha_i alpha_{i+1}}`
/// (the class of `t E_{alpha_r alpha_1}` at the wrap) is an isomorphism.
pub fn fiber_basic_iso_to_lambda(o: &ValuationOrder) -> Result<FiberIso> {
    let corners = o
        .block_corners()
        .ok_or_else(|| Error::InvalidParameter("Morita identification needs a standard order".into()))?;
    let r = corners.len();
    let n = o.size();
    let p = o.modulus();
    let f = fiber(o, 0)?;
    let diag: Vec<usize> = (0..n).map(|a| a * n + a).collect();
    let basic = basic_algebra(&f, Some(&diag))?;
    let expected: Vec<usize> = corners.iter().map(|&a| a * n + a).collect();
    if basic.idempotents != expected {
        return Err(Error::VerificationFailed(format!(
            "basic algebra chose idempotents {:?}, expected the block corners {expected:?}",
            basic.idempotents
        )));
    }
    let lambda = build_cyclic_nakayama(r, p)?;
    let b = &basic.algebra;
    let coords = |a: usize, c: usize| basic.coordinates(&f.basis_vector(a * n + c));
    let vertex_images = corners.iter().map(|&a| coords(a, a)).collect::<Result<Vec<_>>>()?;
    let arrow_images = (0..r)
        .map(|i| coords(corners[i], corners[(i + 1) % r]))
        .collect::<Result<Vec<_>>>()?;
    let mut m = Matrix::zeros(lambda.algebra().dim(), b.dim(), p);
    for (row, path) in lambda.paths().iter().enumerate() {
        let mut img = vertex_images[path.source].clone();
        for &arrow in &path.arrows {
            img = b.mul(&img, &arrow_images[arrow]);
        }
        for (c, &x) in img.iter().enumerate() {
            m.set(row, c, x);
        }
    }
    let morphism = AlgebraMorphism::new(lambda.algebra().clone(), b.clone(), m)?;
    let witness = morphism.verify_isomorphism()?;
    if !witness.is_iso() {
        return Err(Error::VerificationFailed(format!(
            "generator assignment is not an isomorphism: {witness:?}"
        )));
    }
    Ok(FiberIso {
        lambda,
        fiber: f,
        basic,
        morphism,
        corners,
    })
}
