//! Finite-dimensional right modules given by action matrices.
//!
//! An element is a row vector `m`; the action of an algebra element `a` is
//! `m -> m * rho(a)`, so `rho(ab) = rho(a) rho(b)`. A module map `M -> N` is
//! a `dim M x dim N` matrix `F` with `rho_M(a) F = F rho_N(a)`.
//!
//! Over a graded algebra every module keeps a basis adapted to the vertex
//! idempotents, and public vertex arguments are numbered from 1.

mod hom;
mod iso;
mod random;

pub use hom::{hom_dim, hom_space, is_module_map};
pub use iso::{is_isomorphic, is_isomorphic_seeded, uniserial_comparison};
pub use random::random_module;

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
    vertex: Option<Vec<usize>>,
    projective_summands: Option<Vec<usize>>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.dim == other.dim
            && self.action == other.action
            && self.vertex == other.vertex
            && self.projective_summands == other.projective_summands
    }
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_vertex(algebra: &Algebra, i: usize) -> Result<usize> {
    let g = algebra.require_grading()?;
    if i == 0 || i > g.vertices {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            count: g.vertices,
        });
    }
    Ok(i - 1)
}

impl Module {
    /// Builds a module from one action matrix per algebra basis element and
    /// verifies the module axioms. Over a graded algebra the basis is
    /// replaced by one adapted to the vertex idempotents if necessary.
    pub fn from_actions(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::NotAModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::NotAModule(format!(
                "{}x{} action matrix on a module of dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        let m = Module::unchecked(algebra, dim, action);
        m.verify()?;
        Ok(m)
    }

    /// Trusted constructor for actions derived from existing modules.
    pub(crate) fn unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Self {
        let mut m = Module {
            algebra,
            dim,
            action,
            vertex: None,
            projective_summands: None,
        };
        m.regrade();
        m
    }

    /// Checks that the identity acts trivially and `rho(ab) = rho(a) rho(b)`.
    pub fn verify(&self) -> Result<()> {
        let a = &self.algebra;
        if self.element_action(a.one()) != Matrix::identity(self.dim, a.modulus()) {
            return Err(Error::NotAModule("identity does not act trivially".into()));
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let mut xy = vec![0u64; a.dim()];
                for &(c, v) in a.mul_basis(x, y) {
                    xy[c] = v;
                }
                if &self.action[x] * &self.action[y] != self.element_action(&xy) {
                    return Err(Error::NotAModule(format!(
                        "action is not multiplicative on ({}, {})",
                        a.labels()[x],
                        a.labels()[y]
                    )));
                }
            }
        }
        Ok(())
    }

    fn regrade(&mut self) {
        let Some(g) = self.algebra.grading() else {
            return;
        };
        let idem: Vec<&Matrix> = g.idempotents.iter().map(|&e| &self.action[e]).collect();
        let labels: Option<Vec<usize>> = (0..self.dim)
            .map(|i| {
                let mut found = None;
                for (v, e) in idem.iter().enumerate() {
                    let row = e.row(i);
                    if row.iter().enumerate().all(|(j, &x)| x == u64::from(i == j)) {
                        found = Some(v);
                    } else if row.iter().any(|&x| x != 0) {
                        return None;
                    }
                }
                found
            })
            .collect();
        if let Some(labels) = labels {
            self.vertex = Some(labels);
            return;
        }
        let p = self.algebra.modulus();
        let mut basis = Matrix::zeros(0, self.dim, p);
        let mut labels = Vec::new();
        for (v, e) in idem.iter().enumerate() {
            let block = e.row_space_basis();
            labels.extend(std::iter::repeat(v).take(block.rows()));
            basis = basis.vstack(&block);
        }
        let inv = basis.inverse().expect("vertex components span the module");
        self.action = self.action.iter().map(|a| &(&basis * a) * &inv).collect();
        self.vertex = Some(labels);
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let p = algebra.modulus();
        let action = vec![Matrix::zeros(0, 0, p); algebra.dim()];
        let mut m = Module::unchecked(algebra, 0, action);
        m.projective_summands = Some(Vec::new());
        m
    }

    /// The simple module at vertex `i` (1-based).
    pub fn simple(algebra: &Arc<Algebra>, i: usize) -> Result<Self> {
        let v = check_vertex(algebra, i)?;
        let g = algebra.require_grading()?;
        let p = algebra.modulus();
        let e = g.idempotents[v];
        let action = (0..algebra.dim())
            .map(|x| Matrix::from_vec(1, 1, p, vec![u64::from(x == e)]))
            .collect();
        Ok(Module::unchecked(algebra.clone(), 1, action))
    }

    /// `P_i = e_i A`, spanned by basis elements starting at vertex `i` (1-based).
    pub fn projective(algebra: &Arc<Algebra>, i: usize) -> Result<Self> {
        let v = check_vertex(algebra, i)?;
        let basis = algebra.projective_basis(v)?;
        let pos = position_map(algebra.dim(), &basis);
        let p = algebra.modulus();
        let d = basis.len();
        let action = (0..algebra.dim())
            .map(|a| {
                let mut m = Matrix::zeros(d, d, p);
                for (j, &b) in basis.iter().enumerate() {
                    for &(c, val) in algebra.mul_basis(b, a) {
                        m.set(j, pos[c].expect("e_v A is a right ideal"), val);
                    }
                }
                m
            })
            .collect();
        let mut m = Module::unchecked(algebra.clone(), d, action);
        m.projective_summands = Some(vec![v]);
        Ok(m)
    }

    /// `I_i = D(A e_i)`: the dual of the left ideal `A e_i` (1-based vertex).
    pub fn injective(algebra: &Arc<Algebra>, i: usize) -> Result<Self> {
        let v = check_vertex(algebra, i)?;
        let basis = algebra.left_projective_basis(v)?;
        let pos = position_map(algebra.dim(), &basis);
        let p = algebra.modulus();
        let d = basis.len();
        // (b* . a)(y) = b*(a y)
        let action = (0..algebra.dim())
            .map(|a| {
                let mut m = Matrix::zeros(d, d, p);
                for (j, &y) in basis.iter().enumerate() {
                    for &(c, val) in algebra.mul_basis(a, y) {
                        m.set(pos[c].expect("A e_v is a left ideal"), j, val);
                    }
                }
                m
            })
            .collect();
        Ok(Module::unchecked(algebra.clone(), d, action))
    }

    pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[Module]) -> Result<Self> {
        for m in parts {
            if !same_algebra(algebra, &m.algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let p = algebra.modulus();
        let dim = parts.iter().map(|m| m.dim).sum();
        let action = (0..algebra.dim())
            .map(|a| {
                let mut out = Matrix::zeros(dim, dim, p);
                let mut off = 0;
                for m in parts {
                    out.paste(off, off, &m.action[a]);
                    off += m.dim;
                }
                out
            })
            .collect();
        let mut sum = Module::unchecked(algebra.clone(), dim, action);
        sum.projective_summands = parts
            .iter()
            .map(|m| m.projective_summands.clone())
            .collect::<Option<Vec<_>>>()
            .map(|v| v.concat());
        Ok(sum)
    }

    /// `P_{v_1} + ... + P_{v_k}` with 0-based vertices.
    pub fn projective_sum(algebra: &Arc<Algebra>, vertices: &[usize]) -> Result<Self> {
        let parts = vertices
            .iter()
            .map(|&v| Module::projective(algebra, v + 1))
            .collect::<Result<Vec<_>>>()?;
        Module::direct_sum(algebra, &parts)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn modulus(&self) -> u64 {
        self.algebra.modulus()
    }

    pub fn action(&self, a: usize) -> &Matrix {
        &self.action[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Vertex (0-based) of each basis vector, over a graded algebra.
    pub fn vertex_labels(&self) -> Option<&[usize]> {
        self.vertex.as_deref()
    }

    /// Vertices (0-based) of the indecomposable projective summands, when
    /// the module was built as a sum of `e_v A`.
    pub fn projective_summands(&self) -> Option<&[usize]> {
        self.projective_summands.as_deref()
    }

    pub fn with_projective_summands(mut self, tags: Option<Vec<usize>>) -> Self {
        self.projective_summands = tags;
        self
    }

    pub fn is_tagged_projective(&self) -> bool {
        self.projective_summands.is_some()
    }

    pub fn dim_vector(&self) -> Result<Vec<usize>> {
        let g = self.algebra.require_grading()?;
        let mut dv = vec![0; g.vertices];
        for &v in self.vertex.as_ref().ok_or(Error::NotGraded)? {
            dv[v] += 1;
        }
        Ok(dv)
    }

    /// Basis indices lying in `M e_v` (0-based vertex).
    pub fn vertex_basis(&self, v: usize) -> Vec<usize> {
        match &self.vertex {
            Some(labels) => (0..self.dim).filter(|&i| labels[i] == v).collect(),
            None => Vec::new(),
        }
    }

    pub fn element_action(&self, x: &[u64]) -> Matrix {
        let p = self.modulus();
        let mut out = Matrix::zeros(self.dim, self.dim, p);
        for (a, &c) in x.iter().enumerate() {
            if c != 0 {
                out.add_scaled(&self.action[a], c);
            }
        }
        out
    }

    pub fn act(&self, m: &[u64], a: usize) -> Vec<u64> {
        self.action[a].apply_row(m)
    }

    /// Splits a subspace into its vertex components, each in RREF.
    fn homogeneous_basis(&self, rows: &Matrix) -> Matrix {
        let p = self.modulus();
        match self.algebra.grading() {
            Some(g) => {
                let mut out = Matrix::zeros(0, self.dim, p);
                for &e in &g.idempotents {
                    let part = rows.try_mul(&self.action[e]).expect("shape");
                    out = out.vstack(&part.row_space_basis());
                }
                out
            }
            None => rows.row_space_basis(),
        }
    }

    /// The submodule spanned by the given rows, which must be closed under
    /// the action. Returns the module and its inclusion (rows = new basis).
    pub fn submodule(&self, rows: &Matrix) -> Result<(Module, Matrix)> {
        let basis = self.homogeneous_basis(rows);
        if basis.rows() != rows.row_space_basis().rows() {
            return Err(Error::NotAModule("subspace is not closed under idempotents".into()));
        }
        let k = basis.rows();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for a in &self.action {
            let img = &basis * a;
            let coords = Matrix::solve_left(&basis, &img)
                .map_err(|_| Error::NotAModule("subspace is not a submodule".into()))?;
            action.push(coords);
        }
        Ok((Module::unchecked(self.algebra.clone(), k, action), basis))
    }

    /// The submodule generated by the given vectors.
    pub fn generated_submodule(&self, rows: &Matrix) -> Result<(Module, Matrix)> {
        let gens = self.algebra.generators();
        let mut span = rows.row_space_basis();
        loop {
            let mut grown = span.clone();
            for &g in &gens {
                grown = grown.vstack(&(&span * &self.action[g]));
            }
            let grown = grown.row_space_basis();
            if grown.rows() == span.rows() {
                break;
            }
            span = grown;
        }
        self.submodule(&span)
    }

    /// `M / U` for a submodule `U` spanned by the given rows. Returns the
    /// quotient and the projection `M -> M/U`.
    pub fn quotient(&self, rows: &Matrix) -> Result<(Module, Matrix)> {
        let p = self.modulus();
        let sub = self.homogeneous_basis(rows);
        // complement by standard basis vectors, vertex by vertex
        let mut span = sub.clone();
        let mut complement = Vec::new();
        let mut rank = span.rank();
        let order: Vec<usize> = match &self.vertex {
            Some(labels) => {
                let mut idx: Vec<usize> = (0..self.dim).collect();
                idx.sort_by_key(|&i| labels[i]);
                idx
            }
            None => (0..self.dim).collect(),
        };
        for i in order {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            let cand = span.vstack(&Matrix::from_row_vectors(self.dim, p, &[e]));
            let cr = cand.rank();
            if cr > rank {
                rank = cr;
                span = cand;
                complement.push(i);
            }
        }
        let k = sub.rows();
        let inv = span
            .inverse()
            .ok_or_else(|| Error::NotAModule("submodule rows are dependent".into()))?;
        let q = complement.len();
        let cols: Vec<usize> = (k..k + q).collect();
        let all_rows: Vec<usize> = (0..self.dim).collect();
        let proj = inv.select(&all_rows, &cols);
        let comp = Matrix::identity(self.dim, p).select_rows(&complement);
        let mut action = Vec::with_capacity(self.algebra.dim());
        for a in &self.action {
            // check closure of U
            let img = &sub * a;
            if !(&img * &proj).is_zero() {
                return Err(Error::NotAModule("subspace is not a submodule".into()));
            }
            action.push(&(&comp * a) * &proj);
        }
        Ok((Module::unchecked(self.algebra.clone(), q, action), proj))
    }

    /// `M rad(A)`, as rows of `M`.
    pub fn radical_rows(&self) -> Result<Matrix> {
        let rad = self.algebra.radical_basis()?;
        let mut rows = Matrix::zeros(0, self.dim, self.modulus());
        for k in 0..rad.rows() {
            let act = self.element_action(rad.row(k));
            rows = rows.vstack(&act);
        }
        Ok(self.homogeneous_basis(&rows))
    }

    pub fn radical(&self) -> Result<(Module, Matrix)> {
        let rows = self.radical_rows()?;
        self.submodule(&rows)
    }

    pub fn top(&self) -> Result<(Module, Matrix)> {
        let rows = self.radical_rows()?;
        self.quotient(&rows)
    }

    /// Elements annihilated by the radical.
    pub fn socle(&self) -> Result<(Module, Matrix)> {
        let rad = self.algebra.radical_basis()?;
        let p = self.modulus();
        let mut big = Matrix::zeros(self.dim, 0, p);
        for k in 0..rad.rows() {
            big = big.hstack(&self.element_action(rad.row(k)));
        }
        let rows = if big.cols() == 0 {
            Matrix::identity(self.dim, p)
        } else {
            big.left_kernel()
        };
        self.submodule(&rows)
    }

    /// Radical layers `rad^k M / rad^{k+1} M` as dimension vectors.
    pub fn radical_layers(&self) -> Result<Vec<Vec<usize>>> {
        let mut layers = Vec::new();
        let mut current = self.clone();
        while !current.is_zero() {
            let (top, _) = current.top()?;
            if top.is_zero() {
                return Err(Error::NotAModule("radical series does not terminate".into()));
            }
            layers.push(top.dim_vector()?);
            current = current.radical()?.0;
        }
        Ok(layers)
    }

    /// Projective cover `P -> M` over a graded algebra. Generators are
    /// chosen canonically: standard basis vectors of each vertex component
    /// extending the radical, in increasing order.
    pub fn projective_cover(&self) -> Result<(Module, Matrix)> {
        let g = self.algebra.require_grading()?.clone();
        let p = self.modulus();
        let rad = self.radical_rows()?;
        let mut span = rad.clone();
        let mut rank = span.rows();
        let mut generators: Vec<(usize, usize)> = Vec::new();
        for v in 0..g.vertices {
            for i in self.vertex_basis(v) {
                let mut e = vec![0u64; self.dim];
                e[i] = 1;
                let cand = span.vstack(&Matrix::from_row_vectors(self.dim, p, &[e]));
                let cr = cand.rank();
                if cr > rank {
                    rank = cr;
                    span = cand;
                    generators.push((v, i));
                }
            }
        }
        let vertices: Vec<usize> = generators.iter().map(|&(v, _)| v).collect();
        let cover = Module::projective_sum(&self.algebra, &vertices)?;
        let images: Vec<Vec<u64>> = generators
            .iter()
            .map(|&(_, i)| {
                let mut e = vec![0u64; self.dim];
                e[i] = 1;
                e
            })
            .collect();
        let map = map_from_generators(&cover, self, &images)?;
        Ok((cover, map))
    }

    /// Kernel of a module map out of `self`, with its inclusion.
    pub fn kernel_of(&self, f: &Matrix) -> Result<(Module, Matrix)> {
        if f.rows() != self.dim {
            return Err(Error::ShapeMismatch("map does not start at this module".into()));
        }
        let rows = if f.cols() == 0 {
            Matrix::identity(self.dim, self.modulus())
        } else {
            f.left_kernel()
        };
        self.submodule(&rows)
    }

    /// Restriction of scalars along `phi: B -> A` where `A` is this module's algebra.
    pub fn pullback(&self, phi: &AlgebraMorphism) -> Result<Module> {
        if !same_algebra(phi.target(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let action = (0..phi.source().dim())
            .map(|b| self.element_action(phi.matrix().row(b)))
            .collect();
        Ok(Module::unchecked(phi.source().clone(), self.dim, action))
    }

    /// The twist `M_sigma` with `a` acting as `sigma^{-1}(a)` does on `M`.
    /// With this convention twisting by the rotation sends `S_j` to `S_{j+1}`.
    pub fn twist(&self, sigma: &AlgebraMorphism) -> Result<Module> {
        if !same_algebra(sigma.source(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let inv = sigma.require_automorphism()?;
        let mut out = self.pullback(&inv)?;
        if let (Some(tags), Some(perm)) = (&self.projective_summands, sigma.vertex_permutation()) {
            out.projective_summands = Some(tags.iter().map(|&v| perm[v]).collect());
        }
        Ok(out)
    }
}

fn position_map(n: usize, basis: &[usize]) -> Vec<Option<usize>> {
    let mut pos = vec![None; n];
    for (j, &b) in basis.iter().enumerate() {
        pos[b] = Some(j);
    }
    pos
}

/// The map out of a tagged projective `P = e_{v_1}A + ...` sending the
/// `s`-th generator `e_{v_s}` to `images[s]`, which must lie in `N e_{v_s}`.
pub fn map_from_generators(proj: &Module, target: &Module, images: &[Vec<u64>]) -> Result<Matrix> {
    let tags = proj.projective_summands().ok_or(Error::NotProjectiveTerms)?;
    if tags.len() != images.len() {
        return Err(Error::ShapeMismatch("one image per summand required".into()));
    }
    let a = proj.algebra();
    let g = a.require_grading()?;
    let p = a.modulus();
    let mut out = Matrix::zeros(proj.dim(), target.dim(), p);
    let mut off = 0;
    for (&v, img) in tags.iter().zip(images) {
        let at_v = target.act(img, g.idempotents[v]);
        if &at_v != img {
            return Err(Error::NotAModule("generator image outside its vertex".into()));
        }
        let basis = a.projective_basis(v)?;
        for (j, &b) in basis.iter().enumerate() {
            let row = target.act(img, b);
            for (c, &x) in row.iter().enumerate() {
                out.set(off + j, c, x);
            }
        }
        off += basis.len();
    }
    Ok(out)
}

/// Offsets and generator rows of the summands of a tagged projective.
pub fn generator_rows(proj: &Module) -> Result<Vec<(usize, usize)>> {
    let tags = proj.projective_summands().ok_or(Error::NotProjectiveTerms)?;
    let a = proj.algebra();
    let g = a.require_grading()?;
    let mut out = Vec::with_capacity(tags.len());
    let mut off = 0;
    for &v in tags {
        let basis = a.projective_basis(v)?;
        let j = basis
            .iter()
            .position(|&b| b == g.idempotents[v])
            .expect("e_v lies in e_v A");
        out.push((v, off + j));
        off += basis.len();
    }
    Ok(out)
}

/// Linear combination `sum c_k m_k` of matrices.
pub(crate) fn combine(mats: &[Matrix], coeffs: &[u64], rows: usize, cols: usize, p: u64) -> Matrix {
    let mut out = Matrix::zeros(rows, cols, p);
    for (m, &c) in mats.iter().zip(coeffs) {
        out.add_scaled(m, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_cyclic_nakayama, rotation_automorphism};

    fn lambda(r: usize) -> Arc<Algebra> {
        build_cyclic_nakayama(r, 101).unwrap().algebra().clone()
    }

    #[test]
    fn simple_dimension_vectors() {
        let a = lambda(3);
        let s2 = Module::simple(&a, 2).unwrap();
        assert_eq!(s2.dim_vector().unwrap(), vec![0, 1, 0]);
        assert!(s2.verify().is_ok());
        assert_eq!(Module::simple(&lambda(1), 1).unwrap().dim(), 1);
        assert!(matches!(
            Module::simple(&a, 4),
            Err(Error::VertexOutOfRange { vertex: 4, count: 3 })
        ));
    }

    #[test]
    fn projective_and_injective_shapes() {
        let a = lambda(3);
        let p1 = Module::projective(&a, 1).unwrap();
        assert_eq!(p1.dim_vector().unwrap(), vec![1, 1, 1]);
        assert!(p1.verify().is_ok());
        let i1 = Module::injective(&a, 1).unwrap();
        assert!(i1.verify().is_ok());
        assert_eq!(i1.dim(), 3);
    }

    #[test]
    fn top_and_radical() {
        let a = lambda(2);
        let p1 = Module::projective(&a, 1).unwrap();
        let (top, _) = p1.top().unwrap();
        assert_eq!(top.dim_vector().unwrap(), vec![1, 0]);
        let s1 = Module::simple(&a, 1).unwrap();
        assert!(s1.radical().unwrap().0.is_zero());
        let (soc, _) = p1.socle().unwrap();
        assert_eq!(soc.dim_vector().unwrap(), vec![0, 1]);
    }

    #[test]
    fn cover_of_radical_of_p1() {
        let a = lambda(3);
        let p1 = Module::projective(&a, 1).unwrap();
        let (rad, _) = p1.radical().unwrap();
        let (cover, pi) = rad.projective_cover().unwrap();
        assert_eq!(cover.projective_summands(), Some(&[1usize][..]));
        let (k, _) = cover.kernel_of(&pi).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(is_module_map(&cover, &rad, &pi));
    }

    #[test]
    fn twist_rotates_simples() {
        let l = build_cyclic_nakayama(3, 101).unwrap();
        let sigma = rotation_automorphism(&l).unwrap();
        let a = l.algebra();
        let s3 = Module::simple(a, 3).unwrap();
        let t = s3.twist(&sigma).unwrap();
        assert_eq!(t, Module::simple(a, 1).unwrap());
        let id = AlgebraMorphism::identity(a.clone());
        let p2 = Module::projective(a, 2).unwrap();
        assert_eq!(p2.twist(&id).unwrap(), p2);
    }

    #[test]
    fn quotient_by_random_submodule_is_a_module() {
        let a = lambda(3);
        let m = Module::projective_sum(&a, &[0, 1]).unwrap();
        let gen = Matrix::from_rows_i64(101, &[vec![0, 1, 0, 0, 5, 0]]);
        let (sub, _) = m.generated_submodule(&gen).unwrap();
        assert!(sub.verify().is_ok());
        let (q, proj) = m.quotient(&m.generated_submodule(&gen).unwrap().1).unwrap();
        assert!(q.verify().is_ok());
        assert!(is_module_map(&m, &q, &proj));
        assert_eq!(q.dim() + sub.dim(), m.dim());
    }
}
