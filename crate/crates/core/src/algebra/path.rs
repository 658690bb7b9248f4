//! Quivers, paths and monomial quotients of path algebras.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Algebra, AlgebraMorphism, Grading};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Paths longer than this are never enumerated.
const MAX_BASIS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Vertices and arrow endpoints are numbered from 0.
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v + 1,
                        count: vertices,
                    });
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// `Q_r`: arrows `i -> i+1 mod r`, arrow `i` starting at vertex `i`.
    pub fn cyclic(r: usize) -> Self {
        Quiver {
            vertices: r,
            arrows: (0..r).map(|i| (i, (i + 1) % r)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }
}

/// A path: a start vertex followed by composable arrows, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].1)
    }

    fn contains(&self, sub: &Path) -> bool {
        if sub.arrows.is_empty() {
            return false;
        }
        self.arrows.windows(sub.arrows.len()).any(|w| w == sub.arrows.as_slice())
    }

    fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.source + 1);
        }
        let mut verts = vec![self.source + 1];
        verts.extend(self.arrows.iter().map(|&a| q.arrows[a].1 + 1));
        let names: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
        format!("mu[{}]", names.join(","))
    }
}

/// `kQ / I` for a monomial ideal `I`, with the surviving paths as basis.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    relations: Vec<Path>,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    algebra: Arc<Algebra>,
}

impl PathAlgebra {
    /// Builds `kQ/I` where `I` is generated by the given paths. Fails if the
    /// quotient is not finite-dimensional within the enumeration budget.
    pub fn monomial(quiver: Quiver, relations: Vec<Path>, p: u64) -> Result<Self> {
        let survives = |path: &Path| !relations.iter().any(|r| path.contains(r));
        let mut paths: Vec<Path> = Vec::new();
        let mut frontier: Vec<Path> = (0..quiver.vertices).map(Path::trivial).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for path in frontier {
                let t = path.target(&quiver);
                for (a, &(s, _)) in quiver.arrows.iter().enumerate() {
                    if s != t {
                        continue;
                    }
                    let mut longer = path.clone();
                    longer.arrows.push(a);
                    if survives(&longer) {
                        next.push(longer);
                    }
                }
                paths.push(path);
                if paths.len() > MAX_BASIS {
                    return Err(Error::InvalidParameter(
                        "monomial quotient is infinite or too large".into(),
                    ));
                }
            }
            frontier = next;
        }
        // Order by source, then length, then arrows.
        paths.sort_by(|a, b| (a.source, a.len(), &a.arrows).cmp(&(b.source, b.len(), &b.arrows)));
        let index: HashMap<Path, usize> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let dim = paths.len();
        let mut table = vec![Vec::new(); dim * dim];
        for (i, x) in paths.iter().enumerate() {
            for (j, y) in paths.iter().enumerate() {
                if x.target(&quiver) != y.source {
                    continue;
                }
                let mut xy = x.clone();
                xy.arrows.extend_from_slice(&y.arrows);
                if let Some(&k) = index.get(&xy) {
                    table[i * dim + j].push((k, 1));
                }
            }
        }
        let idempotents: Vec<usize> = (0..quiver.vertices)
            .map(|v| index[&Path::trivial(v)])
            .collect();
        let mut one = vec![0u64; dim];
        for &e in &idempotents {
            one[e] = 1;
        }
        let labels = paths.iter().map(|x| x.label(&quiver)).collect();
        let grading = Grading {
            vertices: quiver.vertices,
            idempotents,
            src: paths.iter().map(|x| x.source).collect(),
            tgt: paths.iter().map(|x| x.target(&quiver)).collect(),
            arrows: (0..dim).filter(|&i| paths[i].len() == 1).collect(),
            radical: (0..dim).filter(|&i| !paths[i].is_empty()).collect(),
        };
        let algebra = Algebra::new(p, dim, table, one, labels)?.with_grading(grading)?;
        Ok(PathAlgebra {
            quiver,
            relations,
            paths,
            index,
            algebra: Arc::new(algebra),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn path_index(&self, path: &Path) -> Option<usize> {
        self.index.get(path).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices
    }

    /// For the cyclic quiver: the path of the given length starting at `v`
    /// (0-based), if it survives.
    pub fn cyclic_path(&self, v: usize, len: usize) -> Option<usize> {
        let r = self.quiver.vertices;
        let arrows = (0..len).map(|k| (v + k) % r).collect();
        self.path_index(&Path { source: v, arrows })
    }

    /// True when this is `kQ_r` modulo all paths of length `r`.
    pub fn is_cyclic_nakayama(&self) -> bool {
        let r = self.quiver.vertices;
        r > 0
            && self.quiver == Quiver::cyclic(r)
            && self.paths.len() == r * r
            && self.paths.iter().all(|x| x.len() < r)
    }
}

/// `Lambda_r = kQ_r / (all paths of length r)`, of dimension `r^2`. For
/// `r = 1` the loop itself is a relation, leaving the field.
pub fn build_cyclic_nakayama(r: usize, p: u64) -> Result<PathAlgebra> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let relations = (0..r)
        .map(|i| Path {
            source: i,
            arrows: (0..r).map(|k| (i + k) % r).collect(),
        })
        .collect();
    PathAlgebra::monomial(Quiver::cyclic(r), relations, p)
}

/// The automorphism `sigma` of `Lambda_r` with `e_i -> e_{i+1}` and
/// `mu_{i,i+1} -> mu_{i+1,i+2}`, indices mod `r`.
pub fn rotation_automorphism(a: &PathAlgebra) -> Result<AlgebraMorphism> {
    if !a.is_cyclic_nakayama() {
        return Err(Error::NotCyclicNakayama);
    }
    let r = a.vertex_count();
    let dim = a.algebra.dim();
    let p = a.algebra.modulus();
    let mut m = Matrix::zeros(dim, dim, p);
    for (i, path) in a.paths.iter().enumerate() {
        let rotated = Path {
            source: (path.source + 1) % r,
            arrows: path.arrows.iter().map(|&x| (x + 1) % r).collect(),
        };
        let j = a.path_index(&rotated).ok_or(Error::NotCyclicNakayama)?;
        m.set(i, j, 1);
    }
    AlgebraMorphism::new(a.algebra.clone(), a.algebra.clone(), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for r in 1..=5 {
            assert_eq!(build_cyclic_nakayama(r, 101).unwrap().algebra().dim(), r * r);
        }
    }

    #[test]
    fn lambda_two_products() {
        let l = build_cyclic_nakayama(2, 101).unwrap();
        let a = l.algebra();
        let e1 = l.cyclic_path(0, 0).unwrap();
        let mu12 = l.cyclic_path(0, 1).unwrap();
        let mu21 = l.cyclic_path(1, 1).unwrap();
        assert_eq!(a.mul_basis(e1, mu12), [(mu12, 1)]);
        assert!(a.mul_basis(mu12, mu21).is_empty());
        assert!(a.is_associative());
    }

    #[test]
    fn rotation_sends_last_vertex_to_first() {
        let l = build_cyclic_nakayama(3, 101).unwrap();
        let s = rotation_automorphism(&l).unwrap();
        let e3 = l.cyclic_path(2, 0).unwrap();
        let e1 = l.cyclic_path(0, 0).unwrap();
        assert_eq!(s.image(&l.algebra().basis_vector(e3)), l.algebra().basis_vector(e1));
    }

    #[test]
    fn non_nakayama_is_rejected() {
        let q = Quiver::new(2, vec![(0, 1)]).unwrap();
        let a = PathAlgebra::monomial(q, vec![], 7).unwrap();
        assert_eq!(a.algebra().dim(), 3);
        assert_eq!(rotation_automorphism(&a).unwrap_err(), Error::NotCyclicNakayama);
    }
}
