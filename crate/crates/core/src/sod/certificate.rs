//! Constructive generation certificates for the two decompositions of
//! `D^b(Lambda_r)` at a vertex `i`:
//!
//! * projective: `< S_{i+1}, ..., S_{i-1}, P_i >`
//! * injective: `< I_i, S_{i+1}, ..., S_{i-1} >`
//!
//! Each simple `S_j` yields `M_j = (P_{j+1} -> P_j)` through its canonical
//! self-extension `M_j -> S_j -> S_j[2] -> M_j[1]`, and each cone
//! `P_j -> M_j -> P_{j+1}[1]` adds one projective.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::hom::{check_exceptional, check_semiorthogonal_sequence, stalk_degree, SemiorthogonalTable};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::homalg::{cone, find_quasi_iso, minimal_projective_resolution, ChainMap, Complex};
use crate::linalg::Matrix;
use crate::module::{hom_space, is_isomorphic, Module};

/// Named generators, with 0-based vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    Simple(usize),
    Projective(usize),
    Injective(usize),
}

impl Generator {
    pub fn module(&self, a: &Arc<Algebra>) -> Result<Module> {
        match *self {
            Generator::Simple(v) => Module::simple(a, v + 1),
            Generator::Projective(v) => Module::projective(a, v + 1),
            Generator::Injective(v) => Module::injective(a, v + 1),
        }
    }

    pub fn vertex(&self) -> usize {
        match *self {
            Generator::Simple(v) | Generator::Projective(v) | Generator::Injective(v) => v,
        }
    }

    pub fn rotate(&self, r: usize) -> Generator {
        match *self {
            Generator::Simple(v) => Generator::Simple((v + 1) % r),
            Generator::Projective(v) => Generator::Projective((v + 1) % r),
            Generator::Injective(v) => Generator::Injective((v + 1) % r),
        }
    }

    /// `S3`, `P1`, ... with 1-based vertices.
    pub fn label(&self) -> String {
        match *self {
            Generator::Simple(v) => format!("S{}", v + 1),
            Generator::Projective(v) => format!("P{}", v + 1),
            Generator::Injective(v) => format!("I{}", v + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SodKind {
    Projective,
    Injective,
}

impl SodKind {
    /// Generators in decomposition order for vertex `i` of `Lambda_r`.
    pub fn generators(&self, r: usize, i: usize) -> Vec<Generator> {
        let block = (1..r).map(|k| Generator::Simple((i + k) % r));
        match self {
            SodKind::Projective => block.chain([Generator::Projective(i)]).collect(),
            SodKind::Injective => [Generator::Injective(i)].into_iter().chain(block).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConePurpose {
    /// `cone(E_j -> S_j[2])`, realising `M_j[1]` inside `<S_j>`.
    SelfExtension,
    /// A cone producing a new indecomposable projective.
    Projective,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StepKind {
    Given { generator: usize },
    Shift { of: usize, n: i64 },
    Cone { source: usize, target: usize, map: ChainMap, purpose: ConePurpose },
    /// `result` is isomorphic in `D^b` to the result of step `of`, witnessed
    /// by a quasi-isomorphism `result -> steps[of].result`.
    QuasiIso { of: usize, witness: ChainMap },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenerationStep {
    pub kind: StepKind,
    pub result: Complex,
}

impl GenerationStep {
    pub fn describe(&self) -> String {
        match &self.kind {
            StepKind::Given { generator } => format!("given generator {generator}"),
            StepKind::Shift { of, n } => format!("shift step {of} by {n}"),
            StepKind::Cone { source, target, purpose, .. } => {
                format!("cone of map step {source} -> step {target} ({purpose:?})")
            }
            StepKind::QuasiIso { of, .. } => format!("quasi-isomorphic model of step {of}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SodCertificate {
    pub algebra: Arc<Algebra>,
    pub kind: SodKind,
    /// 0-based vertex.
    pub index: usize,
    pub generators: Vec<(Generator, Complex)>,
    pub table: SemiorthogonalTable,
    pub steps: Vec<GenerationStep>,
    /// `(vertex, step)`: the step whose result is the stalk `P_vertex`.
    pub reached: Vec<(usize, usize)>,
}

/// Serializable digest of a certificate and its verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub kind: SodKind,
    pub index: usize,
    pub generators: Vec<String>,
    pub table_zero: bool,
    pub exceptional: bool,
    pub steps: usize,
    pub projective_cones: usize,
    pub self_extension_cones: usize,
    pub reached: Vec<usize>,
    pub verdict: bool,
}

fn vertex_count(a: &Algebra) -> Result<usize> {
    Ok(a.require_grading()?.vertices)
}

struct Builder {
    algebra: Arc<Algebra>,
    steps: Vec<GenerationStep>,
    seed: u64,
}

impl Builder {
    fn push(&mut self, kind: StepKind, result: Complex) -> usize {
        self.steps.push(GenerationStep { kind, result });
        self.steps.len() - 1
    }

    fn result(&self, s: usize) -> &Complex {
        &self.steps[s].result
    }

    fn shift(&mut self, of: usize, n: i64) -> usize {
        let result = self.result(of).shift(n);
        self.push(StepKind::Shift { of, n }, result)
    }

    fn cone(&mut self, map: ChainMap, source: usize, target: usize, purpose: ConePurpose) -> Result<usize> {
        let result = cone(&map)?;
        Ok(self.push(
            StepKind::Cone {
                source,
                target,
                map,
                purpose,
            },
            result,
        ))
    }

    fn model(&mut self, of: usize, model: Complex) -> Result<usize> {
        self.seed = self.seed.wrapping_add(1);
        let witness = find_quasi_iso(&model, self.result(of), self.seed)?;
        Ok(self.push(StepKind::QuasiIso { of, witness }, model))
    }

    /// From the step holding `S_j`, builds `M_j = (P_{j+1} -> P_j)` in degrees `-1, 0`.
    fn self_extension(&mut self, simple_step: usize, j: usize) -> Result<usize> {
        let s = self.result(simple_step).term(0).clone();
        let res = minimal_projective_resolution(&s, 1)?;
        let (p0, p1) = (res.term(0).expect("S_j is not projective"), res.term(1).expect("S_j is not projective"));
        let d1 = res.differential(1).expect("depth 1").clone();
        let (k, incl) = p1.kernel_of(&d1)?;
        let e = Complex::new(self.algebra.clone(), -2, vec![k.clone(), p1.clone(), p0.clone()], vec![incl, d1])?;
        let aug = res.augmentation().expect("P_0 present").clone();
        let to_s = ChainMap::new(e.clone(), self.result(simple_step).clone(), 0, vec![aug])?;
        if !to_s.is_quasi_iso()? {
            return Err(Error::VerificationFailed(format!("E_{} is not a resolution of S_{}", j + 1, j + 1)));
        }
        let e_step = self.push(StepKind::QuasiIso { of: simple_step, witness: to_s }, e.clone());
        let s2 = self.shift(simple_step, 2);
        // theta is the identification of the second syzygy with S_j
        let iso = hom_space(&k, &s)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::VerificationFailed(format!("second syzygy of S_{} is not S_{}", j + 1, j + 1)))?;
        let theta = ChainMap::new(e, self.result(s2).clone(), -2, vec![iso])?;
        let c = self.cone(theta, e_step, s2, ConePurpose::SelfExtension)?;
        let m = res.truncation(1)?;
        let m1 = self.model(c, m.shift(1))?;
        Ok(self.shift(m1, -1))
    }

    fn projective_stalk(&self, v: usize, degree: i64) -> Result<Complex> {
        Ok(Complex::stalk(Module::projective(&self.algebra, v + 1)?, degree))
    }
}

/// Builds the certificate of `kind` at 0-based vertex `i` of `Lambda_r`,
/// with the semiorthogonality table to `depth`.
pub fn build_generation_certificate(a: &Arc<Algebra>, kind: SodKind, i: usize, depth: usize) -> Result<SodCertificate> {
    let r = vertex_count(a)?;
    if i >= r {
        return Err(Error::VertexOutOfRange { vertex: i + 1, count: r });
    }
    let p = a.modulus();
    let labels = kind.generators(r, i);
    let generators = labels
        .iter()
        .map(|g| Ok((*g, Complex::stalk(g.module(a)?, 0))))
        .collect::<Result<Vec<_>>>()?;
    let objs: Vec<Complex> = generators.iter().map(|(_, c)| c.clone()).collect();
    let table = check_semiorthogonal_sequence(&objs, depth)?;
    let mut b = Builder {
        algebra: a.clone(),
        steps: Vec::new(),
        seed: 0x6e6e ^ ((i as u64) << 8),
    };
    let given: Vec<usize> = generators
        .iter()
        .enumerate()
        .map(|(g, (_, c))| b.push(StepKind::Given { generator: g }, c.clone()))
        .collect();
    let simple_step = |j: usize| -> usize {
        let pos = labels.iter().position(|g| *g == Generator::Simple(j)).expect("simple in block");
        given[pos]
    };
    let mut reached = Vec::new();
    match kind {
        SodKind::Projective => {
            // P_j[1] = cone(M_j -> P_{j+1}[1]), descending from P_i
            let mut cur = given[r - 1];
            reached.push((i, cur));
            for k in 1..r {
                let j = (i + r - k) % r;
                let m = b.self_extension(simple_step(j), j)?;
                let shifted = b.shift(cur, 1);
                let id = Matrix::identity(b.result(shifted).dim(-1), p);
                let map = ChainMap::new(b.result(m).clone(), b.result(shifted).clone(), -1, vec![id])?;
                let c = b.cone(map, m, shifted, ConePurpose::Projective)?;
                let model = b.projective_stalk(j, -1)?;
                let pj1 = b.model(c, model)?;
                cur = b.shift(pj1, -1);
                reached.push((j, cur));
            }
        }
        SodKind::Injective => {
            // I_i = P_{i+1}, then P_{j+1}[1] = cone(P_j -> M_j), ascending
            let first = (i + 1) % r;
            let model = b.projective_stalk(first, 0)?;
            let mut cur = b.model(given[0], model)?;
            reached.push((first, cur));
            for k in 1..r {
                let j = (i + k) % r;
                let m = b.self_extension(simple_step(j), j)?;
                let id = Matrix::identity(b.result(cur).dim(0), p);
                let map = ChainMap::new(b.result(cur).clone(), b.result(m).clone(), 0, vec![id])?;
                let c = b.cone(map, cur, m, ConePurpose::Projective)?;
                let next = (j + 1) % r;
                let model = b.projective_stalk(next, -1)?;
                let pn1 = b.model(c, model)?;
                cur = b.shift(pn1, -1);
                reached.push((next, cur));
            }
        }
    }
    Ok(SodCertificate {
        algebra: a.clone(),
        kind,
        index: i,
        generators,
        table,
        steps: b.steps,
        reached,
    })
}

fn fail(msg: String) -> Error {
    Error::VerificationFailed(msg)
}

/// Recomputes everything recorded in the certificate from the raw algebra.
/// Any discrepancy is reported as `VerificationFailed` naming the step.
pub fn verify_certificate(cert: &SodCertificate) -> Result<CertificateCheck> {
    let a = &cert.algebra;
    let r = vertex_count(a)?;
    let expected = cert.kind.generators(r, cert.index);
    let labels: Vec<Generator> = cert.generators.iter().map(|(g, _)| *g).collect();
    if labels != expected {
        return Err(fail(format!("generator list {labels:?} does not match {expected:?}")));
    }
    for (g, c) in &cert.generators {
        if stalk_degree(c) != Some(0) {
            return Err(fail(format!("generator {} is not a stalk in degree 0", g.label())));
        }
        if !is_isomorphic(c.term(0), &g.module(a)?)? {
            return Err(fail(format!("generator object is not {}", g.label())));
        }
    }
    let objs: Vec<Complex> = cert.generators.iter().map(|(_, c)| c.clone()).collect();
    let table = check_semiorthogonal_sequence(&objs, cert.table.depth)?;
    if table != cert.table {
        return Err(fail("semiorthogonality table does not reproduce".into()));
    }
    let distinguished = match cert.kind {
        SodKind::Projective => objs.last(),
        SodKind::Injective => objs.first(),
    }
    .expect("at least one generator");
    let exceptional = check_exceptional(distinguished, cert.table.depth)?;

    let mut projective_cones = 0;
    let mut self_extension_cones = 0;
    for (s, step) in cert.steps.iter().enumerate() {
        let earlier = |t: usize| -> Result<&Complex> {
            if t >= s {
                return Err(fail(format!("step {s} refers forward to step {t}")));
            }
            Ok(&cert.steps[t].result)
        };
        match &step.kind {
            StepKind::Given { generator } => {
                let (_, c) = cert
                    .generators
                    .get(*generator)
                    .ok_or_else(|| fail(format!("step {s}: no generator {generator}")))?;
                if &step.result != c {
                    return Err(fail(format!("step {s}: result is not generator {generator}")));
                }
            }
            StepKind::Shift { of, n } => {
                if step.result != earlier(*of)?.shift(*n) {
                    return Err(fail(format!("step {s}: shift does not reproduce")));
                }
            }
            StepKind::Cone {
                source,
                target,
                map,
                purpose,
            } => {
                if map.source() != earlier(*source)? || map.target() != earlier(*target)? {
                    return Err(fail(format!("step {s}: map endpoints are not the cited steps")));
                }
                map.verify().map_err(|e| fail(format!("step {s}: {e}")))?;
                if step.result != cone(map)? {
                    return Err(fail(format!("step {s}: cone does not reproduce")));
                }
                match purpose {
                    ConePurpose::Projective => projective_cones += 1,
                    ConePurpose::SelfExtension => self_extension_cones += 1,
                }
            }
            StepKind::QuasiIso { of, witness } => {
                if witness.source() != &step.result || witness.target() != earlier(*of)? {
                    return Err(fail(format!("step {s}: witness endpoints are wrong")));
                }
                witness.verify().map_err(|e| fail(format!("step {s}: {e}")))?;
                if !witness.is_quasi_iso()? {
                    return Err(fail(format!("step {s}: witness is not a quasi-isomorphism")));
                }
            }
        }
    }

    let mut reached = Vec::new();
    for &(v, s) in &cert.reached {
        let c = &cert
            .steps
            .get(s)
            .ok_or_else(|| fail(format!("reached step {s} does not exist")))?
            .result;
        if stalk_degree(c) != Some(0) || !is_isomorphic(c.term(0), &Module::projective(a, v + 1)?)? {
            return Err(fail(format!("step {s} is not P{}", v + 1)));
        }
        reached.push(v);
    }
    let mut sorted = reached.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let all = sorted == (0..r).collect::<Vec<_>>();
    let cones_ok = projective_cones == r - 1;
    Ok(CertificateCheck {
        kind: cert.kind,
        index: cert.index,
        generators: labels.iter().map(Generator::label).collect(),
        table_zero: table.verdict,
        exceptional,
        steps: cert.steps.len(),
        projective_cones,
        self_extension_cones,
        reached,
        verdict: table.verdict && exceptional && all && cones_ok,
    })
}

/// Both decompositions at vertex `i`, built and independently replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SodCheck {
    pub index: usize,
    pub projective: CertificateCheck,
    pub injective: CertificateCheck,
    pub verdict: bool,
}

pub fn check_sod(a: &Arc<Algebra>, i: usize, depth: usize) -> Result<SodCheck> {
    let projective = verify_certificate(&build_generation_certificate(a, SodKind::Projective, i, depth)?)?;
    let injective = verify_certificate(&build_generation_certificate(a, SodKind::Injective, i, depth)?)?;
    let verdict = projective.verdict && injective.verdict;
    Ok(SodCheck {
        index: i,
        projective,
        injective,
        verdict,
    })
}

/// Transports a certificate along an automorphism rotating vertices by one:
/// every complex and chain map is twisted and every index advances.
pub fn rotate_certificate(cert: &SodCertificate, sigma: &AlgebraMorphism) -> Result<SodCertificate> {
    let r = vertex_count(&cert.algebra)?;
    let generators = cert
        .generators
        .iter()
        .map(|(g, c)| Ok((g.rotate(r), c.twist(sigma)?)))
        .collect::<Result<Vec<_>>>()?;
    let steps = cert
        .steps
        .iter()
        .map(|st| {
            let kind = match &st.kind {
                StepKind::Cone {
                    source,
                    target,
                    map,
                    purpose,
                } => StepKind::Cone {
                    source: *source,
                    target: *target,
                    map: map.twist(sigma)?,
                    purpose: *purpose,
                },
                StepKind::QuasiIso { of, witness } => StepKind::QuasiIso {
                    of: *of,
                    witness: witness.twist(sigma)?,
                },
                other => other.clone(),
            };
            Ok(GenerationStep {
                kind,
                result: st.result.twist(sigma)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SodCertificate {
        algebra: cert.algebra.clone(),
        kind: cert.kind,
        index: (cert.index + 1) % r,
        generators,
        table: cert.table.clone(),
        steps,
        reached: cert.reached.iter().map(|&(v, s)| ((v + 1) % r, s)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_cyclic_nakayama, rotation_automorphism};

    #[test]
    fn trivial_certificate_for_r_one() {
        let a = build_cyclic_nakayama(1, 101).unwrap().algebra().clone();
        let cert = build_generation_certificate(&a, SodKind::Projective, 0, 6).unwrap();
        assert_eq!(cert.steps.len(), 1);
        let check = verify_certificate(&cert).unwrap();
        assert!(check.verdict);
        assert_eq!(check.projective_cones, 0);
    }

    #[test]
    fn lambda_two_needs_one_cone() {
        let a = build_cyclic_nakayama(2, 101).unwrap().algebra().clone();
        for kind in [SodKind::Projective, SodKind::Injective] {
            let cert = build_generation_certificate(&a, kind, 1, 8).unwrap();
            let check = verify_certificate(&cert).unwrap();
            assert!(check.verdict, "{check:?}");
            assert_eq!(check.projective_cones, 1);
            assert_eq!(check.self_extension_cones, 1);
        }
    }

    #[test]
    fn lambda_five_reaches_all_projectives() {
        let a = build_cyclic_nakayama(5, 101).unwrap().algebra().clone();
        let cert = build_generation_certificate(&a, SodKind::Projective, 2, 14).unwrap();
        let check = verify_certificate(&cert).unwrap();
        assert!(check.verdict);
        let mut got = check.reached.clone();
        got.sort_unstable();
        assert_eq!(got, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let a = build_cyclic_nakayama(3, 101).unwrap().algebra().clone();
        let mut cert = build_generation_certificate(&a, SodKind::Projective, 0, 10).unwrap();
        let last = cert.steps.len() - 1;
        cert.steps[last].result = cert.steps[last].result.shift(1);
        assert!(matches!(verify_certificate(&cert), Err(Error::VerificationFailed(_))));
    }

    #[test]
    fn rotated_certificate_verifies_at_next_vertex() {
        let pa = build_cyclic_nakayama(3, 101).unwrap();
        let sigma = rotation_automorphism(&pa).unwrap();
        let a = pa.algebra().clone();
        let cert = build_generation_certificate(&a, SodKind::Injective, 0, 10).unwrap();
        let rotated = rotate_certificate(&cert, &sigma).unwrap();
        assert_eq!(rotated.index, 1);
        assert!(verify_certificate(&rotated).unwrap().verdict);
    }
}
