//! Acceptance sweep over r = 1..6 with default parameters. Prints one
//! PASS/FAIL line per criterion, then fails if any criterion failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use ordercert_core::algebra::{build_cyclic_nakayama, jacobson_radical, rotation_automorphism, Algebra};
use ordercert_core::homalg::{
    ext_dim, ext_dim_modules, ext_dim_via_hom_complex, is_p_infty_object, minimal_projective_resolution,
};
use ordercert_core::linalg::mod_add;
use ordercert_core::module::{is_isomorphic, random_module, uniserial_comparison, Module};
use ordercert_core::order::{
    classify_overorder_type, derived_restriction_cohomology, enumerate_maximal_overorders, fiber,
    fiber_basic_iso_to_lambda, is_maximal, is_order, maximal_order_from_shifts, overorder_module_check,
    pushforward_ext_table, pushforward_module, standard_hereditary_order, truncated_algebra, ValuationOrder,
};
use ordercert_core::report::{default_prime, minimum_depth};
use ordercert_core::skew::{build_skew_group, iso_to_lambda, simple_correspondence};
use ordercert_core::sod::{check_sod, random_perfect_complex, rotation_periodicity_check, serre_duality_check};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANKS: std::ops::RangeInclusive<usize> = 1..=6;
const SERRE_PAIRS: usize = 100;
const CROSS_PAIRS: usize = 50;
const TRUNC: usize = 2;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lambda(r: usize) -> (ordercert_core::algebra::PathAlgebra, Arc<Algebra>, usize) {
    let pa = build_cyclic_nakayama(r, default_prime(r)).unwrap();
    let a = pa.algebra().clone();
    (pa, a, minimum_depth(r))
}

/// Walks in the cyclic quiver of length below `r`, counted one step at a time.
fn count_nonzero_paths(r: usize) -> usize {
    let mut frontier: Vec<usize> = (0..r).collect();
    let mut total = 0;
    for _ in 0..r {
        total += frontier.len();
        frontier = frontier.iter().map(|v| (v + 1) % r).collect();
    }
    total
}

/// Multiplicity of `P_k` in the n-th term of a minimal resolution, which is
/// `dim Ext^n(M, S_k)` over a basic algebra.
fn multiplicity(term: &[usize], k: usize) -> usize {
    term.iter().filter(|&&v| v == k).count()
}

fn formula_ext(r: usize, j: usize, k: usize, n: usize) -> usize {
    if r == 1 {
        return usize::from(n == 0);
    }
    usize::from((k == j && n % 2 == 0) || (k == (j + 1) % r && n % 2 == 1))
}

/// Every shift vector in the box `[-n, n]^n` with `d_1 = 0`, filtered by
/// the order axioms directly.
fn brute_force_overorders(gamma: &ValuationOrder) -> Vec<Vec<Vec<i64>>> {
    let n = gamma.size();
    let b = n as i64;
    let mut out = Vec::new();
    let total = (2 * b + 1).pow(n as u32 - 1);
    for code in 0..total {
        let mut d = vec![0i64; n];
        let mut c = code;
        for x in d.iter_mut().skip(1) {
            *x = c % (2 * b + 1) - b;
            c /= 2 * b + 1;
        }
        let m = maximal_order_from_shifts(&d, gamma.modulus());
        if is_order(&m) && is_maximal(&m) && m.contains(gamma) {
            out.push(m.rows());
        }
    }
    out.sort();
    out
}

fn c1() -> Outcome {
    for r in RANKS {
        let (_, a, _) = lambda(r);
        ensure(a.dim() == r * r && a.dim() == count_nonzero_paths(r) && a.is_associative(), || {
            format!("r={r}: dim {}", a.dim())
        })?;
    }
    Ok(())
}

fn c2() -> Outcome {
    for r in 2..=*RANKS.end() {
        let (_, a, depth) = lambda(r);
        for i in 1..=r {
            let res = minimal_projective_resolution(&Module::simple(&a, i).unwrap(), depth).unwrap();
            let terms = res.term_vertices();
            for (n, t) in terms.iter().enumerate() {
                let want = if n % 2 == 0 { i - 1 } else { i % r };
                ensure(t == &vec![want], || format!("r={r} S{i}: term {n} is {t:?}"))?;
            }
            for n in 1..depth - 1 {
                ensure(res.differential(n) == res.differential(n + 2), || {
                    format!("r={r} S{i}: differentials {n} and {} differ", n + 2)
                })?;
            }
            ensure(res.detect_periodicity().unwrap() == Some(2), || format!("r={r} S{i}: period"))?;
        }
    }
    Ok(())
}

fn c3() -> Outcome {
    for r in RANKS {
        let (_, a, depth) = lambda(r);
        for j in 0..r {
            let res = minimal_projective_resolution(&Module::simple(&a, j + 1).unwrap(), depth + 1).unwrap();
            let terms = res.term_vertices();
            for k in 0..r {
                let sk = Module::simple(&a, k + 1).unwrap();
                for n in 0..=depth {
                    let got = ext_dim(&res, &sk, n).unwrap();
                    let by_terms = terms.get(n).map_or(0, |t| multiplicity(t, k));
                    let want = formula_ext(r, j, k, n);
                    ensure(got == want && by_terms == want, || {
                        format!("r={r} Ext^{n}(S{}, S{}) = {got}, terms give {by_terms}, want {want}", j + 1, k + 1)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c4() -> Outcome {
    for r in 2..=*RANKS.end() {
        let (_, a, depth) = lambda(r);
        for i in 1..=r {
            let rep = is_p_infty_object(&Module::simple(&a, i).unwrap(), 2, depth).unwrap();
            let expected_dims: Vec<usize> = (0..=depth).map(|k| usize::from(k % 2 == 0)).collect();
            ensure(
                rep.verdict
                    && rep.ext_dims == expected_dims
                    && rep.powers_nonzero.len() == depth / 2
                    && rep.powers_nonzero.iter().all(|&b| b),
                || format!("r={r} S{i}: {rep:?}"),
            )?;
        }
    }
    Ok(())
}

fn c5() -> Outcome {
    for r in RANKS {
        let (_, a, depth) = lambda(r);
        for i in 0..r {
            let c = check_sod(&a, i, depth).unwrap();
            for cert in [&c.projective, &c.injective] {
                ensure(
                    cert.verdict
                        && cert.table_zero
                        && cert.exceptional
                        && cert.projective_cones == r - 1
                        && cert.generators.len() == r,
                    || format!("r={r} i={i}: {cert:?}"),
                )?;
            }
        }
    }
    Ok(())
}

fn c6() -> Outcome {
    for r in RANKS {
        let (pa, a, depth) = lambda(r);
        for i in 1..=r {
            let inj = Module::injective(&a, i).unwrap();
            let proj = Module::projective(&a, i % r + 1).unwrap();
            ensure(
                uniserial_comparison(&inj, &proj).unwrap() == Some(true)
                    && is_isomorphic(&inj, &proj).unwrap()
                    && inj.dim_vector().unwrap() == proj.dim_vector().unwrap(),
                || format!("r={r}: I{i} is not P{}", i % r + 1),
            )?;
        }
        let sigma = rotation_automorphism(&pa).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xacc0 + r as u64);
        for k in 0..SERRE_PAIRS {
            let x = random_perfect_complex(&a, &mut rng).unwrap();
            let y = random_perfect_complex(&a, &mut rng).unwrap();
            let c = serre_duality_check(&x, &y, &sigma, depth).unwrap();
            ensure(c.verdict && c.lhs.len() == 2 * depth + 1, || format!("r={r} pair {k}: {c:?}"))?;
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    for r in RANKS {
        let (pa, _, depth) = lambda(r);
        let c = rotation_periodicity_check(&pa, depth).unwrap();
        ensure(c.verdict, || format!("r={r}: {c:?}"))?;
    }
    Ok(())
}

const DATA: [&[usize]; 5] = [&[1, 1], &[1, 1, 1], &[2, 1], &[1, 1, 1, 1], &[2, 2, 1]];

fn c8() -> Outcome {
    for data in DATA {
        let r = data.len();
        let n: usize = data.iter().sum();
        let o = standard_hereditary_order(data, default_prime(r)).unwrap();
        let generic = fiber(&o, 1).unwrap();
        let rad = jacobson_radical(&generic).unwrap().rows();
        ensure(generic.dim() == n * n && rad == 0, || format!("{data:?}: generic radical {rad}"))?;
        let special = fiber(&o, 0).unwrap();
        let special_rad = jacobson_radical(&special).unwrap().rows();
        ensure(special_rad > 0, || format!("{data:?}: special fiber is semisimple"))?;
        let iso = fiber_basic_iso_to_lambda(&o).unwrap();
        ensure(
            iso.basic.algebra.dim() == r * r && iso.morphism.verify_isomorphism().unwrap().is_iso(),
            || format!("{data:?}: basic algebra is not Lambda_{r}"),
        )?;
    }
    Ok(())
}

fn c9() -> Outcome {
    let basic: Vec<Vec<usize>> = RANKS.map(|r| vec![1; r]).collect();
    for data in basic.iter().map(Vec::as_slice).chain(DATA) {
        let r = data.len();
        let gamma = standard_hereditary_order(data, default_prime(r)).unwrap();
        let found = enumerate_maximal_overorders(&gamma);
        let mut rows: Vec<Vec<Vec<i64>>> = found.iter().map(ValuationOrder::rows).collect();
        rows.sort();
        ensure(rows == brute_force_overorders(&gamma), || format!("{data:?}: search disagrees with the box"))?;
        ensure(found.len() == r, || format!("{data:?}: {} overorders", found.len()))?;
        let mut types = Vec::new();
        for b in &found {
            let c = overorder_module_check(b, &gamma).unwrap();
            ensure(c.is_order && c.is_maximal && c.contains && c.verdict, || format!("{data:?}: {c:?}"))?;
            types.push(classify_overorder_type(b, &gamma).unwrap());
        }
        types.sort_unstable();
        ensure(types == (1..=r).collect::<Vec<_>>(), || format!("{data:?}: types {types:?}"))?;
    }
    Ok(())
}

fn c10() -> Outcome {
    for r in RANKS {
        let o = standard_hereditary_order(&vec![1; r], default_prime(r)).unwrap();
        let iso = fiber_basic_iso_to_lambda(&o).unwrap();
        let tr = truncated_algebra(&o, TRUNC).unwrap();
        let t = pushforward_ext_table(&iso, &tr).unwrap();
        for k in 0..r {
            for j in 0..r {
                let want = [usize::from(j == k), usize::from(j == (k + 1) % r), 0];
                ensure((0..3).all(|n| t.ext[n][k][j] == want[n]), || format!("r={r} k={k} j={j}: {t:?}"))?;
            }
            if k != r - 1 {
                ensure(t.lattice_hom[r - 1][k] == 0, || format!("r={r}: Hom(L^(r), S{}) != 0", k + 1))?;
            }
        }
        let l = iso.lambda.algebra();
        let pushed: Vec<Module> = (1..=r)
            .map(|j| pushforward_module(&Module::simple(l, j).unwrap(), &iso, &tr).unwrap())
            .collect();
        for k in 0..r {
            for j in 0..r {
                for n in 0..=1 {
                    let direct = ext_dim_modules(&pushed[k], &pushed[j], n).unwrap();
                    ensure(direct == t.ext[n][k][j], || format!("r={r} k={k} j={j} n={n}: resolution gives {direct}"))?;
                }
            }
        }
        for k in 1..=r {
            let d = derived_restriction_cohomology(&iso, &tr, k).unwrap();
            ensure(d.verdict && d.h_minus1_is_simple && d.h0_is_simple, || format!("r={r}: {d:?}"))?;
        }
    }
    Ok(())
}

fn c11() -> Outcome {
    for r in 2..=*RANKS.end() {
        let s = build_skew_group(r, default_prime(r)).unwrap();
        let a = s.algebra();
        let p = a.modulus();
        let eps: Vec<Vec<u64>> = (0..r).map(|i| s.character_idempotent(i)).collect();
        let mut sum = vec![0u64; a.dim()];
        for (i, e) in eps.iter().enumerate() {
            for (j, f) in eps.iter().enumerate() {
                let prod = a.mul(e, f);
                let want = if i == j { e.clone() } else { vec![0; a.dim()] };
                ensure(prod == want, || format!("r={r}: eps{i} eps{j} is wrong"))?;
            }
            sum.iter_mut().zip(e).for_each(|(x, y)| *x = mod_add(*x, *y, p));
        }
        ensure(sum == a.one(), || format!("r={r}: idempotents do not sum to 1"))?;
        let iso = iso_to_lambda(&s).unwrap();
        ensure(iso.morphism.verify_isomorphism().unwrap().is_iso(), || format!("r={r}: not an isomorphism"))?;
        let corr = simple_correspondence(&s, &iso).unwrap();
        let mut perm = corr.perm.clone();
        perm.sort_unstable();
        ensure(perm == (0..r).collect::<Vec<_>>(), || format!("r={r}: {corr:?}"))?;
    }
    Ok(())
}

fn c12() -> Outcome {
    for r in RANKS {
        let (_, a, _) = lambda(r);
        let mut rng = ChaCha8Rng::seed_from_u64(0xc12 + r as u64);
        for k in 0..CROSS_PAIRS {
            let m = random_module(&a, &mut rng).unwrap();
            let n = random_module(&a, &mut rng).unwrap();
            let res = minimal_projective_resolution(&m, 5).unwrap();
            for deg in 0..=4 {
                let lhs = ext_dim(&res, &n, deg).unwrap();
                let rhs = ext_dim_via_hom_complex(&m, &n, deg).unwrap();
                ensure(lhs == rhs, || format!("r={r} pair {k} n={deg}: {lhs} vs {rhs}"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("dim Lambda_r = r^2", c1),
        ("resolutions of simples are 2-periodic with terms P_i, P_{i+1}", c2),
        ("Ext between simples is supported on k = j (n even) and k = j + 1 (n odd)", c3),
        ("every simple has polynomial self-extensions on a degree-2 class", c4),
        ("both decompositions at every vertex verify with r - 1 cones", c5),
        ("I_i = P_{i+1} and Serre duality holds on random perfect pairs", c6),
        ("rotation has period r and carries certificates to certificates", c7),
        ("generic fiber is semisimple and the special fiber is Morita equivalent to Lambda_r", c8),
        ("exactly r maximal overorders, one of each type", c9),
        ("pushforward Ext table, lattice orthogonality and derived restriction", c10),
        ("skew group algebra is isomorphic to Lambda_r with bijective simples", c11),
        ("Ext from resolutions equals Ext from the total Hom complex", c12),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({ms:.0} ms)", n + 1),
            Err(e) => {
                println!("FAIL {:>2} {name} ({ms:.0} ms): {e}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
