use std::sync::Arc;

use ordercert_core::algebra::{build_cyclic_nakayama, rotation_automorphism, Algebra};
use ordercert_core::homalg::{cone, ext_dim, minimal_projective_resolution, ChainMap, Complex};
use ordercert_core::linalg::{mod_inv, mod_mul, reduce_signed, Matrix, TruncPoly};
use ordercert_core::module::random_module;
use ordercert_core::order::{enumerate_maximal_overorders, standard_hereditary_order};
use ordercert_core::sod::random_perfect_complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const P: u64 = 101;

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0..P, r * c).prop_map(move |data| Matrix::from_vec(r, c, P, data))
    })
}

fn lambda(r: usize) -> Arc<Algebra> {
    build_cyclic_nakayama(r, P).unwrap().algebra().clone()
}

fn element(a: &Algebra, raw: &[u64]) -> Vec<u64> {
    (0..a.dim()).map(|i| raw[i % raw.len()] % P).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_width(m in matrix(7)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_recovers_a_consistent_system(a in matrix(6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Matrix::random(a.cols(), 2, P, &mut rng);
        let b = &a * &x;
        let found = Matrix::solve_right(&a, &b).unwrap();
        prop_assert_eq!(&a * &found, b);
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..6).prop_flat_map(|n| prop::collection::vec(0..P, n * n).prop_map(move |d| Matrix::from_vec(n, n, P, d)))) {
        match m.inverse() {
            Some(inv) => {
                let id = Matrix::identity(m.rows(), P);
                prop_assert_eq!(&m * &inv, id.clone());
                prop_assert_eq!(&inv * &m, id);
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn field_inverses_and_signed_reduction(a in 1..P, x in -10_000i64..10_000) {
        prop_assert_eq!(mod_mul(a, mod_inv(a, P), P), 1);
        prop_assert_eq!(reduce_signed(x, P) as i64, x.rem_euclid(P as i64));
    }

    #[test]
    fn truncated_product_matches_schoolbook(
        n in 1usize..8,
        f in prop::collection::vec(0..P, 8),
        g in prop::collection::vec(0..P, 8),
    ) {
        let prod = &TruncPoly::from_coeffs(&f, n, P) * &TruncPoly::from_coeffs(&g, n, P);
        for e in 0..n {
            let want = (0..=e).fold(0u64, |acc, i| (acc + f[i] * g[e - i]) % P);
            prop_assert_eq!(prod.coeff(e), want);
        }
    }

    #[test]
    fn nakayama_multiplication_is_associative(
        r in 1usize..6,
        x in prop::collection::vec(0..P, 1..12),
        y in prop::collection::vec(0..P, 1..12),
        z in prop::collection::vec(0..P, 1..12),
    ) {
        let a = lambda(r);
        let (x, y, z) = (element(&a, &x), element(&a, &y), element(&a, &z));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(a.one(), &x), x.clone());
        prop_assert_eq!(a.mul(&x, a.one()), x);
    }

    #[test]
    fn rotation_is_multiplicative(
        r in 1usize..6,
        x in prop::collection::vec(0..P, 1..12),
        y in prop::collection::vec(0..P, 1..12),
    ) {
        let pa = build_cyclic_nakayama(r, P).unwrap();
        let a = pa.algebra();
        let sigma = rotation_automorphism(&pa).unwrap();
        let (x, y) = (element(a, &x), element(a, &y));
        prop_assert_eq!(sigma.image(&a.mul(&x, &y)), a.mul(&sigma.image(&x), &sigma.image(&y)));
    }

    #[test]
    fn random_modules_are_modules(r in 1usize..6, seed in any::<u64>()) {
        let a = lambda(r);
        let m = random_module(&a, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(m.verify().is_ok());
        prop_assert_eq!(m.dim_vector().unwrap().iter().sum::<usize>(), m.dim());
    }

    #[test]
    fn ext_into_simples_counts_resolution_terms(r in 1usize..5, seed in any::<u64>()) {
        let a = lambda(r);
        let m = random_module(&a, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let res = minimal_projective_resolution(&m, 4).unwrap();
        let terms = res.term_vertices();
        for k in 0..r {
            let s = ordercert_core::module::Module::simple(&a, k + 1).unwrap();
            for n in 0..=3 {
                let count = terms.get(n).map_or(0, |t| t.iter().filter(|&&v| v == k).count());
                prop_assert_eq!(ext_dim(&res, &s, n).unwrap(), count);
            }
        }
    }

    #[test]
    fn cone_of_identity_is_acyclic(r in 1usize..5, seed in any::<u64>()) {
        let a = lambda(r);
        let x = random_perfect_complex(&a, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let c = cone(&ChainMap::identity(&x)).unwrap();
        prop_assert!(c.verify().is_ok());
        prop_assert!(c.is_acyclic());
        prop_assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn shifts_compose_and_flip_euler_characteristic(r in 1usize..5, seed in any::<u64>(), n in -3i64..3, m in -3i64..3) {
        let a = lambda(r);
        let x: Complex = random_perfect_complex(&a, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert_eq!(x.shift(n).shift(m), x.shift(n + m));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(x.shift(n).euler_characteristic(), sign * x.euler_characteristic());
        prop_assert_eq!(x.shift(n).homology_dim(-n), x.homology_dim(0));
    }

    #[test]
    fn overorder_count_is_the_number_of_blocks(data in prop::collection::vec(1usize..3, 1..5)) {
        let gamma = standard_hereditary_order(&data, P).unwrap();
        prop_assert_eq!(enumerate_maximal_overorders(&gamma).len(), data.len());
    }
}
