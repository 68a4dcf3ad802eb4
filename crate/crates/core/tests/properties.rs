//! Cross-module property tests: exact identities checked against
//! independent routes (linear-factor constructions, numeric root finding,
//! boolean matrix powers).

use proptest::prelude::*;

use skewrec_core::digraph::{duality_check, Digraph};
use skewrec_core::matrix::{char_poly, companion, is_irreducible, primitivity, IntMatrix};
use skewrec_core::numeric;
use skewrec_core::poly::roots::{count_real_roots_in, largest_real_root};
use skewrec_core::poly::{divides, is_skew_reciprocal, reciprocal_transform, skew_star, IntPoly};
use skewrec_core::rat::{rat, rat_int};

fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(0i64..=2, n * n).prop_map(move |entries| {
        let rows: Vec<Vec<i64>> = entries.chunks(n).map(|c| c.to_vec()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn duality_holds_for_random_matrices(n in 1usize..=5, seed in any::<u64>()) {
        let m = {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect())
                .collect();
            IntMatrix::from_rows(&rows).unwrap()
        };
        prop_assert!(duality_check(&m).unwrap());
    }

    #[test]
    fn skew_star_involutive_up_to_sign(coeffs in proptest::collection::vec(-5i64..=5, 1..=9)) {
        let p = IntPoly::from_coeffs(coeffs.iter().map(|&c| c.into()).collect());
        // A zero constant term drops the degree under the transform, which
        // breaks the involution; the invariant assumes it is nonzero.
        prop_assume!(!p.is_zero() && !num_traits::Zero::is_zero(&p.coeff(0)));
        let twice = skew_star(&skew_star(&p).unwrap()).unwrap();
        if p.degree().unwrap().is_multiple_of(2) {
            prop_assert_eq!(twice, p);
        } else {
            prop_assert_eq!(twice, p.neg());
        }
    }

    #[test]
    fn reciprocal_transform_is_an_involution(
        coeffs in proptest::collection::vec(-5i64..=5, 1..=9),
        pad in 0usize..3,
    ) {
        let p = IntPoly::from_coeffs(coeffs.iter().map(|&c| c.into()).collect());
        prop_assume!(!p.is_zero());
        let n = p.degree().unwrap() + pad;
        let once = reciprocal_transform(&p, n).unwrap();
        // Reversal at the same bound restores p when p has full support up
        // to the bound; in general it strips the t^k factor introduced by
        // padding, so compose at the tight degree.
        let tight = p.degree().unwrap();
        let twice = reciprocal_transform(&reciprocal_transform(&p, tight).unwrap(), tight).unwrap();
        prop_assert_eq!(&twice.mul(&IntPoly::one()), &p);
        prop_assert_eq!(once.degree(), Some(n - trailing_zeros(&p)));
    }

    #[test]
    fn divides_agrees_with_multiplication(
        d in proptest::collection::vec(-4i64..=4, 2..=5),
        q in proptest::collection::vec(-4i64..=4, 1..=5),
        r in proptest::collection::vec(-3i64..=3, 1..=2),
    ) {
        let d = IntPoly::from_coeffs(d.iter().map(|&c| c.into()).collect());
        let q = IntPoly::from_coeffs(q.iter().map(|&c| c.into()).collect());
        let r = IntPoly::from_coeffs(r.iter().map(|&c| c.into()).collect());
        prop_assume!(!d.is_zero() && d.degree().unwrap() >= 1);
        let product = d.mul(&q);
        prop_assert!(divides(&d, &product).unwrap());
        if !r.is_zero() && r.degree().unwrap() < d.degree().unwrap() {
            prop_assert!(!divides(&d, &product.add(&r)).unwrap());
        }
    }

    #[test]
    fn companion_char_poly_round_trip(
        coeffs in proptest::collection::vec(-5i64..=5, 1..=10),
    ) {
        let mut v = coeffs.clone();
        v.push(1); // monic
        let p = IntPoly::from_coeffs(v.iter().map(|&c| c.into()).collect());
        let c = companion(&p).unwrap();
        prop_assert_eq!(char_poly(&c), p);
    }

    #[test]
    fn det_of_companion_is_signed_constant(
        coeffs in proptest::collection::vec(-5i64..=5, 1..=8),
    ) {
        let mut v = coeffs.clone();
        v.push(1);
        let p = IntPoly::from_coeffs(v.iter().map(|&c| c.into()).collect());
        let n = p.degree().unwrap();
        let d = skewrec_core::matrix::det(&companion(&p).unwrap());
        let expected = if n.is_multiple_of(2) { p.coeff(0) } else { -p.coeff(0) };
        prop_assert_eq!(d, expected);
    }

    #[test]
    fn integer_root_counting(
        roots in proptest::collection::btree_set(-6i64..=6, 1..=4),
        square_first in any::<bool>(),
        lo in -7i64..=7,
        width in 1i64..=6,
    ) {
        // Independent oracle: a product of known linear factors.
        let roots: Vec<i64> = roots.into_iter().collect();
        let mut p = IntPoly::one();
        for (i, &r) in roots.iter().enumerate() {
            let factor = IntPoly::from_i64s(&[-r, 1]);
            p = p.mul(&factor);
            if square_first && i == 0 {
                p = p.mul(&factor); // multiplicity must collapse
            }
        }
        let hi = lo + width;
        let expected = roots
            .iter()
            .filter(|&&r| r > lo && r < hi)
            .count();
        let got = count_real_roots_in(&p, &rat_int(lo), &rat_int(hi)).unwrap();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn bracket_soundness(coeffs in proptest::collection::vec(-4i64..=4, 2..=7)) {
        let p = IntPoly::from_coeffs(coeffs.iter().map(|&c| c.into()).collect());
        prop_assume!(!p.is_zero() && p.degree().unwrap() >= 1);
        let tol = rat(1, 100_000_000);
        if let Some(b) = largest_real_root(&p, &tol).unwrap() {
            prop_assert!(b.width() <= tol);
            prop_assert!(b.sign_lo != 0 && b.sign_hi != 0 && b.sign_lo != b.sign_hi);
            let sf = p.squarefree_part();
            prop_assert_eq!(sf.sign_at(&b.lo), b.sign_lo);
            prop_assert_eq!(sf.sign_at(&b.hi), b.sign_hi);
            // The bracketed root really is the largest: nothing above hi.
            prop_assert_eq!(
                count_real_roots_in(&p, &b.hi, &rat_int(1_000_000)).unwrap(),
                0
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn primitivity_certificates_agree(m in small_matrix(6)) {
        let pr = primitivity(&m).unwrap();
        // Primitive implies irreducible.
        if pr.is_primitive {
            prop_assert!(pr.irreducible);
            prop_assert_eq!(pr.cycle_gcd, Some(1));
        }
        // Cycle-gcd route and Wielandt power route agree (checked inside
        // primitivity as well; assert the witness shape here).
        match pr.wielandt_exponent {
            Some(k) => {
                prop_assert!(pr.is_primitive);
                prop_assert!(k <= 26);
                let mut power = m.clone();
                for _ in 1..k {
                    power = power.mul(&m);
                }
                use num_traits::Signed;
                prop_assert!((0..6).all(|i| (0..6).all(|j| power.get(i, j).is_positive())));
            }
            None => prop_assert!(!pr.is_primitive),
        }
    }

    #[test]
    fn expand_round_trip_unit_weight(m in small_matrix(4)) {
        let g = Digraph::from_matrix(&m).unwrap();
        prop_assert_eq!(g.expand().unwrap(), m);
    }

    #[test]
    fn base_and_expanded_cycle_weights_agree(
        edges in proptest::collection::vec((0usize..3, 0usize..3, 1u64..=3, 1u64..=2), 1..=5),
    ) {
        let mut g = Digraph::new(3);
        for (s, d, w, m) in edges {
            g.add_edge(s, d, w, m).unwrap();
        }
        let mut base: Vec<u64> = g.simple_cycles().unwrap().iter().map(|c| c.weight).collect();
        base.sort_unstable();
        let expanded = Digraph::from_matrix(&g.expand().unwrap()).unwrap();
        let mut exp: Vec<u64> = expanded.simple_cycles().unwrap().iter().map(|c| c.weight).collect();
        exp.sort_unstable();
        prop_assert_eq!(base, exp);
    }
}

fn trailing_zeros(p: &IntPoly) -> usize {
    p.coeffs()
        .iter()
        .position(|c| !num_traits::Zero::is_zero(c))
        .unwrap_or(0)
}

/// Numeric oracle: the predicate agrees with closure of the float root
/// multiset under z -> -1/z, over a seeded sample plus the families.
#[test]
fn skew_predicate_matches_numeric_root_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x04AC1E);

    let mut polys: Vec<IntPoly> = Vec::new();
    for g in 1..=4usize {
        polys.push(skewrec_core::families::lambda_poly(g).unwrap());
        if g >= 2 {
            polys.push(skewrec_core::families::mu_poly(g).unwrap());
        }
    }
    for _ in 0..200 {
        let deg = 2 * rng.gen_range(1..=3usize);
        let mut coeffs = vec![0i64; deg + 1];
        coeffs[deg] = 1;
        coeffs[0] = if rng.gen_bool(0.5) { 1 } else { -1 };
        for c in coeffs.iter_mut().take(deg).skip(1) {
            *c = rng.gen_range(-2..=2);
        }
        polys.push(IntPoly::from_i64s(&coeffs));
    }

    let mut checked = 0usize;
    for p in &polys {
        let roots = numeric::complex_roots(p);
        // Skip ill-conditioned samples where the float roots are unreliable.
        let residual_ok = roots.iter().all(|&(re, im)| {
            let norm = (re * re + im * im).sqrt();
            norm > 1e-6 && norm < 1e6
        });
        if !residual_ok {
            continue;
        }
        let closed = multiset_closed_under_skew(&roots, 1e-8);
        let predicate = is_skew_reciprocal(p).unwrap();
        assert_eq!(
            predicate,
            closed,
            "predicate vs numeric oracle disagree for {}",
            p.to_coeff_string()
        );
        checked += 1;
    }
    assert!(checked > 150, "oracle sample too small: {checked}");
}

fn multiset_closed_under_skew(roots: &[(f64, f64)], tol: f64) -> bool {
    let mut used = vec![false; roots.len()];
    for &(re, im) in roots {
        let norm = re * re + im * im;
        let target = (-re / norm, im / norm); // -1/z
        let mut found = false;
        for (j, &(or, oi)) in roots.iter().enumerate() {
            if used[j] {
                continue;
            }
            if (or - target.0).hypot(oi - target.1) < tol {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

#[test]
fn complement_connected_on_family_companions() {
    for g in 1..=8usize {
        for poly in [
            Some(skewrec_core::families::lambda_poly(g).unwrap()),
            (g >= 2).then(|| skewrec_core::families::mu_poly(g).unwrap()),
        ]
        .into_iter()
        .flatten()
        {
            let c = companion(&poly).unwrap();
            assert!(is_irreducible(&c).unwrap());
            let cg = Digraph::from_matrix(&c).unwrap().curve_graph().unwrap();
            assert!(
                cg.complement_connected(),
                "complement disconnected for {}",
                poly.to_coeff_string()
            );
        }
    }
}

#[test]
fn spectral_bracket_contains_power_iteration_estimate() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xBEEF);
    let mut tested = 0;
    while tested < 20 {
        let n = rng.gen_range(2..=5usize);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect())
            .collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        if !is_irreducible(&m).unwrap() {
            continue;
        }
        let cp = char_poly(&m);
        if largest_real_root(&cp, &rat(1, 1000)).unwrap().is_none() {
            continue;
        }
        let b = skewrec_core::matrix::spectral_radius(&m, &rat(1, 1_000_000_000)).unwrap();
        let est = numeric::power_iteration(&m);
        let lo = skewrec_core::rat::to_f64(&b.lo);
        let hi = skewrec_core::rat::to_f64(&b.hi);
        assert!(
            est > lo - 1e-7 && est < hi + 1e-7,
            "estimate {est} outside [{lo}, {hi}]"
        );
        tested += 1;
    }
}
