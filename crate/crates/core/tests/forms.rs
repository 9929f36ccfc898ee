mod common;

use common::*;
use proptest::prelude::*;
use rug::ops::Pow;
use rug::Integer;
use thuekit::forms::{
    apply_matrix, degree_bound_holds, degree_discriminant_check, discriminant, discriminant_any, factor_over_z,
    monic_reduce, prime_layer_decomposition, IntMatrix,
};
use thuekit::solver::{solve_in_box, transport, SearchBox};
use thuekit::{find_roots, BinaryForm, PrecisionConfig};

/// `a_n^(2n-2) prod_{i<j} (alpha_i - alpha_j)^2` from certified roots.
fn disc_from_roots(f: &BinaryForm) -> Integer {
    let rs = find_roots(f, &PrecisionConfig::default()).unwrap();
    let n = f.degree();
    let p = rs.prec();
    let lead = thuekit::CInterval::from_real(thuekit::Interval::from_int(f.leading(), p));
    let mut acc = thuekit::CInterval::from_real(thuekit::Interval::one(p));
    for _ in 0..2 * n - 2 {
        acc = acc.mul(&lead);
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = rs.root(i).sub(rs.root(j));
            acc = acc.mul(&d.mul(&d));
        }
    }
    let m = acc.re.mid().round().to_integer().unwrap();
    assert!(acc.re.contains_int(&m) && acc.im.contains_zero());
    m
}

#[test]
fn discriminant_matches_root_product() {
    for line in ["13 -22 12 -2", "1 0 -1 -1", "3 1 0 0 -2", "2 -7 0 5 1"] {
        let f = form(line);
        assert_eq!(discriminant(&f).unwrap(), disc_from_roots(&f), "{line}");
    }
    assert_eq!(discriminant(&form("1 0 -1 -1")).unwrap(), -23);
}

#[test]
fn matrix_examples() {
    let f = form("1 0 -1 -1");
    let shift = apply_matrix(&f, &IntMatrix::from_i64(1, 1, 0, 1)).unwrap();
    // F(x + y, y) = x^3 + 3x^2y + 2xy^2 - y^3
    assert_eq!(shift, form("1 3 2 -1"));
    assert_eq!(discriminant(&shift).unwrap(), -23);
    let scaled = apply_matrix(&f, &IntMatrix::from_i64(2, 0, 0, 1)).unwrap();
    assert_eq!(discriminant(&scaled).unwrap(), -1472);
    assert_eq!(apply_matrix(&f, &IntMatrix::identity()).unwrap(), f);
    assert!(apply_matrix(&f, &IntMatrix::from_i64(1, 2, 2, 4)).is_err());
}

#[test]
fn prime_layers_scale_the_discriminant() {
    let f = form("1 0 -1 -1");
    let layers = prime_layer_decomposition(&f, &Integer::from(2)).unwrap();
    assert_eq!(layers.len(), 3);
    for (_, g) in &layers {
        assert_eq!(discriminant_any(g).unwrap().abs(), 64 * 23);
    }
    assert_eq!(prime_layer_decomposition(&f1(3, 2), &Integer::from(3)).unwrap().len(), 4);
}

#[test]
fn monic_reduction_examples() {
    let f = f1(3, 2);
    let red = monic_reduce(&f, &Integer::from(1), &Integer::from(1)).unwrap();
    assert_eq!(*red.form.leading(), 1);
    assert_eq!(discriminant(&red.form).unwrap().abs(), discriminant(&f).unwrap().abs());
    let m = monic_reduce(&form("1 0 -1 -1"), &Integer::from(1), &Integer::from(0)).unwrap();
    assert_eq!((m.form, m.matrix, m.sign), (form("1 0 -1 -1"), IntMatrix::identity(), 1));
    // x^3 - x y^2 - y^3 at (0, 1) is -1
    let neg = monic_reduce(&form("1 0 -1 -1"), &Integer::from(0), &Integer::from(1)).unwrap();
    assert_eq!(neg.sign, -1);
    assert_eq!(*neg.form.leading(), 1);
    assert!(monic_reduce(&f, &Integer::from(2), &Integer::from(2)).is_err());
    assert!(monic_reduce(&f, &Integer::from(2), &Integer::from(3)).is_err());
}

#[test]
fn reduced_form_solutions_correspond() {
    let f = f1(4, 3);
    let red = monic_reduce(&f, &Integer::from(1), &Integer::from(2)).unwrap();
    let bx = SearchBox::new(300).unwrap();
    let mut back: Vec<_> = solve_in_box(&red.form, &bx)
        .unwrap()
        .iter()
        .map(|s| {
            let (x, y) = red.to_original(&s.x, &s.y);
            thuekit::solver::normalize(x, y)
        })
        .collect();
    back.sort();
    for k in 1..=4 {
        assert!(back.contains(&(Integer::from(1), Integer::from(k))));
    }
}

#[test]
fn degree_discriminant_examples() {
    assert!(degree_discriminant_check(&form("1 0 -1 -1")).unwrap());
    assert!(!degree_bound_holds(9, &Integer::from(23)));
    assert!(degree_bound_holds(8, &Integer::from(23)));
    for (_, f) in standard_corpus() {
        assert!(degree_discriminant_check(&f).unwrap());
    }
}

#[test]
fn factorization_examples() {
    let cfg = PrecisionConfig::default();
    // (x - y)(x^2 + xy + y^2) = x^3 - y^3
    let fact = factor_over_z(&form("1 0 0 -1"), &cfg).unwrap();
    assert_eq!(fact.factors.len(), 2);
    assert_eq!(fact.product(), form("1 0 0 -1"));
    let fact = factor_over_z(&form("2 0 0 2"), &cfg).unwrap();
    assert_eq!(fact.content, 2);
    let mut degs: Vec<usize> = fact.factors.iter().map(|(g, _)| g.degree()).collect();
    degs.sort();
    assert_eq!(degs, vec![1, 2]);
    for (_, f) in standard_corpus() {
        assert!(factor_over_z(&f, &cfg).unwrap().is_irreducible(), "{f}");
    }
}

#[test]
fn families_hit_their_solutions() {
    for n in 3..=8 {
        for p in [2u64, 3, 5, 1009] {
            let f = f1(n, p);
            for k in 1..=n as i64 {
                assert_eq!(f.eval_i64(1, k), 1);
            }
        }
    }
    for n in [4, 6, 8] {
        for p in [2u64, 5] {
            let f = even(n, p);
            for k in 1..=(n / 2) as i64 {
                assert_eq!(f.eval_i64(1, k), 1);
            }
        }
    }
    assert_eq!(f1(3, 2), form("13 -22 12 -2"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discriminant_law(seed in any::<u64>(), n in 3usize..=6) {
        let mut r = rng(seed);
        let f = random_form(&mut r, n, 9);
        let a = random_matrix(&mut r, &[-3, -2, -1, 1, 2, 3]);
        let fa = apply_matrix(&f, &a).unwrap();
        let e = (n * (n - 1)) as u32;
        let want = discriminant_any(&f).unwrap() * Integer::from(a.det().pow(e));
        prop_assert_eq!(discriminant_any(&fa).unwrap(), want);
    }

    #[test]
    fn factors_multiply_back(seed in any::<u64>(), d1 in 1usize..=3, d2 in 1usize..=3) {
        let mut r = rng(seed);
        let g = random_coeffs(&mut r, d1, 5);
        let h = random_coeffs(&mut r, d2, 5);
        let coeffs: Vec<Integer> = {
            let (a, b) = (&g, &h);
            let mut out = vec![Integer::new(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += Integer::from(x * y);
                }
            }
            out
        };
        let f = BinaryForm::new(coeffs).unwrap();
        let fact = factor_over_z(&f, &PrecisionConfig::default()).unwrap();
        prop_assert_eq!(fact.product(), f);
        prop_assert!(!fact.is_irreducible());
    }

    #[test]
    fn unimodular_change_permutes_solutions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_form(&mut r, 3, 4);
        let a = random_matrix(&mut r, &[1, -1]);
        let fa = apply_matrix(&f, &a).unwrap();
        // a box for F_A large enough to contain the preimages of F's small solutions
        let small = solve_in_box(&f, &SearchBox::new(20).unwrap()).unwrap();
        let wide = solve_in_box(&fa, &SearchBox::new(200).unwrap()).unwrap();
        let mapped = transport(&wide, &f, &a);
        for s in small {
            prop_assert!(mapped.contains(&s), "{:?} lost", s);
        }
        prop_assert!(mapped.len() == wide.len());
    }
}
