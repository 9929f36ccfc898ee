mod common;

use common::*;
use proptest::prelude::*;
use rug::Integer;
use thuekit::forms::discriminant;
use thuekit::heights::{log_height_of, mahler_measure_poly};
use thuekit::roots::{isolate_roots, reconstruct_min_poly, simplest_rational};
use thuekit::{find_roots, Interval, IntPoly, PrecisionConfig};

/// Jensen's formula on the unit circle, trapezoid rule in f64.
fn mahler_jensen(p: &IntPoly) -> f64 {
    let c: Vec<f64> = p.coeffs().iter().map(|a| a.to_f64()).collect();
    let m = 4096;
    let mut acc = 0.0;
    for k in 0..m {
        let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for a in &c {
            let (nr, ni) = (re * t.cos() - im * t.sin(), re * t.sin() + im * t.cos());
            re = nr + a;
            im = ni;
        }
        acc += (re * re + im * im).sqrt().ln();
    }
    (acc / m as f64).exp()
}

#[test]
fn golden_ratio_and_sqrt2() {
    let cfg = PrecisionConfig::default();
    let h = log_height_of(&IntPoly::from_i64(&[1, 0, -2]), &cfg).unwrap();
    assert!((h.value.to_f64() - 2f64.ln() / 2.0).abs() < 1e-15);
    let g = IntPoly::from_i64(&[1, -1, -1]);
    let rs = isolate_roots(&g, &cfg).unwrap();
    let m = mahler_measure_poly(&g, &rs);
    assert!((m.to_f64() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
    assert!(m.width().to_f64() < 1e-60);
    assert_eq!((rs.r(), rs.s()), (2, 0));
}

#[test]
fn mahler_matches_jensen() {
    for line in ["13 -22 12 -2", "1 0 -1 -1", "2 0 0 1", "1 0 -4 1 1", "3 1 0 0 -1", "1 0 0 0 -1 -1"] {
        let p = form(line).dehomogenize();
        let rs = isolate_roots(&p, &PrecisionConfig::default()).unwrap();
        let m = mahler_measure_poly(&p, &rs).to_f64();
        let j = mahler_jensen(&p);
        assert!((m - j).abs() < 1e-9 * j, "{line}: {m} vs {j}");
    }
}

#[test]
fn cubic_root_values() {
    // x^3 - x - 1 has one real root, the plastic number
    let rs = find_roots(&form("1 0 -1 -1"), &PrecisionConfig::default()).unwrap();
    assert_eq!((rs.r(), rs.s()), (1, 1));
    let real = (0..3).find(|&i| rs.is_real(i)).unwrap();
    assert!((rs.root(real).re.to_f64() - 1.324_717_957_244_746).abs() < 1e-15);
}

#[test]
fn minimal_polynomial_of_root_sum() {
    let cfg = PrecisionConfig::default();
    let a = isolate_roots(&IntPoly::from_i64(&[1, 0, -2]), &cfg).unwrap();
    let b = isolate_roots(&IntPoly::from_i64(&[1, 0, -3]), &cfg).unwrap();
    let mut sums = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            sums.push(a.root(i).add(b.root(j)));
        }
    }
    let mp = reconstruct_min_poly(&sums, &cfg).unwrap();
    assert_eq!(mp, IntPoly::from_i64(&[1, 0, -10, 0, 1]));
}

#[test]
fn simplest_rational_examples() {
    let iv = Interval::ratio(1, 3, 128);
    assert_eq!(simplest_rational(&iv).unwrap(), rug::Rational::from((1, 3)));
    let wide = Interval::new(rug::Float::with_val(64, 0.3), rug::Float::with_val(64, 0.4));
    assert_eq!(simplest_rational(&wide).unwrap(), rug::Rational::from((1, 3)));
}

#[test]
fn precision_is_validated() {
    assert!(PrecisionConfig::new(32).is_err());
    assert!(find_roots(&form("1 0 0 0"), &PrecisionConfig::default()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vieta_and_signature(seed in any::<u64>(), n in 2usize..=8) {
        let mut r = rng(seed);
        let f = random_form(&mut r, n, 20);
        let rs = find_roots(&f, &PrecisionConfig::default()).unwrap();
        prop_assert_eq!(rs.r() + 2 * rs.s(), n);
        let c = f.coeffs();
        let p = rs.prec();
        let lead = Interval::from_int(&c[0], p);
        let (sum, prod) = rs.vieta();
        let want_sum = Interval::from_int(&Integer::from(-&c[1]), p).div(&lead);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let want_prod = Interval::from_int(&Integer::from(&c[n] * sign), p).div(&lead);
        prop_assert!(sum.re.overlaps(&want_sum) && sum.im.contains_zero());
        prop_assert!(prod.re.overlaps(&want_prod) && prod.im.contains_zero());
        for i in 0..n {
            let j = rs.conjugate(i);
            prop_assert_eq!(rs.conjugate(j), i);
            prop_assert!(rs.root(i).conj().overlaps(rs.root(j)));
            prop_assert_eq!(i == j, rs.is_real(i));
            prop_assert!(f.dehomogenize().eval_complex(rs.root(i)).contains_zero());
        }
    }

    #[test]
    fn monic_derivative_product_is_discriminant(seed in any::<u64>(), n in 2usize..=7) {
        let mut r = rng(seed);
        let mut c = random_form(&mut r, n, 12).coeffs().to_vec();
        c[0] = Integer::from(1);
        let f = thuekit::BinaryForm::new(c).unwrap();
        prop_assume!(discriminant(&f).unwrap() != 0);
        let rs = find_roots(&f, &PrecisionConfig::default()).unwrap();
        let p = rs.prec();
        let prod = rs.derivative_values().iter().fold(Interval::one(p), |a, v| a.mul(v));
        prop_assert!(prod.contains_int(&discriminant(&f).unwrap().abs()));
    }

    #[test]
    fn doubling_precision_agrees(seed in any::<u64>(), n in 3usize..=6) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, n, 20);
        let lo = isolate_roots(&p, &PrecisionConfig::new(128).unwrap()).unwrap();
        let hi = isolate_roots(&p, &PrecisionConfig::new(256).unwrap()).unwrap();
        let m1 = mahler_measure_poly(&p, &lo);
        let m2 = mahler_measure_poly(&p, &hi);
        prop_assert!(m1.overlaps(&m2));
        prop_assert!(m2.width() <= m1.width());
    }
}
