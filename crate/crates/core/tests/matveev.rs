use proptest::prelude::*;
use rug::Integer;
use thuekit::matveev::{c0, d0, h1_check, log_c, matveev_bound, counting_constants, w0, MatveevInput};
use thuekit::report::agree;
use thuekit::verdict::Outcome;
use thuekit::Interval;

fn c0_f64(n: f64, d: f64) -> f64 {
    (4.4 * n + 7.0) + 5.5 * n.ln() + 2.0 * d.ln() + (1.0 + n.ln()).ln()
}

fn d0_oracle(n: u32) -> Integer {
    let mut acc = Integer::from(1);
    for _ in 0..22 {
        acc *= 2;
    }
    for _ in 0..10 {
        acc *= n + 1;
    }
    for _ in 0..n {
        acc *= n;
    }
    acc
}

#[test]
fn reference_values() {
    let c = log_c(2, 1, 256).unwrap().exp().to_f64();
    assert!((c / 7.7745e6 - 1.0).abs() < 1e-3);
    let v = c0(5, 120, 256).to_f64();
    assert!((v / 48.39 - 1.0).abs() < 1e-3);
    assert!((v - c0_f64(5.0, 120.0)).abs() < 1e-12);
    for n in [3u32, 4, 5, 6, 10] {
        assert_eq!(d0(n as usize), d0_oracle(n));
    }
}

#[test]
fn bound_assembles_from_parts() {
    let p = 256;
    let input = MatveevInput {
        n: 3,
        chi: 1,
        d: 4,
        a: vec![Interval::from_i64(2, p), Interval::from_i64(3, p), Interval::from_i64(5, p)],
        b: Interval::from_i64(10, p),
    };
    let out = matveev_bound(&input, p).unwrap();
    let want = out.log_c.to_f64() + out.c0.to_f64().ln() + out.w0.to_f64().ln() + 2.0 * 4f64.ln() + 30f64.ln();
    assert!((out.log_product.unwrap().to_f64() - want).abs() < 1e-12);
    let e = std::f64::consts::E;
    assert!((out.w0.to_f64() - (1.5 * e * 10.0 * 4.0 * (e * 4.0).ln()).ln()).abs() < 1e-12);
    assert!(counting_constants(2, p).is_err());
}

#[test]
fn h1_inequality_by_dimension() {
    let p = 256;
    let v2 = [Interval::from_i64(3, p), Interval::from_i64(-3, p)];
    assert!(h1_check(&v2, p).pass);
    // in three dimensions the l1 norm can exceed sqrt(2) times the l2 norm,
    // also on the sum-zero hyperplane
    let v3 = [Interval::from_i64(1, p), Interval::from_i64(1, p), Interval::from_i64(-2, p)];
    assert_eq!(h1_check(&v3, p).outcome, Outcome::Violated);
    let v3 = vec![Interval::from_i64(1, p); 3];
    assert_eq!(h1_check(&v3, p).outcome, Outcome::Violated);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn precision_doubling_agrees(n in 1usize..=20, d in 1u64..=1000, chi in 1u32..=2, bits in prop::sample::select(vec![128u32, 256, 512])) {
        let a = log_c(n, chi, bits).unwrap();
        let b = log_c(n, chi, 2 * bits).unwrap();
        prop_assert!(agree(&a, &b, bits));
        let a = c0(n, d, bits);
        let b = c0(n, d, 2 * bits);
        prop_assert!(agree(&a, &b, bits));
        prop_assert!((a.to_f64() - c0_f64(n as f64, d as f64)).abs() < 1e-9 * a.to_f64());
        let bw = Interval::from_i64(2, bits);
        prop_assert!(agree(&w0(&bw, d, bits), &w0(&bw.with_prec(2 * bits), d, 2 * bits), bits));
    }

    #[test]
    fn monotone_in_n_and_d(n in 1usize..=15, d in 1u64..=500) {
        prop_assert!(log_c(n, 1, 256).unwrap().certainly_lt(&log_c(n + 1, 1, 256).unwrap()));
        prop_assert!(c0(n, d, 256).certainly_lt(&c0(n, d + 1, 256)));
    }

    #[test]
    fn h1_holds_in_dimension_two(a in -1e6f64..1e6, b in -1e6f64..1e6) {
        let p = 256;
        let v = [Interval::from_f64(a, p), Interval::from_f64(b, p)];
        prop_assert!(h1_check(&v, p).pass);
    }
}
