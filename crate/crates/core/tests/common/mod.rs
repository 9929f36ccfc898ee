#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Integer;
use thuekit::forms::{discriminant_any, family_even, family_f1, IntMatrix};
use thuekit::{BinaryForm, IntPoly};

pub fn form(line: &str) -> BinaryForm {
    BinaryForm::parse(line).unwrap()
}

pub fn f1(n: usize, p: u64) -> BinaryForm {
    family_f1(n, &Integer::from(p)).unwrap()
}

pub fn even(n: usize, p: u64) -> BinaryForm {
    family_even(n, &Integer::from(p)).unwrap()
}

/// Irreducible forms of degree 3 to 6: both families and a few classical
/// cubics and quartics.
pub fn standard_corpus() -> Vec<(String, BinaryForm)> {
    let mut out = Vec::new();
    for n in [3, 4, 5] {
        for p in [2, 3, 1009] {
            out.push((format!("f1({n},{p})"), f1(n, p)));
        }
    }
    for n in [4, 6] {
        for p in [2, 3, 5] {
            out.push((format!("even({n},{p})"), even(n, p)));
        }
    }
    for line in [
        "1 0 -1 -1",
        "1 0 0 2",
        "1 -1 -2 1",
        "1 1 -2 -1",
        "1 0 -3 -1",
        "2 0 0 1",
        "1 -1 -1 1 1",
        "1 0 -4 1 1",
        "3 1 0 0 -1",
        "1 0 0 0 -1 -1",
    ] {
        out.push((line.to_string(), form(line)));
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Form with `a_n != 0` and, from degree 2 on, nonzero discriminant.
pub fn random_form(rng: &mut ChaCha8Rng, n: usize, c: i64) -> BinaryForm {
    loop {
        let mut v: Vec<i64> = (0..=n).map(|_| rng.gen_range(-c..=c)).collect();
        if v[0] == 0 {
            v[0] = 1;
        }
        let f = BinaryForm::from_i64(&v).unwrap();
        if n < 2 || discriminant_any(&f).unwrap() != 0 {
            return f;
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, c: i64) -> IntPoly {
    let f = random_form(rng, n, c);
    IntPoly::new(f.coeffs().to_vec())
}

/// Integer matrix with entries in `[-3, 3]` and determinant in `dets`.
pub fn random_matrix(rng: &mut ChaCha8Rng, dets: &[i64]) -> IntMatrix {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
        let m = IntMatrix::from_i64(e[0], e[1], e[2], e[3]);
        if dets.iter().any(|&d| m.det() == d) {
            return m;
        }
    }
}

/// Coefficients `a_n..a_0` with `a_n != 0`, no discriminant condition.
pub fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, c: i64) -> Vec<Integer> {
    let mut v: Vec<Integer> = (0..=n).map(|_| Integer::from(rng.gen_range(-c..=c))).collect();
    if v[0] == 0 {
        v[0] = Integer::from(1);
    }
    v
}
