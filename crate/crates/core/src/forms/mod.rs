//! Integer binary forms, their discriminants and the GL2(Z) action.

mod factor;

use std::fmt;
use std::str::FromStr;

use rug::{Complete, Integer};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

pub use factor::{factor_over_z, Factorization, MAX_FACTOR_DEGREE};

/// `a_n x^n + a_{n-1} x^{n-1} y + ... + a_0 y^n`, coefficients highest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Integer>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Integer>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DegreeTooLow(coeffs.len().saturating_sub(1)));
        }
        if coeffs.iter().all(|c| *c == 0) {
            return Err(Error::ZeroForm);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// Parses a line of whitespace-separated integers, `a_n` first.
    pub fn parse(line: &str) -> Result<Self> {
        let coeffs = line
            .split_whitespace()
            .map(|t| {
                Integer::from_str(t).map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient line".into()));
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// `a_n = F(1, 0)`.
    pub fn leading(&self) -> &Integer {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == 1
    }

    pub fn eval(&self, x: &Integer, y: &Integer) -> Integer {
        let mut acc = self.coeffs[0].clone();
        let mut ypow = Integer::from(1);
        for c in &self.coeffs[1..] {
            ypow *= y;
            acc *= x;
            acc += (c * &ypow).complete();
        }
        acc
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> Integer {
        self.eval(&Integer::from(x), &Integer::from(y))
    }

    /// `F(x, 1)`; its degree drops below `n` when `a_n = 0`.
    pub fn dehomogenize(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn negate(&self) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|c| (-c).complete()).collect(),
        }
    }

    /// `F(y, x)`.
    pub fn swap_variables(&self) -> BinaryForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm { coeffs }
    }

    pub fn content(&self) -> Integer {
        self.coeffs.iter().fold(Integer::new(), |g, c| g.gcd(c))
    }

    /// Space-separated coefficient line, the inverse of [`BinaryForm::parse`].
    pub fn to_line(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn naive_height(&self) -> Integer {
        self.coeffs
            .iter()
            .map(|c| c.clone().abs())
            .max()
            .unwrap_or_default()
    }

    pub fn length(&self) -> Integer {
        self.coeffs.iter().map(|c| c.clone().abs()).sum()
    }
}

impl FromStr for BinaryForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let (ex, ey) = (n - k, k);
            let neg = *c < 0;
            let a = c.clone().abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if a != 1 || n == 0 {
                write!(f, "{a}")?;
            }
            for (v, e) in [("x", ex), ("y", ey)] {
                match e {
                    0 => {}
                    1 => write!(f, "{v}")?,
                    _ => write!(f, "{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// `[[a, b], [c, d]]`, acting by `F_A(x, y) = F(ax + by, cx + dy)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

pub type UnimodularMatrix = IntMatrix;

impl IntMatrix {
    pub fn new(a: Integer, b: Integer, c: Integer, d: Integer) -> Self {
        IntMatrix { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> Integer {
        (&self.a * &self.d).complete() - (&self.b * &self.c).complete()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    /// `A (u, v)^T`.
    pub fn apply(&self, u: &Integer, v: &Integer) -> (Integer, Integer) {
        (
            (&self.a * u).complete() + (&self.b * v).complete(),
            (&self.c * u).complete() + (&self.d * v).complete(),
        )
    }

    /// Integer preimage of `(x, y)`, if it exists.
    pub fn preimage(&self, x: &Integer, y: &Integer) -> Option<(Integer, Integer)> {
        let det = self.det();
        if det == 0 {
            return None;
        }
        let u = (&self.d * x).complete() - (&self.b * y).complete();
        let v = (&self.a * y).complete() - (&self.c * x).complete();
        if u.is_divisible(&det) && v.is_divisible(&det) {
            Some((u.div_exact(&det), v.div_exact(&det)))
        } else {
            None
        }
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let m = |p: &Integer, q: &Integer, r: &Integer, s: &Integer| {
            (p * q).complete() + (r * s).complete()
        };
        IntMatrix {
            a: m(&self.a, &o.a, &self.b, &o.c),
            b: m(&self.a, &o.b, &self.b, &o.d),
            c: m(&self.c, &o.a, &self.d, &o.c),
            d: m(&self.c, &o.b, &self.d, &o.d),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ];
        rows.serialize(s)
    }
}

/// Product of two homogeneous polynomials given by coefficient vectors.
fn hmul(p: &[Integer], q: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::new(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += (a * b).complete();
        }
    }
    out
}

fn hpowers(l: &[Integer], n: usize) -> Vec<Vec<Integer>> {
    let mut pows = vec![vec![Integer::from(1)]];
    for k in 1..=n {
        let next = hmul(&pows[k - 1], l);
        pows.push(next);
    }
    pows
}

/// `F_A(x, y) = F(ax + by, cx + dy)`.
pub fn apply_matrix(f: &BinaryForm, m: &IntMatrix) -> Result<BinaryForm> {
    if m.det() == 0 {
        return Err(Error::SingularMatrix);
    }
    let n = f.degree();
    let p1 = hpowers(&[m.a.clone(), m.b.clone()], n);
    let p2 = hpowers(&[m.c.clone(), m.d.clone()], n);
    let mut out = vec![Integer::new(); n + 1];
    for (k, c) in f.coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let term = hmul(&p1[n - k], &p2[k]);
        for (o, t) in out.iter_mut().zip(term) {
            *o += c * t;
        }
    }
    BinaryForm::new(out)
}

/// Fraction-free (Bareiss) determinant.
pub fn det_bareiss(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut sign = 1;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Integer::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = (&m[i][j] * &m[k][k]).complete() - (&m[i][k] * &m[k][j]).complete();
                m[i][j] = t.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Resultant of two polynomials of positive degree via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Integer {
    let (m, k) = (f.degree(), g.degree());
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for i in 0..k {
        let mut row = vec![Integer::new(); size];
        for (j, c) in f.coeffs().iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Integer::new(); size];
        for (j, c) in g.coeffs().iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det_bareiss(rows)
}

/// `D = (-1)^{n(n-1)/2} Res(f, f') / a_n` for `f = F(x, 1)`.
pub fn discriminant(f: &BinaryForm) -> Result<Integer> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow(n));
    }
    if *f.leading() == 0 {
        return Err(Error::LeadingCoefficientZero);
    }
    let p = f.dehomogenize();
    let res = resultant(&p, &p.derivative());
    let d = res.div_exact(f.leading());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Smallest shift `[[1, 0], [k, 1]]` (k >= 1) giving a nonzero leading coefficient,
/// or the identity when `a_n` is already nonzero.
pub fn leading_shift(f: &BinaryForm) -> IntMatrix {
    if *f.leading() != 0 {
        return IntMatrix::identity();
    }
    let mut k = 1i64;
    while f.eval_i64(1, k) == 0 {
        k += 1;
    }
    IntMatrix::from_i64(1, 0, k, 1)
}

/// Discriminant of any form of degree >= 2, shifting first when `a_n = 0`.
pub fn discriminant_any(f: &BinaryForm) -> Result<Integer> {
    let shift = leading_shift(f);
    discriminant(&apply_matrix(f, &shift)?)
}

pub fn is_prime(p: &Integer) -> bool {
    *p >= 2 && p.is_probably_prime(40) != rug::integer::IsPrime::No
}

/// Forms `F_{A_j}` for `A_0 = [[p, 0], [0, 1]]` and `A_j = [[0, -1], [p, j]]`.
pub fn prime_layer_decomposition(f: &BinaryForm, p: &Integer) -> Result<Vec<(IntMatrix, BinaryForm)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut mats = vec![IntMatrix::new(p.clone(), 0.into(), 0.into(), 1.into())];
    let mut j = Integer::from(1);
    while j <= *p {
        mats.push(IntMatrix::new(0.into(), (-1).into(), p.clone(), j.clone()));
        j += 1;
    }
    mats.into_iter()
        .map(|m| {
            let g = apply_matrix(f, &m)?;
            Ok((m, g))
        })
        .collect()
}

/// Result of moving a known solution to `(1, 0)`.
#[derive(Clone, Debug)]
pub struct MonicReduction {
    pub form: BinaryForm,
    pub matrix: IntMatrix,
    pub sign: i32,
}

impl MonicReduction {
    /// Maps a solution of the reduced form back to one of the original.
    pub fn to_original(&self, x: &Integer, y: &Integer) -> (Integer, Integer) {
        self.matrix.apply(x, y)
    }

    /// Maps a solution of the original form to one of the reduced form.
    pub fn to_reduced(&self, x: &Integer, y: &Integer) -> (Integer, Integer) {
        self.matrix
            .preimage(x, y)
            .expect("unimodular matrices have integral inverses")
    }
}

/// `G = eps F_A` with `A (1, 0) = (x0, y0)`, `det A = 1`, `G(1, 0) = 1`.
pub fn monic_reduce(f: &BinaryForm, x0: &Integer, y0: &Integer) -> Result<MonicReduction> {
    let (g, s, t) = x0.clone().gcd_cofactors(y0.clone(), Integer::new());
    if g != 1 {
        return Err(Error::NotCoprime(x0.to_string(), y0.to_string()));
    }
    let value = f.eval(x0, y0);
    if value.clone().abs() != 1 {
        return Err(Error::NotASolution(x0.to_string(), y0.to_string()));
    }
    let matrix = IntMatrix::new(x0.clone(), -t, y0.clone(), s);
    debug_assert_eq!(matrix.det(), 1);
    let mut form = apply_matrix(f, &matrix)?;
    let sign = if value == 1 { 1 } else { -1 };
    if sign < 0 {
        form = form.negate();
    }
    Ok(MonicReduction { form, matrix, sign })
}

fn linear_product(n: usize, squared: bool) -> Vec<Integer> {
    let mut acc = vec![Integer::from(1)];
    for k in 1..=n {
        let l = [Integer::from(k), Integer::from(-1)];
        acc = hmul(&acc, &l);
        if squared {
            acc = hmul(&acc, &l);
        }
    }
    acc
}

/// `x^n + p (x - y)(2x - y)...(nx - y)`.
pub fn family_f1(n: usize, p: &Integer) -> Result<BinaryForm> {
    if n < 3 {
        return Err(Error::DegreeTooLow(n));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut c: Vec<Integer> = linear_product(n, false).into_iter().map(|c| c * p).collect();
    c[0] += 1;
    BinaryForm::new(c)
}

/// `x^n + p (x - y)^2 (2x - y)^2 ... ((n/2)x - y)^2` for even `n >= 4`.
pub fn family_even(n: usize, p: &Integer) -> Result<BinaryForm> {
    if n < 4 {
        return Err(Error::DegreeTooLow(n));
    }
    if n % 2 != 0 {
        return Err(Error::InvalidInput(format!("degree {n} is odd")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut c: Vec<Integer> = linear_product(n / 2, true).into_iter().map(|c| c * p).collect();
    c[0] += 1;
    BinaryForm::new(c)
}

/// `n <= 3 + 2 log|D| / log 3`, decided exactly as `3^(n-3) <= D^2`.
pub fn degree_bound_holds(n: usize, abs_d: &Integer) -> bool {
    if n <= 3 {
        return true;
    }
    let lhs = Integer::u_pow_u(3, (n - 3) as u32).complete();
    lhs <= abs_d.clone().square()
}

pub fn degree_discriminant_check(f: &BinaryForm) -> Result<bool> {
    let d = discriminant_any(f)?;
    if d == 0 {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(degree_bound_holds(f.degree(), &d.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn evaluation_is_homogeneous() {
        let f = form(&[13, -22, 12, -2]);
        for k in 1..=3 {
            assert_eq!(f.eval_i64(1, k), 1);
        }
        assert_eq!(f.eval_i64(2, 0), 13 * 8);
        assert_eq!(f.eval_i64(0, 1), -2);
    }

    #[test]
    fn parse_round_trip() {
        let f = BinaryForm::parse(" 13 -22  12 -2 ").unwrap();
        assert_eq!(f.to_line(), "13 -22 12 -2");
        assert_eq!(f.to_string(), "13x^3 - 22x^2y + 12xy^2 - 2y^3");
        assert!(BinaryForm::parse("1 x 2").is_err());
        assert!(BinaryForm::parse("5").is_err());
        assert_eq!(BinaryForm::parse("0 0 0"), Err(Error::ZeroForm));
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(discriminant(&form(&[1, 0, -1, -1])).unwrap(), -23);
        assert_eq!(discriminant(&form(&[1, 0, -2])).unwrap(), 8);
        assert_eq!(discriminant(&form(&[1, 0, 1])).unwrap(), -4);
        assert_eq!(discriminant(&form(&[0, 1, 0])), Err(Error::LeadingCoefficientZero));
        assert_eq!(discriminant(&form(&[1, 1])), Err(Error::DegreeTooLow(1)));
        // non-monic quadratic: b^2 - 4ac
        assert_eq!(discriminant(&form(&[3, 5, -7])).unwrap(), 25 + 84);
        assert_eq!(discriminant_any(&form(&[0, 1, 0])).unwrap(), 1);
    }

    #[test]
    fn matrix_action() {
        let f = form(&[1, 0, -1, -1]);
        assert_eq!(apply_matrix(&f, &IntMatrix::identity()).unwrap(), f);
        let g = apply_matrix(&f, &IntMatrix::from_i64(1, 1, 0, 1)).unwrap();
        // (x + y)^3 - (x + y) y^2 - y^3
        assert_eq!(g, form(&[1, 3, 2, -1]));
        assert_eq!(discriminant(&g).unwrap(), -23);
        let h = apply_matrix(&f, &IntMatrix::from_i64(2, 0, 0, 1)).unwrap();
        assert_eq!(discriminant(&h).unwrap(), -1472);
        assert_eq!(
            apply_matrix(&f, &IntMatrix::from_i64(1, 2, 2, 4)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn prime_layers_cover_the_plane() {
        let f = form(&[1, 0, -1, -1]);
        let layers = prime_layer_decomposition(&f, &Integer::from(2)).unwrap();
        assert_eq!(layers.len(), 3);
        for (_, g) in &layers {
            assert_eq!(discriminant_any(g).unwrap().abs(), 64 * 23);
        }
        for x in -20..=20i64 {
            for y in -20..=20i64 {
                let (x, y) = (Integer::from(x), Integer::from(y));
                assert!(layers.iter().any(|(m, _)| m.preimage(&x, &y).is_some()));
            }
        }
        assert_eq!(
            prime_layer_decomposition(&f, &Integer::from(3)).unwrap().len(),
            4
        );
        assert!(prime_layer_decomposition(&f, &Integer::from(4)).is_err());
    }

    #[test]
    fn monic_reduction() {
        let f = form(&[13, -22, 12, -2]);
        let red = monic_reduce(&f, &1.into(), &1.into()).unwrap();
        assert!(red.form.is_monic());
        assert_eq!(
            discriminant(&red.form).unwrap().abs(),
            discriminant(&f).unwrap().abs()
        );
        assert_eq!(red.to_original(&1.into(), &0.into()), (1.into(), 1.into()));

        let m = form(&[1, 0, -1, -1]);
        let id = monic_reduce(&m, &1.into(), &0.into()).unwrap();
        assert_eq!(id.form, m);
        assert_eq!(id.matrix, IntMatrix::identity());
        assert_eq!(id.sign, 1);

        // F(0, 1) = -1
        let neg = monic_reduce(&m, &0.into(), &1.into()).unwrap();
        assert_eq!(neg.sign, -1);
        assert!(neg.form.is_monic());

        assert!(matches!(
            monic_reduce(&m, &2.into(), &2.into()),
            Err(Error::NotCoprime(..))
        ));
        assert!(matches!(
            monic_reduce(&m, &2.into(), &1.into()),
            Err(Error::NotASolution(..))
        ));
    }

    #[test]
    fn families() {
        let f = family_f1(3, &Integer::from(2)).unwrap();
        assert_eq!(f, form(&[13, -22, 12, -2]));
        let g = family_f1(4, &Integer::from(3)).unwrap();
        for k in 1..=4 {
            assert_eq!(g.eval_i64(1, k), 1);
        }
        let e = family_even(6, &Integer::from(5)).unwrap();
        for k in 1..=3 {
            assert_eq!(e.eval_i64(1, k), 1);
        }
        assert!(family_even(5, &Integer::from(5)).is_err());
        assert!(family_f1(3, &Integer::from(6)).is_err());
    }

    #[test]
    fn degree_bound() {
        assert!(degree_discriminant_check(&form(&[1, 0, -1, -1])).unwrap());
        assert!(!degree_bound_holds(9, &Integer::from(23)));
        assert!(degree_bound_holds(8, &Integer::from(23)));
        // equality: n = 5, |D| = 3
        assert!(degree_bound_holds(5, &Integer::from(3)));
        assert_eq!(
            degree_discriminant_check(&form(&[1, -2, 1])),
            Err(Error::ZeroDiscriminant)
        );
    }
}
