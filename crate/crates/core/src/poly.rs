//! Dense univariate integer polynomials, coefficients stored highest degree first.

use std::fmt;

use rug::{Complete, Integer};

use crate::interval::{CInterval, Interval};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    /// Leading zeros are stripped; an all-zero input gives the zero polynomial.
    pub fn new(coeffs: Vec<Integer>) -> Self {
        let first = coeffs.iter().position(|c| *c != 0);
        let coeffs = match first {
            Some(i) => coeffs[i..].to_vec(),
            None => Vec::new(),
        };
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_i64(&[1, 0])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Integer {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in &self.coeffs {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_real(&self, x: &Interval) -> Interval {
        let p = x.prec();
        let mut acc = Interval::zero(p);
        for c in &self.coeffs {
            acc = acc.mul(x).add(&Interval::from_int(c, p));
        }
        acc
    }

    pub fn eval_complex(&self, z: &CInterval) -> CInterval {
        let p = z.prec();
        let mut acc = CInterval::from_real(Interval::zero(p));
        for c in &self.coeffs {
            acc = acc.mul(z).add(&CInterval::from_real(Interval::from_int(c, p)));
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        let n = self.degree();
        if self.coeffs.len() <= 1 {
            return IntPoly::new(Vec::new());
        }
        let coeffs = self.coeffs[..n]
            .iter()
            .enumerate()
            .map(|(i, c)| c * Integer::from(n - i))
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += (a * b).complete();
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let pad = |p: &IntPoly| -> Vec<Integer> {
            let mut v = vec![Integer::new(); len - p.coeffs.len()];
            v.extend(p.coeffs.iter().cloned());
            v
        };
        let a = pad(self);
        let b = pad(other);
        IntPoly::new(a.into_iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, k: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| (c * k).complete()).collect())
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs
            .iter()
            .fold(Integer::new(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.coeffs[0] < 0 {
            g = -g;
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.clone().div_exact(&g))
                .collect(),
        )
    }

    /// Exact quotient in Z[x], or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem: Vec<Integer> = self.coeffs.clone();
        let dl = &divisor.coeffs[0];
        let qlen = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            if !rem[i].is_divisible(dl) {
                return None;
            }
            let q = rem[i].clone().div_exact(dl);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= (&q * d).complete();
            }
            quot.push(q);
        }
        if rem.iter().any(|c| *c != 0) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// A nonzero integer multiple of the remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let mut r = self.clone();
        let dl = divisor.leading();
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let rl = r.leading();
            let mut shifted = divisor.scale(&rl).coeffs;
            shifted.extend(std::iter::repeat(Integer::new()).take(shift));
            r = r.scale(&dl).sub(&IntPoly::new(shifted));
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd(&self.derivative()).degree() == 0
    }

    /// `f / gcd(f, f')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Coefficients reversed: `x^n f(1/x)`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// Whether `self` is, up to sign, a cyclotomic polynomial.
    pub fn is_cyclotomic(&self) -> bool {
        let n = self.degree();
        if n == 0 || self.leading().abs_ref().complete() != 1 {
            return false;
        }
        let f = if self.leading() < 0 {
            self.scale(&Integer::from(-1))
        } else {
            self.clone()
        };
        // phi(k) = n forces k <= 2 n^2.
        let bound = 2 * n * n + 2;
        // x^k mod f, tracked as a coefficient vector of length n, lowest first.
        let low: Vec<Integer> = f.coeffs.iter().rev().cloned().collect();
        let mut cur = vec![Integer::new(); n];
        cur[0] = Integer::from(1);
        for _ in 1..=bound {
            // multiply by x and reduce with the monic f
            let top = cur[n - 1].clone();
            for i in (1..n).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Integer::new();
            if top != 0 {
                for i in 0..n {
                    cur[i] -= (&top * &low[i]).complete();
                }
            }
            // x^k == 1 mod f
            if cur[0] == 1 && cur[1..].iter().all(|c| *c == 0) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let e = n - i;
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
            if a != 1 || e == 0 {
                write!(f, "{}", a)?;
            }
            match e {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", e)?,
            }
        }
        Ok(())
    }
}
