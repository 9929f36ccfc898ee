//! Outward-rounded interval arithmetic over MPFR floats.
//!
//! Every operation rounds its lower endpoint down and its upper endpoint up, so
//! the exact real result is always enclosed. Operations that leave their
//! domain (division by an interval containing zero, logarithm of a
//! non-positive interval, anything involving an infinite endpoint) return the
//! entire real line rather than failing; comparisons on such intervals are
//! never certified, which is the only way a verdict can be affected.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round, Special};
use rug::ops::AssignRound;
use rug::{Float, Integer, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

fn rounded<T>(prec: u32, val: T, round: Round) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, round).0
}

#[derive(Clone, Debug)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl Interval {
    /// Builds `[lo, hi]`; a NaN endpoint or `lo > hi` yields the entire line.
    pub fn new(lo: Float, hi: Float) -> Self {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            let prec = lo.prec().max(hi.prec());
            return Self::entire(prec);
        }
        Interval { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn entire(prec: u32) -> Self {
        Interval {
            lo: Float::with_val(prec, Special::NegInfinity),
            hi: Float::with_val(prec, Special::Infinity),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::point(Float::with_val(prec, 1))
    }

    pub fn from_int(v: &Integer, prec: u32) -> Self {
        Interval {
            lo: rounded(prec, v, Round::Down),
            hi: rounded(prec, v, Round::Up),
        }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_int(&Integer::from(v), prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        // f64 values are exact at any precision >= 53.
        Self::point(Float::with_val(prec.max(53), v))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Interval {
            lo: rounded(prec, q, Round::Down),
            hi: rounded(prec, q, Round::Up),
        }
    }

    pub fn ratio(num: i64, den: i64, prec: u32) -> Self {
        Self::from_rational(&Rational::from((num, den)), prec)
    }

    pub fn pi(prec: u32) -> Self {
        Interval {
            lo: rounded(prec, Constant::Pi, Round::Down),
            hi: rounded(prec, Constant::Pi, Round::Up),
        }
    }

    /// Euler's number e.
    pub fn e(prec: u32) -> Self {
        Self::one(prec).exp()
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn mid(&self) -> Float {
        if !self.is_finite() {
            return Float::with_val(self.prec(), Special::Nan);
        }
        let mut m = Float::with_val(self.prec() + 1, &self.lo + &self.hi);
        m /= 2;
        Float::with_val(self.prec(), m)
    }

    /// Upper bound on the half-width.
    pub fn rad(&self) -> Float {
        if !self.is_finite() {
            return Float::with_val(self.prec(), Special::Infinity);
        }
        let mut w = rounded(self.prec(), &self.hi - &self.lo, Round::Up);
        w /= 2;
        w
    }

    pub fn width(&self) -> Float {
        rounded(self.prec(), &self.hi - &self.lo, Round::Up)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn contains(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn contains_int(&self, v: &Integer) -> bool {
        self.lo <= *v && self.hi >= *v
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let lo = if self.lo < other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi > other.hi { &self.hi } else { &other.hi };
        Interval::new(lo.clone(), hi.clone())
    }

    /// Whether `self < other` holds for every pair of members.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    /// Rounds to a different working precision, outward.
    pub fn with_prec(&self, prec: u32) -> Interval {
        Interval {
            lo: rounded(prec, &self.lo, Round::Down),
            hi: rounded(prec, &self.hi, Round::Up),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        Interval::new(
            rounded(p, &self.lo + &o.lo, Round::Down),
            rounded(p, &self.hi + &o.hi, Round::Up),
        )
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        Interval::new(
            rounded(p, &self.lo - &o.hi, Round::Down),
            rounded(p, &self.hi - &o.lo, Round::Up),
        )
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        if !self.is_finite() || !o.is_finite() {
            return Interval::entire(p);
        }
        let pairs = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = rounded(p, a * b, Round::Down);
            let u = rounded(p, a * b, Round::Up);
            lo = Some(match lo {
                Some(l) if l < d => l,
                _ => d,
            });
            hi = Some(match hi {
                Some(h) if h > u => h,
                _ => u,
            });
        }
        Interval::new(lo.unwrap(), hi.unwrap())
    }

    pub fn div(&self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        if !self.is_finite() || !o.is_finite() || o.contains_zero() {
            return Interval::entire(p);
        }
        let pairs = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = rounded(p, a / b, Round::Down);
            let u = rounded(p, a / b, Round::Up);
            lo = Some(match lo {
                Some(l) if l < d => l,
                _ => d,
            });
            hi = Some(match hi {
                Some(h) if h > u => h,
                _ => u,
            });
        }
        Interval::new(lo.unwrap(), hi.unwrap())
    }

    pub fn recip(&self) -> Interval {
        Interval::one(self.prec()).div(self)
    }

    pub fn mul_int(&self, k: i64) -> Interval {
        self.mul(&Interval::from_i64(k, self.prec()))
    }

    pub fn div_int(&self, k: i64) -> Interval {
        self.div(&Interval::from_i64(k, self.prec()))
    }

    pub fn sqr(&self) -> Interval {
        let p = self.prec();
        if !self.is_finite() {
            return Interval::entire(p);
        }
        if self.lo >= 0 {
            Interval::new(
                rounded(p, self.lo.square_ref(), Round::Down),
                rounded(p, self.hi.square_ref(), Round::Up),
            )
        } else if self.hi <= 0 {
            Interval::new(
                rounded(p, self.hi.square_ref(), Round::Down),
                rounded(p, self.lo.square_ref(), Round::Up),
            )
        } else {
            let a = rounded(p, self.lo.square_ref(), Round::Up);
            let b = rounded(p, self.hi.square_ref(), Round::Up);
            Interval::new(Float::new(p), if a > b { a } else { b })
        }
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            self.neg()
        } else {
            let p = self.prec();
            let nl = Float::with_val(p, -&self.lo);
            let hi = if nl > self.hi { nl } else { self.hi.clone() };
            Interval::new(Float::new(p), hi)
        }
    }

    /// Square root of the non-negative part; an entirely negative interval
    /// gives the entire line.
    pub fn sqrt(&self) -> Interval {
        let p = self.prec();
        if self.hi < 0 || self.hi.is_nan() {
            return Interval::entire(p);
        }
        let mut lo = if self.lo < 0 {
            Float::new(p)
        } else {
            self.lo.clone()
        };
        let mut hi = self.hi.clone();
        lo.sqrt_round(Round::Down);
        hi.sqrt_round(Round::Up);
        Interval::new(lo, hi)
    }

    pub fn ln(&self) -> Interval {
        let p = self.prec();
        if self.lo <= 0 || !self.is_finite() {
            return Interval::entire(p);
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        lo.ln_round(Round::Down);
        hi.ln_round(Round::Up);
        Interval::new(lo, hi)
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        if !self.is_finite() {
            return Interval::entire(p);
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        lo.exp_round(Round::Down);
        hi.exp_round(Round::Up);
        Interval::new(lo, hi)
    }

    pub fn powi(&self, k: u32) -> Interval {
        let mut result = Interval::one(self.prec());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        result
    }

    /// `self^e` for a positive base, via `exp(e ln self)`.
    pub fn pow(&self, e: &Interval) -> Interval {
        self.ln().mul(e).exp()
    }

    pub fn max(&self, o: &Interval) -> Interval {
        let lo = if self.lo > o.lo { &self.lo } else { &o.lo };
        let hi = if self.hi > o.hi { &self.hi } else { &o.hi };
        Interval::new(lo.clone(), hi.clone())
    }

    pub fn min(&self, o: &Interval) -> Interval {
        let lo = if self.lo < o.lo { &self.lo } else { &o.lo };
        let hi = if self.hi < o.hi { &self.hi } else { &o.hi };
        Interval::new(lo.clone(), hi.clone())
    }

    /// Intersects with `[floor, +inf)`, used when a lower bound is known a priori.
    pub fn clamp_below(&self, floor: &Interval) -> Interval {
        let lo = if self.lo < floor.lo {
            floor.lo.clone()
        } else {
            self.lo.clone()
        };
        let hi = if self.hi < lo { lo.clone() } else { self.hi.clone() };
        Interval::new(lo, hi)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Interval>>(items: I, prec: u32) -> Interval {
        items
            .into_iter()
            .fold(Interval::zero(prec), |acc, x| acc.add(x))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Interval> for &Interval {
            type Output = Interval;
            fn $method(self, rhs: &Interval) -> Interval {
                Interval::$method(self, rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(self)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_finite() {
            return write!(f, "[-inf, inf]");
        }
        write!(
            f,
            "{} ± {}",
            self.mid().to_string_radix(10, Some(20)),
            self.rad().to_string_radix(10, Some(3))
        )
    }
}

/// Decimal string for an upper bound of a non-negative float.
fn upper_decimal(x: &Float) -> String {
    if !x.is_finite() {
        return "inf".to_string();
    }
    if x.is_zero() {
        return "0".to_string();
    }
    let mut y = rounded(64, x, Round::Up);
    y *= 1.001f64;
    y.to_string_radix(10, Some(6))
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Interval", 2)?;
        let mid = if self.is_finite() {
            self.mid().to_string_radix(10, None)
        } else {
            "nan".to_string()
        };
        st.serialize_field("mid", &mid)?;
        st.serialize_field("rad", &upper_decimal(&self.rad()))?;
        st.end()
    }
}

/// Rectangular complex interval.
#[derive(Clone, Debug)]
pub struct CInterval {
    pub re: Interval,
    pub im: Interval,
}

impl CInterval {
    pub fn new(re: Interval, im: Interval) -> Self {
        CInterval { re, im }
    }

    pub fn from_real(re: Interval) -> Self {
        let p = re.prec();
        CInterval {
            re,
            im: Interval::zero(p),
        }
    }

    pub fn point(re: &Float, im: &Float) -> Self {
        CInterval {
            re: Interval::point(re.clone()),
            im: Interval::point(im.clone()),
        }
    }

    /// Box enclosing the closed disk of radius `rad` around `(re, im)`.
    pub fn ball(re: &Float, im: &Float, rad: &Float) -> Self {
        let p = re.prec().max(im.prec());
        let r = Interval::new(
            Float::with_val(p, -rad),
            Float::with_val_round(p, rad, Round::Up).0,
        );
        CInterval {
            re: Interval::point(re.clone()).add(&r),
            im: Interval::point(im.clone()).add(&r),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CInterval::new(re, im)
    }

    pub fn scale(&self, k: &Interval) -> CInterval {
        CInterval::new(self.re.mul(k), self.im.mul(k))
    }

    pub fn conj(&self) -> CInterval {
        CInterval::new(self.re.clone(), self.im.neg())
    }

    pub fn abs_sqr(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> Interval {
        self.abs_sqr().sqrt()
    }

    pub fn div(&self, o: &CInterval) -> CInterval {
        let den = o.abs_sqr();
        let num = self.mul(&o.conj());
        CInterval::new(num.re.div(&den), num.im.div(&den))
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, o: &CInterval) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl fmt::Display for CInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i", self.re, self.im)
    }
}

impl Serialize for CInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CInterval", 2)?;
        st.serialize_field("re", &self.re)?;
        st.serialize_field("im", &self.im)?;
        st.end()
    }
}
