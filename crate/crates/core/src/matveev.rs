//! Explicit constants for Matveev's lower bound on linear forms in logarithms
//! and the constants built from it, all kept as natural logarithms.

use rug::{Complete, Integer};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::verdict::{Relation, Verdict};

/// Working precision floor for everything in this module.
pub const MIN_PREC: u32 = 128;

#[derive(Clone, Debug)]
pub struct MatveevInput {
    /// Number of logarithms.
    pub n: usize,
    pub chi: u32,
    /// Degree of the number field.
    pub d: u64,
    pub a: Vec<Interval>,
    pub b: Interval,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatveevOutput {
    pub n: usize,
    pub chi: u32,
    pub d: u64,
    pub log_c: Interval,
    pub c0: Interval,
    pub w0: Interval,
    /// `None` when no height bounds were given.
    pub log_omega: Option<Interval>,
    /// `log(C(n) C0 W0 d^2 Omega)`; the bound reads `log|L| > -exp(log_product)`.
    pub log_product: Option<Interval>,
}

fn ser_int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct CountingConstants {
    pub n: usize,
    pub log_k: Interval,
    pub log_k1: Interval,
    #[serde(serialize_with = "ser_int")]
    pub d0: Integer,
    pub log_d0: Interval,
}

fn ln_i(k: i64, p: u32) -> Interval {
    Interval::from_i64(k, p).ln()
}

fn ln_factorial(n: usize, p: u32) -> Interval {
    let f = Integer::factorial(n as u32).complete();
    Interval::from_int(&f, p).ln()
}

/// `e / (e - 1)`.
pub fn e_ratio(p: u32) -> Interval {
    let e = Interval::e(p);
    e.div(&e.sub(&Interval::one(p)))
}

/// `log C(n, chi)` with
/// `C(n, chi) = 16/(n! chi) e^n (2n+1+2chi)(n+2)(4n+4)^(n+1)(en/2)^chi`.
pub fn log_c(n: usize, chi: u32, prec: u32) -> Result<Interval> {
    if chi != 1 && chi != 2 {
        return Err(Error::InvalidChi(chi));
    }
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let p = prec.max(MIN_PREC);
    let ni = n as i64;
    let ch = chi as i64;
    let en_half = Interval::one(p).add(&Interval::ratio(ni, 2, p).ln());
    Ok(ln_i(16, p)
        .sub(&ln_factorial(n, p))
        .sub(&ln_i(ch, p))
        .add(&Interval::from_i64(ni, p))
        .add(&ln_i(2 * ni + 1 + 2 * ch, p))
        .add(&ln_i(ni + 2, p))
        .add(&ln_i(4 * ni + 4, p).mul_int(ni + 1))
        .add(&en_half.mul_int(ch)))
}

/// `C0 = log(e^(4.4n+7) n^5.5 d^2 log(en))`.
pub fn c0(n: usize, d: u64, prec: u32) -> Interval {
    let p = prec.max(MIN_PREC);
    let ni = n as i64;
    let ln_n = ln_i(ni, p);
    Interval::ratio(22 * ni + 35, 5, p)
        .add(&ln_n.mul(&Interval::ratio(11, 2, p)))
        .add(&ln_i(d as i64, p).mul_int(2))
        .add(&Interval::one(p).add(&ln_n).ln())
}

/// `W0 = log(1.5 e B d log(ed))`.
pub fn w0(b: &Interval, d: u64, prec: u32) -> Interval {
    let p = prec.max(MIN_PREC);
    let ln_d = ln_i(d as i64, p);
    Interval::ratio(3, 2, p)
        .ln()
        .add(&Interval::one(p))
        .add(&b.with_prec(p).ln())
        .add(&ln_d)
        .add(&Interval::one(p).add(&ln_d).ln())
}

pub fn matveev_bound(input: &MatveevInput, prec: u32) -> Result<MatveevOutput> {
    let p = prec.max(MIN_PREC);
    if input.d == 0 {
        return Err(Error::InvalidInput("d must be at least 1".into()));
    }
    if !input.b.is_finite() || *input.b.lo() < 1 {
        return Err(Error::InvalidInput("B must be at least 1".into()));
    }
    let lc = log_c(input.n, input.chi, p)?;
    let c0 = c0(input.n, input.d, p);
    let w0 = w0(&input.b, input.d, p);
    let log_omega = if input.a.is_empty() {
        None
    } else {
        let mut acc = Interval::zero(p);
        for (j, a) in input.a.iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::NonPositiveA(j + 1));
            }
            acc = acc.add(&a.with_prec(p).ln());
        }
        Some(acc)
    };
    let log_product = log_omega.as_ref().map(|lo| {
        lc.add(&c0.ln())
            .add(&w0.ln())
            .add(&ln_i(input.d as i64, p).mul_int(2))
            .add(lo)
    });
    Ok(MatveevOutput {
        n: input.n,
        chi: input.chi,
        d: input.d,
        log_c: lc,
        c0,
        w0,
        log_omega,
        log_product,
    })
}

/// `D0(n) = 2^22 (n+1)^10 n^n`.
pub fn d0(n: usize) -> Integer {
    let n32 = n as u32;
    (Integer::from(1) << 22u32)
        * Integer::u_pow_u(n32 + 1, 10).complete()
        * Integer::u_pow_u(n32, n32).complete()
}

/// `log K`, then `log K1 = (e/(e-1)) log((n+1)^2 K / 4)`, and `D0`.
pub fn counting_constants(n: usize, prec: u32) -> Result<CountingConstants> {
    if n < 3 {
        return Err(Error::DegreeTooLow(n));
    }
    let p = prec.max(MIN_PREC);
    let ni = n as i64;
    let ln_fact = ln_factorial(n, p);
    let log_k = ln_i(480, p)
        .add(&Interval::from_i64(ni, p))
        .add(&ln_i(ni + 1, p).mul_int(ni + 1))
        .add(&ln_i(2, p).mul(&Interval::ratio(14 * ni + 3, 2, p)))
        .add(&ln_i(ni + 2, p))
        .add(&Interval::ratio(2 * ni + 5, 2, p).ln())
        .add(&ln_i(ni, p).mul(&Interval::ratio(5, 2, p)))
        .add(&ln_i(ni - 1, p))
        .add(&ln_i(ni - 2, p))
        .add(&ln_fact)
        .add(&ln_fact.ln());
    let log_k1 = e_ratio(p).mul(&ln_i(ni + 1, p).mul_int(2).add(&log_k).sub(&ln_i(4, p)));
    let d0 = d0(n);
    let log_d0 = Interval::from_int(&d0, p).ln();
    Ok(CountingConstants { n, log_k, log_k1, d0, log_d0 })
}

/// Whether `|D| > D0(n)`.
pub fn exceeds_d0(abs_d: &Integer, n: usize) -> bool {
    *abs_d > d0(n)
}

/// Checks `r3 < K1 r1^(e n/(e-1))` on a concrete triple, and whether the lower
/// bound for `r3` from the exponential gap exceeds `K1 r1^(1.6 n)`, which is
/// the contradiction that caps the number of large solutions.
pub fn check_r3_r1_relation(r1: &Interval, r3: &Interval, n: usize, log_mahler: &Interval) -> Result<Vec<Verdict>> {
    if !r1.is_positive() || !r3.is_positive() {
        return Err(Error::InvalidInput("r1 and r3 must be positive".into()));
    }
    let p = r1.prec().min(r3.prec()).max(MIN_PREC);
    let pc = counting_constants(n, p)?;
    let ni = n as i64;
    let ln_r1 = r1.with_prec(p).ln();
    let exp_e = e_ratio(p).mul_int(ni);
    let exp_16 = Interval::ratio(8 * ni, 5, p);
    let tag = format!("n = {n}; r1 = {}; r3 = {}", r1.mid().to_f64(), r3.mid().to_f64());

    let rhs_e = pc.log_k1.add(&exp_e.mul(&ln_r1));
    let mut out = vec![Verdict::new("r3_r1_relation", &tag, r3.with_prec(p).ln(), Relation::Lt, rhs_e.clone())];

    let ln_n = ln_i(ni, p);
    let lhs = log_mahler
        .with_prec(p)
        .mul_int(ni * (ni - 1))
        .add(&r1.with_prec(p).mul_int(4).div_int((ni + 1) * (ni + 1)))
        .add(&Interval::from_i64(3, p).sqrt().div_int(256).ln())
        .add(&ln_n.ln().div(&ln_n).ln().mul_int(6));
    let rhs_16 = pc.log_k1.add(&exp_16.mul(&ln_r1));
    out.push(
        Verdict::new("exg_contradiction", &tag, lhs.clone(), Relation::Gt, rhs_16)
            .with_note("exponent 1.6 n"),
    );
    out.push(
        Verdict::new("exg_contradiction", &tag, lhs, Relation::Gt, rhs_e).with_note("exponent e n / (e - 1)"),
    );
    Ok(out)
}

/// `(|v|_1, sqrt(2) ||v||)` for the logarithmic embedding `v` of a unit; the
/// heights of `lambda / lambda'` are bounded through the second value.
pub fn h1_sides(v: &[Interval], prec: u32) -> (Interval, Interval) {
    let l1 = Interval::sum(v.iter().map(|x| x.abs()).collect::<Vec<_>>().iter(), prec);
    let l2 = Interval::sum(v.iter().map(|x| x.sqr()).collect::<Vec<_>>().iter(), prec).sqrt();
    (l1, Interval::from_i64(2, prec).sqrt().mul(&l2))
}

pub fn h1_check(v: &[Interval], prec: u32) -> Verdict {
    let (l1, rhs) = h1_sides(v, prec);
    Verdict::new("h1", format!("dimension {}", v.len()), l1, Relation::Le, rhs)
}
