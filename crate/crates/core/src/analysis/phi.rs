use rug::{Float, Integer};
use serde::{Serialize, Serializer};

use super::Context;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::solver::linear_factors;
use crate::verdict::{Relation, Verdict};

fn ser_int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiVector {
    #[serde(serialize_with = "ser_int")]
    pub x: Integer,
    #[serde(serialize_with = "ser_int")]
    pub y: Integer,
    pub components: Vec<Interval>,
    pub norm: Interval,
}

impl PhiVector {
    pub fn is_trivial(&self) -> bool {
        self.y == 0
    }

    pub fn sum(&self) -> Interval {
        let p = self.norm.prec();
        Interval::sum(self.components.iter(), p)
    }
}

fn norm(v: &[Interval], prec: u32) -> Interval {
    let sq: Vec<Interval> = v.iter().map(|c| c.sqr()).collect();
    Interval::sum(sq.iter(), prec).sqrt()
}

/// `phi_m = log |D^(1/(n(n-2))) (x - y alpha_m) / f'(alpha_m)^(1/(n-2))|`.
pub fn phi(ctx: &Context, x: &Integer, y: &Integer) -> Result<PhiVector> {
    if *ctx.form.leading() != 1 {
        return Err(Error::NotMonic);
    }
    let n = ctx.n() as i64;
    let p = ctx.prec();
    let d_term = ctx.ln_abs_d().div_int(n * (n - 2));
    let lin = linear_factors(ctx.rs, x, y);
    let mut comps = Vec::with_capacity(lin.len());
    for (m, l) in lin.iter().enumerate() {
        if !l.is_positive() {
            return Err(Error::DegenerateRoots);
        }
        let c = d_term
            .add(&l.ln())
            .sub(&ctx.rs.derivative_abs(m).ln().div_int(n - 2));
        if !c.is_finite() {
            return Err(Error::PrecisionExhausted(ctx.rs.bits()));
        }
        comps.push(c);
    }
    let norm = norm(&comps, p);
    Ok(PhiVector {
        x: x.clone(),
        y: y.clone(),
        components: comps,
        norm,
    })
}

/// `|sum phi_m| <= 2^(-P/2) n max |phi_m|`.
pub fn phi_sum_zero(ctx: &Context, v: &PhiVector) -> Verdict {
    let p = ctx.prec();
    let n = v.components.len() as i64;
    let big = v
        .components
        .iter()
        .map(|c| c.abs())
        .reduce(|a, b| a.max(&b))
        .unwrap_or_else(|| Interval::zero(p));
    let tol = Interval::point(Float::with_val(p, 1) >> (ctx.rs.bits() / 2));
    let rhs = tol.mul(&big).mul_int(n);
    Verdict::new("phi_sum_zero", format!("({}, {})", v.x, v.y), v.sum().abs(), Relation::Le, rhs)
}
