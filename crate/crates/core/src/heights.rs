//! Mahler measure, naive height, length and absolute logarithmic height.

use rug::{Complete, Integer};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forms::{discriminant_any, BinaryForm};
use crate::interval::{CInterval, Interval};
use crate::poly::IntPoly;
use crate::roots::{isolate_roots, min_root_distance, reconstruct_min_poly, split_irreducible, PrecisionConfig, RootSystem};
use crate::verdict::{Relation, Verdict};

fn ser_int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightProfile {
    pub degree: usize,
    pub mahler: Interval,
    #[serde(serialize_with = "ser_int")]
    pub naive: Integer,
    #[serde(serialize_with = "ser_int")]
    pub length: Integer,
    pub log_mahler: Interval,
}

#[derive(Clone, Debug, Serialize)]
pub struct LogHeight {
    pub value: Interval,
    pub degree: usize,
}

/// `|lead| prod max(1, |alpha_i|)` over the roots in `rs`.
pub fn mahler_from_roots(lead: &Integer, rs: &RootSystem) -> Interval {
    let p = rs.prec();
    let one = Interval::one(p);
    let a = Interval::from_int(&lead.clone().abs(), p);
    let m = rs
        .roots()
        .iter()
        .fold(a.clone(), |acc, z| acc.mul(&z.abs().max(&one)));
    m.clamp_below(&a)
}

pub fn mahler_measure(f: &BinaryForm, rs: &RootSystem) -> Interval {
    mahler_from_roots(f.leading(), rs)
}

pub fn mahler_measure_poly(p: &IntPoly, rs: &RootSystem) -> Interval {
    mahler_from_roots(&p.leading(), rs)
}

pub fn naive_height(p: &IntPoly) -> Integer {
    p.coeffs().iter().map(|c| c.clone().abs()).max().unwrap_or_default()
}

pub fn length(p: &IntPoly) -> Integer {
    p.coeffs().iter().map(|c| c.clone().abs()).sum()
}

pub fn height_profile(p: &IntPoly, rs: &RootSystem) -> HeightProfile {
    let mahler = mahler_measure_poly(p, rs);
    HeightProfile {
        degree: p.degree(),
        log_mahler: mahler.ln(),
        mahler,
        naive: naive_height(p),
        length: length(p),
    }
}

/// `h = log M / deg` for an irreducible primitive `minpoly` whose roots are `rs`.
pub fn log_height(minpoly: &IntPoly, rs: &RootSystem) -> Result<LogHeight> {
    if minpoly.degree() == 0 || minpoly.content() != 1 {
        return Err(Error::ReduciblePolynomial);
    }
    if split_irreducible(rs)?.len() != 1 {
        return Err(Error::ReduciblePolynomial);
    }
    let m = mahler_measure_poly(minpoly, rs);
    let d = minpoly.degree();
    Ok(LogHeight {
        value: m.ln().div_int(d as i64),
        degree: d,
    })
}

pub fn log_height_of(minpoly: &IntPoly, cfg: &PrecisionConfig) -> Result<LogHeight> {
    let rs = isolate_roots(minpoly, cfg)?;
    log_height(minpoly, &rs)
}

/// Central binomial coefficient `C(n, floor(n/2))`.
fn central_binomial(n: usize) -> Integer {
    Integer::binomial_u(n as u32, (n / 2) as u32).complete()
}

/// `(1/(4n)) (log log n / log n)^3`.
pub fn voutier_bound(n: usize, prec: u32) -> Interval {
    let ln_n = Interval::from_i64(n as i64, prec).ln();
    let ratio = ln_n.ln().div(&ln_n);
    ratio.powi(3).div_int(4 * n as i64)
}

/// Every height inequality that applies to `p`, which must have nonzero
/// discriminant and degree at least 1.
pub fn verify_height_inequalities(p: &IntPoly, cfg: &PrecisionConfig) -> Result<Vec<Verdict>> {
    let n = p.degree();
    let rs = isolate_roots(p, cfg)?;
    let prec = rs.prec();
    let tag = p.to_string();
    let prof = height_profile(p, &rs);
    let m = &prof.mahler;
    let nn = n as i64;
    let mut out = Vec::new();

    if n >= 2 {
        let form = BinaryForm::new(p.coeffs().to_vec())?;
        let d = discriminant_any(&form)?.abs();
        let rhs = Interval::from_int(&d, prec)
            .div(&Interval::from_i64(nn, prec).powi(n as u32))
            .ln()
            .div_int(2 * nn - 2)
            .exp();
        out.push(Verdict::new("mahler_discriminant", &tag, m.clone(), Relation::Ge, rhs));

        // root separation
        let sep = Interval::from_i64(3, prec).sqrt()
            .div(&Interval::from_i64(nn + 1, prec).powi(n as u32))
            .div(&m.powi((n - 1) as u32));
        out.push(Verdict::new("root_separation", &tag, min_root_distance(&rs), Relation::Ge, sep));
    }

    let h = Interval::from_int(&prof.naive, prec);
    let lan_lo = h.div(&Interval::from_int(&central_binomial(n), prec));
    let lan_hi = Interval::from_i64(nn + 1, prec).sqrt().mul(&h);
    out.push(Verdict::new("height_mahler_lower", &tag, lan_lo, Relation::Le, m.clone()));
    out.push(Verdict::new("height_mahler_upper", &tag, m.clone(), Relation::Le, lan_hi));

    let l = Interval::from_int(&prof.length, prec);
    let two_n = Interval::from_i64(2, prec).powi(n as u32);
    out.push(Verdict::new("length_mahler_lower", &tag, l.div(&two_n), Relation::Le, m.clone()));
    out.push(Verdict::new("length_mahler_upper", &tag, m.clone(), Relation::Le, l.clone()));

    let irreducible = p.content() == 1 && split_irreducible(&rs)?.len() == 1;
    if irreducible && n >= 2 {
        let form = BinaryForm::new(p.coeffs().to_vec())?;
        let d = discriminant_any(&form)?.abs();
        let dd = Interval::from_int(&d, prec);
        let lower = dd
            .div(&m.powi((2 * n - 2) as u32))
            .div(&Interval::from_i64(2, prec).powi(((n - 1) * (n - 1)) as u32));
        let coef = Interval::from_i64(nn * (nn + 1) / 2, prec).mul(&h);
        let one = Interval::one(prec);
        for i in 0..n {
            let fd = rs.derivative_abs(i).clone();
            let upper = coef.mul(&rs.root(i).abs().max(&one).powi((n - 1) as u32));
            let inp = format!("{tag}; root {i}");
            out.push(Verdict::new("derivative_lower", &inp, lower.clone(), Relation::Le, fd.clone()));
            out.push(Verdict::new("derivative_upper", &inp, fd, Relation::Le, upper));
        }
    }

    if irreducible {
        let hv = prof.log_mahler.div_int(nn);
        if p.constant_term() != 0 {
            let rev = p.reversed().primitive_part();
            let hr = log_height_of(&rev, cfg)?;
            out.push(Verdict::new("inverse_height", &tag, hr.value, Relation::Eq, hv.clone()));
        }
        if n >= 2 {
            if p.is_cyclotomic() {
                out.push(Verdict::skipped("voutier", &tag, "root of unity"));
            } else {
                out.push(Verdict::new("voutier", &tag, hv, Relation::Gt, voutier_bound(n, prec)));
            }
        } else {
            out.push(Verdict::skipped("voutier", &tag, "degree 1"));
        }
    }
    Ok(out)
}

fn pairwise(a: &RootSystem, b: &RootSystem, op: impl Fn(&CInterval, &CInterval) -> CInterval) -> Vec<CInterval> {
    let mut v = Vec::new();
    for x in a.roots() {
        for y in b.roots() {
            v.push(op(x, y));
        }
    }
    v
}

/// `h(ab) <= h(a) + h(b)` and `h(a + b) <= log 2 + h(a) + h(b)`, with `a`, `b`
/// roots of the irreducible `f` and `g` and the compound heights taken from
/// reconstructed minimal polynomials.
pub fn check_product_sum_heights(f: &IntPoly, g: &IntPoly, cfg: &PrecisionConfig) -> Result<Vec<Verdict>> {
    let rf = isolate_roots(f, cfg)?;
    let rg = isolate_roots(g, cfg)?;
    let hf = log_height(f, &rf)?;
    let hg = log_height(g, &rg)?;
    let prec = rf.prec();
    let sum_h = hf.value.add(&hg.value);
    let tag = format!("{f}; {g}");
    let mut out = Vec::new();

    let prod = pairwise(&rf, &rg, |x, y| x.mul(y));
    let mp = reconstruct_min_poly(&prod, cfg)?;
    let hp = log_height_of(&mp, cfg)?;
    out.push(
        Verdict::new("height_product", &tag, hp.value, Relation::Le, sum_h.clone())
            .with_note(format!("minimal polynomial {mp}")),
    );

    let sums = pairwise(&rf, &rg, |x, y| x.add(y));
    let ms = reconstruct_min_poly(&sums, cfg)?;
    let hs = log_height_of(&ms, cfg)?;
    let rhs = Interval::from_i64(2, prec).ln().add(&sum_h);
    out.push(
        Verdict::new("height_sum", &tag, hs.value, Relation::Le, rhs)
            .with_note(format!("minimal polynomial {ms}")),
    );
    Ok(out)
}
