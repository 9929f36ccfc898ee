use rug::{Integer, Rational};
use serde::{Serialize, Serializer};

use super::{Context, LayerTag, PhiVector, TaggedSolution};
use crate::error::{Error, Result};
use crate::heights::{log_height_of, LogHeight};
use crate::interval::{CInterval, Interval};
use crate::roots::{cross_ratio_orbit, min_root_distance, reconstruct_min_poly, PrecisionConfig, RootSystem};
use crate::solver::linear_factors;
use crate::verdict::{Outcome, Relation, Verdict};

fn ser_rat<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = v.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect();
    strs.serialize(s)
}

/// `b_i = (1/n)(-1, ..., n-1, ..., -1)` and `c_i = b_i + b_n/(n-1)` for `i < n`,
/// with exact rational entries. Indices are zero-based, so `b_n` is `b[n-1]`.
#[derive(Clone, Debug, Serialize)]
pub struct GeometryVectors {
    pub n: usize,
    #[serde(serialize_with = "ser_rat")]
    pub b: Vec<Vec<Rational>>,
    #[serde(serialize_with = "ser_rat")]
    pub c: Vec<Vec<Rational>>,
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).fold(Rational::new(), |acc, (a, b)| acc + Rational::from(a * b))
}

pub fn geometry_vectors(n: usize) -> Result<GeometryVectors> {
    if n < 3 {
        return Err(Error::DegreeTooLow(n));
    }
    let b: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let num = if i == j { n as i64 - 1 } else { -1 };
                    Rational::from((num, n as i64))
                })
                .collect()
        })
        .collect();
    let scale = Rational::from((1, n as i64 - 1));
    let c = (0..n - 1)
        .map(|i| {
            b[i].iter()
                .zip(&b[n - 1])
                .map(|(x, y)| Rational::from(x + Rational::from(y * &scale)))
                .collect()
        })
        .collect();
    Ok(GeometryVectors { n, b, c })
}

impl GeometryVectors {
    pub fn c_dot_bn(&self, i: usize) -> Rational {
        dot(&self.c[i], &self.b[self.n - 1])
    }

    pub fn c_norm_sqr(&self, i: usize) -> Rational {
        dot(&self.c[i], &self.c[i])
    }

    /// `(n^2 - 3n + 2) / (n-1)^2`.
    pub fn expected_c_norm_sqr(&self) -> Rational {
        let n = self.n as i64;
        Rational::from((n * n - 3 * n + 2, (n - 1) * (n - 1)))
    }

    fn c_interval(&self, i: usize, prec: u32) -> Vec<Interval> {
        self.c[i].iter().map(|q| Interval::from_rational(q, prec)).collect()
    }

    fn b_interval(&self, i: usize, prec: u32) -> Vec<Interval> {
        self.b[i].iter().map(|q| Interval::from_rational(q, prec)).collect()
    }
}

/// Root indices with `k` moved to the end, the others in their original order.
pub fn related_last(n: usize, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    v.push(k);
    v
}

fn vnorm(v: &[Interval], prec: u32) -> Interval {
    let sq: Vec<Interval> = v.iter().map(|c| c.sqr()).collect();
    Interval::sum(sq.iter(), prec).sqrt()
}

fn combine(weights: &[Interval], vectors: &[Vec<Interval>], prec: u32) -> Vec<Interval> {
    let n = vectors[0].len();
    (0..n)
        .map(|m| {
            let terms: Vec<Interval> = weights.iter().zip(vectors).map(|(w, v)| w.mul(&v[m])).collect();
            Interval::sum(terms.iter(), prec)
        })
        .collect()
}

fn t_point(x: &Integer, y: &Integer, prec: u32) -> Result<CInterval> {
    if *y == 0 {
        return Err(Error::InvalidInput("y must be nonzero".into()));
    }
    Ok(CInterval::from_real(Interval::from_int(x, prec).div(&Interval::from_int(y, prec))))
}

fn positive_ln(v: &Interval) -> Result<Interval> {
    if !v.is_positive() {
        return Err(Error::DegenerateRoots);
    }
    Ok(v.ln())
}

/// `||sum_{i != k} log(|t - alpha_i| / |alpha_k - alpha_i|) c_i||`, with roots
/// reindexed so that `alpha_k` comes last.
pub fn distance_to_line(rs: &RootSystem, x: &Integer, y: &Integer, k: usize) -> Result<Interval> {
    let n = rs.degree();
    let p = rs.prec();
    let g = geometry_vectors(n)?;
    let t = t_point(x, y, p)?;
    let order = related_last(n, k);
    let ak = rs.root(k);
    let mut w = Vec::with_capacity(n - 1);
    let mut cs = Vec::with_capacity(n - 1);
    for (pos, &i) in order[..n - 1].iter().enumerate() {
        let ai = rs.root(i);
        w.push(positive_ln(&t.sub(ai).abs())?.sub(&ak.sub(ai).abs().ln()));
        cs.push(g.c_interval(pos, p));
    }
    Ok(vnorm(&combine(&w, &cs, p), p))
}

/// Base point `sum_{i != k} log(|alpha_k - alpha_i| / |f'(alpha_i)|^(1/(n-2))) c_i`
/// of the line through which [`distance_to_line`] measures, in the reindexed
/// coordinates.
pub fn line_base(rs: &RootSystem, k: usize) -> Result<Vec<Interval>> {
    let n = rs.degree();
    let p = rs.prec();
    let g = geometry_vectors(n)?;
    let order = related_last(n, k);
    let ak = rs.root(k);
    let mut w = Vec::with_capacity(n - 1);
    let mut cs = Vec::with_capacity(n - 1);
    for (pos, &i) in order[..n - 1].iter().enumerate() {
        let fi = rs.derivative_abs(i).ln().div_int(n as i64 - 2);
        w.push(ak.sub(rs.root(i)).abs().ln().sub(&fi));
        cs.push(g.c_interval(pos, p));
    }
    Ok(combine(&w, &cs, p))
}

/// Direction `b_n` of the line, in the reindexed coordinates.
pub fn line_direction(n: usize, prec: u32) -> Result<Vec<Interval>> {
    Ok(geometry_vectors(n)?.b_interval(n - 1, prec))
}

/// Euclidean distance from `point` to the line `base + z dir`.
pub fn point_line_distance(point: &[Interval], base: &[Interval], dir: &[Interval]) -> Interval {
    let prec = point[0].prec();
    let diff: Vec<Interval> = point.iter().zip(base).map(|(a, b)| a.sub(b)).collect();
    let dd: Vec<Interval> = dir.iter().map(|d| d.sqr()).collect();
    let dd = Interval::sum(dd.iter(), prec);
    let proj: Vec<Interval> = diff.iter().zip(dir).map(|(a, d)| a.mul(d)).collect();
    let coef = Interval::sum(proj.iter(), prec).div(&dd);
    let perp: Vec<Interval> = diff.iter().zip(dir).map(|(a, d)| a.sub(&coef.mul(d))).collect();
    vnorm(&perp, prec)
}

/// `E_n = log(|t - alpha_k| / |f'(alpha_k)|^(1/(n-2))) - (1/(n-1)) sum_{i != k} log(|t - alpha_i| / |f'(alpha_i)|^(1/(n-2)))`.
pub fn e_n(rs: &RootSystem, x: &Integer, y: &Integer, k: usize) -> Result<Interval> {
    let n = rs.degree() as i64;
    let p = rs.prec();
    let t = t_point(x, y, p)?;
    let term = |i: usize| -> Result<Interval> {
        Ok(positive_ln(&t.sub(rs.root(i)).abs())?.sub(&rs.derivative_abs(i).ln().div_int(n - 2)))
    };
    let mut rest = Interval::zero(p);
    for i in (0..rs.degree()).filter(|&i| i != k) {
        rest = rest.add(&term(i)?);
    }
    Ok(term(k)?.sub(&rest.div_int(n - 1)))
}

fn large_hypothesis(ctx: &Context, t: &TaggedSolution, min_degree: usize) -> Option<String> {
    if t.layer != LayerTag::Large {
        Some("y < M^(1+(n-1)^2)".into())
    } else if !ctx.large_d {
        Some(ctx.hypothesis_note())
    } else if ctx.n() < min_degree {
        Some(format!("n < {min_degree}"))
    } else {
        None
    }
}

/// `exp(-4 ||phi|| / (n+1)^2)`.
fn decay(norm: &Interval, n: usize) -> Interval {
    let n = n as i64;
    norm.mul_int(-4).div_int((n + 1) * (n + 1)).exp()
}

/// Distance from `phi(x, y)` to the line for its related root, against
/// `M^(-n(n-1)) exp(-4 ||phi|| / (n+1)^2)`.
pub fn check_distance_to_line(ctx: &Context, t: &TaggedSolution, v: &PhiVector) -> Result<Verdict> {
    let tag = format!("({}, {})", v.x, v.y);
    if v.is_trivial() {
        return Ok(Verdict::skipped("gp1", tag, "y = 0"));
    }
    let n = ctx.n();
    let k = t.related.related_root;
    let lhs = distance_to_line(ctx.rs, &v.x, &v.y, k)?;
    let rhs = ctx.mahler.powi((n * (n - 1)) as u32).recip().mul(&decay(&v.norm, n));
    let hyp = large_hypothesis(ctx, t, 5);
    Ok(Verdict::new("gp1", tag, lhs, Relation::Lt, rhs).vacuous_if(hyp.is_some(), hyp.unwrap_or_default()))
}

/// `|log(|t - alpha_i| / |alpha_k - alpha_i|)| < 2 |t - alpha_k| / m` for `t`
/// closer to `alpha_k` than to `alpha_i`, `m` the minimal root distance.
pub fn tmt_check(rs: &RootSystem, t: &CInterval, k: usize, i: usize) -> Verdict {
    let ai = rs.root(i);
    let ak = rs.root(k);
    let lhs = t.sub(ai).abs().div(&ak.sub(ai).abs()).ln().abs();
    let rhs = t.sub(ak).abs().mul_int(2).div(&min_root_distance(rs));
    Verdict::new("tmt", format!("roots {k}, {i}"), lhs, Relation::Lt, rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct TQuantity {
    pub i: usize,
    pub j: usize,
    pub value: Interval,
}

#[derive(Clone, Debug, Serialize)]
pub struct TReport {
    pub related: usize,
    pub values: Vec<TQuantity>,
    /// Pair with the smallest `|T_ij|`.
    pub best: Option<(usize, usize)>,
}

impl TReport {
    pub fn value(&self, i: usize, j: usize) -> Option<&Interval> {
        self.values.iter().find(|q| q.i == i && q.j == j).map(|q| &q.value)
    }

    pub fn best_abs(&self) -> Option<Interval> {
        self.best.and_then(|(i, j)| self.value(i, j)).map(|v| v.abs())
    }
}

/// `T_ij = log |(t - alpha_i)(alpha_k - alpha_j) / ((t - alpha_j)(alpha_k - alpha_i))|`
/// over ordered pairs of distinct roots other than `alpha_k`.
pub fn compute_t(rs: &RootSystem, x: &Integer, y: &Integer, k: usize) -> Result<TReport> {
    let n = rs.degree();
    let p = rs.prec();
    let t = t_point(x, y, p)?;
    let ak = rs.root(k);
    let mut lt = vec![None; n];
    let mut lk = vec![None; n];
    for i in (0..n).filter(|&i| i != k) {
        lt[i] = Some(positive_ln(&t.sub(rs.root(i)).abs())?);
        lk[i] = Some(ak.sub(rs.root(i)).abs().ln());
    }
    let mut values = Vec::new();
    for i in (0..n).filter(|&i| i != k) {
        for j in (0..n).filter(|&j| j != k && j != i) {
            let v = lt[i]
                .as_ref()
                .unwrap()
                .add(lk[j].as_ref().unwrap())
                .sub(lt[j].as_ref().unwrap())
                .sub(lk[i].as_ref().unwrap());
            values.push(TQuantity { i, j, value: v });
        }
    }
    let best = values
        .iter()
        .min_by(|a, b| {
            a.value
                .abs()
                .hi()
                .partial_cmp(b.value.abs().hi())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .map(|q| (q.i, q.j));
    Ok(TReport { related: k, values, best })
}

/// `min |T_ij| < sqrt(2/(n-2)) M^(-e) exp(-4 ||phi|| / (n+1)^2)` for both
/// exponents `e = n(n-1)` and `e = (n-2)(n-3)`.
pub fn check_tu(ctx: &Context, t: &TaggedSolution, v: &PhiVector, tr: &TReport) -> Vec<Verdict> {
    let tag = format!("({}, {})", v.x, v.y);
    let Some(lhs) = tr.best_abs() else {
        return vec![Verdict::skipped("tu", tag, "no pair of other roots")];
    };
    let n = ctx.n();
    let p = ctx.prec();
    let c = Interval::from_i64(2, p).div_int(n as i64 - 2).sqrt().mul(&decay(&v.norm, n));
    let hyp = large_hypothesis(ctx, t, 5);
    [(n * (n - 1), "exponent n(n-1)"), ((n - 2) * (n - 3), "exponent (n-2)(n-3)")]
        .into_iter()
        .map(|(e, label)| {
            let rhs = c.div(&ctx.mahler.powi(e as u32));
            let (i, j) = tr.best.unwrap();
            Verdict::new("tu", &tag, lhs.clone(), Relation::Lt, rhs)
                .with_note(format!("{label}; pair ({i}, {j})"))
                .vacuous_if(hyp.is_some(), hyp.clone().unwrap_or_default())
        })
        .collect()
}

fn side(a: &[Interval], b: &[Interval]) -> Interval {
    let d: Vec<Interval> = a.iter().zip(b).map(|(x, y)| x.sub(y)).collect();
    vnorm(&d, a[0].prec())
}

pub fn triangle_area_heron(p1: &[Interval], p2: &[Interval], p3: &[Interval]) -> Interval {
    let a = side(p2, p3);
    let b = side(p1, p3);
    let c = side(p1, p2);
    let s = a.add(&b).add(&c).div_int(2);
    let prod = s.mul(&s.sub(&a)).mul(&s.sub(&b)).mul(&s.sub(&c));
    prod.max(&Interval::zero(prod.prec())).sqrt()
}

pub fn triangle_area_base_height(p1: &[Interval], p2: &[Interval], p3: &[Interval]) -> Interval {
    let dir: Vec<Interval> = p2.iter().zip(p1).map(|(a, b)| a.sub(b)).collect();
    side(p1, p2).mul(&point_line_distance(p3, p1, &dir)).div_int(2)
}

#[derive(Clone, Debug, Default)]
pub struct ExgOutcome {
    pub verdicts: Vec<Verdict>,
    /// `(r1, r3, vacuous)` per evaluated triple.
    pub triples: Vec<(Interval, Interval, bool)>,
}

const MAX_TRIPLE_POOL: usize = 10;

/// The exponential gap `r3 > M^(n(n-1)) exp(4 r1/(n+1)^2) (sqrt 3/256) (log log n/log n)^6`
/// over triples of nontrivial solutions with `|x - alpha_k y| <= 1`, plus the
/// variant for totally real forms.
pub fn check_exponential_gap(ctx: &Context, sols: &[(&TaggedSolution, &PhiVector)], k: usize) -> ExgOutcome {
    let n = ctx.n();
    let p = ctx.prec();
    let one = Interval::one(p);
    let mut pool: Vec<&(&TaggedSolution, &PhiVector)> = sols
        .iter()
        .filter(|(t, _)| *t.y() > 0 && linear_factors(ctx.rs, t.x(), t.y())[k].certainly_le(&one))
        .collect();
    let mut out = ExgOutcome::default();
    if pool.len() < 3 {
        out.verdicts
            .push(Verdict::skipped("exg", format!("root {k}"), "fewer than three qualifying solutions"));
        return out;
    }
    pool.sort_by(|a, b| a.1.norm.mid().partial_cmp(&b.1.norm.mid()).unwrap_or(std::cmp::Ordering::Equal));
    let mut triples = Vec::new();
    if pool.len() <= MAX_TRIPLE_POOL {
        for a in 0..pool.len() {
            for b in a + 1..pool.len() {
                for c in b + 1..pool.len() {
                    triples.push([a, b, c]);
                }
            }
        }
    } else {
        triples.extend((0..pool.len() - 2).map(|a| [a, a + 1, a + 2]));
    }
    let nn = n as i64;
    let m_pow = ctx.mahler.powi((n * (n - 1)) as u32);
    let ln_n = Interval::from_i64(nn, p).ln();
    let c_gen = Interval::from_i64(3, p).sqrt().div_int(256).mul(&ln_n.ln().div(&ln_n).powi(6));
    let golden = Interval::from_i64(5, p).sqrt().add(&one).div_int(2).ln().powi(4);
    let c_real = Interval::from_i64(3, p).sqrt().div_int(16).mul_int(nn * nn).mul(&golden);
    for [a, b, c] in triples {
        let (r1, r3) = (&pool[a].1.norm, &pool[c].1.norm);
        let hyp = [a, b, c]
            .iter()
            .find_map(|&i| large_hypothesis(ctx, pool[i].0, 5));
        let vac = hyp.is_some();
        let tag = format!(
            "({}, {}), ({}, {}), ({}, {}); root {k}",
            pool[a].1.x, pool[a].1.y, pool[b].1.x, pool[b].1.y, pool[c].1.x, pool[c].1.y
        );
        let growth = m_pow.mul(&r1.mul_int(4).div_int((nn + 1) * (nn + 1)).exp());
        out.verdicts.push(
            Verdict::new("exg", &tag, r3.clone(), Relation::Gt, growth.mul(&c_gen))
                .vacuous_if(vac, hyp.clone().unwrap_or_default()),
        );
        if ctx.rs.r() == n {
            out.verdicts.push(
                Verdict::new("exg_all_real", &tag, r3.clone(), Relation::Gt, growth.mul(&c_real))
                    .vacuous_if(vac, hyp.clone().unwrap_or_default()),
            );
        }
        out.triples.push((r1.clone(), r3.clone(), vac));
    }
    out
}

/// `h((alpha_k - alpha_i) / (alpha_k - alpha_j))` through the minimal
/// polynomial of the cross-ratio.
pub fn cross_ratio_height(rs: &RootSystem, k: usize, i: usize, j: usize, cfg: &PrecisionConfig) -> Result<LogHeight> {
    if i == j {
        return Ok(LogHeight {
            value: Interval::zero(rs.prec()),
            degree: 1,
        });
    }
    let orbit = cross_ratio_orbit(rs, k, i, j);
    let mp = reconstruct_min_poly(&orbit, cfg)?;
    log_height_of(&mp, cfg)
}

/// `h((alpha_k - alpha_i) / (alpha_k - alpha_j)) <= 2 log 2 + (4/sqrt n) ||phi||`
/// with `k` the related root and `(i, j)` the pair chosen for `T`.
pub fn check_cross_ratio_height(
    ctx: &Context,
    t: &TaggedSolution,
    v: &PhiVector,
    pair: (usize, usize),
    cfg: &PrecisionConfig,
) -> Verdict {
    let tag = format!("({}, {}); pair ({}, {})", v.x, v.y, pair.0, pair.1);
    if t.layer != LayerTag::Large {
        return Verdict::skipped("cross_ratio_height", tag, "y < M^(1+(n-1)^2)");
    }
    let hyp = large_hypothesis(ctx, t, 0);
    let p = ctx.prec();
    let rhs = Interval::from_i64(2, p)
        .ln()
        .mul_int(2)
        .add(&v.norm.mul_int(4).div(&Interval::from_i64(ctx.n() as i64, p).sqrt()));
    match cross_ratio_height(ctx.rs, t.related.related_root, pair.0, pair.1, cfg) {
        Ok(h) => Verdict::new("cross_ratio_height", tag, h.value, Relation::Le, rhs)
            .with_note(format!("minimal polynomial of degree {}", h.degree))
            .vacuous_if(hyp.is_some(), hyp.unwrap_or_default()),
        Err(e) => {
            let mut out = Verdict::skipped("cross_ratio_height", tag, format!("height not computed: {e}"));
            if hyp.is_none() {
                out.vacuous = false;
                out.pass = false;
                out.outcome = Outcome::Undecided;
            }
            out
        }
    }
}
