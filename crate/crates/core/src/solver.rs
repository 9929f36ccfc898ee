//! Exhaustive enumeration of `|F(x, y)| = 1` in a box `0 <= y <= y_max`.
//!
//! For `y >= 1` every solution has `|x - alpha y| <= 1` for some root `alpha`
//! of `F(x, 1)`, so candidates are the few integers within one unit of
//! `Re(alpha) y`. Membership is always decided by exact evaluation.

use rayon::prelude::*;
use rug::{Float, Integer};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forms::BinaryForm;
use crate::interval::{CInterval, Interval};
use crate::poly::IntPoly;
use crate::roots::{isolate_roots, PrecisionConfig, RootSystem};

pub const DEFAULT_Y_MAX: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBox {
    pub y_max: u64,
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox { y_max: DEFAULT_Y_MAX }
    }
}

impl SearchBox {
    pub fn new(y_max: u64) -> Result<Self> {
        if y_max == 0 {
            return Err(Error::InvalidInput("y_max must be at least 1".into()));
        }
        Ok(SearchBox { y_max })
    }
}

fn ser_int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A solution normalized so that `y >= 0`, and `x > 0` when `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Solution {
    #[serde(serialize_with = "ser_int")]
    pub y: Integer,
    #[serde(serialize_with = "ser_int")]
    pub x: Integer,
    /// `F(x, y)`, either 1 or -1.
    pub value: i32,
}

impl Solution {
    pub fn new(f: &BinaryForm, x: Integer, y: Integer) -> Option<Solution> {
        let (x, y) = normalize(x, y);
        let v = f.eval(&x, &y);
        if v == 1 || v == -1 {
            Some(Solution { value: v.to_i32().unwrap(), x, y })
        } else {
            None
        }
    }

    pub fn from_i64(f: &BinaryForm, x: i64, y: i64) -> Option<Solution> {
        Self::new(f, x.into(), y.into())
    }

    pub fn is_trivial(&self) -> bool {
        self.y == 0
    }
}

/// Representative of `{(x, y), (-x, -y)}`.
pub fn normalize(x: Integer, y: Integer) -> (Integer, Integer) {
    if y < 0 || (y == 0 && x < 0) {
        (-x, -y)
    } else {
        (x, y)
    }
}

/// Solutions with `0 <= y <= y_max`, sorted by `(y, x)`.
pub fn solve_in_box(f: &BinaryForm, bx: &SearchBox) -> Result<Vec<Solution>> {
    solve_with(f, bx, &PrecisionConfig::default())
}

pub fn solve_with(f: &BinaryForm, bx: &SearchBox, cfg: &PrecisionConfig) -> Result<Vec<Solution>> {
    let mut out = Vec::new();
    if f.leading().clone().abs() == 1 {
        out.push(Solution {
            x: 1.into(),
            y: 0.into(),
            value: f.leading().to_i32().unwrap(),
        });
    }
    // F = y^e G(x, y) with G(1, 0) != 0
    let e = f.coeffs().iter().take_while(|c| **c == 0).count();
    let g = IntPoly::new(f.coeffs()[e..].to_vec());
    if g.degree() == 0 {
        if g.leading().abs() == 1 {
            return Err(Error::InfiniteSolutions);
        }
        return Ok(out);
    }
    let rs = isolate_roots(&g.squarefree_part(), cfg)?;
    let p = 128;
    let roots: Vec<(Interval, Interval)> = rs
        .roots()
        .iter()
        .enumerate()
        .filter(|(i, _)| rs.conjugate(*i) >= *i)
        .map(|(_, z)| (z.re.with_prec(p), z.im.with_prec(p).abs()))
        .collect();
    let mut rest: Vec<Solution> = (1..=bx.y_max)
        .into_par_iter()
        .flat_map_iter(|y| candidates_at(f, &roots, y, p))
        .collect();
    rest.sort();
    rest.dedup();
    out.extend(rest);
    Ok(out)
}

fn candidates_at(f: &BinaryForm, roots: &[(Interval, Interval)], y: u64, p: u32) -> Vec<Solution> {
    let yi = Integer::from(y);
    let yv = Interval::from_int(&yi, p);
    let one = Interval::one(p);
    let mut xs: Vec<Integer> = Vec::new();
    for (re, im) in roots {
        if one.certainly_lt(&im.mul(&yv)) {
            continue;
        }
        let c = re.mul(&yv);
        let lo = Float::with_val(p, c.lo() - 1u32).floor().to_integer().unwrap();
        let hi = Float::with_val(p, c.hi() + 1u32).ceil().to_integer().unwrap();
        let mut x = lo;
        while x <= hi {
            xs.push(x.clone());
            x += 1;
        }
    }
    xs.sort();
    xs.dedup();
    xs.into_iter()
        .filter_map(|x| Solution::new(f, x, yi.clone()))
        .collect()
}

/// Plain double loop over `0 <= y <= y_max`, `|x| <= x_max`, in `i128`.
pub fn brute_force(f: &BinaryForm, y_max: i64, x_max: i64) -> Vec<Solution> {
    let c: Vec<i128> = f
        .coeffs()
        .iter()
        .map(|a| a.to_i128().expect("coefficient fits in i128"))
        .collect();
    let eval = |x: i128, y: i128| -> i128 {
        let mut acc = c[0];
        let mut yp = 1i128;
        for a in &c[1..] {
            yp *= y;
            acc = acc * x + a * yp;
        }
        acc
    };
    let mut out = Vec::new();
    for y in 0..=y_max as i128 {
        let lo = if y == 0 { 1 } else { -(x_max as i128) };
        for x in lo..=x_max as i128 {
            let v = eval(x, y);
            if v == 1 || v == -1 {
                out.push(Solution {
                    x: Integer::from(x),
                    y: Integer::from(y),
                    value: v as i32,
                });
            }
        }
    }
    out.sort();
    out
}

/// `|x| <= (1 + sum_{k<n} |a_k| / |a_n|) y` holds for every solution with `y >= 1`.
pub fn brute_force_x_bound(f: &BinaryForm, y_max: i64) -> i64 {
    let lead = f.leading().clone().abs();
    assert!(lead != 0, "brute force bound needs a_n != 0");
    let rest: Integer = f.coeffs()[1..].iter().map(|c| c.clone().abs()).sum();
    let t: Integer = rest.div_rem_ceil(lead).0 + 1;
    (t * Integer::from(y_max)).to_i64().expect("bound fits in i64") + 1
}

#[derive(Clone, Debug, Serialize)]
pub struct RelatedSolution {
    #[serde(flatten)]
    pub solution: Solution,
    pub related_root: usize,
    /// Both indices when the related root is non-real.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub related_pair: Option<(usize, usize)>,
    pub min_linear_factor: Interval,
    /// The minimum is attained at several roots that are not conjugate.
    pub tie: bool,
}

/// `|x - alpha_i y|` for every root.
pub fn linear_factors(rs: &RootSystem, x: &Integer, y: &Integer) -> Vec<Interval> {
    let p = rs.prec();
    let xv = CInterval::from_real(Interval::from_int(x, p));
    let yv = Interval::from_int(y, p);
    rs.roots().iter().map(|a| xv.sub(&a.scale(&yv)).abs()).collect()
}

enum Argmin {
    Unique(usize),
    Ambiguous(usize),
}

fn argmin(rs: &RootSystem, d: &[Interval]) -> Argmin {
    let best_hi = d
        .iter()
        .map(|v| v.hi().clone())
        .reduce(|a, b| if a < b { a } else { b })
        .unwrap();
    let cands: Vec<usize> = (0..d.len()).filter(|&i| *d[i].lo() <= best_hi).collect();
    // conjugates give identical values for real (x, y)
    let mut classes: Vec<usize> = cands.iter().map(|&i| i.min(rs.conjugate(i))).collect();
    classes.sort();
    classes.dedup();
    if classes.len() == 1 {
        Argmin::Unique(classes[0])
    } else {
        Argmin::Ambiguous(classes[0])
    }
}

/// Annotates each solution with the root minimizing `|x - alpha y|`. Overlapping
/// minima trigger re-isolation at doubled precision; a tie that survives up to
/// the precision ceiling is resolved to the lowest index.
pub fn assign_related_roots(solutions: &[Solution], rs: &RootSystem) -> Result<Vec<RelatedSolution>> {
    let ceiling = rs.bits() * 8;
    solutions
        .iter()
        .map(|s| {
            let mut current: Option<RootSystem> = None;
            loop {
                let sys = current.as_ref().unwrap_or(rs);
                let d = linear_factors(sys, &s.x, &s.y);
                let (idx, tie) = if s.y == 0 {
                    (0, true)
                } else {
                    match argmin(sys, &d) {
                        Argmin::Unique(i) => (i, false),
                        Argmin::Ambiguous(i) if sys.bits() * 2 > ceiling => (i, true),
                        Argmin::Ambiguous(_) => {
                            let cfg = PrecisionConfig::default().with_bits(sys.bits() * 2);
                            current = Some(isolate_roots(sys.poly(), &cfg)?);
                            continue;
                        }
                    }
                };
                let pair = if rs.is_real(idx) { None } else { Some((idx, rs.conjugate(idx))) };
                let lin = linear_factors(rs, &s.x, &s.y).swap_remove(idx);
                return Ok(RelatedSolution {
                    solution: s.clone(),
                    related_root: idx,
                    related_pair: pair,
                    min_linear_factor: lin,
                    tie,
                });
            }
        })
        .collect()
}

/// Whether `prod |x - alpha_m y|` equals 1 to within the interval tolerance.
pub fn unit_norm_check(x: &Integer, y: &Integer, rs: &RootSystem) -> bool {
    let p = rs.prec();
    let lead = Interval::from_int(&rs.poly().leading().abs(), p);
    let prod = linear_factors(rs, x, y)
        .iter()
        .fold(lead, |acc, v| acc.mul(v));
    let one = Float::with_val(p, 1);
    prod.contains(&one) && prod.width() < Float::with_val(p, 1) >> (rs.bits() / 2)
}

/// Maps solutions of `F_A` to solutions of `F` under `A`, renormalized and sorted.
pub fn transport(solutions: &[Solution], f: &BinaryForm, m: &crate::forms::IntMatrix) -> Vec<Solution> {
    let mut v: Vec<Solution> = solutions
        .iter()
        .filter_map(|s| {
            let (x, y) = m.apply(&s.x, &s.y);
            Solution::new(f, x, y)
        })
        .collect();
    v.sort();
    v
}

/// Evaluates `F` at `(x, y)` given as plain integers.
pub fn value_at(f: &BinaryForm, x: i64, y: i64) -> Integer {
    f.eval(&Integer::from(x), &Integer::from(y))
}
