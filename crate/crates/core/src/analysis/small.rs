use std::collections::{BTreeMap, BTreeSet};

use rug::Integer;

use super::{Context, LayerTag, TaggedSolution};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::solver::{linear_factors, RelatedSolution};
use crate::verdict::{Relation, Verdict};

fn pair(x: &Integer, y: &Integer) -> String {
    format!("({x}, {y})")
}

/// Small-layer counts: at most `5(r+s)` solutions with `0 < y <= M^2`, and
/// `|X| <= (r+s) log Y0 / (theta log M)` with `Y0 = M^2`, `theta = 1/2`, where
/// `X` drops from the small layer the largest element of each nonempty
/// `X_i = {(x, y) : |x - alpha_i y| <= 1/(2y)}`.
pub fn check_small_count_bound(ctx: &Context, tagged: &[TaggedSolution]) -> Vec<Verdict> {
    let rs = ctx.rs;
    let p = ctx.prec();
    let classes = (rs.r() + rs.s()) as u64;
    let small: Vec<&TaggedSolution> = tagged.iter().filter(|t| t.layer == LayerTag::Small).collect();
    let tag = ctx.form.to_line();
    let mut out = vec![Verdict::count("small_count", &tag, small.len() as u64, Relation::Le, 5 * classes)
        .vacuous_if(!ctx.large_d, ctx.hypothesis_note())];

    let mut best: BTreeMap<usize, (usize, Integer)> = BTreeMap::new();
    for (k, t) in small.iter().enumerate() {
        let lin = linear_factors(rs, t.x(), t.y());
        let half = Interval::one(p).div(&Interval::from_int(t.y(), p).mul_int(2));
        for (i, l) in lin.iter().enumerate() {
            if i != i.min(rs.conjugate(i)) || !l.certainly_le(&half) {
                continue;
            }
            let e = best.entry(i).or_insert((k, t.y().clone()));
            if *t.y() > e.1 {
                *e = (k, t.y().clone());
            }
        }
    }
    let dropped: BTreeSet<usize> = best.values().map(|(k, _)| *k).collect();
    let x_size = (small.len() - dropped.len()) as i64;

    let ln_m = ctx.ln_mahler();
    if !ln_m.is_positive() {
        out.push(Verdict::skipped("small_count_formula", &tag, "log M(F) is not positive"));
        return out;
    }
    let rhs = ln_m
        .mul_int(2 * classes as i64)
        .div(&ln_m.div_int(2));
    out.push(
        Verdict::new("small_count_formula", &tag, Interval::from_i64(x_size, p), Relation::Le, rhs)
            .vacuous_if(!ctx.large_d, ctx.hypothesis_note()),
    );
    out
}

/// `2^(n-1) n^(n-1/2) M^(n-2) |F(x,y)| / (|D|^(1/2) |y|^n)`.
pub fn lewis_mahler_rhs(ctx: &Context, x: &Integer, y: &Integer) -> Interval {
    let p = ctx.prec();
    let n = ctx.n() as u32;
    let nn = Interval::from_i64(n as i64, p);
    let fv = Interval::from_int(&ctx.form.eval(x, y).abs(), p);
    let ya = Interval::from_int(&y.clone().abs(), p);
    Interval::from_i64(2, p)
        .powi(n - 1)
        .mul(&nn.powi(n).div(&nn.sqrt()))
        .mul(&ctx.mahler.powi(n - 2))
        .mul(&fv)
        .div(&Interval::from_int(&ctx.abs_d, p).sqrt())
        .div(&ya.powi(n))
}

/// `min_alpha |alpha - x/y|` against [`lewis_mahler_rhs`]; any integer pair
/// with `y != 0`.
pub fn check_lewis_mahler(ctx: &Context, x: &Integer, y: &Integer) -> Result<Verdict> {
    if *y == 0 {
        return Err(Error::InvalidInput("y must be nonzero".into()));
    }
    let p = ctx.prec();
    let ya = Interval::from_int(&y.clone().abs(), p);
    let lhs = linear_factors(ctx.rs, x, y)
        .into_iter()
        .reduce(|a, b| a.min(&b))
        .expect("degree >= 3")
        .div(&ya);
    let rhs = lewis_mahler_rhs(ctx, x, y);
    Ok(Verdict::new("lewis_mahler", pair(x, y), lhs, Relation::Le, rhs))
}

/// `(n+1) 2^((n-1)^2/n) M^(3-3/n) / (sqrt(3) |D|)^(1/n)`.
pub fn grp_bound(ctx: &Context) -> Interval {
    let p = ctx.prec();
    let n = ctx.n() as i64;
    let ln2 = Interval::from_i64(2, p).ln();
    let ln3 = Interval::from_i64(3, p).ln();
    Interval::from_i64(n + 1, p)
        .ln()
        .add(&ln2.mul_int((n - 1) * (n - 1)).div_int(n))
        .add(&ctx.ln_mahler().mul(&Interval::ratio(3 * n - 3, n, p)))
        .sub(&ln3.div_int(2).add(&ctx.ln_abs_d()).div_int(n))
        .exp()
}

/// Every solution related to a non-real root satisfies `|y| <=` [`grp_bound`].
pub fn check_grp_bound(ctx: &Context, solutions: &[RelatedSolution]) -> Vec<Verdict> {
    let bound = grp_bound(ctx);
    let p = ctx.prec();
    solutions
        .iter()
        .map(|s| {
            let (x, y) = (&s.solution.x, &s.solution.y);
            let tag = pair(x, y);
            if *y == 0 {
                Verdict::skipped("grp", tag, "y = 0")
            } else if ctx.rs.is_real(s.related_root) {
                Verdict::skipped("grp", tag, "related root is real")
            } else {
                let yv = Interval::from_int(&y.clone().abs(), p);
                Verdict::new("grp", tag, yv, Relation::Le, bound.clone())
                    .with_note(format!("bound {}, twice the stated bound from the proof", bound.mul_int(2)))
            }
        })
        .collect()
}

/// `y^(n-1) / M^(n-2)`.
pub fn gap_threshold(y: &Integer, mahler: &Interval, n: usize) -> Interval {
    let p = mahler.prec();
    Interval::from_int(y, p)
        .powi((n - 1) as u32)
        .div(&mahler.powi((n - 2) as u32))
}

/// `|D|^(1/2) y^(n-1) / (2^n n^(n-1/2) M^(n-2))`, the gap that follows from
/// the Lewis-Mahler inequality before dropping constants for large `|D|`.
pub fn refined_gap_threshold(ctx: &Context, y: &Integer) -> Interval {
    let p = ctx.prec();
    let n = ctx.n() as u32;
    let nn = Interval::from_i64(n as i64, p);
    gap_threshold(y, &ctx.mahler, ctx.n())
        .mul(&Interval::from_int(&ctx.abs_d, p).sqrt())
        .div(&Interval::from_i64(2, p).powi(n))
        .div(&nn.powi(n).div(&nn.sqrt()))
}

/// Gap inequalities between consecutive solutions related to the same root,
/// and the per-root medium-layer counts.
pub fn check_medium_gaps(ctx: &Context, tagged: &[TaggedSolution]) -> Vec<Verdict> {
    let p = ctx.prec();
    let mut by_root: BTreeMap<usize, Vec<&TaggedSolution>> = BTreeMap::new();
    for t in tagged.iter().filter(|t| *t.y() > 0) {
        by_root.entry(t.root_class).or_default().push(t);
    }
    let mut out = Vec::new();
    for list in by_root.values_mut() {
        list.sort_by(|a, b| (a.y(), a.x()).cmp(&(b.y(), b.x())));
        for w in list.windows(2) {
            let (a, b) = (w[0], w[1]);
            let tag = format!("{} -> {}; root {}", pair(a.x(), a.y()), pair(b.x(), b.y()), a.root_class);
            let yb = Interval::from_int(b.y(), p);
            out.push(Verdict::new("gap_refined", &tag, yb.clone(), Relation::Ge, refined_gap_threshold(ctx, a.y())));
            if a.layer == LayerTag::Medium && b.layer == LayerTag::Medium {
                out.push(
                    Verdict::new("gap", &tag, yb, Relation::Ge, gap_threshold(a.y(), &ctx.mahler, ctx.n()))
                        .vacuous_if(!ctx.large_d, ctx.hypothesis_note()),
                );
            }
        }
    }
    let mut seen = BTreeSet::new();
    for i in 0..ctx.n() {
        let c = i.min(ctx.rs.conjugate(i));
        if !seen.insert(c) {
            continue;
        }
        let medium = tagged
            .iter()
            .filter(|t| t.root_class == c && t.layer == LayerTag::Medium)
            .count() as u64;
        let (id, cap) = if ctx.rs.is_real(c) { ("sc1_count", 2) } else { ("sc2_count", 1) };
        out.push(
            Verdict::count(id, format!("root {c}"), medium, Relation::Le, cap)
                .vacuous_if(!ctx.large_d, ctx.hypothesis_note()),
        );
    }
    out
}
