use serde::Serialize;

use super::{Context, LayerTag, PhiVector, TaggedSolution};
use crate::interval::Interval;
use crate::verdict::{Relation, Verdict};

/// `(1, 0)` together with the `2r + 2s - 3` other solutions of smallest
/// `||phi||`, or every solution when there are fewer.
#[derive(Clone, Debug, Serialize)]
pub struct SetA {
    pub target: usize,
    /// Indices into the slice passed to [`build_set_a`], ascending.
    pub members: Vec<usize>,
}

impl SetA {
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

pub fn build_set_a(phis: &[PhiVector], r: usize, s: usize) -> SetA {
    let target = 2 * (r + s) - 2;
    let trivial = phis.iter().position(|v| v.is_trivial());
    let mut others: Vec<usize> = (0..phis.len()).filter(|&i| Some(i) != trivial).collect();
    others.sort_by(|&a, &b| {
        let (pa, pb) = (&phis[a], &phis[b]);
        pa.norm
            .mid()
            .partial_cmp(&pb.norm.mid())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| (&pa.y, &pa.x).cmp(&(&pb.y, &pb.x)))
    });
    let mut members: Vec<usize> = trivial.into_iter().collect();
    let room = target.saturating_sub(members.len());
    members.extend(others.into_iter().take(room));
    members.sort_unstable();
    SetA { target, members }
}

/// The largest norm among nontrivial members is at most the smallest norm
/// outside the set.
pub fn check_set_a_order(phis: &[PhiVector], a: &SetA) -> Verdict {
    let inside: Vec<&Interval> = a
        .members
        .iter()
        .filter(|&&i| !phis[i].is_trivial())
        .map(|&i| &phis[i].norm)
        .collect();
    let outside: Vec<&Interval> = (0..phis.len()).filter(|&i| !a.contains(i)).map(|i| &phis[i].norm).collect();
    if inside.is_empty() || outside.is_empty() {
        return Verdict::skipped("set_a_order", "", "no solutions on one side of the set");
    }
    let hi = inside.iter().skip(1).fold(inside[0].clone(), |m, v| m.max(v));
    let lo = outside.iter().skip(1).fold(outside[0].clone(), |m, v| m.min(v));
    Verdict::new("set_a_order", format!("{} members", a.members.len()), hi, Relation::Le, lo)
}

/// `(1/2) log(|D|^(1/(n(n-1))) / 2)`.
pub fn dr_bound(ctx: &Context) -> Interval {
    let n = ctx.n() as i64;
    let p = ctx.prec();
    ctx.ln_abs_d()
        .div_int(n * (n - 1))
        .sub(&Interval::from_i64(2, p).ln())
        .div_int(2)
}

pub fn check_dr_bound(ctx: &Context, phis: &[PhiVector], a: &SetA) -> Vec<Verdict> {
    let rhs = dr_bound(ctx);
    let out: Vec<Verdict> = (0..phis.len())
        .filter(|&i| !a.contains(i))
        .map(|i| {
            let v = &phis[i];
            Verdict::new("dr", format!("({}, {})", v.x, v.y), v.norm.clone(), Relation::Ge, rhs.clone())
        })
        .collect();
    if out.is_empty() {
        vec![Verdict::skipped("dr", "", "every solution lies in A")]
    } else {
        out
    }
}

/// `n log(|D|^(1/(n(n-2))) M^((2n-2)/(n-2)))`.
fn lem10_bound(ctx: &Context) -> Interval {
    let n = ctx.n() as i64;
    let p = ctx.prec();
    ctx.ln_abs_d()
        .div_int(n * (n - 2))
        .add(&ctx.ln_mahler().mul(&Interval::ratio(2 * n - 2, n - 2, p)))
        .mul_int(n)
}

/// Norm bounds for one solution: the bound through `log(1/|x - alpha_i y|)`
/// (which reduces to the bound at `(1, 0)` for the trivial pair), and
/// `||phi(1, 0)|| < ||phi(x, y)||` for large `y`.
pub fn check_phi_norm_bounds(ctx: &Context, t: &TaggedSolution, v: &PhiVector, v10: &PhiVector) -> Vec<Verdict> {
    let n = ctx.n() as i64;
    let tag = format!("({}, {})", v.x, v.y);
    let base = lem10_bound(ctx);
    if v.is_trivial() {
        return vec![Verdict::new("lem10", tag, v.norm.clone(), Relation::Le, base)
            .vacuous_if(!ctx.large_d, ctx.hypothesis_note())];
    }
    let term = t
        .related
        .min_linear_factor
        .recip()
        .ln()
        .mul_int((n + 1) * (n + 1))
        .div_int(4);
    let lem1 = Verdict::new("lem1", &tag, v.norm.clone(), Relation::Le, term.add(&base))
        .vacuous_if(!ctx.large_d, ctx.hypothesis_note());
    let large = t.layer == LayerTag::Large;
    let lem100 = Verdict::new("lem100", &tag, v10.norm.clone(), Relation::Lt, v.norm.clone()).vacuous_if(
        !large || !ctx.large_d,
        if large { ctx.hypothesis_note() } else { "y < M^(1+(n-1)^2)".to_string() },
    );
    vec![lem1, lem100]
}
