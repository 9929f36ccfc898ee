//! One form end to end: solutions in a box, the analyzed monic form, every
//! applicable check, and the final comparison with the headline bounds.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Integer};
use serde::{Serialize, Serializer};

use crate::analysis::{
    build_set_a, check_cross_ratio_height, check_distance_to_line, check_dr_bound, check_exponential_gap,
    check_grp_bound, check_lewis_mahler, check_medium_gaps, check_phi_norm_bounds, check_set_a_order,
    check_small_count_bound, check_tu, classify_layers, compute_t, final_verdict, phi, phi_sum_zero, Context,
    FinalBounds, FormSummary, LayerCounts, PhiVector, TaggedSolution,
};
use crate::error::{Error, Result};
use crate::forms::{discriminant_any, factor_over_z, monic_reduce, BinaryForm, Factorization};
use crate::heights::verify_height_inequalities;
use crate::interval::Interval;
use crate::matveev::{check_r3_r1_relation, d0, exceeds_d0};
use crate::roots::{find_roots, PrecisionConfig, DEFAULT_BITS};
use crate::solver::{
    assign_related_roots, solve_with, unit_norm_check, RelatedSolution, SearchBox, Solution, DEFAULT_Y_MAX,
};
use crate::verdict::{Relation, Verdict};

pub const REPORT_VERSION: &str = "thuekit-report/1";

fn ser_int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportOptions {
    pub y_max: u64,
    pub precision_bits: u32,
    /// Random non-solution pairs for the Lewis-Mahler check.
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            y_max: DEFAULT_Y_MAX,
            precision_bits: DEFAULT_BITS,
            random_pairs: 1000,
            seed: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub coefficients: BinaryForm,
    pub n: usize,
    #[serde(serialize_with = "ser_int")]
    pub discriminant: Integer,
    #[serde(serialize_with = "ser_int")]
    pub d0: Integer,
    /// `|D| > D0(n)`.
    pub large_d: bool,
    pub irreducible: bool,
    pub factorization: Factorization,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mahler: Option<Interval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum SolutionEntry {
    Related(RelatedSolution),
    Plain(Solution),
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzedSolution {
    #[serde(flatten)]
    pub tagged: TaggedSolution,
    pub phi: Vec<Interval>,
    pub phi_norm: Interval,
    pub in_set_a: bool,
    pub unit_norm: bool,
    /// Pair of roots minimizing `|T_ij|`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_pair: Option<(usize, usize)>,
}

/// The monic form `G = eps F_A` on which the per-solution checks run.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzedForm {
    pub form: BinaryForm,
    /// `[a, b, c, d]` with `G(x, y) = eps F(ax + by, cx + dy)`.
    pub matrix: [String; 4],
    pub sign: i32,
    #[serde(serialize_with = "ser_int")]
    pub discriminant: Integer,
    pub mahler: Interval,
    pub large_d: bool,
    pub layer_counts: LayerCounts,
    pub solutions: Vec<AnalyzedSolution>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrecisionInfo {
    pub requested_bits: u32,
    pub final_bits: u32,
    pub ceiling_bits: u32,
    /// Reruns of the checks at doubled precision.
    pub escalations: u32,
    /// Extra doublings needed while isolating the roots of the input form.
    pub root_escalations: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub version: &'static str,
    pub options: ReportOptions,
    pub form: FormInfo,
    pub search_box: SearchBox,
    pub solutions: Vec<SolutionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analyzed: Option<AnalyzedForm>,
    pub verdicts: Vec<Verdict>,
    pub final_bounds: FinalBounds,
    pub precision: PrecisionInfo,
    pub timing: Timing,
}

impl AnalysisReport {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_failure())
    }

    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Body {
    mahler: Option<Interval>,
    signature: Option<(usize, usize)>,
    related: Option<Vec<RelatedSolution>>,
    analyzed: Option<AnalyzedForm>,
    verdicts: Vec<Verdict>,
    root_escalations: u32,
}

fn precision_limited(e: &Error) -> bool {
    matches!(e, Error::AmbiguousBoundary(_) | Error::PrecisionExhausted(_) | Error::DegenerateRoots)
}

pub fn analyze(f: &BinaryForm, opts: &ReportOptions) -> Result<AnalysisReport> {
    analyze_labeled(f, None, opts)
}

pub fn analyze_labeled(f: &BinaryForm, label: Option<String>, opts: &ReportOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    let n = f.degree();
    if n < 3 {
        return Err(Error::DegreeTooLow(n));
    }
    let bx = SearchBox::new(opts.y_max)?;
    let base = PrecisionConfig::new(opts.precision_bits)?;
    let solutions = solve_with(f, &bx, &base)?;
    let fact = factor_over_z(f, &base)?;
    let disc = discriminant_any(f)?;
    let abs_d = disc.clone().abs();

    let mut bits = opts.precision_bits;
    let mut escalations = 0;
    let body = loop {
        let cfg = base.with_bits(bits);
        let res = if fact.is_irreducible() {
            irreducible_body(f, &solutions, &bx, &cfg, opts)
        } else {
            Ok(Body {
                mahler: None,
                signature: None,
                related: None,
                analyzed: None,
                verdicts: Vec::new(),
                root_escalations: 0,
            })
        };
        let retry = match &res {
            Err(e) => precision_limited(e),
            Ok(b) => b.verdicts.iter().any(|v| v.is_undecided() && !v.vacuous),
        };
        if retry && bits * 2 <= base.ceiling() {
            bits *= 2;
            escalations += 1;
            continue;
        }
        break res?;
    };

    let large_d = exceeds_d0(&abs_d, n);
    let summary = FormSummary {
        n,
        count: solutions.len() as u64,
        signature: body.signature,
        irreducible: fact.is_irreducible(),
        min_factor_degree: (!fact.is_irreducible()).then(|| fact.min_factor_degree()),
        disc_zero: disc == 0,
        large_d,
    };
    let mut verdicts = body.verdicts;
    let (final_bounds, fv) = final_verdict(&summary, &verdicts);
    verdicts.extend(fv);

    let entries = match body.related {
        Some(r) => r.into_iter().map(SolutionEntry::Related).collect(),
        None => solutions.into_iter().map(SolutionEntry::Plain).collect(),
    };
    Ok(AnalysisReport {
        version: REPORT_VERSION,
        options: opts.clone(),
        form: FormInfo {
            label,
            coefficients: f.clone(),
            n,
            discriminant: disc,
            d0: d0(n),
            large_d,
            irreducible: fact.is_irreducible(),
            factorization: fact,
            mahler: body.mahler,
            r: body.signature.map(|s| s.0),
            s: body.signature.map(|s| s.1),
        },
        search_box: bx,
        solutions: entries,
        analyzed: body.analyzed,
        verdicts,
        final_bounds,
        precision: PrecisionInfo {
            requested_bits: opts.precision_bits,
            final_bits: bits,
            ceiling_bits: base.ceiling(),
            escalations,
            root_escalations: body.root_escalations,
        },
        timing: Timing {
            elapsed_ms: start.elapsed().as_millis() as u64,
        },
    })
}

/// `n <= 3 + 2 log|D| / log 3`.
fn degree_discriminant_verdict(ctx: &Context) -> Verdict {
    let p = ctx.prec();
    let rhs = ctx
        .ln_abs_d()
        .mul_int(2)
        .div(&Interval::from_i64(3, p).ln())
        .add(&Interval::from_i64(3, p));
    Verdict::new(
        "degree_discriminant",
        ctx.form.to_line(),
        Interval::from_i64(ctx.n() as i64, p),
        Relation::Le,
        rhs,
    )
}

/// Lewis-Mahler on seeded random non-solutions, half of them close to a real
/// root so that the left side is small. Only failures are listed, followed by
/// their count.
fn random_lewis_mahler(ctx: &Context, opts: &ReportOptions) -> Result<Vec<Verdict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let rs = ctx.rs;
    let reals: Vec<f64> = (0..rs.r()).map(|i| rs.root(i).re.mid().to_f64()).collect();
    let y_hi = opts.y_max.min(1 << 20) as i64;
    let mut out = Vec::new();
    let mut failures = 0u64;
    let mut done = 0usize;
    while done < opts.random_pairs {
        let y: i64 = rng.gen_range(1..=y_hi);
        let x: i64 = if !reals.is_empty() && rng.gen_bool(0.5) {
            let a = reals[rng.gen_range(0..reals.len())];
            let c = (a * y as f64).round().clamp(-1e15, 1e15) as i64;
            c + rng.gen_range(-3..=3)
        } else {
            rng.gen_range(-y_hi..=y_hi)
        };
        let (xi, yi) = (Integer::from(x), Integer::from(y));
        if ctx.form.eval(&xi, &yi).abs() == 1 {
            continue;
        }
        done += 1;
        let v = check_lewis_mahler(ctx, &xi, &yi)?;
        if !v.pass {
            failures += 1;
            out.push(v);
        }
    }
    out.push(Verdict::count(
        "lewis_mahler_random",
        format!("{} pairs, seed {}", opts.random_pairs, opts.seed),
        failures,
        Relation::Le,
        0,
    ));
    Ok(out)
}

fn irreducible_body(
    f: &BinaryForm,
    solutions: &[Solution],
    bx: &SearchBox,
    cfg: &PrecisionConfig,
    opts: &ReportOptions,
) -> Result<Body> {
    let rs = find_roots(f, cfg)?;
    let ctx = Context::new(f, &rs)?;
    let mut v = vec![degree_discriminant_verdict(&ctx)];
    v.extend(verify_height_inequalities(&f.dehomogenize(), cfg)?);
    let related = assign_related_roots(solutions, &rs)?;
    for s in solutions.iter().filter(|s| !s.is_trivial()) {
        v.push(check_lewis_mahler(&ctx, &s.x, &s.y)?);
    }
    v.extend(random_lewis_mahler(&ctx, opts)?);
    v.extend(check_grp_bound(&ctx, &related));
    let analyzed = match solutions.first() {
        Some(s0) => Some(analyze_monic(f, s0, bx, cfg, &mut v)?),
        None => {
            v.push(Verdict::skipped("monic_reduction", f.to_line(), "no solution in the box"));
            None
        }
    };
    Ok(Body {
        mahler: Some(ctx.mahler.clone()),
        signature: Some((rs.r(), rs.s())),
        related: Some(related),
        analyzed,
        verdicts: v,
        root_escalations: rs.escalations(),
    })
}

/// Moves `s0` to `(1, 0)` and runs the checks that need a monic form.
fn analyze_monic(
    f: &BinaryForm,
    s0: &Solution,
    bx: &SearchBox,
    cfg: &PrecisionConfig,
    v: &mut Vec<Verdict>,
) -> Result<AnalyzedForm> {
    let red = monic_reduce(f, &s0.x, &s0.y)?;
    let g = &red.form;
    let sols = solve_with(g, bx, cfg)?;
    let rs = find_roots(g, cfg)?;
    let ctx = Context::new(g, &rs)?;
    let n = ctx.n();
    let related = assign_related_roots(&sols, &rs)?;
    let (tagged, counts) = classify_layers(&related, &rs, &ctx.mahler)?;
    let phis: Vec<PhiVector> = tagged.iter().map(|t| phi(&ctx, t.x(), t.y())).collect::<Result<_>>()?;
    v.extend(phis.iter().map(|p| phi_sum_zero(&ctx, p)));

    let set_a = build_set_a(&phis, rs.r(), rs.s());
    v.push(check_set_a_order(&phis, &set_a));
    v.extend(check_dr_bound(&ctx, &phis, &set_a));
    let v10 = phis.iter().find(|p| p.is_trivial()).expect("(1, 0) solves a monic form");
    for (t, p) in tagged.iter().zip(&phis) {
        v.extend(check_phi_norm_bounds(&ctx, t, p, v10));
    }
    v.extend(check_small_count_bound(&ctx, &tagged));
    v.extend(check_medium_gaps(&ctx, &tagged));

    let mut t_pairs = vec![None; tagged.len()];
    for (k, (t, p)) in tagged.iter().zip(&phis).enumerate() {
        if p.is_trivial() {
            continue;
        }
        let tr = compute_t(&rs, t.x(), t.y(), t.related.related_root)?;
        v.push(check_distance_to_line(&ctx, t, p)?);
        v.extend(check_tu(&ctx, t, p, &tr));
        if let Some(pair) = tr.best {
            v.push(check_cross_ratio_height(&ctx, t, p, pair, cfg));
        }
        t_pairs[k] = tr.best;
    }

    let pairs: Vec<(&TaggedSolution, &PhiVector)> = tagged.iter().zip(&phis).collect();
    for c in (0..n).filter(|&c| c <= rs.conjugate(c)) {
        let out = check_exponential_gap(&ctx, &pairs, c);
        v.extend(out.verdicts);
        for (r1, r3, vac) in out.triples {
            if !r1.is_positive() || !r3.is_positive() {
                continue;
            }
            let note = if vac { "triple outside the large layer or |D| <= D0(n)" } else { "" };
            v.extend(
                check_r3_r1_relation(&r1, &r3, n, &ctx.ln_mahler())?
                    .into_iter()
                    .map(|x| x.vacuous_if(vac, note)),
            );
        }
    }

    let solutions = tagged
        .into_iter()
        .zip(phis)
        .zip(t_pairs)
        .enumerate()
        .map(|(i, ((t, p), tp))| AnalyzedSolution {
            unit_norm: unit_norm_check(t.x(), t.y(), &rs),
            in_set_a: set_a.contains(i),
            phi: p.components,
            phi_norm: p.norm,
            t_pair: tp,
            tagged: t,
        })
        .collect();
    let m = &red.matrix;
    Ok(AnalyzedForm {
        form: g.clone(),
        matrix: [m.a.to_string(), m.b.to_string(), m.c.to_string(), m.d.to_string()],
        sign: red.sign,
        discriminant: ctx.disc.clone(),
        mahler: ctx.mahler.clone(),
        large_d: ctx.large_d,
        layer_counts: counts,
        solutions,
    })
}

/// Relative agreement `|a - b| <= 2^(-prec/2) max(|a|, |b|)` of two
/// evaluations of the same quantity.
pub fn agree(a: &Interval, b: &Interval, prec: u32) -> bool {
    let (x, y) = (a.mid(), b.mid());
    let scale = Float::with_val(prec, x.abs_ref()).max(&Float::with_val(prec, y.abs_ref()));
    Float::with_val(prec, &x - &y).abs() <= scale >> (prec / 2)
}
