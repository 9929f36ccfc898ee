use serde::Serialize;

use crate::verdict::{Relation, Verdict};

/// Observed totals against the headline bounds. Counts identify `(x, y)` with
/// `(-x, -y)`.
#[derive(Clone, Debug, Serialize)]
pub struct FinalBounds {
    pub n: usize,
    pub count: u64,
    pub bound_11n_minus_2: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_11r4s1: Option<u64>,
    /// `2(n-1)` or `4(n-2)` for reducible forms with a factor of degree 1 or 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reducible_cap: Option<u64>,
    pub irreducible: bool,
    pub large_d: bool,
    /// No non-vacuous verdict failed, the final ones included.
    pub all_checks_pass: bool,
}

/// Inputs of [`final_verdict`] that do not come from the per-solution checks.
#[derive(Clone, Debug)]
pub struct FormSummary {
    pub n: usize,
    pub count: u64,
    /// `(r, s)` when the roots were isolated.
    pub signature: Option<(usize, usize)>,
    pub irreducible: bool,
    /// Degree of the smallest irreducible factor, for reducible forms.
    pub min_factor_degree: Option<usize>,
    pub disc_zero: bool,
    pub large_d: bool,
}

pub fn final_verdict(form: &FormSummary, verdicts: &[Verdict]) -> (FinalBounds, Vec<Verdict>) {
    let n = form.n as u64;
    let tag = format!("n = {n}");
    let b11 = (11 * n).saturating_sub(2);
    let b_rs = form.signature.map(|(r, s)| (11 * r as u64 + 4 * s as u64).saturating_sub(1));
    let mut out = Vec::new();
    let mut cap = None;
    if form.irreducible {
        let note = "observed in the search box";
        out.push(
            Verdict::count("count_11n_minus_2", &tag, form.count, Relation::Le, b11)
                .with_note(note)
                .vacuous_if(!form.large_d, "|D| does not exceed D0(n)"),
        );
        if let Some(b) = b_rs {
            out.push(
                Verdict::count("count_11r_4s_minus_1", &tag, form.count, Relation::Le, b)
                    .with_note(note)
                    .vacuous_if(!form.large_d, "|D| does not exceed D0(n)"),
            );
        }
    } else {
        let (lemma, c) = match form.min_factor_degree {
            Some(1) => ("reducible_cap_linear", Some(2 * (n - 1))),
            Some(2) => ("reducible_cap_quadratic", Some(4 * (n - 2))),
            _ => ("reducible_cap", None),
        };
        cap = c;
        out.push(match c {
            None => Verdict::skipped(lemma, &tag, "no irreducible factor of degree 1 or 2"),
            Some(c) if form.disc_zero => Verdict::count(lemma, &tag, form.count, Relation::Le, c)
                .vacuous_if(true, "repeated factor: the equation may have infinitely many solutions"),
            Some(c) => Verdict::count(lemma, &tag, form.count, Relation::Le, c),
        });
    }
    let all = !verdicts.iter().chain(&out).any(Verdict::is_failure);
    let fb = FinalBounds {
        n: form.n,
        count: form.count,
        bound_11n_minus_2: b11,
        bound_11r4s1: b_rs,
        reducible_cap: cap,
        irreducible: form.irreducible,
        large_d: form.large_d,
        all_checks_pass: all,
    };
    (fb, out)
}
