//! Certified comparisons of two interval quantities.

use std::fmt;

use rug::Float;
use serde::Serialize;

use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Holds for every point of both intervals.
    Certified,
    /// A non-strict relation whose sides agree to within the precision
    /// tolerance, as at an equality case.
    Tight,
    /// Fails for every point of both intervals.
    Violated,
    /// The intervals are too wide to decide.
    Undecided,
    /// Not evaluated.
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub lemma: String,
    pub inputs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Interval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Interval>,
    pub relation: Relation,
    pub outcome: Outcome,
    pub pass: bool,
    /// The statement's hypotheses are not met, so its outcome proves nothing.
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `2^(-prec/2) max(1, |x|)`.
fn tolerance(x: &Interval, prec: u32) -> Float {
    let m = x.mid();
    let scale = if m.is_finite() {
        Float::with_val(prec, m.abs_ref()).max(&Float::with_val(prec, 1))
    } else {
        Float::with_val(prec, 1)
    };
    scale >> (prec / 2)
}

fn close(lhs: &Interval, rhs: &Interval) -> bool {
    if !lhs.is_finite() || !rhs.is_finite() || !lhs.overlaps(rhs) {
        return false;
    }
    let prec = lhs.prec().min(rhs.prec());
    let tol = tolerance(rhs, prec);
    let diff = Float::with_val(prec, lhs.mid() - rhs.mid()).abs();
    diff <= tol && lhs.width() <= tol && rhs.width() <= tol
}

pub fn compare(lhs: &Interval, rhs: &Interval, rel: Relation) -> Outcome {
    let (a, b, strict) = match rel {
        Relation::Le => (lhs, rhs, false),
        Relation::Lt => (lhs, rhs, true),
        Relation::Ge => (rhs, lhs, false),
        Relation::Gt => (rhs, lhs, true),
        Relation::Eq => {
            return if close(lhs, rhs) {
                Outcome::Tight
            } else if !lhs.overlaps(rhs) {
                Outcome::Violated
            } else {
                Outcome::Undecided
            };
        }
    };
    // a (<|<=) b
    if (strict && a.certainly_lt(b)) || (!strict && a.certainly_le(b)) {
        Outcome::Certified
    } else if (strict && b.certainly_le(a)) || (!strict && b.certainly_lt(a)) {
        Outcome::Violated
    } else if !strict && close(a, b) {
        Outcome::Tight
    } else {
        Outcome::Undecided
    }
}

impl Verdict {
    pub fn new(
        lemma: impl Into<String>,
        inputs: impl Into<String>,
        lhs: Interval,
        relation: Relation,
        rhs: Interval,
    ) -> Verdict {
        let outcome = compare(&lhs, &rhs, relation);
        Verdict {
            lemma: lemma.into(),
            inputs: inputs.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation,
            outcome,
            pass: matches!(outcome, Outcome::Certified | Outcome::Tight),
            vacuous: false,
            note: None,
        }
    }

    /// A statement that was not evaluated because its hypotheses fail.
    pub fn skipped(lemma: impl Into<String>, inputs: impl Into<String>, reason: impl Into<String>) -> Verdict {
        Verdict {
            lemma: lemma.into(),
            inputs: inputs.into(),
            lhs: None,
            rhs: None,
            relation: Relation::Le,
            outcome: Outcome::Skipped,
            pass: true,
            vacuous: true,
            note: Some(reason.into()),
        }
    }

    /// Comparison of two exact counts.
    pub fn count(lemma: impl Into<String>, inputs: impl Into<String>, lhs: u64, relation: Relation, rhs: u64) -> Verdict {
        Verdict::new(
            lemma,
            inputs,
            Interval::from_i64(lhs as i64, 64),
            relation,
            Interval::from_i64(rhs as i64, 64),
        )
    }

    pub fn vacuous_if(mut self, vacuous: bool, reason: impl Into<String>) -> Verdict {
        if vacuous {
            self.vacuous = true;
            self.note = Some(reason.into());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Verdict {
        self.note = Some(note.into());
        self
    }

    /// A non-vacuous statement that did not pass.
    pub fn is_failure(&self) -> bool {
        !self.vacuous && !self.pass
    }

    pub fn is_undecided(&self) -> bool {
        self.outcome == Outcome::Undecided
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.pass, self.vacuous) {
            (_, true) => "vacuous",
            (true, false) => "pass",
            (false, false) => "FAIL",
        };
        write!(f, "[{status}] {} ({})", self.lemma, self.inputs)?;
        if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
            write!(f, ": {l} {} {r}", self.relation)?;
        }
        if let Some(n) = &self.note {
            write!(f, "; {n}")?;
        }
        Ok(())
    }
}
