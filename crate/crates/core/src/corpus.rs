//! Batch runs over a TOML list of forms and families.

use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use rug::Integer;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::forms::{family_even, family_f1, BinaryForm};
use crate::report::{analyze_labeled, AnalysisReport, ReportOptions};

pub const CSV_HEADER: [&str; 10] = [
    "form",
    "n",
    "|D|",
    "M",
    "r",
    "s",
    "count",
    "bound_11n_minus_2",
    "bound_11r4s1",
    "all_checks_pass",
];

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    /// Coefficient line, `a_n` first.
    pub coeffs: String,
    pub label: Option<String>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    F1,
    Even,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub kind: FamilyKind,
    pub n: Vec<usize>,
    pub p: Vec<u64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    pub y_max: Option<u64>,
    pub precision_bits: Option<u32>,
    pub random_pairs: Option<usize>,
    pub seed: Option<u64>,
    #[serde(default)]
    pub forms: Vec<FormEntry>,
    #[serde(default)]
    pub families: Vec<FamilyEntry>,
}

pub fn family_label(kind: FamilyKind, n: usize, p: u64) -> String {
    match kind {
        FamilyKind::F1 => format!("f1(n={n},p={p})"),
        FamilyKind::Even => format!("even(n={n},p={p})"),
    }
}

pub fn family_form(kind: FamilyKind, n: usize, p: u64) -> Result<BinaryForm> {
    let p = Integer::from(p);
    match kind {
        FamilyKind::F1 => family_f1(n, &p),
        FamilyKind::Even => family_even(n, &p),
    }
}

impl CorpusConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn options(&self) -> ReportOptions {
        let d = ReportOptions::default();
        ReportOptions {
            y_max: self.y_max.unwrap_or(d.y_max),
            precision_bits: self.precision_bits.unwrap_or(d.precision_bits),
            random_pairs: self.random_pairs.unwrap_or(d.random_pairs),
            seed: self.seed.unwrap_or(d.seed),
        }
    }

    /// Labeled forms in config order: explicit forms first, then families
    /// with `n` varying slowest.
    pub fn entries(&self) -> Result<Vec<(String, BinaryForm)>> {
        let mut out = Vec::new();
        for f in &self.forms {
            let form = BinaryForm::parse(&f.coeffs).map_err(|e| Error::Config(format!("{:?}: {e}", f.coeffs)))?;
            out.push((f.label.clone().unwrap_or_else(|| form.to_line()), form));
        }
        for fam in &self.families {
            for &n in &fam.n {
                for &p in &fam.p {
                    let label = family_label(fam.kind, n, p);
                    let form = family_form(fam.kind, n, p).map_err(|e| Error::Config(format!("{label}: {e}")))?;
                    out.push((label, form));
                }
            }
        }
        Ok(out)
    }
}

/// Analyzes every entry in parallel; results keep config order.
pub fn run_corpus(cfg: &CorpusConfig) -> Result<Vec<AnalysisReport>> {
    let opts = cfg.options();
    cfg.entries()?
        .into_par_iter()
        .map(|(label, f)| analyze_labeled(&f, Some(label.clone()), &opts).map_err(|e| Error::Config(format!("{label}: {e}"))))
        .collect()
}

pub fn csv_row(r: &AnalysisReport) -> [String; 10] {
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    [
        r.form.label.clone().unwrap_or_else(|| r.form.coefficients.to_line()),
        r.form.n.to_string(),
        r.form.discriminant.clone().abs().to_string(),
        r.form.mahler.as_ref().map(|m| format!("{:.6}", m.to_f64())).unwrap_or_default(),
        opt(r.form.r),
        opt(r.form.s),
        r.final_bounds.count.to_string(),
        r.final_bounds.bound_11n_minus_2.to_string(),
        r.final_bounds.bound_11r4s1.map(|b| b.to_string()).unwrap_or_default(),
        r.final_bounds.all_checks_pass.to_string(),
    ]
}

pub fn summary_csv(reports: &[AnalysisReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in reports {
        w.write_record(csv_row(r)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// `summary.csv` plus `form_NNN.json` per report, numbered from 1.
pub fn write_outputs(dir: &Path, reports: &[AnalysisReport]) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    for (i, r) in reports.iter().enumerate() {
        write_atomic(&dir.join(format!("form_{:03}.json", i + 1)), &r.to_json())?;
    }
    write_atomic(&dir.join("summary.csv"), &summary_csv(reports)?)
}
