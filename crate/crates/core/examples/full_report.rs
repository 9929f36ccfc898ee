// Runs the whole pipeline on one form and summarizes the verdicts.

use std::collections::BTreeMap;

use thuekit::report::{analyze, ReportOptions};
use thuekit::BinaryForm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = BinaryForm::parse("1 0 -1 -1")?;
    let opts = ReportOptions { y_max: 1000, random_pairs: 200, ..Default::default() };
    let r = analyze(&f, &opts)?;
    println!("{f}: {} solutions, D = {}, large D: {}", r.count(), r.form.discriminant, r.form.large_d);
    let mut tally: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for v in &r.verdicts {
        let e = tally.entry(v.lemma.as_str()).or_default();
        match (v.vacuous, v.pass) {
            (true, _) => e.2 += 1,
            (false, true) => e.0 += 1,
            (false, false) => e.1 += 1,
        }
    }
    for (lemma, (pass, fail, vac)) in tally {
        println!("  {lemma:<24} pass {pass:>3}  fail {fail:>3}  vacuous {vac:>3}");
    }
    println!("all checks pass: {}", r.final_bounds.all_checks_pass);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
