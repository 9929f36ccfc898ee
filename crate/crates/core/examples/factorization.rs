// Factorization over Z and the solution caps for reducible forms.

use thuekit::forms::factor_over_z;
use thuekit::report::{analyze, ReportOptions};
use thuekit::{BinaryForm, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = PrecisionConfig::default();
    for line in ["1 0 -1 -1", "2 -3 0 1", "1 0 -3 0 2"] {
        let f = BinaryForm::parse(line)?;
        let fact = factor_over_z(&f, &cfg)?;
        let parts: Vec<String> = fact.factors.iter().map(|(g, m)| format!("({g})^{m}")).collect();
        println!("{f} = {}", parts.join(" "));
        assert_eq!(fact.product(), f);
    }
    let opts = ReportOptions { y_max: 100, ..Default::default() };
    let r = analyze(&BinaryForm::parse("2 -3 0 1")?, &opts)?;
    println!("2x^3 - 3x^2 y + y^3: {} solutions, cap {:?}", r.count(), r.final_bounds.reducible_cap);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
