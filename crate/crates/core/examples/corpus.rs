// A small batch run from an inline config, printed as the summary CSV.

use thuekit::corpus::{run_corpus, summary_csv, CorpusConfig};

const CONFIG: &str = r#"
y_max = 500
random_pairs = 100

[[forms]]
coeffs = "1 0 0 2"
label = "x^3 + 2y^3"

[[families]]
kind = "even"
n = [4]
p = [2, 3]
"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CorpusConfig::from_toml(CONFIG)?;
    let reports = run_corpus(&cfg)?;
    print!("{}", summary_csv(&reports)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
