// Certified root isolation: real and complex roots as interval boxes.

use thuekit::{find_roots, BinaryForm, PrecisionConfig};
use thuekit::roots::min_root_distance;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = BinaryForm::parse("1 0 -1 -1")?;
    let rs = find_roots(&f, &PrecisionConfig::new(128)?)?;
    println!("{f}: r = {}, s = {}", rs.r(), rs.s());
    for (i, z) in rs.roots().iter().enumerate() {
        println!("  alpha_{i} = {z}  |f'(alpha)| = {}", rs.derivative_abs(i));
    }
    println!("  min distance {}", min_root_distance(&rs));
    let (sum, _) = rs.vieta();
    assert!(sum.re.contains_zero());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
