// Recovers the minimal polynomial of a cross-ratio of roots from its
// numerical conjugates and takes its height.

use thuekit::analysis::cross_ratio_height;
use thuekit::roots::{cross_ratio_orbit, reconstruct_min_poly};
use thuekit::{find_roots, BinaryForm, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = PrecisionConfig::default();
    let f = BinaryForm::parse("1 0 -1 -1")?;
    let rs = find_roots(&f, &cfg)?;
    let orbit = cross_ratio_orbit(&rs, 0, 1, 2);
    let mp = reconstruct_min_poly(&orbit, &cfg)?;
    println!("minimal polynomial of (a0 - a1)/(a0 - a2): {mp}");
    let h = cross_ratio_height(&rs, 0, 1, 2, &cfg)?;
    println!("h = {} (degree {})", h.value, h.degree);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
