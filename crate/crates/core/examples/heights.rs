// Mahler measure, naive height, length and the inequalities between them.

use thuekit::heights::{height_profile, verify_height_inequalities};
use thuekit::roots::isolate_roots;
use thuekit::{IntPoly, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = PrecisionConfig::default();
    // Lehmer's polynomial
    let p = IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    let rs = isolate_roots(&p, &cfg)?;
    let prof = height_profile(&p, &rs);
    println!("M = {}, H = {}, L = {}", prof.mahler, prof.naive, prof.length);
    for v in verify_height_inequalities(&p, &cfg)? {
        println!("  {v}");
        assert!(v.pass);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
