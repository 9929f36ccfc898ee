// Matveev's constants for a linear form in logarithms and the constants of
// the counting argument.

use rug::Float;
use thuekit::interval::Interval;
use thuekit::matveev::{matveev_bound, counting_constants, MatveevInput};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = 256;
    let input = MatveevInput {
        n: 5,
        chi: 2,
        d: 120,
        a: vec![Interval::point(Float::with_val(p, 3)); 5],
        b: Interval::from_i64(10, p),
    };
    let out = matveev_bound(&input, p)?;
    println!("log C(5,2) = {:.6}, C0 = {:.4}, W0 = {:.4}", out.log_c.to_f64(), out.c0.to_f64(), out.w0.to_f64());
    println!("log|L| > -exp({:.4})", out.log_product.as_ref().unwrap().to_f64());
    for n in [3, 5, 10] {
        let pc = counting_constants(n, p)?;
        println!("n = {n}: log K = {:.3}, log K1 = {:.3}, D0 = {}", pc.log_k.to_f64(), pc.log_k1.to_f64(), pc.d0);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
