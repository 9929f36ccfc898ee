// Solves `|F(x, y)| = 1` for the family `x^n + p (x - y)(2x - y)...(nx - y)`.

use rug::Integer;
use thuekit::forms::family_f1;
use thuekit::solver::{solve_in_box, SearchBox};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = family_f1(4, &Integer::from(3))?;
    println!("F = {f}");
    let sols = solve_in_box(&f, &SearchBox::new(10_000)?)?;
    for s in &sols {
        println!("  F({}, {}) = {}", s.x, s.y, s.value);
    }
    // (1, k) for k = 1..=4 always solve it
    assert!((1..=4).all(|k| sols.iter().any(|s| s.x == 1 && s.y == k)));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
