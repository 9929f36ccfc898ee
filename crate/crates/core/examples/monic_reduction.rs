// Moves a known solution to (1, 0), giving an equivalent monic form.

use rug::Integer;
use thuekit::forms::{family_f1, monic_reduce};
use thuekit::solver::{solve_in_box, SearchBox};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = family_f1(3, &Integer::from(2))?;
    let red = monic_reduce(&f, &Integer::from(1), &Integer::from(1))?;
    println!("F = {f}\nG = {} (A = {}, sign {})", red.form, red.matrix, red.sign);
    assert!(red.form.is_monic());
    for s in solve_in_box(&red.form, &SearchBox::new(100)?)? {
        let (x, y) = red.to_original(&s.x, &s.y);
        println!("  G({}, {}) = {}  ->  F({x}, {y}) = {}", s.x, s.y, s.value, f.eval(&x, &y));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
