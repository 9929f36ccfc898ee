// Cross-checks the root-guided solver against a plain double loop.

use thuekit::solver::{brute_force, brute_force_x_bound, solve_in_box, SearchBox};
use thuekit::BinaryForm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = BinaryForm::parse("1 0 0 2")?;
    let y_max = 100;
    let fast = solve_in_box(&f, &SearchBox::new(y_max)?)?;
    let x_max = brute_force_x_bound(&f, y_max as i64);
    let slow = brute_force(&f, y_max as i64, x_max);
    println!("{f}: {} solutions, brute force over |x| <= {x_max} agrees: {}", fast.len(), fast == slow);
    assert_eq!(fast, slow);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
