// The GL2(Z) action on forms: the discriminant law, transport of solutions
// and the decomposition along a prime.

use rug::ops::Pow;
use rug::Integer;
use thuekit::forms::{apply_matrix, discriminant_any, prime_layer_decomposition, IntMatrix};
use thuekit::solver::{solve_in_box, transport, SearchBox};
use thuekit::BinaryForm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = BinaryForm::parse("1 -1 -1 1 1")?;
    let a = IntMatrix::from_i64(2, 1, -1, 3);
    let fa = apply_matrix(&f, &a)?;
    let (d, da) = (discriminant_any(&f)?, discriminant_any(&fa)?);
    let n = f.degree() as u32;
    let scale = a.det().pow(n * (n - 1));
    println!("D(F) = {d}, D(F_A) = {da}, det(A)^(n(n-1)) = {scale}");
    assert_eq!(da, d.clone() * &scale);

    // a unimodular change of variables permutes the solutions
    let u = IntMatrix::from_i64(2, 1, 1, 1);
    let bx = SearchBox::new(200)?;
    let moved = transport(&solve_in_box(&apply_matrix(&f, &u)?, &bx)?, &f, &u);
    let pairs: Vec<String> = moved.iter().map(|s| format!("({}, {})", s.x, s.y)).collect();
    println!("solutions of F_U mapped back to F: {}", pairs.join(" "));

    let p = Integer::from(3);
    for (m, g) in prime_layer_decomposition(&f, &p)? {
        println!("  A = {m}: {g}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
