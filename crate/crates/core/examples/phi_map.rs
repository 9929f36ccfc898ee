// The logarithmic vectors phi(x, y) of the solutions of a monic form.

use rug::Integer;
use thuekit::analysis::{phi, phi_sum_zero, Context};
use thuekit::forms::{family_f1, monic_reduce};
use thuekit::solver::{solve_in_box, SearchBox};
use thuekit::{find_roots, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = family_f1(3, &Integer::from(2))?;
    let g = monic_reduce(&f, &Integer::from(1), &Integer::from(1))?.form;
    let rs = find_roots(&g, &PrecisionConfig::default())?;
    let ctx = Context::new(&g, &rs)?;
    for s in solve_in_box(&g, &SearchBox::new(1000)?)? {
        let v = phi(&ctx, &s.x, &s.y)?;
        let comps: Vec<String> = v.components.iter().map(|c| format!("{:.6}", c.to_f64())).collect();
        println!("({}, {}): [{}], |phi| = {:.6}", s.x, s.y, comps.join(", "), v.norm.to_f64());
        assert!(phi_sum_zero(&ctx, &v).pass);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
