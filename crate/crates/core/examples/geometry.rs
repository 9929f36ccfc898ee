// The vectors b_i, c_i and the distance from phi(x, y) to the line through
// the related root.

use rug::Integer;
use thuekit::analysis::{
    compute_t, distance_to_line, geometry_vectors, line_base, line_direction, phi, point_line_distance, Context,
};
use thuekit::forms::{family_f1, monic_reduce};
use thuekit::solver::{assign_related_roots, solve_in_box, SearchBox};
use thuekit::{find_roots, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g5 = geometry_vectors(5)?;
    println!("n = 5: <c_0, b_4> = {}, |c_0|^2 = {}", g5.c_dot_bn(0), g5.c_norm_sqr(0));

    let f = family_f1(4, &Integer::from(3))?;
    let g = monic_reduce(&f, &Integer::from(1), &Integer::from(1))?.form;
    let rs = find_roots(&g, &PrecisionConfig::default())?;
    let ctx = Context::new(&g, &rs)?;
    let sols = assign_related_roots(&solve_in_box(&g, &SearchBox::new(1000)?)?, &rs)?;
    for s in sols.iter().filter(|s| s.solution.y > 0) {
        let (x, y, k) = (&s.solution.x, &s.solution.y, s.related_root);
        let d = distance_to_line(&rs, x, y, k)?;
        // the same distance by projecting the reindexed phi onto the line
        let v = phi(&ctx, x, y)?;
        let order = thuekit::analysis::related_last(rs.degree(), k);
        let point: Vec<_> = order.iter().map(|&i| v.components[i].clone()).collect();
        let proj = point_line_distance(&point, &line_base(&rs, k)?, &line_direction(rs.degree(), rs.prec())?);
        let t = compute_t(&rs, x, y, k)?;
        println!(
            "({x}, {y}) root {k}: distance {:.6e} vs projection {:.6e}; best T pair {:?}",
            d.to_f64(),
            proj.to_f64(),
            t.best
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
