// Sorts solutions into layers by the size of y relative to M(F) and checks
// the gap principle inside each layer.

use rug::Integer;
use thuekit::analysis::{check_medium_gaps, check_small_count_bound, classify_layers, Context};
use thuekit::forms::{family_f1, monic_reduce};
use thuekit::solver::{assign_related_roots, solve_in_box, SearchBox};
use thuekit::{find_roots, PrecisionConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = family_f1(5, &Integer::from(1009))?;
    let g = monic_reduce(&f, &Integer::from(1), &Integer::from(1))?.form;
    let rs = find_roots(&g, &PrecisionConfig::default())?;
    let ctx = Context::new(&g, &rs)?;
    println!("M(G) = {:.3}, |D| > D0: {}", ctx.mahler.to_f64(), ctx.large_d);
    let related = assign_related_roots(&solve_in_box(&g, &SearchBox::new(10_000)?)?, &rs)?;
    let (tagged, counts) = classify_layers(&related, &rs, &ctx.mahler)?;
    for t in &tagged {
        println!("  ({}, {}) {:?}, root {}", t.x(), t.y(), t.layer, t.related.related_root);
    }
    println!("small {}, medium {}, large {}", counts.small, counts.medium, counts.large);
    for v in check_small_count_bound(&ctx, &tagged).iter().chain(&check_medium_gaps(&ctx, &tagged)) {
        println!("  {v}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
