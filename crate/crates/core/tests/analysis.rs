mod common;

use common::*;
use proptest::prelude::*;
use rug::{Integer, Rational};
use thuekit::analysis::{
    build_set_a, check_set_a_order, classify_layers, compute_t, cross_ratio_height, distance_to_line, dr_bound,
    geometry_vectors, phi, point_line_distance, related_last, tmt_check,
    triangle_area_base_height, triangle_area_heron, Context, LayerTag, PhiVector,
};
use thuekit::forms::monic_reduce;
use thuekit::solver::{assign_related_roots, solve_in_box, SearchBox};
use thuekit::verdict::Outcome;
use thuekit::{find_roots, CInterval, Interval, PrecisionConfig};

fn cfg(bits: u32) -> PrecisionConfig {
    PrecisionConfig::new(bits).unwrap()
}

/// Overlap, and mids within `2^(-prec/2) max(1, |a|)`.
fn close(a: &Interval, b: &Interval, prec: u32) -> bool {
    let tol = a.to_f64().abs().max(1.0) * 2f64.powi(-(prec as i32) / 2);
    a.overlaps(b) && (a.to_f64() - b.to_f64()).abs() <= tol
}

/// `phi` in plain f64 from the root centers.
fn phi_f64(ctx: &Context, x: i64, y: i64) -> Vec<f64> {
    let n = ctx.n() as f64;
    let ld = ctx.abs_d.to_f64().ln();
    (0..ctx.n())
        .map(|m| {
            let (re, im) = ctx.rs.center(m);
            let (re, im) = (re.to_f64(), im.to_f64());
            let lin = ((x as f64 - y as f64 * re).powi(2) + (y as f64 * im).powi(2)).sqrt();
            ld / (n * (n - 2.0)) + lin.ln() - ctx.rs.derivative_abs(m).to_f64().ln() / (n - 2.0)
        })
        .collect()
}

#[test]
fn phi_matches_float_oracle() {
    let f = form("1 0 -1 -1");
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let ctx = Context::new(&f, &rs).unwrap();
    for (x, y) in [(1, 0), (1, 1), (4, 3), (-1, 1)] {
        let (xi, yi) = (Integer::from(x), Integer::from(y));
        if f.eval(&xi, &yi).abs() != 1 {
            continue;
        }
        let v = phi(&ctx, &xi, &yi).unwrap();
        for (a, b) in v.components.iter().zip(phi_f64(&ctx, x, y)) {
            assert!((a.to_f64() - b).abs() < 1e-12, "({x}, {y})");
        }
        assert!(v.sum().abs().hi().to_f64() < 2f64.powi(-100));
    }
}

#[test]
fn phi_needs_a_monic_form() {
    let f = f1(3, 2);
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let ctx = Context::new(&f, &rs).unwrap();
    assert!(phi(&ctx, &Integer::from(1), &Integer::from(1)).is_err());
}

#[test]
fn dr_bound_for_the_plastic_cubic() {
    let f = form("1 0 -1 -1");
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let ctx = Context::new(&f, &rs).unwrap();
    let want = 0.5 * (23f64.ln() / 6.0 - 2f64.ln());
    assert!((dr_bound(&ctx).to_f64() - want).abs() < 1e-15);
    assert!((dr_bound(&ctx).to_f64() + 0.0853).abs() < 1e-4);
}

#[test]
fn geometry_vectors_exact() {
    for n in 3..=12 {
        let g = geometry_vectors(n).unwrap();
        let want = Rational::from(((n * n - 3 * n + 2) as i64, ((n - 1) * (n - 1)) as i64));
        for i in 0..n - 1 {
            assert_eq!(g.c_dot_bn(i), 0);
            assert_eq!(g.c_norm_sqr(i), want);
        }
    }
    assert!(geometry_vectors(2).is_err());
    assert_eq!(related_last(4, 1), vec![0, 2, 3, 1]);
}

#[test]
fn distance_agrees_with_projection() {
    let f = form("1 0 -4 1 1");
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let n = f.degree();
    let (x, y) = (Integer::from(7), Integer::from(2));
    let p = rs.prec();
    for k in 0..n {
        let d = distance_to_line(&rs, &x, &y, k).unwrap();
        // rebuild the point in R^n and project onto the line by hand
        let order = related_last(n, k);
        let g = geometry_vectors(n).unwrap();
        let t = CInterval::from_real(Interval::from_int(&x, p).div(&Interval::from_int(&y, p)));
        let mut point = vec![Interval::zero(p); n];
        for (slot, &i) in order.iter().enumerate().take(n - 1) {
            let w = t.sub(rs.root(i)).abs().div(&rs.root(k).sub(rs.root(i)).abs()).ln();
            for m in 0..n {
                point[m] = point[m].add(&w.mul(&Interval::from_rational(&g.c[slot][m], p)));
            }
        }
        let sq: Vec<Interval> = point.iter().map(|c| c.sqr()).collect();
        let norm = Interval::sum(sq.iter(), p).sqrt();
        assert!(d.overlaps(&norm));
    }
}

#[test]
fn heron_agrees_with_base_height() {
    let p = 128;
    let v = |a: &[i64]| a.iter().map(|&x| Interval::from_i64(x, p)).collect::<Vec<_>>();
    let (a, b, c) = (v(&[0, 0, 0]), v(&[3, 0, 0]), v(&[0, 4, 0]));
    assert!((triangle_area_heron(&a, &b, &c).to_f64() - 6.0).abs() < 1e-20);
    assert!((triangle_area_base_height(&a, &b, &c).to_f64() - 6.0).abs() < 1e-20);
    let d = point_line_distance(&v(&[2, 5, 1]), &v(&[1, 1, 1]), &v(&[0, 2, 0]));
    assert!((d.to_f64() - 1.0).abs() < 1e-20);
}

#[test]
fn cross_ratio_of_equal_indices_is_trivial() {
    let f = form("1 0 -4 1 1");
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let h = cross_ratio_height(&rs, 0, 1, 1, &cfg(256)).unwrap();
    assert!(h.value.contains_zero() && h.degree == 1);
    // a cubic's cross-ratios have at most 6 conjugates
    let c = form("1 0 -1 -1");
    let rc = find_roots(&c, &cfg(256)).unwrap();
    let h = cross_ratio_height(&rc, 0, 1, 2, &cfg(256)).unwrap();
    assert!(h.value.is_positive());
}

#[test]
fn t_is_antisymmetric() {
    let f = form("1 0 -4 1 1");
    let rs = find_roots(&f, &cfg(256)).unwrap();
    let tr = compute_t(&rs, &Integer::from(7), &Integer::from(2), 0).unwrap();
    for q in &tr.values {
        let back = tr.value(q.j, q.i).unwrap();
        assert!(q.value.add(back).contains_zero());
    }
    assert!(compute_t(&rs, &Integer::from(1), &Integer::from(0), 0).is_err());
}

/// Corpus forms reduced to monic at their first nontrivial solution.
fn monic_corpus() -> Vec<thuekit::BinaryForm> {
    standard_corpus()
        .into_iter()
        .filter_map(|(_, f)| {
            let s = solve_in_box(&f, &SearchBox::new(50).unwrap()).unwrap();
            let s = s.first()?;
            Some(monic_reduce(&f, &s.x, &s.y).unwrap().form)
        })
        .collect()
}

#[test]
fn layers_partition_and_set_a_order() {
    for g in monic_corpus() {
        let rs = find_roots(&g, &cfg(256)).unwrap();
        let ctx = Context::new(&g, &rs).unwrap();
        let sols = solve_in_box(&g, &SearchBox::new(2000).unwrap()).unwrap();
        let rel = assign_related_roots(&sols, &rs).unwrap();
        let (tagged, counts) = classify_layers(&rel, &rs, &ctx.mahler).unwrap();
        assert_eq!(counts.trivial + counts.small + counts.medium + counts.large, sols.len());
        let per: usize = counts.per_root.iter().map(|c| c.small + c.medium + c.large).sum();
        assert_eq!(per, sols.len() - counts.trivial);
        assert!(tagged.iter().any(|t| t.layer == LayerTag::TrivialPair));
        let phis: Vec<PhiVector> = sols.iter().map(|s| phi(&ctx, &s.x, &s.y).unwrap()).collect();
        let a = build_set_a(&phis, rs.r(), rs.s());
        assert!(a.members.len() <= a.target);
        assert!(a.members.len() == a.target.min(phis.len()));
        let v = check_set_a_order(&phis, &a);
        assert!(v.pass || v.outcome == Outcome::Skipped, "{g}: {v}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_invariants(idx in 0usize..20) {
        let forms = monic_corpus();
        let g = &forms[idx % forms.len()];
        let rs = find_roots(g, &cfg(256)).unwrap();
        let rs2 = find_roots(g, &cfg(512)).unwrap();
        let ctx = Context::new(g, &rs).unwrap();
        let ctx2 = Context::new(g, &rs2).unwrap();
        for s in solve_in_box(g, &SearchBox::new(500).unwrap()).unwrap() {
            let v = phi(&ctx, &s.x, &s.y).unwrap();
            let w = phi(&ctx2, &s.x, &s.y).unwrap();
            prop_assert!(v.sum().abs().hi().to_f64() < 2f64.powi(-100));
            for m in 0..g.degree() {
                prop_assert!(v.components[m].overlaps(&v.components[rs.conjugate(m)]));
                prop_assert!(close(&v.components[m], &w.components[m], 256));
            }
        }
    }

    #[test]
    fn tmt_holds_near_a_root(seed in any::<u64>(), eps_exp in 4u32..40) {
        use rand::Rng;
        let mut r = rng(seed);
        let f = form("1 0 -4 1 1");
        let rs = find_roots(&f, &cfg(256)).unwrap();
        let k = r.gen_range(0..4);
        let p = rs.prec();
        let eps = Interval::from_f64(r.gen_range(-1.0..1.0), p).div(&Interval::from_i64(2, p).powi(eps_exp));
        let t = rs.root(k).add(&CInterval::from_real(eps));
        for i in (0..4).filter(|&i| i != k) {
            let v = tmt_check(&rs, &t, k, i);
            prop_assert!(v.pass, "{}", v);
        }
    }
}
