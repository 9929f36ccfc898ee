//! Every example runs to completion.

#[allow(dead_code)]
mod brute_force_oracle {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/brute_force_oracle.rs"));
}

#[allow(dead_code)]
mod certified_roots {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/certified_roots.rs"));
}

#[allow(dead_code)]
mod corpus {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/corpus.rs"));
}

#[allow(dead_code)]
mod factorization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/factorization.rs"));
}

#[allow(dead_code)]
mod full_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/full_report.rs"));
}

#[allow(dead_code)]
mod geometry {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/geometry.rs"));
}

#[allow(dead_code)]
mod gl2_action {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gl2_action.rs"));
}

#[allow(dead_code)]
mod heights {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/heights.rs"));
}

#[allow(dead_code)]
mod layers {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/layers.rs"));
}

#[allow(dead_code)]
mod matveev {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matveev.rs"));
}

#[allow(dead_code)]
mod min_poly {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/min_poly.rs"));
}

#[allow(dead_code)]
mod monic_reduction {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monic_reduction.rs"));
}

#[allow(dead_code)]
mod phi_map {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/phi_map.rs"));
}

#[allow(dead_code)]
mod solve_family {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve_family.rs"));
}

#[test]
fn all_examples_run() {
    brute_force_oracle::run_example().unwrap();
    certified_roots::run_example().unwrap();
    corpus::run_example().unwrap();
    factorization::run_example().unwrap();
    full_report::run_example().unwrap();
    geometry::run_example().unwrap();
    gl2_action::run_example().unwrap();
    heights::run_example().unwrap();
    layers::run_example().unwrap();
    matveev::run_example().unwrap();
    min_poly::run_example().unwrap();
    monic_reduction::run_example().unwrap();
    phi_map::run_example().unwrap();
    solve_family::run_example().unwrap();
}
