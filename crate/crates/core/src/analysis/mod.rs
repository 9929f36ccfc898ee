//! Per-solution checks of the inequalities used to count solutions: the
//! phi map, solution layers, the set A, and the large-solution machinery.

mod geometry;
mod layers;
mod phi;
mod sets;
mod small;
mod summary;

pub use geometry::{
    check_distance_to_line, check_exponential_gap, check_tu, compute_t, cross_ratio_height,
    check_cross_ratio_height, distance_to_line, e_n, geometry_vectors, line_base, point_line_distance,
    related_last, tmt_check, triangle_area_base_height, triangle_area_heron, ExgOutcome, GeometryVectors,
    line_direction, TQuantity, TReport,
};
pub use layers::{classify_layers, layer_of, LayerCounts, LayerTag, LayerThresholds, RootLayerCount, TaggedSolution};
pub use phi::{phi, phi_sum_zero, PhiVector};
pub use sets::{build_set_a, check_dr_bound, check_phi_norm_bounds, check_set_a_order, dr_bound, SetA};
pub use small::{
    check_grp_bound, check_lewis_mahler, check_medium_gaps, check_small_count_bound, gap_threshold,
    grp_bound, lewis_mahler_rhs, refined_gap_threshold,
};
pub use summary::{final_verdict, FinalBounds, FormSummary};

use rug::Integer;

use crate::error::{Error, Result};
use crate::forms::{discriminant, BinaryForm};
use crate::heights::mahler_measure;
use crate::interval::Interval;
use crate::matveev::{d0, exceeds_d0};
use crate::roots::RootSystem;

/// A form together with its certified roots and the quantities every check
/// needs.
#[derive(Clone, Debug)]
pub struct Context<'a> {
    pub form: &'a BinaryForm,
    pub rs: &'a RootSystem,
    pub disc: Integer,
    pub abs_d: Integer,
    pub mahler: Interval,
    /// `|D| > D0(n)`, the standing hypothesis of most counting lemmas.
    pub large_d: bool,
}

impl<'a> Context<'a> {
    pub fn new(form: &'a BinaryForm, rs: &'a RootSystem) -> Result<Self> {
        let n = form.degree();
        if n < 3 {
            return Err(Error::DegreeTooLow(n));
        }
        let disc = discriminant(form)?;
        if disc == 0 {
            return Err(Error::ZeroDiscriminant);
        }
        let abs_d = disc.clone().abs();
        Ok(Context {
            form,
            rs,
            large_d: exceeds_d0(&abs_d, n),
            mahler: mahler_measure(form, rs),
            disc,
            abs_d,
        })
    }

    pub fn n(&self) -> usize {
        self.form.degree()
    }

    pub fn prec(&self) -> u32 {
        self.rs.prec()
    }

    pub fn d0(&self) -> Integer {
        d0(self.n())
    }

    pub fn ln_abs_d(&self) -> Interval {
        Interval::from_int(&self.abs_d, self.prec()).ln()
    }

    pub fn ln_mahler(&self) -> Interval {
        self.mahler.ln()
    }

    pub(crate) fn hypothesis_note(&self) -> String {
        format!("|D| = {} does not exceed D0({}) = {}", self.abs_d, self.n(), self.d0())
    }
}
