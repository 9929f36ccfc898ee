use std::collections::BTreeMap;

use rug::{Float, Integer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::roots::RootSystem;
use crate::solver::RelatedSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LayerTag {
    /// `0 < y <= M^2`
    Small,
    /// `M^2 < y < M^(1 + (n-1)^2)`
    Medium,
    /// `y >= M^(1 + (n-1)^2)`
    Large,
    /// `y = 0`
    TrivialPair,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerThresholds {
    pub small_max: Interval,
    pub large_min: Interval,
}

impl LayerThresholds {
    pub fn new(mahler: &Interval, n: usize) -> Self {
        LayerThresholds {
            small_max: mahler.sqr(),
            large_min: mahler.powi((1 + (n - 1) * (n - 1)) as u32),
        }
    }
}

/// `Less` if `y` is below `t`, `Greater` above, `Equal` when `t` is within the
/// precision tolerance of `y`.
fn cmp_threshold(y: &Integer, t: &Interval) -> Result<std::cmp::Ordering> {
    use std::cmp::Ordering::*;
    if !t.is_finite() {
        return Err(Error::AmbiguousBoundary(y.to_string()));
    }
    if *t.hi() < *y {
        return Ok(Greater);
    }
    if *t.lo() > *y {
        return Ok(Less);
    }
    let p = t.prec();
    let tol = Float::with_val(p, y) >> (p / 2);
    if t.width() <= tol {
        Ok(Equal)
    } else {
        Err(Error::AmbiguousBoundary(y.to_string()))
    }
}

pub fn layer_of(y: &Integer, th: &LayerThresholds) -> Result<LayerTag> {
    use std::cmp::Ordering::*;
    if *y == 0 {
        return Ok(LayerTag::TrivialPair);
    }
    if cmp_threshold(y, &th.small_max)? != Greater {
        return Ok(LayerTag::Small);
    }
    Ok(match cmp_threshold(y, &th.large_min)? {
        Less => LayerTag::Medium,
        _ => LayerTag::Large,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TaggedSolution {
    #[serde(flatten)]
    pub related: RelatedSolution,
    pub layer: LayerTag,
    /// Smaller index of the related root and its conjugate.
    pub root_class: usize,
}

impl TaggedSolution {
    pub fn x(&self) -> &Integer {
        &self.related.solution.x
    }

    pub fn y(&self) -> &Integer {
        &self.related.solution.y
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RootLayerCount {
    pub root: usize,
    pub real: bool,
    pub small: usize,
    pub medium: usize,
    pub large: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LayerCounts {
    pub trivial: usize,
    pub small: usize,
    pub medium: usize,
    pub large: usize,
    pub per_root: Vec<RootLayerCount>,
}

pub fn classify_layers(
    solutions: &[RelatedSolution],
    rs: &RootSystem,
    mahler: &Interval,
) -> Result<(Vec<TaggedSolution>, LayerCounts)> {
    let th = LayerThresholds::new(mahler, rs.degree());
    let mut per: BTreeMap<usize, RootLayerCount> = BTreeMap::new();
    for i in 0..rs.degree() {
        let c = i.min(rs.conjugate(i));
        per.entry(c).or_insert(RootLayerCount {
            root: c,
            real: rs.is_real(c),
            ..Default::default()
        });
    }
    let mut counts = LayerCounts::default();
    let mut out = Vec::with_capacity(solutions.len());
    for s in solutions {
        let layer = layer_of(&s.solution.y, &th)?;
        let class = s.related_root.min(rs.conjugate(s.related_root));
        let e = per.get_mut(&class).expect("every root has a class");
        match layer {
            LayerTag::TrivialPair => counts.trivial += 1,
            LayerTag::Small => {
                counts.small += 1;
                e.small += 1;
            }
            LayerTag::Medium => {
                counts.medium += 1;
                e.medium += 1;
            }
            LayerTag::Large => {
                counts.large += 1;
                e.large += 1;
            }
        }
        out.push(TaggedSolution {
            related: s.clone(),
            layer,
            root_class: class,
        });
    }
    counts.per_root = per.into_values().collect();
    Ok((out, counts))
}
