//! Slices of the Littlewood-Richardson cone, vertex checks for cohomological
//! components, and cones attached to admissible triples.

pub mod cone;
pub mod hull;
pub mod svg;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::prv;
use crate::repthy;
use crate::rootsys::{RootSystem, Weight};

pub use cone::{cone_dimension, TripleCone};
pub use hull::{convex_hull, Hull};

pub const DEFAULT_K_MAX: usize = 2;

/// A rational point in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoint(pub Vec<Q>);

impl QPoint {
    pub fn to_f64(&self, i: usize) -> f64 {
        let v = self.0[i];
        *v.numer() as f64 / *v.denom() as f64
    }

    /// The integral weight, when every coordinate is an integer.
    pub fn to_weight(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl From<&Weight> for QPoint {
    fn from(w: &Weight) -> Self {
        QPoint(w.0.iter().map(|&v| q(v)).collect())
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for QPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|v| v.to_string()))
    }
}

/// The slice `LR(lambda', mu')` approximated from scaled supports.
#[derive(Clone, Debug, Serialize)]
pub struct SlicePolytope {
    pub root_system: String,
    pub rank: usize,
    pub lambda: Weight,
    pub mu: Weight,
    /// Scales `k = 1..=k_max` were merged before taking the hull.
    pub k_max: usize,
    /// Highest weights with nonzero multiplicity at `k = 1`.
    pub support: Vec<Weight>,
    /// Supports at `k = 2..=k_max`, divided by `k`.
    pub scaled_support: Vec<QPoint>,
    pub hull_vertices: Vec<QPoint>,
    #[serde(skip)]
    pub hull: Hull,
}

impl SlicePolytope {
    pub fn is_vertex(&self, w: &Weight) -> bool {
        self.hull_vertices.contains(&QPoint::from(w))
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        self.hull.contains(&p.0)
    }
}

pub fn lr_slice(rs: &RootSystem, lam: &Weight, mu: &Weight, k_max: usize) -> Result<SlicePolytope> {
    if rs.rank() > 3 {
        return Err(Error::RankTooLarge(rs.rank()));
    }
    let k_max = k_max.max(1);
    let decomps: Vec<repthy::Decomposition> = (1..=k_max as i64)
        .into_par_iter()
        .map(|k| repthy::tensor_decompose(rs, &lam.scaled(k), &mu.scaled(k)))
        .collect::<Result<_>>()?;
    let support: Vec<Weight> = decomps[0]
        .sorted_entries(rs)
        .into_iter()
        .map(|(w, _)| w)
        .collect();
    let mut scaled: BTreeSet<QPoint> = BTreeSet::new();
    for (d, k) in decomps.iter().zip(1i64..).skip(1) {
        for w in d.entries.keys() {
            scaled.insert(QPoint(w.0.iter().map(|&v| Q::new(v, k)).collect()));
        }
    }
    let points: Vec<Vec<Q>> = support
        .iter()
        .map(|w| QPoint::from(w).0)
        .chain(scaled.iter().map(|p| p.0.clone()))
        .collect();
    let hull = convex_hull(&points);
    Ok(SlicePolytope {
        root_system: rs.label(),
        rank: rs.rank(),
        lambda: lam.clone(),
        mu: mu.clone(),
        k_max,
        support,
        scaled_support: scaled.into_iter().collect(),
        hull_vertices: hull.vertices.iter().cloned().map(QPoint).collect(),
        hull,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub vertex: QPoint,
    pub cohomological: bool,
    pub generalized_prv: bool,
}

/// Vertex data for cohomological components and the converse direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim6Report {
    pub root_system: String,
    pub lambda: Weight,
    pub mu: Weight,
    pub k_max: usize,
    /// Each cohomological component with its vertex flag.
    pub cohomological: Vec<(Weight, bool)>,
    pub all_cohomological_are_vertices: bool,
    pub vertices: Vec<VertexRow>,
    /// Vertices that are generalized PRV components but not cohomological.
    pub generalized_prv_vertices_not_cohomological: Vec<QPoint>,
    /// Generalized PRV components that are not vertices.
    pub generalized_prv_non_vertices: Vec<Weight>,
    pub generalized_prv_inside_hull: bool,
}

pub fn claim6_report(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    k_max: usize,
) -> Result<Claim6Report> {
    let slice = lr_slice(rs, lam, mu, k_max)?;
    let coh = prv::distinct_components(&prv::cohomological_components(rs, lam, mu)?);
    let gen = prv::generalized_prv_values(rs, lam, mu)?;
    let cohomological: Vec<(Weight, bool)> = coh
        .iter()
        .map(|w| (w.clone(), slice.is_vertex(w)))
        .collect();
    let vertices: Vec<VertexRow> = slice
        .hull_vertices
        .iter()
        .map(|v| {
            let w = v.to_weight();
            VertexRow {
                vertex: v.clone(),
                cohomological: w.as_ref().is_some_and(|w| coh.contains(w)),
                generalized_prv: w.as_ref().is_some_and(|w| gen.contains(w)),
            }
        })
        .collect();
    Ok(Claim6Report {
        root_system: rs.label(),
        lambda: lam.clone(),
        mu: mu.clone(),
        k_max: slice.k_max,
        all_cohomological_are_vertices: cohomological.iter().all(|x| x.1),
        generalized_prv_vertices_not_cohomological: vertices
            .iter()
            .filter(|r| r.generalized_prv && !r.cohomological)
            .map(|r| r.vertex.clone())
            .collect(),
        generalized_prv_non_vertices: gen
            .iter()
            .filter(|w| !slice.is_vertex(w))
            .cloned()
            .collect(),
        generalized_prv_inside_hull: gen.iter().all(|w| slice.contains(&QPoint::from(w))),
        cohomological,
        vertices,
    })
}

/// Counts of vertices and cohomological components for one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Question8Row {
    pub lambda: Weight,
    pub mu: Weight,
    pub vertices: usize,
    pub cohomological_distinct: usize,
    pub cohomological_by_w: usize,
    pub witness_triples: usize,
    pub vertices_cohomological: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Question8Report {
    pub root_system: String,
    pub k_max: usize,
    pub weyl_order: usize,
    pub lower_bound: usize,
    pub rows: Vec<Question8Row>,
}

/// Unordered pairs of dominant weights with entries in `[0, max_entry]`.
pub fn grid_pairs(rank: usize, max_entry: i64) -> Vec<(Weight, Weight)> {
    let side = (max_entry + 1) as usize;
    let pts: Vec<Weight> = (0..side.pow(rank as u32))
        .map(|mut c| {
            Weight(
                (0..rank)
                    .map(|_| {
                        let v = (c % side) as i64;
                        c /= side;
                        v
                    })
                    .collect(),
            )
        })
        .collect();
    let mut out = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

pub fn question8_grid(
    rs: &RootSystem,
    pairs: &[(Weight, Weight)],
    k_max: usize,
) -> Result<Question8Report> {
    let rows = pairs
        .par_iter()
        .map(|(lam, mu)| {
            let slice = lr_slice(rs, lam, mu, k_max)?;
            let ws = prv::cohomological_components(rs, lam, mu)?;
            let counts = prv::count_cohomological(rs, lam, mu)?;
            let coh = prv::distinct_components(&ws);
            Ok(Question8Row {
                lambda: lam.clone(),
                mu: mu.clone(),
                vertices: slice.hull_vertices.len(),
                cohomological_distinct: counts.distinct,
                cohomological_by_w: counts.by_w_triple,
                witness_triples: counts.witness_triples,
                vertices_cohomological: coh.iter().filter(|w| slice.is_vertex(w)).count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Question8Report {
        root_system: rs.label(),
        k_max: k_max.max(1),
        weyl_order: rs.weyl().order(),
        lower_bound: 1 << rs.rank(),
        rows,
    })
}

/// SVG of the slice with the component markers.
pub fn figure_svg(rs: &RootSystem, lam: &Weight, mu: &Weight, k_max: usize) -> Result<String> {
    if rs.rank() != 2 {
        return Err(Error::NotRankTwo(rs.rank()));
    }
    let slice = lr_slice(rs, lam, mu, k_max)?;
    let coh = prv::distinct_components(&prv::cohomological_components(rs, lam, mu)?);
    let gen = prv::generalized_prv_values(rs, lam, mu)?;
    svg::slice_svg(rs, &slice, &coh, &gen)
}

#[cfg(test)]
mod tests;
