//! Exact convex hulls of small point sets in dimension at most three.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::Zero;

use crate::linalg::{self, Inequality, Q};

/// Vertices and a defining inequality system of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    /// Counterclockwise from the lexicographically least vertex when the
    /// points span a plane inside two coordinates, otherwise sorted.
    pub vertices: Vec<Vec<Q>>,
    /// `a . x >= b` rows cutting out the hull, equalities as two rows.
    pub inequalities: Vec<Inequality>,
    pub dimension: usize,
}

impl Hull {
    pub fn contains(&self, x: &[Q]) -> bool {
        !self.vertices.is_empty() && self.inequalities.iter().all(|i| i.holds_at(x))
    }
}

type P = Vec<i128>;

fn cross2(o: &P, a: &P, b: &P) -> i128 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain on sorted, distinct points; returns indices.
fn chain2(pts: &[P]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 {
            order.clone()
        } else {
            order.iter().rev().copied().collect()
        };
        for &i in &seq {
            while hull.len() >= start + 2
                && cross2(
                    &pts[hull[hull.len() - 2]],
                    &pts[hull[hull.len() - 1]],
                    &pts[i],
                ) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

fn sub(a: &P, b: &P) -> P {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross3(a: &P, b: &P) -> P {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &P, b: &P) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Points that are extreme on every axis-parallel line through them.
fn axis_extremes(pts: &[P]) -> Vec<usize> {
    let d = pts[0].len();
    let mut keep = vec![true; pts.len()];
    for axis in 0..d {
        let mut lines: BTreeMap<Vec<i128>, (usize, usize)> = BTreeMap::new();
        for (i, p) in pts.iter().enumerate() {
            let key: Vec<i128> = p
                .iter()
                .enumerate()
                .filter(|&(c, _)| c != axis)
                .map(|(_, &v)| v)
                .collect();
            let e = lines.entry(key).or_insert((i, i));
            if p[axis] < pts[e.0][axis] {
                e.0 = i;
            }
            if p[axis] > pts[e.1][axis] {
                e.1 = i;
            }
        }
        let ends: BTreeSet<usize> = lines.values().flat_map(|&(a, b)| [a, b]).collect();
        for (i, k) in keep.iter_mut().enumerate() {
            *k &= ends.contains(&i);
        }
    }
    (0..pts.len()).filter(|&i| keep[i]).collect()
}

/// Facet planes `n . x >= c` and vertex indices of a full-dimensional 3D set.
fn facets3(pts: &[P]) -> (Vec<(P, i128)>, Vec<usize>) {
    let cand = axis_extremes(pts);
    let mut planes: BTreeSet<(P, i128)> = BTreeSet::new();
    for (x, &a) in cand.iter().enumerate() {
        for (y, &b) in cand.iter().enumerate().skip(x + 1) {
            for &c in &cand[y + 1..] {
                let mut n = cross3(&sub(&pts[b], &pts[a]), &sub(&pts[c], &pts[a]));
                if n.iter().all(|&v| v == 0) {
                    continue;
                }
                let g = n.iter().fold(0i128, |g, &v| g.gcd(&v));
                for v in n.iter_mut() {
                    *v /= g;
                }
                let off = dot(&n, &pts[a]);
                let (mut above, mut below) = (false, false);
                for &i in &cand {
                    let s = dot(&n, &pts[i]) - off;
                    above |= s > 0;
                    below |= s < 0;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if below {
                    planes.insert((n.iter().map(|v| -v).collect(), -off));
                } else {
                    planes.insert((n, off));
                }
            }
        }
    }
    let planes: Vec<(P, i128)> = planes.into_iter().collect();
    let vertices = cand
        .into_iter()
        .filter(|&i| {
            let normals: Vec<Vec<Q>> = planes
                .iter()
                .filter(|(n, c)| dot(n, &pts[i]) == *c)
                .map(|(n, _)| n.iter().map(|&v| Q::from_integer(v as i64)).collect())
                .collect();
            linalg::rank(&normals) == 3
        })
        .collect();
    (planes, vertices)
}

fn to_q(v: i128, scale: i64) -> Q {
    Q::new(i64::try_from(v).expect("hull coordinate overflow"), scale)
}

/// Convex hull of rational points of a common dimension at most three.
pub fn convex_hull(points: &[Vec<Q>]) -> Hull {
    let mut pts: Vec<Vec<Q>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let Some(first) = pts.first().cloned() else {
        return Hull {
            vertices: Vec::new(),
            inequalities: Vec::new(),
            dimension: 0,
        };
    };
    let d = first.len();
    assert!(d <= 3, "hulls are implemented up to dimension three");
    let scale = pts.iter().flatten().fold(1i64, |l, v| l.lcm(v.denom()));
    let ints: Vec<P> = pts
        .iter()
        .map(|p| {
            p.iter()
                .map(|v| i128::from((v * scale).to_integer()))
                .collect()
        })
        .collect();

    let diffs: Vec<Vec<Q>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&first).map(|(a, b)| a - b).collect())
        .collect();
    let dim = linalg::rank(&diffs);
    let mut inequalities = Vec::new();
    for v in linalg::nullspace(&diffs, d) {
        let c: Q = v.iter().zip(&first).map(|(a, b)| a * b).sum();
        inequalities.push(Inequality::new(v.clone(), c));
        inequalities.push(Inequality::new(v.iter().map(|x| -x).collect(), -c));
    }
    if dim == 0 {
        return Hull {
            vertices: vec![first],
            inequalities,
            dimension: 0,
        };
    }
    // Coordinates on which the projection keeps the affine dimension.
    let coords: Vec<usize> = subsets(d, dim)
        .into_iter()
        .find(|s| {
            let proj: Vec<Vec<Q>> = diffs
                .iter()
                .map(|r| s.iter().map(|&c| r[c]).collect())
                .collect();
            linalg::rank(&proj) == dim
        })
        .expect("some coordinate projection is injective");
    let proj: Vec<P> = ints
        .iter()
        .map(|p| coords.iter().map(|&c| p[c]).collect())
        .collect();
    let lift = |n: &[i128]| -> Vec<Q> {
        let mut full = vec![Q::zero(); d];
        for (k, &c) in coords.iter().enumerate() {
            full[c] = Q::from_integer(n[k] as i64);
        }
        full
    };
    let vertex_idx: Vec<usize> = match dim {
        1 => {
            let lo = (0..proj.len())
                .min_by(|&a, &b| proj[a].cmp(&proj[b]))
                .expect("nonempty");
            let hi = (0..proj.len())
                .max_by(|&a, &b| proj[a].cmp(&proj[b]))
                .expect("nonempty");
            inequalities.push(Inequality::new(lift(&[1]), to_q(proj[lo][0], scale)));
            inequalities.push(Inequality::new(lift(&[-1]), -to_q(proj[hi][0], scale)));
            vec![lo, hi]
        }
        2 => {
            let h = chain2(&proj);
            for k in 0..h.len() {
                let (a, b) = (&proj[h[k]], &proj[h[(k + 1) % h.len()]]);
                // Interior lies to the left of each counterclockwise edge.
                let n = [-(b[1] - a[1]), b[0] - a[0]];
                let c = n[0] * a[0] + n[1] * a[1];
                inequalities.push(Inequality::new(lift(&n), to_q(c, scale)));
            }
            h
        }
        _ => {
            let (planes, v) = facets3(&proj);
            for (n, c) in planes {
                inequalities.push(Inequality::new(lift(&n), to_q(c, scale)));
            }
            let mut v = v;
            v.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
            v
        }
    };
    let mut vertices: Vec<Vec<Q>> = vertex_idx.into_iter().map(|i| pts[i].clone()).collect();
    if dim == 2 {
        let start = (0..vertices.len())
            .min_by(|&a, &b| vertices[a].cmp(&vertices[b]))
            .unwrap_or(0);
        vertices.rotate_left(start);
    }
    Hull {
        vertices,
        inequalities,
        dimension: dim,
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Whether `x` is a vertex of the hull.
pub fn is_vertex(hull: &Hull, x: &[Q]) -> bool {
    hull.vertices.iter().any(|v| v.as_slice() == x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter()
            .map(|p| p.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn square_with_interior_points() {
        let h = convex_hull(&pts(&[
            &[0, 0],
            &[2, 0],
            &[1, 1],
            &[2, 2],
            &[0, 2],
            &[1, 0],
            &[0, 1],
        ]));
        assert_eq!(h.vertices, pts(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2]]));
        assert_eq!(h.dimension, 2);
        assert!(h.contains(&[q(1), q(1)]));
        assert!(!h.contains(&[q(3), q(1)]));
    }

    #[test]
    fn degenerate_sets() {
        let h = convex_hull(&pts(&[&[1, 1], &[1, 1]]));
        assert_eq!((h.vertices.len(), h.dimension), (1, 0));
        let h = convex_hull(&pts(&[&[0, 0], &[1, 1], &[3, 3], &[2, 2]]));
        assert_eq!(h.vertices, pts(&[&[0, 0], &[3, 3]]));
        assert!(h.contains(&[q(2), q(2)]));
        assert!(!h.contains(&[q(2), q(1)]));
        let h = convex_hull(&pts(&[&[0, 0, 1], &[2, 0, 1], &[0, 2, 1], &[1, 1, 1]]));
        assert_eq!(h.dimension, 2);
        assert_eq!(h.vertices.len(), 3);
        assert!(!h.contains(&[q(0), q(0), q(0)]));
    }

    #[test]
    fn cube_3d() {
        let mut v = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    v.push(vec![q(x), q(y), q(z)]);
                }
            }
        }
        let h = convex_hull(&v);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.vertices.len(), 8);
        assert!(v.iter().all(|p| h.contains(p)));
        assert!(!h.contains(&[q(3), q(0), q(0)]));
        let oct = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
            &[0, 0, 0],
        ]);
        assert_eq!(convex_hull(&oct).vertices.len(), 6);
    }

    #[test]
    fn rational_points() {
        let h = convex_hull(&[
            vec![Q::new(1, 2), q(0)],
            vec![q(2), q(0)],
            vec![q(0), Q::new(3, 2)],
        ]);
        assert_eq!(h.vertices[0], vec![q(0), Q::new(3, 2)]);
        assert!(h.contains(&[Q::new(1, 2), Q::new(1, 2)]));
    }
}
