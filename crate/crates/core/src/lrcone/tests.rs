use super::*;
use crate::rootsys::{ActionMode, RootType};
use crate::weylcomb::{self, Triple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn qp(v: &[i64]) -> QPoint {
    QPoint::from(&w(v))
}

fn same_cycle(got: &[QPoint], want: &[&[i64]]) -> bool {
    let want: Vec<QPoint> = want.iter().map(|v| qp(v)).collect();
    got.len() == want.len()
        && (0..got.len()).any(|r| got.iter().cycle().skip(r).take(got.len()).eq(want.iter()))
}

#[test]
fn figure_one_hulls() {
    let a2 = RootSystem::new(RootType::A, 2).unwrap();
    let b2 = RootSystem::new(RootType::B, 2).unwrap();
    let left = lr_slice(&a2, &w(&[3, 5]), &w(&[1, 2]), DEFAULT_K_MAX).unwrap();
    assert!(same_cycle(
        &left.hull_vertices,
        &[&[1, 4], &[5, 2], &[6, 3], &[4, 7], &[2, 8], &[0, 6]]
    ));
    assert_eq!(left.hull_vertices[0], qp(&[0, 6]));
    let mid = lr_slice(&b2, b2.rho(), b2.rho(), DEFAULT_K_MAX).unwrap();
    assert_eq!(
        mid.hull_vertices,
        vec![qp(&[0, 0]), qp(&[3, 0]), qp(&[2, 2]), qp(&[0, 4])]
    );
    let right = lr_slice(&a2, &w(&[7, 2]), &w(&[1, 3]), DEFAULT_K_MAX).unwrap();
    assert!(same_cycle(
        &right.hull_vertices,
        &[
            &[4, 1],
            &[6, 0],
            &[9, 0],
            &[10, 1],
            &[8, 5],
            &[6, 6],
            &[3, 3]
        ]
    ));
    for s in [&left, &mid, &right] {
        let k1 = lr_slice(
            if s.root_system == "B2" { &b2 } else { &a2 },
            &s.lambda,
            &s.mu,
            1,
        )
        .unwrap();
        assert_eq!(k1.hull_vertices, s.hull_vertices);
        assert!(s.support.iter().all(|p| s.contains(&QPoint::from(p))));
        assert!(s.scaled_support.iter().all(|p| s.contains(p)));
    }
}

#[test]
fn claim6_figure_pairs() {
    let a2 = RootSystem::new(RootType::A, 2).unwrap();
    let r = claim6_report(&a2, &w(&[7, 2]), &w(&[1, 3]), 2).unwrap();
    assert!(r.all_cohomological_are_vertices);
    assert_eq!(r.cohomological.len(), 5);
    for v in [qp(&[6, 0]), qp(&[9, 0])] {
        let row = r.vertices.iter().find(|x| x.vertex == v).unwrap();
        assert!(!row.cohomological && !row.generalized_prv);
    }
    assert!(r.generalized_prv_vertices_not_cohomological.is_empty());
    assert_eq!(r.generalized_prv_non_vertices, vec![w(&[8, 2])]);
    assert!(r.generalized_prv_inside_hull);

    let b2 = RootSystem::new(RootType::B, 2).unwrap();
    let r = claim6_report(&b2, b2.rho(), b2.rho(), 2).unwrap();
    assert!(r.vertices.iter().all(|x| x.cohomological));

    let r = claim6_report(&a2, &w(&[3, 5]), &w(&[1, 2]), 2).unwrap();
    assert_eq!(r.cohomological.len(), 6);
    assert!(r
        .vertices
        .iter()
        .all(|x| x.cohomological && x.generalized_prv));
}

#[test]
fn claim6_random_rank_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let systems: Vec<RootSystem> = [RootType::A, RootType::B, RootType::C, RootType::G]
        .iter()
        .map(|&t| RootSystem::new(t, 2).unwrap())
        .collect();
    for i in 0..50 {
        let rs = &systems[i % systems.len()];
        let lam = w(&[rng.gen_range(0..=8), rng.gen_range(0..=8)]);
        let mu = w(&[rng.gen_range(0..=8), rng.gen_range(0..=8)]);
        let r = claim6_report(rs, &lam, &mu, 1).unwrap();
        assert!(
            r.all_cohomological_are_vertices,
            "{} {lam} {mu}",
            rs.label()
        );
        assert!(r.generalized_prv_inside_hull);
    }
}

#[test]
fn rank_three_slice() {
    let rs = RootSystem::new(RootType::A, 3).unwrap();
    let s = lr_slice(&rs, &w(&[1, 1, 1]), &w(&[1, 0, 1]), 1).unwrap();
    assert!(s.support.iter().all(|p| s.contains(&QPoint::from(p))));
    let coh = prv::distinct_components(
        &prv::cohomological_components(&rs, &w(&[1, 1, 1]), &w(&[1, 0, 1])).unwrap(),
    );
    assert!(coh.iter().all(|c| s.is_vertex(c)));
    let rs4 = RootSystem::new(RootType::A, 4).unwrap();
    assert!(matches!(
        lr_slice(&rs4, &w(&[1, 0, 0, 0]), &w(&[1, 0, 0, 0]), 1),
        Err(Error::RankTooLarge(4))
    ));
}

#[test]
fn hull_invariant_under_affine_maps() {
    let rs = RootSystem::new(RootType::A, 2).unwrap();
    let s = lr_slice(&rs, &w(&[7, 2]), &w(&[1, 3]), 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        let (a, b, c, d) = loop {
            let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
            if m[0] * m[3] - m[1] * m[2] != 0 {
                break (
                    Q::new(m[0], 2),
                    Q::new(m[1], 3),
                    Q::new(m[2], 5),
                    Q::new(m[3], 1),
                );
            }
        };
        let shift = (Q::new(rng.gen_range(-9..=9), 7), q(rng.gen_range(-5..=5)));
        let map = |p: &[Q]| vec![a * p[0] + b * p[1] + shift.0, c * p[0] + d * p[1] + shift.1];
        let moved: Vec<Vec<Q>> = s.support.iter().map(|p| map(&QPoint::from(p).0)).collect();
        let got: BTreeSet<Vec<Q>> = convex_hull(&moved).vertices.into_iter().collect();
        let want: BTreeSet<Vec<Q>> = s.hull_vertices.iter().map(|v| map(&v.0)).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn cone_examples() {
    let a1 = RootSystem::new(RootType::A, 1).unwrap();
    let g = a1.weyl();
    let s = g.simple_reflection(0);
    let c = cone_dimension(&a1, &Triple::new(s, g.identity(), s)).unwrap();
    assert_eq!(c.dim, 2);
    assert_eq!(c.inequality_matrix, vec![vec![1, -1]]);
    assert!(c.contains(&w(&[3]), &w(&[1])));
    assert!(!c.contains(&w(&[1]), &w(&[3])));
    assert!(c.has_strictly_dominant_point());

    for (t, n) in [(RootType::A, 2), (RootType::B, 3), (RootType::G, 2)] {
        let rs = RootSystem::new(t, n).unwrap();
        let g = rs.weyl();
        let e = g.identity();
        let c = cone_dimension(&rs, &Triple::new(e, e, e)).unwrap();
        assert_eq!(c.dim, 2 * n);
        assert!(c.implicit_equalities.is_empty());
    }
    let a2 = RootSystem::new(RootType::A, 2).unwrap();
    let g = a2.weyl();
    let bad = Triple::new(g.longest(), g.longest(), g.longest());
    assert_eq!(cone_dimension(&a2, &bad), Err(Error::InadmissibleTriple));
}

#[test]
fn cone_points_give_surjections() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (t, n) in [
        (RootType::A, 2),
        (RootType::B, 2),
        (RootType::G, 2),
        (RootType::A, 3),
    ] {
        let rs = RootSystem::new(t, n).unwrap();
        let g = rs.weyl();
        let mut exercised = 0;
        for tr in weylcomb::admissible_triples(&rs) {
            let c = cone_dimension(&rs, tr).unwrap();
            assert!(c.contains(&Weight::zero(n), &Weight::zero(n)));
            assert!(c.dim <= 2 * n);
            let mut found = 0;
            for _ in 0..40 {
                let lam = Weight((0..n).map(|_| rng.gen_range(0..=6)).collect());
                let mu = Weight((0..n).map(|_| rng.gen_range(0..=6)).collect());
                if !c.contains(&lam, &mu) {
                    continue;
                }
                found += 1;
                let l = rs.act(g.inverse(tr.w1), &lam, ActionMode::Affine).unwrap();
                let m = rs.act(g.inverse(tr.w2), &mu, ActionMode::Affine).unwrap();
                let v = prv::theorem1_check(&rs, &l, &m).unwrap();
                assert!(v.surjective);
                assert_eq!(v.triple, Some(*tr));
                assert_eq!(v.nu_prime, Some(c.nu_of(&lam, &mu)));
            }
            exercised += found;
        }
        assert!(exercised > 0, "{}", rs.label());
    }
}

#[test]
fn prv_triple_cones_a2() {
    let rs = RootSystem::new(RootType::A, 2).unwrap();
    let g = rs.weyl();
    for sigma in g.elements() {
        let si = g.inverse(sigma);
        let t = Triple::new(g.mul(g.longest(), si), si, g.longest());
        if !t.is_admissible(g) {
            continue;
        }
        let c = cone_dimension(&rs, &t).unwrap();
        assert!(c.dim >= 2, "{:?}", g.word_one_based(sigma));
    }
}

#[test]
fn svg_markers() {
    let rs = RootSystem::new(RootType::A, 2).unwrap();
    let svg = figure_svg(&rs, &w(&[7, 2]), &w(&[1, 3]), 2).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="cohomological""#).count(), 5);
    assert_eq!(svg.matches(r#"class="generalized-prv""#).count(), 1);
    assert_eq!(svg.matches("<polygon").count(), 1);
    let b3 = RootSystem::new(RootType::B, 3).unwrap();
    assert!(matches!(
        figure_svg(&b3, b3.rho(), b3.rho(), 1),
        Err(Error::NotRankTwo(3))
    ));
}

#[test]
fn question8_grid_rows() {
    let rs = RootSystem::new(RootType::B, 2).unwrap();
    let pairs = grid_pairs(2, 2);
    assert_eq!(pairs.len(), 9 * 10 / 2);
    let r = question8_grid(&rs, &pairs, 1).unwrap();
    for row in &r.rows {
        assert!(row.cohomological_by_w >= r.lower_bound && row.cohomological_by_w <= r.weyl_order);
        assert_eq!(row.vertices_cohomological, row.cohomological_distinct);
        assert!(row.cohomological_distinct <= row.cohomological_by_w);
    }
}
