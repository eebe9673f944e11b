use super::*;
use crate::repthy;
use crate::rootsys::GlWeight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_perms(m: usize) -> Vec<Vec<usize>> {
    let rs = RootSystem::new(RootType::A, m - 1).unwrap();
    rs.weyl()
        .elements()
        .map(|w| weylcomb::permutation(&rs, w).unwrap())
        .collect()
}

#[test]
fn small_polynomials() {
    assert_eq!(schubert_polynomial(&[0, 1, 2]).unwrap(), Polynomial::one());
    assert_eq!(
        schubert_polynomial(&[1, 0, 2]).unwrap(),
        Polynomial::monomial(&[1], 1)
    );
    let mut s2 = Polynomial::monomial(&[1], 1);
    s2.add_scaled(&Polynomial::monomial(&[0, 1], 1), 1);
    assert_eq!(schubert_polynomial(&[0, 2, 1]).unwrap(), s2);
    assert_eq!(
        schubert_polynomial(&[2, 1, 0]).unwrap(),
        Polynomial::monomial(&[2, 1], 1)
    );
    assert_eq!(
        schubert_polynomial(&[2, 0, 1]).unwrap(),
        Polynomial::monomial(&[2], 1)
    );
    assert_eq!(
        schubert_polynomial(&[1, 2, 0]).unwrap(),
        Polynomial::monomial(&[1, 1], 1)
    );
    assert_eq!(schubert_polynomial(&[0, 3, 2, 1]).unwrap().num_terms(), 5);
    assert_eq!(schubert_polynomial(&[2, 0, 1]).unwrap().to_string(), "x0^2");
}

#[test]
fn simple_transpositions_are_partial_sums() {
    for m in 2..=6 {
        for i in 0..m - 1 {
            let mut w: Vec<usize> = (0..m).collect();
            w.swap(i, i + 1);
            let mut expect = Polynomial::zero();
            for v in 0..=i {
                let mut e = vec![0u8; v + 1];
                e[v] = 1;
                expect.add_scaled(&Polynomial::monomial(&e, 1), 1);
            }
            assert_eq!(schubert_polynomial(&w).unwrap(), expect);
        }
    }
}

#[test]
fn table_matches_direct_construction() {
    let t = table(3).unwrap();
    for (p, poly) in t.perms.iter().zip(&t.polys) {
        assert_eq!(&schubert_polynomial(p).unwrap(), poly);
    }
}

#[test]
fn lehmer_code_round_trip() {
    for p in all_perms(4) {
        let mut trimmed = p.clone();
        while trimmed.len() > 1 && trimmed[trimmed.len() - 1] == trimmed.len() - 1 {
            trimmed.pop();
        }
        assert_eq!(from_lehmer_code(&lehmer_code(&p)), trimmed);
        let s = schubert_polynomial(&p).unwrap();
        assert_eq!(s.revlex_leading().map(|x| x.1), Some(1));
        let code = lehmer_code(&p);
        assert_eq!(s.coefficient(&code), 1);
    }
}

#[test]
fn d_examples() {
    let e = [0, 1, 2];
    for w in all_perms(3) {
        assert_eq!(d_coefficient(&e, &w, &w).unwrap(), 1);
    }
    let (s1, s2) = ([1, 0, 2], [0, 2, 1]);
    assert_eq!(d_coefficient(&s1, &s2, &[2, 0, 1]).unwrap(), 1);
    assert_eq!(d_coefficient(&s1, &s2, &[1, 2, 0]).unwrap(), 1);
    assert_eq!(d_coefficient(&s1, &[1, 2, 0], &[2, 1, 0]).unwrap(), 1);
    assert_eq!(d_coefficient(&s2, &[2, 0, 1], &[2, 1, 0]).unwrap(), 1);
    assert_eq!(d_coefficient(&s1, &s1, &[2, 0, 1]).unwrap(), 1);
    assert!(matches!(
        d_coefficient(&s1, &s2, &s1),
        Err(Error::LengthMismatch { .. })
    ));
    assert!(d_coefficient(&s1, &[0, 1], &s1).is_err());
}

#[test]
fn expansions_are_positive_and_graded() {
    for m in 3..=4 {
        let perms = all_perms(m);
        for a in &perms {
            for b in &perms {
                let p = schubert_polynomial(a)
                    .unwrap()
                    .mul(&schubert_polynomial(b).unwrap());
                let ex = expand(&p).unwrap();
                assert!(ex.is_nonnegative(), "{a:?} {b:?}");
                let mut back = Polynomial::zero();
                for (u, &c) in &ex.terms {
                    assert_eq!(length(u), length(a) + length(b));
                    back.add_scaled(&schubert_polynomial(u).unwrap(), c);
                }
                assert_eq!(back, p);
                for c in &perms {
                    if length(c) == length(a) + length(b) {
                        assert_eq!(d_coefficient(a, b, c).unwrap() as i64, ex.coefficient(c));
                    }
                }
            }
        }
    }
}

#[test]
fn claim_scans_small() {
    let r = claim_scans(1).unwrap();
    assert!(r.passed());
    let r = claim_scans(2).unwrap();
    assert!(r.passed());
    assert_eq!(r.claim0.triples_checked, 15);
    assert_eq!(r.claim0.d_equal_one, 15);
    let r = claim_scans(3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.claim0.d_equal_one, r.claim0.triples_checked);
    assert!(r.claim10.triples_checked >= r.claim0.triples_checked);
}

#[test]
fn question0_refuses_other_types() {
    let rs = RootSystem::new(RootType::B, 2).unwrap();
    assert_eq!(question0_scan(&rs), Err(Error::NotTypeA));
    let rs = RootSystem::new(RootType::A, 2).unwrap();
    assert!(question0_scan(&rs).unwrap().passed());
}

#[test]
fn grassmannian_matches_lr() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let random_part = |rng: &mut ChaCha8Rng, k: usize, w: usize| {
        let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=w)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let mut checked = 0;
    while checked < 100 {
        let letters = rng.gen_range(3..=5);
        let k = rng.gen_range(1..letters);
        let width = letters - k;
        let lam = random_part(&mut rng, k, width);
        let mu = random_part(&mut rng, k, width);
        let nu = random_part(&mut rng, k, width);
        let size = |p: &[usize]| p.iter().sum::<usize>();
        if size(&nu) != size(&lam) + size(&mu) {
            continue;
        }
        checked += 1;
        let (u, v, w) = (
            grassmannian_permutation(&lam, k, letters).unwrap(),
            grassmannian_permutation(&mu, k, letters).unwrap(),
            grassmannian_permutation(&nu, k, letters).unwrap(),
        );
        let to_gl = |p: &[usize]| GlWeight(p.iter().map(|&x| x as i64).collect());
        let lr = repthy::gl_lr_coefficient(&to_gl(&lam), &to_gl(&mu), &to_gl(&nu));
        assert_eq!(
            d_coefficient(&u, &v, &w).unwrap(),
            lr,
            "{lam:?} {mu:?} {nu:?} k={k}"
        );
    }
}

#[test]
fn grassmannian_shape() {
    assert_eq!(
        grassmannian_permutation(&[2, 1], 2, 4).unwrap(),
        vec![1, 3, 0, 2]
    );
    assert_eq!(
        grassmannian_permutation(&[], 2, 4).unwrap(),
        vec![0, 1, 2, 3]
    );
    assert!(grassmannian_permutation(&[3], 2, 4).is_err());
}
