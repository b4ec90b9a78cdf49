use asreg::hesse::{self, CurveAutomorphism, HesseCurve, HesseError, HessePoint};
use asreg::regularity::{as_regular_check, RegularityVerdict};
use asreg::{FieldSpec, LinearMap, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const P: u64 = 1000003;

/// All projective points of E over a small prime field, by enumeration.
fn enumerate(e: &HesseCurve, p: u64) -> Vec<HessePoint> {
    let f = e.field();
    let mut out = Vec::new();
    for a in 0..p as i64 {
        for b in 0..p as i64 {
            if let Ok(q) = e.point([f.from_i64(a), f.from_i64(b), f.one()]) {
                out.push(q);
            }
        }
        if let Ok(q) = e.point([f.from_i64(a), f.one(), f.zero()]) {
            out.push(q);
        }
    }
    if let Ok(q) = e.point([f.one(), f.zero(), f.zero()]) {
        out.push(q);
    }
    out
}

#[test]
fn group_order_annihilates_every_point() {
    for p in [31u64, 37, 43] {
        let f = FieldSpec::prime(p).unwrap();
        for l in [2i64, 5, 11] {
            let Ok(e) = HesseCurve::new(f.from_i64(l)) else { continue };
            let pts = enumerate(&e, p);
            let n = pts.len() as i64;
            assert!((n - p as i64 - 1).pow(2) <= 4 * p as i64, "Hasse bound p={p} l={l} n={n}");
            for q in &pts {
                assert_eq!(e.smul(n, q), e.zero(), "p={p} l={l} q={q}");
            }
            let t = e.flexes().len() as i64;
            assert_eq!(n % t, 0, "flexes form a subgroup");
            for q in pts.iter().take(12) {
                for r in pts.iter().rev().take(12) {
                    let s = e.add(q, r);
                    assert!(pts.contains(&s));
                    assert_eq!(e.sub(&s, r), *q);
                }
            }
        }
    }
}

#[test]
fn random_points_lie_on_the_curve() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(7)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let q = e.random_point(&mut rng).unwrap();
        assert!(e.on_curve(q.coords()).unwrap());
    }
    let q = e.random_nontorsion(&mut rng).unwrap();
    for n in 1..=12 {
        assert!(!e.is_n_torsion(&q, n));
    }
}

#[test]
fn scalar_multiplication_is_repeated_addition() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let q = e.random_point(&mut rng).unwrap();
    let mut acc = e.zero();
    for n in 0..20 {
        assert_eq!(e.smul(n, &q), acc);
        assert_eq!(e.smul(-n, &q), e.neg(&acc));
        acc = e.add(&acc, &q);
    }
}

#[test]
fn rational_curve_arithmetic() {
    let q = FieldSpec::Rationals;
    let e = HesseCurve::new(q.from_i64(2)).unwrap();
    assert_eq!(e.j_invariant(), q.from_ratio(884736, 343).unwrap());
    assert_eq!(e.flexes().len(), 3);
    let o = e.zero();
    assert_eq!(o.coords(), &[q.from_i64(-1), q.one(), q.zero()]);
    assert!(matches!(HesseCurve::new(q.one()), Err(HesseError::Singular)));
    assert!(e.point_i64([1, 2, 4]).is_err());
    let p = e.point_i64([1, 2, 3]).unwrap();
    assert_eq!(e.sub(&e.add(&p, &p), &p), p);
    let fermat = HesseCurve::new(q.zero()).unwrap();
    assert!(fermat.j_invariant().is_zero());
}

#[test]
fn two_torsion_from_the_parameter() {
    let f = FieldSpec::PrimeField(P);
    let c = f.from_i64(5);
    let lambda = &(&c.pow(3) + &f.from_i64(2)) / &(&f.from_i64(3) * &c);
    let e = HesseCurve::new(lambda).unwrap();
    let t = e.point([f.one(), f.one(), c]).unwrap();
    assert_eq!(e.neg(&t), t);
    assert!(e.is_n_torsion(&t, 2));
    for fl in e.flexes() {
        let s = e.add(&t, &fl);
        assert!(e.is_n_torsion(&s, 6));
        assert!(hesse::ec_regular(&e, &s, 1, None).unwrap());
    }
}

#[test]
fn tau_matrix_matches_default() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(9)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let swap = Matrix::from_i64(f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    for _ in 0..10 {
        let p = e.random_nontorsion(&mut rng).unwrap();
        assert_eq!(
            hesse::ec_regular(&e, &p, 1, None).unwrap(),
            hesse::ec_regular(&e, &p, 1, Some(swap.clone())).unwrap()
        );
        let a = CurveAutomorphism::new(&e, p.clone(), 1, Some(swap.clone())).unwrap();
        let b = CurveAutomorphism::new(&e, p.clone(), 1, None).unwrap();
        let q = e.random_point(&mut rng).unwrap();
        assert_eq!(a.apply(&e, &q), b.apply(&e, &q));
    }
    let moves = Matrix::from_i64(f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    assert!(matches!(CurveAutomorphism::new(&e, e.zero(), 1, Some(moves)), Err(HesseError::TauMovesZero)));
    let fermat = HesseCurve::new(f.zero()).unwrap();
    assert!(matches!(
        CurveAutomorphism::new(&fermat, fermat.zero(), 1, None),
        Err(HesseError::TauOrderUnsupported)
    ));
}

#[test]
fn three_torsion_parameters_are_rejected() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(4)).unwrap();
    for fl in e.flexes() {
        assert!(matches!(hesse::sklyanin(&e, &fl), Err(HesseError::ThreeTorsionPoint(_))));
        assert!(matches!(hesse::ec_regular(&e, &fl, 0, None), Err(HesseError::ThreeTorsionPoint(_))));
    }
}

#[test]
fn sklyanin_potential_is_a_superpotential() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(6)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let p = e.random_nontorsion(&mut rng).unwrap();
    let w = hesse::sklyanin_potential(&p);
    assert!(w.is_superpotential().unwrap());
    let a = hesse::twisted_sklyanin(&e, &p, 0).unwrap();
    assert_eq!(a.relations, hesse::sklyanin(&e, &p).unwrap().relations);
    assert_eq!(as_regular_check(&a).verdict, RegularityVerdict::Regular);
}

#[test]
fn twisted_graph_uses_sigma_p_tau() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(8)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = e.random_nontorsion(&mut rng).unwrap();
    let a = hesse::twisted_sklyanin(&e, &p, 1).unwrap();
    let good = CurveAutomorphism::new(&e, p.clone(), 1, None).unwrap();
    assert!(hesse::g1_graph_check(&a, &e, &good, 30, &mut rng).unwrap());
    let wrong = CurveAutomorphism::new(&e, e.neg(&p), 1, None).unwrap();
    assert!(!hesse::g1_graph_check(&a, &e, &wrong, 30, &mut rng).unwrap());
    let tau = CurveAutomorphism::new(&e, e.zero(), 1, None).unwrap();
    assert!(!hesse::g1_graph_check(&a, &e, &tau, 30, &mut rng).unwrap());
}

#[test]
fn linear_extensions() {
    let f = FieldSpec::PrimeField(P);
    let e = HesseCurve::new(f.from_i64(10)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tau = CurveAutomorphism::new(&e, e.zero(), 1, None).unwrap();
    let n = hesse::linear_extension(&e, &tau, 12, &mut rng).unwrap().expect("tau is linear");
    let swap = LinearMap::from_i64(f, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
    assert!(LinearMap::from_matrix(n).unwrap().ratio_to(&swap).is_some());
    for fl in e.flexes() {
        let s = CurveAutomorphism::translation(fl);
        assert!(hesse::linear_extension(&e, &s, 12, &mut rng).unwrap().is_some());
    }
    let p = e.random_nontorsion(&mut rng).unwrap();
    let s = CurveAutomorphism::translation(p);
    assert!(hesse::linear_extension(&e, &s, 12, &mut rng).unwrap().is_none());
}
