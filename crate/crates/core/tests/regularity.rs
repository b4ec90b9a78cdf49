use asreg::catalog::{self, TypeId};
use asreg::expr::{parse_potential, Bindings};
use asreg::quadratic::{derivation_quotient, hilbert_dims, QuadraticAlgebra, QuadraticError};
use asreg::regularity::{
    as_regular_check, buchberger, projective_locus_empty, CommPoly, RegularityVerdict,
};
use asreg::{FieldElement, FieldSpec, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Quadrics have no common projective zero iff they span every quartic.
fn macaulay_empty(f: FieldSpec, gens: &[CommPoly]) -> bool {
    let target = monomials(4);
    let mut rows = Vec::new();
    for m in monomials(2) {
        let mono = CommPoly::from_terms(f, [(m, f.one())]);
        for g in gens {
            let p = mono.mul(g);
            rows.push(
                target
                    .iter()
                    .map(|t| {
                        p.terms()
                            .iter()
                            .find(|(k, _)| k.0 == *t)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(|| f.zero())
                    })
                    .collect(),
            );
        }
    }
    Matrix::from_rows(f, rows).unwrap().rank() == target.len()
}

fn random_quadric(f: FieldSpec, rng: &mut ChaCha8Rng, density: f64) -> CommPoly {
    let mut terms = Vec::new();
    for m in monomials(2) {
        if rng.gen_bool(density) {
            terms.push((m, f.from_i64(rng.gen_range(-3..=3))));
        }
    }
    CommPoly::from_terms(f, terms)
}

fn scan_zero(f: FieldSpec, p: i64, gens: &[CommPoly]) -> bool {
    let mut pts: Vec<[i64; 3]> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            pts.push([a, b, 1]);
        }
        pts.push([a, 1, 0]);
    }
    pts.push([1, 0, 0]);
    pts.iter().any(|q| {
        let q: [FieldElement; 3] = q.map(|v| f.from_i64(v));
        gens.iter().all(|g| g.evaluate(&q).is_zero())
    })
}

#[test]
fn emptiness_matches_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut seen = [0usize; 2];
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(31)] {
        for _ in 0..150 {
            let n = rng.gen_range(2..=4);
            let density = rng.gen_range(0.2..0.9);
            let gens: Vec<CommPoly> = (0..n).map(|_| random_quadric(field, &mut rng, density)).collect();
            let empty = projective_locus_empty(&gens).unwrap();
            assert_eq!(empty, macaulay_empty(field, &gens), "{field:?} {gens:?}");
            seen[usize::from(empty)] += 1;
        }
    }
    assert!(seen[0] > 20 && seen[1] > 20, "{seen:?}");
}

#[test]
fn finite_field_points_block_emptiness() {
    let f = FieldSpec::PrimeField(31);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let gens: Vec<CommPoly> = (0..3).map(|_| random_quadric(f, &mut rng, 0.6)).collect();
        if scan_zero(f, 31, &gens) {
            assert!(!projective_locus_empty(&gens).unwrap(), "{gens:?}");
        }
    }
}

#[test]
fn forced_common_zero() {
    let f = FieldSpec::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pt = [f.from_i64(1), f.from_i64(2), f.from_i64(-3)];
    for _ in 0..40 {
        let gens: Vec<CommPoly> = (0..4)
            .map(|_| {
                let g = random_quadric(f, &mut rng, 0.8);
                let v = g.evaluate(&pt);
                g.sub(&CommPoly::from_terms(f, [([2, 0, 0], v)]))
            })
            .collect();
        assert!(gens.iter().all(|g| g.evaluate(&pt).is_zero()));
        assert!(!projective_locus_empty(&gens).unwrap());
    }
}

#[test]
fn groebner_basis_contains_the_ideal() {
    let f = FieldSpec::PrimeField(1000003);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let gens: Vec<CommPoly> = (0..3).map(|_| random_quadric(f, &mut rng, 0.5)).collect();
        let gb = buchberger(&gens);
        for g in &gens {
            assert!(gb.contains(g));
        }
        let combo = gens.iter().fold(CommPoly::zero(f), |acc, g| {
            let m = random_quadric(f, &mut rng, 0.5);
            acc.add(&m.mul(g))
        });
        assert!(gb.contains(&combo));
        for g in &gb.generators {
            let lm = g.leading().unwrap().0;
            for h in &gb.generators {
                if h != g {
                    assert!(!h.terms().keys().any(|m| lm.divides(m)), "not reduced");
                }
            }
        }
    }
}

#[test]
fn regular_catalog_algebras_have_polynomial_growth() {
    let f = FieldSpec::Rationals;
    for id in TypeId::ALL {
        let b = id.row().sample_binding(f, &mut catalog::row_rng(5, id)).unwrap();
        let inst = id.row().instantiate(f, &b).unwrap();
        let a = derivation_quotient(&inst.potential).unwrap();
        let report = as_regular_check(&a);
        assert_eq!(report.verdict, RegularityVerdict::Regular, "{id}");
        let minors: Vec<CommPoly> = report.minors.unwrap().into_iter().flatten().collect();
        assert!(macaulay_empty(f, &minors), "{id}");
        assert_eq!(hilbert_dims(&a, 5).unwrap(), [1, 3, 6, 10, 15, 21], "{id}");
    }
}

#[test]
fn non_regular_verdicts() {
    let f = FieldSpec::Rationals;
    let e = Bindings::new();
    let cube = parse_potential("x*x*x + y*y*y", f, &e).unwrap();
    assert!(matches!(derivation_quotient(&cube), Err(QuadraticError::DegeneratePotential { rank: 2 })));
    let x = |s: &str| asreg::expr::parse_tensor(s, f, &e).unwrap();
    let two = QuadraticAlgebra::new(f, &[x("x*x"), x("y*y")]).unwrap();
    assert_eq!(as_regular_check(&two).verdict, RegularityVerdict::DegenerateRelations);
    let mono = QuadraticAlgebra::new(f, &[x("x*x"), x("y*y"), x("z*z")]).unwrap();
    assert_ne!(as_regular_check(&mono).verdict, RegularityVerdict::Regular);
    assert_ne!(hilbert_dims(&mono, 4).unwrap()[4], 15);
}
