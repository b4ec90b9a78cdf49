use asreg::catalog::{self, CatalogError, Stage, TableKind, TypeId};
use asreg::expr::{parse_potential, parse_scalar, parse_tensor, Bindings};
use asreg::quadratic::{derivation_quotient, nakayama, RelationSpace};
use asreg::tensor::TwistedWitness;
use asreg::{FieldSpec, LinearMap, Matrix};

const Q: FieldSpec = FieldSpec::Rationals;

fn bind(pairs: &[(&str, i64)]) -> Bindings {
    pairs.iter().map(|(k, v)| (k.to_string(), Q.from_i64(*v))).collect()
}

fn ratio(pairs: &[(&str, i64, i64)]) -> Bindings {
    pairs.iter().map(|(k, n, d)| (k.to_string(), Q.from_ratio(*n, *d).unwrap())).collect()
}

#[test]
fn type_names_round_trip() {
    for id in TypeId::ALL {
        assert_eq!(id.name().parse::<TypeId>().unwrap(), id);
        assert_eq!(id.to_string().to_lowercase().parse::<TypeId>().unwrap(), id);
        assert_eq!(id.row().id, id);
    }
    assert_eq!("S′1".parse::<TypeId>().unwrap(), TypeId::S1p);
    assert_eq!("S1p".parse::<TypeId>().unwrap(), TypeId::S1p);
    assert_eq!("tp".parse::<TypeId>().unwrap(), TypeId::Tp);
    assert!("Q7".parse::<TypeId>().is_err());
    assert_eq!(TypeId::ALL.len(), 22);
}

#[test]
fn every_template_parses() {
    for id in TypeId::ALL {
        let row = id.row();
        let mut rng = catalog::row_rng(1, id);
        let b = row.sample_binding(Q, &mut rng).unwrap();
        let env = row.validate(Q, &b).unwrap();
        parse_potential(row.potential, Q, &env).unwrap();
        parse_potential(row.table3.w0, Q, &env).unwrap();
        for r in row.relations {
            assert_eq!(parse_tensor(r, Q, &env).unwrap().degree(), 2, "{id} relation {r}");
        }
        for m in [&row.nakayama, &row.table3.theta, &row.table3.g] {
            for e in m.iter().flatten() {
                parse_scalar(e, Q, &env).unwrap();
            }
        }
        parse_scalar(row.table3.c, Q, &env).unwrap();
        if let Some(e) = row.erratum {
            parse_potential(e, Q, &env).unwrap();
        }
    }
}

#[test]
fn listed_relations_span_the_derivation_quotient() {
    for id in TypeId::ALL {
        let mut rng = catalog::row_rng(2, id);
        let b = id.row().sample_binding(Q, &mut rng).unwrap();
        let inst = id.row().instantiate(Q, &b).unwrap();
        let a = derivation_quotient(&inst.potential).unwrap();
        let listed = RelationSpace::span(Q, &inst.relations).unwrap();
        assert_eq!(a.relations, listed, "{id} {b:?}");
    }
}

#[test]
fn condition_violations_are_reported() {
    let cases: Vec<(TypeId, Bindings)> = vec![
        (TypeId::S3, bind(&[("alpha", 1), ("beta", 1), ("gamma", 1)])),
        (TypeId::S3, bind(&[("alpha", 0), ("beta", 2), ("gamma", 3)])),
        (TypeId::T2, bind(&[("alpha", 1), ("beta", -1), ("gamma", 0)])),
    ];
    for (id, b) in cases {
        match id.row().instantiate(Q, &b) {
            Err(CatalogError::ConditionViolated(c)) => assert!(!c.is_empty()),
            other => panic!("{id} {b:?}: {other:?}"),
        }
    }
}

#[test]
fn binding_names_are_checked() {
    let row = TypeId::T2.row();
    assert!(matches!(
        row.instantiate(Q, &bind(&[("alpha", 1), ("beta", 1)])),
        Err(CatalogError::MissingParameter(p)) if p == "gamma"
    ));
    assert!(matches!(
        row.instantiate(Q, &bind(&[("alpha", 1), ("beta", 1), ("gamma", 1), ("delta", 1)])),
        Err(CatalogError::UnknownParameter(p)) if p == "delta"
    ));
}

#[test]
fn cube_roots_over_q() {
    let row = TypeId::S3.row();
    let ok = bind(&[("alpha", 8), ("beta", 27), ("gamma", -1)]);
    let inst = row.instantiate(Q, &ok).unwrap();
    assert_eq!(inst.env["a"], Q.from_i64(2));
    assert_eq!(inst.env["b"], Q.from_i64(3));
    assert_eq!(inst.env["c"], Q.from_i64(-1));
    let bad = bind(&[("alpha", 2), ("beta", 27), ("gamma", -1)]);
    assert!(matches!(row.instantiate(Q, &bad), Err(CatalogError::CubeRootUnavailable(..))));
    let mut wrong = ok.clone();
    wrong.insert("a".into(), Q.from_i64(3));
    assert!(matches!(row.instantiate(Q, &wrong), Err(CatalogError::BadCubeRoot(..))));
}

#[test]
fn s3_nakayama_is_identity() {
    let b = bind(&[("alpha", 8), ("beta", 27), ("gamma", 64)]);
    let inst = TypeId::S3.row().instantiate(Q, &b).unwrap();
    let a = derivation_quotient(&inst.potential).unwrap();
    assert!(nakayama(&a).unwrap().is_identity());
    assert_eq!(inst.nakayama, Matrix::identity(Q, 3));
}

#[test]
fn wl2_at_zero() {
    let inst = TypeId::WL2.row().instantiate(Q, &bind(&[("gamma", 0)])).unwrap();
    let nu = nakayama(&derivation_quotient(&inst.potential).unwrap()).unwrap();
    assert_eq!(catalog::table_layout(&nu), Matrix::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0], &[0, 2, 1]]));
    let rep = catalog::verify_row(TypeId::WL2, Q, &bind(&[("gamma", 0)])).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn t2_at_ones() {
    let b = bind(&[("alpha", 1), ("beta", 1), ("gamma", 1)]);
    let inst = TypeId::T2.row().instantiate(Q, &b).unwrap();
    assert_eq!(inst.env["nu"], Q.one());
    assert_eq!(inst.env["lam"], Q.zero());
    let theta = LinearMap::from_i64(Q, [[0, -1, 0], [-1, 0, 0], [0, 0, -1]]);
    assert_eq!(inst.theta, theta);
    let rep = catalog::verify_row(TypeId::T2, Q, &b).unwrap();
    assert!(rep.passed(), "{rep:?}");
    let rep = catalog::verify_table3(TypeId::T2, Q, &b).unwrap();
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn t2_printed_potential_is_not_twisted() {
    let b = bind(&[("alpha", 1), ("beta", 2), ("gamma", 3)]);
    let row = TypeId::T2.row();
    let inst = row.instantiate(Q, &b).unwrap();
    let printed = parse_potential(row.erratum.unwrap(), Q, &inst.env).unwrap();
    assert_eq!(printed.twisted_witness().unwrap(), TwistedWitness::None);
    assert_ne!(inst.potential.twisted_witness().unwrap(), TwistedWitness::None);
    let a = derivation_quotient(&printed).unwrap();
    assert_eq!(a.relations, RelationSpace::span(Q, &inst.relations).unwrap());
}

#[test]
fn explicit_instances_verify() {
    let cases = [
        (TypeId::P1, bind(&[("alpha", 2)])),
        (TypeId::S1, bind(&[("alpha", 8), ("beta", 1), ("gamma", -27)])),
        (TypeId::S2, ratio(&[("alpha", 1, 8), ("beta", 27, 1)])),
        (TypeId::T1, Bindings::new()),
        (TypeId::TL4, Bindings::new()),
    ];
    for (id, b) in cases {
        let b = if id.row().params.iter().all(|p| b.contains_key(*p)) {
            b
        } else {
            id.row().sample_binding(Q, &mut catalog::row_rng(0, id)).unwrap()
        };
        for rep in [catalog::verify_row(id, Q, &b).unwrap(), catalog::verify_table3(id, Q, &b).unwrap()] {
            assert!(rep.passed(), "{id}: {:?}", rep.first_failure());
        }
    }
}

#[test]
fn every_stage_runs_after_failure() {
    let b = bind(&[("alpha", 1), ("beta", 2), ("gamma", 3)]);
    let rep = catalog::verify_row(TypeId::T2, Q, &b).unwrap();
    let stages: Vec<Stage> = rep.stages.iter().map(|s| s.stage).collect();
    assert_eq!(
        stages,
        [Stage::Derivatives, Stage::TwistedWitness, Stage::Nakayama, Stage::Regularity, Stage::Table3, Stage::Hilbert]
    );
}

#[test]
fn sweeps_over_finite_and_cyclotomic_fields() {
    let ids = [TypeId::P1, TypeId::S1, TypeId::S1p, TypeId::T2, TypeId::WL1];
    for field in [FieldSpec::PrimeField(1000003), FieldSpec::Cyclotomic3] {
        for kind in [TableKind::Table1, TableKind::Table2, TableKind::Table3] {
            let r = catalog::sweep(kind, &ids, 4, 2, field).unwrap();
            assert!(r.passed(), "{kind:?} {field:?}: {:?} {:?}", r.errors, r.reports.iter().find(|x| !x.passed()));
        }
    }
}

#[test]
fn sweep_rejects_small_primes() {
    assert!(matches!(
        catalog::sweep(TableKind::Table1, &[TypeId::T1], 0, 1, FieldSpec::PrimeField(7)),
        Err(CatalogError::PrimeTooSmall(..))
    ));
}

#[test]
fn sweeps_are_deterministic() {
    let a = catalog::sweep(TableKind::Table1, &TypeId::ALL, 9, 1, Q).unwrap();
    let b = catalog::sweep(TableKind::Table1, &TypeId::ALL, 9, 1, Q).unwrap();
    let params = |r: &catalog::SweepReport| r.reports.iter().map(|x| x.parameters.clone()).collect::<Vec<_>>();
    assert_eq!(params(&a), params(&b));
}

#[test]
fn rendered_tables_contain_every_cell() {
    let md = catalog::render_tables();
    for id in TypeId::ALL {
        let row = id.row();
        assert!(md.contains(row.potential), "{id} potential");
        for r in row.relations {
            assert!(md.contains(r), "{id} relation {r}");
        }
        assert!(md.contains(row.table3.w0), "{id} w0");
        for e in row.table3.theta.iter().chain(&row.table3.g).chain(&row.nakayama).flatten() {
            assert!(md.contains(e), "{id} entry {e}");
        }
        if let Some(t2) = &row.table2 {
            assert!(md.contains(t2.potential), "{id} table 2");
        }
        if let Some(e) = row.erratum {
            assert!(md.contains(e), "{id} erratum");
        }
    }
}
