use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{CatalogError, Instance, ParameterBinding, TypeId};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::quadratic::{
    derivation_quotient, hilbert_dims, nakayama, relations_equal_up_to, zhang_twist,
    QuadraticAlgebra, RelationSpace,
};
use crate::regularity::{as_regular_check, RegularityVerdict};
use crate::tensor::{AutScalar, LinearMap, Tensor, TwistedWitness};

pub const MIN_SWEEP_PRIME: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Derivatives,
    TwistedWitness,
    Nakayama,
    Regularity,
    Table3,
    Hilbert,
    Superpotential,
    NakayamaIdentity,
    Automorphism,
    TwistIdentity,
    RelationsUpToG,
    ZhangTwist,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageOutcome {
    pub stage: Stage,
    pub passed: bool,
    pub detail: String,
    /// The first object that differed from its expected value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Table1,
    Table2,
    Table3,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub table: TableKind,
    pub row: String,
    pub field: String,
    pub parameters: BTreeMap<String, String>,
    pub stages: Vec<StageOutcome>,
}

impl VerificationReport {
    fn new(table: TableKind, id: TypeId, field: FieldSpec, b: &ParameterBinding) -> Self {
        VerificationReport {
            table,
            row: id.name().to_string(),
            field: field.to_string(),
            parameters: b.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
            stages: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.passed)
    }

    pub fn first_failure(&self) -> Option<&StageOutcome> {
        self.stages.iter().find(|s| !s.passed)
    }

    fn run(&mut self, stage: Stage, f: impl FnOnce() -> (bool, String, Option<String>)) {
        let start = Instant::now();
        let (passed, detail, mismatch) = f();
        self.stages.push(StageOutcome {
            stage,
            passed,
            detail,
            mismatch,
            elapsed: start.elapsed(),
        });
    }
}

fn ok(detail: impl ToString) -> (bool, String, Option<String>) {
    (true, detail.to_string(), None)
}

fn fail(detail: impl ToString, mismatch: impl ToString) -> (bool, String, Option<String>) {
    (false, detail.to_string(), Some(mismatch.to_string()))
}

fn dq(w: &Tensor) -> Result<QuadraticAlgebra, String> {
    derivation_quotient(w).map_err(|e| e.to_string())
}

fn span_difference(actual: &RelationSpace, expected: &[Tensor]) -> Option<String> {
    for e in expected {
        if !actual.contains(e) {
            return Some(format!("expected relation {e} is not in the span of the partials"));
        }
    }
    for a in actual.basis() {
        let exp = RelationSpace::span(actual.field(), expected).ok()?;
        if !exp.contains(a) {
            return Some(format!("partial {a} is not in the span of the expected relations"));
        }
    }
    None
}

/// The computed Nakayama automorphism in the layout the table uses.
pub fn table_layout(nu: &LinearMap) -> Matrix {
    nu.matrix().transpose()
}

fn matrix_ratio(a: &Matrix, b: &Matrix) -> Option<crate::field::FieldElement> {
    let la = LinearMap::from_matrix(a.clone()).ok()?;
    let lb = LinearMap::from_matrix(b.clone()).ok()?;
    la.ratio_to(&lb)
}

fn stage_derivatives(r: &mut VerificationReport, inst: &Instance, a: &Result<QuadraticAlgebra, String>) {
    r.run(Stage::Derivatives, || match a {
        Err(e) => fail("derivation quotient failed", e),
        Ok(a) => match span_difference(&a.relations, &inst.relations) {
            None => ok(format!("span of partials = span of the {} listed relations", inst.relations.len())),
            Some(d) => fail("relation spaces differ", d),
        },
    });
}

fn stage_witness(r: &mut VerificationReport, w: &Tensor) {
    r.run(Stage::TwistedWitness, || match w.twisted_witness() {
        Ok(TwistedWitness::Witness(m)) => ok(format!("theta' = {m}")),
        Ok(TwistedWitness::None) => fail("no twisted-superpotential witness", "linear system has no invertible solution"),
        Ok(TwistedWitness::UndeterminedInvertibility) => {
            fail("witness search inconclusive", "no invertible candidate found")
        }
        Err(e) => fail("witness search failed", e),
    });
}

fn stage_nakayama(r: &mut VerificationReport, inst: &Instance, a: &Result<QuadraticAlgebra, String>) {
    r.run(Stage::Nakayama, || {
        let a = match a {
            Ok(a) => a,
            Err(e) => return fail("derivation quotient failed", e),
        };
        match nakayama(a) {
            Err(e) => fail("nakayama computation failed", e),
            Ok(nu) => {
                let got = table_layout(&nu);
                match matrix_ratio(&got, &inst.nakayama) {
                    Some(s) => ok(format!("nu = {got} = ({s}) * expected")),
                    None => fail(
                        "nakayama differs from the expected matrix",
                        format!("computed {got}, expected {}", inst.nakayama),
                    ),
                }
            }
        }
    });
}

fn stage_regularity(r: &mut VerificationReport, a: &Result<QuadraticAlgebra, String>) {
    r.run(Stage::Regularity, || match a {
        Err(e) => fail("derivation quotient failed", e),
        Ok(a) => {
            let rep = as_regular_check(a);
            if rep.verdict == RegularityVerdict::Regular {
                ok(rep.verdict)
            } else {
                fail(rep.verdict, format!("verdict {}", rep.verdict))
            }
        }
    });
}

fn twisted_w0(inst: &Instance) -> Result<(Tensor, Tensor), String> {
    let w0t = inst.w0.ms_twist(&inst.theta).map_err(|e| e.to_string())?;
    let lhs = w0t.gl_apply_uniform(&inst.g).map_err(|e| e.to_string())?;
    Ok((w0t, lhs))
}

fn aut_outcome(inst: &Instance) -> (bool, String, Option<String>) {
    match inst.w0.aut_scalar(&inst.theta) {
        Ok(AutScalar::Scalar(l)) => ok(format!("theta^3(w0) = ({l}) * w0")),
        Ok(AutScalar::NotProportional) => fail("theta is not an automorphism of w0", "theta^3(w0) is not proportional to w0"),
        Err(e) => fail("automorphism check failed", e),
    }
}

fn twist_identity_outcome(inst: &Instance) -> (bool, String, Option<String>) {
    let (_, lhs) = match twisted_w0(inst) {
        Ok(v) => v,
        Err(e) => return fail("twist failed", e),
    };
    let rhs = inst.potential.scale(&inst.c);
    if lhs == rhs {
        ok(format!("g(w0^theta) = ({}) * w", inst.c))
    } else {
        match lhs.ratio_to(&inst.potential) {
            Some(s) => fail(
                "g(w0^theta) is proportional to w with a different scalar",
                format!("scalar {s}, expected {}", inst.c),
            ),
            None => fail("g(w0^theta) is not proportional to w", format!("g(w0^theta) = {lhs}")),
        }
    }
}

fn relations_up_to_g_outcome(inst: &Instance, a: &Result<QuadraticAlgebra, String>) -> (bool, String, Option<String>) {
    let a = match a {
        Ok(a) => a,
        Err(e) => return fail("derivation quotient failed", e),
    };
    let (w0t, _) = match twisted_w0(inst) {
        Ok(v) => v,
        Err(e) => return fail("twist failed", e),
    };
    match dq(&w0t).and_then(|b| relations_equal_up_to(&b, a, &inst.g).map_err(|e| e.to_string())) {
        Ok(true) => ok("(g x g)(R(D(w0^theta))) = R(D(w))"),
        Ok(false) => fail("relation spaces differ", "(g x g)(R(D(w0^theta))) != R(D(w))"),
        Err(e) => fail("comparison failed", e),
    }
}

fn stage_table3(r: &mut VerificationReport, inst: &Instance, a: &Result<QuadraticAlgebra, String>) {
    r.run(Stage::Table3, || {
        for (name, (passed, detail, mismatch)) in [
            ("automorphism", aut_outcome(inst)),
            ("twist identity", twist_identity_outcome(inst)),
            ("relations", relations_up_to_g_outcome(inst, a)),
        ] {
            if !passed {
                return (false, format!("{name}: {detail}"), mismatch);
            }
        }
        ok(format!("theta = {}, g = {}, c = {}", inst.theta, inst.g, inst.c))
    });
}

fn stage_hilbert(r: &mut VerificationReport, a: &Result<QuadraticAlgebra, String>) {
    r.run(Stage::Hilbert, || match a {
        Err(e) => fail("derivation quotient failed", e),
        Ok(a) => match hilbert_dims(a, 4) {
            Ok(d) if d == [1, 3, 6, 10, 15] => ok(format!("{d:?}")),
            Ok(d) => fail("unexpected Hilbert function", format!("{d:?}")),
            Err(e) => fail("Hilbert function failed", e),
        },
    });
}

/// Runs the six row checks; every stage runs even after a failure.
pub fn verify_row(
    id: TypeId,
    field: FieldSpec,
    b: &ParameterBinding,
) -> Result<VerificationReport, CatalogError> {
    let inst = id.row().instantiate(field, b)?;
    let mut r = VerificationReport::new(TableKind::Table1, id, field, b);
    let a = dq(&inst.potential);
    stage_derivatives(&mut r, &inst, &a);
    stage_witness(&mut r, &inst.potential);
    stage_nakayama(&mut r, &inst, &a);
    stage_regularity(&mut r, &a);
    stage_table3(&mut r, &inst, &a);
    stage_hilbert(&mut r, &a);
    Ok(r)
}

/// Checks that the Calabi-Yau row is a superpotential with symmetric dual.
pub fn verify_table2(
    id: TypeId,
    field: FieldSpec,
    b: &ParameterBinding,
) -> Result<VerificationReport, CatalogError> {
    let w0 = id.row().instantiate_table2(field, b)?;
    let mut r = VerificationReport::new(TableKind::Table2, id, field, b);
    r.run(Stage::Superpotential, || match w0.is_superpotential() {
        Ok(true) => ok("cyclic(w0) = w0"),
        Ok(false) => fail("not a superpotential", format!("cyclic(w0) = {}", w0.cyclic().expect("degree 3"))),
        Err(e) => fail("check failed", e),
    });
    let a = dq(&w0);
    r.run(Stage::NakayamaIdentity, || match a.as_ref().map(nakayama) {
        Err(e) => fail("derivation quotient failed", e),
        Ok(Err(e)) => fail("nakayama computation failed", e),
        Ok(Ok(nu)) if nu.is_identity() => ok("nu = id"),
        Ok(Ok(nu)) => fail("nakayama is not the identity", format!("nu = {nu}")),
    });
    stage_regularity(&mut r, &a);
    Ok(r)
}

/// Checks the twist data of a row, including the Zhang-twist comparison.
pub fn verify_table3(
    id: TypeId,
    field: FieldSpec,
    b: &ParameterBinding,
) -> Result<VerificationReport, CatalogError> {
    let inst = id.row().instantiate(field, b)?;
    let mut r = VerificationReport::new(TableKind::Table3, id, field, b);
    let a = dq(&inst.potential);
    r.run(Stage::Automorphism, || aut_outcome(&inst));
    r.run(Stage::TwistIdentity, || twist_identity_outcome(&inst));
    r.run(Stage::RelationsUpToG, || relations_up_to_g_outcome(&inst, &a));
    r.run(Stage::ZhangTwist, || {
        let a = match &a {
            Ok(a) => a,
            Err(e) => return fail("derivation quotient failed", e),
        };
        let twisted = dq(&inst.w0).and_then(|b0| zhang_twist(&b0, &inst.theta).map_err(|e| e.to_string()));
        match twisted.and_then(|z| relations_equal_up_to(&z, a, &inst.g).map_err(|e| e.to_string())) {
            Ok(true) => ok("(g x g)(R(D(w0)^theta)) = R(D(w))"),
            Ok(false) => fail("relation spaces differ", "(g x g)(R(D(w0)^theta)) != R(D(w))"),
            Err(e) => fail("comparison failed", e),
        }
    });
    Ok(r)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub table: TableKind,
    pub seed: u64,
    pub count: usize,
    pub field: String,
    pub reports: Vec<VerificationReport>,
    /// Rows that could not be instantiated, with the reason.
    pub errors: Vec<(String, String)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.reports.iter().all(|r| r.passed())
    }
}

pub fn row_rng(seed: u64, id: TypeId) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((id as u64 + 1) << 40))
}

/// Verifies `count` seeded bindings of each listed row, in parallel across
/// rows; results are in row order.
pub fn sweep(
    table: TableKind,
    ids: &[TypeId],
    seed: u64,
    count: usize,
    field: FieldSpec,
) -> Result<SweepReport, CatalogError> {
    if let FieldSpec::PrimeField(p) = field {
        if p < MIN_SWEEP_PRIME {
            return Err(CatalogError::PrimeTooSmall(p));
        }
    }
    let ids: Vec<TypeId> = ids
        .iter()
        .copied()
        .filter(|id| table != TableKind::Table2 || id.row().table2.is_some())
        .collect();
    let per_row: Vec<Vec<Result<VerificationReport, (String, String)>>> = ids
        .par_iter()
        .map(|&id| {
            let mut rng = row_rng(seed, id);
            let row = id.row();
            (0..count)
                .map(|_| {
                    let err = |e: CatalogError| (id.name().to_string(), e.to_string());
                    let b = match table {
                        TableKind::Table2 => row.sample_table2_binding(field, &mut rng),
                        _ => row.sample_binding(field, &mut rng),
                    }
                    .map_err(err)?;
                    match table {
                        TableKind::Table1 => verify_row(id, field, &b),
                        TableKind::Table2 => verify_table2(id, field, &b),
                        TableKind::Table3 => verify_table3(id, field, &b),
                    }
                    .map_err(err)
                })
                .collect()
        })
        .collect();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for r in per_row.into_iter().flatten() {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(e),
        }
    }
    Ok(SweepReport {
        table,
        seed,
        count,
        field: field.to_string(),
        reports,
        errors,
    })
}
