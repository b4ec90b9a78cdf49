//! The classification tables as parameterized families, with the
//! verification pipeline that checks each family end to end.

mod rows;
mod verify;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::expr::{parse_potential, parse_scalar, parse_tensor, Bindings, ParseError};
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::matrix::Matrix;
use crate::tensor::{LinearMap, Tensor};

pub use rows::ROWS;
pub use verify::{
    row_rng, sweep, table_layout, verify_row, verify_table2, verify_table3, Stage, StageOutcome,
    SweepReport, TableKind, VerificationReport, MIN_SWEEP_PRIME,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TypeId {
    P1,
    P2,
    P3,
    S1,
    S2,
    S3,
    S1p,
    S2p,
    T1,
    T2,
    T3,
    Tp,
    CC,
    NC1,
    NC2,
    WL1,
    WL2,
    WL3,
    TL1,
    TL2,
    TL3,
    TL4,
}

impl TypeId {
    pub const ALL: [TypeId; 22] = [
        TypeId::P1,
        TypeId::P2,
        TypeId::P3,
        TypeId::S1,
        TypeId::S2,
        TypeId::S3,
        TypeId::S1p,
        TypeId::S2p,
        TypeId::T1,
        TypeId::T2,
        TypeId::T3,
        TypeId::Tp,
        TypeId::CC,
        TypeId::NC1,
        TypeId::NC2,
        TypeId::WL1,
        TypeId::WL2,
        TypeId::WL3,
        TypeId::TL1,
        TypeId::TL2,
        TypeId::TL3,
        TypeId::TL4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TypeId::P1 => "P1",
            TypeId::P2 => "P2",
            TypeId::P3 => "P3",
            TypeId::S1 => "S1",
            TypeId::S2 => "S2",
            TypeId::S3 => "S3",
            TypeId::S1p => "S'1",
            TypeId::S2p => "S'2",
            TypeId::T1 => "T1",
            TypeId::T2 => "T2",
            TypeId::T3 => "T3",
            TypeId::Tp => "T'",
            TypeId::CC => "CC",
            TypeId::NC1 => "NC1",
            TypeId::NC2 => "NC2",
            TypeId::WL1 => "WL1",
            TypeId::WL2 => "WL2",
            TypeId::WL3 => "WL3",
            TypeId::TL1 => "TL1",
            TypeId::TL2 => "TL2",
            TypeId::TL3 => "TL3",
            TypeId::TL4 => "TL4",
        }
    }

    pub fn row(self) -> &'static CatalogRow {
        &ROWS[self as usize]
    }
}

impl fmt::Display for TypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown type `{0}`")]
pub struct UnknownType(pub String);

impl FromStr for TypeId {
    type Err = UnknownType;

    /// Accepts `S'1`, `S′1`, `S1p` and `Sp1` spellings, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .replace(['′', '’'], "'")
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        let norm = match norm.as_str() {
            "S1P" | "SP1" => "S'1".to_string(),
            "S2P" | "SP2" => "S'2".to_string(),
            "TP" | "TPRIME" => "T'".to_string(),
            _ => norm,
        };
        TypeId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| UnknownType(s.to_string()))
    }
}

/// A validity predicate on a scalar expression in the row's parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    NonZero(&'static str),
    NotOne(&'static str),
    EqualsOne(&'static str),
}

impl Condition {
    pub fn holds(&self, field: FieldSpec, env: &Bindings) -> Result<bool, ParseError> {
        Ok(match *self {
            Condition::NonZero(e) => !parse_scalar(e, field, env)?.is_zero(),
            Condition::NotOne(e) => !parse_scalar(e, field, env)?.is_one(),
            Condition::EqualsOne(e) => parse_scalar(e, field, env)?.is_one(),
        })
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::NonZero(e) => write!(f, "{e} != 0"),
            Condition::NotOne(e) => write!(f, "{e} != 1"),
            Condition::EqualsOne(e) => write!(f, "{e} = 1"),
        }
    }
}

/// Auxiliary scalars a row's templates refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derived {
    /// A cube root of the named parameter; the binding may supply it.
    CubeRoot(&'static str),
    Expr(&'static str),
}

#[derive(Debug, Clone, Copy)]
pub struct Table2Row {
    pub params: &'static [&'static str],
    pub conditions: &'static [Condition],
    pub potential: &'static str,
}

/// `θ ∈ Aut(w₀)` with `(g^{⊗3})(w₀^θ) = c·w`.
#[derive(Debug, Clone, Copy)]
pub struct Table3Row {
    pub w0: &'static str,
    pub theta: [[&'static str; 3]; 3],
    pub g: [[&'static str; 3]; 3],
    pub c: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct CatalogRow {
    pub id: TypeId,
    pub params: &'static [&'static str],
    pub conditions: &'static [Condition],
    pub potential: &'static str,
    pub relations: [&'static str; 3],
    /// Expected Nakayama automorphism of the dual, images written as columns.
    pub nakayama: [[&'static str; 3]; 3],
    /// The potential as originally printed, when it had to be corrected.
    pub erratum: Option<&'static str>,
    pub derived: &'static [(&'static str, Derived)],
    pub table2: Option<Table2Row>,
    pub table3: Table3Row,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("parameter `{0}` is not bound")]
    MissingParameter(String),
    #[error("parameter `{0}` is not used by this row")]
    UnknownParameter(String),
    #[error("no cube root of `{0}` in the field; bind `{1}` explicitly")]
    CubeRootUnavailable(String, String),
    #[error("bound cube root `{0}` does not cube to `{1}`")]
    BadCubeRoot(String, String),
    #[error("type {0} has no Calabi-Yau row")]
    NoTable2Row(TypeId),
    #[error("prime {0} is below the sweep bound {MIN_SWEEP_PRIME}")]
    PrimeTooSmall(u64),
    #[error("could not sample a valid binding for {0}")]
    SamplingExhausted(TypeId),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type ParameterBinding = Bindings;

/// A row evaluated at a binding.
#[derive(Debug, Clone)]
pub struct Instance {
    pub id: TypeId,
    pub field: FieldSpec,
    /// Parameters, derived scalars and any supplied cube roots.
    pub env: Bindings,
    pub potential: Tensor,
    pub relations: [Tensor; 3],
    pub nakayama: Matrix,
    pub w0: Tensor,
    pub theta: LinearMap,
    pub g: LinearMap,
    pub c: FieldElement,
}

fn check_names(
    params: &[&str],
    extra: &[&str],
    b: &ParameterBinding,
) -> Result<(), CatalogError> {
    for p in params {
        if !b.contains_key(*p) {
            return Err(CatalogError::MissingParameter(p.to_string()));
        }
    }
    for k in b.keys() {
        if !params.contains(&k.as_str()) && !extra.contains(&k.as_str()) {
            return Err(CatalogError::UnknownParameter(k.clone()));
        }
    }
    Ok(())
}

fn check_conditions(
    conds: &[Condition],
    field: FieldSpec,
    env: &Bindings,
) -> Result<(), CatalogError> {
    for c in conds {
        if !c.holds(field, env)? {
            return Err(CatalogError::ConditionViolated(c.to_string()));
        }
    }
    Ok(())
}

fn parse_matrix(
    m: &[[&str; 3]; 3],
    field: FieldSpec,
    env: &Bindings,
) -> Result<Matrix, CatalogError> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|e| parse_scalar(e, field, env)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, rows).expect("3x3"))
}

impl CatalogRow {
    pub fn validate(&self, field: FieldSpec, b: &ParameterBinding) -> Result<Bindings, CatalogError> {
        let cube_names: Vec<&str> = self.derived.iter().map(|(n, _)| *n).collect();
        check_names(self.params, &cube_names, b)?;
        let mut env = b.clone();
        for v in env.values_mut() {
            if v.spec() != field {
                *v = convert(v, field)
                    .ok_or(CatalogError::Field(FieldError::FieldMismatch(v.spec(), field)))?;
            }
        }
        check_conditions(self.conditions, field, &env)?;
        for (name, d) in self.derived {
            match d {
                Derived::CubeRoot(p) => {
                    let base = env[*p].clone();
                    match env.get(*name) {
                        Some(r) => {
                            if r.pow(3) != base {
                                return Err(CatalogError::BadCubeRoot(name.to_string(), p.to_string()));
                            }
                        }
                        None => {
                            let r = base.cube_root().ok_or_else(|| {
                                CatalogError::CubeRootUnavailable(p.to_string(), name.to_string())
                            })?;
                            env.insert(name.to_string(), r);
                        }
                    }
                }
                Derived::Expr(e) => {
                    let v = parse_scalar(e, field, &env)?;
                    env.insert(name.to_string(), v);
                }
            }
        }
        Ok(env)
    }

    pub fn instantiate(&self, field: FieldSpec, b: &ParameterBinding) -> Result<Instance, CatalogError> {
        let env = self.validate(field, b)?;
        let potential = parse_potential(self.potential, field, &env)?;
        let relations = [
            parse_tensor(self.relations[0], field, &env)?,
            parse_tensor(self.relations[1], field, &env)?,
            parse_tensor(self.relations[2], field, &env)?,
        ];
        let nakayama = parse_matrix(&self.nakayama, field, &env)?;
        let t3 = &self.table3;
        let w0 = parse_potential(t3.w0, field, &env)?;
        let theta = LinearMap::from_matrix(parse_matrix(&t3.theta, field, &env)?)
            .expect("3x3");
        let g = LinearMap::from_matrix(parse_matrix(&t3.g, field, &env)?).expect("3x3");
        let c = parse_scalar(t3.c, field, &env)?;
        Ok(Instance {
            id: self.id,
            field,
            env,
            potential,
            relations,
            nakayama,
            w0,
            theta,
            g,
            c,
        })
    }

    pub fn instantiate_table2(
        &self,
        field: FieldSpec,
        b: &ParameterBinding,
    ) -> Result<Tensor, CatalogError> {
        let t2 = self.table2.as_ref().ok_or(CatalogError::NoTable2Row(self.id))?;
        check_names(t2.params, &[], b)?;
        check_conditions(t2.conditions, field, b)?;
        Ok(parse_potential(t2.potential, field, b)?)
    }

    /// A pseudorandom binding satisfying the row's conditions. Cube-root
    /// parameters are drawn as cubes, with the root bound alongside.
    pub fn sample_binding<R: Rng>(&self, field: FieldSpec, rng: &mut R) -> Result<ParameterBinding, CatalogError> {
        for _ in 0..1000 {
            let mut b = ParameterBinding::new();
            for p in self.params {
                let root = self.derived.iter().find_map(|(n, d)| match d {
                    Derived::CubeRoot(q) if q == p => Some(*n),
                    _ => None,
                });
                let v = random_scalar(field, rng);
                match root {
                    Some(n) => {
                        b.insert(p.to_string(), v.pow(3));
                        b.insert(n.to_string(), v);
                    }
                    None => {
                        b.insert(p.to_string(), v);
                    }
                }
            }
            if self.validate(field, &b).is_ok() {
                return Ok(b);
            }
        }
        Err(CatalogError::SamplingExhausted(self.id))
    }

    /// Bindings for the Calabi-Yau row: roots of unity where the condition
    /// demands α³ = 1, random scalars otherwise.
    pub fn sample_table2_binding<R: Rng>(
        &self,
        field: FieldSpec,
        rng: &mut R,
    ) -> Result<ParameterBinding, CatalogError> {
        let t2 = self.table2.as_ref().ok_or(CatalogError::NoTable2Row(self.id))?;
        let cube_one = t2.conditions.iter().any(|c| matches!(c, Condition::EqualsOne(_)));
        for _ in 0..1000 {
            let mut b = ParameterBinding::new();
            for p in t2.params {
                let v = if cube_one {
                    let k = rng.gen_range(0..3);
                    match field.zeta() {
                        Ok(z) => z.pow(k),
                        Err(_) => field.one(),
                    }
                } else {
                    random_scalar(field, rng)
                };
                b.insert(p.to_string(), v);
            }
            if check_conditions(t2.conditions, field, &b).is_ok() {
                return Ok(b);
            }
        }
        Err(CatalogError::SamplingExhausted(self.id))
    }
}

fn convert(v: &FieldElement, field: FieldSpec) -> Option<FieldElement> {
    field.from_rational(&v.as_rational()?).ok()
}

/// Small rationals p/q over ℚ and ℚ(ζ₃); uniform residues over 𝔽_p.
pub fn random_scalar<R: Rng>(field: FieldSpec, rng: &mut R) -> FieldElement {
    match field {
        FieldSpec::PrimeField(p) => field.from_rational(&num_rational::BigRational::from_integer(
            rng.gen_range(0..p).into(),
        ))
        .expect("in range"),
        _ => {
            let num = rng.gen_range(-6i64..=6);
            let den = rng.gen_range(1i64..=4);
            field.from_ratio(num, den).expect("nonzero denominator")
        }
    }
}

pub fn row(id: TypeId) -> &'static CatalogRow {
    id.row()
}

/// The three tables re-emitted from the encoded rows as Markdown.
pub fn render_tables() -> String {
    use std::fmt::Write;
    let mat = |m: &[[&str; 3]; 3]| {
        m.iter().map(|r| r.join(", ")).collect::<Vec<_>>().join("; ")
    };
    let conds = |c: &[Condition]| {
        if c.is_empty() {
            "-".to_string()
        } else {
            c.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        }
    };
    let mut s = String::new();
    writeln!(s, "## Potentials\n").unwrap();
    writeln!(s, "| type | w | conditions | relations | nakayama |").unwrap();
    writeln!(s, "|---|---|---|---|---|").unwrap();
    for r in &ROWS {
        writeln!(
            s,
            "| {} | {} | {} | {} | {} |",
            r.id,
            r.potential,
            conds(r.conditions),
            r.relations.join("; "),
            mat(&r.nakayama)
        )
        .unwrap();
    }
    writeln!(s, "\n## Calabi-Yau superpotentials\n").unwrap();
    writeln!(s, "| type | w0 | conditions |").unwrap();
    writeln!(s, "|---|---|---|").unwrap();
    for r in &ROWS {
        if let Some(t2) = &r.table2 {
            writeln!(s, "| {} | {} | {} |", r.id, t2.potential, conds(t2.conditions)).unwrap();
        }
    }
    writeln!(s, "\n## Twists\n").unwrap();
    writeln!(s, "| type | w0 | theta | g | c |").unwrap();
    writeln!(s, "|---|---|---|---|---|").unwrap();
    for r in &ROWS {
        let t = &r.table3;
        writeln!(s, "| {} | {} | {} | {} | {} |", r.id, t.w0, mat(&t.theta), mat(&t.g), t.c).unwrap();
    }
    let errata: Vec<_> = ROWS.iter().filter_map(|r| r.erratum.map(|e| (r.id, e))).collect();
    if !errata.is_empty() {
        writeln!(s, "\n## Corrected potentials\n").unwrap();
        for (id, e) in errata {
            writeln!(s, "- {id}: printed as `{e}`").unwrap();
        }
    }
    s
}
