//! Elliptic curves in Hesse form x³+y³+z³ = 3λxyz with zero o = (1:−1:0),
//! their chord-and-tangent group law, the automorphisms σ_p τⁱ, and the
//! Sklyanin algebras attached to them.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::matrix::Matrix;
use crate::quadratic::{derivation_quotient, QuadraticAlgebra, QuadraticError};
use crate::tensor::{LinearMap, Tensor, TensorError, Var, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HesseError {
    #[error("lambda^3 = 1 gives a singular cubic")]
    Singular,
    #[error("all coordinates are zero")]
    ZeroTriple,
    #[error("point ({0}) is not on the curve")]
    NotOnCurve(String),
    #[error("tau of order 4 or 6 (j = 0 or 1728) needs an explicit matrix")]
    TauOrderUnsupported,
    #[error("tau matrix does not fix o = (1:-1:0)")]
    TauMovesZero,
    #[error("point {0} is 3-torsion")]
    ThreeTorsionPoint(HessePoint),
    #[error("point sampling needs a prime field")]
    NotPrimeField,
    #[error("could not find curve points after {0} trials")]
    SamplingExhausted(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Quadratic(#[from] QuadraticError),
}

impl From<TensorError> for HesseError {
    fn from(e: TensorError) -> Self {
        HesseError::Quadratic(e.into())
    }
}

/// A projective point, scaled so its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HessePoint {
    coords: [FieldElement; 3],
}

impl HessePoint {
    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    fn normalized(v: [FieldElement; 3]) -> Result<Self, HesseError> {
        let last = v.iter().rev().find(|c| !c.is_zero()).ok_or(HesseError::ZeroTriple)?;
        let inv = last.inv()?;
        Ok(HessePoint {
            coords: v.map(|c| &c * &inv),
        })
    }
}

impl fmt::Display for HessePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a} : {b} : {c})")
    }
}

impl Serialize for HessePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|c| c.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HesseCurve {
    lambda: FieldElement,
}

type Triple = [FieldElement; 3];

fn dot(a: &Triple, b: &Triple) -> FieldElement {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn combine(s: &FieldElement, p: &Triple, t: &FieldElement, q: &Triple) -> Triple {
    [0, 1, 2].map(|i| &(s * &p[i]) + &(t * &q[i]))
}

impl HesseCurve {
    pub fn new(lambda: FieldElement) -> Result<Self, HesseError> {
        if lambda.pow(3).is_one() {
            return Err(HesseError::Singular);
        }
        Ok(HesseCurve { lambda })
    }

    pub fn field(&self) -> FieldSpec {
        self.lambda.spec()
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }

    fn eval(&self, p: &Triple) -> FieldElement {
        let [a, b, c] = p;
        let three = self.field().from_i64(3);
        let cubes = &(&a.pow(3) + &b.pow(3)) + &c.pow(3);
        &cubes - &(&(&three * &self.lambda) * &(&(a * b) * c))
    }

    fn gradient(&self, p: &Triple) -> Triple {
        let [a, b, c] = p;
        let three = self.field().from_i64(3);
        let l3 = &three * &self.lambda;
        [
            &(&three * &(a * a)) - &(&l3 * &(b * c)),
            &(&three * &(b * b)) - &(&l3 * &(a * c)),
            &(&three * &(c * c)) - &(&l3 * &(a * b)),
        ]
    }

    pub fn on_curve(&self, p: &Triple) -> Result<bool, HesseError> {
        if p.iter().all(|c| c.is_zero()) {
            return Err(HesseError::ZeroTriple);
        }
        Ok(self.eval(p).is_zero())
    }

    pub fn point(&self, p: Triple) -> Result<HessePoint, HesseError> {
        if !self.on_curve(&p)? {
            return Err(HesseError::NotOnCurve(p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" : ")));
        }
        HessePoint::normalized(p)
    }

    pub fn point_i64(&self, p: [i64; 3]) -> Result<HessePoint, HesseError> {
        let f = self.field();
        self.point(p.map(|c| f.from_i64(c)))
    }

    /// 27λ³(λ³+8)³/(λ³−1)³.
    pub fn j_invariant(&self) -> FieldElement {
        let f = self.field();
        let l3 = self.lambda.pow(3);
        let num = &(&f.from_i64(27) * &l3) * &(&l3 + &f.from_i64(8)).pow(3);
        &num / &(&l3 - &f.one()).pow(3)
    }

    pub fn zero(&self) -> HessePoint {
        let f = self.field();
        HessePoint::normalized([f.one(), -f.one(), f.zero()]).expect("nonzero")
    }

    /// Third point of the line through P and Q (the tangent when P = Q).
    pub fn third_intersection(&self, p: &HessePoint, q: &HessePoint) -> HessePoint {
        let (p, q) = (&p.coords, &q.coords);
        // On the line sP + tQ the cubic is st(s·∇F(P)·Q + t·∇F(Q)·P).
        let r = combine(&dot(&self.gradient(q), p), p, &-dot(&self.gradient(p), q), q);
        if r.iter().any(|c| !c.is_zero()) {
            return HessePoint::normalized(r).expect("nonzero");
        }
        let n = self.gradient(p);
        let f = self.field();
        for k in 0..3 {
            if p[k].is_zero() {
                continue;
            }
            let mut e = [f.zero(), f.zero(), f.zero()];
            e[k] = f.one();
            let d = cross(&n, &e);
            if d.iter().all(|c| c.is_zero()) {
                continue;
            }
            // D lies on the tangent and off P; the cubic is t²(s·∇F(D)·P + t·F(D)).
            let r = combine(&self.eval(&d), p, &-dot(&self.gradient(&d), p), &d);
            return HessePoint::normalized(r).expect("smooth cubic");
        }
        unreachable!("a point on a smooth cubic has a tangent direction")
    }

    pub fn neg(&self, p: &HessePoint) -> HessePoint {
        self.third_intersection(&self.zero(), p)
    }

    pub fn add(&self, p: &HessePoint, q: &HessePoint) -> HessePoint {
        self.neg(&self.third_intersection(p, q))
    }

    pub fn sub(&self, p: &HessePoint, q: &HessePoint) -> HessePoint {
        self.add(p, &self.neg(q))
    }

    pub fn smul(&self, n: i64, p: &HessePoint) -> HessePoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = self.zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_n_torsion(&self, p: &HessePoint, n: i64) -> bool {
        self.smul(n, p) == self.zero()
    }

    /// The inflection points (0:1:−ω), (1:0:−ω), (1:−ω:0), ω³ = 1, that are
    /// defined over the field.
    pub fn flexes(&self) -> Vec<HessePoint> {
        let f = self.field();
        let mut roots = vec![f.one()];
        if let Ok(z) = f.zeta() {
            roots.push(z.clone());
            roots.push(z.pow(2));
        }
        let mut out = Vec::new();
        for w in roots {
            let m = -w;
            for p in [
                [f.zero(), f.one(), m.clone()],
                [f.one(), f.zero(), m.clone()],
                [f.one(), m.clone(), f.zero()],
            ] {
                out.push(self.point(p).expect("flexes lie on every Hesse cubic"));
            }
        }
        out
    }

    /// A pseudorandom point: random (a, b), then a root c of the cubic
    /// c³ − 3λab·c + a³ + b³ found by gcd with c^p − c.
    pub fn random_point<R: Rng>(&self, rng: &mut R) -> Result<HessePoint, HesseError> {
        let FieldSpec::PrimeField(p) = self.field() else {
            return Err(HesseError::NotPrimeField);
        };
        let f = self.field();
        const TRIALS: usize = 1000;
        for _ in 0..TRIALS {
            let a = residue(f, rng.gen_range(0..p));
            let b = residue(f, rng.gen_range(0..p));
            let three = f.from_i64(3);
            let poly = vec![
                &a.pow(3) + &b.pow(3),
                -(&(&three * &self.lambda) * &(&a * &b)),
                f.zero(),
                f.one(),
            ];
            let roots = poly_roots(&poly, p, rng);
            if roots.is_empty() {
                continue;
            }
            let c = roots[rng.gen_range(0..roots.len())].clone();
            if let Ok(pt) = self.point([a, b, c]) {
                return Ok(pt);
            }
        }
        Err(HesseError::SamplingExhausted(TRIALS))
    }

    /// Random points outside E[3].
    pub fn random_nontorsion<R: Rng>(&self, rng: &mut R) -> Result<HessePoint, HesseError> {
        for _ in 0..100 {
            let p = self.random_point(rng)?;
            if !self.is_n_torsion(&p, 3) {
                return Ok(p);
            }
        }
        Err(HesseError::SamplingExhausted(100))
    }
}

fn residue(f: FieldSpec, n: u64) -> FieldElement {
    f.from_rational(&num_rational::BigRational::from_integer(BigInt::from(n))).expect("residue")
}

type Poly = Vec<FieldElement>;

fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn poly_rem(a: &Poly, m: &Poly) -> Poly {
    let mut r = trim(a.clone());
    let lead_inv = m.last().expect("nonzero modulus").inv().expect("nonzero");
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let q = &r[r.len() - 1] * &lead_inv;
        for (i, c) in m.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&q * c);
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &Poly, b: &Poly, m: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let f = a[0].spec();
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    poly_rem(&out, m)
}

fn poly_powmod(base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let f = m[0].spec();
    let mut acc = poly_rem(&vec![f.one()], m);
    let mut b = poly_rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m);
        }
        b = poly_mulmod(&b, &b, m);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last().cloned() {
        let inv = l.inv().expect("nonzero");
        a = a.iter().map(|c| c * &inv).collect();
    }
    a
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let f = a.first().or(b.first()).expect("nonempty").spec();
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
                let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
                &x - &y
            })
            .collect(),
    )
}

/// Distinct roots in 𝔽_p of a monic polynomial (Cantor–Zassenhaus).
fn poly_roots<R: Rng>(poly: &Poly, p: u64, rng: &mut R) -> Vec<FieldElement> {
    let f = poly[0].spec();
    let x = vec![f.zero(), f.one()];
    let xp = poly_powmod(&x, p, poly);
    let split = poly_gcd(poly, &poly_sub(&xp, &x));
    let mut out = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match g.len() {
            0 | 1 => {}
            2 => out.push(-(&g[0] / &g[1])),
            _ => loop {
                let d = residue(f, rng.gen_range(0..p));
                let h = poly_powmod(&vec![d, f.one()], (p - 1) / 2, &g);
                let k = poly_gcd(&g, &poly_sub(&h, &vec![f.one()]));
                if k.len() > 1 && k.len() < g.len() {
                    let other = poly_div_exact(&g, &k);
                    stack.push(k);
                    stack.push(other);
                    break;
                }
            },
        }
    }
    out
}

fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    let f = a[0].spec();
    let mut r = a.clone();
    let mut q = vec![f.zero(); a.len() - b.len() + 1];
    let inv = b.last().expect("nonzero").inv().expect("nonzero");
    for shift in (0..q.len()).rev() {
        let c = &r[shift + b.len() - 1] * &inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bc);
        }
        q[shift] = c;
    }
    q
}

/// σ = σ_p τⁱ. Without an explicit matrix τ is the inversion, valid when
/// j ∉ {0, 1728}; an explicit τ acts on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveAutomorphism {
    pub translation: HessePoint,
    pub tau_power: u32,
    pub tau_matrix: Option<Matrix>,
}

impl CurveAutomorphism {
    pub fn translation(p: HessePoint) -> Self {
        CurveAutomorphism {
            translation: p,
            tau_power: 0,
            tau_matrix: None,
        }
    }

    pub fn new(e: &HesseCurve, p: HessePoint, i: u32, tau: Option<Matrix>) -> Result<Self, HesseError> {
        let tau_power = match &tau {
            None => {
                let j = e.j_invariant();
                let f = e.field();
                if i % 2 == 1 && (j.is_zero() || j == f.from_i64(1728)) {
                    return Err(HesseError::TauOrderUnsupported);
                }
                i % 2
            }
            Some(m) => {
                let o = e.zero();
                let image = apply_matrix(m, o.coords());
                if HessePoint::normalized(image).ok() != Some(o) {
                    return Err(HesseError::TauMovesZero);
                }
                i % projective_order(m).unwrap_or(u32::MAX)
            }
        };
        Ok(CurveAutomorphism {
            translation: p,
            tau_power,
            tau_matrix: tau,
        })
    }

    pub fn apply(&self, e: &HesseCurve, q: &HessePoint) -> HessePoint {
        let mut r = q.clone();
        for _ in 0..self.tau_power {
            r = match &self.tau_matrix {
                None => e.neg(&r),
                Some(m) => HessePoint::normalized(apply_matrix(m, r.coords())).expect("invertible"),
            };
        }
        e.add(&self.translation, &r)
    }
}

fn apply_matrix(m: &Matrix, v: &Triple) -> Triple {
    [0, 1, 2].map(|i| {
        let row: Triple = [0, 1, 2].map(|j| m.get(i, j).clone());
        dot(&row, v)
    })
}

fn projective_order(m: &Matrix) -> Option<u32> {
    let f = m.field();
    let id = LinearMap::identity(f);
    let mut acc = m.clone();
    for k in 1..=12u32 {
        if LinearMap::from_matrix(acc.clone()).ok()?.ratio_to(&id).is_some() {
            return Some(k);
        }
        acc = acc.mul(m).ok()?;
    }
    None
}

fn word3(a: Var, b: Var, c: Var) -> Word {
    Word(vec![a, b, c])
}

/// a(xyz+yzx+zxy) + b(xzy+zyx+yxz) + c(x³+y³+z³) for p = (a:b:c).
pub fn sklyanin_potential(p: &HessePoint) -> Tensor {
    use Var::{X, Y, Z};
    let [a, b, c] = p.coords().clone();
    let f = a.spec();
    let terms = [
        (word3(X, Y, Z), a.clone()),
        (word3(Y, Z, X), a.clone()),
        (word3(Z, X, Y), a),
        (word3(X, Z, Y), b.clone()),
        (word3(Z, Y, X), b.clone()),
        (word3(Y, X, Z), b),
        (word3(X, X, X), c.clone()),
        (word3(Y, Y, Y), c.clone()),
        (word3(Z, Z, Z), c),
    ];
    Tensor::from_terms(f, 3, terms).expect("degree 3")
}

/// The relations ayz + bzy + cx², azx + bxz + cy², axy + byx + cz².
pub fn sklyanin_relations(p: &HessePoint) -> [Tensor; 3] {
    use Var::{X, Y, Z};
    let [a, b, c] = p.coords().clone();
    let f = a.spec();
    let rel = |u: Var, v: Var, s: Var| {
        Tensor::from_terms(
            f,
            2,
            [
                (Word(vec![u, v]), a.clone()),
                (Word(vec![v, u]), b.clone()),
                (Word(vec![s, s]), c.clone()),
            ],
        )
        .expect("degree 2")
    };
    [rel(Y, Z, X), rel(Z, X, Y), rel(X, Y, Z)]
}

pub fn sklyanin(e: &HesseCurve, p: &HessePoint) -> Result<QuadraticAlgebra, HesseError> {
    if e.is_n_torsion(p, 3) {
        return Err(HesseError::ThreeTorsionPoint(p.clone()));
    }
    Ok(QuadraticAlgebra::new(e.field(), &sklyanin_relations(p))?)
}

/// D(w^θ) for the Sklyanin potential w at p, with θ = id (i = 0) or the
/// swap x ↔ y (i = 1), which realizes σ_p τ.
pub fn twisted_sklyanin(e: &HesseCurve, p: &HessePoint, i: u32) -> Result<QuadraticAlgebra, HesseError> {
    if e.is_n_torsion(p, 3) {
        return Err(HesseError::ThreeTorsionPoint(p.clone()));
    }
    let w = sklyanin_potential(p);
    let w = if i % 2 == 1 {
        w.ms_twist(&LinearMap::swap_xy(e.field()))?
    } else {
        w
    };
    Ok(derivation_quotient(&w)?)
}

/// Whether p ⊖ τⁱ(p) ∈ E[3].
pub fn ec_regular(e: &HesseCurve, p: &HessePoint, i: u32, tau: Option<Matrix>) -> Result<bool, HesseError> {
    if e.is_n_torsion(p, 3) {
        return Err(HesseError::ThreeTorsionPoint(p.clone()));
    }
    let sigma = CurveAutomorphism::new(e, e.zero(), i, tau)?;
    let tp = sigma.apply(e, p);
    Ok(e.is_n_torsion(&e.sub(p, &tp), 3))
}

fn bilinear(rel: &Tensor, q: &Triple, s: &Triple) -> FieldElement {
    let f = rel.field();
    rel.terms().iter().fold(f.zero(), |acc, (w, c)| {
        &acc + &(&(c * &q[w.0[0].index()]) * &s[w.0[1].index()])
    })
}

/// Every relation vanishes on (q, σ(q)) for `samples` random q ∈ E.
pub fn g1_graph_check<R: Rng>(
    a: &QuadraticAlgebra,
    e: &HesseCurve,
    sigma: &CurveAutomorphism,
    samples: usize,
    rng: &mut R,
) -> Result<bool, HesseError> {
    for _ in 0..samples {
        let q = e.random_point(rng)?;
        let s = sigma.apply(e, &q);
        if a.relations.basis().iter().any(|r| !bilinear(r, q.coords(), s.coords()).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A matrix N with N·q ∝ σ(q) on E, if σ extends to a linear automorphism
/// of the plane.
pub fn linear_extension<R: Rng>(
    e: &HesseCurve,
    sigma: &CurveAutomorphism,
    samples: usize,
    rng: &mut R,
) -> Result<Option<Matrix>, HesseError> {
    let f = e.field();
    let samples = samples.max(8);
    let mut rows = Vec::new();
    for _ in 0..samples {
        let q = e.random_point(rng)?;
        let s = sigma.apply(e, &q);
        let (q, s) = (q.coords(), s.coords());
        // (N q) × s = 0; unknown N_ij sits at column 3i + j.
        for (i1, i2) in [(1, 2), (2, 0), (0, 1)] {
            let mut row = vec![f.zero(); 9];
            for j in 0..3 {
                row[3 * i1 + j] = &row[3 * i1 + j] + &(&q[j] * &s[i2]);
                row[3 * i2 + j] = &row[3 * i2 + j] - &(&q[j] * &s[i1]);
            }
            rows.push(row);
        }
    }
    let kernel = Matrix::from_rows(f, rows).expect("9 columns").kernel();
    if kernel.len() != 1 {
        return Ok(None);
    }
    let n = Matrix::from_rows(f, kernel[0].chunks(3).map(|c| c.to_vec()).collect()).expect("3x3");
    if !n.is_invertible() {
        return Ok(None);
    }
    for _ in 0..samples {
        let q = e.random_point(rng)?;
        let image = HessePoint::normalized(apply_matrix(&n, q.coords()))?;
        if image != sigma.apply(e, &q) {
            return Ok(None);
        }
    }
    Ok(Some(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_invariant_values() {
        let q = FieldSpec::Rationals;
        let e = HesseCurve::new(q.from_i64(2)).unwrap();
        assert_eq!(e.j_invariant(), q.from_ratio(884736, 343).unwrap());
        let e = HesseCurve::new(q.from_i64(-1)).unwrap();
        assert_eq!(e.j_invariant(), q.from_ratio(9261, 8).unwrap());
        assert!(HesseCurve::new(q.from_i64(0)).unwrap().j_invariant().is_zero());
        assert_eq!(HesseCurve::new(q.one()), Err(HesseError::Singular));
    }

    #[test]
    fn chord_on_fermat_cubic() {
        let q = FieldSpec::Rationals;
        let e = HesseCurve::new(q.zero()).unwrap();
        let o = e.zero();
        assert_eq!(e.third_intersection(&o, &o), o);
        let p = e.point_i64([1, 0, -1]).unwrap();
        assert_eq!(e.third_intersection(&o, &p), e.point_i64([0, 1, -1]).unwrap());
        assert!(e.is_n_torsion(&p, 3));
    }

    #[test]
    fn cubic_roots_mod_p() {
        use rand::SeedableRng;
        let f = FieldSpec::PrimeField(1000003);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        // (c-1)(c-2)(c-3)
        let poly = vec![f.from_i64(-6), f.from_i64(11), f.from_i64(-6), f.one()];
        let mut r = poly_roots(&poly, 1000003, &mut rng);
        r.sort_by_key(|c| c.residue());
        assert_eq!(r, vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)]);
    }
}
