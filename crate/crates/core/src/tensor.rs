//! Homogeneous noncommutative polynomials in x, y, z and the operations on
//! potentials: cyclic rotation, partial derivatives, GL(V) actions, MS twists
//! and the (twisted) superpotential tests.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::matrix::{Matrix, MatrixError, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("expected a tensor of degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("zero potential")]
    ZeroPotential,
    #[error("linear map is singular")]
    SingularMap,
    #[error("{0}")]
    Shape(String),
}

impl From<MatrixError> for TensorError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::Field(f) => TensorError::Field(f),
            MatrixError::Dimension(s) => TensorError::Shape(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }

    pub fn from_letter(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A word in x, y, z. Ordering is lexicographic with x < y < z, which for
/// words of equal length matches the base-3 coordinate index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Var>);

impl Word {
    pub fn parse(s: &str) -> Option<Word> {
        s.chars().map(Var::from_letter).collect::<Option<Vec<_>>>().map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, v| acc * 3 + v.index())
    }

    pub fn from_index(mut idx: usize, len: usize) -> Word {
        let mut letters = vec![Var::X; len];
        for slot in letters.iter_mut().rev() {
            *slot = Var::from_index(idx % 3);
            idx /= 3;
        }
        Word(letters)
    }

    pub fn all(len: usize) -> impl Iterator<Item = Word> {
        (0..3usize.pow(len as u32)).map(move |i| Word::from_index(i, len))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    degree: usize,
    field: FieldSpec,
    terms: BTreeMap<Word, FieldElement>,
}

impl Tensor {
    pub fn zero(field: FieldSpec, degree: usize) -> Self {
        Tensor {
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Word, coeff: FieldElement) -> Self {
        let mut t = Tensor::zero(coeff.spec(), word.len());
        t.add_term(word, coeff);
        t
    }

    pub fn var(field: FieldSpec, v: Var) -> Self {
        Tensor::monomial(Word(vec![v]), field.one())
    }

    pub fn from_terms(
        field: FieldSpec,
        degree: usize,
        terms: impl IntoIterator<Item = (Word, FieldElement)>,
    ) -> Result<Self, TensorError> {
        let mut t = Tensor::zero(field, degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(TensorError::DegreeMismatch {
                    expected: degree,
                    found: w.len(),
                });
            }
            if c.spec() != field {
                return Err(FieldError::FieldMismatch(field, c.spec()).into());
            }
            t.add_term(w, c);
        }
        Ok(t)
    }

    /// Coefficient vector in the base-3 word order (xx, xy, xz, yx, ...).
    pub fn coords(&self) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); 3usize.pow(self.degree as u32)];
        for (w, c) in &self.terms {
            v[w.index()] = c.clone();
        }
        v
    }

    pub fn from_coords(field: FieldSpec, degree: usize, coords: &[FieldElement]) -> Self {
        let mut t = Tensor::zero(field, degree);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                t.terms.insert(Word::from_index(i, degree), c.clone());
            }
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> FieldElement {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, w: Word, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn check_compatible(&self, other: &Tensor) -> Result<(), TensorError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch(self.field, other.field).into());
        }
        if self.degree != other.degree {
            return Err(TensorError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        self.check_compatible(other)?;
        let mut t = self.clone();
        for (w, c) in &other.terms {
            t.add_term(w.clone(), c.clone());
        }
        Ok(t)
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &FieldElement) -> Tensor {
        let mut t = Tensor::zero(self.field, self.degree);
        if s.is_zero() {
            return t;
        }
        for (w, c) in &self.terms {
            t.terms.insert(w.clone(), c * s);
        }
        t
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Result<Tensor, TensorError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch(self.field, other.field).into());
        }
        let mut t = Tensor::zero(self.field, self.degree + other.degree);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                t.add_term(a.concat(b), c * d);
            }
        }
        Ok(t)
    }

    fn require_degree(&self, d: usize) -> Result<(), TensorError> {
        if self.degree != d {
            return Err(TensorError::DegreeMismatch {
                expected: d,
                found: self.degree,
            });
        }
        Ok(())
    }

    /// φ(abc) = cab.
    pub fn cyclic(&self) -> Result<Tensor, TensorError> {
        self.require_degree(3)?;
        let mut t = Tensor::zero(self.field, 3);
        for (w, c) in &self.terms {
            let l = &w.0;
            t.terms.insert(Word(vec![l[2], l[0], l[1]]), c.clone());
        }
        Ok(t)
    }

    /// Left partial derivative: `w = x⊗∂_x w + y⊗∂_y w + z⊗∂_z w`.
    pub fn partial(&self, v: Var) -> Result<Tensor, TensorError> {
        if self.degree == 0 {
            return Err(TensorError::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut t = Tensor::zero(self.field, self.degree - 1);
        for (w, c) in &self.terms {
            if w.0[0] == v {
                t.terms.insert(Word(w.0[1..].to_vec()), c.clone());
            }
        }
        Ok(t)
    }

    /// Right partial derivative: `w = Σ ∂^r_v w ⊗ v`.
    pub fn right_partial(&self, v: Var) -> Result<Tensor, TensorError> {
        if self.degree == 0 {
            return Err(TensorError::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut t = Tensor::zero(self.field, self.degree - 1);
        for (w, c) in &self.terms {
            if w.0[self.degree - 1] == v {
                t.terms.insert(Word(w.0[..self.degree - 1].to_vec()), c.clone());
            }
        }
        Ok(t)
    }

    pub fn partials(&self) -> Result<[Tensor; 3], TensorError> {
        Ok([
            self.partial(Var::X)?,
            self.partial(Var::Y)?,
            self.partial(Var::Z)?,
        ])
    }

    /// Applies `maps[k]` to the k-th tensor slot.
    pub fn gl_apply(&self, maps: &[&LinearMap]) -> Result<Tensor, TensorError> {
        if maps.len() != self.degree {
            return Err(TensorError::DegreeMismatch {
                expected: maps.len(),
                found: self.degree,
            });
        }
        for m in maps {
            if m.field() != self.field {
                return Err(FieldError::FieldMismatch(self.field, m.field()).into());
            }
        }
        let mut current: BTreeMap<Word, FieldElement> = self.terms.clone();
        for (slot, map) in maps.iter().enumerate() {
            let mut next = Tensor::zero(self.field, self.degree);
            for (w, c) in &current {
                let row = map.matrix.row(w.0[slot].index());
                for (j, e) in row.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.0[slot] = Var::from_index(j);
                    next.add_term(nw, c * e);
                }
            }
            current = next.terms;
        }
        Ok(Tensor {
            degree: self.degree,
            field: self.field,
            terms: current,
        })
    }

    pub fn gl_apply_uniform(&self, map: &LinearMap) -> Result<Tensor, TensorError> {
        let maps = vec![map; self.degree];
        self.gl_apply(&maps)
    }

    /// Mori–Smith twist `w^θ = (θ²⊗θ⊗id)(w)`.
    pub fn ms_twist(&self, theta: &LinearMap) -> Result<Tensor, TensorError> {
        self.require_degree(3)?;
        let sq = theta.pow(2);
        let id = LinearMap::identity(self.field);
        self.gl_apply(&[&sq, theta, &id])
    }

    pub fn is_superpotential(&self) -> Result<bool, TensorError> {
        Ok(self.cyclic()? == *self)
    }

    /// Checks `(θ′⊗id⊗id)(φ(w)) = w`.
    pub fn is_twisted_by(&self, theta: &LinearMap) -> Result<bool, TensorError> {
        let id = LinearMap::identity(self.field);
        Ok(self.cyclic()?.gl_apply(&[theta, &id, &id])? == *self)
    }

    /// Searches for an invertible θ′ with `(θ′⊗id⊗id)φ(w) = w`.
    pub fn twisted_witness(&self) -> Result<TwistedWitness, TensorError> {
        self.require_degree(3)?;
        let f = self.field;
        let phi = self.cyclic()?;
        let u: Vec<Vec<FieldElement>> = Var::ALL
            .iter()
            .map(|&v| phi.partial(v).map(|t| t.coords()))
            .collect::<Result<_, _>>()?;
        let wk: Vec<Vec<FieldElement>> = Var::ALL
            .iter()
            .map(|&v| self.partial(v).map(|t| t.coords()))
            .collect::<Result<_, _>>()?;
        // θ′(x_j) = Σ_k t_jk x_k, so the x_k-component reads Σ_j t_jk u_j = w_k.
        let mut a = Matrix::zeros(f, 27, 9);
        let mut b = Matrix::zeros(f, 27, 1);
        for k in 0..3 {
            for s in 0..9 {
                let row = 9 * k + s;
                for j in 0..3 {
                    a.set(row, 3 * j + k, u[j][s].clone());
                }
                b.set(row, 0, wk[k][s].clone());
            }
        }
        let to_map = |v: &[FieldElement]| {
            LinearMap::from_matrix(
                Matrix::from_rows(f, v.chunks(3).map(|c| c.to_vec()).collect()).expect("3x3"),
            )
            .expect("3x3")
        };
        let accept = |m: LinearMap| -> Result<Option<LinearMap>, TensorError> {
            if m.is_invertible() && self.is_twisted_by(&m)? {
                Ok(Some(m))
            } else {
                Ok(None)
            }
        };
        match a.solve(&b)? {
            Solution::Inconsistent => Ok(TwistedWitness::None),
            Solution::Unique(x) => {
                let col: Vec<FieldElement> = (0..9).map(|i| x.get(i, 0).clone()).collect();
                Ok(match accept(to_map(&col))? {
                    Some(m) => TwistedWitness::Witness(m),
                    None => TwistedWitness::None,
                })
            }
            Solution::Underdetermined { particular, kernel } => {
                if let Some(m) = accept(LinearMap::identity(f))? {
                    return Ok(TwistedWitness::Witness(m));
                }
                let base: Vec<FieldElement> =
                    (0..9).map(|i| particular.get(i, 0).clone()).collect();
                for cand in witness_candidates(f, &base, &kernel) {
                    if let Some(m) = accept(to_map(&cand))? {
                        return Ok(TwistedWitness::Witness(m));
                    }
                }
                Ok(TwistedWitness::UndeterminedInvertibility)
            }
        }
    }

    /// λ with `θ^{⊗3}(w) = λ w`, if it exists.
    pub fn aut_scalar(&self, theta: &LinearMap) -> Result<AutScalar, TensorError> {
        if self.is_zero() {
            return Err(TensorError::ZeroPotential);
        }
        if !theta.is_invertible() {
            return Err(TensorError::SingularMap);
        }
        let img = self.gl_apply_uniform(theta)?;
        let (w, c) = self.terms.iter().next().expect("nonzero");
        let lambda = &img.coeff(w) / c;
        if img == self.scale(&lambda) && !lambda.is_zero() {
            Ok(AutScalar::Scalar(lambda))
        } else {
            Ok(AutScalar::NotProportional)
        }
    }

    /// Scales so the lexicographically smallest word has coefficient 1.
    pub fn normalize(&self) -> Tensor {
        match self.terms.values().next() {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn proportional_to(&self, other: &Tensor) -> bool {
        self.field == other.field && self.degree == other.degree && self.normalize() == other.normalize()
    }

    /// The scalar c with `self = c·other`, if any.
    pub fn ratio_to(&self, other: &Tensor) -> Option<FieldElement> {
        let (w, c) = other.terms.iter().next()?;
        let r = &self.coeff(w) / c;
        (other.scale(&r) == *self).then_some(r)
    }
}

/// Particular solution, single kernel offsets, then integer combinations with
/// coefficients in {−2..2} (only for kernels of dimension ≤ 6).
fn witness_candidates(
    f: FieldSpec,
    base: &[FieldElement],
    kernel: &[Vec<FieldElement>],
) -> Vec<Vec<FieldElement>> {
    let combine = |coeffs: &[i64]| -> Vec<FieldElement> {
        let mut v = base.to_vec();
        for (c, k) in coeffs.iter().zip(kernel) {
            if *c == 0 {
                continue;
            }
            let c = f.from_i64(*c);
            for (vi, ki) in v.iter_mut().zip(k) {
                *vi = &*vi + &(&c * ki);
            }
        }
        v
    };
    let n = kernel.len();
    let mut out = vec![base.to_vec()];
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        out.push(combine(&c));
    }
    if n <= 6 {
        let total = 5usize.pow(n as u32);
        for mut idx in 0..total {
            let mut c = vec![0i64; n];
            for slot in c.iter_mut() {
                *slot = (idx % 5) as i64 - 2;
                idx /= 5;
            }
            out.push(combine(&c));
        }
    }
    out
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag_s = mag.to_string();
            if !mag.is_one() {
                if mag_s.contains(['+', '-']) {
                    write!(f, "({mag_s})*")?;
                } else {
                    write!(f, "{mag_s}*")?;
                }
            }
            let letters: Vec<String> = w.0.iter().map(|v| v.letter().to_string()).collect();
            write!(f, "{}", letters.join("*"))?;
        }
        Ok(())
    }
}

fn split_sign(c: &FieldElement) -> (bool, FieldElement) {
    match c {
        FieldElement::Rational(q) if q < &num_rational::BigRational::from_integer(0.into()) => {
            (true, -c)
        }
        FieldElement::Cyclotomic(a, b) => {
            use num_traits::{Signed, Zero};
            let lead_neg = if a.is_zero() { b.is_negative() } else { a.is_negative() };
            if lead_neg {
                (true, -c)
            } else {
                (false, c.clone())
            }
        }
        _ => (false, c.clone()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistedWitness {
    Witness(LinearMap),
    None,
    UndeterminedInvertibility,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutScalar {
    Scalar(FieldElement),
    NotProportional,
}

/// A linear endomorphism of V = span(x, y, z). Row i of the matrix holds the
/// coordinates of the image of the i-th basis vector: θ(x_i) = Σ_j θ_ij x_j.
/// With this convention θ∘η has matrix η·θ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn from_matrix(matrix: Matrix) -> Result<Self, TensorError> {
        if matrix.rows() != 3 || matrix.cols() != 3 {
            return Err(TensorError::Shape(format!(
                "linear map needs a 3x3 matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap { matrix })
    }

    pub fn from_i64(field: FieldSpec, rows: [[i64; 3]; 3]) -> Self {
        let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        LinearMap {
            matrix: Matrix::from_i64(field, &r),
        }
    }

    pub fn identity(field: FieldSpec) -> Self {
        LinearMap {
            matrix: Matrix::identity(field, 3),
        }
    }

    pub fn diagonal(d: [FieldElement; 3]) -> Self {
        let field = d[0].spec();
        let mut m = Matrix::zeros(field, 3, 3);
        for (i, e) in d.into_iter().enumerate() {
            m.set(i, i, e);
        }
        LinearMap { matrix: m }
    }

    /// The transposition x ↔ y.
    pub fn swap_xy(field: FieldSpec) -> Self {
        LinearMap::from_i64(field, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn image(&self, v: Var) -> Tensor {
        let coords = self.matrix.row(v.index()).to_vec();
        Tensor::from_coords(self.field(), 1, &coords)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: other.matrix.mul(&self.matrix).expect("3x3"),
        }
    }

    pub fn pow(&self, n: u32) -> LinearMap {
        LinearMap {
            matrix: self.matrix.pow(n),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(s),
        }
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(|matrix| LinearMap { matrix })
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.field(), 3)
    }

    /// The scalar c with `self = c·other`, if any.
    pub fn ratio_to(&self, other: &LinearMap) -> Option<FieldElement> {
        let f = self.field();
        let mut ratio: Option<FieldElement> = None;
        for i in 0..3 {
            for j in 0..3 {
                let a = self.matrix.get(i, j);
                let b = other.matrix.get(i, j);
                match (a.is_zero(), b.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let r = a / b;
                        if ratio.as_ref().is_some_and(|q| *q != r) {
                            return None;
                        }
                        ratio = Some(r);
                    }
                    _ => return None,
                }
            }
        }
        Some(ratio.unwrap_or_else(|| f.one()))
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}
