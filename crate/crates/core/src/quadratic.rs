//! Quadratic algebras T(V)/(R) on x, y, z: derivation quotients, the relation
//! matrix M and standardness, Zhang twists, the quadratic dual with its
//! Nakayama automorphism, and truncated Hilbert dimensions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::matrix::{Echelon, Matrix, SparseVec};
use crate::tensor::{LinearMap, Tensor, TensorError, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("partial derivatives span only a {rank}-dimensional space")]
    DegeneratePotential { rank: usize },
    #[error("the given tensors are not a basis of the relation space")]
    NotABasis,
    #[error("linear map is singular")]
    SingularMap,
    #[error("dual dimensions {dims:?} differ from (1, 3, 3, 1, 0)")]
    NotFrobeniusShape { dims: Vec<usize> },
    #[error("Frobenius pairing is degenerate")]
    DegeneratePairing,
    #[error("degree bound {0} exceeds 6")]
    DegreeTooLarge(usize),
    #[error("relations must have degree 2")]
    NotQuadratic,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// A subspace of V⊗V. `canonical` is its reduced row-echelon basis in the
/// coordinates (xx, xy, xz, yx, yy, yz, zx, zy, zz), so two spaces are equal
/// exactly when their canonical matrices are.
#[derive(Debug, Clone)]
pub struct RelationSpace {
    field: FieldSpec,
    basis: Vec<Tensor>,
    canonical: Matrix,
}

impl PartialEq for RelationSpace {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for RelationSpace {}

impl RelationSpace {
    /// Span of `rels`. If they are independent they are kept as the basis,
    /// otherwise the canonical rows are.
    pub fn span(field: FieldSpec, rels: &[Tensor]) -> Result<Self, QuadraticError> {
        for r in rels {
            if r.degree() != 2 {
                return Err(QuadraticError::NotQuadratic);
            }
            if r.field() != field {
                return Err(TensorError::Field(crate::FieldError::FieldMismatch(field, r.field())).into());
            }
        }
        let m = if rels.is_empty() {
            Matrix::zeros(field, 0, 9)
        } else {
            Matrix::from_rows(field, rels.iter().map(Tensor::coords).collect()).expect("9 columns")
        };
        let rr = m.rref();
        let canonical = if rr.rank == 0 {
            Matrix::zeros(field, 0, 9)
        } else {
            Matrix::from_rows(field, (0..rr.rank).map(|i| rr.matrix.row(i).to_vec()).collect())
                .expect("9 columns")
        };
        let basis = if rr.rank == rels.len() {
            rels.to_vec()
        } else {
            (0..rr.rank)
                .map(|i| Tensor::from_coords(field, 2, canonical.row(i)))
                .collect()
        };
        Ok(RelationSpace {
            field,
            basis,
            canonical,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.canonical.rows()
    }

    pub fn basis(&self) -> &[Tensor] {
        &self.basis
    }

    pub fn canonical(&self) -> &Matrix {
        &self.canonical
    }

    pub fn canonical_basis(&self) -> Vec<Tensor> {
        (0..self.dim())
            .map(|i| Tensor::from_coords(self.field, 2, self.canonical.row(i)))
            .collect()
    }

    /// Basis of R^⊥ in V*⊗V* under the pairing ⟨x_i x_j, ξ_k ξ_l⟩ = δ_ik δ_jl.
    pub fn perp(&self) -> Vec<Vec<FieldElement>> {
        if self.dim() == 0 {
            return (0..9)
                .map(|i| {
                    let mut v = vec![self.field.zero(); 9];
                    v[i] = self.field.one();
                    v
                })
                .collect();
        }
        self.canonical.kernel()
    }

    pub fn contains(&self, t: &Tensor) -> bool {
        if t.degree() != 2 {
            return false;
        }
        let c = t.coords();
        self.perp().iter().all(|p| {
            p.iter()
                .zip(&c)
                .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    }

    /// `(a⊗b)(R)`.
    pub fn apply(&self, a: &LinearMap, b: &LinearMap) -> Result<RelationSpace, QuadraticError> {
        let imgs = self
            .basis
            .iter()
            .map(|t| t.gl_apply(&[a, b]))
            .collect::<Result<Vec<_>, _>>()?;
        RelationSpace::span(self.field, &imgs)
    }
}

impl fmt::Display for RelationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.canonical_basis().iter().map(|t| t.to_string()).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    pub relations: RelationSpace,
}

impl QuadraticAlgebra {
    pub fn new(field: FieldSpec, rels: &[Tensor]) -> Result<Self, QuadraticError> {
        Ok(QuadraticAlgebra {
            relations: RelationSpace::span(field, rels)?,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.relations.field()
    }
}

/// D(w) = T(V)/(∂_x w, ∂_y w, ∂_z w).
pub fn derivation_quotient(w: &Tensor) -> Result<QuadraticAlgebra, QuadraticError> {
    if w.degree() != 3 {
        return Err(TensorError::DegreeMismatch {
            expected: 3,
            found: w.degree(),
        }
        .into());
    }
    let parts = w.partials()?;
    let a = QuadraticAlgebra::new(w.field(), &parts)?;
    if a.relations.dim() < 3 {
        return Err(QuadraticError::DegeneratePotential {
            rank: a.relations.dim(),
        });
    }
    Ok(a)
}

/// The 3×3 matrix of linear forms with f_i = Σ_j M_ij ⊗ x_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormMatrix {
    pub entries: [[Tensor; 3]; 3],
}

impl LinearFormMatrix {
    pub fn from_relations(basis: &[Tensor; 3]) -> Result<Self, QuadraticError> {
        let mut rows: Vec<[Tensor; 3]> = Vec::with_capacity(3);
        for f in basis {
            if f.degree() != 2 {
                return Err(QuadraticError::NotQuadratic);
            }
            rows.push([
                f.right_partial(Var::X)?,
                f.right_partial(Var::Y)?,
                f.right_partial(Var::Z)?,
            ]);
        }
        let entries: [[Tensor; 3]; 3] = rows.try_into().expect("three rows");
        Ok(LinearFormMatrix { entries })
    }

    pub fn field(&self) -> FieldSpec {
        self.entries[0][0].field()
    }

    /// Left multiplication by a scalar matrix: (P·M)_ij = Σ_k P_ik M_kj.
    pub fn left_mul(&self, p: &Matrix) -> LinearFormMatrix {
        let f = self.field();
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Tensor::zero(f, 1), |acc, k| {
                    acc.add(&self.entries[k][j].scale(p.get(i, k))).expect("degree 1")
                })
            })
        });
        LinearFormMatrix { entries }
    }

    /// Entries of the row vector x^t M: g_j = Σ_i x_i ⊗ M_ij.
    pub fn xt_m(&self) -> [Tensor; 3] {
        let f = self.field();
        std::array::from_fn(|j| {
            (0..3).fold(Tensor::zero(f, 2), |acc, i| {
                let xi = Tensor::var(f, Var::from_index(i));
                acc.add(&xi.tensor(&self.entries[i][j]).expect("same field"))
                    .expect("degree 2")
            })
        })
    }

    /// Entries of M x: f_i = Σ_j M_ij ⊗ x_j.
    pub fn m_x(&self) -> [Tensor; 3] {
        let f = self.field();
        std::array::from_fn(|i| {
            (0..3).fold(Tensor::zero(f, 2), |acc, j| {
                let xj = Tensor::var(f, Var::from_index(j));
                acc.add(&self.entries[i][j].tensor(&xj).expect("same field"))
                    .expect("degree 2")
            })
        })
    }
}

impl fmt::Display for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|t| t.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn check_basis(a: &QuadraticAlgebra, basis: &[Tensor; 3]) -> Result<(), QuadraticError> {
    let span = RelationSpace::span(a.field(), basis)?;
    if span.dim() != 3 || span != a.relations {
        return Err(QuadraticError::NotABasis);
    }
    Ok(())
}

pub fn relation_matrix(
    a: &QuadraticAlgebra,
    basis: &[Tensor; 3],
) -> Result<LinearFormMatrix, QuadraticError> {
    check_basis(a, basis)?;
    LinearFormMatrix::from_relations(basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Standardness {
    /// `change` is the invertible P for which the entries of x^t(PM) are a
    /// basis of R; P is the identity when the given basis already works.
    Standard { change: Matrix, matrix: LinearFormMatrix },
    NotStandard,
    /// Both determinant forms are nonzero but sampling found no common
    /// nonvanishing point; only possible over a small finite field.
    Undetermined,
}

fn spans_r(a: &QuadraticAlgebra, g: &[Tensor; 3]) -> bool {
    RelationSpace::span(a.field(), g).is_ok_and(|s| s.dim() == 3 && s == a.relations)
}

fn to_p(f: FieldSpec, v: &[FieldElement]) -> Matrix {
    Matrix::from_rows(f, v.chunks(3).map(|c| c.to_vec()).collect()).expect("3x3")
}

/// Determinant of a 3×3 matrix of linear forms in `n` variables, as a map
/// from sorted variable triples to coefficients (zero terms dropped).
fn cubic_det(
    f: FieldSpec,
    n: usize,
    forms: &[Vec<Vec<FieldElement>>],
) -> std::collections::BTreeMap<[usize; 3], FieldElement> {
    let mut out = std::collections::BTreeMap::new();
    let perms = [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
    for (perm, sign) in perms {
        let sign = f.from_i64(sign);
        for a in 0..n {
            let ca = &forms[0][perm[0]][a];
            if ca.is_zero() {
                continue;
            }
            for b in 0..n {
                let cb = &forms[1][perm[1]][b];
                if cb.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let cc = &forms[2][perm[2]][c];
                    if cc.is_zero() {
                        continue;
                    }
                    let mut key = [a, b, c];
                    key.sort_unstable();
                    let e = out.entry(key).or_insert_with(|| f.zero());
                    *e = &*e + &(&sign * &(ca * &(cb * cc)));
                }
            }
        }
    }
    out.retain(|_, v: &mut FieldElement| !v.is_zero());
    out
}

/// Searches for a basis change P of R making x^t(PM) a basis of R.
pub fn standard_form(
    a: &QuadraticAlgebra,
    basis: &[Tensor; 3],
) -> Result<Standardness, QuadraticError> {
    let m = relation_matrix(a, basis)?;
    let f = a.field();
    if spans_r(a, &m.xt_m()) {
        return Ok(Standardness::Standard {
            change: Matrix::identity(f, 3),
            matrix: m,
        });
    }
    // g'_j = Σ_{i,k} P_ik x_i ⊗ M_kj must satisfy every R^⊥ functional.
    let perp = a.relations.perp();
    let mut sys = Matrix::zeros(f, 3 * perp.len(), 9);
    for j in 0..3 {
        for i in 0..3 {
            let xi = Tensor::var(f, Var::from_index(i));
            for k in 0..3 {
                let c = xi.tensor(&m.entries[k][j]).expect("same field").coords();
                for (r, p) in perp.iter().enumerate() {
                    let val = p.iter().zip(&c).fold(f.zero(), |acc, (u, v)| acc + u * v);
                    sys.set(j * perp.len() + r, 3 * i + k, val);
                }
            }
        }
    }
    let kernel = sys.kernel();
    if kernel.is_empty() {
        return Ok(Standardness::NotStandard);
    }
    // On P(t) = Σ t_l k_l both det P(t) and the determinant of the
    // coordinates of x^t P(t) M in the canonical basis of R are cubic forms;
    // P exists iff neither form vanishes identically.
    let n = kernel.len();
    let pivots = a.relations.canonical().rref().pivots;
    let mut p_forms: Vec<Vec<Vec<FieldElement>>> = vec![vec![Vec::new(); 3]; 3];
    let mut g_forms: Vec<Vec<Vec<FieldElement>>> = vec![vec![Vec::new(); 3]; 3];
    for k in &kernel {
        let p = to_p(f, k);
        let g = m.left_mul(&p).xt_m();
        for i in 0..3 {
            for j in 0..3 {
                p_forms[i][j].push(p.get(i, j).clone());
            }
        }
        for (j, gj) in g.iter().enumerate() {
            let c = gj.coords();
            for (r, &piv) in pivots.iter().enumerate() {
                g_forms[j][r].push(c[piv].clone());
            }
        }
    }
    if cubic_det(f, n, &p_forms).is_empty() || cubic_det(f, n, &g_forms).is_empty() {
        return Ok(Standardness::NotStandard);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let mut v = vec![f.zero(); 9];
        for k in &kernel {
            let c = f.from_i64(rng.gen_range(-1000..=1000));
            for (vi, ki) in v.iter_mut().zip(k) {
                *vi = &*vi + &(&c * ki);
            }
        }
        let p = to_p(f, &v);
        if !p.is_invertible() {
            continue;
        }
        let pm = m.left_mul(&p);
        if spans_r(a, &pm.xt_m()) {
            return Ok(Standardness::Standard { change: p, matrix: pm });
        }
    }
    Ok(Standardness::Undetermined)
}

pub fn is_standard(a: &QuadraticAlgebra, basis: &[Tensor; 3]) -> Result<bool, QuadraticError> {
    Ok(matches!(standard_form(a, basis)?, Standardness::Standard { .. }))
}

/// Relations of the Zhang twist A^θ: (id⊗θ⁻¹)(R).
pub fn zhang_twist(a: &QuadraticAlgebra, theta: &LinearMap) -> Result<QuadraticAlgebra, QuadraticError> {
    let inv = theta.inverse().ok_or(QuadraticError::SingularMap)?;
    let id = LinearMap::identity(a.field());
    Ok(QuadraticAlgebra {
        relations: a.relations.apply(&id, &inv)?,
    })
}

/// Whether (g⊗g)(R_A) = R_B.
pub fn relations_equal_up_to(
    a: &QuadraticAlgebra,
    b: &QuadraticAlgebra,
    g: &LinearMap,
) -> Result<bool, QuadraticError> {
    if !g.is_invertible() {
        return Err(QuadraticError::SingularMap);
    }
    Ok(a.relations.apply(g, g)? == b.relations)
}

/// The quadratic dual A^! = T(V*)/(R^⊥) through degree 4, its top-degree
/// functional and Nakayama automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusData {
    /// dim A^!_n for n = 0..=4.
    pub dims: Vec<usize>,
    /// Basis of R^⊥ ⊂ V*⊗V*.
    pub perp: Vec<Vec<FieldElement>>,
    /// The functional on (V*)^{⊗3} vanishing on the degree-3 part of the ideal,
    /// as its 27 values ω(ξ_a ξ_b ξ_c).
    pub top_functional: Vec<FieldElement>,
    /// ν with ν(ξ_a) = Σ_b ν_ab ξ_b, characterised by ω(u·v) = ω(v·ν(u)).
    pub nakayama: LinearMap,
}

fn ideal_component(perp: &[Vec<FieldElement>], n: usize, field: FieldSpec) -> Echelon {
    let mut e = Echelon::new(field);
    for i in 0..=n - 2 {
        let pre = 3usize.pow(i as u32);
        let post = 3usize.pow((n - 2 - i) as u32);
        for p in 0..pre {
            for s in 0..post {
                for r in perp {
                    let v: SparseVec = r
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| ((p * 9 + k) * post + s, c.clone()))
                        .collect();
                    e.insert(v);
                }
            }
        }
    }
    e
}

pub fn quadratic_dual(a: &QuadraticAlgebra) -> Result<FrobeniusData, QuadraticError> {
    let f = a.field();
    let perp = a.relations.perp();
    let i3 = ideal_component(&perp, 3, f);
    let i4 = ideal_component(&perp, 4, f);
    let dims = vec![1, 3, 9 - perp.len(), 27 - i3.rank(), 81 - i4.rank()];
    if dims != [1, 3, 3, 1, 0] {
        return Err(QuadraticError::NotFrobeniusShape { dims });
    }
    let rows: Vec<Vec<FieldElement>> = i3
        .rows()
        .map(|r| {
            let mut v = vec![f.zero(); 27];
            for (&j, c) in r {
                v[j] = c.clone();
            }
            v
        })
        .collect();
    let omega = Matrix::from_rows(f, rows).expect("27 columns").kernel();
    let omega = omega.into_iter().next().expect("one-dimensional top degree");
    let nakayama = solve_nakayama(&omega, f)?;
    Ok(FrobeniusData {
        dims,
        perp,
        top_functional: omega,
        nakayama,
    })
}

fn solve_nakayama(omega: &[FieldElement], f: FieldSpec) -> Result<LinearMap, QuadraticError> {
    // ω(ξ_a ξ_b ξ_c) = Σ_d ν_ad ω(ξ_b ξ_c ξ_d) for all b, c.
    let left = Matrix::from_rows(f, (0..3).map(|a| omega[9 * a..9 * a + 9].to_vec()).collect())
        .expect("3x9");
    let right = Matrix::from_rows(f, (0..9).map(|bc| omega[3 * bc..3 * bc + 3].to_vec()).collect())
        .expect("9x3");
    if left.rank() != 3 || right.rank() != 3 {
        return Err(QuadraticError::DegeneratePairing);
    }
    let mut rows = Vec::with_capacity(3);
    for a in 0..3 {
        let rhs = Matrix::column(f, omega[9 * a..9 * a + 9].to_vec()).expect("column");
        match right.solve(&rhs).map_err(TensorError::from)? {
            crate::matrix::Solution::Unique(x) => {
                rows.push((0..3).map(|d| x.get(d, 0).clone()).collect::<Vec<_>>())
            }
            _ => return Err(QuadraticError::DegeneratePairing),
        }
    }
    let m = Matrix::from_rows(f, rows).expect("3x3");
    if !m.is_invertible() {
        return Err(QuadraticError::DegeneratePairing);
    }
    Ok(LinearMap::from_matrix(m)?)
}

pub fn nakayama(a: &QuadraticAlgebra) -> Result<LinearMap, QuadraticError> {
    Ok(quadratic_dual(a)?.nakayama)
}

/// dim A_n for n = 0..=bound, from the ranks of Σ V^i ⊗ R ⊗ V^{n-2-i}.
pub fn hilbert_dims(a: &QuadraticAlgebra, bound: usize) -> Result<Vec<usize>, QuadraticError> {
    if bound > 6 {
        return Err(QuadraticError::DegreeTooLarge(bound));
    }
    let f = a.field();
    let rel: Vec<SparseVec> = (0..a.relations.dim())
        .map(|i| {
            a.relations
                .canonical()
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect();
    let mut dims = Vec::new();
    let mut prev: Option<Echelon> = None;
    for n in 0..=bound {
        if n < 2 {
            dims.push(3usize.pow(n as u32));
            continue;
        }
        // I_n = I_{n-1} ⊗ V + V^{n-2} ⊗ R
        let mut e = Echelon::new(f);
        if let Some(p) = &prev {
            for row in p.rows() {
                for l in 0..3 {
                    e.insert(row.iter().map(|(&j, c)| (3 * j + l, c.clone())).collect());
                }
            }
        }
        for pre in 0..3usize.pow((n - 2) as u32) {
            for r in &rel {
                e.insert(r.iter().map(|(&k, c)| (pre * 9 + k, c.clone())).collect());
            }
        }
        dims.push(3usize.pow(n as u32) - e.rank());
        prev = Some(e);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_potential, Bindings};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn t(s: &str) -> Tensor {
        parse_potential(s, Q, &Bindings::new()).unwrap()
    }

    fn poly_ring() -> QuadraticAlgebra {
        derivation_quotient(&t("x*y*z + y*z*x + z*x*y - z*y*x - y*x*z - x*z*y")).unwrap()
    }

    #[test]
    fn polynomial_ring_relations() {
        let a = poly_ring();
        let b = QuadraticAlgebra::new(Q, &[t("y*z - z*y"), t("z*x - x*z"), t("x*y - y*x")]).unwrap();
        assert_eq!(a, b);
        assert_eq!(hilbert_dims(&a, 4).unwrap(), vec![1, 3, 6, 10, 15]);
        let dual = quadratic_dual(&a).unwrap();
        assert_eq!(dual.dims, vec![1, 3, 3, 1, 0]);
        assert!(dual.nakayama.is_identity());
    }

    #[test]
    fn degenerate_cube() {
        assert_eq!(
            derivation_quotient(&t("x*x*x")),
            Err(QuadraticError::DegeneratePotential { rank: 1 })
        );
    }

    #[test]
    fn commutator_matrix() {
        let basis = [t("y*z - z*y"), t("z*x - x*z"), t("x*y - y*x")];
        let a = QuadraticAlgebra::new(Q, &basis).unwrap();
        let m = relation_matrix(&a, &basis).unwrap();
        let expect = [["0", "-z", "y"], ["z", "0", "-x"], ["-y", "x", "0"]];
        for i in 0..3 {
            for j in 0..3 {
                let e = crate::expr::parse_tensor(expect[i][j], Q, &Bindings::new());
                match e {
                    Ok(e) => assert_eq!(m.entries[i][j], e),
                    Err(_) => assert!(m.entries[i][j].is_zero()),
                }
            }
        }
        assert_eq!(m.m_x(), basis);
        assert!(is_standard(&a, &basis).unwrap());
    }

    #[test]
    fn left_ideal_relations_not_standard() {
        let basis = [t("x*x"), t("x*y"), t("x*z")];
        let a = QuadraticAlgebra::new(Q, &basis).unwrap();
        let m = relation_matrix(&a, &basis).unwrap();
        assert_eq!(m.entries[1][1], t("x*y").right_partial(Var::Y).unwrap());
        assert_eq!(standard_form(&a, &basis).unwrap(), Standardness::NotStandard);
        assert!(matches!(
            quadratic_dual(&a),
            Err(QuadraticError::NotFrobeniusShape { .. })
        ));
    }

    #[test]
    fn squares_hilbert() {
        let a = QuadraticAlgebra::new(Q, &[t("x*x"), t("y*y"), t("z*z")]).unwrap();
        assert_eq!(hilbert_dims(&a, 3).unwrap(), vec![1, 3, 6, 12]);
        assert_eq!(hilbert_dims(&a, 7), Err(QuadraticError::DegreeTooLarge(7)));
    }

    #[test]
    fn skew_twist() {
        let a = poly_ring();
        let th = LinearMap::diagonal([Q.from_i64(2), Q.from_i64(3), Q.from_i64(5)]);
        let tw = zhang_twist(&a, &th).unwrap();
        let expect = QuadraticAlgebra::new(
            Q,
            &[t("3*y*z - 5*z*y"), t("5*z*x - 2*x*z"), t("2*x*y - 3*y*x")],
        )
        .unwrap();
        assert_eq!(tw, expect);
        let twice = zhang_twist(&tw, &th).unwrap();
        assert_eq!(twice, zhang_twist(&a, &th.pow(2)).unwrap());
        assert!(!relations_equal_up_to(&a, &tw, &LinearMap::identity(Q)).unwrap());
    }

    #[test]
    fn double_perp() {
        let a = QuadraticAlgebra::new(Q, &[t("x*y - 2*y*x + z*z"), t("x*x"), t("y*z + z*y")]).unwrap();
        let perp = a.relations.perp();
        let back = Matrix::from_rows(Q, perp).unwrap().kernel();
        let b = QuadraticAlgebra::new(
            Q,
            &back.iter().map(|v| Tensor::from_coords(Q, 2, v)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
