//! Commutative polynomials in x, y, z, a Buchberger engine under grevlex
//! (x > y > z), and the regularity decision: a quadratic algebra with three
//! relations is AS-regular iff it is standard and the 2×2 minors of its
//! relation matrix have no common projective zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::quadratic::{standard_form, LinearFormMatrix, QuadraticAlgebra, QuadraticError, Standardness};
use crate::tensor::Tensor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("input polynomial is not homogeneous")]
    NonHomogeneousInput,
    #[error(transparent)]
    Quadratic(#[from] QuadraticError),
}

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i].max(other.0[i])))
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] - other.0[i]))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    /// The variable index if this is a pure power of one variable.
    pub fn pure_power_of(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..3).filter(|&i| self.0[i] > 0).collect();
        (nz.len() == 1).then(|| nz[0])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..3).rev() {
                if self.0[i] != other.0[i] {
                    return other.0[i].cmp(&self.0[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            let v = ['x', 'y', 'z'][i];
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Commutative polynomial; terms are kept in increasing monomial order, so
/// the leading term is the last entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommPoly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl CommPoly {
    pub fn zero(field: FieldSpec) -> Self {
        CommPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = ([u32; 3], FieldElement)>) -> Self {
        let mut p = CommPoly::zero(field);
        for (m, c) in terms {
            p.add_term(Monomial(m), c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = &*e + &c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &CommPoly) -> CommPoly {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, other: &CommPoly) -> CommPoly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &FieldElement) -> CommPoly {
        let mut p = CommPoly::zero(self.field);
        if !s.is_zero() {
            for (m, c) in &self.terms {
                p.terms.insert(*m, c * s);
            }
        }
        p
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut p = CommPoly::zero(self.field);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                p.add_term(a.mul(b), c * d);
            }
        }
        p
    }

    fn mul_term(&self, m: &Monomial, c: &FieldElement) -> CommPoly {
        let mut p = CommPoly::zero(self.field);
        for (a, d) in &self.terms {
            p.terms.insert(a.mul(m), d * c);
        }
        p
    }

    pub fn monic(&self) -> CommPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[FieldElement; 3]) -> FieldElement {
        self.terms.iter().fold(self.field.zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for i in 0..3 {
                t = &t * &point[i].pow(m.0[i] as u64);
            }
            acc + t
        })
    }

    /// Full normal form modulo `basis` by multivariate division.
    pub fn reduce(&self, basis: &[CommPoly]) -> CommPoly {
        let mut p = self.clone();
        let mut rem = CommPoly::zero(self.field);
        while let Some((m, c)) = p.leading().map(|(m, c)| (*m, c.clone())) {
            let divisor = basis
                .iter()
                .find(|g| g.leading().is_some_and(|(lm, _)| lm.divides(&m)));
            match divisor {
                Some(g) => {
                    let (lm, lc) = g.leading().expect("nonzero");
                    let q = m.div(lm);
                    let qc = &c / lc;
                    p = p.sub(&g.mul_term(&q, &qc));
                }
                None => {
                    p.terms.remove(&m);
                    rem.terms.insert(m, c);
                }
            }
        }
        rem
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let mag = if mag.contains(['+', '-']) {
                format!("({mag})")
            } else {
                mag
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag == "1";
            match (unit, m.degree()) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{m}")?,
                (false, 0) => write!(f, "{mag}")?,
                (false, _) => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

/// Reduced Gröbner basis under grevlex with x > y > z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<CommPoly>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading().map(|(m, _)| *m))
            .collect()
    }

    pub fn contains(&self, p: &CommPoly) -> bool {
        p.reduce(&self.generators).is_zero()
    }
}

fn s_polynomial(f: &CommPoly, g: &CommPoly) -> CommPoly {
    let (lf, cf) = f.leading().expect("nonzero");
    let (lg, cg) = g.leading().expect("nonzero");
    let l = lf.lcm(lg);
    f.mul_term(&l.div(lf), &cf.inv().expect("nonzero"))
        .sub(&g.mul_term(&l.div(lg), &cg.inv().expect("nonzero")))
}

pub fn buchberger(gens: &[CommPoly]) -> GroebnerBasis {
    let mut g: Vec<CommPoly> = gens.iter().filter(|p| !p.is_zero()).map(CommPoly::monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (li, _) = g[i].leading().expect("nonzero");
        let (lj, _) = g[j].leading().expect("nonzero");
        if li.coprime(lj) {
            continue;
        }
        let r = s_polynomial(&g[i], &g[j]).reduce(&g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalise, then interreduce
    let mut minimal: Vec<CommPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let (lp, _) = p.leading().expect("nonzero");
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let (lq, _) = q.leading().expect("nonzero");
            j != i && lq.divides(lp) && (lq != lp || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<CommPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<CommPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let (lm, lc) = minimal[i].leading().map(|(m, c)| (*m, c.clone())).expect("nonzero");
            let tail = {
                let mut t = minimal[i].clone();
                t.terms.remove(&lm);
                t.reduce(&others)
            };
            let mut p = tail;
            p.terms.insert(lm, lc);
            p.monic()
        })
        .collect();
    reduced.sort_by(|a, b| {
        let la = a.leading().map(|(m, _)| *m);
        let lb = b.leading().map(|(m, _)| *m);
        la.cmp(&lb)
    });
    GroebnerBasis { generators: reduced }
}

/// Whether the homogeneous ideal has no zero in ℙ² over the algebraic
/// closure: its Gröbner basis has leading terms x^a, y^b and z^c.
pub fn projective_locus_empty(gens: &[CommPoly]) -> Result<bool, RegularityError> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(RegularityError::NonHomogeneousInput);
    }
    Ok(locus_empty_of(&buchberger(gens)))
}

fn locus_empty_of(gb: &GroebnerBasis) -> bool {
    let mut seen = [false; 3];
    for m in gb.leading_monomials() {
        if m.degree() == 0 {
            return true;
        }
        if let Some(i) = m.pure_power_of() {
            seen[i] = true;
        }
    }
    seen.iter().all(|&s| s)
}

/// Image in the commutative polynomial ring.
pub fn commutative_image(t: &Tensor) -> CommPoly {
    let mut p = CommPoly::zero(t.field());
    for (w, c) in t.terms() {
        let mut e = [0u32; 3];
        for v in &w.0 {
            e[v.index()] += 1;
        }
        p.add_term(Monomial(e), c.clone());
    }
    p
}

/// Δ_ij: the minor deleting row i and column j, with cofactor sign (−1)^{i+j}.
pub fn minors_2x2(m: &LinearFormMatrix) -> [[CommPoly; 3]; 3] {
    let c: Vec<Vec<CommPoly>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(commutative_image).collect())
        .collect();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&s| s != j).collect();
            let det = c[rows[0]][cols[0]]
                .mul(&c[rows[1]][cols[1]])
                .sub(&c[rows[0]][cols[1]].mul(&c[rows[1]][cols[0]]));
            if (i + j) % 2 == 1 {
                det.scale(&-m.field().one())
            } else {
                det
            }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityVerdict {
    Regular,
    NotStandard,
    NonEmptyMinorLocus,
    DegenerateRelations,
}

impl fmt::Display for RegularityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegularityVerdict::Regular => "Regular",
            RegularityVerdict::NotStandard => "NotStandard",
            RegularityVerdict::NonEmptyMinorLocus => "NonEmptyMinorLocus",
            RegularityVerdict::DegenerateRelations => "DegenerateRelations",
        };
        write!(f, "{s}")
    }
}

/// Verdict plus the intermediate objects of each stage that ran.
#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub verdict: RegularityVerdict,
    pub relation_dim: usize,
    pub standard: Option<Standardness>,
    pub minors: Option<[[CommPoly; 3]; 3]>,
    pub groebner: Option<GroebnerBasis>,
}

pub fn as_regular_check(a: &QuadraticAlgebra) -> RegularityReport {
    let dim = a.relations.dim();
    let mut report = RegularityReport {
        verdict: RegularityVerdict::DegenerateRelations,
        relation_dim: dim,
        standard: None,
        minors: None,
        groebner: None,
    };
    if dim != 3 {
        return report;
    }
    let basis: [Tensor; 3] = a.relations.basis().to_vec().try_into().expect("three relations");
    let standard = standard_form(a, &basis).expect("basis of R");
    let Standardness::Standard { matrix, .. } = &standard else {
        report.verdict = RegularityVerdict::NotStandard;
        report.standard = Some(standard);
        return report;
    };
    let minors = minors_2x2(matrix);
    let flat: Vec<CommPoly> = minors.iter().flatten().cloned().collect();
    let gb = buchberger(&flat);
    report.verdict = if locus_empty_of(&gb) {
        RegularityVerdict::Regular
    } else {
        RegularityVerdict::NonEmptyMinorLocus
    };
    report.standard = Some(standard);
    report.minors = Some(minors);
    report.groebner = Some(gb);
    report
}
