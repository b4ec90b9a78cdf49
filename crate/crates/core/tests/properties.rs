use asreg::catalog::{self, TypeId};
use asreg::expr::{parse_potential, parse_scalar, parse_tensor, Bindings};
use asreg::quadratic::{derivation_quotient, RelationSpace};
use asreg::{FieldElement, FieldSpec, LinearMap, Matrix, Tensor, Var, Word};
use proptest::prelude::*;

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::Cyclotomic3, FieldSpec::PrimeField(1000003)];

fn field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(FIELDS.to_vec())
}

fn element(f: FieldSpec) -> impl Strategy<Value = FieldElement> {
    (-20i64..=20, 1i64..=6, -20i64..=20).prop_map(move |(a, d, b)| {
        let base = f.from_ratio(a, d).unwrap();
        match f {
            FieldSpec::Cyclotomic3 => &base + &(&f.from_i64(b) * &f.zeta().unwrap()),
            _ => base,
        }
    })
}

fn tensor(f: FieldSpec, degree: usize) -> impl Strategy<Value = Tensor> {
    let n = 3usize.pow(degree as u32);
    prop::collection::vec((0..n, element(f)), 0..8)
        .prop_map(move |terms| {
            Tensor::from_terms(f, degree, terms.into_iter().map(|(i, c)| (Word::from_index(i, degree), c))).unwrap()
        })
}

fn map(f: FieldSpec) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(element(f), 9).prop_filter_map("singular", move |v| {
        let rows = v.chunks(3).map(|c| c.to_vec()).collect();
        LinearMap::from_matrix(Matrix::from_rows(f, rows).unwrap()).ok()
    })
}

fn with_field<T: std::fmt::Debug>(
    inner: impl Fn(FieldSpec) -> BoxedStrategy<T> + 'static,
) -> impl Strategy<Value = (FieldSpec, T)> {
    field().prop_flat_map(move |f| (Just(f), inner(f)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms((f, (a, b, c)) in with_field(|f| (element(f), element(f), element(f)).boxed())) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert_eq!(a.pow(5), &(&a * &a.pow(2)) * &a.pow(2));
    }

    #[test]
    fn scalars_round_trip((f, a) in with_field(|f| element(f).boxed())) {
        prop_assert_eq!(FieldElement::parse(f, &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(parse_scalar(&a.to_string(), f, &Bindings::new()).unwrap(), a);
    }

    #[test]
    fn cube_roots_cube_back((f, a) in with_field(|f| element(f).boxed())) {
        let c = a.pow(3);
        let r = c.cube_root();
        if f == FieldSpec::Cyclotomic3 && a.as_rational().is_none() {
            prop_assert!(r.is_none());
        } else {
            let r = r.unwrap();
            prop_assert_eq!(r.pow(3), c);
            if !a.is_zero() {
                prop_assert!((&r / &a).pow(3).is_one());
            }
        }
    }

    #[test]
    fn tensors_round_trip((f, t) in with_field(|f| tensor(f, 3).boxed())) {
        let text = t.to_string();
        let back = parse_tensor(&text, f, &Bindings::new());
        if t.is_zero() {
            prop_assert!(back.map(|b| b.is_zero()).unwrap_or(true));
        } else {
            prop_assert_eq!(back.unwrap(), t.clone());
        }
        prop_assert_eq!(Tensor::from_coords(f, 3, &t.coords()), t);
    }

    #[test]
    fn cyclic_has_order_three((_f, t) in with_field(|f| tensor(f, 3).boxed())) {
        let c = t.cyclic().unwrap();
        prop_assert_eq!(c.cyclic().unwrap().cyclic().unwrap(), t.clone());
        let sym = t.add(&c).unwrap().add(&c.cyclic().unwrap()).unwrap();
        prop_assert!(sym.is_superpotential().unwrap());
    }

    #[test]
    fn left_partials_reconstruct((f, t) in with_field(|f| tensor(f, 3).boxed())) {
        let parts = t.partials().unwrap();
        let mut sum = Tensor::zero(f, 3);
        for (i, p) in parts.iter().enumerate() {
            sum = sum.add(&Tensor::var(f, Var::from_index(i)).tensor(p).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, t);
    }

    #[test]
    fn gl_action_composes((_f, (t, a, b)) in with_field(|f| (tensor(f, 2), map(f), map(f)).boxed())) {
        let seq = t.gl_apply_uniform(&b).unwrap().gl_apply_uniform(&a).unwrap();
        prop_assert_eq!(t.gl_apply_uniform(&a.compose(&b)).unwrap(), seq);
        let id = LinearMap::identity(t.field());
        prop_assert_eq!(t.gl_apply_uniform(&id).unwrap(), t.clone());
    }

    #[test]
    fn twisting_by_identity((f, t) in with_field(|f| tensor(f, 3).boxed())) {
        prop_assert_eq!(t.ms_twist(&LinearMap::identity(f)).unwrap(), t);
    }

    #[test]
    fn graded_automorphisms_preserve_superpotentials((_f, (t, a)) in with_field(|f| (tensor(f, 3), map(f)).boxed())) {
        let c = t.cyclic().unwrap();
        let w = t.add(&c).unwrap().add(&c.cyclic().unwrap()).unwrap();
        let moved = w.gl_apply_uniform(&a).unwrap();
        prop_assert!(moved.is_superpotential().unwrap());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(moved.gl_apply_uniform(&inv).unwrap(), w);
    }

    #[test]
    fn matrices_invert((f, a) in with_field(|f| map(f).boxed())) {
        let m = a.matrix();
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 3));
        prop_assert_eq!(m.determinant().inv().unwrap(), inv.determinant());
    }

    #[test]
    fn kernels_are_annihilated((f, v) in with_field(|f| prop::collection::vec(element(f), 12).boxed())) {
        let rows: Vec<Vec<FieldElement>> = v.chunks(4).map(|c| c.to_vec()).collect();
        let m = Matrix::from_rows(f, rows).unwrap();
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), 4);
        for k in ker {
            let col = Matrix::column(f, k).unwrap();
            prop_assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn relation_spaces_ignore_basis((f, (t, a)) in with_field(|f| (prop::collection::vec(tensor(f, 2), 3), map(f)).boxed())) {
        let span = RelationSpace::span(f, &t).unwrap();
        let mixed: Vec<Tensor> = (0..3)
            .map(|i| {
                (0..3).fold(Tensor::zero(f, 2), |acc, j| acc.add(&t[j].scale(a.matrix().get(i, j))).unwrap())
            })
            .collect();
        prop_assert_eq!(RelationSpace::span(f, &mixed).unwrap(), span.clone());
        for r in &t {
            prop_assert!(span.contains(r));
        }
    }

    #[test]
    fn catalog_instances_are_consistent(idx in 0usize..22, seed in any::<u64>(), fi in 0usize..3) {
        let id = TypeId::ALL[idx];
        let f = FIELDS[fi];
        let row = id.row();
        let b = row.sample_binding(f, &mut catalog::row_rng(seed, id)).unwrap();
        let inst = row.instantiate(f, &b).unwrap();
        let text = inst.potential.to_string();
        prop_assert_eq!(parse_potential(&text, f, &Bindings::new()).unwrap(), inst.potential.clone());
        let a = derivation_quotient(&inst.potential).unwrap();
        prop_assert_eq!(a.relations, RelationSpace::span(f, &inst.relations).unwrap());
        prop_assert!(inst.w0.is_superpotential().unwrap());
    }
}
