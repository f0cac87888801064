use proptest::prelude::*;
use whk_core::actions::{bilinear_t, InnerData};
use whk_core::linalg::{axpy, scaled};
use whk_core::smash::SmashProduct;
use whk_core::{
    corpus, Convolution, Field, FiniteAlgebra, FiniteGroupoid, Matrix, ModuleAction, Scalar,
    Subspace,
};

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(q)
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), n)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    vector(rows * cols).prop_map(move |d| Matrix::new(rows, cols, d).unwrap())
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace<Scalar>> {
    prop::collection::vec(vector(ambient), 0..=ambient)
        .prop_map(move |vs| Subspace::span(ambient, vs).unwrap())
}

fn m2() -> FiniteAlgebra<Scalar> {
    // E_ij at index 2i + j
    FiniteAlgebra::from_products(4, vec![q(1), q(0), q(0), q(1)], |a, b| {
        let mut v = vec![q(0); 4];
        if a % 2 == b / 2 {
            v[(a / 2) * 2 + b % 2] = q(1);
        }
        v
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(4, 6)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), 6);
        for v in k.basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x == &q(0)));
        }
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn inverse_round_trip(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(3)),
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn subspace_lattice(u in subspace(5), w in subspace(5)) {
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap());
        prop_assert!(meet.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap());
        prop_assert_eq!(u.annihilator().annihilator(), u.clone());
        prop_assert_eq!(u.annihilator().dim() + u.dim(), 5);
    }

    #[test]
    fn reduce_is_canonical(u in subspace(4), v in vector(4), c in vector(4)) {
        // v and v + (element of u) reduce to the same representative
        let mut shifted = v.clone();
        for (b, coef) in u.basis().iter().zip(&c) {
            axpy(&mut shifted, coef, b);
        }
        prop_assert_eq!(u.reduce(&v), u.reduce(&shifted));
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 2), b in matrix(2, 3), c in matrix(2, 2), d in matrix(3, 2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn convolution_associative_on_h4(p in matrix(4, 4), r in matrix(4, 4), s in matrix(4, 4)) {
        let h = corpus::h4::<Scalar>();
        let conv = Convolution::new(h.coalgebra(), h.algebra());
        let left = conv.convolve(&conv.convolve(&p, &r).unwrap(), &s).unwrap();
        let right = conv.convolve(&p, &conv.convolve(&r, &s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(conv.convolve(&conv.unit(), &p).unwrap(), p.clone());
        prop_assert_eq!(conv.convolve(&p, &conv.unit()).unwrap(), p);
    }

    #[test]
    fn convolution_associative_into_matrices(p in matrix(4, 2), r in matrix(4, 2), s in matrix(4, 2)) {
        let c = corpus::sw2::<Scalar>();
        let a = m2();
        let conv = Convolution::new(&c, &a);
        let left = conv.convolve(&conv.convolve(&p, &r).unwrap(), &s).unwrap();
        let right = conv.convolve(&p, &conv.convolve(&r, &s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn truncation_on_h4(r in matrix(4, 4)) {
        // γ = R ∘ (projection killing C_0 = span{1, g})
        let h = corpus::h4::<Scalar>();
        let conv = Convolution::new(h.coalgebra(), h.algebra());
        let mut proj = Matrix::zeros(4, 4);
        proj.set(2, 2, q(1));
        proj.set(3, 3, q(1));
        let gamma = r.mul(&proj);
        prop_assert!(conv.truncation_check(&gamma).unwrap());
        prop_assert!(conv.power(&gamma, 2).unwrap().is_zero());
    }

    #[test]
    fn t_is_bilinear(x in vector(4), x2 in vector(4), y in vector(4), alpha in scalar()) {
        let h = corpus::h4::<Scalar>();
        let data = InnerData::adjoint(&h).unwrap();
        let mut combo = scaled(&alpha, &x);
        axpy(&mut combo, &q(1), &x2);
        let mut expected = scaled(&alpha, &bilinear_t(&data, &x, &y).unwrap());
        axpy(&mut expected, &q(1), &bilinear_t(&data, &x2, &y).unwrap());
        prop_assert_eq!(bilinear_t(&data, &combo, &y).unwrap(), expected);
        let mut expected = scaled(&alpha, &bilinear_t(&data, &y, &x).unwrap());
        axpy(&mut expected, &q(1), &bilinear_t(&data, &y, &x2).unwrap());
        prop_assert_eq!(bilinear_t(&data, &y, &combo).unwrap(), expected);
    }

    #[test]
    fn smash_product_ignores_representatives(
        p in vector(8), r in vector(8), c1 in vector(4), c2 in vector(4)
    ) {
        let m = ModuleAction::target_counital(&corpus::p2::<Scalar>()).unwrap();
        let s = SmashProduct::build(&m).unwrap();
        let rel = s.relations().basis();
        let shift = |v: &[Scalar], c: &[Scalar]| {
            let mut out = v.to_vec();
            for (b, k) in rel.iter().zip(c) {
                axpy(&mut out, k, b);
            }
            out
        };
        let a = s.multiply_representatives(&p, &r).unwrap();
        let b = s.multiply_representatives(&shift(&p, &c1), &shift(&r, &c2)).unwrap();
        prop_assert_eq!(&a, &b);
        let via_classes = s.algebra().multiply(&s.class_of(&p), &s.class_of(&r)).unwrap();
        prop_assert_eq!(a, via_classes);
    }

    #[test]
    fn groupoid_algebras_are_weak_hopf(idx in 0usize..34) {
        let g = &FiniteGroupoid::family()[idx];
        let h = g.algebra::<Scalar>();
        prop_assert!(h.validate().is_ok());
        prop_assert!(h.counital_identities().is_ok());
        let (a, b) = h.is_quantum_commutative();
        prop_assert_eq!(a, b);
        prop_assert_eq!(a, g.is_isotropy_disjoint_union());
    }
}

#[test]
fn solver_uniqueness_matches_witness() {
    // two witnesses with the same (u, e, f) share v
    let h = corpus::p2::<Scalar>();
    let conv = Convolution::new(h.coalgebra(), h.algebra());
    let (eps_t, eps_s) = h.counital_maps();
    let id = Matrix::identity(4);
    let sol = conv.inverse_system(&id, &eps_t, &eps_s).unwrap();
    assert!(sol.homogeneous.is_zero());
    assert_eq!(sol.particular.unwrap(), h.antipode().data().to_vec());
}
