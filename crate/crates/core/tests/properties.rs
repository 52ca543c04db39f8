use proptest::prelude::*;

use trilie_core::cohomology::{delta_n, partial_rep_n};
use trilie_core::nr::{derived_l1, derived_l3, morphism_mc_residual, nr_bracket, twisted_bracket};
use trilie_core::{
    BracketTensor, CochainKind, CochainShape, GCochain, LinearMap, Matrix, Morphism, Representation, Scalar,
    ThreeLieAlgebra,
};

fn s(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

fn a4() -> ThreeLieAlgebra {
    ThreeLieAlgebra::make(4, &[(0, 1, 2, 3, s(1)), (0, 1, 3, 2, s(-1)), (0, 2, 3, 1, s(1)), (1, 2, 3, 0, s(-1))])
        .unwrap()
}

fn scalars(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, len).prop_map(|v| v.into_iter().map(s).collect())
}

/// Mostly-zero entries keep the higher-degree products cheap.
fn sparse_scalars(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(prop_oneof![6 => Just(0i64), 1 => -2i64..=2], len)
        .prop_map(|v| v.into_iter().map(s).collect())
}

fn endo(degree: usize, dim: usize) -> impl Strategy<Value = GCochain> {
    let shape = CochainShape { degree, source: dim, target: dim };
    sparse_scalars(shape.len()).prop_map(move |v| GCochain::from_data(CochainKind::Endomorphism, shape, v).unwrap())
}

fn hom(degree: usize, source: usize, target: usize) -> impl Strategy<Value = GCochain> {
    let shape = CochainShape { degree, source, target };
    scalars(shape.len()).prop_map(move |v| GCochain::from_data(CochainKind::Homomorphism, shape, v).unwrap())
}

fn tensor(dim: usize) -> impl Strategy<Value = BracketTensor> {
    let count = dim * (dim - 1) * (dim - 2) / 6;
    prop::collection::vec(scalars(dim), count).prop_map(move |values| {
        let mut triples = Vec::new();
        let mut it = values.into_iter();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    triples.push(([i, j, k], it.next().unwrap()));
                }
            }
        }
        BracketTensor::from_triples(dim, &triples).unwrap()
    })
}

fn lin_comb(a: &Scalar, x: &[Scalar], b: &Scalar, y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(u, v)| &(a * u) + &(b * v)).collect()
}

fn endo_sign(p: usize, q: usize) -> Scalar {
    if (p * q).is_multiple_of(2) {
        s(-1)
    } else {
        s(1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn bracket_is_trilinear_and_antisymmetric(
        t in tensor(4), x in scalars(4), y in scalars(4), z in scalars(4), w in scalars(4), a in -3i64..=3, b in -3i64..=3,
    ) {
        let (a, b) = (s(a), s(b));
        let lhs = t.bracket(&lin_comb(&a, &x, &b, &w), &y, &z).unwrap();
        let rhs = lin_comb(&a, &t.bracket(&x, &y, &z).unwrap(), &b, &t.bracket(&w, &y, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
        let xyz = t.bracket(&x, &y, &z).unwrap();
        let neg: Vec<Scalar> = xyz.iter().map(|v| -v).collect();
        prop_assert_eq!(&t.bracket(&y, &x, &z).unwrap(), &neg);
        prop_assert_eq!(&t.bracket(&x, &z, &y).unwrap(), &neg);
        prop_assert_eq!(&t.bracket(&z, &x, &y).unwrap(), &xyz);
        prop_assert!(t.bracket(&x, &x, &z).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn nr_bracket_graded_antisymmetry(p in endo(0, 3), q in endo(1, 3), r in endo(1, 3)) {
        for (a, b) in [(&p, &q), (&q, &r), (&p, &p), (&q, &q)] {
            let ab = nr_bracket(a, b).unwrap();
            let ba = nr_bracket(b, a).unwrap();
            prop_assert_eq!(ab, ba.scale(&endo_sign(a.degree(), b.degree())));
        }
    }

    #[test]
    fn nr_bracket_graded_jacobi(p in endo(0, 3), q in endo(0, 3), r in endo(1, 3), u in endo(1, 3)) {
        // [a, [b, c]] = [[a, b], c] + (-1)^{|a||b|} [b, [a, c]]
        let triples = [(&p, &q, &r), (&p, &r, &u), (&r, &u, &p), (&p, &q, &p), (&r, &u, &r)];
        for (a, b, c) in triples {
            let lhs = nr_bracket(a, &nr_bracket(b, c).unwrap()).unwrap();
            let first = nr_bracket(&nr_bracket(a, b).unwrap(), c).unwrap();
            let sign = if (a.degree() * b.degree()) % 2 == 0 { s(1) } else { s(-1) };
            let second = nr_bracket(b, &nr_bracket(a, c).unwrap()).unwrap().scale(&sign);
            prop_assert_eq!(lhs, first.add(&second).unwrap());
        }
    }

    #[test]
    fn l1_squares_to_zero(theta0 in hom(0, 4, 4), theta1 in hom(1, 4, 4)) {
        let t = a4().tensor().clone();
        for theta in [theta0, theta1] {
            let once = derived_l1(&theta, &t, &t).unwrap();
            prop_assert!(derived_l1(&once, &t, &t).unwrap().is_zero());
        }
    }

    #[test]
    fn l3_is_symmetric_in_degree_zero_arguments(a in hom(0, 4, 4), b in hom(0, 4, 4), c in hom(0, 4, 4)) {
        let t = a4().tensor().clone();
        let abc = derived_l3(&a, &b, &c, &t, &t).unwrap();
        prop_assert_eq!(&abc, &derived_l3(&b, &a, &c, &t, &t).unwrap());
        prop_assert_eq!(&abc, &derived_l3(&a, &c, &b, &t, &t).unwrap());
    }

    #[test]
    fn mc_residual_is_the_morphism_defect(m in scalars(16)) {
        let a = a4();
        let f = LinearMap::new(Matrix::from_fn(4, 4, |r, c| m[r * 4 + c].clone()));
        let residual = morphism_mc_residual(&f, a.tensor(), a.tensor()).unwrap();
        let defect = trilie_core::algebra::check_morphism(&f, &a, &a).unwrap();
        prop_assert_eq!(residual.is_zero(), defect.is_morphism());
    }

    #[test]
    fn coboundary_is_signed_twisted_l1(theta0 in hom(0, 4, 4), theta1 in hom(1, 4, 4)) {
        let a = a4();
        let f = Morphism::identity(&a);
        for (theta, sign) in [(theta0, s(1)), (theta1, s(-1))] {
            let delta = delta_n(&theta, &f).unwrap();
            let twisted = twisted_bracket(f.map(), &[theta], a.tensor(), a.tensor()).unwrap();
            prop_assert_eq!(delta, twisted.scale(&sign));
        }
    }

    #[test]
    fn representation_coboundary_squares_to_zero(theta in hom(0, 4, 4)) {
        let rep = Representation::adjoint(&a4());
        let once = partial_rep_n(&theta, &rep).unwrap();
        prop_assert!(partial_rep_n(&once, &rep).unwrap().is_zero());
    }
}
