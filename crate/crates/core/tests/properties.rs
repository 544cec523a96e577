use hecke_core::coeffring::{Polynomial, Rational, Var};
use hecke_core::heckealg::{Element, HeckeAlgebra};
use hecke_core::inductive::Inductive;
use hecke_core::markov::{NonNormalizedTrace, NormalizedTrace, TraceParams};
use proptest::prelude::*;

fn element(alg: &HeckeAlgebra, n: usize, picks: &[(usize, i64, bool)]) -> Element {
    let m = alg.m();
    let basis = alg.basis(n);
    let mut x = Element::zero(m, n);
    for &(i, c, with_z) in picks {
        let mut coeff = Polynomial::constant(m, Rational::from_integer(c.into()));
        if with_z {
            coeff = &coeff * &Polynomial::var(m, Var::Z);
        }
        x.add_term(basis[i % basis.len()].clone(), coeff);
    }
    x
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, bool)>> {
    proptest::collection::vec((0usize..10_000, -3i64..=3, any::<bool>()), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn multiplication_is_associative(m in 1usize..=3, a in picks(), b in picks(), c in picks()) {
        let alg = HeckeAlgebra::new(m);
        let (x, y, z) = (element(&alg, 3, &a), element(&alg, 3, &b), element(&alg, 3, &c));
        let left = alg.mul(&alg.mul(&x, &y).unwrap(), &z).unwrap();
        let right = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(m in 2usize..=3, a in picks(), b in picks(), c in picks()) {
        let alg = HeckeAlgebra::new(m);
        let (x, y, z) = (element(&alg, 3, &a), element(&alg, 3, &b), element(&alg, 3, &c));
        let left = alg.mul(&x, &(&y + &z)).unwrap();
        let right = &alg.mul(&x, &y).unwrap() + &alg.mul(&x, &z).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn t_basis_round_trips(m in 1usize..=3, a in picks()) {
        let alg = HeckeAlgebra::new(m);
        let ind = Inductive::new(&alg);
        let x = element(&alg, 3, &a);
        prop_assert_eq!(ind.from_t_basis(&ind.to_t_basis(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn normalized_trace_is_linear_and_symmetric(m in 2usize..=3, a in picks(), b in picks()) {
        let alg = HeckeAlgebra::new(m);
        let tr = NormalizedTrace::new(&alg, TraceParams::symbolic(m));
        let (x, y) = (element(&alg, 3, &a), element(&alg, 3, &b));
        let sum = tr.eval(&(&x + &y)).unwrap();
        prop_assert_eq!(sum, &tr.eval(&x).unwrap() + &tr.eval(&y).unwrap());
        let xy = tr.eval(&alg.mul(&x, &y).unwrap()).unwrap();
        let yx = tr.eval(&alg.mul(&y, &x).unwrap()).unwrap();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn raw_trace_is_symmetric_on_two_strands_for_two_parameters(a in picks(), b in picks()) {
        let alg = HeckeAlgebra::new(2);
        let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(2));
        let (x, y) = (element(&alg, 2, &a), element(&alg, 2, &b));
        let xy = tr.eval(&alg.mul(&x, &y).unwrap()).unwrap();
        let yx = tr.eval(&alg.mul(&y, &x).unwrap()).unwrap();
        prop_assert_eq!(xy, yx);
    }
}
