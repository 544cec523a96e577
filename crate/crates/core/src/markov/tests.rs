use super::*;
use crate::coeffring::{parse_polynomial, VarTable};
use crate::heckealg::Letter::{S, T};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn poly(m: usize, text: &str) -> Polynomial {
    parse_polynomial(text, VarTable::new(m)).unwrap()
}

fn basis_elements(alg: &HeckeAlgebra, n: usize) -> Vec<Element> {
    alg.basis(n)
        .into_iter()
        .map(|b| Element::monomial(alg.m(), b))
        .collect()
}

#[test]
fn normalized_examples() {
    let alg = HeckeAlgebra::new(3);
    let tr = NormalizedTrace::new(&alg, TraceParams::symbolic(3));
    for n in 0..=3 {
        assert!(tr.eval(&alg.one(n)).unwrap().is_one());
    }
    for k in 1..3 {
        let x = alg.pow(&alg.tk(2, 2).unwrap(), k).unwrap();
        assert_eq!(tr.eval(&x).unwrap(), poly(3, &format!("y{k}")));
    }
    let x = alg.word(3, &[S(2), S(1)]).unwrap();
    assert_eq!(tr.eval(&x).unwrap(), poly(3, "z^2"));

    let alg = HeckeAlgebra::new(2);
    let tr = NormalizedTrace::new(&alg, TraceParams::symbolic(2));
    assert_eq!(tr.eval(&alg.jm(2, 2).unwrap()).unwrap(), poly(2, "y1 + z"));
}

#[test]
fn normalized_markov_rules() {
    let alg = HeckeAlgebra::new(2);
    let tr = NormalizedTrace::new(&alg, TraceParams::symbolic(2));
    let ind = Inductive::new(&alg);
    let z = poly(2, "z");
    for n in 1..=2 {
        for h in basis_elements(&alg, n) {
            let base = tr.eval(&h).unwrap();
            let lifted = h.embed(n + 1);
            let with_s = alg.right_mul_s(&lifted, n).unwrap();
            assert_eq!(tr.eval(&with_s).unwrap(), &z * &base, "h = {h}");
            let t = ind.from_t_monomial(&Monomial::new(
                &[vec![0; n], vec![1]].concat(),
                Permutation::identity(n + 1),
            ));
            let with_t = alg.mul(&lifted, &t.unwrap()).unwrap();
            assert_eq!(tr.eval(&with_t).unwrap(), &poly(2, "y1") * &base);
            assert_eq!(tr.eval(&lifted).unwrap(), base, "restriction");
        }
    }
}

#[test]
fn normalized_trace_is_symmetric() {
    for (m, n) in [(2, 2), (3, 2), (2, 3)] {
        let alg = HeckeAlgebra::new(m);
        let tr = NormalizedTrace::new(&alg, TraceParams::symbolic(m));
        let basis = basis_elements(&alg, n);
        for a in &basis {
            for b in &basis {
                let ab = tr.eval(&alg.mul(a, b).unwrap()).unwrap();
                let ba = tr.eval(&alg.mul(b, a).unwrap()).unwrap();
                assert_eq!(ab, ba, "m={m} a={a} b={b}");
            }
        }
    }
}

#[test]
fn specialization_commutes_with_evaluation() {
    let alg = HeckeAlgebra::new(3);
    let vt = VarTable::new(3);
    let bindings = Bindings::parse("z=2/3,y1=-1,y2=5", vt).unwrap();
    let symbolic = TraceParams::symbolic(3);
    let fixed = symbolic.specialize(&bindings).unwrap();
    let sym_tr = NormalizedTrace::new(&alg, symbolic.clone());
    let fixed_tr = NormalizedTrace::new(&alg, fixed.clone());
    let sym_raw = NonNormalizedTrace::new(&alg, symbolic);
    let fixed_raw = NonNormalizedTrace::new(&alg, fixed);
    for x in basis_elements(&alg, 2) {
        let lhs = sym_tr.eval(&x).unwrap().substitute(&bindings).unwrap();
        assert_eq!(lhs, fixed_tr.eval(&x).unwrap());
        let lhs = sym_raw.eval(&x).unwrap().substitute(&bindings).unwrap();
        assert_eq!(lhs, fixed_raw.eval(&x).unwrap());
    }
}

#[test]
fn raw_examples() {
    let alg = HeckeAlgebra::new(3);
    let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(3));
    assert!(tr.eval(&alg.one(0)).unwrap().is_one());
    for n in 1..=3 {
        assert!(tr.eval(&alg.one(n)).unwrap().is_zero());
    }
    for k in 1..3 {
        let x = alg.pow(&alg.jm(1, 1).unwrap(), k).unwrap();
        assert_eq!(tr.eval(&x).unwrap(), poly(3, &format!("y{k}")));
    }
    assert_eq!(tr.moment(2, 1).unwrap(), poly(3, "y1"));
    assert!(tr.eval(&alg.jm(2, 2).unwrap()).unwrap().is_zero());
    // Tr(J_1 s_1) = z Tr(J_1)
    let x = alg
        .mul(&alg.jm(1, 2).unwrap(), &alg.word(2, &[S(1)]).unwrap())
        .unwrap();
    assert_eq!(tr.eval(&x).unwrap(), poly(3, "z*y1"));
    assert!(tr.eval(&alg.word(2, &[S(1)]).unwrap()).unwrap().is_zero());
    assert_eq!(
        tr.moment(1, 3).unwrap_err(),
        TraceError::MomentExponent { k: 3, m: 3 }
    );
}

#[test]
fn moment_recursion_small_cases() {
    let alg = HeckeAlgebra::new(3);
    let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(3));
    // M(2,2) = M(1,2) + z M(1,1) + z M(1,0) + M(2,0) M(1,0) + M(2,0) M(1,0)
    assert_eq!(tr.moment(2, 2).unwrap(), poly(3, "y2 + z*y1"));
    assert_eq!(tr.moment(3, 1).unwrap(), poly(3, "y1"));
    assert_eq!(tr.moment(3, 2).unwrap(), poly(3, "y2 + 2*z*y1"));
}

fn asymmetric_pairs(
    alg: &HeckeAlgebra,
    tr: &NonNormalizedTrace,
    a: &[Element],
    b: &[Element],
) -> usize {
    let mut bad = 0;
    for x in a {
        for y in b {
            let xy = tr.eval(&alg.mul(x, y).unwrap()).unwrap();
            let yx = tr.eval(&alg.mul(y, x).unwrap()).unwrap();
            bad += usize::from(xy != yx);
        }
    }
    bad
}

fn generators(alg: &HeckeAlgebra, n: usize) -> Vec<Element> {
    let mut gens: Vec<Element> = (1..n).map(|i| alg.word(n, &[S(i)]).unwrap()).collect();
    gens.push(alg.word(n, &[T]).unwrap());
    gens
}

#[test]
fn raw_trace_is_symmetric_on_two_strands() {
    let alg = HeckeAlgebra::new(2);
    let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(2));
    let basis = basis_elements(&alg, 2);
    assert_eq!(asymmetric_pairs(&alg, &tr, &basis, &basis), 0);
}

#[test]
fn raw_trace_is_symmetric_at_zero_z() {
    let alg = HeckeAlgebra::new(3);
    let params = TraceParams::symbolic(3)
        .specialize(&Bindings::parse("z=0", VarTable::new(3)).unwrap())
        .unwrap();
    let tr = NonNormalizedTrace::new(&alg, params);
    for n in 2..=3 {
        let basis = basis_elements(&alg, n);
        assert_eq!(
            asymmetric_pairs(&alg, &tr, &basis, &generators(&alg, n)),
            0,
            "n={n}"
        );
    }
}

#[test]
fn printed_moments_break_symmetry_on_three_strands() {
    let alg = HeckeAlgebra::new(2);
    let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(2));
    let a = alg.word(3, &[S(2)]).unwrap();
    let b = alg
        .mul(&alg.jm(2, 3).unwrap(), &alg.jm(3, 3).unwrap())
        .unwrap();
    let b = alg.mul(&b, &alg.word(3, &[S(2), S(1)]).unwrap()).unwrap();
    let ab = tr.eval(&alg.mul(&a, &b).unwrap()).unwrap();
    let ba = tr.eval(&alg.mul(&b, &a).unwrap()).unwrap();
    assert_eq!(&ba - &ab, poly(2, "z^2*y1"));
}

#[test]
fn shifted_moments_restore_symmetry_for_two_parameters() {
    // M(n, 1) = y1 + (n - 2) z makes the functional a trace on H_3 and H_4.
    let alg = HeckeAlgebra::new(2);
    let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(2))
        .with_moment(3, 1, poly(2, "y1 + z"))
        .with_moment(4, 1, poly(2, "y1 + 2*z"));
    let basis = basis_elements(&alg, 3);
    assert_eq!(asymmetric_pairs(&alg, &tr, &basis, &basis), 0);
    let basis = basis_elements(&alg, 4);
    assert_eq!(asymmetric_pairs(&alg, &tr, &basis, &generators(&alg, 4)), 0);
}

#[test]
fn no_moment_choice_is_symmetric_for_three_parameters() {
    // Tr(J_2^2) = M(2,2) Tr(1) = 0, while Tr(s_1 J_2^2 s_1) = 2 z y1 by the tail rule alone.
    let alg = HeckeAlgebra::new(3);
    for value in ["0", "y2", "z + 7*y1"] {
        let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(3)).with_moment(
            2,
            2,
            poly(3, value),
        );
        let j = alg.pow(&alg.jm(2, 2).unwrap(), 2).unwrap();
        let conj = alg.product(
            2,
            [
                &alg.word(2, &[S(1)]).unwrap(),
                &j,
                &alg.word(2, &[S(1)]).unwrap(),
            ],
        );
        assert!(tr.eval(&j).unwrap().is_zero());
        assert_eq!(tr.eval(&conj.unwrap()).unwrap(), poly(3, "2*z*y1"));
    }
}

#[test]
fn raw_trace_factorizes_at_zero_z() {
    let alg = HeckeAlgebra::new(3);
    let vt = VarTable::new(3);
    let params = TraceParams::symbolic(3)
        .specialize(&Bindings::parse("z=0", vt).unwrap())
        .unwrap();
    let tr = NonNormalizedTrace::new(&alg, params);
    for b in alg.basis(3).into_iter().filter(|b| b.perm.is_identity()) {
        let expected = b
            .exp
            .iter()
            .enumerate()
            .fold(Polynomial::one(3), |acc, (i, &a)| {
                &acc * &tr.moment(i + 1, a as usize).unwrap()
            });
        assert_eq!(tr.eval(&Element::monomial(3, b)).unwrap(), expected);
    }
}

#[test]
fn bk01_matches_direct_functional() {
    for m in 2..=3 {
        let alg = HeckeAlgebra::new(m);
        let tr = NonNormalizedTrace::new(&alg, TraceParams::bk01(m));
        for n in 1..=3 {
            for x in basis_elements(&alg, n) {
                assert_eq!(tr.eval(&x).unwrap(), tau_bk(&x), "m={m} x={x}");
            }
        }
        let x = alg.pow(&alg.jm(2, 2).unwrap(), m + 1).unwrap();
        let via = specialize_trace(&alg, TraceKind::BK01, &x, &TraceParams::symbolic(m));
        assert_eq!(via.unwrap(), tau_bk(&x));
    }
}

#[test]
fn tau_bk_examples() {
    let alg = HeckeAlgebra::new(2);
    let x = alg
        .mul(&alg.jm(1, 2).unwrap(), &alg.jm(2, 2).unwrap())
        .unwrap();
    assert!(tau_bk(&x).is_one());
    assert!(tau_bk(&alg.jm(1, 2).unwrap()).is_zero());
    assert!(tau_bk(&alg.one(0)).is_one());
}

#[test]
fn canonical_zero_is_identity_coefficient() {
    let alg = HeckeAlgebra::new(2);
    let ind = Inductive::new(&alg);
    let tr = NormalizedTrace::new(&alg, TraceParams::canonical0(2));
    assert!(tr0(&ind, &alg.one(2)).unwrap().is_one());
    assert!(tr0(&ind, &alg.jm(2, 2).unwrap()).unwrap().is_zero());
    let x = alg.word(2, &[T, S(1), T, S(1)]).unwrap();
    assert!(tr0(&ind, &x).unwrap().is_zero());
    for x in basis_elements(&alg, 3) {
        assert_eq!(tr.eval(&x).unwrap(), tr0(&ind, &x).unwrap());
    }
}

#[test]
fn evaluator_dispatch() {
    let alg = HeckeAlgebra::new(2);
    let params = TraceParams::symbolic(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let basis = alg.basis(3);
    for kind in TraceKind::ALL {
        assert_eq!(kind.name().parse::<TraceKind>().unwrap(), kind);
        let ev = Evaluator::new(&alg, kind, &params);
        for _ in 0..5 {
            let x = Element::monomial(2, basis[rng.gen_range(0..basis.len())].clone());
            assert_eq!(
                ev.eval(&x).unwrap(),
                specialize_trace(&alg, kind, &x, &params).unwrap()
            );
        }
    }
    assert!("bogus".parse::<TraceKind>().is_err());
}

#[test]
fn raw_trace_satisfies_defining_rules() {
    for (m, n) in [(2, 3), (3, 2), (3, 3)] {
        let alg = HeckeAlgebra::new(m);
        let tr = NonNormalizedTrace::new(&alg, TraceParams::symbolic(m));
        let z = poly(m, "z");
        let small = basis_elements(&alg, n - 1);
        let s = alg.word(n, &[S(n - 1)]).unwrap();
        for a in &small {
            for k in 1..m {
                let top = alg.pow(&alg.jm(n, n).unwrap(), k).unwrap();
                let x = alg.mul(&a.embed(n), &top).unwrap();
                let expected = &tr.moment(n, k).unwrap() * &tr.eval(a).unwrap();
                assert_eq!(tr.eval(&x).unwrap(), expected);
            }
            for b in &small {
                let x = alg.product(n, [&a.embed(n), &s, &b.embed(n)]).unwrap();
                let expected = &z * &tr.eval(&alg.mul(a, b).unwrap()).unwrap();
                assert_eq!(tr.eval(&x).unwrap(), expected, "a={a} b={b}");
            }
        }
    }
}
