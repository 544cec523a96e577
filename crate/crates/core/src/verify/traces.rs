//! Rule-conformance and symmetry batteries for the two Markov traces.

use super::{sample_indices, Report, SuiteError, Violation};
use crate::coeffring::{Polynomial, Var};
use crate::heckealg::{AlgebraError, Element, HeckeAlgebra, Letter, Monomial};
use crate::markov::{NonNormalizedTrace, NormalizedTrace, TraceParams};
use serde_json::json;

/// Exhaustive pair scans stay below this many ordered pairs.
const PAIR_BUDGET: usize = 4096;
/// Random pairs drawn by symmetry scans that are not exhaustive.
pub const SYMMETRY_PAIRS: usize = 500;

fn basis_elements(alg: &HeckeAlgebra, n: usize) -> Vec<Element> {
    alg.basis(n)
        .into_iter()
        .map(|b| Element::monomial(alg.m(), b))
        .collect()
}

fn single(x: &Element) -> &Monomial {
    x.terms().next().expect("basis element").0
}

fn s(alg: &HeckeAlgebra, n: usize, i: usize) -> Result<Element, AlgebraError> {
    alg.word(n, &[Letter::S(i)])
}

fn t(alg: &HeckeAlgebra, n: usize) -> Result<Element, AlgebraError> {
    alg.word(n, &[Letter::T])
}

fn tail(alg: &HeckeAlgebra, top: usize, bottom: usize, n: usize) -> Result<Element, AlgebraError> {
    let letters: Vec<Letter> = (bottom..=top).rev().map(Letter::S).collect();
    alg.word(n, &letters)
}

/// Pairs `(x, y)` from `H_(n-1)` for two-sided lemma instances: all pairs when small.
fn inner_pairs(
    alg: &HeckeAlgebra,
    inner: usize,
    samples: usize,
    seed: u64,
) -> Vec<(Element, Element)> {
    let basis = basis_elements(alg, inner);
    let d = basis.len();
    if d * d <= PAIR_BUDGET {
        let mut out = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    } else {
        sample_indices(d, samples, seed)
            .into_iter()
            .zip(sample_indices(d, samples, seed ^ 0x9e37_79b9))
            .map(|(i, j)| (basis[i].clone(), basis[j].clone()))
            .collect()
    }
}

fn poly_check(
    report: &mut Report,
    what: &str,
    inputs: serde_json::Value,
    lhs: &Polynomial,
    rhs: &Polynomial,
) {
    report.check_eq(|| what.to_string(), || inputs, lhs, rhs);
}

/// (m1), (m3), (m4), restriction consistency, and the symmetry lemmas used in the existence proof.
pub fn normalized_rules(
    alg: &HeckeAlgebra,
    n: usize,
    samples: usize,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let tr = NormalizedTrace::new(alg, TraceParams::symbolic(m));
    let z = Polynomial::var(m, Var::Z);
    let params = TraceParams::symbolic(m);
    for level in 0..=n {
        let value = tr.eval(&alg.one(level))?;
        poly_check(
            report,
            "(m1) tr(1) = 1",
            json!({ "n": level }),
            &value,
            &Polynomial::one(m),
        );
    }
    for i in 0..n {
        for a in basis_elements(alg, i) {
            let base = tr.eval(&a)?;
            let lifted = a.embed(i + 1);
            let inputs = || json!({ "alpha": a.to_string(), "i": i });
            if i >= 1 {
                let value = tr.eval(&alg.mul(&lifted, &s(alg, i + 1, i)?)?)?;
                poly_check(
                    report,
                    "(m3) tr(alpha s_i) = z tr(alpha)",
                    inputs(),
                    &value,
                    &(&z * &base),
                );
                let value = tr.eval(&lifted)?;
                poly_check(
                    report,
                    "tr restricted from H_(i+1) equals tr on H_i",
                    inputs(),
                    &value,
                    &base,
                );
            }
            let top = alg.tk(i + 1, i + 1)?;
            for k in 1..m {
                let value = tr.eval(&alg.mul(&lifted, &alg.pow(&top, k)?)?)?;
                let expected = params.y(k) * &base;
                let inputs = json!({ "alpha": a.to_string(), "i": i, "k": k });
                poly_check(
                    report,
                    "(m4) tr(alpha t_(i+1)^k) = y_k tr(alpha)",
                    inputs,
                    &value,
                    &expected,
                );
            }
        }
    }
    if n >= 2 {
        let inner = n - 1;
        let sn = s(alg, n, inner)?;
        let tt = t(alg, n)?;
        let eval = |x: &Element| tr.eval(x);
        for (x, y) in inner_pairs(alg, inner, samples, seed) {
            let (xe, ye) = (x.embed(n), y.embed(n));
            let lhs = eval(&alg.product(n, [&xe, &sn, &ye, &sn])?)?;
            let rhs = eval(&alg.product(n, [&sn, &xe, &sn, &ye])?)?;
            let inputs = json!({ "x": x.to_string(), "y": y.to_string() });
            poly_check(
                report,
                "tr(x s_n y s_n) = tr(s_n x s_n y)",
                inputs,
                &lhs,
                &rhs,
            );
        }
        for h in basis_elements(alg, inner) {
            let he = h.embed(n);
            for i in 1..inner {
                let w = alg.mul(&he, &tail(alg, inner, i, n)?)?;
                let inputs = || json!({ "h": h.to_string(), "i": i });
                let lhs = eval(&alg.mul(&w, &tt)?)?;
                let rhs = eval(&alg.mul(&tt, &w)?)?;
                poly_check(
                    report,
                    "tr(h s_n...s_i t) = tr(t h s_n...s_i)",
                    inputs(),
                    &lhs,
                    &rhs,
                );
                for j in 1..=inner {
                    let sj = s(alg, n, j)?;
                    let lhs = eval(&alg.mul(&w, &sj)?)?;
                    let rhs = eval(&alg.mul(&sj, &w)?)?;
                    let inputs = json!({ "h": h.to_string(), "i": i, "j": j });
                    poly_check(
                        report,
                        "tr(h s_n...s_i s_j) = tr(s_j h s_n...s_i)",
                        inputs,
                        &lhs,
                        &rhs,
                    );
                }
                for k in 1..m {
                    let wk = alg.mul(&w, &alg.pow(&alg.tk(i, n)?, k)?)?;
                    let inputs = || json!({ "h": h.to_string(), "i": i, "k": k });
                    let lhs = eval(&alg.mul(&wk, &sn)?)?;
                    let rhs = eval(&alg.mul(&sn, &wk)?)?;
                    poly_check(
                        report,
                        "tr(h s_n...s_i t_i^k s_n) = tr(s_n h s_n...s_i t_i^k)",
                        inputs(),
                        &lhs,
                        &rhs,
                    );
                    let lhs = eval(&alg.mul(&wk, &tt)?)?;
                    let rhs = eval(&alg.mul(&tt, &wk)?)?;
                    poly_check(
                        report,
                        "tr(h s_n...s_i t_i^k t) = tr(t h s_n...s_i t_i^k)",
                        inputs(),
                        &lhs,
                        &rhs,
                    );
                }
            }
            for k in 1..m {
                let w = alg.mul(&he, &alg.pow(&alg.tk(n, n)?, k)?)?;
                let lhs = eval(&alg.mul(&w, &tt)?)?;
                let rhs = eval(&alg.mul(&tt, &w)?)?;
                let inputs = json!({ "h": h.to_string(), "k": k });
                poly_check(
                    report,
                    "tr(h t_(n+1)^k t) = tr(t h t_(n+1)^k)",
                    inputs,
                    &lhs,
                    &rhs,
                );
                for i in 1..n {
                    let si = s(alg, n, i)?;
                    let lhs = eval(&alg.mul(&w, &si)?)?;
                    let rhs = eval(&alg.mul(&si, &w)?)?;
                    let inputs = json!({ "h": h.to_string(), "k": k, "i": i });
                    poly_check(
                        report,
                        "tr(h t_(n+1)^k s_i) = tr(s_i h t_(n+1)^k)",
                        inputs,
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

/// (M1), (M3), (M5), the `J_(n+1)^k s_n` identities, and the lemmas used in the symmetry proof.
pub fn raw_rules(
    alg: &HeckeAlgebra,
    n: usize,
    samples: usize,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let params = TraceParams::symbolic(m);
    let tr = NonNormalizedTrace::new(alg, params.clone());
    let z = Polynomial::var(m, Var::Z);
    let zero = Polynomial::zero(m);
    for level in 1..=n {
        let value = tr.eval(&alg.one(level))?;
        poly_check(
            report,
            "(M1) Tr(1) = 0",
            json!({ "n": level }),
            &value,
            &zero,
        );
    }
    for k in 1..m {
        let value = tr.eval(&alg.pow(&alg.jm(1, 1)?, k)?)?;
        poly_check(
            report,
            "(M5) Tr(J_1^k) = y_k",
            json!({ "k": k }),
            &value,
            params.y(k),
        );
    }
    for i in 1..n {
        let value = tr.eval(&s(alg, i + 1, i)?)?;
        poly_check(report, "(M3) Tr(s_i) = z", json!({ "i": i }), &value, &z);
        for h in basis_elements(alg, i) {
            let base = tr.eval(&h)?;
            let lifted = h.embed(i + 1);
            let inputs = || json!({ "h": h.to_string(), "i": i });
            let value = tr.eval(&alg.mul(&lifted, &s(alg, i + 1, i)?)?)?;
            poly_check(
                report,
                "(M3) Tr(h s_i) = z Tr(h)",
                inputs(),
                &value,
                &(&z * &base),
            );
            let value = tr.eval(&lifted)?;
            poly_check(
                report,
                "Tr restricted from H_(i+1) equals Tr on H_i",
                inputs(),
                &value,
                &base,
            );
        }
    }
    for j in 1..n {
        let sj = s(alg, n, j)?;
        let (upper, lower) = (alg.jm(j + 1, n)?, alg.jm(j, n)?);
        for k in 1..m {
            let mut sum = Element::zero(m, n);
            for i in 0..k {
                sum = &sum + &alg.mul(&alg.pow(&upper, k - 1 - i)?, &alg.pow(&lower, i)?)?;
            }
            let (up_k, low_k) = (alg.pow(&upper, k)?, alg.pow(&lower, k)?);
            let inputs = || json!({ "n": j, "k": k });
            report.check_eq(
                || "J_(n+1)^k s_n = s_n J_n^k + sum J_(n+1)^(k-1-i) J_n^i".into(),
                inputs,
                &alg.mul(&up_k, &sj)?,
                &(&alg.mul(&sj, &low_k)? + &sum),
            );
            report.check_eq(
                || "s_n J_(n+1)^k = J_n^k s_n + sum J_(n+1)^(k-1-i) J_n^i".into(),
                inputs,
                &alg.mul(&sj, &up_k)?,
                &(&alg.mul(&low_k, &sj)? + &sum),
            );
        }
    }
    if n >= 2 {
        let inner = n - 1;
        let sn = s(alg, n, inner)?;
        let tt = t(alg, n)?;
        let top = alg.jm(n, n)?;
        let eval = |x: &Element| tr.eval(x);
        for (x, y) in inner_pairs(alg, inner, samples, seed) {
            let (xe, ye) = (x.embed(n), y.embed(n));
            let xy = eval(&alg.mul(&x, &y)?)?;
            for k in 1..m {
                let value = eval(&alg.product(n, [&xe, &alg.pow(&top, k)?, &ye])?)?;
                let expected = &tr.moment(n, k)? * &xy;
                let inputs = json!({ "x": x.to_string(), "y": y.to_string(), "k": k });
                poly_check(
                    report,
                    "Tr(x J_(n+1)^k y) = M(n+1, k) Tr(xy)",
                    inputs,
                    &value,
                    &expected,
                );
            }
            let lhs = eval(&alg.product(n, [&xe, &sn, &ye, &sn])?)?;
            let rhs = eval(&alg.product(n, [&sn, &xe, &sn, &ye])?)?;
            let inputs = json!({ "x": x.to_string(), "y": y.to_string() });
            poly_check(
                report,
                "Tr(x s_n y s_n) = Tr(s_n x s_n y)",
                inputs,
                &lhs,
                &rhs,
            );
        }
        for h in basis_elements(alg, inner) {
            let he = h.embed(n);
            for i in 1..inner {
                let w = alg.mul(&he, &tail(alg, inner, i, n)?)?;
                for k in 1..m {
                    let wk = alg.mul(&w, &alg.pow(&alg.jm(i, n)?, k)?)?;
                    let inputs = || json!({ "h": h.to_string(), "i": i, "k": k });
                    let lhs = eval(&alg.mul(&wk, &sn)?)?;
                    let rhs = eval(&alg.mul(&sn, &wk)?)?;
                    poly_check(
                        report,
                        "Tr(h s_n...s_i J_i^k s_n) = Tr(s_n h s_n...s_i J_i^k)",
                        inputs(),
                        &lhs,
                        &rhs,
                    );
                    let lhs = eval(&alg.mul(&wk, &tt)?)?;
                    let rhs = eval(&alg.mul(&tt, &wk)?)?;
                    poly_check(
                        report,
                        "Tr(h s_n...s_i J_i^k t) = Tr(t h s_n...s_i J_i^k)",
                        inputs(),
                        &lhs,
                        &rhs,
                    );
                }
            }
            for k in 1..m {
                let w = alg.mul(&he, &alg.pow(&top, k)?)?;
                let lhs = eval(&alg.mul(&w, &tt)?)?;
                let rhs = eval(&alg.mul(&tt, &w)?)?;
                let inputs = json!({ "h": h.to_string(), "k": k });
                poly_check(
                    report,
                    "Tr(h J_(n+1)^k t) = Tr(t h J_(n+1)^k)",
                    inputs,
                    &lhs,
                    &rhs,
                );
                for i in 1..n {
                    let si = s(alg, n, i)?;
                    let lhs = eval(&alg.mul(&w, &si)?)?;
                    let rhs = eval(&alg.mul(&si, &w)?)?;
                    let inputs = json!({ "h": h.to_string(), "k": k, "i": i });
                    poly_check(
                        report,
                        "Tr(h J_(n+1)^k s_i) = Tr(s_i h J_(n+1)^k)",
                        inputs,
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

/// Which trace a symmetry scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Normalized,
    NonNormalized,
}

/// Scan `f(ab) = f(ba)` over basis pairs; violations come out smallest pair first.
pub fn symmetry(
    alg: &HeckeAlgebra,
    n: usize,
    which: Which,
    exhaustive: bool,
    seed: u64,
    report: &mut Report,
) -> Result<(), SuiteError> {
    let m = alg.m();
    let normalized = NormalizedTrace::new(alg, TraceParams::symbolic(m));
    let raw = NonNormalizedTrace::new(alg, TraceParams::symbolic(m));
    let eval = |x: &Element| match which {
        Which::Normalized => normalized.eval(x),
        Which::NonNormalized => raw.eval(x),
    };
    let basis = basis_elements(alg, n);
    let d = basis.len();
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
    } else {
        sample_indices(d, SYMMETRY_PAIRS, seed)
            .into_iter()
            .zip(sample_indices(d, SYMMETRY_PAIRS, seed ^ 0x9e37_79b9))
            .collect()
    };
    report.samples += pairs.len();
    let name = match which {
        Which::Normalized => "tr",
        Which::NonNormalized => "Tr",
    };
    let mut found = Vec::new();
    for &(i, j) in &pairs {
        let (a, b) = (&basis[i], &basis[j]);
        let ab = eval(&alg.mul(a, b)?)?;
        let ba = eval(&alg.mul(b, a)?)?;
        report.checks += 1;
        if ab != ba {
            let (ma, mb) = (single(a), single(b));
            let key = (
                ma.degree() + mb.degree(),
                ma.perm.length() + mb.perm.length(),
                ma.clone(),
                mb.clone(),
            );
            let violation = Violation {
                description: format!("{name}(ab) = {name}(ba)"),
                inputs: json!({ "a": a.to_string(), "b": b.to_string() }),
                lhs: ab.to_string(),
                rhs: ba.to_string(),
            };
            found.push((key, violation));
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    found.dedup_by(|x, y| x.0 == y.0);
    report.pass &= found.is_empty();
    report.violations.extend(found.into_iter().map(|(_, v)| v));
    Ok(())
}
