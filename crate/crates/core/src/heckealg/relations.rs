use super::{AlgebraError, Element, HeckeAlgebra, Letter};
use crate::coeffring::{Polynomial, Var};
use crate::verify::Report;
use serde_json::json;

use Letter::{S, T};

/// Normalize both sides of every defining relation of `H_n` and report mismatches.
///
/// Families: the cyclotomic relation on `t`, `s_i^2 = 1`, the braid relation,
/// far commutation of the `s_i`, `t s_i = s_i t` for `i >= 2`, and
/// `t (s_1 t s_1 + s_1) = (s_1 t s_1 + s_1) t`.
pub fn check_relations(alg: &HeckeAlgebra, n: usize) -> Result<Report, AlgebraError> {
    let m = alg.m();
    let mut report = Report::new("relations", m, n, 0);
    let word = |letters: &[Letter]| alg.word(n, letters);
    let mut record = |family: &str, inputs: serde_json::Value, lhs: Element, rhs: Element| {
        report.check_eq(|| format!("relation {family}"), || inputs, &lhs, &rhs);
    };

    let mut cyclotomic = alg.one(n);
    let t = word(&[T])?;
    for i in 1..=m {
        let u = Element::scalar(m, n, Polynomial::var(m, Var::U(i)));
        cyclotomic = alg.mul(&cyclotomic, &(&t - &u))?;
    }
    record(
        "(t-u1)...(t-um) = 0",
        json!({ "m": m }),
        cyclotomic,
        Element::zero(m, n),
    );

    for i in 1..n {
        record(
            "s_i^2 = 1",
            json!({ "i": i }),
            word(&[S(i), S(i)])?,
            alg.one(n),
        );
    }
    for i in 1..n.saturating_sub(1) {
        record(
            "s_i s_(i+1) s_i = s_(i+1) s_i s_(i+1)",
            json!({ "i": i }),
            word(&[S(i), S(i + 1), S(i)])?,
            word(&[S(i + 1), S(i), S(i + 1)])?,
        );
    }
    for i in 1..n {
        for j in i + 2..n {
            record(
                "s_i s_j = s_j s_i for |i-j| > 1",
                json!({ "i": i, "j": j }),
                word(&[S(i), S(j)])?,
                word(&[S(j), S(i)])?,
            );
        }
    }
    for i in 2..n {
        record(
            "t s_i = s_i t for i >= 2",
            json!({ "i": i }),
            word(&[T, S(i)])?,
            word(&[S(i), T])?,
        );
    }
    if n >= 2 {
        let j2 = &word(&[S(1), T, S(1)])? + &word(&[S(1)])?;
        record(
            "t (s_1 t s_1 + s_1) = (s_1 t s_1 + s_1) t",
            json!({}),
            alg.mul(&t, &j2)?,
            alg.mul(&j2, &t)?,
        );
    }
    Ok(report)
}
