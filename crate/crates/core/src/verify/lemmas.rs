//! Identity batteries for the commutation lemmas between `s_i`, `J_j`, `t_k`.

use super::Report;
use crate::coeffring::{Polynomial, Var};
use crate::heckealg::{AlgebraError, Element, HeckeAlgebra, Letter};
use serde_json::json;

/// Positive exponents exercised by the battery: `1..m`, or just `1` when `m = 1`.
fn exponents(m: usize) -> std::ops::RangeInclusive<usize> {
    1..=(m - 1).max(1)
}

struct Gens<'a> {
    alg: &'a HeckeAlgebra,
    n: usize,
}

impl Gens<'_> {
    fn s(&self, i: usize) -> Result<Element, AlgebraError> {
        self.alg.word(self.n, &[Letter::S(i)])
    }

    fn t(&self) -> Result<Element, AlgebraError> {
        self.alg.word(self.n, &[Letter::T])
    }

    /// `s_top s_(top-1) ... s_bottom`, empty when `top < bottom`.
    fn down(&self, top: usize, bottom: usize) -> Result<Element, AlgebraError> {
        let letters: Vec<Letter> = (bottom..=top).rev().map(Letter::S).collect();
        self.alg.word(self.n, &letters)
    }

    /// `s_bottom ... s_top`, empty when `top < bottom`.
    fn up(&self, bottom: usize, top: usize) -> Result<Element, AlgebraError> {
        let letters: Vec<Letter> = (bottom..=top).map(Letter::S).collect();
        self.alg.word(self.n, &letters)
    }

    fn jm(&self, k: usize) -> Result<Element, AlgebraError> {
        self.alg.jm(k, self.n)
    }

    fn tk(&self, k: usize) -> Result<Element, AlgebraError> {
        self.alg.tk(k, self.n)
    }

    fn lk(&self, k: usize) -> Result<Element, AlgebraError> {
        self.alg.lk(k, self.n)
    }

    fn pow(&self, x: &Element, k: usize) -> Result<Element, AlgebraError> {
        self.alg.pow(x, k)
    }

    fn prod(&self, xs: &[&Element]) -> Result<Element, AlgebraError> {
        self.alg.product(self.n, xs.iter().copied())
    }

    fn commutator(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        Ok(&self.alg.mul(x, y)? - &self.alg.mul(y, x)?)
    }
}

fn record(
    report: &mut Report,
    what: &str,
    inputs: serde_json::Value,
    lhs: &Element,
    rhs: &Element,
) {
    report.check_eq(|| what.to_string(), || inputs, lhs, rhs);
}

/// The five parts of the `s_i`/`J_j` commutation lemma in `H_n`.
pub fn s_j_lemma(alg: &HeckeAlgebra, n: usize, report: &mut Report) -> Result<(), AlgebraError> {
    let g = Gens { alg, n };
    let m = alg.m();
    let one = alg.one(n);
    for j in 1..n {
        let lhs = &g.prod(&[&g.s(j)?, &g.jm(j)?])? - &g.prod(&[&g.jm(j + 1)?, &g.s(j)?])?;
        record(
            report,
            "s_j J_j - J_(j+1) s_j = -1",
            json!({ "j": j }),
            &lhs,
            &-&one,
        );
    }
    for j in 2..=n {
        let lhs = &g.prod(&[&g.s(j - 1)?, &g.jm(j)?])? - &g.prod(&[&g.jm(j - 1)?, &g.s(j - 1)?])?;
        record(
            report,
            "s_(j-1) J_j - J_(j-1) s_(j-1) = 1",
            json!({ "j": j }),
            &lhs,
            &one,
        );
    }
    for i in 1..n {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            let (s, jj) = (g.s(i)?, g.jm(j)?);
            record(
                report,
                "s_i J_j = J_j s_i for i != j-1, j",
                json!({ "i": i, "j": j }),
                &alg.mul(&s, &jj)?,
                &alg.mul(&jj, &s)?,
            );
        }
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let (a, b) = (g.jm(j)?, g.jm(k)?);
            record(
                report,
                "J_j J_k = J_k J_j",
                json!({ "j": j, "k": k }),
                &alg.mul(&a, &b)?,
                &alg.mul(&b, &a)?,
            );
        }
    }
    for j in 1..n {
        let s = g.s(j)?;
        let product = alg.mul(&g.jm(j)?, &g.jm(j + 1)?)?;
        let sum = &g.jm(j)? + &g.jm(j + 1)?;
        record(
            report,
            "s_j J_j J_(j+1) = J_j J_(j+1) s_j",
            json!({ "j": j }),
            &alg.mul(&s, &product)?,
            &alg.mul(&product, &s)?,
        );
        record(
            report,
            "s_j (J_j + J_(j+1)) = (J_j + J_(j+1)) s_j",
            json!({ "j": j }),
            &alg.mul(&s, &sum)?,
            &alg.mul(&sum, &s)?,
        );
    }
    let scalars = [
        ("2", Polynomial::from_int(m, 2)),
        ("z", Polynomial::var(m, Var::Z)),
    ];
    for (name, a) in &scalars {
        let shift = Element::scalar(m, n, a.clone());
        let mut product = alg.one(n);
        for j in 1..=n {
            product = alg.mul(&product, &(&g.jm(j)? - &shift))?;
            for i in (1..n).filter(|&i| i != j) {
                let s = g.s(i)?;
                record(
                    report,
                    "s_i commutes with (J_1-a)...(J_j-a) for i != j",
                    json!({ "i": i, "j": j, "a": name }),
                    &alg.mul(&s, &product)?,
                    &alg.mul(&product, &s)?,
                );
            }
        }
    }
    Ok(())
}

/// The six parts of the `s`/`t` lemma in `H_n`.
pub fn s_t_lemma(alg: &HeckeAlgebra, n: usize, report: &mut Report) -> Result<(), AlgebraError> {
    let g = Gens { alg, n };
    let m = alg.m();
    for a in 1..n {
        for b in (1..=n).filter(|&b| a != b && a + 1 != b) {
            let (s, t) = (g.s(a)?, g.tk(b)?);
            record(
                report,
                "(i) s_a t_b = t_b s_a for a != b, b-1",
                json!({ "a": a, "b": b }),
                &alg.mul(&s, &t)?,
                &alg.mul(&t, &s)?,
            );
        }
        record(
            report,
            "(ii) s_a t_a = t_(a+1) s_a",
            json!({ "a": a }),
            &g.prod(&[&g.s(a)?, &g.tk(a)?])?,
            &g.prod(&[&g.tk(a + 1)?, &g.s(a)?])?,
        );
    }
    for a in 1..n {
        for b in a + 1..=n {
            let lhs = g.commutator(&g.tk(a)?, &g.tk(b)?)?;
            let rhs = &g.commutator(&g.lk(a)?, &g.tk(b)?)? - &g.commutator(&g.tk(a)?, &g.lk(b)?)?;
            record(
                report,
                "(iii) t_a t_b - t_b t_a = [L_a, t_b] - [t_a, L_b]",
                json!({ "a": a, "b": b }),
                &lhs,
                &rhs,
            );
            let core = g.commutator(&g.s(1)?, &g.t()?)?;
            // This conjugate sends the strand pair (1, 2) to (b, a).
            let left = g.prod(&[&g.down(b - 1, 1)?, &g.down(a - 1, 2)?])?;
            let right = g.prod(&[&g.up(2, a - 1)?, &g.up(1, b - 1)?])?;
            record(
                report,
                "(iii) t_a t_b - t_b t_a = s_(b-1)...s_1 s_(a-1)...s_2 (s_1 t - t s_1) s_2...s_(a-1) s_1...s_(b-1)",
                json!({ "a": a, "b": b }),
                &lhs,
                &g.prod(&[&left, &core, &right])?,
            );
            // Conjugating by w = s_(a-1)...s_1 s_(b-1)...s_2 sends (1, 2) to (a, b).
            let left = g.prod(&[&g.down(a - 1, 1)?, &g.down(b - 1, 2)?])?;
            let right = g.prod(&[&g.up(2, b - 1)?, &g.up(1, a - 1)?])?;
            record(
                report,
                "(iii) t_a t_b - t_b t_a = w (s_1 t - t s_1) w^-1",
                json!({ "a": a, "b": b }),
                &lhs,
                &g.prod(&[&left, &core, &right])?,
            );
        }
    }
    if n >= 2 {
        let (s1, t) = (g.s(1)?, g.t()?);
        for l in exponents(m) {
            for k in exponents(m) {
                let lhs = g.prod(&[&g.pow(&t, l)?, &s1, &g.pow(&t, k)?, &s1])?;
                let mut rhs = g.prod(&[&s1, &g.pow(&t, k)?, &s1, &g.pow(&t, l)?])?;
                for i in 1..=l {
                    rhs = &rhs + &g.prod(&[&g.pow(&t, l - i)?, &s1, &g.pow(&t, k + i - 1)?])?;
                    rhs = &rhs - &g.prod(&[&g.pow(&t, k + i - 1)?, &s1, &g.pow(&t, l - i)?])?;
                }
                record(
                    report,
                    "(iv) t^l s_1 t^k s_1 expansion",
                    json!({ "l": l, "k": k }),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    for p in 1..n {
        let t = g.t()?;
        for l in exponents(m) {
            for k in exponents(m) {
                let lhs = alg.mul(&g.pow(&g.tk(p)?, l)?, &g.pow(&g.tk(p + 1)?, k)?)?;
                // (s_(p-1) s_p)(s_(p-2) s_(p-1))...(s_1 s_2) core (s_2 s_1)...(s_p s_(p-1))
                let mut left = alg.one(n);
                for q in (1..p).rev() {
                    left = g.prod(&[&left, &g.s(q)?, &g.s(q + 1)?])?;
                }
                let mut right = alg.one(n);
                for q in 1..p {
                    right = g.prod(&[&right, &g.s(q + 1)?, &g.s(q)?])?;
                }
                let core = g.prod(&[&g.pow(&t, l)?, &g.s(1)?, &g.pow(&t, k)?, &g.s(1)?])?;
                record(
                    report,
                    "(v) t_p^l t_(p+1)^k as a conjugate of t^l s_1 t^k s_1",
                    json!({ "p": p, "l": l, "k": k }),
                    &lhs,
                    &g.prod(&[&left, &core, &right])?,
                );
            }
        }
        for k in exponents(m) {
            let tk = g.pow(&g.tk(p + 1)?, k)?;
            let loop_word = g.prod(&[&g.down(p, 1)?, &g.up(2, p)?])?;
            let lhs = alg.mul(&tk, &t)?;
            let rhs = &(&alg.mul(&t, &tk)? + &g.prod(&[&g.pow(&t, k)?, &loop_word])?)
                - &g.prod(&[&loop_word, &g.pow(&t, k)?])?;
            record(
                report,
                "(vi) t_(p+1)^k t expansion",
                json!({ "p": p, "k": k }),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(())
}

/// The commutator formula for `t_p^l t_(p+a)^k`, for offsets `a <= 2`.
pub fn t_commutator(alg: &HeckeAlgebra, n: usize, report: &mut Report) -> Result<(), AlgebraError> {
    let g = Gens { alg, n };
    let m = alg.m();
    for p in 1..n {
        for offset in (1..=2).filter(|a| p + a <= n) {
            let conj_left = g.down(p + offset - 1, p + 1)?;
            let conj_right = g.up(p + 1, p + offset - 1)?;
            let s = g.s(p)?;
            let tp = g.tk(p)?;
            for l in exponents(m) {
                for k in exponents(m) {
                    let a = g.pow(&tp, l)?;
                    let b = g.pow(&g.tk(p + offset)?, k)?;
                    let mut rhs = alg.mul(&b, &a)?;
                    for i in 1..=l {
                        let plus = g.prod(&[&g.pow(&tp, l - i)?, &s, &g.pow(&tp, k + i - 1)?])?;
                        let minus = g.prod(&[&g.pow(&tp, k + i - 1)?, &s, &g.pow(&tp, l - i)?])?;
                        rhs = &rhs + &g.prod(&[&conj_left, &(&plus - &minus), &conj_right])?;
                    }
                    record(
                        report,
                        "t_p^l t_(p+a)^k commutator expansion",
                        json!({ "p": p, "a": offset, "l": l, "k": k }),
                        &alg.mul(&a, &b)?,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(())
}
