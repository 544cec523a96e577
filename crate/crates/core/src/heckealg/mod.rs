//! The algebra kernel: Jucys–Murphy standard basis, products and word normalization.

mod element;
mod relations;
mod word;

pub use element::{Element, Exps, Monomial};
pub use relations::check_relations;
pub use word::{GenWord, Letter};

use crate::coeffring::{elem_sym, CoeffError, Polynomial};
use crate::symgroup::{PermError, Permutation};
use itertools::Itertools;
use smallvec::SmallVec;
use std::collections::HashMap;
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ambient mismatch: (m, n) = {left:?} vs {right:?}")]
    AmbientMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{what} index {index} out of range for n = {n}")]
    Index {
        what: &'static str,
        index: usize,
        n: usize,
    },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("invalid element JSON: {0}")]
    Json(String),
}

/// Shared multiplication context for a fixed `m`.
///
/// Holds memo tables for reductions of Jucys–Murphy powers; every entry is a
/// pure function of its key, so concurrent use gives deterministic results.
pub struct HeckeAlgebra {
    m: usize,
    elem_sym: Vec<Polynomial>,
    /// `J_k^m` in normal form at ambient `k`, for `k = 1, 2, ...`.
    top_powers: RwLock<Vec<Element>>,
    /// Normal forms of commuting products `J^c` with some exponent `>= m`.
    powers: RwLock<HashMap<Exps, Element>>,
}

impl HeckeAlgebra {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "m must be positive");
        HeckeAlgebra {
            m,
            elem_sym: (0..=m).map(|i| elem_sym(i, m).unwrap()).collect(),
            top_powers: RwLock::new(Vec::new()),
            powers: RwLock::new(HashMap::new()),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `m^n n!`.
    pub fn dimension(&self, n: usize) -> usize {
        self.m.pow(n as u32) * (1..=n).product::<usize>()
    }

    /// The standard basis of `H_n` in monomial order.
    pub fn basis(&self, n: usize) -> Vec<Monomial> {
        let perms = Permutation::all(n);
        if n == 0 {
            return vec![Monomial::identity(0)];
        }
        (0..n)
            .map(|_| 0..self.m as u16)
            .multi_cartesian_product()
            .flat_map(|exp| perms.iter().map(move |w| Monomial::new(&exp, w.clone())))
            .collect()
    }

    fn check_index(&self, what: &'static str, k: usize, n: usize) -> Result<(), AlgebraError> {
        if k == 0 || k > n {
            Err(AlgebraError::Index { what, index: k, n })
        } else {
            Ok(())
        }
    }

    fn same_m(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.m() == self.m {
            Ok(())
        } else {
            Err(AlgebraError::AmbientMismatch {
                left: (self.m, x.n()),
                right: (x.m(), x.n()),
            })
        }
    }

    pub fn one(&self, n: usize) -> Element {
        Element::one(self.m, n)
    }

    /// The Jucys–Murphy element `J_k` of `H_n`.
    pub fn jm(&self, k: usize, n: usize) -> Result<Element, AlgebraError> {
        self.check_index("J", k, n)?;
        let mut exp: Exps = SmallVec::from_elem(0, n);
        exp[k - 1] = 1;
        self.reduced_power(&exp)
    }

    /// `L_k = (1 k) + ... + (k-1 k)`.
    pub fn lk(&self, k: usize, n: usize) -> Result<Element, AlgebraError> {
        self.check_index("L", k, n)?;
        let mut out = Element::zero(self.m, n);
        for i in 1..k {
            out.add_term(
                Monomial::from_perm(Permutation::transposition(i, k, n)?),
                Polynomial::one(self.m),
            );
        }
        Ok(out)
    }

    /// `t_k = J_k - L_k`.
    pub fn tk(&self, k: usize, n: usize) -> Result<Element, AlgebraError> {
        Ok(&self.jm(k, n)? - &self.lk(k, n)?)
    }

    /// Normal form of `J_k^m` inside `H_n`.
    pub fn reduce_power(&self, k: usize, n: usize) -> Result<Element, AlgebraError> {
        self.check_index("J", k, n)?;
        Ok(self.top_power(k).embed(n))
    }

    fn top_power(&self, k: usize) -> Element {
        if let Some(x) = self.top_powers.read().unwrap().get(k - 1) {
            return x.clone();
        }
        let mut table = self.top_powers.write().unwrap();
        while table.len() < k {
            let next = match table.last() {
                None => self.first_power(),
                Some(prev) => self.next_power(prev),
            };
            table.push(next);
        }
        table[k - 1].clone()
    }

    /// `J_1^m = sum_{i=1}^m (-1)^(i+1) e_i J_1^(m-i)`.
    fn first_power(&self) -> Element {
        let m = self.m;
        let mut out = Element::zero(m, 1);
        for i in 1..=m {
            let c = if i % 2 == 1 {
                self.elem_sym[i].clone()
            } else {
                -&self.elem_sym[i]
            };
            out.add_term(Monomial::from_exp(&[(m - i) as u16]), c);
        }
        out
    }

    /// `J_{k+1}^m = s_k J_k^m s_k + sum_{i<m} s_k J_{k+1}^(m-1-i) J_k^i`.
    fn next_power(&self, prev: &Element) -> Element {
        let k = prev.n();
        let n = k + 1;
        let m = self.m;
        let mut out = self
            .left_mul_s(k, &prev.embed(n))
            .unwrap()
            .right_mul_s(k)
            .unwrap();
        for i in 0..m {
            let mut exp: Exps = SmallVec::from_elem(0, n);
            exp[k - 1] = i as u16;
            exp[k] = (m - 1 - i) as u16;
            let x = Element::monomial(m, Monomial::from_exp(&exp));
            out = &out + &self.left_mul_s(k, &x).unwrap();
        }
        out
    }

    /// Normal form of the commuting product `J_1^c_1 ... J_n^c_n` with arbitrary exponents.
    pub fn reduced_power(&self, c: &[u16]) -> Result<Element, AlgebraError> {
        let n = c.len();
        let m = self.m as u16;
        let Some(j) = c.iter().position(|&a| a >= m) else {
            return Ok(Element::monomial(self.m, Monomial::from_exp(c)));
        };
        let key: Exps = c.iter().copied().collect();
        if let Some(x) = self.powers.read().unwrap().get(&key) {
            return Ok(x.clone());
        }
        let mut rest = key.clone();
        rest[j] -= m;
        let reduction = self.top_power(j + 1).embed(n);
        let mut out = Element::zero(self.m, n);
        for (mono, coeff) in reduction.terms() {
            let shifted: Exps = rest.iter().zip(&mono.exp).map(|(a, b)| a + b).collect();
            let part = self.reduced_power(&shifted)?.right_mul_perm(&mono.perm)?;
            out.add_scaled(coeff, &part);
        }
        self.powers.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// `x * J_j`.
    pub fn right_mul_j(&self, x: &Element, j: usize) -> Result<Element, AlgebraError> {
        self.same_m(x)?;
        let n = x.n();
        self.check_index("J", j, n)?;
        let mut out = Element::zero(self.m, n);
        for (mono, c) in x.terms() {
            let word = mono.perm.reduced_word();
            let mut strand = j;
            for p in (0..word.len()).rev() {
                let letter = word[p];
                let sign = if strand == letter {
                    strand = letter + 1;
                    -1
                } else if strand == letter + 1 {
                    strand = letter;
                    1
                } else {
                    continue;
                };
                let mut rest = word[..p].to_vec();
                rest.extend_from_slice(&word[p + 1..]);
                let perm = Permutation::from_word(&rest, n)?;
                let coeff = if sign < 0 { -c } else { c.clone() };
                out.add_term(
                    Monomial {
                        exp: mono.exp.clone(),
                        perm,
                    },
                    coeff,
                );
            }
            let mut exp = mono.exp.clone();
            exp[strand - 1] += 1;
            let lead = self.reduced_power(&exp)?.right_mul_perm(&mono.perm)?;
            out.add_scaled(c, &lead);
        }
        Ok(out)
    }

    /// `x * s_i`.
    pub fn right_mul_s(&self, x: &Element, i: usize) -> Result<Element, AlgebraError> {
        self.same_m(x)?;
        x.right_mul_s(i)
    }

    /// `s_i * x`, commuting `s_i` past the Jucys–Murphy part of each term.
    pub fn left_mul_s(&self, i: usize, x: &Element) -> Result<Element, AlgebraError> {
        self.same_m(x)?;
        let n = x.n();
        if i == 0 || i >= n {
            return Err(AlgebraError::Index {
                what: "s",
                index: i,
                n,
            });
        }
        let mut out = Element::zero(self.m, n);
        for (mono, c) in x.terms() {
            let p = mono.exp[i - 1];
            let q = mono.exp[i];
            let with_pair = |a: u16, b: u16| {
                let mut e = mono.exp.clone();
                e[i - 1] = a;
                e[i] = b;
                e
            };
            // s J_i^p J_{i+1}^q = J_i^q J_{i+1}^p s
            //   + sum_{l<q} J_i^l J_{i+1}^(p+q-1-l) - sum_{j<p} J_i^(p-1-j) J_{i+1}^(j+q)
            let swapped = Monomial {
                exp: with_pair(q, p),
                perm: mono.perm.simple_mul(i),
            };
            out.add_term(swapped, c.clone());
            for l in 0..q {
                let part = self
                    .reduced_power(&with_pair(l, p + q - 1 - l))?
                    .right_mul_perm(&mono.perm)?;
                out.add_scaled(c, &part);
            }
            let neg = -c;
            for j in 0..p {
                let part = self
                    .reduced_power(&with_pair(p - 1 - j, j + q))?
                    .right_mul_perm(&mono.perm)?;
                out.add_scaled(&neg, &part);
            }
        }
        Ok(out)
    }

    /// The product `x * y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.same_m(x)?;
        self.same_m(y)?;
        if x.n() != y.n() {
            return Err(AlgebraError::AmbientMismatch {
                left: (x.m(), x.n()),
                right: (y.m(), y.n()),
            });
        }
        let mut out = Element::zero(self.m, x.n());
        for (mono, c) in y.terms() {
            let mut acc = x.clone();
            for (strand, &a) in mono.exp.iter().enumerate() {
                for _ in 0..a {
                    acc = self.right_mul_j(&acc, strand + 1)?;
                }
            }
            acc = acc.right_mul_perm(&mono.perm)?;
            out.add_scaled(c, &acc);
        }
        Ok(out)
    }

    /// Product of several factors, left to right.
    pub fn product<'a>(
        &self,
        n: usize,
        factors: impl IntoIterator<Item = &'a Element>,
    ) -> Result<Element, AlgebraError> {
        let mut acc = self.one(n);
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, x: &Element, k: usize) -> Result<Element, AlgebraError> {
        let mut acc = self.one(x.n());
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `w * x` for a permutation `w`, applied letter by letter from the right.
    pub fn left_mul_perm(&self, w: &Permutation, x: &Element) -> Result<Element, AlgebraError> {
        let mut acc = x.clone();
        for &i in w.reduced_word().iter().rev() {
            acc = self.left_mul_s(i, &acc)?;
        }
        Ok(acc)
    }

    /// `x * y` computed by left multiplications, an independent route to [`HeckeAlgebra::mul`].
    pub fn mul_via_left(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.m, x.n());
        for (mono, c) in x.terms() {
            let moved = self.left_mul_perm(&mono.perm, y)?;
            for (inner, d) in moved.terms() {
                let exp: Exps = mono
                    .exp
                    .iter()
                    .zip(&inner.exp)
                    .map(|(a, b)| a + b)
                    .collect();
                let part = self.reduced_power(&exp)?.right_mul_perm(&inner.perm)?;
                out.add_scaled(&(c * d), &part);
            }
        }
        Ok(out)
    }
}
