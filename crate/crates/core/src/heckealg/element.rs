use super::AlgebraError;
use crate::coeffring::{parse_polynomial, Polynomial, Rational, VarTable};
use crate::symgroup::Permutation;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub type Exps = SmallVec<[u16; 8]>;

/// A standard basis word `J_1^a_1 ... J_n^a_n w`.
///
/// Ordered lexicographically on the exponent vector, then the permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exp: Exps,
    pub perm: Permutation,
}

impl Monomial {
    pub fn new(exp: &[u16], perm: Permutation) -> Self {
        assert_eq!(exp.len(), perm.n(), "exponent/permutation size mismatch");
        Monomial {
            exp: exp.iter().copied().collect(),
            perm,
        }
    }

    pub fn identity(n: usize) -> Self {
        Monomial {
            exp: SmallVec::from_elem(0, n),
            perm: Permutation::identity(n),
        }
    }

    pub fn from_exp(exp: &[u16]) -> Self {
        Self::new(exp, Permutation::identity(exp.len()))
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Monomial {
            exp: SmallVec::from_elem(0, perm.n()),
            perm,
        }
    }

    pub fn n(&self) -> usize {
        self.exp.len()
    }

    pub fn degree(&self) -> u32 {
        self.exp.iter().map(|&a| a as u32).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.degree() == 0 && self.perm.is_identity()
    }

    pub fn embed(&self, n: usize) -> Self {
        let mut exp = self.exp.clone();
        exp.resize(n, 0);
        Monomial {
            exp,
            perm: self.perm.embed(n),
        }
    }

    pub fn restrict(&self, n: usize) -> Option<Self> {
        if self.exp[n..].iter().any(|&a| a != 0) {
            return None;
        }
        Some(Monomial {
            exp: self.exp[..n].iter().copied().collect(),
            perm: self.perm.restrict(n)?,
        })
    }

    /// Render with generator letters `J` (or `prefix`) and `s`, e.g. `J1^2*J3*s2*s1`.
    pub fn render(&self, prefix: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, &a) in self.exp.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("{prefix}{}", k + 1)),
                _ => parts.push(format!("{prefix}{}^{a}", k + 1)),
            }
        }
        parts.extend(self.perm.reduced_word().iter().map(|i| format!("s{i}")));
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A finite combination of standard monomials with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, Polynomial>,
}

impl Element {
    pub fn zero(m: usize, n: usize) -> Self {
        Element {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::monomial(m, Monomial::identity(n))
    }

    pub fn scalar(m: usize, n: usize, c: Polynomial) -> Self {
        let mut x = Self::zero(m, n);
        x.add_term(Monomial::identity(n), c);
        x
    }

    pub fn monomial(m: usize, mono: Monomial) -> Self {
        let mut x = Self::zero(m, mono.n());
        x.add_term(mono, Polynomial::one(m));
        x
    }

    pub fn perm(m: usize, perm: Permutation) -> Self {
        Self::monomial(m, Monomial::from_perm(perm))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Polynomial)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Polynomial {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.m))
    }

    /// The largest J-degree among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, mono: Monomial, c: Polynomial) {
        debug_assert_eq!(mono.n(), self.n);
        debug_assert!(mono.exp.iter().all(|&a| (a as usize) < self.m));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Polynomial, other: &Element) {
        self.assert_same(other);
        for (mono, d) in &other.terms {
            self.add_term(mono.clone(), c * d);
        }
    }

    fn same_ambient(&self, other: &Element) -> Result<(), AlgebraError> {
        if (self.m, self.n) == (other.m, other.n) {
            Ok(())
        } else {
            Err(AlgebraError::AmbientMismatch {
                left: (self.m, self.n),
                right: (other.m, other.n),
            })
        }
    }

    fn assert_same(&self, other: &Element) {
        if let Err(e) = self.same_ambient(other) {
            panic!("{e}");
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Polynomial) -> Element {
        let mut out = Element::zero(self.m, self.n);
        for (mono, d) in &self.terms {
            out.add_term(mono.clone(), c * d);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Element {
        let r = Rational::from_integer(c.into());
        let mut out = Element::zero(self.m, self.n);
        for (mono, d) in &self.terms {
            out.add_term(mono.clone(), d.scale(&r));
        }
        out
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs<E>(
        &self,
        mut f: impl FnMut(&Polynomial) -> Result<Polynomial, E>,
    ) -> Result<Element, E> {
        let mut out = Element::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.add_term(mono.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `self * w` for a permutation `w`; never needs reduction.
    pub fn right_mul_perm(&self, w: &Permutation) -> Result<Element, AlgebraError> {
        if w.n() != self.n {
            return Err(AlgebraError::AmbientMismatch {
                left: (self.m, self.n),
                right: (self.m, w.n()),
            });
        }
        let mut out = Element::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            let perm = mono.perm.compose(w).unwrap();
            out.add_term(
                Monomial {
                    exp: mono.exp.clone(),
                    perm,
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    pub fn right_mul_s(&self, i: usize) -> Result<Element, AlgebraError> {
        if i == 0 || i >= self.n {
            return Err(AlgebraError::Index {
                what: "s",
                index: i,
                n: self.n,
            });
        }
        let mut out = Element::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.terms.insert(
                Monomial {
                    exp: mono.exp.clone(),
                    perm: mono.perm.mul_simple(i),
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Re-ambient into `H_n` for `n >= self.n()`.
    pub fn embed(&self, n: usize) -> Element {
        assert!(n >= self.n, "cannot embed H_{} into H_{n}", self.n);
        Element {
            m: self.m,
            n,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.embed(n), c.clone()))
                .collect(),
        }
    }

    /// Re-ambient into `H_n`, if no term involves strands above `n`.
    pub fn restrict(&self, n: usize) -> Option<Element> {
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            terms.insert(mono.restrict(n)?, c.clone());
        }
        Some(Element {
            m: self.m,
            n,
            terms,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_json_with_basis("J")
    }

    pub fn to_json_with_basis(&self, basis: &str) -> serde_json::Value {
        let doc = ElementJson {
            m: self.m,
            n: self.n,
            basis: basis.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| TermJson {
                    exp: mono.exp.to_vec(),
                    perm: mono.perm.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("element serializes")
    }

    /// Inverse of [`Element::to_json`]; returns the basis tag alongside.
    pub fn from_json(value: &serde_json::Value) -> Result<(Element, String), AlgebraError> {
        let doc: ElementJson =
            serde_json::from_value(value.clone()).map_err(|e| AlgebraError::Json(e.to_string()))?;
        if doc.m == 0 {
            return Err(AlgebraError::Json("m must be positive".into()));
        }
        let vt = VarTable::new(doc.m);
        let mut out = Element::zero(doc.m, doc.n);
        for t in doc.terms {
            if t.exp.len() != doc.n || t.perm.n() != doc.n {
                return Err(AlgebraError::Json("term size differs from n".into()));
            }
            if t.exp.iter().any(|&a| a as usize >= doc.m) {
                return Err(AlgebraError::Json("exponent not below m".into()));
            }
            let c = parse_polynomial(&t.coeff, vt)?;
            out.add_term(Monomial::new(&t.exp, t.perm), c);
        }
        Ok((out, doc.basis))
    }

    /// Expression text using `prefix` for the commuting generators.
    pub fn render(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let word = mono.render(prefix);
            let (negative, coeff) = match c.as_constant() {
                Some(r) => (r.is_negative(), {
                    let a = r.abs();
                    (!a.is_one()).then(|| a.to_string())
                }),
                None if c.len() == 1 => {
                    let neg = c.leading().unwrap().1.is_negative();
                    (
                        neg,
                        Some(if neg { (-c).to_string() } else { c.to_string() }),
                    )
                }
                None => (false, Some(format!("({c})"))),
            };
            out.push_str(match (idx, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            match (coeff, word.as_str()) {
                (None, w) => out.push_str(w),
                (Some(c), "1") => out.push_str(&c),
                (Some(c), w) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(w);
                }
            }
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("J"))
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    m: usize,
    n: usize,
    basis: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u16>,
    perm: Permutation,
    coeff: String,
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}
