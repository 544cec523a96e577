//! Inductive bases of `H_(n+1)` as a left `H_n`-module, and the t-basis.
//!
//! Every standard monomial `J^a J_(n+1)^k w' (s_n ... s_i)` of `H_(n+1)` is the
//! leading term of `J^a w'` times exactly one label word, and the remaining
//! terms of that product have smaller Jucys–Murphy degree. Peeling off leading
//! terms therefore terminates and yields the unique decomposition.

use crate::heckealg::{AlgebraError, Element, Exps, HeckeAlgebra, Monomial};
use crate::symgroup::Permutation;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

/// A t-basis word `t_1^a_1 ... t_n^a_n w`, stored with the same layout as [`Monomial`].
pub type TMonomial = Monomial;

/// Module basis words of `H_(n+1)` over `H_n`. `Tail(i)` is `s_n ... s_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Unit,
    Tail(usize),
    TailJ(usize, usize),
    TopJ(usize),
    TailT(usize, usize),
    TopT(usize),
}

impl Label {
    pub fn name(&self) -> &'static str {
        match self {
            Label::Unit => "Unit",
            Label::Tail(_) => "Tail",
            Label::TailJ(..) => "TailJ",
            Label::TopJ(_) => "TopJ",
            Label::TailT(..) => "TailT",
            Label::TopT(_) => "TopT",
        }
    }

    pub fn tail_index(&self) -> Option<usize> {
        match *self {
            Label::Tail(i) | Label::TailJ(i, _) | Label::TailT(i, _) => Some(i),
            _ => None,
        }
    }

    pub fn exponent(&self) -> Option<usize> {
        match *self {
            Label::TailJ(_, k) | Label::TailT(_, k) | Label::TopJ(k) | Label::TopT(k) => Some(k),
            _ => None,
        }
    }

    /// Apply the identifications `k = 0 -> Tail(i)` and `Tail(top) -> Unit`.
    pub fn canonical(self, top: usize) -> Label {
        match self {
            Label::TailJ(i, 0) | Label::TailT(i, 0) => Label::Tail(i).canonical(top),
            Label::TopJ(0) | Label::TopT(0) => Label::Unit,
            Label::Tail(i) if i == top => Label::Unit,
            other => other,
        }
    }

    /// Labels of the J-form basis of `H_(n+1)` over `H_n`.
    pub fn j_labels(m: usize, n: usize) -> Vec<Label> {
        Self::family(m, n, Label::TailJ, Label::TopJ)
    }

    /// Labels of the t-form basis of `H_(n+1)` over `H_n`.
    pub fn t_labels(m: usize, n: usize) -> Vec<Label> {
        Self::family(m, n, Label::TailT, Label::TopT)
    }

    fn family(
        m: usize,
        n: usize,
        tail: fn(usize, usize) -> Label,
        top: fn(usize) -> Label,
    ) -> Vec<Label> {
        let mut out = vec![Label::Unit];
        out.extend((1..=n).map(Label::Tail));
        for i in 1..=n {
            out.extend((1..m).map(|k| tail(i, k)));
        }
        out.extend((1..m).map(top));
        out
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Unit => write!(f, "Unit"),
            Label::Tail(i) => write!(f, "Tail({i})"),
            Label::TailJ(i, k) => write!(f, "TailJ({i},{k})"),
            Label::TopJ(k) => write!(f, "TopJ({k})"),
            Label::TailT(i, k) => write!(f, "TailT({i},{k})"),
            Label::TopT(k) => write!(f, "TopT({k})"),
        }
    }
}

/// Left `H_n`-coefficients of an element of `H_(n+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    /// Ambient of the decomposed element; coefficients live in `H_(top-1)`.
    pub top: usize,
    pub coeffs: BTreeMap<Label, Element>,
}

#[derive(Serialize)]
struct LabelJson {
    label: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    coeff: serde_json::Value,
}

impl Decomposition {
    pub fn coeff(&self, label: Label) -> Element {
        self.coeffs
            .get(&label)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.m, self.top - 1))
    }

    fn add(&mut self, label: Label, x: &Element) {
        let entry = self
            .coeffs
            .entry(label)
            .or_insert_with(|| Element::zero(x.m(), x.n()));
        *entry = &*entry + x;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let labels: Vec<LabelJson> = self
            .coeffs
            .iter()
            .map(|(l, c)| LabelJson {
                label: l.name(),
                i: l.tail_index(),
                k: l.exponent(),
                coeff: c.to_json(),
            })
            .collect();
        serde_json::json!({ "labels": labels })
    }
}

/// Change-of-basis machinery over a shared algebra context.
pub struct Inductive<'a> {
    alg: &'a HeckeAlgebra,
    t_products: RwLock<HashMap<Exps, Element>>,
    label_words: RwLock<HashMap<(Label, usize), Element>>,
}

impl<'a> Inductive<'a> {
    pub fn new(alg: &'a HeckeAlgebra) -> Self {
        Inductive {
            alg,
            t_products: RwLock::new(HashMap::new()),
            label_words: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &'a HeckeAlgebra {
        self.alg
    }

    /// `t_1^a_1 t_2^a_2 ... t_n^a_n` in the J-basis.
    pub fn t_product(&self, exp: &[u16]) -> Result<Element, AlgebraError> {
        let key: Exps = exp.iter().copied().collect();
        if let Some(x) = self.t_products.read().unwrap().get(&key) {
            return Ok(x.clone());
        }
        let n = exp.len();
        let mut acc = self.alg.one(n);
        for (slot, &a) in exp.iter().enumerate() {
            if a > 0 {
                let t = self.alg.tk(slot + 1, n)?;
                acc = self.alg.mul(&acc, &self.alg.pow(&t, a as usize)?)?;
            }
        }
        self.t_products.write().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    /// The J-basis expansion of a t-basis word.
    pub fn from_t_monomial(&self, mono: &TMonomial) -> Result<Element, AlgebraError> {
        self.t_product(&mono.exp)?.right_mul_perm(&mono.perm)
    }

    /// Expand an element written in the t-basis (terms read as t-words) into the J-basis.
    pub fn from_t_basis(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(x.m(), x.n());
        for (mono, c) in x.terms() {
            out.add_scaled(c, &self.from_t_monomial(mono)?);
        }
        Ok(out)
    }

    /// Rewrite `x` in the t-basis; the result's terms are t-words.
    pub fn to_t_basis(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut rest = x.clone();
        let mut out = Element::zero(x.m(), x.n());
        while let Some((mono, c)) = leading(&rest) {
            let expansion = self.from_t_monomial(&mono)?;
            rest = &rest - &expansion.scale(&c);
            out.add_term(mono, c);
        }
        Ok(out)
    }

    /// The label word as an element of `H_top`.
    pub fn label_word(&self, label: Label, top: usize) -> Result<Element, AlgebraError> {
        if let Some(x) = self.label_words.read().unwrap().get(&(label, top)) {
            return Ok(x.clone());
        }
        let alg = self.alg;
        let m = alg.m();
        let tail = |i: usize| Element::perm(m, Permutation::descending(top - 1, i, top));
        let word = match label {
            Label::Unit => alg.one(top),
            Label::Tail(i) => tail(i),
            Label::TailJ(i, k) => alg.mul(&tail(i), &alg.pow(&alg.jm(i, top)?, k)?)?,
            Label::TopJ(k) => alg.pow(&alg.jm(top, top)?, k)?,
            Label::TailT(i, k) => alg.mul(&tail(i), &alg.pow(&alg.tk(i, top)?, k)?)?,
            Label::TopT(k) => alg.pow(&alg.tk(top, top)?, k)?,
        };
        self.label_words
            .write()
            .unwrap()
            .insert((label, top), word.clone());
        Ok(word)
    }

    /// Decompose over the labels `Unit, Tail, TailJ, TopJ`.
    pub fn decompose_j(&self, x: &Element) -> Result<Decomposition, AlgebraError> {
        self.decompose(x, Label::TailJ, Label::TopJ)
    }

    /// Decompose over the labels `Unit, Tail, TailT, TopT`.
    pub fn decompose_t(&self, x: &Element) -> Result<Decomposition, AlgebraError> {
        self.decompose(x, Label::TailT, Label::TopT)
    }

    fn decompose(
        &self,
        x: &Element,
        tail_label: fn(usize, usize) -> Label,
        top_label: fn(usize) -> Label,
    ) -> Result<Decomposition, AlgebraError> {
        let top = x.n();
        assert!(top >= 1, "nothing to decompose in H_0");
        let n = top - 1;
        let mut out = Decomposition {
            m: x.m(),
            top,
            coeffs: BTreeMap::new(),
        };
        let mut rest = x.clone();
        while let Some((mono, c)) = leading(&rest) {
            let (head, tail) = mono.perm.last_strand_factor();
            let k = mono.exp[n] as usize;
            let label = match tail {
                None => top_label(k),
                Some(i) => tail_label(i, k),
            }
            .canonical(top);
            let coeff = Element::monomial(x.m(), Monomial::new(&mono.exp[..n], head)).scale(&c);
            let contribution = self
                .alg
                .mul(&coeff.embed(top), &self.label_word(label, top)?)?;
            rest = &rest - &contribution;
            out.add(label, &coeff);
        }
        Ok(out)
    }

    /// Sum of coefficient times label word.
    pub fn recompose(&self, d: &Decomposition) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(d.m, d.top);
        for (label, coeff) in &d.coeffs {
            let term = self
                .alg
                .mul(&coeff.embed(d.top), &self.label_word(*label, d.top)?)?;
            out = &out + &term;
        }
        Ok(out)
    }
}

/// The term of largest degree (ties broken by monomial order).
fn leading(x: &Element) -> Option<(Monomial, crate::coeffring::Polynomial)> {
    x.terms()
        .max_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(b.0)))
        .map(|(mono, c)| (mono.clone(), c.clone()))
}
