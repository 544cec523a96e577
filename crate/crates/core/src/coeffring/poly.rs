use super::{Bindings, CoeffError, Rational, Var, VarTable};
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector over the variable table, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(SmallVec<[u16; 8]>);

impl Exponents {
    pub fn zero(len: usize) -> Self {
        Exponents(SmallVec::from_elem(0, len))
    }

    pub fn get(&self, slot: usize) -> u16 {
        self.0[slot]
    }

    pub fn set(&mut self, slot: usize, e: u16) {
        self.0[slot] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    fn add(&self, other: &Self) -> Self {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Exponents)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    m: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rational::one())
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        let mut p = Self::zero(m);
        p.add_term(Exponents::zero(2 * m), c);
        p
    }

    pub fn from_int(m: usize, c: i64) -> Self {
        Self::constant(m, Rational::from_integer(c.into()))
    }

    pub fn var(m: usize, v: Var) -> Self {
        let vt = VarTable::new(m);
        let slot = vt
            .slot(v)
            .unwrap_or_else(|| panic!("variable {v} not in table for m = {m}"));
        let mut e = Exponents::zero(vt.len());
        e.set(slot, 1);
        let mut p = Self::zero(m);
        p.add_term(e, Rational::one());
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn var_table(&self) -> VarTable {
        VarTable::new(self.m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is constant (zero counts).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(e, _)| e.degree())
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.0.len(), 2 * self.m);
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_table(&self, other: &Self) -> Result<(), CoeffError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(CoeffError::TableMismatch(self.m, other.m))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CoeffError> {
        self.same_table(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CoeffError> {
        self.same_table(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CoeffError> {
        self.same_table(other)?;
        let mut out = Self::zero(self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`. Panics on table mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.m, other.m, "polynomial table mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// In-place `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Self, other: &Self) {
        assert_eq!(self.m, other.m, "polynomial table mismatch");
        assert_eq!(self.m, factor.m, "polynomial table mismatch");
        for (ef, cf) in &factor.terms {
            for (e, c) in &other.terms {
                self.add_term(ef.add(e), cf * c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.m);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Evaluate the bound variables; unbound ones survive.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Self, CoeffError> {
        let vt = self.var_table();
        let mut slots = Vec::new();
        for (v, value) in bindings.iter() {
            let slot = vt
                .slot(*v)
                .ok_or_else(|| CoeffError::UnknownVariable(v.to_string(), self.m))?;
            slots.push((slot, value));
        }
        let mut out = Self::zero(self.m);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let mut c = c.clone();
            for &(slot, value) in &slots {
                let k = e.get(slot);
                if k > 0 {
                    c *= num_traits::pow(value.clone(), k as usize);
                    e.set(slot, 0);
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor` when the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.m, divisor.m, "polynomial table mismatch");
        let (lead_e, lead_c) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.m);
        while let Some((e, c)) = rem.leading() {
            let shift = e.checked_sub(lead_e)?;
            let coeff = c / lead_c;
            let mut step = Self::zero(self.m);
            step.add_term(shift, coeff);
            rem = &rem - &(&step * divisor);
            quot.add_assign_ref(&step);
        }
        Some(quot)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vt = self.var_table();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (slot, &k) in e.as_slice().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(vt.var(slot).to_string()),
                    _ => factors.push(format!("{}^{}", vt.var(slot), k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial table mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, VarTable::new(2)).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(p("u1 + z") * p("u1 - z"), p("u1^2 - z^2"));
        assert!((p("u1*y1 + 3") * Polynomial::zero(2)).is_zero());
        assert_eq!(p("u1*y1 + 3") * Polynomial::one(2), p("u1*y1 + 3"));
        assert_eq!(p("u1 + u2") * p("u1*u2"), p("u1^2*u2 + u1*u2^2"));
    }

    #[test]
    fn canonical_text() {
        let x = p("2*u1^2*z") - p("y1").scale(&Rational::new(1.into(), 3.into()));
        assert_eq!(x.to_string(), "2*u1^2*z - 1/3*y1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("y1 - u1 + 5 - z*u2").to_string(), "-u2*z - u1 + y1 + 5");
    }

    #[test]
    fn substitution_examples() {
        let b = |v, n: i64| Bindings::new().bind(v, Rational::from_integer(n.into()));
        assert_eq!(p("u1*z + y1").substitute(&b(Var::Z, 0)).unwrap(), p("y1"));
        assert_eq!(p("y1").substitute(&b(Var::Y(1), 1)).unwrap(), p("1"));
        assert!(p("z^2 + z").substitute(&b(Var::Z, -1)).unwrap().is_zero());
        assert!(p("z").substitute(&b(Var::Y(2), 1)).is_err());
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let a = Polynomial::one(2);
        let b = Polynomial::one(3);
        assert_eq!(a.checked_add(&b), Err(CoeffError::TableMismatch(2, 3)));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("u1 + z");
        let b = p("u2 - 3*y1 + 1");
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p("u1 + 1").div_exact(&p("u2")), None);
        assert_eq!(p("0").div_exact(&b), Some(p("0")));
    }

    #[test]
    fn grlex_order() {
        let x = p("z^2 + u1*y1 + u2^3 + 1");
        let order: Vec<String> = x
            .terms()
            .rev()
            .map(|(e, _)| format!("{:?}", e.as_slice()))
            .collect();
        assert_eq!(
            order,
            [
                "[0, 3, 0, 0]",
                "[1, 0, 0, 1]",
                "[0, 0, 2, 0]",
                "[0, 0, 0, 0]"
            ]
        );
    }
}
