//! Permutations in one-line notation.
//!
//! Products apply the left factor first: `(v*w)(i) = w(v(i))`, so the word
//! `s_{i1} s_{i2} ... s_{ir}` evaluates by composing its letters left to right.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("{0:?} is not a permutation of 1..n")]
    NotBijection(Vec<usize>),
    #[error("index {index} out of range for n = {n}")]
    Index { index: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: SmallVec<[u8; 8]>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;
    fn try_from(images: Vec<usize>) -> Result<Self, PermError> {
        Permutation::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images()
    }
}

/// A descending run `s_top s_(top-1) ... s_bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub top: usize,
    pub bottom: usize,
}

impl Run {
    pub fn letters(&self) -> impl Iterator<Item = usize> {
        (self.bottom..=self.top).rev()
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection(images.to_vec()));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(i: usize, n: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::Index { index: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The transposition `(i k)` for `1 <= i < k <= n`.
    pub fn transposition(i: usize, k: usize, n: usize) -> Result<Self, PermError> {
        if i == 0 || i >= k {
            return Err(PermError::Index { index: i, n });
        }
        if k > n {
            return Err(PermError::Index { index: k, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, k - 1);
        Ok(p)
    }

    /// Evaluate a word of simple transpositions.
    pub fn from_word(letters: &[usize], n: usize) -> Result<Self, PermError> {
        let mut p = Self::identity(n);
        for &i in letters {
            if i == 0 || i >= n {
                return Err(PermError::Index { index: i, n });
            }
            p.swap_values(i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize - 1])
                .collect(),
        })
    }

    /// `self * s_i`, i.e. swap the values `i` and `i+1` in the one-line form.
    pub fn mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.swap_values(i);
        p
    }

    /// `s_i * self`, i.e. swap the positions `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    fn swap_values(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x as usize == i {
                *x += 1;
            } else if *x as usize == i + 1 {
                *x -= 1;
            }
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images: SmallVec<[u8; 8]> = SmallVec::from_elem(0, self.n());
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = k as u8 + 1;
        }
        Permutation { images }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        self.images
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// A reduced word, found by repeatedly stripping a right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        let pos = |w: &Permutation, v: usize| w.images.iter().position(|&x| x as usize == v);
        'outer: loop {
            for i in 1..w.n() {
                if pos(&w, i + 1) < pos(&w, i) {
                    w.swap_values(i);
                    letters.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        letters.reverse();
        letters
    }

    /// The same permutation acting on `1..n` with the points above fixed.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.n(), "cannot embed S_{} into S_{n}", self.n());
        let mut images = self.images.clone();
        images.extend((self.n() + 1..=n).map(|x| x as u8));
        Permutation { images }
    }

    /// Restrict to `1..n`, if every point above `n` is fixed.
    pub fn restrict(&self, n: usize) -> Option<Self> {
        if n > self.n() || (n + 1..=self.n()).any(|x| self.apply(x) != x) {
            return None;
        }
        Some(Permutation {
            images: self.images[..n].iter().copied().collect(),
        })
    }

    /// The word `s_top s_(top-1) ... s_bottom` as a permutation of `1..n`.
    pub fn descending(top: usize, bottom: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        for i in (bottom..=top).rev() {
            p.swap_values(i);
        }
        p
    }

    /// Factor `w` in `S_(n+1)` as `w' * (s_n s_(n-1) ... s_i)` with `w'` in `S_n`.
    ///
    /// Returns `w'` and the index `i` of the tail, or `None` when `w` fixes `n+1`.
    pub fn last_strand_factor(&self) -> (Permutation, Option<usize>) {
        let top = self.n();
        assert!(top >= 1, "empty permutation has no last strand");
        let i = self.apply(top);
        if i == top {
            return (self.restrict(top - 1).unwrap(), None);
        }
        let tail = Self::descending(top - 1, i, top);
        let head = self.compose(&tail.inverse()).unwrap();
        (head.restrict(top - 1).unwrap(), Some(i))
    }

    /// Descending runs with strictly increasing tops, read left to right.
    pub fn jones_normal_form(&self) -> Vec<Run> {
        let mut runs = Vec::new();
        let mut w = self.clone();
        while w.n() > 1 {
            let (head, tail) = w.last_strand_factor();
            if let Some(i) = tail {
                runs.push(Run {
                    top: w.n() - 1,
                    bottom: i,
                });
            }
            w = head;
        }
        runs.reverse();
        runs
    }

    /// All permutations of `1..n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|v| Permutation {
                images: v.into_iter().map(|x| x as u8).collect(),
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}
