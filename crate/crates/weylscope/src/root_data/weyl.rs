use std::collections::{HashSet, VecDeque};

use super::{RootDatum, RootSet};
use crate::{Error, Result};

/// An element of the Weyl group, `w = s_{word[0]} ⋯ s_{word[k-1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<Vec<i64>>,
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(d: &RootDatum) -> Self {
        let n = d.rank();
        WeylElement {
            word: vec![],
            matrix: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
            perm: d.all_roots().collect(),
        }
    }

    pub fn from_word(d: &RootDatum, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(d), |w, &i| w.times_simple(d, i))
    }

    /// `w · s_i`.
    pub fn times_simple(&self, d: &RootDatum, i: usize) -> Self {
        let n = d.rank();
        let mut matrix = self.matrix.clone();
        // (w·s_i)(α_k) = w(α_k) − a_{ik} w(α_i)
        for r in 0..n {
            for k in 0..n {
                matrix[r][k] = self.matrix[r][k] - d.cartan()[i][k] * self.matrix[r][i];
            }
        }
        let perm = d.reflection_perm(i).iter().map(|&b| self.perm[b]).collect();
        let mut word = self.word.clone();
        word.push(i);
        WeylElement { word, matrix, perm }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Action matrix on the character lattice in simple-root coordinates (columns are images of simple roots).
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn act_root(&self, beta: usize) -> usize {
        self.perm[beta]
    }

    pub fn act_set(&self, s: &RootSet) -> RootSet {
        s.iter().map(|&b| self.perm[b]).collect()
    }

    /// `w⁻¹(S)`.
    pub fn act_inverse_set(&self, s: &RootSet) -> RootSet {
        self.perm.iter().enumerate().filter(|(_, p)| s.contains(p)).map(|(i, _)| i).collect()
    }

    pub fn inverse(&self, d: &RootDatum) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(d, &rev)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, d: &RootDatum) -> usize {
        d.positive_roots().filter(|&b| !d.is_positive(self.perm[b])).count()
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("")
        }
    }
}

/// The full Weyl group, listed in ShortLex order of reduced words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn enumerate(d: &RootDatum, cap: usize) -> Result<Self> {
        let id = WeylElement::identity(d);
        let mut seen: HashSet<Vec<usize>> = HashSet::from([id.perm.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut elements = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..d.rank() {
                let next = w.times_simple(d, i);
                if seen.insert(next.perm.clone()) {
                    queue.push_back(next);
                }
            }
            elements.push(w);
            if seen.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
        }
        Ok(WeylGroup { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("nonempty group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_reduced_and_shortlex() {
        for name in ["A3", "B3", "G2"] {
            let d = RootDatum::named(name).unwrap();
            let g = WeylGroup::enumerate(&d, 10_000).unwrap();
            for pair in g.elements().windows(2) {
                let (a, b) = (pair[0].word(), pair[1].word());
                assert!(a.len() < b.len() || (a.len() == b.len() && a < b));
            }
            for w in g.elements() {
                assert_eq!(w.len(), w.inversions(&d));
                let m = w.matrix();
                for b in d.all_roots() {
                    let img: Vec<i64> = (0..d.rank())
                        .map(|r| (0..d.rank()).map(|k| m[r][k] * d.root(b)[k]).sum())
                        .collect();
                    assert_eq!(d.index_of(&img), Some(w.act_root(b)));
                }
            }
        }
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        let d = RootDatum::named("A2").unwrap();
        let g = WeylGroup::enumerate(&d, 100).unwrap();
        let w0 = g.longest();
        assert_eq!(w0.len(), 3);
        assert!(d.positive_roots().all(|b| !d.is_positive(w0.act_root(b))));
        assert!(w0.inverse(&d).act_inverse_set(&[0usize].into()) == w0.act_set(&[0usize].into()));
    }

    #[test]
    fn cap_is_enforced() {
        let d = RootDatum::named("A3").unwrap();
        assert_eq!(WeylGroup::enumerate(&d, 23).unwrap_err(), Error::CapExceeded { cap: 23 });
        assert_eq!(WeylGroup::enumerate(&d, 24).unwrap().len(), 24);
    }
}
