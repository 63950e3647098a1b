use std::collections::{HashMap, HashSet, VecDeque};

use super::{RootDatum, RootSet, TypeLabel, WeylElement, WeylGroup};
use crate::{Error, Result};

/// A closed generating set of roots Φ(P,S), standing for a parabolic subgroup containing S.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSet {
    members: RootSet,
}

/// An enumerated parabolic with its type and a Weyl element moving it to standard position.
#[derive(Clone, Debug)]
pub struct ParabolicEntry {
    pub set: ParabolicSet,
    pub label: TypeLabel,
    pub w: WeylElement,
}

pub fn is_closed(d: &RootDatum, set: &RootSet) -> bool {
    set.iter().all(|&a| set.iter().all(|&b| d.sum_root(a, b).is_none_or(|c| set.contains(&c))))
}

pub fn is_generating(d: &RootDatum, set: &RootSet) -> bool {
    d.all_roots().all(|a| set.contains(&a) || set.contains(&d.neg(a)))
}

impl ParabolicSet {
    pub fn new(d: &RootDatum, members: RootSet) -> Result<Self> {
        if members.iter().any(|&i| i >= d.num_roots()) {
            return Err(Error::Invalid("root index out of range".into()));
        }
        if !is_closed(d, &members) || !is_generating(d, &members) {
            return Err(Error::Invalid("root set is not closed and generating".into()));
        }
        Ok(ParabolicSet { members })
    }

    pub(crate) fn from_members(members: RootSet) -> Self {
        ParabolicSet { members }
    }

    /// Φ⁺ together with the roots in the span of `y`.
    pub fn standard(d: &RootDatum, y: &TypeLabel) -> Self {
        let mut members: RootSet = d.positive_roots().collect();
        members.extend(d.roots_in_span(y));
        ParabolicSet { members }
    }

    pub fn borel(d: &RootDatum) -> Self {
        Self::standard(d, &TypeLabel::empty())
    }

    pub fn whole(d: &RootDatum) -> Self {
        ParabolicSet { members: d.all_roots().collect() }
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.contains(&root)
    }

    pub fn is_subset(&self, other: &ParabolicSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Φ(L_P,S): roots α with α and −α in P.
    pub fn levi_roots(&self, d: &RootDatum) -> RootSet {
        self.members.iter().copied().filter(|&a| self.members.contains(&d.neg(a))).collect()
    }

    /// Φ(rad^u P,S) = Φ(P) − Φ(L_P).
    pub fn unipotent_radical_roots(&self, d: &RootDatum) -> RootSet {
        self.members.iter().copied().filter(|&a| !self.members.contains(&d.neg(a))).collect()
    }

    pub fn opposite(&self, d: &RootDatum) -> Self {
        let members = self
            .members
            .iter()
            .map(|&a| if self.members.contains(&d.neg(a)) { a } else { d.neg(a) })
            .collect();
        ParabolicSet { members }
    }

    pub fn is_standard(&self, d: &RootDatum) -> bool {
        d.positive_roots().all(|a| self.members.contains(&a))
    }

    /// Y_P when P is standard.
    pub fn standard_label(&self, d: &RootDatum) -> Option<TypeLabel> {
        self.is_standard(d)
            .then(|| TypeLabel::from_indices((0..d.rank()).filter(|&i| self.members.contains(&d.neg(i)))))
    }

    pub fn act(&self, w: &WeylElement) -> Self {
        ParabolicSet { members: w.act_set(&self.members) }
    }

    pub fn act_inverse(&self, w: &WeylElement) -> Self {
        ParabolicSet { members: w.act_inverse_set(&self.members) }
    }

    /// A minimal parabolic contained in P.
    pub fn borel_inside(&self, d: &RootDatum) -> RootSet {
        self.members
            .iter()
            .copied()
            .filter(|&a| d.is_positive(a) || !self.members.contains(&d.neg(a)))
            .collect()
    }

    /// Some reduced `w` with `w·P` standard, found by descent without enumerating W.
    pub fn reduce_to_standard(&self, d: &RootDatum) -> (WeylElement, TypeLabel) {
        let mut borel = self.borel_inside(d);
        let mut steps = Vec::new();
        while let Some(i) = (0..d.rank()).find(|&i| borel.contains(&d.neg(i))) {
            borel = borel.iter().map(|&b| d.reflect(i, b)).collect();
            steps.push(i);
        }
        steps.reverse();
        let w = WeylElement::from_word(d, &steps);
        let label = self.act(&w).standard_label(d).expect("descent reaches standard position");
        (w, label)
    }

    pub fn type_label(&self, d: &RootDatum) -> TypeLabel {
        self.reduce_to_standard(d).1
    }

    /// The ShortLex-least `w` with `w·P` standard.
    pub fn standard_position(&self, d: &RootDatum, group: &WeylGroup) -> (WeylElement, TypeLabel) {
        group
            .elements()
            .iter()
            .find_map(|w| self.act(w).standard_label(d).map(|y| (w.clone(), y)))
            .expect("every parabolic is conjugate to a standard one")
    }

    /// Short description: type label and the word moving the standard parabolic onto P.
    pub fn describe(&self, d: &RootDatum) -> String {
        let (w, y) = self.reduce_to_standard(d);
        if w.len() == 0 {
            format!("Y={y}")
        } else {
            format!("Y={y} w={}", w.inverse(d).word_string())
        }
    }
}

pub fn is_osculatory(d: &RootDatum, p: &ParabolicSet, q: &ParabolicSet) -> bool {
    let inter: RootSet = p.members.intersection(&q.members).copied().collect();
    is_closed(d, &inter) && is_generating(d, &inter)
}

/// All parabolic root sets, grouped by type (subset order) and then by ShortLex order
/// of the element moving them to standard position.
pub fn all_parabolics(d: &RootDatum, group: &WeylGroup) -> Vec<ParabolicEntry> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for y in TypeLabel::all(d.rank()) {
        let std = ParabolicSet::standard(d, &y);
        for w in group.elements() {
            let p = std.act_inverse(w);
            if seen.insert(p.clone()) {
                out.push(ParabolicEntry { set: p, label: y.clone(), w: w.clone() });
            }
        }
    }
    out
}

/// The W-orbit of the standard parabolic of type `y`, found by breadth-first search
/// over simple reflections; the standard parabolic comes first.
pub fn parabolic_orbit(d: &RootDatum, y: &TypeLabel, cap: usize) -> Result<Vec<ParabolicSet>> {
    let start = ParabolicSet::standard(d, y);
    let mut index = HashMap::from([(start.clone(), 0usize)]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for i in 0..d.rank() {
            let next = ParabolicSet { members: p.members.iter().map(|&b| d.reflect(i, b)).collect() };
            if !index.contains_key(&next) {
                index.insert(next.clone(), out.len());
                out.push(next.clone());
                if out.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}
