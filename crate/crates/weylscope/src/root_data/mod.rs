//! Root data of split semisimple groups: roots, coroots, Weyl group and
//! parabolic subsets of roots.
//!
//! Roots are integer vectors in simple-root coordinates. Simple roots follow
//! the Bourbaki numbering and occupy root indices `0..rank`. Positive roots
//! come first, sorted by height; the negative of root `i` is root
//! `i + num_positive` (mod the root count). The Cartan matrix is stored as
//! `cartan[i][j] = ⟨α_j, α_i∨⟩`.

mod parabolic;
mod weyl;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::Signed;

use crate::rational::{q, Q};
use crate::{Error, Result};

pub use parabolic::{
    all_parabolics, is_closed, is_generating, is_osculatory, parabolic_orbit, ParabolicEntry, ParabolicSet,
};
pub use weyl::{WeylElement, WeylGroup};

/// A set of root indices.
pub type RootSet = BTreeSet<usize>;

const MAX_ROOTS: usize = 4096;

/// A subset Y of the simple roots, naming the type of the standard parabolic
/// whose Levi has simple roots Y. The empty label is the Borel type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel(pub BTreeSet<usize>);

impl TypeLabel {
    pub fn empty() -> Self {
        TypeLabel(BTreeSet::new())
    }

    pub fn full(rank: usize) -> Self {
        TypeLabel((0..rank).collect())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        TypeLabel(it.into_iter().collect())
    }

    /// The label `Δ − {α_i}` (0-based `i`).
    pub fn all_but(rank: usize, i: usize) -> Self {
        TypeLabel((0..rank).filter(|&j| j != i).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn is_subset(&self, other: &TypeLabel) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Parses `"a1,a3"` (1-based simple-root names); `""`, `"none"` and `"∅"` give the empty label.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "none" || s == "∅" || s == "{}" {
            return Ok(Self::empty());
        }
        let mut out = BTreeSet::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let digits = tok.strip_prefix('a').or_else(|| tok.strip_prefix('α')).unwrap_or(tok);
            let i: usize = digits
                .parse()
                .map_err(|_| Error::Invalid(format!("bad simple root name `{tok}`")))?;
            if i == 0 || i > rank {
                return Err(Error::Invalid(format!("simple root `{tok}` out of range 1..={rank}")));
            }
            out.insert(i - 1);
        }
        Ok(TypeLabel(out))
    }

    /// Every subset of `0..rank`, ordered by bitmask.
    pub fn all(rank: usize) -> Vec<TypeLabel> {
        (0u64..1 << rank)
            .map(|m| TypeLabel((0..rank).filter(|i| m >> i & 1 == 1).collect()))
            .collect()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    name: Option<String>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    reflections: Vec<Vec<usize>>,
    components: Vec<Vec<usize>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootDatum {}

fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn cartan_named(family: char, n: usize) -> Option<Vec<Vec<i64>>> {
    match (family, n) {
        ('A', n) if n >= 1 => Some(cartan_a(n)),
        ('B', n) if n >= 2 => {
            let mut a = cartan_a(n);
            a[n - 1][n - 2] = -2;
            Some(a)
        }
        ('C', n) if n >= 2 => {
            let mut a = cartan_a(n);
            a[n - 2][n - 1] = -2;
            Some(a)
        }
        ('D', n) if n >= 4 => {
            let mut a = cartan_a(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            Some(a)
        }
        ('G', 2) => Some(vec![vec![2, -3], vec![-1, 2]]),
        _ => None,
    }
}

fn block_diagonal(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    a
}

impl RootDatum {
    /// Builds a datum by name: `A1`..`A8`, `B2`..`B8`, `C2`..`C8`, `D4`..`D8`, `G2`,
    /// or products such as `A1xA1`.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownDatum(name.to_string());
        let mut blocks = Vec::new();
        for factor in name.split(['x', '×']) {
            let factor = factor.trim();
            let mut chars = factor.chars();
            let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
            let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
            if n > 8 {
                return Err(unknown());
            }
            blocks.push(cartan_named(family, n).ok_or_else(unknown)?);
        }
        Self::from_cartan(block_diagonal(&blocks), Some(name.to_string()))
    }

    /// Builds a datum from a Cartan matrix `cartan[i][j] = ⟨α_j, α_i∨⟩` of finite type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, name: Option<String>) -> Result<Self> {
        let n = cartan.len();
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if n == 0 {
            return bad("rank must be positive".into());
        }
        if n > 16 {
            return bad(format!("rank {n} is too large"));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return bad(format!("Cartan row {} has length {}, expected {n}", i + 1, row.len()));
            }
        }
        for (i, row) in cartan.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i == j && x != 2 {
                    return bad(format!("diagonal entry ({},{}) must be 2", i + 1, j + 1));
                }
                if i != j && (x > 0 || (x == 0) != (cartan[j][i] == 0)) {
                    return bad(format!("entry ({},{}) is not a valid Cartan entry", i + 1, j + 1));
                }
            }
        }
        let components = dynkin_components(&cartan);
        let sym = symmetrizer(&cartan, &components)?;

        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let reflect = |i: usize, b: &[i64]| -> Vec<i64> {
            let c: i64 = (0..n).map(|k| b[k] * cartan[i][k]).sum();
            let mut out = b.to_vec();
            out[i] -= c;
            out
        };
        let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let r = reflect(i, &b);
                if seen.insert(r.clone()) {
                    if seen.len() > MAX_ROOTS {
                        return bad("Cartan matrix is not of finite type".into());
                    }
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = Vec::new();
        for r in &seen {
            let nonneg = r.iter().all(|&c| c >= 0);
            let nonpos = r.iter().all(|&c| c <= 0);
            if !nonneg && !nonpos {
                return bad("Cartan matrix is not of finite type".into());
            }
            if nonneg {
                pos.push(r.clone());
            }
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let inner_simple = |j: usize, b: &[i64]| -> i64 { (0..n).map(|k| b[k] * sym[j] * cartan[j][k]).sum() };
        let mut coroots = Vec::with_capacity(roots.len());
        for b in &roots {
            let bb: i64 = (0..n).map(|j| b[j] * inner_simple(j, b)).sum();
            let mut cv = Vec::with_capacity(n);
            for j in 0..n {
                let num = 2 * inner_simple(j, b);
                if num % bb != 0 {
                    return bad("coroot is not integral".into());
                }
                cv.push(num / bb);
            }
            coroots.push(cv);
        }
        let reflections = (0..n)
            .map(|i| roots.iter().map(|b| index[&reflect(i, b)]).collect())
            .collect();
        Ok(RootDatum { name, cartan, sym, roots, coroots, npos, index, reflections, components })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("rank-{} datum", self.rank()))
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths of the simple roots divided by 2 (short roots give 1).
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    /// Values ⟨α_j, β∨⟩ for `j` in `0..rank`.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neg(&self, i: usize) -> usize {
        (i + self.npos) % self.roots.len()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        0..self.npos
    }

    pub fn all_roots(&self) -> std::ops::Range<usize> {
        0..self.roots.len()
    }

    /// ⟨β, γ∨⟩ for root indices β, γ.
    pub fn pairing(&self, beta: usize, gamma: usize) -> i64 {
        self.roots[beta].iter().zip(&self.coroots[gamma]).map(|(a, b)| a * b).sum()
    }

    /// W-invariant form with short roots of squared length 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += a[i] * b[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// Image of root `beta` under the simple reflection `s_i`.
    pub fn reflect(&self, i: usize, beta: usize) -> usize {
        self.reflections[i][beta]
    }

    pub fn reflection_perm(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    pub fn sum_root(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&v)
    }

    /// Simple roots in the support of a root.
    pub fn support(&self, i: usize) -> BTreeSet<usize> {
        self.roots[i].iter().enumerate().filter(|(_, c)| **c != 0).map(|(j, _)| j).collect()
    }

    /// Roots in the span of the simple roots `y`.
    pub fn roots_in_span(&self, y: &TypeLabel) -> RootSet {
        self.all_roots().filter(|&i| self.support(i).is_subset(&y.0)).collect()
    }

    /// Irreducible components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn dynkin_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Connected components of the Dynkin subgraph on `y`.
    pub fn components_of(&self, y: &TypeLabel) -> Vec<BTreeSet<usize>> {
        let mut left: BTreeSet<usize> = y.0.clone();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            left.remove(&start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                let nbrs: Vec<usize> = left.iter().copied().filter(|&w| self.dynkin_adjacent(v, w)).collect();
                for w in nbrs {
                    left.remove(&w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Indecomposable positive roots of a closed symmetric root subset, i.e. its base.
    pub fn base_of(&self, subsystem: &RootSet) -> Vec<usize> {
        let pos: Vec<usize> = subsystem.iter().copied().filter(|&i| self.is_positive(i)).collect();
        pos.iter()
            .copied()
            .filter(|&g| {
                !pos.iter().any(|&a| {
                    let diff: Vec<i64> = self.roots[g].iter().zip(&self.roots[a]).map(|(x, y)| x - y).collect();
                    self.index_of(&diff).is_some_and(|b| pos.contains(&b))
                })
            })
            .collect()
    }

    /// Cartan matrix `⟨β_j, β_i∨⟩` of a list of roots.
    pub fn cartan_of(&self, base: &[usize]) -> Vec<Vec<i64>> {
        base.iter().map(|&i| base.iter().map(|&j| self.pairing(j, i)).collect()).collect()
    }
}

fn dynkin_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if w != v && cartan[v][w] != 0 && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn symmetrizer(cartan: &[Vec<i64>], components: &[Vec<usize>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for comp in components {
        d[comp[0]] = Some(q(1));
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for &j in comp {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                let dj = di.clone() * q(cartan[i][j]) / q(cartan[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(x) if *x != dj => {
                        return Err(Error::InvalidDatum("Cartan matrix is not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let mut out = vec![0; n];
    for comp in components {
        let min = comp.iter().map(|&i| d[i].clone().expect("set")).min().expect("nonempty");
        for &i in comp {
            let r = d[i].clone().expect("set") / &min;
            if !r.is_integer() || !r.is_positive() {
                return Err(Error::InvalidDatum("root lengths are not commensurable".into()));
            }
            out[i] = i64::try_from(r.to_integer()).map_err(|_| Error::InvalidDatum("root length overflow".into()))?;
        }
    }
    Ok(out)
}
