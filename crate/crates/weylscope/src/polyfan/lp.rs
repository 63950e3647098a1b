//! Exact simplex method over ℚ (Bland's rule), used as an independent
//! containment test between H-descriptions.

use num_traits::{Signed, Zero};

use crate::linalg::to_q;
use crate::rational::{q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(Q),
    Unbounded,
}

/// Maximizes `c·x` subject to `A x ≤ b`, `x ≥ 0`, where `b ≥ 0`.
pub fn maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> LpOutcome {
    assert!(b.iter().all(|x| !x.is_negative()), "right-hand side must be nonnegative");
    let m = a.len();
    let n = c.len();
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| q(i64::from(i == j))));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut obj: Vec<Q> = c.to_vec();
    obj.extend((0..=m).map(|_| Q::zero()));
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let Some(j) = (0..n + m).find(|&j| obj[j].is_positive()) else {
            return LpOutcome::Optimal(-obj[width - 1].clone());
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((k, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            return LpOutcome::Unbounded;
        };
        let piv = t[r][j].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[j].is_zero() {
                let f = row[j].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        let f = obj[j].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
        basis[r] = j;
    }
}

fn split(f: &[i64]) -> Vec<Q> {
    let mut v = to_q(f);
    v.extend(f.iter().map(|&c| q(-c)));
    v
}

/// Whether `{ineqs ≤ 0, eqs = 0}` implies `⟨u,φ⟩ ≤ 0`.
pub fn implies(ineqs: &[Vec<i64>], eqs: &[Vec<i64>], phi: &[i64]) -> bool {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for f in ineqs {
        a.push(split(f));
        b.push(Q::zero());
    }
    for f in eqs {
        a.push(split(f));
        b.push(Q::zero());
        let neg: Vec<i64> = f.iter().map(|c| -c).collect();
        a.push(split(&neg));
        b.push(Q::zero());
    }
    a.push(split(phi));
    b.push(q(1));
    match maximize(&a, &b, &split(phi)) {
        LpOutcome::Optimal(v) => v.is_zero(),
        LpOutcome::Unbounded => false,
    }
}

/// Whether the first H-description defines a subset of the second.
pub fn h_contained(ineqs1: &[Vec<i64>], eqs1: &[Vec<i64>], ineqs2: &[Vec<i64>], eqs2: &[Vec<i64>]) -> bool {
    ineqs2.iter().all(|f| implies(ineqs1, eqs1, f))
        && eqs2.iter().all(|f| {
            let neg: Vec<i64> = f.iter().map(|c| -c).collect();
            implies(ineqs1, eqs1, f) && implies(ineqs1, eqs1, &neg)
        })
}

/// Mutual implication of two H-descriptions.
pub fn h_equivalent(ineqs1: &[Vec<i64>], eqs1: &[Vec<i64>], ineqs2: &[Vec<i64>], eqs2: &[Vec<i64>]) -> bool {
    h_contained(ineqs1, eqs1, ineqs2, eqs2) && h_contained(ineqs2, eqs2, ineqs1, eqs1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lp() {
        // max x + y s.t. x + 2y ≤ 4, 3x + y ≤ 6
        let a = vec![to_q(&[1, 2]), to_q(&[3, 1])];
        let b = vec![q(4), q(6)];
        assert_eq!(maximize(&a, &b, &to_q(&[1, 1])), LpOutcome::Optimal(Q::new(14.into(), 5.into())));
        assert_eq!(maximize(&[to_q(&[1, -1])], &[q(1)], &to_q(&[0, 1])), LpOutcome::Unbounded);
    }

    #[test]
    fn implication() {
        let quad = vec![vec![-1, 0], vec![0, -1]];
        assert!(implies(&quad, &[], &[-1, -1]));
        assert!(!implies(&quad, &[], &[1, -1]));
        assert!(implies(&[], &[vec![1, 0]], &[1, 0]));
        assert!(h_equivalent(&quad, &[], &[vec![-1, 0], vec![0, -1], vec![-1, -2]], &[]));
        assert!(!h_equivalent(&quad, &[], &[vec![-1, 0]], &[]));
    }
}
