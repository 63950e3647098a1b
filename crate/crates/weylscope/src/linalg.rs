//! Gaussian elimination over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Q;

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// ⟨u, φ⟩ for an integer functional φ.
pub fn pair(phi: &[i64], u: &[Q]) -> Q {
    phi.iter()
        .zip(u)
        .filter(|(c, _)| **c != 0)
        .fold(Q::zero(), |acc, (c, x)| acc + x * Q::from_integer(BigInt::from(*c)))
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

/// Basis of {x ∈ ℚ^n : row · x = 0 for every row}.
pub fn kernel(rows: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let (m, pivots) = rref(rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `rows · x = rhs`, if any.
pub fn solve(rows: &[Vec<Q>], rhs: &[Q], n: usize) -> Option<Vec<Q>> {
    let aug: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let (m, pivots) = rref(&aug);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Reduces `v` modulo the row space of an rref basis; the result is a canonical representative.
pub fn reduce_mod(v: &[Q], basis: &[Vec<Q>], pivots: &[usize]) -> Vec<Q> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        if !out[p].is_zero() {
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &f * r;
            }
        }
    }
    out
}

pub fn in_span(v: &[Q], basis: &[Vec<Q>]) -> bool {
    let (b, piv) = rref(basis);
    is_zero(&reduce_mod(v, &b, &piv))
}

/// Positive multiple of `v` that is a primitive integer vector (zero stays zero).
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Primitive integer functional proportional to `v`, with sign preserved.
pub fn to_functional(v: &[Q]) -> Vec<i64> {
    primitive(v)
        .iter()
        .map(|x| {
            let n = x.to_integer();
            i64::try_from(n).expect("functional entry out of range")
        })
        .collect()
}

pub fn neg(v: &[Q]) -> Vec<Q> {
    v.iter().map(|x| -x).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(v: &[Q], c: &Q) -> Vec<Q> {
    v.iter().map(|x| x * c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| to_q(r)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            assert!(dot(row, &k[0]).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[q(2), q(0)], 2).unwrap(), vec![q(1), q(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&b, &[q(1), q(3)], 2).is_none());
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&[qr(1, 2), qr(-3, 4)]), vec![q(2), q(-3)]);
        assert_eq!(to_functional(&[q(4), q(0), q(-6)]), vec![2, 0, -3]);
    }

    #[test]
    fn reduction_is_canonical() {
        let (b, p) = rref(&m(&[&[1, 1, 0]]));
        let x = reduce_mod(&to_q(&[3, 1, 2]), &b, &p);
        let y = reduce_mod(&to_q(&[5, 3, 2]), &b, &p);
        assert_eq!(x, y);
    }
}
