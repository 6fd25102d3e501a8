//! Exact rank of integer matrices.
//!
//! [`rank_exact`] runs fraction-free (Bareiss) elimination in checked `i128`
//! and restarts in arbitrary precision if an intermediate overflows.
//! [`rank_mod_p`] computes the rank over GF(p), a lower bound on the rational
//! rank.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

trait BareissScalar: Clone + Send + Sync {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn one() -> Self;
    /// `(pivot·a − left·top) / prev`, or `None` on overflow.
    fn step(pivot: &Self, a: &Self, left: &Self, top: &Self, prev: &Self) -> Option<Self>;
}

impl BareissScalar for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn one() -> Self {
        1
    }

    #[inline]
    fn step(pivot: &Self, a: &Self, left: &Self, top: &Self, prev: &Self) -> Option<Self> {
        let num = pivot.checked_mul(*a)?.checked_sub(left.checked_mul(*top)?)?;
        debug_assert_eq!(num % prev, 0);
        Some(num / prev)
    }
}

impl BareissScalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn one() -> Self {
        One::one()
    }

    fn step(pivot: &Self, a: &Self, left: &Self, top: &Self, prev: &Self) -> Option<Self> {
        Some((pivot * a - left * top) / prev)
    }
}

fn bareiss_rank<T: BareissScalar>(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<T>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
        .collect();
    let mut prev = T::one();
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        // full pivoting, first nonzero in row-major order
        let Some((pr, pc)) = (k..rows).find_map(|r| (k..cols).find(|&c| !a[r][c].is_zero()).map(|c| (r, c)))
        else {
            break;
        };
        a.swap(k, pr);
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let ok = tail.par_iter_mut().all(|row| {
            let left = row[k].clone();
            for j in k + 1..cols {
                match T::step(pivot, &row[j], &left, &pivot_row[j], &prev) {
                    Some(x) => row[j] = x,
                    None => return false,
                }
            }
            row[k] = T::from_i64(0);
            true
        });
        if !ok {
            return None;
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of an integer matrix.
pub fn rank_exact(matrix: &[Vec<i64>]) -> usize {
    bareiss_rank::<i128>(matrix).unwrap_or_else(|| bareiss_rank::<BigInt>(matrix).expect("bigint never overflows"))
}

/// Rank over GF(p). Requires `p` prime and below 2³¹.
///
/// Row updates are accumulated without reduction while they provably fit in
/// a `u64`; all live rows are reduced once that budget is used up.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    assert!((2..(1 << 31)).contains(&p), "modulus out of range");
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let pi = p as i64;
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
        .collect();
    let max_term = (p - 1) * (p - 1);
    let budget = ((u64::MAX - p) / max_term.max(1)).max(1);
    let mut pending = 0u64;

    let inv = |x: u64| -> u64 {
        let (mut result, mut base, mut e) = (1u64, x % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };

    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !a[r][col].is_multiple_of(p)) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot_inv = inv(a[rank][col] % p);
        for x in a[rank][col..].iter_mut() {
            *x = (*x % p) * pivot_inv % p;
        }
        if pending == budget {
            a[rank + 1..].par_iter_mut().for_each(|row| {
                for x in row[col..].iter_mut() {
                    *x %= p;
                }
            });
            pending = 0;
        }
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank][col..];
        tail.par_iter_mut().for_each(|row| {
            let f = row[col] % p;
            if f != 0 {
                let m = p - f;
                for (x, &y) in row[col..].iter_mut().zip(pivot_row) {
                    *x += m * y;
                }
            }
        });
        pending += 1;
        rank += 1;
    }
    rank
}
