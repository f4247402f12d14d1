//! Exact integer linear algebra: dense matrices with small-integer
//! entries, Smith normal form over arbitrary-precision integers, and two
//! independent field-rank routines (elimination mod p, fraction-free
//! Bareiss elimination over the rationals).
//!
//! The Smith form drives integer homology; the field ranks deliberately do
//! NOT reuse it, so the universal-coefficient identity can act as a real
//! cross-check between code paths.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense row-major integer matrix. Boundary and Koszul matrices only ever
/// hold -1/0/1, so `i64` storage is exact; all elimination happens on
/// widened copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `rows cols` header plus one `i j value` line per nonzero entry.
    pub fn triplets_string(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.push_str(&format!("{i} {j} {v}\n"));
                }
            }
        }
        out
    }
}

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The invariant factors above 1, i.e. the torsion part of the
    /// cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Smith normal form by exact elimination with minimal-absolute-value
/// pivoting. Arbitrary-precision throughout; entries never overflow.
pub fn smith_normal_form(mat: &IntMat) -> SmithForm {
    let rows = mat.rows;
    let cols = mat.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(mat.get(i, j))).collect())
        .collect();
    let mut factors = Vec::new();
    let steps = rows.min(cols);
    for t in 0..steps {
        let Some((pi, pj)) = min_abs_pivot(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            // clear the pivot column
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = rounded_div(&a[i][t], &a[t][t]);
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    // remainder strictly smaller: promote it to pivot
                    a.swap(t, i);
                    clean = false;
                }
            }
            // clear the pivot row
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = rounded_div(&a[t][j], &a[t][t]);
                for row in a.iter_mut().take(rows).skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !a[t][j].is_zero() {
                    swap_cols(&mut a, t, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let col_clean = (t + 1..rows).all(|i| a[i][t].is_zero());
            let row_clean = (t + 1..cols).all(|j| a[t][j].is_zero());
            if !(col_clean && row_clean) {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    debug_assert!(factors
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    SmithForm { factors }
}

fn min_abs_pivot(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < a[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x == y {
        return;
    }
    for row in a {
        row.swap(x, y);
    }
}

/// Division rounded to nearest, which keeps remainders at most half the
/// pivot during elimination.
fn rounded_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = n.div_rem(d);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > d.abs() {
        if (n.sign() == d.sign()) || r.is_zero() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Rank over F_p by straightforward Gaussian elimination.
pub fn rank_mod_p(mat: &IntMat, p: u64) -> usize {
    assert!(p >= 2);
    let rows = mat.rows;
    let cols = mat.cols;
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..cols).map(|j| reduce(mat.get(i, j))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][col], p);
        for j in col..cols {
            a[rank][j] = mod_mul(a[rank][j], inv, p);
        }
        for i in 0..rows {
            if i != rank && a[i][col] != 0 {
                let factor = a[i][col];
                for j in col..cols {
                    let sub = mod_mul(factor, a[rank][j], p);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) works
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mod_mul(result, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    result
}

/// Rank over the rationals via fraction-free Bareiss elimination. A
/// separate code path from the Smith form on purpose.
pub fn rank_rational(mat: &IntMat) -> usize {
    let rows = mat.rows;
    let cols = mat.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(mat.get(i, j))).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = num / &prev; // exact by the Bareiss identity
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
