//! Exact matrix rank over the rationals (fraction-free elimination) and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank over `Q`: Bareiss elimination in `i128`, redone with big integers on overflow.
    pub fn rank_rational(&self) -> usize {
        let small: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        bareiss_i128(small, self.rows, self.cols).unwrap_or_else(|| {
            let big = self.data.iter().map(|&x| BigInt::from(x)).collect();
            bareiss_big(big, self.rows, self.cols)
        })
    }

    /// Rank over `F_p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let mut a: Vec<u64> = self.data.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else { continue };
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
            let inv = mod_pow(a[rank * cols + c], p - 2, p);
            for i in rank + 1..rows {
                let f = a[i * cols + c] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f * a[rank * cols + j] % p;
                    a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `None` on overflow.
fn bareiss_i128(mut a: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else { continue };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let p = a[rank * cols + c];
        for i in rank + 1..rows {
            let f = a[i * cols + c];
            for j in c + 1..cols {
                let v = p.checked_mul(a[i * cols + j])?.checked_sub(f.checked_mul(a[rank * cols + j])?)?;
                a[i * cols + j] = v / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else { continue };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let p = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let f = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &p * &a[i * cols + j] - &f * &a[rank * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}
