//! Exact matrix ranks: fraction-free integer elimination over the rationals
//! and modular elimination for prime characteristic. No floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over Q of an integer matrix, by cross-multiplication elimination on
/// arbitrary-precision integers. Rows are reduced by their content after each
/// step to keep entries small.
pub(crate) fn rank_char0(rows: usize, cols: usize, entries: &[i64]) -> usize {
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigInt::from(entries[r * cols + c])).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // prefer a pivot of minimal magnitude to limit growth
        let pivot = (rank..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for r in (rank + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let a = m[rank][col].clone();
            let b = m[r][col].clone();
            for c in col..cols {
                let v = &a * &m[r][c] - &b * &m[rank][c];
                m[r][c] = v;
            }
            let content = m[r][col..]
                .iter()
                .fold(BigInt::zero(), |g, v| g.gcd(v));
            if !content.is_zero() && content != BigInt::from(1) {
                for c in col..cols {
                    m[r][c] = &m[r][c] / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over F_p, `p` an odd or even prime below 2^31.
pub(crate) fn rank_mod_p(rows: usize, cols: usize, entries: &[i64], p: u64) -> usize {
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|r| (0..cols).map(|c| reduce(entries[r * cols + c])).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..cols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in (rank + 1)..rows {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}
