//! Shared test oracles, independent of the library's computation paths.
//!
//! The Betti oracle resolves through the Taylor complex: for each subset of
//! generators the strand of its lcm multidegree contributes, and ranks are
//! taken with a plain textbook elimination over `BigRational` (characteristic
//! 0) or a small prime field — none of which shares code with the library's
//! upper-Koszul homology or its fraction-free elimination.

// not every test target uses every oracle
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use edge_ideals::{FieldSpec, Monomial, MonomialIdeal};

/// Betti table computed from Taylor strands: map `(i, j) -> beta_{i,j}`.
pub fn taylor_betti(ideal: &MonomialIdeal, field: FieldSpec) -> BTreeMap<(usize, usize), usize> {
    assert!(!ideal.is_zero() && !ideal.is_unit());
    let gens: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| {
            g.indices()
                .iter()
                .fold(0u64, |m, &i| m | (1 << (i - 1)))
        })
        .collect();
    let m = gens.len();
    assert!(m <= 20, "oracle meant for small ideals");

    // group generator subsets by (lcm multidegree, cardinality)
    let mut strata: BTreeMap<u64, BTreeMap<usize, Vec<u32>>> = BTreeMap::new();
    for subset in 0u32..(1 << m) {
        let lcm = (0..m)
            .filter(|&k| subset & (1 << k) != 0)
            .fold(0u64, |l, k| l | gens[k]);
        strata
            .entry(lcm)
            .or_default()
            .entry(subset.count_ones() as usize)
            .or_default()
            .push(subset);
    }

    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&b, by_size) in &strata {
        if b == 0 {
            continue; // the empty subset; only relevant for R itself
        }
        let degree = b.count_ones() as usize;
        let max_s = *by_size.keys().max().unwrap();
        let empty: Vec<u32> = Vec::new();
        // boundary from s-subsets to (s-1)-subsets, keeping lcm fixed
        let boundary = |s: usize| -> Vec<Vec<i64>> {
            let cols = by_size.get(&s).unwrap_or(&empty);
            let rows = by_size.get(&(s - 1)).unwrap_or(&empty);
            let row_of: BTreeMap<u32, usize> =
                rows.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let mut mat = vec![vec![0i64; cols.len()]; rows.len()];
            for (c, &subset) in cols.iter().enumerate() {
                let members: Vec<usize> = (0..m).filter(|&k| subset & (1 << k) != 0).collect();
                for (pos, &k) in members.iter().enumerate() {
                    let smaller = subset & !(1 << k);
                    let lcm_smaller = members
                        .iter()
                        .filter(|&&k2| k2 != k)
                        .fold(0u64, |l, &k2| l | gens[k2]);
                    if lcm_smaller != b {
                        continue; // coefficient lands in the maximal ideal
                    }
                    let r = row_of[&smaller];
                    mat[r][c] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
            mat
        };
        let mut ranks: Vec<usize> = Vec::new(); // ranks[s] = rank of boundary from s-subsets
        for s in 0..=(max_s + 1) {
            if s == 0 {
                ranks.push(0);
            } else {
                ranks.push(oracle_rank(&boundary(s), field));
            }
        }
        for s in 1..=max_s {
            let dim_s = by_size.get(&s).map_or(0, |v| v.len());
            let homology = dim_s - ranks[s] - ranks[s + 1];
            if homology > 0 {
                // beta_{i, b}(I) = H_{i+1} of the strand of R/I
                *table.entry((s - 1, degree)).or_insert(0) += homology;
            }
        }
    }
    table
}

fn oracle_rank(mat: &[Vec<i64>], field: FieldSpec) -> usize {
    match field.characteristic() {
        0 => rank_rational(mat),
        p => rank_small_prime(mat, p as i64),
    }
}

fn rank_rational(mat: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = mat
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = a[r][c].clone();
                for c2 in 0..cols {
                    let delta = &factor * &a[rank][c2];
                    a[r][c2] -= delta;
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

fn rank_small_prime(mat: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = mat
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let inv = |x: i64| -> i64 {
        (1..p).find(|&y| x * y % p == 1).expect("prime field inverse")
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let f = inv(a[rank][c]);
        for x in a[rank].iter_mut() {
            *x = *x * f % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let factor = a[r][c];
                for c2 in 0..cols {
                    a[r][c2] = (a[r][c2] - factor * a[rank][c2]).rem_euclid(p);
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

/// A random squarefree non-unit, nonzero ideal with at most `max_gens`
/// generators in at most `max_vars` variables.
pub fn random_ideal(rng: &mut impl Rng, max_vars: usize, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(2..=max_vars);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let mask = rng.gen_range(1u64..(1 << n));
            let indices: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
            Monomial::from_indices(&indices).unwrap()
        })
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}
