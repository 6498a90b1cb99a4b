//! Squarefree monomial ideals: construction from graphs, Alexander duality,
//! squarefree degree components, colon ideals, and unmixedness.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{mask_vertices, seq_lex_key, Graph};

/// A squarefree monomial, stored as the set of variable indices dividing it.
/// Bit `i - 1` of the mask means `x_i` divides the monomial.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    /// The unit monomial `1`.
    pub fn one() -> Monomial {
        Monomial(0)
    }

    /// Builds `x_{i_1} * ... * x_{i_k}` from 1-based indices.
    pub fn from_indices(indices: &[usize]) -> Result<Monomial> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > 64 {
                return Err(Error::VariableOutOfRange { index: i, n: 64 });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Monomial(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Monomial {
        Monomial(mask)
    }

    pub(crate) fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        mask_vertices(self.0).collect()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// `self / gcd(self, other)` — the colon quotient of squarefree monomials.
    pub fn quotient_by(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }
}

/// Canonical order: by degree, then like the sorted index sequences, so
/// `x1*x3 < x1*x4 < x2*x3`. Within a fixed degree the reverse of this order is
/// descending lexicographic order on monomials.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), seq_lex_key(self.0)).cmp(&(other.degree(), seq_lex_key(other.0)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in mask_vertices(self.0) {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A squarefree monomial ideal in `n` variables, kept as its minimal
/// generating set sorted canonically. The zero ideal has no generators; the
/// unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding non-minimal
    /// generators.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        for g in &gens {
            if let Some(i) = mask_vertices(g.mask()).find(|&i| i > n) {
                return Err(Error::VariableOutOfRange { index: i, n });
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.first().map(|g| g.degree())
    }

    /// True when nonzero and all generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        match self.gens.split_first() {
            None => false,
            Some((first, rest)) => rest.iter().all(|g| g.degree() == first.degree()),
        }
    }

    /// The edge ideal: one quadratic generator per edge of `g`.
    pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
        let gens = g
            .edges()
            .iter()
            .map(|&(i, j)| Monomial::from_indices(&[i, j]).unwrap())
            .collect();
        MonomialIdeal::new(g.n(), gens).unwrap()
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The Alexander dual: generators are the minimal transversals of the
    /// generator supports. Computed by folding in one generator at a time,
    /// extending each partial transversal that misses it by one of its
    /// variables, and pruning non-minimal results each round.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::DualOfZero);
        }
        if self.is_unit() {
            return Err(Error::DualOfUnit);
        }
        let mut partial: Vec<u64> = vec![0];
        for g in &self.gens {
            let mut next: Vec<u64> = Vec::with_capacity(partial.len());
            for &t in &partial {
                if t & g.mask() != 0 {
                    next.push(t);
                } else {
                    next.extend(mask_vertices(g.mask()).map(|v| t | (1 << (v - 1))));
                }
            }
            partial = minimal_masks(next);
        }
        MonomialIdeal::new(self.n, partial.into_iter().map(Monomial::from_mask).collect())
    }

    /// The ideal generated by the squarefree degree-`d` monomials of `self`.
    /// Zero when `d > n`.
    pub fn squarefree_component(&self, d: usize) -> MonomialIdeal {
        if d > self.n {
            return MonomialIdeal::zero(self.n);
        }
        let gens = subsets_of_size(full_mask(self.n), d)
            .into_iter()
            .map(Monomial::from_mask)
            .filter(|&m| self.contains(m))
            .collect();
        MonomialIdeal::new(self.n, gens).unwrap()
    }

    /// The colon ideal `(self) : (m)`, generated by `g / gcd(g, m)`.
    pub fn colon_by(&self, m: Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        MonomialIdeal::new(self.n, gens).unwrap()
    }

    /// True iff the Alexander dual is generated in a single degree, i.e. all
    /// minimal primes have the same height.
    pub fn is_unmixed(&self) -> Result<bool> {
        Ok(self.alexander_dual()?.is_equigenerated())
    }

    /// Stable text form, `x1*x2, x2*x3, ...`; `0` for the zero ideal.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.gens
                .iter()
                .map(|g| serde_json::json!(g.indices()))
                .collect(),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, gens={})", self.n, self.to_text())
    }
}

/// The ideal generated by all squarefree monomials of degree `d` in `n`
/// variables.
pub fn squarefree_veronese(n: usize, d: usize) -> Result<MonomialIdeal> {
    if n > 64 {
        return Err(Error::TooLarge(n));
    }
    if d > n {
        return Ok(MonomialIdeal::zero(n));
    }
    let gens = subsets_of_size(full_mask(n), d)
        .into_iter()
        .map(Monomial::from_mask)
        .collect();
    MonomialIdeal::new(n, gens)
}

/// The degree-`d` squarefree component of the Alexander dual of the edge
/// ideal: generated by the monomials of the size-`d` vertex covers of `g`.
pub fn dual_component(g: &Graph, d: usize) -> MonomialIdeal {
    if d > g.n() {
        return MonomialIdeal::zero(g.n());
    }
    let gens = subsets_of_size(full_mask(g.n()), d)
        .into_iter()
        .filter(|&m| g.is_vertex_cover_mask(m))
        .map(Monomial::from_mask)
        .collect();
    MonomialIdeal::new(g.n(), gens).unwrap()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All submasks of `universe` with exactly `size` bits, in sequence-lex order.
pub(crate) fn subsets_of_size(universe: u64, size: usize) -> Vec<u64> {
    let bits: Vec<u64> = mask_vertices(universe).map(|v| 1u64 << (v - 1)).collect();
    let n = bits.len();
    if size > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = (0..size).collect();
    loop {
        out.push(choice.iter().map(|&i| bits[i]).fold(0, |m, b| m | b));
        let mut i = size;
        while i > 0 && choice[i - 1] == n - size + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        choice[i - 1] += 1;
        for j in i..size {
            choice[j] = choice[j - 1] + 1;
        }
    }
}

/// Keeps the divisibility-minimal masks, sorted canonically.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|&m| (m.count_ones(), seq_lex_key(m)));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept
}

fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    minimal_masks(gens.into_iter().map(|g| g.mask()).collect())
        .into_iter()
        .map(Monomial::from_mask)
        .collect()
}
