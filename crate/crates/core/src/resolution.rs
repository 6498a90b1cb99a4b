//! Graded Betti numbers via upper Koszul simplicial complexes, linear
//! resolution and componentwise linearity tests, regularity, and linear
//! quotients.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{FieldSpec, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// Finitely supported table of graded Betti numbers: `(i, j) -> beta_{i,j}`,
/// absent entries are zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), beta)`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Castelnuovo-Mumford regularity: the maximum of `j - i` over the
    /// support.
    pub fn regularity(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .ok_or(Error::EmptyBettiTable)
    }

    /// Macaulay-style text rendering: one row per value of `j - i`, one
    /// column per homological degree `i`.
    pub fn to_text(&self) -> String {
        if self.entries.is_empty() {
            return "empty Betti table".into();
        }
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap();
        let min_d = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
        let max_d = self.entries.keys().map(|&(i, j)| j - i).max().unwrap();
        let cell = |v: usize| if v == 0 { ".".into() } else { v.to_string() };
        let mut rows = Vec::new();
        let mut header = vec!["".to_string()];
        header.extend((0..=max_i).map(|i| i.to_string()));
        rows.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=max_i).map(|i| {
            let t: usize = (min_d..=max_d).map(|d| self.get(i, i + d)).sum();
            cell(t)
        }));
        rows.push(totals);
        for d in min_d..=max_d {
            let mut row = vec![format!("{d}:")];
            row.extend((0..=max_i).map(|i| cell(self.get(i, i + d))));
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
            .collect();
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(c, s)| format!("{s:>width$}", width = widths[c]))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// JSON as `{"i":…, "j":…, "beta":…}` triples sorted by `(i, j)`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(&(i, j), &beta)| serde_json::json!({"i": i, "j": j, "beta": beta}))
                .collect(),
        )
    }
}

/// The upper Koszul complex of `ideal` at the squarefree multidegree `b`: the
/// faces are the subsets `c` of `b` with `x^b / x^c` in the ideal. Void when
/// `x^b` itself is not in the ideal.
pub fn upper_koszul(ideal: &MonomialIdeal, b: Monomial) -> SimplicialComplex {
    let mut faces = Vec::new();
    // iterate all submasks of b
    let full = b.mask();
    let mut c = full;
    loop {
        if ideal.contains(Monomial::from_mask(full & !c)) {
            faces.push(c);
        }
        if c == 0 {
            break;
        }
        c = (c - 1) & full;
    }
    let complex = SimplicialComplex::from_facet_masks(ideal.n(), faces);
    debug_assert!(
        complex
            .facet_masks()
            .iter()
            .all(|&f| submasks(f).all(|s| ideal.contains(Monomial::from_mask(full & !s)))),
        "upper Koszul complex must be downward closed"
    );
    complex
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut c = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = c;
        if c == 0 {
            done = true;
        } else {
            c = (c - 1) & mask;
        }
        Some(out)
    })
}

/// Graded Betti numbers of a nonzero squarefree ideal over `field`:
/// `beta_{i,j}` sums `dim H̃_{i-1}` of the upper Koszul complexes over all
/// squarefree `b` of degree `j`. Only `b` inside the union of generator
/// supports can contribute.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let support = ideal
        .gens()
        .iter()
        .fold(0u64, |m, g| m | g.mask());
    let mut table = BettiTable::default();
    for b in submasks(support) {
        let bm = Monomial::from_mask(b);
        if !ideal.contains(bm) {
            continue;
        }
        let koszul = upper_koszul(ideal, bm);
        let dims = koszul.reduced_homology_dims(field);
        for (i, &dim) in dims.iter().enumerate() {
            if dim > 0 {
                *table.entries.entry((i, bm.degree())).or_insert(0) += dim;
            }
        }
    }
    Ok(table)
}

/// Outcome of a linear-resolution test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Linearity {
    Linear,
    /// The generators do not share a single degree, so the notion does not
    /// apply; treated as "no linear resolution".
    MixedDegrees { degrees: Vec<usize> },
    /// A Betti number off the linear diagonal.
    Nonlinear { i: usize, j: usize },
}

impl Linearity {
    pub fn is_linear(&self) -> bool {
        matches!(self, Linearity::Linear)
    }
}

impl fmt::Display for Linearity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Linearity::Linear => write!(f, "linear resolution"),
            Linearity::MixedDegrees { degrees } => {
                write!(f, "generators in mixed degrees {degrees:?}")
            }
            Linearity::Nonlinear { i, j } => {
                write!(f, "nonzero Betti number at i={i}, j={j} off the linear diagonal")
            }
        }
    }
}

/// Checks whether an equigenerated ideal has a linear resolution over
/// `field`: every nonzero `beta_{i,j}` must satisfy `j = i + d` with `d` the
/// generator degree. Mixed-degree input reports [`Linearity::MixedDegrees`]
/// instead of erroring.
pub fn linearity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Linearity> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_equigenerated() {
        let mut degrees: Vec<usize> = ideal.gens().iter().map(|g| g.degree()).collect();
        degrees.dedup();
        return Ok(Linearity::MixedDegrees { degrees });
    }
    let d = ideal.min_degree().unwrap();
    let table = betti_table(ideal, field)?;
    for (&(i, j), _) in table.entries() {
        if j != i + d {
            return Ok(Linearity::Nonlinear { i, j });
        }
    }
    Ok(Linearity::Linear)
}

/// Convenience wrapper for [`linearity`].
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    Ok(linearity(ideal, field)?.is_linear())
}

/// Componentwise linearity of a squarefree ideal: every nonzero squarefree
/// degree component must have a linear resolution.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let start = ideal.min_degree().unwrap();
    for d in start..=ideal.n() {
        let component = ideal.squarefree_component(d);
        if component.is_zero() {
            continue;
        }
        if !linearity(&component, field)?.is_linear() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the linear-quotients condition for one ordering of the minimal
/// generators: each colon ideal `(u_1..u_{i-1}) : u_i` must be generated by
/// variables. The ordering must list every generator once with nondecreasing
/// degrees.
pub fn has_linear_quotients(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<bool> {
    let mut sorted_order: Vec<Monomial> = order.to_vec();
    sorted_order.sort();
    if sorted_order != ideal.gens() {
        return Err(Error::BadGeneratorOrder);
    }
    if order.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return Err(Error::BadGeneratorOrder);
    }
    Ok(order_has_linear_quotients(ideal.n(), order))
}

fn order_has_linear_quotients(n: usize, order: &[Monomial]) -> bool {
    for i in 1..order.len() {
        let prefix = MonomialIdeal::new(n, order[..i].to_vec()).unwrap();
        let colon = prefix.colon_by(order[i]);
        if colon.gens().iter().any(|g| g.degree() != 1) {
            return false;
        }
    }
    true
}

/// Searches for an ordering with linear quotients by backtracking over
/// degree-sorted prefixes, trying candidates in canonical order, so the
/// first ordering found is lexicographically least. `None` when no ordering
/// works.
pub fn find_linear_quotient_order(ideal: &MonomialIdeal) -> Option<Vec<Monomial>> {
    let mut remaining: Vec<Monomial> = ideal.gens().to_vec();
    let mut chosen: Vec<Monomial> = Vec::with_capacity(remaining.len());
    fn extend(n: usize, chosen: &mut Vec<Monomial>, remaining: &mut Vec<Monomial>) -> bool {
        if remaining.is_empty() {
            return true;
        }
        let min_degree = remaining.iter().map(|g| g.degree()).min().unwrap();
        for idx in 0..remaining.len() {
            if remaining[idx].degree() != min_degree {
                continue;
            }
            let candidate = remaining[idx];
            let ok = chosen.is_empty() || {
                let prefix = MonomialIdeal::new(n, chosen.clone()).unwrap();
                prefix
                    .colon_by(candidate)
                    .gens()
                    .iter()
                    .all(|g| g.degree() == 1)
            };
            if !ok {
                continue;
            }
            remaining.remove(idx);
            chosen.push(candidate);
            if extend(n, chosen, remaining) {
                return true;
            }
            chosen.pop();
            remaining.insert(idx, candidate);
        }
        false
    }
    if extend(ideal.n(), &mut chosen, &mut remaining) {
        Some(chosen)
    } else {
        None
    }
}
