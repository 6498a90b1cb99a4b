//! Top-level decision procedures: Cohen-Macaulay and sequentially
//! Cohen-Macaulay tests by two independent routes, the constructive
//! linear-quotients ordering for chordal graphs, and the f/h-vector
//! obstruction.

use crate::complex::{FieldSpec, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{vertices_mask, Graph};
use crate::ideal::{dual_component, Monomial, MonomialIdeal};
use crate::resolution::{has_linear_quotients, is_componentwise_linear, linearity};

/// Whether the quotient by the edge ideal of `g` is sequentially
/// Cohen-Macaulay over the given field, decided through the Alexander dual:
/// the dual must be componentwise linear. Edgeless graphs are sequentially
/// Cohen-Macaulay (the quotient is the polynomial ring itself).
pub fn is_scm(g: &Graph, field: FieldSpec) -> bool {
    if g.is_edgeless() {
        return true;
    }
    let dual = MonomialIdeal::edge_ideal(g)
        .alexander_dual()
        .expect("edge ideal of a graph with edges is neither zero nor unit");
    is_componentwise_linear(&dual, field).expect("dual of an edge ideal is nonzero")
}

/// Independent route to sequential Cohen-Macaulayness: every pure skeleton of
/// the Stanley-Reisner complex of the edge ideal must have Cohen-Macaulay
/// quotient. The `i = -1` skeleton `{∅}` counts as Cohen-Macaulay (its
/// quotient is the base field). Requires at least one edge.
pub fn is_scm_duval(g: &Graph, field: FieldSpec) -> Result<bool> {
    if g.is_edgeless() {
        return Err(Error::EdgelessGraph);
    }
    let complex = SimplicialComplex::stanley_reisner(&MonomialIdeal::edge_ideal(g))?;
    let dim = complex.dim().expect("independence complex has every vertex");
    for i in 0..=dim {
        let skeleton = complex.pure_skeleton(i)?;
        if !is_cm_ideal(&skeleton.ideal_of_complex(), field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cohen-Macaulayness of `R/I` for a squarefree nonzero non-unit ideal,
/// decided through duality: the Alexander dual must be generated in a single
/// degree and have a linear resolution.
pub fn is_cm_ideal(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dual = ideal.alexander_dual()?;
    if !dual.is_equigenerated() {
        return Ok(false);
    }
    Ok(linearity(&dual, field)?.is_linear())
}

/// Cohen-Macaulayness of a graph; edgeless graphs qualify.
pub fn is_cm_graph(g: &Graph, field: FieldSpec) -> bool {
    if g.is_edgeless() {
        return true;
    }
    is_cm_ideal(&MonomialIdeal::edge_ideal(g), field)
        .expect("edge ideal of a graph with edges is neither zero nor unit")
}

/// Constructs an ordering of the size-`d` vertex covers of a chordal graph
/// that has linear quotients, by recursion on a simplicial vertex `x` with
/// clique neighborhood `{y_1..y_t}`: covers avoiding `x` contain every `y`
/// and restrict to covers of `G` minus the closed neighborhood; covers
/// containing `x` restrict to covers of `G - x`. The `y`-block is emitted
/// before the `x`-block. Complete and edgeless remainders are ordered
/// descending-lexicographically.
pub fn chordal_quotient_ordering(g: &Graph, d: usize) -> Result<Vec<Monomial>> {
    if g.is_edgeless() {
        return Err(Error::EdgelessGraph);
    }
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let labels: Vec<usize> = (1..=g.n()).collect();
    Ok(cover_order(g, &labels, d as isize)
        .into_iter()
        .map(Monomial::from_mask)
        .collect())
}

/// Recursive cover ordering; `labels[k]` is the ambient variable of vertex
/// `k + 1` of `g`. Returns ambient masks.
fn cover_order(g: &Graph, labels: &[usize], d: isize) -> Vec<u64> {
    let n = g.n();
    if d < 0 || d > n as isize {
        return vec![];
    }
    let d = d as usize;
    if g.is_edgeless() {
        return descending_subsets(labels, d);
    }
    if g.is_complete() {
        // covers of K_n of size d are all d-subsets when d >= n - 1
        if d + 1 < n {
            return vec![];
        }
        return descending_subsets(labels, d);
    }
    let x = g
        .find_simplicial_vertex(&[])
        .expect("a chordal graph has a simplicial vertex");
    let neighbors = g.neighbors(x).expect("vertex in range");
    let t = neighbors.len() as isize;
    let y_mask: u64 = neighbors
        .iter()
        .map(|&v| 1u64 << (labels[v - 1] - 1))
        .fold(0, |m, b| m | b);
    let x_bit = 1u64 << (labels[x - 1] - 1);

    let closed: Vec<usize> = std::iter::once(x).chain(neighbors.iter().copied()).collect();
    let closed_mask = vertices_mask(&closed);
    let h2_vertices: Vec<usize> = (1..=n)
        .filter(|&v| closed_mask & (1 << (v - 1)) == 0)
        .collect();
    let (h2, map2) = g.induced_subgraph(&h2_vertices);
    let labels2: Vec<usize> = map2.iter().map(|&v| labels[v - 1]).collect();

    let h1_vertices: Vec<usize> = (1..=n).filter(|&v| v != x).collect();
    let (h1, map1) = g.induced_subgraph(&h1_vertices);
    let labels1: Vec<usize> = map1.iter().map(|&v| labels[v - 1]).collect();

    let mut out: Vec<u64> = cover_order(&h2, &labels2, d as isize - t)
        .into_iter()
        .map(|a| a | y_mask)
        .collect();
    out.extend(
        cover_order(&h1, &labels1, d as isize - 1)
            .into_iter()
            .map(|b| b | x_bit),
    );
    out
}

/// All `d`-subsets of the given ambient labels, as masks, in descending
/// lexicographic order of the corresponding monomials.
fn descending_subsets(labels: &[usize], d: usize) -> Vec<u64> {
    let universe = labels
        .iter()
        .fold(0u64, |m, &v| m | (1u64 << (v - 1)));
    let mut subs = crate::ideal::subsets_of_size(universe, d);
    subs.reverse();
    subs
}

/// Face counts `(f_{-1}, f_0, ..., f_{dim})` with `f_{-1} = 1`. Rejects the
/// void complex.
pub fn f_vector(complex: &SimplicialComplex) -> Result<Vec<u64>> {
    let dim = complex.dim().ok_or(Error::VoidComplex)?;
    Ok((-1..=dim)
        .map(|i| complex.faces_of_dim_masks(i).len() as u64)
        .collect())
}

/// The h-vector of a nonvoid complex, of length `dim + 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector {
    values: Vec<i64>,
}

impl HVector {
    /// `h_0..h_d` where `d = dim + 1`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn has_negative_entry(&self) -> bool {
        self.values.iter().any(|&h| h < 0)
    }
}

/// Computes the h-vector by the standard binomial transform of the f-vector:
/// `sum_i f_{i-1} t^i (1-t)^(d-i) = sum_k h_k t^k` with `d = dim + 1`.
pub fn h_vector(complex: &SimplicialComplex) -> Result<HVector> {
    let f = f_vector(complex)?;
    let d = f.len() - 1; // dim + 1
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        // f_{i-1} t^i (1-t)^(d-i)
        for (k, hk) in h.iter_mut().enumerate().skip(i).take(d - i + 1) {
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            *hk += sign * binomial(d - i, k - i) * fi as i64;
        }
    }
    Ok(HVector { values: h })
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut out = 1i64;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

/// Sufficient condition for failing sequential Cohen-Macaulayness: split the
/// complement into its isolated vertices and the rest `H_1`; when
/// `#E - #V + 1 < 0` on `H_1` the pure 1-skeleton of the Stanley-Reisner
/// complex has a negative h-vector entry, which certifies the failure. A
/// vacuously empty `H_1` never fires.
pub fn negative_h_obstruction(g: &Graph) -> Result<bool> {
    if g.is_edgeless() {
        return Err(Error::EdgelessGraph);
    }
    let complement = g.complement();
    let h1_vertices: Vec<usize> = (1..=complement.n())
        .filter(|&v| complement.degree(v).unwrap() > 0)
        .collect();
    let (h1, _) = complement.induced_subgraph(&h1_vertices);
    Ok((h1.edge_count() as i64) - (h1.n() as i64) + 1 < 0)
}

/// Everything the crate can say about one graph over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub graph: Graph,
    pub field: FieldSpec,
    pub chordal: bool,
    pub forest: bool,
    pub unmixed: bool,
    pub cm: bool,
    pub scm: bool,
    pub scm_duval: bool,
    pub obstruction_fired: bool,
}

impl Classification {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.graph.n(),
            "edges": self.graph.edges(),
            "characteristic": self.field.characteristic(),
            "chordal": self.chordal,
            "forest": self.forest,
            "unmixed": self.unmixed,
            "cm": self.cm,
            "scm": self.scm,
            "scm_duval": self.scm_duval,
            "obstruction_fired": self.obstruction_fired,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "graph: n={} edges={:?}\n\
             field: {}\n\
             chordal: {}\n\
             forest: {}\n\
             unmixed: {}\n\
             cohen_macaulay: {}\n\
             sequentially_cohen_macaulay: {}\n\
             scm_by_skeletons: {}\n\
             obstruction_fired: {}",
            self.graph.n(),
            self.graph.edges(),
            self.field,
            self.chordal,
            self.forest,
            self.unmixed,
            self.cm,
            self.scm,
            self.scm_duval,
            self.obstruction_fired,
        )
    }
}

/// Runs every predicate and cross-checks them: the two sequential
/// Cohen-Macaulay routes must agree, a fired obstruction forces a negative,
/// chordal graphs must test positive, and Cohen-Macaulay must equal
/// sequentially Cohen-Macaulay plus unmixed. Disagreement is an error, never
/// silently resolved.
pub fn classify(g: &Graph, field: FieldSpec) -> Result<Classification> {
    let edgeless = g.is_edgeless();
    let chordal = g.is_chordal();
    let forest = g.is_forest();
    let scm = is_scm(g, field);
    let (unmixed, cm, scm_duval, obstruction_fired) = if edgeless {
        (true, true, scm, false)
    } else {
        (
            MonomialIdeal::edge_ideal(g).is_unmixed()?,
            is_cm_graph(g, field),
            is_scm_duval(g, field)?,
            negative_h_obstruction(g)?,
        )
    };
    let disagreement = |what: &str, detail: String| Error::RouteDisagreement {
        what: what.into(),
        detail,
    };
    if scm != scm_duval {
        return Err(disagreement(
            "sequential Cohen-Macaulayness",
            format!("dual route {scm}, skeleton route {scm_duval} on {g:?}"),
        ));
    }
    if obstruction_fired && scm {
        return Err(disagreement(
            "h-vector obstruction",
            format!("obstruction fired but graph tested sequentially Cohen-Macaulay: {g:?}"),
        ));
    }
    if chordal && !scm {
        return Err(disagreement(
            "chordal graph",
            format!("chordal graph tested not sequentially Cohen-Macaulay: {g:?}"),
        ));
    }
    if cm != (scm && unmixed) {
        return Err(disagreement(
            "Cohen-Macaulay decomposition",
            format!("cm={cm} but scm={scm}, unmixed={unmixed} on {g:?}"),
        ));
    }
    Ok(Classification {
        graph: g.clone(),
        field,
        chordal,
        forest,
        unmixed,
        cm,
        scm,
        scm_duval,
        obstruction_fired,
    })
}

/// Verifies that every ordering produced by [`chordal_quotient_ordering`]
/// generates the matching dual component and passes the linear-quotients
/// check. Used by tests and the survey.
pub fn check_chordal_ordering(g: &Graph, d: usize) -> Result<bool> {
    let order = chordal_quotient_ordering(g, d)?;
    let component = dual_component(g, d);
    let mut sorted: Vec<Monomial> = order.clone();
    sorted.sort();
    if sorted != component.gens() {
        return Ok(false);
    }
    if order.is_empty() {
        return Ok(true);
    }
    has_linear_quotients(&component, &order)
}
