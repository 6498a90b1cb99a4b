//! Simplicial complexes, boundary matrices, and reduced homology dimensions
//! over exact fields. Complexes store facets only; faces of a given dimension
//! are materialized on demand.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{mask_vertices, seq_lex_key, Graph};
use crate::ideal::{subsets_of_size, Monomial, MonomialIdeal};
use crate::linalg;

/// Coefficient field for homology: the rationals (characteristic 0) or a
/// prime field F_p with p below 2^31.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub fn rationals() -> FieldSpec {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    /// `0` for the rationals, or a prime.
    pub fn new(characteristic: u64) -> Result<FieldSpec> {
        if characteristic == 0 {
            Ok(FieldSpec::rationals())
        } else {
            FieldSpec::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::rationals()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            p => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A dense integer matrix; boundary matrices have entries in {-1, 0, 1} and
/// their rank over the chosen field is what homology consumes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.cols + c] = v;
    }

    /// Exact rank over the field: arbitrary-precision fraction-free
    /// elimination in characteristic 0, modular elimination otherwise.
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field.characteristic() {
            0 => linalg::rank_char0(self.rows, self.cols, &self.entries),
            p => linalg::rank_mod_p(self.rows, self.cols, &self.entries, p),
        }
    }

    pub fn multiply(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }
}

/// A simplicial complex on ambient vertices `1..=n`, stored by its facets.
/// `facets` empty encodes the void complex (no faces at all); a single empty
/// facet encodes the irrelevant complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from spanning faces, keeping only the maximal ones.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let m = Monomial::from_indices(f)?;
            if let Some(i) = mask_vertices(m.mask()).find(|&i| i > n) {
                return Err(Error::VariableOutOfRange { index: i, n });
            }
            masks.push(m.mask());
        }
        Ok(SimplicialComplex::from_facet_masks(n, masks))
    }

    pub(crate) fn from_facet_masks(n: usize, facets: Vec<u64>) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: maximal_masks(facets),
        }
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![] }
    }

    /// The irrelevant complex `{∅}` whose only face is the empty face.
    pub fn irrelevant(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![0] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&m| mask_vertices(m).collect())
            .collect()
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// `None` for the void complex, `-1` for `{∅}`, else the top face
    /// dimension.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|&m| m.count_ones() as isize - 1)
            .max()
    }

    pub(crate) fn is_face_mask(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        match Monomial::from_indices(face) {
            Ok(m) => self.is_face_mask(m.mask()),
            Err(_) => false,
        }
    }

    /// Faces of dimension `i` as masks, sorted; `i = -1` yields the empty
    /// face when the complex is not void.
    pub(crate) fn faces_of_dim_masks(&self, i: isize) -> Vec<u64> {
        if self.is_void() {
            return vec![];
        }
        if i < 0 {
            return if i == -1 { vec![0] } else { vec![] };
        }
        let size = i as usize + 1;
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            if (f.count_ones() as usize) < size {
                continue;
            }
            for sub in subsets_of_size(f, size) {
                seen.insert(sub);
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_unstable_by_key(|&m| seq_lex_key(m));
        faces
    }

    pub fn faces_of_dim(&self, i: isize) -> Vec<Vec<usize>> {
        self.faces_of_dim_masks(i)
            .into_iter()
            .map(|m| mask_vertices(m).collect())
            .collect()
    }

    /// The Stanley-Reisner complex of a squarefree ideal: faces are the
    /// supports whose monomial lies outside the ideal.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
        if ideal.is_unit() {
            return Err(Error::UnitIdealComplex);
        }
        let n = ideal.n();
        let full = full_mask(n);
        let mut faces: Vec<u64> = Vec::new();
        for m in 0..=full {
            if !ideal.contains(Monomial::from_mask(m)) {
                faces.push(m);
            }
            if m == full {
                break;
            }
        }
        Ok(SimplicialComplex::from_facet_masks(n, faces))
    }

    /// The clique complex: faces are the vertex sets inducing complete
    /// subgraphs, so facets are the maximal cliques.
    pub fn clique_complex(g: &Graph) -> SimplicialComplex {
        let n = g.n();
        let full = full_mask(n);
        let mut faces: Vec<u64> = Vec::new();
        if n == 0 {
            return SimplicialComplex::from_facet_masks(0, vec![0]);
        }
        for m in 0..=full {
            if g.is_clique_mask(m) {
                faces.push(m);
            }
            if m == full {
                break;
            }
        }
        SimplicialComplex::from_facet_masks(n, faces)
    }

    /// The pure `i`-skeleton: the subcomplex spanned by all faces of
    /// dimension exactly `i`, for `-1 <= i <= dim`.
    pub fn pure_skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        let dim = self.dim().ok_or(Error::VoidComplex)?;
        if i < -1 || i > dim {
            return Err(Error::SkeletonOutOfRange { i, dim });
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: self.faces_of_dim_masks(i),
        })
    }

    /// The squarefree ideal of minimal non-faces; inverse to
    /// [`SimplicialComplex::stanley_reisner`] on non-unit ideals. The void
    /// complex maps to the unit ideal.
    pub fn ideal_of_complex(&self) -> MonomialIdeal {
        let full = full_mask(self.n);
        let mut minimal_nonfaces: Vec<Monomial> = Vec::new();
        for m in 0..=full {
            if !self.is_face_mask(m)
                && mask_vertices(m).all(|v| self.is_face_mask(m & !(1 << (v - 1))))
            {
                minimal_nonfaces.push(Monomial::from_mask(m));
            }
            if m == full {
                break;
            }
        }
        MonomialIdeal::new(self.n, minimal_nonfaces).unwrap()
    }

    /// The boundary map from `s`-faces to `(s-1)`-faces of the reduced chain
    /// complex. The `s = 0` map sends every vertex to the single empty face.
    pub fn boundary_matrix(&self, s: isize) -> Matrix {
        let rows_faces = self.faces_of_dim_masks(s - 1);
        let cols_faces = self.faces_of_dim_masks(s);
        let row_index: std::collections::HashMap<u64, usize> = rows_faces
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let mut matrix = Matrix::zero(rows_faces.len(), cols_faces.len());
        for (c, &face) in cols_faces.iter().enumerate() {
            for (t, v) in mask_vertices(face).enumerate() {
                let sub = face & !(1u64 << (v - 1));
                let r = row_index[&sub];
                matrix.set(r, c, if t % 2 == 0 { 1 } else { -1 });
            }
        }
        matrix
    }

    /// Dimensions of reduced homology with coefficients in `field`. Entry `k`
    /// of the result is `dim H̃_{k-1}`, so the list starts at homological
    /// degree -1: the void complex gives an empty list, `{∅}` gives `[1]`,
    /// and any nonempty complex has first entry 0.
    pub fn reduced_homology_dims(&self, field: FieldSpec) -> Vec<usize> {
        let Some(dim) = self.dim() else {
            return vec![];
        };
        let mut face_counts = Vec::new();
        let mut ranks = Vec::new(); // ranks[k] = rank of boundary from (k-1)-faces
        for i in -1..=dim {
            face_counts.push(self.faces_of_dim_masks(i).len());
            ranks.push(self.boundary_matrix(i).rank(field));
        }
        ranks.push(0); // boundary from (dim+1)-faces is zero
        (0..face_counts.len())
            .map(|k| face_counts[k] - ranks[k] - ranks[k + 1])
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "facets": self.facets(),
        })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|&m| {
                let verts: Vec<String> = mask_vertices(m).map(|v| v.to_string()).collect();
                format!("{{{}}}", verts.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={})", self.n, self)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Keeps the inclusion-maximal masks, sorted canonically.
fn maximal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|&m| (std::cmp::Reverse(m.count_ones()), seq_lex_key(m)));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable_by_key(|&m| (m.count_ones(), seq_lex_key(m)));
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;

    fn mon(ix: &[usize]) -> Monomial {
        Monomial::from_indices(ix).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let fs: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(n, &fs).unwrap()
    }

    #[test]
    fn facet_antichain_and_dim() {
        let c = cx(3, &[&[1, 2], &[1], &[3]]);
        assert_eq!(c.facets(), vec![vec![3], vec![1, 2]]);
        assert_eq!(c.dim(), Some(1));
        assert_eq!(SimplicialComplex::void(2).dim(), None);
        assert_eq!(SimplicialComplex::irrelevant(2).dim(), Some(-1));
    }

    #[test]
    fn stanley_reisner_examples() {
        let two_points = SimplicialComplex::stanley_reisner(
            &MonomialIdeal::new(2, vec![mon(&[1, 2])]).unwrap(),
        )
        .unwrap();
        assert_eq!(two_points.facets(), vec![vec![1], vec![2]]);

        let simplex = SimplicialComplex::stanley_reisner(&MonomialIdeal::zero(3)).unwrap();
        assert_eq!(simplex.facets(), vec![vec![1, 2, 3]]);

        assert!(SimplicialComplex::stanley_reisner(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn stanley_reisner_of_edge_ideal_is_complement_clique_complex() {
        for n in 2..=6 {
            for g in crate::graph::nonisomorphic_graphs(n) {
                if g.is_edgeless() {
                    continue;
                }
                let lhs =
                    SimplicialComplex::stanley_reisner(&MonomialIdeal::edge_ideal(&g)).unwrap();
                let rhs = SimplicialComplex::clique_complex(&g.complement());
                assert_eq!(lhs, rhs, "mismatch on {g:?}");
            }
        }
    }

    #[test]
    fn clique_complex_examples() {
        let k3 = SimplicialComplex::clique_complex(&Graph::complete(3).unwrap());
        assert_eq!(k3.facets(), vec![vec![1, 2, 3]]);

        let c4 = SimplicialComplex::clique_complex(&Graph::cycle(4).unwrap());
        assert_eq!(
            c4.facets(),
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]
        );

        let two_edges =
            SimplicialComplex::clique_complex(&Graph::new(4, &[(1, 3), (2, 4)]).unwrap());
        assert_eq!(two_edges.facets(), vec![vec![1, 3], vec![2, 4]]);

        // isolated vertices give singleton facets
        let star = SimplicialComplex::clique_complex(&Graph::new(3, &[(1, 2)]).unwrap());
        assert_eq!(star.facets(), vec![vec![3], vec![1, 2]]);
    }

    #[test]
    fn pure_skeletons() {
        let simplex = cx(3, &[&[1, 2, 3]]);
        assert_eq!(
            simplex.pure_skeleton(1).unwrap().facets(),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(
            simplex.pure_skeleton(-1).unwrap(),
            SimplicialComplex::irrelevant(3)
        );
        assert!(simplex.pure_skeleton(3).is_err());
        assert!(SimplicialComplex::void(3).pure_skeleton(-1).is_err());
    }

    #[test]
    fn ideal_of_complex_examples() {
        let two_points = cx(2, &[&[1], &[2]]);
        assert_eq!(two_points.ideal_of_complex().gens(), &[mon(&[1, 2])]);

        let irrelevant = SimplicialComplex::irrelevant(2);
        assert_eq!(irrelevant.ideal_of_complex().gens(), &[mon(&[1]), mon(&[2])]);

        assert!(SimplicialComplex::void(2).ideal_of_complex().is_unit());
    }

    #[test]
    fn stanley_reisner_roundtrip() {
        for n in 1..=6 {
            for g in crate::graph::nonisomorphic_graphs(n) {
                if g.is_edgeless() {
                    continue;
                }
                let ideal = MonomialIdeal::edge_ideal(&g);
                let complex = SimplicialComplex::stanley_reisner(&ideal).unwrap();
                assert_eq!(complex.ideal_of_complex(), ideal);
            }
        }
    }

    #[test]
    fn boundary_of_an_edge() {
        let edge = cx(2, &[&[1, 2]]);
        let d1 = edge.boundary_matrix(1);
        assert_eq!((d1.rows(), d1.cols()), (2, 1));
        assert_eq!((d1.get(0, 0), d1.get(1, 0)), (-1, 1));
    }

    #[test]
    fn boundary_squares_to_zero() {
        for n in 1..=6 {
            for g in crate::graph::nonisomorphic_graphs(n) {
                let complex = SimplicialComplex::clique_complex(&g);
                let dim = complex.dim().unwrap();
                for s in 0..=dim {
                    let outer = complex.boundary_matrix(s);
                    let inner = complex.boundary_matrix(s + 1);
                    if inner.cols() > 0 {
                        assert!(outer.multiply(&inner).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.boundary_matrix(1).rank(FieldSpec::rationals()), 2);
    }

    #[test]
    fn homology_examples() {
        let q = FieldSpec::rationals();
        let hollow = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.reduced_homology_dims(q), vec![0, 0, 1]);

        let two_points = cx(2, &[&[1], &[2]]);
        assert_eq!(two_points.reduced_homology_dims(q), vec![0, 1]);

        let simplex = cx(3, &[&[1, 2, 3]]);
        assert_eq!(simplex.reduced_homology_dims(q), vec![0, 0, 0, 0]);

        assert_eq!(SimplicialComplex::irrelevant(2).reduced_homology_dims(q), vec![1]);
        assert_eq!(SimplicialComplex::void(2).reduced_homology_dims(q), Vec::<usize>::new());
    }

    #[test]
    fn euler_characteristic_identity() {
        for field in [FieldSpec::rationals(), FieldSpec::prime(2).unwrap()] {
            for n in 1..=6 {
                for g in crate::graph::nonisomorphic_graphs(n) {
                    let complex = SimplicialComplex::clique_complex(&g);
                    let dim = complex.dim().unwrap();
                    let homology = complex.reduced_homology_dims(field);
                    let mut faces_alt = 0i64;
                    let mut homology_alt = 0i64;
                    for i in -1..=dim {
                        let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                        faces_alt += sign * complex.faces_of_dim_masks(i).len() as i64;
                        homology_alt += sign * homology[(i + 1) as usize] as i64;
                    }
                    assert_eq!(faces_alt, homology_alt, "Euler mismatch on {g:?}");
                }
            }
        }
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2147483647).is_ok()); // 2^31 - 1
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(0).is_err());
        assert!(FieldSpec::new(0).is_ok());
        assert_eq!(FieldSpec::rationals().to_string(), "QQ");
        assert_eq!(FieldSpec::prime(2).unwrap().to_string(), "ZZ/2");
    }
}
