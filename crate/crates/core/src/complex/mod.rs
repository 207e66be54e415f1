//! Abstract simplicial complexes over a fixed vertex universe, stored as
//! explicit face families grouped by dimension.

mod ops;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

pub use ops::{
    alexander_dual, complex_intersection, complex_union, cone, cone_with_apex, embedded_join,
    full_two_skeleton, join, minimal_nonfaces, robust_clique_complex,
    robust_clique_complex_capped, suspension, total_cut_complex, total_cut_full_two_skeleton,
    EnumerationStrategy, DEFAULT_TOTAL_CUT_CAP,
};

/// A downward-closed family of subsets of `0..universe`.
///
/// The void complex (no faces at all) and the complex whose only face is the
/// empty set are different objects; vertices of the universe need not be
/// faces.
#[derive(Clone)]
pub struct SimplicialComplex {
    universe: usize,
    has_empty: bool,
    /// `faces[d]` holds the `d`-faces (size `d + 1`), sorted.
    faces: Vec<Vec<VertexSet>>,
    /// Position of every nonempty face within its dimension.
    index: HashMap<VertexSet, usize>,
}

impl SimplicialComplex {
    /// No faces, not even the empty one.
    pub fn void(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            has_empty: false,
            faces: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Only the empty face.
    pub fn empty_face_only(universe: usize) -> Self {
        SimplicialComplex {
            has_empty: true,
            ..Self::void(universe)
        }
    }

    /// Every subset of `vertices`, over the given universe.
    pub fn simplex(universe: usize, vertices: VertexSet) -> Result<Self> {
        check_universe(universe)?;
        if !vertices.fits(universe) {
            return Err(Error::VertexOutOfRange {
                vertex: vertices.max_vertex().unwrap_or(0),
                universe,
            });
        }
        Ok(Self::from_facets_unchecked(universe, [vertices]))
    }

    /// The full simplex `2^V`.
    pub fn full_simplex(universe: usize) -> Result<Self> {
        Self::simplex(universe, VertexSet::full(universe))
    }

    /// The 1-dimensional complex of a graph: all vertices and edges.
    pub fn from_graph(g: &crate::graph::Graph) -> Self {
        let n = g.vertex_count();
        let faces = (0..n)
            .map(VertexSet::singleton)
            .chain(g.edges().into_iter().map(|(u, v)| VertexSet::from_iter([u, v])));
        Self::from_faces_unchecked(n, std::iter::once(VertexSet::EMPTY).chain(faces))
    }

    /// Builds a complex from its full face family, checking downward
    /// closure. An empty iterator yields the void complex.
    pub fn from_faces(universe: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_universe(universe)?;
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        for f in &faces {
            if !f.fits(universe) {
                return Err(Error::VertexOutOfRange {
                    vertex: f.max_vertex().unwrap_or(0),
                    universe,
                });
            }
        }
        let k = Self::from_faces_unchecked(universe, faces);
        for f in k.iter_nonempty() {
            for sub in f.facets() {
                if !k.contains(sub) {
                    return Err(Error::NotClosed(sub.iter().collect()));
                }
            }
        }
        Ok(k)
    }

    /// Downward closure of the given facets. No facets yields the void
    /// complex; a single empty facet yields the empty-face-only complex.
    pub fn from_facets(
        universe: usize,
        facets: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        check_universe(universe)?;
        let facets: Vec<VertexSet> = facets.into_iter().collect();
        for f in &facets {
            if !f.fits(universe) {
                return Err(Error::VertexOutOfRange {
                    vertex: f.max_vertex().unwrap_or(0),
                    universe,
                });
            }
        }
        Ok(Self::from_facets_unchecked(universe, facets))
    }

    pub(crate) fn from_facets_unchecked(
        universe: usize,
        facets: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut stack: Vec<VertexSet> = Vec::new();
        for f in facets {
            if seen.insert(f) {
                stack.push(f);
            }
        }
        while let Some(f) = stack.pop() {
            for sub in f.facets() {
                if seen.insert(sub) {
                    stack.push(sub);
                }
            }
        }
        Self::from_faces_unchecked(universe, seen)
    }

    /// Assumes `faces` is downward closed; duplicates are removed.
    pub(crate) fn from_faces_unchecked(
        universe: usize,
        faces: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        let mut k = Self::void(universe);
        for f in faces {
            if f.is_empty() {
                k.has_empty = true;
                continue;
            }
            let d = f.len() - 1;
            if k.faces.len() <= d {
                k.faces.resize(d + 1, Vec::new());
            }
            k.faces[d].push(f);
        }
        if !k.faces.is_empty() {
            k.has_empty = true;
        }
        for level in &mut k.faces {
            level.sort_unstable();
            level.dedup();
        }
        k.index = k
            .faces
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, &f)| (f, i)))
            .collect();
        k
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn is_void(&self) -> bool {
        !self.has_empty
    }

    /// `None` for the void complex, `Some(-1)` for the empty-face-only one.
    pub fn dimension(&self) -> Option<isize> {
        if self.is_void() {
            None
        } else {
            Some(self.faces.len() as isize - 1)
        }
    }

    /// The sorted `d`-faces.
    pub fn faces(&self, d: usize) -> &[VertexSet] {
        self.faces.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains(&self, f: VertexSet) -> bool {
        if f.is_empty() {
            self.has_empty
        } else {
            self.index.contains_key(&f)
        }
    }

    /// Position of a nonempty face within `faces(dim)`.
    pub fn position(&self, f: VertexSet) -> Option<usize> {
        self.index.get(&f).copied()
    }

    /// Nonempty faces by ascending dimension.
    pub fn iter_nonempty(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().flatten().copied()
    }

    /// All faces including the empty one (if present).
    pub fn iter_faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.has_empty
            .then_some(VertexSet::EMPTY)
            .into_iter()
            .chain(self.iter_nonempty())
    }

    /// Number of faces, counting the empty face.
    pub fn face_count(&self) -> usize {
        self.has_empty as usize + self.index.len()
    }

    pub fn f_vector(&self) -> FVector {
        FVector {
            counts: self.faces.iter().map(Vec::len).collect(),
        }
    }

    /// Vertices that are faces.
    pub fn support(&self) -> VertexSet {
        self.faces(0)
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// Inclusion-maximal faces, sorted by the face order.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut covered: HashSet<VertexSet> = HashSet::new();
        for f in self.iter_nonempty() {
            covered.extend(f.facets());
        }
        let mut out: Vec<VertexSet> = self
            .iter_faces()
            .filter(|f| !covered.contains(f))
            .collect();
        out.sort_unstable();
        out
    }

    /// Same faces over a larger universe.
    pub fn with_universe(&self, universe: usize) -> Result<Self> {
        check_universe(universe)?;
        if universe < self.universe && !self.support_fits(universe) {
            return Err(Error::UniverseMismatch(self.universe, universe));
        }
        let mut k = self.clone();
        k.universe = universe;
        Ok(k)
    }

    fn support_fits(&self, universe: usize) -> bool {
        self.iter_nonempty().all(|f| f.fits(universe))
    }

    /// Image under the injective vertex map `map` (old -> new).
    pub fn relabel(&self, map: &[usize], universe: usize) -> Result<Self> {
        check_universe(universe)?;
        if map.len() < self.universe || map.iter().any(|&v| v >= universe) {
            return Err(Error::InvalidParameter(format!(
                "relabel map of length {} into universe {universe}",
                map.len()
            )));
        }
        Ok(Self::from_faces_unchecked(
            universe,
            self.iter_faces().map(|f| f.map(map)),
        ))
    }

    /// Every face (including the empty one) as a set, for face-for-face
    /// comparison.
    pub fn face_set(&self) -> HashSet<VertexSet> {
        self.iter_faces().collect()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.has_empty == other.has_empty
            && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("universe", &self.universe)
            .field("f_vector", &self.f_vector().counts)
            .field("facets", &self.facets())
            .finish()
    }
}

fn check_universe(universe: usize) -> Result<()> {
    if universe > MAX_UNIVERSE {
        Err(Error::UniverseTooLarge(universe))
    } else {
        Ok(())
    }
}

/// `counts[d]` is the number of `d`-faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    /// Counts prefixed with the empty face, `[1, f_0, f_1, ..]`, or all-empty
    /// for the void complex.
    pub fn extended(&self, void: bool) -> Vec<usize> {
        if void {
            return Vec::new();
        }
        std::iter::once(1).chain(self.counts.iter().copied()).collect()
    }

    /// `sum (-1)^d f_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// One CSV line: `dim,count` per dimension after a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("dim,count\n");
        for (d, c) in self.counts.iter().enumerate() {
            s.push_str(&format!("{d},{c}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn void_and_empty_face_only_differ() {
        let v = SimplicialComplex::void(3);
        let e = SimplicialComplex::empty_face_only(3);
        assert_ne!(v, e);
        assert_eq!(v.dimension(), None);
        assert_eq!(e.dimension(), Some(-1));
        assert_eq!(e.facets(), vec![VertexSet::EMPTY]);
        assert!(v.facets().is_empty());
        assert_eq!(SimplicialComplex::from_facets(3, []).unwrap(), v);
        assert_eq!(SimplicialComplex::from_facets(3, [VertexSet::EMPTY]).unwrap(), e);
    }

    #[test]
    fn closure_and_counts() {
        let k = SimplicialComplex::from_facets(5, [set(&[0, 1, 2]), set(&[2, 3])]).unwrap();
        assert_eq!(k.f_vector().counts, vec![4, 4, 1]);
        assert_eq!(k.facets(), vec![set(&[0, 1, 2]), set(&[2, 3])]);
        assert_eq!(k.support(), set(&[0, 1, 2, 3]));
        assert_eq!(k.dimension(), Some(2));
        assert!(k.contains(VertexSet::EMPTY));
        assert!(!k.contains(set(&[4])));
        assert_eq!(k.faces(1), &[set(&[0, 1]), set(&[0, 2]), set(&[1, 2]), set(&[2, 3])]);
    }

    #[test]
    fn from_faces_checks_closure() {
        let err = SimplicialComplex::from_faces(
            3,
            [VertexSet::EMPTY, set(&[0]), set(&[0, 1])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotClosed(v) if v == vec![1]));
        assert!(SimplicialComplex::from_faces(2, [set(&[3])]).is_err());
    }

    #[test]
    fn full_simplex_counts() {
        let k = SimplicialComplex::full_simplex(4).unwrap();
        assert_eq!(k.f_vector().counts, vec![4, 6, 4, 1]);
        assert_eq!(k.f_vector().extended(false), vec![1, 4, 6, 4, 1]);
        assert_eq!(k.face_count(), 16);
    }

    #[test]
    fn relabel_and_extend() {
        let k = SimplicialComplex::from_facets(3, [set(&[0, 1]), set(&[2])]).unwrap();
        let r = k.relabel(&[4, 0, 2], 5).unwrap();
        assert_eq!(r.facets(), vec![set(&[0, 4]), set(&[2])]);
        let w = k.with_universe(6).unwrap();
        assert_eq!(w.universe(), 6);
        assert_eq!(w.facets(), k.facets());
        assert!(k.with_universe(2).is_err());
    }
}
