//! Constructions on complexes: robust clique and total cut complexes,
//! Alexander duals, joins, cones and set-level combinators.

use std::collections::HashSet;

use rayon::prelude::*;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{subsets_of_size, VertexSet, MAX_UNIVERSE};

/// Largest universe for which [`total_cut_complex`] enumerates subsets
/// directly by default.
pub const DEFAULT_TOTAL_CUT_CAP: usize = 16;

/// How the faces of a robust clique complex were enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStrategy {
    /// At most `k - 1` vertices from each side of a bipartition.
    Bipartite,
    /// Level-wise growth from the vertices, keeping only sets whose facets
    /// are all faces.
    Levelwise,
}

/// The `k`-robust clique complex: all `W` with no independent `k`-subset.
pub fn robust_clique_complex(g: &Graph, k: usize) -> Result<SimplicialComplex> {
    robust_clique_complex_capped(g, k, None).map(|(c, _)| c)
}

/// As [`robust_clique_complex`], failing with [`Error::SizeCap`] when the
/// number of candidate or accepted faces exceeds `max_faces`.
pub fn robust_clique_complex_capped(
    g: &Graph,
    k: usize,
    max_faces: Option<usize>,
) -> Result<(SimplicialComplex, EnumerationStrategy)> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let cap = max_faces.unwrap_or(usize::MAX);
    match g.bipartition() {
        Ok(b) => {
            let per_side = |part: VertexSet| -> Vec<VertexSet> {
                (0..k.min(part.len() + 1))
                    .flat_map(|s| subsets_of_size(part, s))
                    .collect()
            };
            let left = per_side(b.part(0));
            let right = per_side(b.part(1));
            let total = left.len().saturating_mul(right.len());
            if total > cap {
                return Err(Error::SizeCap {
                    what: "candidate faces",
                    actual: total,
                    cap,
                });
            }
            let faces: Vec<VertexSet> = left
                .par_iter()
                .flat_map_iter(|&a| {
                    right
                        .iter()
                        .map(move |&bb| a.union(bb))
                        .filter(|&w| !g.has_independent_subset(w, k))
                })
                .collect();
            Ok((
                SimplicialComplex::from_faces_unchecked(g.vertex_count(), faces),
                EnumerationStrategy::Bipartite,
            ))
        }
        Err(_) => Ok((
            levelwise(g.vertex_count(), cap, |w| !g.has_independent_subset(w, k))?,
            EnumerationStrategy::Levelwise,
        )),
    }
}

/// Grows a downward-closed family from the empty set. `accept` must itself be
/// downward closed.
fn levelwise(
    universe: usize,
    cap: usize,
    accept: impl Fn(VertexSet) -> bool + Sync,
) -> Result<SimplicialComplex> {
    if !accept(VertexSet::EMPTY) {
        return Ok(SimplicialComplex::void(universe));
    }
    let all = VertexSet::full(universe);
    let mut faces = vec![VertexSet::EMPTY];
    let mut level = vec![VertexSet::EMPTY];
    while !level.is_empty() {
        let known: HashSet<VertexSet> = level.iter().copied().collect();
        let next: Vec<VertexSet> = level
            .par_iter()
            .flat_map_iter(|&f| {
                let start = f.max_vertex().map_or(all, |m| all.above(m));
                let known = &known;
                let accept = &accept;
                start.iter().filter_map(move |v| {
                    let cand = f.with(v);
                    (cand.facets().all(|s| known.contains(&s)) && accept(cand)).then_some(cand)
                })
            })
            .collect();
        faces.extend_from_slice(&next);
        if faces.len() > cap {
            return Err(Error::SizeCap {
                what: "faces",
                actual: faces.len(),
                cap,
            });
        }
        level = next;
    }
    Ok(SimplicialComplex::from_faces_unchecked(universe, faces))
}

/// The total `k`-cut complex: all `W` whose complement contains an
/// independent `k`-set. Enumerates every subset, so the universe must be at
/// most `cap`.
pub fn total_cut_complex(g: &Graph, k: usize, cap: usize) -> Result<SimplicialComplex> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let n = g.vertex_count();
    if n > cap || n > 30 {
        return Err(Error::SizeCap {
            what: "total cut universe",
            actual: n,
            cap: cap.min(30),
        });
    }
    let all = g.vertices();
    let faces: Vec<VertexSet> = (0u64..1 << n)
        .into_par_iter()
        .map(VertexSet::from_bits)
        .filter(|w| g.has_independent_subset(all.difference(*w), k))
        .collect();
    Ok(SimplicialComplex::from_faces_unchecked(n, faces))
}

/// Whether every subset of size at most 3 is a face of the total `k`-cut
/// complex, decided on those subsets alone.
pub fn total_cut_full_two_skeleton(g: &Graph, k: usize) -> bool {
    let all = g.vertices();
    (0..=3.min(all.len())).all(|s| {
        subsets_of_size(all, s)
            .into_iter()
            .all(|w| g.has_independent_subset(all.difference(w), k))
    })
}

/// `{ W : V \ W not in K }` over the same universe.
pub fn alexander_dual(k: &SimplicialComplex) -> SimplicialComplex {
    let n = k.universe();
    let all = VertexSet::full(n);
    levelwise(n, usize::MAX, |w| !k.contains(all.difference(w))).expect("uncapped")
}

/// Disjoint join; `l`'s vertex `i` becomes `k.universe() + i`.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    let offset = k.universe();
    let universe = offset + l.universe();
    if universe > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge(universe));
    }
    let lf: Vec<VertexSet> = l.iter_faces().map(|f| f.shifted(offset)).collect();
    let faces: Vec<VertexSet> = k
        .iter_faces()
        .flat_map(|a| lf.iter().map(move |&b| a.union(b)))
        .collect();
    Ok(SimplicialComplex::from_faces_unchecked(universe, faces))
}

/// `{ a ∪ b : a in K, b in L }` inside a shared universe.
pub fn embedded_join(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    same_universe(k, l)?;
    let lf: Vec<VertexSet> = l.iter_faces().collect();
    let mut faces: HashSet<VertexSet> = HashSet::new();
    for a in k.iter_faces() {
        faces.extend(lf.iter().map(|&b| a.union(b)));
    }
    Ok(SimplicialComplex::from_faces_unchecked(k.universe(), faces))
}

/// Cone with a new apex `k.universe()`.
pub fn cone(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    cone_with_apex(k, k.universe())
}

/// Cone with the given apex, which must not be a vertex of any face.
pub fn cone_with_apex(k: &SimplicialComplex, apex: usize) -> Result<SimplicialComplex> {
    if k.support().contains(apex) {
        return Err(Error::ApexCollision(apex));
    }
    let universe = k.universe().max(apex + 1);
    if universe > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge(universe));
    }
    let faces: Vec<VertexSet> = k
        .iter_faces()
        .flat_map(|f| [f, f.with(apex)])
        .collect();
    Ok(SimplicialComplex::from_faces_unchecked(universe, faces))
}

/// Join with two isolated points.
pub fn suspension(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let s0 = SimplicialComplex::from_facets_unchecked(
        2,
        [VertexSet::singleton(0), VertexSet::singleton(1)],
    );
    join(k, &s0)
}

pub fn complex_union(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    same_universe(k, l)?;
    Ok(SimplicialComplex::from_faces_unchecked(
        k.universe(),
        k.iter_faces().chain(l.iter_faces()),
    ))
}

pub fn complex_intersection(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    same_universe(k, l)?;
    Ok(SimplicialComplex::from_faces_unchecked(
        k.universe(),
        k.iter_faces().filter(|&f| l.contains(f)),
    ))
}

fn same_universe(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<()> {
    if k.universe() != l.universe() {
        Err(Error::UniverseMismatch(k.universe(), l.universe()))
    } else {
        Ok(())
    }
}

/// Inclusion-minimal non-faces, sorted by size and then lexicographically.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> Vec<VertexSet> {
    if k.is_void() {
        return vec![VertexSet::EMPTY];
    }
    let all = VertexSet::full(k.universe());
    let mut out: HashSet<VertexSet> = HashSet::new();
    for f in k.iter_faces() {
        for v in all.difference(f).iter() {
            let w = f.with(v);
            if !k.contains(w) && w.facets().all(|s| k.contains(s)) {
                out.insert(w);
            }
        }
    }
    let mut out: Vec<VertexSet> = out.into_iter().collect();
    out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Whether every subset of the universe of size at most 3 is a face.
pub fn full_two_skeleton(k: &SimplicialComplex) -> bool {
    let n = k.universe();
    let choose = |r: usize| -> usize {
        if r > n {
            0
        } else {
            (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
    };
    !k.is_void()
        && k.faces(0).len() == choose(1)
        && k.faces(1).len() == choose(2)
        && k.faces(2).len() == choose(3)
}
