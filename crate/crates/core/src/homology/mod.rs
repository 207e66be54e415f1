//! Reduced integral simplicial homology through boundary matrices and exact
//! Smith normal form, plus a mod-2 screening pass and the Alexander duality
//! comparison between total cut complexes and robust clique complexes.

mod boundary;
mod mod2;
mod snf;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{robust_clique_complex, total_cut_complex, SimplicialComplex};
use crate::error::Result;
use crate::graph::Graph;

pub use boundary::{boundary_matrices, BoundaryMatrix};
pub use snf::{smith_normal_form, smith_normal_form_sparse, SmithForm};

/// Reduced Betti numbers, torsion and Euler characteristic of a complex.
///
/// `reduced_betti[d]` covers dimensions `0..=dim`; dimension −1 lives in
/// `reduced_betti_minus_one` and is nonzero only for the complex `{∅}`. The
/// void complex gets the all-zero report with `void` set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub reduced_betti: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub reduced_betti_minus_one: usize,
    /// Invariant factors greater than 1, keyed by dimension.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub torsion: BTreeMap<usize, Vec<u64>>,
    /// `sum (-1)^d f_d` over nonempty faces.
    pub euler: i64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub void: bool,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl HomologyReport {
    /// Reduced Betti number in dimension `d >= -1`.
    pub fn betti(&self, d: isize) -> usize {
        match d {
            -1 => self.reduced_betti_minus_one,
            d if d >= 0 => self.reduced_betti.get(d as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_acyclic(&self) -> bool {
        self.total_betti() == 0 && self.is_torsion_free()
    }

    pub fn total_betti(&self) -> usize {
        self.reduced_betti_minus_one + self.reduced_betti.iter().sum::<usize>()
    }

    /// The single dimension carrying nonzero reduced Betti, with its value.
    pub fn concentration(&self) -> Option<(isize, usize)> {
        let mut nonzero = (-1..self.reduced_betti.len() as isize)
            .map(|d| (d, self.betti(d)))
            .filter(|&(_, b)| b > 0);
        let first = nonzero.next()?;
        nonzero.next().is_none().then_some(first)
    }

    /// Homology of a wedge of `count` spheres of dimension `dim`: concentrated
    /// there (or everywhere zero when `count == 0`) and torsion-free.
    pub fn is_wedge_of_spheres(&self, dim: isize, count: usize) -> bool {
        if !self.is_torsion_free() {
            return false;
        }
        if count == 0 {
            return self.total_betti() == 0;
        }
        self.concentration() == Some((dim, count))
    }

    /// `1 + sum (-1)^d betti~_d`, which equals `euler` for torsion-free and
    /// torsion-bearing complexes alike.
    pub fn euler_from_betti(&self) -> i64 {
        if self.void {
            return 0;
        }
        let alt: i64 = (-1..self.reduced_betti.len() as isize)
            .map(|d| {
                let b = self.betti(d) as i64;
                if d.rem_euclid(2) == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum();
        1 + alt
    }

    /// Compact `(b0, b1, ..)` rendering, with torsion appended when present.
    pub fn summary(&self) -> String {
        if self.void {
            return "void".to_string();
        }
        let mut s = if self.reduced_betti_minus_one > 0 {
            format!("b~_-1={}", self.reduced_betti_minus_one)
        } else {
            let parts: Vec<String> = self.reduced_betti.iter().map(|b| b.to_string()).collect();
            format!("({})", parts.join(","))
        };
        for (d, fs) in &self.torsion {
            let parts: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            s.push_str(&format!(" torsion[{d}]=({})", parts.join(",")));
        }
        s
    }
}

/// Reduced integral homology. The void complex yields the all-zero report.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyReport {
    if k.is_void() {
        return HomologyReport {
            void: true,
            ..HomologyReport::default()
        };
    }
    let f = k.f_vector();
    let euler = f.euler_characteristic();
    let matrices = boundary_matrices(k).expect("nonvoid");
    let forms: Vec<SmithForm> = matrices
        .into_par_iter()
        .map(|m| {
            let rows = m.rows;
            let cols = m
                .columns
                .into_iter()
                .map(|c| c.into_iter().map(|(i, s)| (i, s as i64)).collect())
                .collect();
            smith_normal_form_sparse(rows, cols)
        })
        .collect();
    let rank = |d: usize| forms.get(d).map_or(0, |s| s.rank);
    let top = f.counts.len();
    let reduced_betti = (0..top).map(|d| f.counts[d] - rank(d) - rank(d + 1)).collect();
    let mut torsion = BTreeMap::new();
    for d in 0..top {
        if let Some(s) = forms.get(d + 1) {
            let t: Vec<u64> = s
                .torsion()
                .iter()
                .map(|x| u64::try_from(x).expect("torsion coefficient fits in u64"))
                .collect();
            if !t.is_empty() {
                torsion.insert(d, t);
            }
        }
    }
    HomologyReport {
        reduced_betti,
        reduced_betti_minus_one: 1 - rank(0),
        torsion,
        euler,
        void: false,
    }
}

/// Reduced Betti numbers over GF(2) for dimensions `0..=dim`. Equals the
/// integral reduced Betti numbers whenever integral torsion is absent.
pub fn mod2_betti(k: &SimplicialComplex) -> Vec<usize> {
    if k.is_void() {
        return Vec::new();
    }
    let f = k.f_vector();
    let ranks: Vec<usize> = boundary_matrices(k)
        .expect("nonvoid")
        .par_iter()
        .map(mod2::rank_mod2)
        .collect();
    let rank = |d: usize| ranks.get(d).copied().unwrap_or(0);
    (0..f.counts.len())
        .map(|d| f.counts[d] - rank(d) - rank(d + 1))
        .collect()
}

/// Reduced homology of the Alexander dual predicted from `k` over a universe
/// of size `d`: `betti~_i(K^AD) = betti~_{d-i-3}(K)`. Torsion shifts down one
/// dimension (`H~^j` picks up the torsion of `H~_{j-1}`).
pub fn dual_prediction(k: &HomologyReport, d: usize) -> HomologyReport {
    let d = d as isize;
    let top = d - 2;
    if k.void {
        // the dual of the void complex is the full simplex
        return HomologyReport {
            reduced_betti: vec![0; d.max(0) as usize],
            euler: 1,
            ..HomologyReport::default()
        };
    }
    let betti: Vec<usize> = (0..=top.max(-1)).map(|i| k.betti(d - i - 3)).collect();
    let mut torsion = BTreeMap::new();
    for (&j, fs) in &k.torsion {
        // torsion of H~_j(K) lands in H~^{j+1}(K) = H~_{d-j-4}(K^AD)
        let i = d - j as isize - 4;
        if i >= 0 {
            torsion.insert(i as usize, fs.clone());
        }
    }
    let mut report = HomologyReport {
        reduced_betti: betti,
        reduced_betti_minus_one: k.betti(d - 2),
        torsion,
        euler: 0,
        void: false,
    };
    report.euler = report.euler_from_betti();
    report
}

/// Directly computed and duality-derived homology of `Δ_k^t(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityComparison {
    pub universe: usize,
    pub total_cut: HomologyReport,
    pub robust_clique: HomologyReport,
    pub agrees: bool,
}

/// Compares `betti~_i(Δ_k^t(g))` with `betti~_{d-i-3}(Cliq_k(g))` for every
/// `i >= -1`. Both sides must also be torsion-free.
pub fn duality_comparison(g: &Graph, k: usize, cap: usize) -> Result<DualityComparison> {
    let cut = total_cut_complex(g, k, cap)?;
    let cliq = robust_clique_complex(g, k)?;
    let total_cut = reduced_homology(&cut);
    let robust_clique = reduced_homology(&cliq);
    let d = g.vertex_count() as isize;
    let agrees = total_cut.is_torsion_free()
        && robust_clique.is_torsion_free()
        && (-1..=d).all(|i| total_cut.betti(i) == robust_clique.betti(d - i - 3));
    Ok(DualityComparison {
        universe: g.vertex_count(),
        total_cut,
        robust_clique,
        agrees,
    })
}

/// Whether the direct computation of `Δ_k^t(g)` agrees with the duality
/// prediction from `Cliq_k(g)`.
pub fn duality_check(g: &Graph, k: usize, cap: usize) -> Result<bool> {
    Ok(duality_comparison(g, k, cap)?.agrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        alexander_dual, complex_intersection, cone, embedded_join, join, suspension, DEFAULT_TOTAL_CUT_CAP,
    };
    use crate::graph::make_grid;
    use crate::vertex_set::VertexSet;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn complex(universe: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(universe, facets.iter().map(|f| set(f))).unwrap()
    }

    fn c4() -> Graph {
        Graph::cycle(4).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        complex(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 5, 1],
                &[1, 2, 4],
                &[2, 3, 5],
                &[3, 4, 1],
                &[4, 5, 2],
                &[5, 1, 3],
            ],
        )
    }

    fn random_complex(rng: &mut ChaCha8Rng, n: usize, facets: usize) -> SimplicialComplex {
        use rand::Rng;
        let fs: Vec<VertexSet> = (0..facets)
            .map(|_| VertexSet::from_bits(rng.gen::<u64>() & ((1 << n) - 1)))
            .collect();
        SimplicialComplex::from_facets(n, fs).unwrap()
    }

    #[test]
    fn small_complexes() {
        let r = reduced_homology(&robust_clique_complex(&c4(), 2).unwrap());
        assert_eq!(r.reduced_betti, vec![0, 1]);
        assert!(r.is_wedge_of_spheres(1, 1));
        let r = reduced_homology(&robust_clique_complex(&c4(), 3).unwrap());
        assert!(r.is_acyclic());
        assert_eq!(r.reduced_betti.len(), 4);
    }

    #[test]
    fn grid_three_by_three() {
        let k = robust_clique_complex(&make_grid(3, 3).unwrap(), 3).unwrap();
        let r = reduced_homology(&k);
        assert_eq!(r.reduced_betti, vec![0, 0, 0, 6]);
        assert!(r.is_torsion_free());
        assert_eq!(mod2_betti(&k), r.reduced_betti);
        assert_eq!(r.euler, r.euler_from_betti());
    }

    #[test]
    fn conventions_for_degenerate_complexes() {
        let v = reduced_homology(&SimplicialComplex::void(3));
        assert!(v.void && v.total_betti() == 0);
        let e = reduced_homology(&SimplicialComplex::empty_face_only(3));
        assert_eq!(e.reduced_betti_minus_one, 1);
        assert_eq!(e.concentration(), Some((-1, 1)));
        assert_eq!(e.euler, e.euler_from_betti());
        let s0 = complex(2, &[&[0], &[1]]);
        assert_eq!(reduced_homology(&s0).reduced_betti, vec![1]);
        assert_eq!(mod2_betti(&s0), vec![1]);
    }

    #[test]
    fn projective_plane_has_torsion() {
        let k = rp2();
        let r = reduced_homology(&k);
        assert_eq!(r.reduced_betti, vec![0, 0, 0]);
        assert_eq!(r.torsion.get(&1), Some(&vec![2]));
        assert_eq!(mod2_betti(&k), vec![0, 1, 1]);
        assert_eq!(r.euler, 1);
        assert_eq!(r.euler, r.euler_from_betti());
    }

    #[test]
    fn suspensions() {
        let s0 = complex(2, &[&[0], &[1]]);
        let r = reduced_homology(&suspension(&s0).unwrap());
        assert_eq!(r.reduced_betti, vec![0, 1]);
        let c = robust_clique_complex(&c4(), 2).unwrap();
        let r = reduced_homology(&suspension(&c).unwrap());
        assert_eq!(r.reduced_betti, vec![0, 0, 1]);
    }

    #[test]
    fn join_of_cycles() {
        let c = robust_clique_complex(&c4(), 2).unwrap();
        let r = reduced_homology(&join(&c, &c).unwrap());
        assert!(r.is_wedge_of_spheres(3, 1));
        let two = complex(5, &[&[0, 1], &[1, 2], &[2, 0], &[0, 3], &[3, 4], &[4, 0]]);
        let r = reduced_homology(&join(&two, &c).unwrap());
        assert!(r.is_wedge_of_spheres(3, 2));
    }

    #[test]
    fn embedded_join_over_simplex() {
        // two circles sharing an edge
        let k = complex(5, &[&[0, 1], &[1, 2], &[2, 0]]);
        let l = complex(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]);
        let shared = SimplicialComplex::simplex(5, set(&[1, 2])).unwrap();
        assert_eq!(complex_intersection(&k, &l).unwrap(), shared);
        let e = reduced_homology(&embedded_join(&k, &l).unwrap());
        assert!(e.is_wedge_of_spheres(3, 1), "{e:?}");
        assert!(reduced_homology(&join(&k, &l).unwrap()).is_wedge_of_spheres(3, 1));

        // the intersection hypothesis alone does not force equal homology
        let k = complex(7, &[&[0, 2], &[0, 3], &[2, 3]]);
        let l = complex(7, &[&[2, 3], &[2, 4, 5], &[3, 4], &[4, 6]]);
        let shared = SimplicialComplex::simplex(7, set(&[2, 3])).unwrap();
        assert_eq!(complex_intersection(&k, &l).unwrap(), shared);
        assert!(reduced_homology(&embedded_join(&k, &l).unwrap()).is_acyclic());
        assert!(reduced_homology(&join(&k, &l).unwrap()).is_wedge_of_spheres(3, 1));
    }

    #[test]
    fn duality_examples() {
        let c = duality_comparison(&c4(), 2, DEFAULT_TOTAL_CUT_CAP).unwrap();
        assert!(c.agrees);
        assert!(c.total_cut.is_wedge_of_spheres(0, 1));
        let c = duality_comparison(&make_grid(2, 3).unwrap(), 2, DEFAULT_TOTAL_CUT_CAP).unwrap();
        assert!(c.agrees);
        assert!(c.total_cut.is_wedge_of_spheres(2, 2));
        assert!(c.robust_clique.is_wedge_of_spheres(1, 2));
        let c = duality_comparison(&c4(), 3, DEFAULT_TOTAL_CUT_CAP).unwrap();
        assert!(c.agrees);
        assert!(c.total_cut.void);
        assert!(c.robust_clique.is_acyclic());
    }

    #[test]
    fn dual_prediction_matches_direct_dual() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let k = random_complex(&mut rng, 6, 4);
            let predicted = dual_prediction(&reduced_homology(&k), 6);
            let direct = reduced_homology(&alexander_dual(&k));
            for i in -1..6 {
                assert_eq!(predicted.betti(i), direct.betti(i), "{k:?}");
            }
        }
        // RP2's torsion moves one dimension
        let k = rp2();
        let predicted = dual_prediction(&reduced_homology(&k), 6);
        let direct = reduced_homology(&alexander_dual(&k));
        assert_eq!(predicted.torsion, direct.torsion);
    }

    proptest! {
        #[test]
        fn euler_identity(seed in any::<u64>(), n in 1usize..8, facets in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = random_complex(&mut rng, n, facets);
            let r = reduced_homology(&k);
            prop_assert_eq!(r.euler, r.euler_from_betti());
            if r.is_torsion_free() {
                prop_assert_eq!(mod2_betti(&k), r.reduced_betti.clone());
            }
        }

        #[test]
        fn relabel_invariance(seed in any::<u64>(), n in 1usize..8) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = random_complex(&mut rng, n, 5);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let l = k.relabel(&perm, n).unwrap();
            prop_assert_eq!(reduced_homology(&k), reduced_homology(&l));
        }

        #[test]
        fn cones_are_acyclic(seed in any::<u64>(), n in 1usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = random_complex(&mut rng, n, 4);
            prop_assert!(reduced_homology(&cone(&k).unwrap()).is_acyclic());
        }
    }
}
