use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{Caps, Expected, Source, Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::{independent_sets, make_grid, random_edge_sequence, random_square_sequence};
use crate::homology::reduced_homology;
use crate::io::script_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    /// Every valid edge or corner attachment is a candidate at each step.
    Mixed,
    /// Edge gluing only.
    EdgeOnly,
}

/// Samples square sequences and records whether `Cliq_k(H_n)` has the
/// homology of a wedge of `(2k-3)`-spheres. Nothing is asserted: a sample
/// that is not such a wedge is flagged as a candidate counterexample, with
/// its gluing script in the parameters.
///
/// Sample `i` draws its length uniformly from `1..=max_len` using stream `i`
/// of a generator seeded with `seed`, so results do not depend on
/// scheduling. Samples exceeding the caps are skipped and logged.
pub fn scan_conjecture(
    k: usize,
    max_len: usize,
    samples: usize,
    seed: u64,
    mode: ScanMode,
    caps: &Caps,
) -> Result<Vec<VerificationReport>> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if max_len == 0 {
        return Err(Error::InvalidParameter("max length must be at least 1".into()));
    }
    let reports = (0..samples)
        .into_par_iter()
        .map(|i| scan_one(k, max_len, i, seed, mode, caps))
        .collect::<Vec<_>>()
        .into_iter()
        .filter_map(|r| match r {
            Ok(r) => Some(r),
            Err(e) => {
                log::warn!("scan sample skipped: {e}");
                None
            }
        })
        .collect();
    Ok(reports)
}

fn scan_one(
    k: usize,
    max_len: usize,
    sample: usize,
    seed: u64,
    mode: ScanMode,
    caps: &Caps,
) -> Result<VerificationReport> {
    let clock = caps.clock();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample as u64);
    let len = rng.gen_range(1..=max_len);
    let seq = match mode {
        ScanMode::Mixed => random_square_sequence(len, &mut rng),
        ScanMode::EdgeOnly => random_edge_sequence(len, &mut rng),
    };
    let c = caps.robust_clique(seq.last(), k)?;
    clock.check("building the robust clique complex")?;
    let h = reduced_homology(&c);
    let dim = (2 * k - 3) as isize;
    let spheres = h.betti(dim);
    let wedge = h.is_wedge_of_spheres(dim, spheres);
    let script: serde_json::Value =
        serde_json::from_str(&script_to_json(seq.steps())).expect("valid json");
    let mut r = VerificationReport {
        claim: "conjecture".to_string(),
        params: json!({
            "k": k, "length": len, "mode": mode, "sample": sample, "seed": seed,
            "script": script,
        }),
        expected: vec![Expected::new(
            "wedge_dimension",
            dim,
            Source::ClosedForm,
            "free homology concentrated in 2k-3",
        )],
        computed: json!({
            "homology": h,
            "wedge": wedge,
            "spheres": spheres,
            "faces": c.face_count(),
        }),
        verdict: if wedge { Verdict::Match } else { Verdict::Flagged },
        runtime_ms: clock.millis(),
        notes: Vec::new(),
    };
    if !wedge {
        r.notes.push("counterexample candidate".to_string());
    }
    Ok(r)
}

/// Grids with `2 <= m <= n`, `mn <= max_vertices`, at `k = α(G_{m,n})`: the
/// stated shape is one maximum independent set and a contractible complex
/// when `mn` is odd, two maximum independent sets and a single sphere when
/// `mn` is even. Flagged where the computation differs.
pub fn scan_grid_alpha(max_vertices: usize, caps: &Caps) -> Result<Vec<VerificationReport>> {
    let mut grids = Vec::new();
    for m in 2..=max_vertices / 2 {
        for n in m..=max_vertices / m {
            grids.push((m, n));
        }
    }
    grids
        .par_iter()
        .map(|&(m, n)| {
            let clock = caps.clock();
            let g = make_grid(m, n)?;
            let alpha = g.independence_number();
            let maximum = independent_sets(&g, alpha).len();
            let h = reduced_homology(&caps.robust_clique(&g, alpha)?);
            let odd = (m * n) % 2 == 1;
            let (sets, spheres) = if odd { (1, 0) } else { (2, 1) };
            let single = h.is_torsion_free() && h.total_betti() == spheres;
            let ok = maximum == sets && single;
            let mut r = VerificationReport {
                claim: "grid-alpha".to_string(),
                params: json!({"m": m, "n": n, "k": alpha}),
                expected: vec![
                    Expected::new("maximum_independent_sets", sets, Source::Claimed, "1 if mn odd, 2 if even"),
                    Expected::new("spheres", spheres, Source::Claimed, "point if mn odd, one sphere if even"),
                ],
                computed: json!({
                    "alpha": alpha,
                    "maximum_independent_sets": maximum,
                    "homology": h,
                }),
                verdict: if ok { Verdict::Match } else { Verdict::Flagged },
                runtime_ms: clock.millis(),
                notes: Vec::new(),
            };
            if !ok {
                r.notes.push(format!(
                    "{maximum} maximum independent sets, homology {}",
                    h.summary()
                ));
            }
            Ok(r)
        })
        .collect()
}
