//! JSON interchange for graphs, gluing scripts and complexes. Output is
//! canonical (fixed key order, sorted edges and facets), so reading and
//! writing a canonical document reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{GlueStep, Graph};
use crate::vertex_set::VertexSet;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScriptDoc {
    steps: Vec<GlueStep>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    universe: usize,
    facets: Vec<Vec<usize>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        vertices: g.vertex_count(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().clone(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(s)?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let mut g = Graph::from_edges(doc.vertices, &edges)?;
    for (v, label) in doc.labels {
        g.set_label(v, label)?;
    }
    Ok(g)
}

pub fn script_to_json(steps: &[GlueStep]) -> String {
    serde_json::to_string(&ScriptDoc {
        steps: steps.to_vec(),
    })
    .expect("serializable")
}

/// Parses a gluing script; validation against the growing graph happens when
/// the sequence is built.
pub fn script_from_json(s: &str) -> Result<Vec<GlueStep>> {
    let doc: ScriptDoc = serde_json::from_str(s)?;
    Ok(doc.steps)
}

/// Facets in sorted order; the void complex has no facets and `{∅}` has the
/// single facet `[]`.
pub fn complex_to_json(k: &SimplicialComplex) -> String {
    let mut facets = k.facets();
    facets.sort_unstable();
    let doc = ComplexDoc {
        universe: k.universe(),
        facets: facets.iter().map(|f| f.iter().collect()).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn complex_from_json(s: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_str(s)?;
    let facets = doc
        .facets
        .iter()
        .map(|f| facet(f, doc.universe))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(doc.universe, facets)
}

fn facet(vertices: &[usize], universe: usize) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for &v in vertices {
        if v >= universe {
            return Err(Error::VertexOutOfRange { vertex: v, universe });
        }
        if set.contains(v) {
            return Err(Error::Malformed(format!("repeated vertex {v} in a facet")));
        }
        set.insert(v);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::robust_clique_complex;
    use crate::graph::make_grid;

    #[test]
    fn graph_round_trip() {
        let g = make_grid(2, 3).unwrap();
        let s = graph_to_json(&g);
        assert!(s.starts_with(r#"{"vertices":6,"edges":[[0,1],[0,3],"#));
        let back = graph_from_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(graph_to_json(&back), s);
        let plain = r#"{"vertices":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#;
        assert_eq!(graph_to_json(&graph_from_json(plain).unwrap()), plain);
    }

    #[test]
    fn script_round_trip() {
        let s = r#"{"steps":[{"kind":"edge","attach":[1,2]},{"kind":"corner","attach":[4,1,2]}]}"#;
        let steps = script_from_json(s).unwrap();
        assert_eq!(steps[1], GlueStep::corner(4, 1, 2));
        assert_eq!(script_to_json(&steps), s);
    }

    #[test]
    fn complex_round_trip() {
        let k = robust_clique_complex(&Graph::cycle(4).unwrap(), 2).unwrap();
        let s = complex_to_json(&k);
        assert_eq!(s, r#"{"universe":4,"facets":[[0,1],[0,3],[1,2],[2,3]]}"#);
        assert_eq!(complex_from_json(&s).unwrap(), k);
        for k in [SimplicialComplex::void(3), SimplicialComplex::empty_face_only(3)] {
            let s = complex_to_json(&k);
            assert_eq!(complex_from_json(&s).unwrap(), k);
        }
        assert_eq!(
            complex_to_json(&SimplicialComplex::empty_face_only(2)),
            r#"{"universe":2,"facets":[[]]}"#
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(graph_from_json("{"), Err(Error::Json(_))));
        assert!(matches!(
            graph_from_json(r#"{"vertices":2,"edges":[[0,2]]}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            complex_from_json(r#"{"universe":2,"facets":[[0,0]]}"#),
            Err(Error::Malformed(_))
        ));
        assert!(script_from_json(r#"{"steps":[{"kind":"side","attach":[0,1]}]}"#).is_err());
    }

    #[test]
    fn grid_round_trip_keeps_labels() {
        let g = make_grid(3, 3).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back.label(4), Some("(2,2)"));
    }
}
