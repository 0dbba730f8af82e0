//! Text exports: DOT and JSON for graphs, OFF for complexes.

use std::fmt::Write as _;

use heawood_core::lattice;
use heawood_core::{Graph, QuotientGraph, SimplicialComplex};
use serde::{Deserialize, Serialize};

use crate::KitError;

pub const SCHEMA: &str = "heawood-kit/1";

/// A graph together with coordinates for its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub name: String,
    pub signature: Option<Vec<i64>>,
    /// Tiling coordinates for quotient graphs, `[i]` for plain graphs.
    pub vertices: Vec<Vec<i64>>,
    pub graph: Graph,
    pub delta: bool,
}

impl LabeledGraph {
    pub fn from_quotient(q: &QuotientGraph) -> Self {
        let (name, signature) = match q.signature() {
            Some(k) => (format!("H({k})"), Some(k.entries().to_vec())),
            None => (format!("H[{}]", q.sublattice().describe()), None),
        };
        LabeledGraph {
            name,
            signature,
            vertices: q.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            graph: q.graph().clone(),
            delta: q.is_delta(),
        }
    }

    pub fn from_graph(name: &str, g: &Graph) -> Self {
        LabeledGraph {
            name: name.to_string(),
            signature: None,
            vertices: (0..g.vertex_count() as i64).map(|i| vec![i]).collect(),
            graph: g.clone(),
            delta: false,
        }
    }

    /// Coordinates joined by commas; negatives keep their minus sign.
    pub fn label(&self, v: usize) -> String {
        self.vertices[v]
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: u64,
    pub edges: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub counts: Counts,
    /// `d!·D` and `(d+1)!/2·D`, for strict signatures.
    pub formulas: Option<Counts>,
    pub delta: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: String,
    pub name: String,
    pub signature: Option<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
    pub edges: Vec<[usize; 2]>,
    pub meta: Meta,
}

fn formulas(signature: &[i64]) -> Option<Counts> {
    let k = lattice::KSignature::new(signature).ok()?;
    if k.is_delta() {
        return None;
    }
    let dk = k.dk_u64().ok()?;
    let d = k.d() as u64;
    let fact = |n: u64| (1..=n).product::<u64>();
    Some(Counts {
        vertices: fact(d) * dk,
        edges: fact(d + 1) / 2 * dk,
    })
}

pub fn to_document(lg: &LabeledGraph) -> GraphDocument {
    GraphDocument {
        schema: SCHEMA.to_string(),
        name: lg.name.clone(),
        signature: lg.signature.clone(),
        vertices: lg.vertices.clone(),
        edges: lg.graph.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        meta: Meta {
            counts: Counts {
                vertices: lg.graph.vertex_count() as u64,
                edges: lg.graph.edge_count() as u64,
            },
            formulas: lg.signature.as_deref().and_then(formulas),
            delta: lg.delta,
        },
    }
}

pub fn export_json(lg: &LabeledGraph) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(lg)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Reads a document written by [`export_json`].
pub fn parse_json(text: &str) -> Result<LabeledGraph, KitError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    if doc.schema != SCHEMA {
        return Err(KitError::Invalid(format!(
            "unknown schema {:?}",
            doc.schema
        )));
    }
    let n = doc.vertices.len();
    if let Some(e) = doc
        .edges
        .iter()
        .find(|e| e[0] >= n || e[1] >= n || e[0] == e[1])
    {
        return Err(KitError::Invalid(format!("bad edge {e:?}")));
    }
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    Ok(LabeledGraph {
        name: doc.name,
        signature: doc.signature,
        vertices: doc.vertices,
        graph: Graph::from_edges(n, &edges),
        delta: doc.meta.delta,
    })
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(lg: &LabeledGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", dot_quote(&lg.name));
    for v in 0..lg.graph.vertex_count() {
        let _ = writeln!(out, "  {v} [label={}];", dot_quote(&lg.label(v)));
    }
    for (a, b) in lg.graph.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

pub fn export_graph(lg: &LabeledGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => export_dot(lg),
        GraphFormat::Json => export_json(lg),
    }
}

/// Positions for the vertices of `T_k` when `d ≤ 3`: the ambient point of
/// each class representative, truncated to three coordinates.
pub fn torus_coordinates(q: &QuotientGraph) -> Option<Vec<[i64; 3]>> {
    if q.d() > 3 {
        return None;
    }
    let reps = q.sublattice().classes();
    Some(
        reps.iter()
            .map(|a| {
                let v = lattice::to_ambient(a);
                [v[0], v[1], v[2]]
            })
            .collect(),
    )
}

/// OFF listing. Surfaces list their triangles; higher-dimensional
/// complexes list every triangle of their 2-skeleton. Without positions
/// vertex `i` sits at `(i, 0, 0)`.
pub fn export_complex_off(c: &SimplicialComplex, coords: Option<&[[i64; 3]]>) -> String {
    let faces: Vec<Vec<usize>> = if c.dimension() <= 2 {
        c.facets().to_vec()
    } else {
        c.faces(2)
    };
    let edges = if c.dimension() >= 1 {
        c.faces(1).len()
    } else {
        0
    };
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} {}", c.vertex_count(), faces.len(), edges);
    for v in 0..c.vertex_count() {
        let p = coords.map_or([v as i64, 0, 0], |cs| cs[v]);
        let _ = writeln!(out, "{} {} {}", p[0], p[1], p[2]);
    }
    for f in &faces {
        let _ = write!(out, "{}", f.len());
        for v in f {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// The triangles of `T_k` and its f-vector, for the `build --torus` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema: String,
    pub name: String,
    pub f_vector: Vec<u64>,
    pub euler_characteristic: i64,
    pub facets: Vec<Vec<usize>>,
}

pub fn complex_document(name: &str, c: &SimplicialComplex) -> ComplexDocument {
    ComplexDocument {
        schema: SCHEMA.to_string(),
        name: name.to_string(),
        f_vector: c.f_vector().0,
        euler_characteristic: c.euler_characteristic(),
        facets: c.facets().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_documents() {
        let lg = LabeledGraph::from_graph("empty", &Graph::empty(0));
        assert_eq!(export_dot(&lg), "graph \"empty\" {\n}\n");
        let back = parse_json(&export_json(&lg)).unwrap();
        assert_eq!(back, lg);
    }

    #[test]
    fn single_triangle_off() {
        let c = SimplicialComplex::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            export_complex_off(&c, None),
            "OFF\n3 1 3\n0 0 0\n1 0 0\n2 0 0\n3 0 1 2\n"
        );
    }

    #[test]
    fn rejects_foreign_schema() {
        let lg = LabeledGraph::from_graph("c", &Graph::cycle(3));
        let text = export_json(&lg).replace(SCHEMA, "other/2");
        assert!(matches!(parse_json(&text), Err(KitError::Invalid(_))));
    }
}
