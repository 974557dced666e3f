//! JSON documents for arrangements, graphs, hypergraphs and signed graphs.
//!
//! Every document uses 1-based labels. Parsing happens in two stages: the
//! bytes must be JSON of the right shape (`InputError::Parse`), then the
//! content must describe a valid object (`InputError::Validation`, with the
//! offending field).

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::arrangement::{Ambient, Arrangement, ArrangementError, SignedBlock, SubspaceA, SubspaceB};
use crate::graphmodels::{
    graph_to_arrangement, hypergraph_to_arrangement, signed_graph_to_arrangement, Graph, GraphError,
    Hypergraph, SignedGraph,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid value at `{field}`: {message}")]
    Validation { field: String, message: String },
}

impl InputError {
    fn at(field: impl Into<String>, message: impl ToString) -> Self {
        Self::Validation { field: field.into(), message: message.to_string() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyDoc {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientDoc {
    pub family: FamilyDoc,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignDoc {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedBlockDoc {
    pub members: Vec<usize>,
    pub signs: Vec<SignDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum SubspaceDoc {
    A {
        blocks: Vec<Vec<usize>>,
    },
    B {
        #[serde(default)]
        zero: Vec<usize>,
        #[serde(default)]
        signed_blocks: Vec<SignedBlockDoc>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub ambient: AmbientDoc,
    pub subspaces: Vec<SubspaceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub n: usize,
    pub hyperedges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedGraphDoc {
    pub n: usize,
    #[serde(default)]
    pub positive: Vec<[usize; 2]>,
    #[serde(default)]
    pub negative: Vec<[usize; 2]>,
    #[serde(default)]
    pub zero_vertices: Vec<usize>,
}

/// An arrangement of either family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyArrangement {
    A(Arrangement<SubspaceA>),
    B(Arrangement<SubspaceB>),
}

impl AnyArrangement {
    pub fn ambient(&self) -> Ambient {
        match self {
            Self::A(a) => a.ambient(),
            Self::B(a) => a.ambient(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Self::A(a) => a.len(),
            Self::B(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_doc(&self) -> ArrangementDoc {
        match self {
            Self::A(a) => arrangement_a_doc(a),
            Self::B(a) => arrangement_b_doc(a),
        }
    }

    pub fn from_doc(doc: &ArrangementDoc) -> Result<Self, InputError> {
        arrangement_from_doc(doc)
    }
}

impl From<Arrangement<SubspaceA>> for AnyArrangement {
    fn from(a: Arrangement<SubspaceA>) -> Self {
        Self::A(a)
    }
}

impl From<Arrangement<SubspaceB>> for AnyArrangement {
    fn from(a: Arrangement<SubspaceB>) -> Self {
        Self::B(a)
    }
}

impl Serialize for AnyArrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AnyArrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = ArrangementDoc::deserialize(d)?;
        arrangement_from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn subspace_a_doc(s: &SubspaceA) -> SubspaceDoc {
    SubspaceDoc::A {
        blocks: s.blocks().iter().filter(|b| b.len() > 1).map(|b| one_based(b)).collect(),
    }
}

pub fn subspace_b_doc(s: &SubspaceB) -> SubspaceDoc {
    let signed_blocks = s
        .signed_blocks()
        .into_iter()
        .filter(|b| b.members.len() > 1)
        .map(|b| SignedBlockDoc {
            members: one_based(&b.members),
            signs: b.negated.iter().map(|&neg| if neg { SignDoc::Minus } else { SignDoc::Plus }).collect(),
        })
        .collect();
    SubspaceDoc::B { zero: one_based(&s.zero_set()), signed_blocks }
}

pub fn arrangement_a_doc(a: &Arrangement<SubspaceA>) -> ArrangementDoc {
    ArrangementDoc {
        ambient: AmbientDoc { family: FamilyDoc::A, n: a.n() },
        subspaces: a.subspaces().iter().map(subspace_a_doc).collect(),
    }
}

pub fn arrangement_b_doc(a: &Arrangement<SubspaceB>) -> ArrangementDoc {
    ArrangementDoc {
        ambient: AmbientDoc { family: FamilyDoc::B, n: a.n() },
        subspaces: a.subspaces().iter().map(subspace_b_doc).collect(),
    }
}

fn zero_based(n: usize, labels: &[usize], field: &str) -> Result<Vec<usize>, InputError> {
    labels
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            if l == 0 || l > n {
                Err(InputError::at(format!("{field}[{k}]"), format!("label {l} is outside 1..={n}")))
            } else {
                Ok(l - 1)
            }
        })
        .collect()
}

fn arrangement_from_doc(doc: &ArrangementDoc) -> Result<AnyArrangement, InputError> {
    let n = doc.ambient.n;
    match doc.ambient.family {
        FamilyDoc::A if n < 2 => {
            return Err(InputError::at("ambient.n", "type A needs n >= 2"));
        }
        FamilyDoc::B if n < 1 => {
            return Err(InputError::at("ambient.n", "type B needs n >= 1"));
        }
        _ => {}
    }
    let wrap = |e: ArrangementError| -> InputError {
        let field = match &e {
            ArrangementError::FullSpace(i) => format!("subspaces[{i}]"),
            ArrangementError::NotAntichain(_, j) => format!("subspaces[{j}]"),
            ArrangementError::AmbientMismatch { index, .. } => format!("subspaces[{index}]"),
            _ => "subspaces".to_string(),
        };
        InputError::at(field, e)
    };
    match doc.ambient.family {
        FamilyDoc::A => {
            let subspaces = doc
                .subspaces
                .iter()
                .enumerate()
                .map(|(i, s)| match s {
                    SubspaceDoc::A { blocks } => {
                        let blocks = blocks
                            .iter()
                            .enumerate()
                            .map(|(b, block)| zero_based(n, block, &format!("subspaces[{i}].blocks[{b}]")))
                            .collect::<Result<Vec<_>, _>>()?;
                        SubspaceA::from_blocks(n, &blocks)
                            .map_err(|e| InputError::at(format!("subspaces[{i}].blocks"), e))
                    }
                    SubspaceDoc::B { .. } => Err(InputError::at(
                        format!("subspaces[{i}]"),
                        "type A subspaces are given by `blocks`",
                    )),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Arrangement::new(n, subspaces).map(AnyArrangement::A).map_err(wrap)
        }
        FamilyDoc::B => {
            let subspaces = doc
                .subspaces
                .iter()
                .enumerate()
                .map(|(i, s)| match s {
                    SubspaceDoc::B { zero, signed_blocks } => {
                        let zero = zero_based(n, zero, &format!("subspaces[{i}].zero"))?;
                        let blocks = signed_blocks
                            .iter()
                            .enumerate()
                            .map(|(b, block)| {
                                let field = format!("subspaces[{i}].signed_blocks[{b}]");
                                if block.members.len() != block.signs.len() {
                                    return Err(InputError::at(
                                        format!("{field}.signs"),
                                        "needs one sign per member",
                                    ));
                                }
                                Ok(SignedBlock {
                                    members: zero_based(n, &block.members, &format!("{field}.members"))?,
                                    negated: block.signs.iter().map(|s| *s == SignDoc::Minus).collect(),
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        SubspaceB::from_parts(n, &zero, &blocks)
                            .map_err(|e| InputError::at(format!("subspaces[{i}]"), e))
                    }
                    SubspaceDoc::A { .. } => Err(InputError::at(
                        format!("subspaces[{i}]"),
                        "type B subspaces are given by `zero` and `signed_blocks`",
                    )),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Arrangement::new(n, subspaces).map(AnyArrangement::B).map_err(wrap)
        }
    }
}

fn edges_from_doc(n: usize, edges: &[[usize; 2]], field: &str) -> Result<Vec<(usize, usize)>, InputError> {
    edges
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let v = zero_based(n, e, &format!("{field}[{k}]"))?;
            Ok((v[0], v[1]))
        })
        .collect()
}

fn graph_error(field: &str, e: GraphError) -> InputError {
    let field = match e {
        GraphError::NestedHyperedges(i, _) | GraphError::SmallHyperedge(i) => format!("{field}[{i}]"),
        _ => field.to_string(),
    };
    InputError::at(field, e)
}

pub fn graph_from_doc(doc: &GraphDoc) -> Result<Graph, InputError> {
    Graph::new(doc.n, &edges_from_doc(doc.n, &doc.edges, "edges")?).map_err(|e| graph_error("edges", e))
}

pub fn hypergraph_from_doc(doc: &HypergraphDoc) -> Result<Hypergraph, InputError> {
    let edges = doc
        .hyperedges
        .iter()
        .enumerate()
        .map(|(k, e)| zero_based(doc.n, e, &format!("hyperedges[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Hypergraph::new(doc.n, &edges).map_err(|e| graph_error("hyperedges", e))
}

pub fn signed_graph_from_doc(doc: &SignedGraphDoc) -> Result<SignedGraph, InputError> {
    let positive = edges_from_doc(doc.n, &doc.positive, "positive")?;
    let negative = edges_from_doc(doc.n, &doc.negative, "negative")?;
    let zeros = zero_based(doc.n, &doc.zero_vertices, "zero_vertices")?;
    SignedGraph::new(doc.n, &positive, &negative, &zeros).map_err(|e| {
        let field = match e {
            GraphError::DuplicateZeroVertex(_) => "zero_vertices",
            _ => "edges",
        };
        InputError::at(field, e)
    })
}

fn edge_docs(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

pub fn graph_doc(g: &Graph) -> GraphDoc {
    GraphDoc { n: g.n(), edges: edge_docs(g.edges()) }
}

pub fn hypergraph_doc(h: &Hypergraph) -> HypergraphDoc {
    HypergraphDoc { n: h.n(), hyperedges: h.hyperedges().iter().map(|e| one_based(e)).collect() }
}

pub fn signed_graph_doc(s: &SignedGraph) -> SignedGraphDoc {
    SignedGraphDoc {
        n: s.n(),
        positive: edge_docs(s.positive()),
        negative: edge_docs(s.negative()),
        zero_vertices: one_based(s.zero_vertices()),
    }
}

/// Any parsed input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Arrangement(AnyArrangement),
    Graph(Graph),
    Hypergraph(Hypergraph),
    SignedGraph(SignedGraph),
}

impl Input {
    /// The arrangement encoded by the input.
    pub fn to_arrangement(&self) -> Result<AnyArrangement, InputError> {
        let empty = |e: GraphError| InputError::at("edges", e);
        match self {
            Self::Arrangement(a) => Ok(a.clone()),
            Self::Graph(g) => graph_to_arrangement(g).map(AnyArrangement::A).map_err(empty),
            Self::Hypergraph(h) => hypergraph_to_arrangement(h).map(AnyArrangement::A).map_err(empty),
            Self::SignedGraph(s) => signed_graph_to_arrangement(s).map(AnyArrangement::B).map_err(empty),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Arrangement(a) => serde_json::to_value(a.to_doc()),
            Self::Graph(g) => serde_json::to_value(graph_doc(g)),
            Self::Hypergraph(h) => serde_json::to_value(hypergraph_doc(h)),
            Self::SignedGraph(s) => serde_json::to_value(signed_graph_doc(s)),
        }
        .expect("documents serialize")
    }
}

fn typed<T: serde::de::DeserializeOwned>(value: Value) -> Result<T, InputError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        InputError::at(if path == "." { String::new() } else { path }, e.into_inner())
    })
}

/// Recognize and validate a document by its keys.
pub fn parse_value(value: Value) -> Result<Input, InputError> {
    let Some(object) = value.as_object() else {
        return Err(InputError::at("", "expected a JSON object"));
    };
    let has = |k: &str| object.contains_key(k);
    if has("ambient") {
        Ok(Input::Arrangement(arrangement_from_doc(&typed(value)?)?))
    } else if has("hyperedges") {
        Ok(Input::Hypergraph(hypergraph_from_doc(&typed(value)?)?))
    } else if has("edges") {
        Ok(Input::Graph(graph_from_doc(&typed(value)?)?))
    } else if has("positive") || has("negative") || has("zero_vertices") {
        Ok(Input::SignedGraph(signed_graph_from_doc(&typed(value)?)?))
    } else {
        Err(InputError::at(
            "",
            "expected an arrangement, graph, hypergraph or signed graph document",
        ))
    }
}

pub fn parse_json(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_input(text: &str) -> Result<Input, InputError> {
    parse_value(parse_json(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn validation_field(text: &str) -> String {
        match parse_input(text) {
            Err(InputError::Validation { field, .. }) => field,
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn graph_documents() {
        let input = parse_input(r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(input, Input::Graph(Graph::complete(3)));
        let a = input.to_arrangement().unwrap();
        assert_eq!(a, AnyArrangement::A(graph_to_arrangement(&Graph::complete(3)).unwrap()));
    }

    #[test]
    fn arrangement_documents() {
        let input = parse_input(
            r#"{"ambient":{"family":"B","n":2},"subspaces":[{"zero":[1],"signed_blocks":[]}]}"#,
        )
        .unwrap();
        let expected = Arrangement::new(2, vec![SubspaceB::coordinate_hyperplane(2, 0)]).unwrap();
        assert_eq!(input, Input::Arrangement(AnyArrangement::B(expected)));

        let input = parse_input(
            r#"{"ambient":{"family":"B","n":3},"subspaces":[{"zero":[],"signed_blocks":[{"members":[2,3],"signs":["+","-"]}]}]}"#,
        )
        .unwrap();
        let expected = Arrangement::new(3, vec![SubspaceB::pair_hyperplane(3, 1, 2, true)]).unwrap();
        assert_eq!(input, Input::Arrangement(AnyArrangement::B(expected)));

        let input =
            parse_input(r#"{"ambient":{"family":"A","n":4},"subspaces":[{"blocks":[[1,2,3]]}]}"#).unwrap();
        let expected =
            Arrangement::new(4, vec![SubspaceA::from_blocks(4, &[vec![0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(input, Input::Arrangement(AnyArrangement::A(expected)));
    }

    #[test]
    fn round_trips() {
        let docs = [
            r#"{"ambient":{"family":"A","n":5},"subspaces":[{"blocks":[[1,2,3]]},{"blocks":[[4,5]]}]}"#,
            r#"{"ambient":{"family":"B","n":3},"subspaces":[{"zero":[1],"signed_blocks":[{"members":[2,3],"signs":["+","-"]}]}]}"#,
            r#"{"n":4,"edges":[[1,2],[3,4]]}"#,
            r#"{"n":4,"hyperedges":[[1,2,3],[3,4]]}"#,
            r#"{"n":2,"positive":[[1,2]],"negative":[],"zero_vertices":[2]}"#,
        ];
        for text in docs {
            let input = parse_input(text).unwrap();
            let again = parse_value(input.to_json()).unwrap();
            assert_eq!(input, again, "{text}");
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_input("{\n  \"n\": 3,\n  \"edges\": [[1,2]\n}") {
            Err(InputError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation_errors_name_fields() {
        assert_eq!(validation_field(r#"{"n":3,"hyperedges":[[1,2],[1,2,3]]}"#), "hyperedges[0]");
        assert_eq!(validation_field(r#"{"n":3,"edges":[[1,4]]}"#), "edges[0][1]");
        assert_eq!(
            validation_field(r#"{"ambient":{"family":"A","n":3},"subspaces":[{"blocks":[[1,2]]},{"blocks":[[1,2,3]]}]}"#),
            "subspaces[1]"
        );
        assert_eq!(
            validation_field(r#"{"ambient":{"family":"A","n":3},"subspaces":[{"blocks":[[1,0]]}]}"#),
            "subspaces[0].blocks[0][1]"
        );
        assert_eq!(
            validation_field(r#"{"ambient":{"family":"C","n":3},"subspaces":[]}"#),
            "ambient.family"
        );
        assert_eq!(
            validation_field(r#"{"ambient":{"family":"B","n":2},"subspaces":[{"blocks":[[1,2]]}]}"#),
            "subspaces[0]"
        );
        assert_eq!(validation_field(r#"[1,2]"#), "");
    }
}
