//! JSON documents read and written by the CLI.
//!
//! Both document kinds carry a `schema` field. Field order is fixed by the
//! struct definitions and every list is canonically ordered, so identical
//! invocations produce byte-identical output.

use coverideal::graph::{Graph, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("coverideal ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema: u32,
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[String; 2]>,
}

impl GraphDocument {
    pub fn from_graph(name: impl Into<String>, g: &Graph) -> Self {
        let edges = g
            .edges()
            .iter()
            .map(|&(a, b)| [g.vertex(a).name.clone(), g.vertex(b).name.clone()])
            .collect();
        GraphDocument { schema: SCHEMA_VERSION, name: name.into(), vertices: g.vertices().to_vec(), edges }
    }

    /// Validates the document and builds the graph with the given vertex cap.
    pub fn to_graph(&self, max_vertices: usize) -> CliResult<Graph> {
        check_schema(self.schema)?;
        if self.vertices.len() > max_vertices {
            return Err(CliError::Capacity(format!(
                "graph has {} vertices, limit is {max_vertices}",
                self.vertices.len()
            )));
        }
        let pairs: Vec<(&str, &str)> = self.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Ok(Graph::from_named_edges(self.vertices.clone(), &pairs)?.with_vertex_cap(max_vertices))
    }
}

fn check_schema(schema: u32) -> CliResult<()> {
    if schema == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(CliError::Parse(format!("unsupported schema version {schema}, expected {SCHEMA_VERSION}")))
    }
}

/// Command parameters echoed into a report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool: String,
    pub command: String,
    pub parameters: Parameters,
    /// Generators and components are sorted lexicographically by exponent
    /// vector; prime supports by their vertex index sequences.
    pub ordering: String,
    pub result: Payload,
}

pub const ORDERING: &str = "lex";

impl ReportDocument {
    pub fn new(command: &str, parameters: Parameters, result: Payload) -> Self {
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool: TOOL_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            ordering: ORDERING.to_string(),
            result,
        }
    }

    pub fn check(&self) -> CliResult<()> {
        check_schema(self.schema)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Ideal(IdealPayload),
    Components(ComponentsPayload),
    Primes(PrimesPayload),
    Decomposition(DecompositionPayload),
    Stabilization(StabilizationPayload),
}

/// Minimal generators as exponent vectors; no generators is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealPayload {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<u16>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentsPayload {
    pub variables: Vec<String>,
    pub components: Vec<Vec<u16>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<FamilyCounts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyCounts {
    pub a: usize,
    pub b: usize,
    pub d: Vec<ClusterCount>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterCount {
    pub r: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimesPayload {
    pub variables: Vec<String>,
    pub primes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionPayload {
    pub variables: Vec<String>,
    pub t: usize,
    pub n: usize,
    pub families: FamilyCounts,
    pub components: Vec<Vec<u16>>,
    pub irredundant: bool,
    pub redundant: Vec<Vec<u16>>,
    pub brute_checked: bool,
    pub equal: Option<bool>,
    pub components_match: Option<bool>,
    pub power_generators: Option<usize>,
    pub only_in_closed_form: Vec<Vec<u16>>,
    pub only_in_power: Vec<Vec<u16>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilizationPayload {
    pub variables: Vec<String>,
    pub horizon: usize,
    pub computed: usize,
    pub counts: Vec<usize>,
    pub ass_sets: Vec<Vec<Vec<String>>>,
    pub first_stable_index: usize,
    pub t: Option<usize>,
    pub predicted: Option<usize>,
    pub closed_form_agreement: Option<Vec<bool>>,
    pub full_support_first: Option<usize>,
    pub monotone: bool,
    pub stopped: Option<String>,
}

pub fn support_names(g: &Graph, set: VertexSet) -> Vec<String> {
    g.names(set).into_iter().map(str::to_string).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_graph(text: &str) -> CliResult<GraphDocument> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    check_schema(doc.schema)?;
    Ok(doc)
}

pub fn parse_report(text: &str) -> CliResult<ReportDocument> {
    let doc: ReportDocument = serde_json::from_str(text)?;
    doc.check()?;
    Ok(doc)
}
