//! Netlist JSON form of a circuit: node count, element edges with kind
//! and value, and the input/output attachment lists.

use serde::{Deserialize, Serialize};

use super::{element_label, parse_element_label, Circuit, Edge, ElementKind};
use crate::error::Error;
use crate::kfield::Scalar;

#[derive(Serialize, Deserialize)]
struct NetlistFile {
    nodes: usize,
    edges: Vec<NetlistEdge>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct NetlistEdge {
    src: usize,
    tgt: usize,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

/// Parse netlist JSON into a circuit with canonical element labels.
pub fn parse_netlist(text: &str) -> Result<Circuit, Error> {
    let file: NetlistFile = serde_json::from_str(text)
        .map_err(|e| Error::Netlist(format!("invalid netlist JSON: {e}")))?;
    let mut edges = Vec::with_capacity(file.edges.len());
    for (idx, e) in file.edges.iter().enumerate() {
        let kind = ElementKind::parse_token(&e.kind)
            .map_err(|err| Error::Netlist(format!("edge {idx}: {err}")))?;
        let value = match (&e.value, kind.takes_value()) {
            (Some(v), true) => Some(
                v.parse::<Scalar>()
                    .map_err(|err| Error::Netlist(format!("edge {idx}: bad value {v:?}: {err}")))?,
            ),
            (None, false) => None,
            (Some(_), false) => {
                return Err(Error::Netlist(format!(
                    "edge {idx}: kind {:?} does not take a value",
                    e.kind
                )))
            }
            (None, true) => {
                return Err(Error::Netlist(format!(
                    "edge {idx}: kind {:?} requires a value",
                    e.kind
                )))
            }
        };
        edges.push(Edge {
            src: e.src,
            tgt: e.tgt,
            label: element_label(kind, value.as_ref()),
        });
    }
    Circuit::new(file.nodes, edges, file.inputs, file.outputs)
}

/// Render a circuit whose labels are all element labels back to netlist
/// JSON. Values are written in canonical scalar form.
pub fn netlist_text(circuit: &Circuit) -> Result<String, Error> {
    let mut edges = Vec::with_capacity(circuit.edges().len());
    for e in circuit.edges() {
        let (kind, value) = parse_element_label(&e.label)?;
        edges.push(NetlistEdge {
            src: e.src,
            tgt: e.tgt,
            kind: kind.token().to_string(),
            value: value.map(|v| v.to_string()),
        });
    }
    let file = NetlistFile {
        nodes: circuit.nodes(),
        edges,
        inputs: circuit.inputs().to_vec(),
        outputs: circuit.outputs().to_vec(),
    };
    let mut text = serde_json::to_string_pretty(&file)
        .map_err(|e| Error::Netlist(format!("serialize: {e}")))?;
    text.push('\n');
    Ok(text)
}
