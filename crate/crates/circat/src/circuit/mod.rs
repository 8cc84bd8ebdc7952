//! Circuits as open labeled graphs: a finite node set, labeled directed
//! edges, and input/output attachment maps. Composition glues shared
//! boundary nodes; tensor is disjoint union. Collapsing connected
//! components yields a cospan, and black-boxing solves the circuit's
//! constraint system to expose the relation it imposes on boundary
//! potentials and currents.

mod netlist;

use std::collections::BTreeMap;

pub use netlist::{netlist_text, parse_netlist};

use crate::error::Error;
use crate::kfield::Scalar;
use crate::linrel::{LinRel, Mat};
use crate::setcat::{Cospan, UnionFind};
use crate::symplag::{is_lagrangian_affine, AffRel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// An open circuit m → n. Equality is structural (same numbering, same
/// edge order); semantic comparison goes through `blackbox`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    nodes: usize,
    edges: Vec<Edge>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

impl Circuit {
    pub fn new(
        nodes: usize,
        edges: Vec<Edge>,
        inputs: Vec<usize>,
        outputs: Vec<usize>,
    ) -> Result<Self, Error> {
        for e in &edges {
            if e.src >= nodes || e.tgt >= nodes {
                return Err(Error::Netlist(format!(
                    "edge {}--{} out of range for {} nodes",
                    e.src, e.tgt, nodes
                )));
            }
        }
        for &b in inputs.iter().chain(outputs.iter()) {
            if b >= nodes {
                return Err(Error::Netlist(format!(
                    "boundary node {b} out of range for {nodes} nodes"
                )));
            }
        }
        Ok(Circuit {
            nodes,
            edges,
            inputs,
            outputs,
        })
    }

    /// n disconnected nodes, each an input and an output.
    pub fn identity(n: usize) -> Self {
        Circuit::new(n, vec![], (0..n).collect(), (0..n).collect()).expect("identity circuit")
    }

    /// Edgeless crossing m+n → n+m.
    pub fn braiding(m: usize, n: usize) -> Self {
        let total = m + n;
        let outputs = (0..total)
            .map(|k| if k < n { m + k } else { k - n })
            .collect();
        Circuit::new(total, vec![], (0..total).collect(), outputs).expect("braiding circuit")
    }

    /// One edge between an input node and an output node.
    pub fn two_terminal(label: impl Into<String>) -> Self {
        Circuit::new(
            2,
            vec![Edge {
                src: 0,
                tgt: 1,
                label: label.into(),
            }],
            vec![0],
            vec![1],
        )
        .expect("two-terminal circuit")
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn dom(&self) -> usize {
        self.inputs.len()
    }

    pub fn cod(&self) -> usize {
        self.cod_len()
    }

    fn cod_len(&self) -> usize {
        self.outputs.len()
    }

    /// Glue: this circuit's outputs are identified with the other's
    /// inputs, nodes renumbered by first appearance.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit, Error> {
        if self.cod_len() != other.inputs.len() {
            return Err(Error::ArityMismatch(format!(
                "compose: left has codomain {}, right has domain {}",
                self.cod_len(),
                other.inputs.len()
            )));
        }
        let mut uf = UnionFind::new(self.nodes + other.nodes);
        for (y, &out) in self.outputs.iter().enumerate() {
            uf.union(out, self.nodes + other.inputs[y]);
        }
        let (labels, classes) = uf.canonical_labels();
        let mut edges = Vec::with_capacity(self.edges.len() + other.edges.len());
        for e in &self.edges {
            edges.push(Edge {
                src: labels[e.src],
                tgt: labels[e.tgt],
                label: e.label.clone(),
            });
        }
        for e in &other.edges {
            edges.push(Edge {
                src: labels[self.nodes + e.src],
                tgt: labels[self.nodes + e.tgt],
                label: e.label.clone(),
            });
        }
        Circuit::new(
            classes,
            edges,
            self.inputs.iter().map(|&x| labels[x]).collect(),
            other.outputs.iter().map(|&y| labels[self.nodes + y]).collect(),
        )
    }

    /// Disjoint union.
    pub fn tensor(&self, other: &Circuit) -> Circuit {
        let shift = self.nodes;
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(Edge {
                src: e.src + shift,
                tgt: e.tgt + shift,
                label: e.label.clone(),
            });
        }
        let mut inputs = self.inputs.clone();
        inputs.extend(other.inputs.iter().map(|&x| x + shift));
        let mut outputs = self.outputs.clone();
        outputs.extend(other.outputs.iter().map(|&y| y + shift));
        Circuit::new(self.nodes + other.nodes, edges, inputs, outputs)
            .expect("tensor circuit")
    }

    /// Collapse each connected component to a point, keeping the boundary
    /// attachments: the circuit's underlying cospan.
    pub fn component_cospan(&self) -> Cospan {
        let mut uf = UnionFind::new(self.nodes);
        for e in &self.edges {
            uf.union(e.src, e.tgt);
        }
        let (labels, classes) = uf.canonical_labels();
        Cospan::new(
            classes,
            self.inputs.iter().map(|&x| labels[x]).collect(),
            self.outputs.iter().map(|&y| labels[y]).collect(),
        )
        .expect("component cospan")
    }

    /// Solve the circuit: one constraint system over node potentials,
    /// per-edge element currents, and boundary currents, projected onto
    /// the boundary coordinates (interleaved potential and current,
    /// inputs first).
    ///
    /// Unknowns: φ_v per node, (iin_e, iout_e) per edge (current entering
    /// the element at src and leaving at tgt), I_x per input, I_y per
    /// output. Constraints: each edge's (φ_src, iin, φ_tgt, iout) lies in
    /// its label's relation, plus current conservation at every node
    /// (boundary inputs flow in, outputs flow out).
    pub fn blackbox(&self, sem: &LabelSemantics) -> Result<AffRel, Error> {
        let (n_nodes, n_edges) = (self.nodes, self.edges.len());
        let (m, n) = (self.inputs.len(), self.outputs.len());
        let phi = |v: usize| v;
        let iin = |e: usize| n_nodes + 2 * e;
        let iout = |e: usize| n_nodes + 2 * e + 1;
        let ix = |x: usize| n_nodes + 2 * n_edges + x;
        let iy = |y: usize| n_nodes + 2 * n_edges + m + y;
        let width = n_nodes + 2 * n_edges + m + n;

        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            let rel = sem
                .get(&edge.label)
                .ok_or_else(|| Error::MissingLabel(edge.label.clone()))?;
            let Some(linear) = rel.linear() else {
                return Ok(AffRel::empty(2 * m, 2 * n));
            };
            let offset = rel.offset().expect("non-empty relation has an offset");
            for crow in linear.constraint_rows() {
                let b = crow
                    .iter()
                    .zip(offset)
                    .fold(Scalar::zero(), |acc, (c, o)| &acc + &(c * o));
                let mut row = vec![Scalar::zero(); width];
                // += rather than = so self-loops accumulate.
                row[phi(edge.src)] = &row[phi(edge.src)] + &crow[0];
                row[iin(e)] = &row[iin(e)] + &crow[1];
                row[phi(edge.tgt)] = &row[phi(edge.tgt)] + &crow[2];
                row[iout(e)] = &row[iout(e)] + &crow[3];
                rows.push(row);
                rhs.push(b);
            }
        }
        for v in 0..n_nodes {
            let mut row = vec![Scalar::zero(); width];
            for (x, &node) in self.inputs.iter().enumerate() {
                if node == v {
                    row[ix(x)] = &row[ix(x)] + &Scalar::one();
                }
            }
            for (y, &node) in self.outputs.iter().enumerate() {
                if node == v {
                    row[iy(y)] = &row[iy(y)] - &Scalar::one();
                }
            }
            for (e, edge) in self.edges.iter().enumerate() {
                if edge.tgt == v {
                    row[iout(e)] = &row[iout(e)] + &Scalar::one();
                }
                if edge.src == v {
                    row[iin(e)] = &row[iin(e)] - &Scalar::one();
                }
            }
            rows.push(row);
            rhs.push(Scalar::zero());
        }

        let sys = Mat::from_rows(rows, width);
        let Some(solution) = sys.solve(&rhs) else {
            return Ok(AffRel::empty(2 * m, 2 * n));
        };
        let kernel = sys.nullspace();

        let mut proj_cols = Vec::with_capacity(2 * (m + n));
        for (x, &node) in self.inputs.iter().enumerate() {
            proj_cols.push(phi(node));
            proj_cols.push(ix(x));
        }
        for (y, &node) in self.outputs.iter().enumerate() {
            proj_cols.push(phi(node));
            proj_cols.push(iy(y));
        }
        let project = |v: &[Scalar]| proj_cols.iter().map(|&c| v[c].clone()).collect::<Vec<_>>();
        let offset = project(&solution);
        let span: Vec<Vec<Scalar>> = (0..kernel.rows())
            .map(|r| project(kernel.row(r)))
            .collect();
        AffRel::translate(offset, LinRel::from_span(2 * m, 2 * n, span)?)
    }
}

/// Assignment of a boundary relation (one potential/current pair per
/// side) to each edge label. Insertion enforces the shape and the
/// Lagrangian property, which black-boxing preserves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelSemantics {
    map: BTreeMap<String, AffRel>,
}

impl LabelSemantics {
    pub fn new() -> Self {
        LabelSemantics::default()
    }

    pub fn insert(&mut self, label: impl Into<String>, rel: AffRel) -> Result<(), Error> {
        if rel.dom() != 2 || rel.cod() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "label relation must be 2→ 2 coordinates, got {}→{}",
                rel.dom(),
                rel.cod()
            )));
        }
        if !is_lagrangian_affine(&rel, 1, 1)? {
            return Err(Error::InvalidRelation(
                "label relation is not Lagrangian".into(),
            ));
        }
        self.map.insert(label.into(), rel);
        Ok(())
    }

    pub fn get(&self, label: &str) -> Option<&AffRel> {
        self.map.get(label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }
}

/// Two-terminal circuit element kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementKind {
    Wire,
    Impedance,
    Resistor,
    Inductor,
    Capacitor,
    VoltageSource,
    CurrentSource,
}

impl ElementKind {
    pub fn token(self) -> &'static str {
        match self {
            ElementKind::Wire => "wire",
            ElementKind::Impedance => "Z",
            ElementKind::Resistor => "R",
            ElementKind::Inductor => "L",
            ElementKind::Capacitor => "C",
            ElementKind::VoltageSource => "V",
            ElementKind::CurrentSource => "I",
        }
    }

    pub fn parse_token(tok: &str) -> Result<Self, Error> {
        Ok(match tok {
            "wire" => ElementKind::Wire,
            "Z" => ElementKind::Impedance,
            "R" => ElementKind::Resistor,
            "L" => ElementKind::Inductor,
            "C" => ElementKind::Capacitor,
            "V" => ElementKind::VoltageSource,
            "I" => ElementKind::CurrentSource,
            _ => return Err(Error::Netlist(format!("unknown element kind {tok:?}"))),
        })
    }

    pub fn takes_value(self) -> bool {
        !matches!(self, ElementKind::Wire)
    }
}

/// Boundary relation of one circuit element, on coordinates
/// (φ_in, I_in, φ_out, I_out).
pub fn element_relation(kind: ElementKind, value: Option<&Scalar>) -> Result<AffRel, Error> {
    let value = match (kind.takes_value(), value) {
        (true, Some(v)) => Some(v),
        (true, None) => {
            return Err(Error::Netlist(format!(
                "element kind {} requires a value",
                kind.token()
            )))
        }
        (false, None) => None,
        (false, Some(_)) => {
            return Err(Error::Netlist(format!(
                "element kind {} does not take a value",
                kind.token()
            )))
        }
    };
    let one = Scalar::one;
    let zero = Scalar::zero;
    let rel = match kind {
        ElementKind::Wire => AffRel::from_linear(LinRel::identity(2)),
        // Potential drops by Z·I across the element; current passes through.
        ElementKind::Impedance | ElementKind::Resistor | ElementKind::Inductor => {
            let z = match kind {
                ElementKind::Inductor => &Scalar::var() * value.unwrap(),
                _ => value.unwrap().clone(),
            };
            AffRel::from_constraints(
                2,
                2,
                vec![
                    vec![-&one(), -&z, one(), zero()],
                    vec![zero(), one(), zero(), -&one()],
                ],
                vec![zero(), zero()],
            )?
        }
        // sC·(φ_out − φ_in) = I.
        ElementKind::Capacitor => {
            let sc = &Scalar::var() * value.unwrap();
            AffRel::from_constraints(
                2,
                2,
                vec![
                    vec![-&sc, -&one(), sc.clone(), zero()],
                    vec![zero(), one(), zero(), -&one()],
                ],
                vec![zero(), zero()],
            )?
        }
        // Potential rises by V; current passes through.
        ElementKind::VoltageSource => AffRel::from_constraints(
            2,
            2,
            vec![
                vec![-&one(), zero(), one(), zero()],
                vec![zero(), one(), zero(), -&one()],
            ],
            vec![value.unwrap().clone(), zero()],
        )?,
        // Both terminal currents pinned to the source value.
        ElementKind::CurrentSource => AffRel::from_constraints(
            2,
            2,
            vec![
                vec![zero(), one(), zero(), zero()],
                vec![zero(), zero(), zero(), one()],
            ],
            vec![value.unwrap().clone(), value.unwrap().clone()],
        )?,
    };
    Ok(rel)
}

/// Canonical label text for an element: the kind token, then the value in
/// canonical scalar form.
pub fn element_label(kind: ElementKind, value: Option<&Scalar>) -> String {
    match value {
        None => kind.token().to_string(),
        Some(v) => format!("{} {v}", kind.token()),
    }
}

/// Inverse of `element_label`.
pub fn parse_element_label(label: &str) -> Result<(ElementKind, Option<Scalar>), Error> {
    let (tok, rest) = match label.split_once(' ') {
        Some((tok, rest)) => (tok, Some(rest)),
        None => (label, None),
    };
    let kind = ElementKind::parse_token(tok)?;
    let value = match rest {
        None => None,
        Some(text) => Some(text.parse::<Scalar>()?),
    };
    if kind.takes_value() != value.is_some() {
        return Err(Error::Netlist(format!("label {label:?} has a bad value part")));
    }
    Ok((kind, value))
}

/// Variable names for the boundary coordinates of a black-boxed
/// circuit: an interleaved potential/current pair per terminal, inputs
/// first.
pub fn boundary_names(inputs: usize, outputs: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(2 * (inputs + outputs));
    for x in 0..inputs {
        names.push(format!("phi_in[{x}]"));
        names.push(format!("I_in[{x}]"));
    }
    for y in 0..outputs {
        names.push(format!("phi_out[{y}]"));
        names.push(format!("I_out[{y}]"));
    }
    names
}

/// A small pool of element labels mixing every kind, for randomized
/// suites.
pub fn element_label_pool() -> Vec<String> {
    [
        "wire", "wire", "R 2", "R 1/2", "L 3", "C 1/3", "Z s", "Z (s + 1)/(s)", "Z 0", "V 1",
        "V 5", "I 2",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Random open circuit with the given boundary arities; edges draw
/// labels from the pool. Deterministic for a fixed generator state.
pub fn random_circuit<R: rand::Rng>(
    rng: &mut R,
    dom: usize,
    cod: usize,
    max_nodes: usize,
    max_edges: usize,
    labels: &[String],
) -> Circuit {
    let min_nodes = usize::from(dom + cod > 0);
    let nodes = rng.gen_range(min_nodes..=max_nodes.max(min_nodes));
    let n_edges = if nodes == 0 || labels.is_empty() {
        0
    } else {
        rng.gen_range(0..=max_edges)
    };
    let edges = (0..n_edges)
        .map(|_| Edge {
            src: rng.gen_range(0..nodes),
            tgt: rng.gen_range(0..nodes),
            label: labels[rng.gen_range(0..labels.len())].clone(),
        })
        .collect();
    let inputs = (0..dom).map(|_| rng.gen_range(0..nodes)).collect();
    let outputs = (0..cod).map(|_| rng.gen_range(0..nodes)).collect();
    Circuit::new(nodes, edges, inputs, outputs).expect("random circuit is in range")
}

/// Semantics map covering every element label appearing in the circuit.
pub fn ee_semantics(circuit: &Circuit) -> Result<LabelSemantics, Error> {
    let mut sem = LabelSemantics::new();
    for edge in circuit.edges() {
        if sem.get(&edge.label).is_some() {
            continue;
        }
        let (kind, value) = parse_element_label(&edge.label)?;
        sem.insert(edge.label.clone(), element_relation(kind, value.as_ref())?)?;
    }
    Ok(sem)
}
