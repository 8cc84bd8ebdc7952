//! Terms over a monoidal signature, evaluated by structural fold into
//! any carrier that supplies generators, identities, braidings, and
//! sequential/parallel combination. Houses the element-to-circuit
//! interpretation, the wire-doubling translation into signal-flow terms,
//! and the signal-flow relation semantics.

mod rand_term;
mod termio;

use std::collections::BTreeMap;

pub use rand_term::random_term;
pub use termio::{parse_term, term_text};

use crate::circuit::{element_label, Circuit, ElementKind};
use crate::error::Error;
use crate::kfield::Scalar;
use crate::linrel::LinRel;
use crate::setcat::{Corelation, Cospan};

/// Syntax tree of a morphism in a free prop: generators, identities,
/// wire crossings, and sequential/parallel composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Gen { name: String, value: Option<Scalar> },
    Id(usize),
    Sym(usize, usize),
    Seq(Box<Term>, Box<Term>),
    Par(Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(name: impl Into<String>) -> Term {
        Term::Gen {
            name: name.into(),
            value: None,
        }
    }

    pub fn gen_with(name: impl Into<String>, value: Scalar) -> Term {
        Term::Gen {
            name: name.into(),
            value: Some(value),
        }
    }

    pub fn seq(first: Term, then: Term) -> Term {
        Term::Seq(Box::new(first), Box::new(then))
    }

    pub fn par(left: Term, right: Term) -> Term {
        Term::Par(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn atoms(&self) -> usize {
        match self {
            Term::Gen { .. } => 1,
            Term::Id(_) | Term::Sym(_, _) => 0,
            Term::Seq(a, b) | Term::Par(a, b) => a.atoms() + b.atoms(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenInfo {
    pub dom: usize,
    pub cod: usize,
    pub takes_value: bool,
}

/// Generator names with arities; scalar-indexed families are single
/// names with `takes_value`.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    map: BTreeMap<String, GenInfo>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn with(mut self, name: &str, dom: usize, cod: usize, takes_value: bool) -> Self {
        self.map.insert(
            name.to_string(),
            GenInfo {
                dom,
                cod,
                takes_value,
            },
        );
        self
    }

    pub fn get(&self, name: &str) -> Option<&GenInfo> {
        self.map.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = (&str, &GenInfo)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Junction generators plus the scalar-indexed impedance family:
    /// the term language for open circuits.
    pub fn circuit_elements() -> Self {
        Signature::new()
            .with("mu", 2, 1, false)
            .with("iota", 0, 1, false)
            .with("delta", 1, 2, false)
            .with("epsilon", 1, 0, false)
            .with("z", 1, 1, true)
    }

    /// Copying and adding generators plus scalar amplification: the term
    /// language for signal-flow diagrams.
    pub fn signal_flow() -> Self {
        Signature::new()
            .with("dup", 1, 2, false)
            .with("del", 1, 0, false)
            .with("codup", 2, 1, false)
            .with("codel", 0, 1, false)
            .with("add", 2, 1, false)
            .with("zero", 0, 1, false)
            .with("coadd", 1, 2, false)
            .with("cozero", 1, 0, false)
            .with("scalar", 1, 1, true)
    }
}

/// Domain/codomain arity of a term, or an error naming the offending
/// subterm by its path from the root.
pub fn typecheck(term: &Term, sig: &Signature) -> Result<(usize, usize), Error> {
    fn walk(term: &Term, sig: &Signature, path: &str) -> Result<(usize, usize), Error> {
        let here = |msg: String| {
            let at = if path.is_empty() { "root" } else { path };
            Error::TermType(format!("{msg} (at {at})"))
        };
        match term {
            Term::Gen { name, value } => {
                let info = sig.get(name).ok_or_else(|| {
                    let at = if path.is_empty() { "root" } else { path };
                    Error::UnknownGenerator(format!("{name} (at {at})"))
                })?;
                if info.takes_value != value.is_some() {
                    let want = if info.takes_value { "requires" } else { "does not take" };
                    return Err(here(format!("generator {name} {want} a value")));
                }
                Ok((info.dom, info.cod))
            }
            Term::Id(n) => Ok((*n, *n)),
            Term::Sym(m, n) => Ok((m + n, n + m)),
            Term::Seq(a, b) => {
                let (m, k1) = walk(a, sig, &format!("{path}.first"))?;
                let (k2, n) = walk(b, sig, &format!("{path}.then"))?;
                if k1 != k2 {
                    return Err(here(format!(
                        "sequential mismatch: first has codomain {k1}, then has domain {k2}"
                    )));
                }
                Ok((m, n))
            }
            Term::Par(a, b) => {
                let (m1, n1) = walk(a, sig, &format!("{path}.left"))?;
                let (m2, n2) = walk(b, sig, &format!("{path}.right"))?;
                Ok((m1 + m2, n1 + n2))
            }
        }
    }
    walk(term, sig, "")
}

/// A carrier for evaluating terms: a strict symmetric monoidal
/// interpretation, supplied pointwise. `wires_per_object` scales the
/// widths of `Id` and `Sym` (a syntactic wire may denote several carrier
/// wires).
pub trait PropAlgebra {
    type M: Clone;

    fn wires_per_object(&self) -> usize {
        1
    }

    fn generator(&self, name: &str, value: Option<&Scalar>) -> Result<Self::M, Error>;
    fn identity(&self, wires: usize) -> Self::M;
    fn braiding(&self, m_wires: usize, n_wires: usize) -> Self::M;
    fn sequential(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, Error>;
    fn parallel(&self, f: &Self::M, g: &Self::M) -> Self::M;
}

/// Typecheck, then fold the term through the algebra.
pub fn evaluate<A: PropAlgebra>(alg: &A, sig: &Signature, term: &Term) -> Result<A::M, Error> {
    typecheck(term, sig)?;
    fn fold<A: PropAlgebra>(alg: &A, term: &Term) -> Result<A::M, Error> {
        let w = alg.wires_per_object();
        match term {
            Term::Gen { name, value } => alg.generator(name, value.as_ref()),
            Term::Id(n) => Ok(alg.identity(n * w)),
            Term::Sym(m, n) => Ok(alg.braiding(m * w, n * w)),
            Term::Seq(a, b) => alg.sequential(&fold(alg, a)?, &fold(alg, b)?),
            Term::Par(a, b) => Ok(alg.parallel(&fold(alg, a)?, &fold(alg, b)?)),
        }
    }
    fold(alg, term)
}

/// Evaluation into linear relations; generator names are the signal-flow
/// vocabulary.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinRelAlgebra;

impl PropAlgebra for LinRelAlgebra {
    type M = LinRel;

    fn generator(&self, name: &str, value: Option<&Scalar>) -> Result<LinRel, Error> {
        LinRel::generator(name, value)
    }

    fn identity(&self, wires: usize) -> LinRel {
        LinRel::identity(wires)
    }

    fn braiding(&self, m: usize, n: usize) -> LinRel {
        LinRel::braiding(m, n)
    }

    fn sequential(&self, f: &LinRel, g: &LinRel) -> Result<LinRel, Error> {
        f.compose(g)
    }

    fn parallel(&self, f: &LinRel, g: &LinRel) -> LinRel {
        f.tensor(g)
    }
}

/// Evaluation into cospans; junction generators only.
#[derive(Clone, Copy, Debug, Default)]
pub struct CospanAlgebra;

impl PropAlgebra for CospanAlgebra {
    type M = Cospan;

    fn generator(&self, name: &str, _value: Option<&Scalar>) -> Result<Cospan, Error> {
        let cospan = match name {
            "mu" => Cospan::new(1, vec![0, 0], vec![0]),
            "iota" => Cospan::new(1, vec![], vec![0]),
            "delta" => Cospan::new(1, vec![0], vec![0, 0]),
            "epsilon" => Cospan::new(1, vec![0], vec![]),
            _ => return Err(Error::UnknownGenerator(name.to_string())),
        };
        cospan
    }

    fn identity(&self, wires: usize) -> Cospan {
        Cospan::identity(wires)
    }

    fn braiding(&self, m: usize, n: usize) -> Cospan {
        Cospan::braiding(m, n)
    }

    fn sequential(&self, f: &Cospan, g: &Cospan) -> Result<Cospan, Error> {
        f.compose(g)
    }

    fn parallel(&self, f: &Cospan, g: &Cospan) -> Cospan {
        f.tensor(g)
    }
}

/// Evaluation into corelations; junction generators only.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorelationAlgebra;

impl PropAlgebra for CorelationAlgebra {
    type M = Corelation;

    fn generator(&self, name: &str, _value: Option<&Scalar>) -> Result<Corelation, Error> {
        let corel = match name {
            "mu" => Corelation::from_labels(2, 1, &[0, 0, 0]),
            "iota" => Corelation::from_labels(0, 1, &[0]),
            "delta" => Corelation::from_labels(1, 2, &[0, 0, 0]),
            "epsilon" => Corelation::from_labels(1, 0, &[0]),
            _ => return Err(Error::UnknownGenerator(name.to_string())),
        };
        Ok(corel)
    }

    fn identity(&self, wires: usize) -> Corelation {
        Corelation::identity(wires)
    }

    fn braiding(&self, m: usize, n: usize) -> Corelation {
        Corelation::braiding(m, n)
    }

    fn sequential(&self, f: &Corelation, g: &Corelation) -> Result<Corelation, Error> {
        f.compose(g)
    }

    fn parallel(&self, f: &Corelation, g: &Corelation) -> Corelation {
        f.tensor(g)
    }
}

/// Evaluation into open circuits: junction generators become edgeless
/// one-node circuits, the impedance family becomes a single labeled
/// edge.
#[derive(Clone, Copy, Debug, Default)]
pub struct CircuitAlgebra;

impl PropAlgebra for CircuitAlgebra {
    type M = Circuit;

    fn generator(&self, name: &str, value: Option<&Scalar>) -> Result<Circuit, Error> {
        match name {
            "mu" => Circuit::new(1, vec![], vec![0, 0], vec![0]),
            "iota" => Circuit::new(1, vec![], vec![], vec![0]),
            "delta" => Circuit::new(1, vec![], vec![0], vec![0, 0]),
            "epsilon" => Circuit::new(1, vec![], vec![0], vec![]),
            "z" => {
                let v = value.ok_or_else(|| {
                    Error::TermType("generator z requires a value".to_string())
                })?;
                Ok(Circuit::two_terminal(element_label(
                    ElementKind::Impedance,
                    Some(v),
                )))
            }
            _ => Err(Error::UnknownGenerator(name.to_string())),
        }
    }

    fn identity(&self, wires: usize) -> Circuit {
        Circuit::identity(wires)
    }

    fn braiding(&self, m: usize, n: usize) -> Circuit {
        Circuit::braiding(m, n)
    }

    fn sequential(&self, f: &Circuit, g: &Circuit) -> Result<Circuit, Error> {
        f.compose(g)
    }

    fn parallel(&self, f: &Circuit, g: &Circuit) -> Circuit {
        f.tensor(g)
    }
}

/// Interpret a circuit term as an open circuit.
pub fn term_to_circuit(term: &Term) -> Result<Circuit, Error> {
    evaluate(&CircuitAlgebra, &Signature::circuit_elements(), term)
}

/// The linear relation denoted by a signal-flow term.
pub fn signal_flow_relation(term: &Term) -> Result<LinRel, Error> {
    evaluate(&LinRelAlgebra, &Signature::signal_flow(), term)
}

/// Translate a circuit term into a signal-flow term, doubling each wire
/// into a potential wire followed by a current wire. Junctions become
/// copying of potentials and adding of currents; an impedance edge adds
/// Z times the current to the potential.
pub fn to_signal_flow(term: &Term) -> Result<Term, Error> {
    typecheck(term, &Signature::circuit_elements())?;
    fn translate(term: &Term) -> Result<Term, Error> {
        let id1 = || Term::Id(1);
        let mid_swap = || Term::par(id1(), Term::par(Term::Sym(1, 1), id1()));
        Ok(match term {
            Term::Gen { name, value } => match name.as_str() {
                "mu" => Term::seq(
                    mid_swap(),
                    Term::par(Term::gen("codup"), Term::gen("add")),
                ),
                "iota" => Term::par(Term::gen("codel"), Term::gen("zero")),
                "delta" => Term::seq(
                    Term::par(Term::gen("dup"), Term::gen("coadd")),
                    mid_swap(),
                ),
                "epsilon" => Term::par(Term::gen("del"), Term::gen("cozero")),
                "z" => {
                    let v = value.clone().expect("typechecked z has a value");
                    Term::seq(
                        Term::seq(
                            Term::par(id1(), Term::gen("dup")),
                            Term::par(id1(), Term::par(Term::gen_with("scalar", v), id1())),
                        ),
                        Term::par(Term::gen("add"), id1()),
                    )
                }
                other => return Err(Error::UnknownGenerator(other.to_string())),
            },
            Term::Id(n) => Term::Id(2 * n),
            Term::Sym(m, n) => Term::Sym(2 * m, 2 * n),
            Term::Seq(a, b) => Term::seq(translate(a)?, translate(b)?),
            Term::Par(a, b) => Term::par(translate(a)?, translate(b)?),
        })
    }
    translate(term)
}
