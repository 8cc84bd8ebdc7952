//! Term file format: JSON with an `op` tag per node. Scalar values
//! travel as strings in canonical form.

use serde::{Deserialize, Serialize};

use super::Term;
use crate::error::Error;
use crate::kfield::Scalar;

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
enum TermJson {
    Gen {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<String>,
    },
    Id {
        n: usize,
    },
    Sym {
        m: usize,
        n: usize,
    },
    Seq {
        first: Box<TermJson>,
        then: Box<TermJson>,
    },
    Par {
        left: Box<TermJson>,
        right: Box<TermJson>,
    },
}

fn from_json(node: TermJson) -> Result<Term, Error> {
    Ok(match node {
        TermJson::Gen { name, value } => {
            let value = match value {
                None => None,
                Some(text) => Some(text.parse::<Scalar>().map_err(|e| {
                    Error::TermType(format!("bad value {text:?} for generator {name}: {e}"))
                })?),
            };
            Term::Gen { name, value }
        }
        TermJson::Id { n } => Term::Id(n),
        TermJson::Sym { m, n } => Term::Sym(m, n),
        TermJson::Seq { first, then } => Term::seq(from_json(*first)?, from_json(*then)?),
        TermJson::Par { left, right } => Term::par(from_json(*left)?, from_json(*right)?),
    })
}

fn to_json(term: &Term) -> TermJson {
    match term {
        Term::Gen { name, value } => TermJson::Gen {
            name: name.clone(),
            value: value.as_ref().map(|v| v.to_string()),
        },
        Term::Id(n) => TermJson::Id { n: *n },
        Term::Sym(m, n) => TermJson::Sym { m: *m, n: *n },
        Term::Seq(a, b) => TermJson::Seq {
            first: Box::new(to_json(a)),
            then: Box::new(to_json(b)),
        },
        Term::Par(a, b) => TermJson::Par {
            left: Box::new(to_json(a)),
            right: Box::new(to_json(b)),
        },
    }
}

/// Parse a term file. Does not typecheck; pair with `typecheck` against
/// the intended signature.
pub fn parse_term(text: &str) -> Result<Term, Error> {
    let node: TermJson = serde_json::from_str(text)
        .map_err(|e| Error::TermType(format!("invalid term JSON: {e}")))?;
    from_json(node)
}

/// Render a term to its file form, values in canonical scalar text.
pub fn term_text(term: &Term) -> String {
    let mut text = serde_json::to_string_pretty(&to_json(term)).expect("term serialization");
    text.push('\n');
    text
}
