//! Symplectic structure on spaces of (potential, current) pairs, the
//! Lagrangian property for linear and affine relations, and the algebra of
//! affine relations used to model components with sources.
//!
//! Coordinates come in interleaved pairs (φ0, I0, φ1, I1, ...), domain
//! pairs before codomain pairs. Lagrangian checks use the twisted form
//! that negates the symplectic form on the domain block.

use std::fmt;

use crate::error::Error;
use crate::kfield::Scalar;
use crate::linrel::{render_constraint, LinRel};

/// Symplectic form on k^(2n) read as n pairs: Σⱼ (φⱼ·I′ⱼ − φ′ⱼ·Iⱼ).
pub fn omega(pairs: usize, u: &[Scalar], v: &[Scalar]) -> Result<Scalar, Error> {
    if u.len() != 2 * pairs || v.len() != 2 * pairs {
        return Err(Error::DimensionMismatch(format!(
            "omega over {pairs} pairs needs vectors of length {}, got {} and {}",
            2 * pairs,
            u.len(),
            v.len()
        )));
    }
    let mut total = Scalar::zero();
    for j in 0..pairs {
        let term = &(&u[2 * j] * &v[2 * j + 1]) - &(&v[2 * j] * &u[2 * j + 1]);
        total = &total + &term;
    }
    Ok(total)
}

/// The form used for Lagrangian checks on relations: −ω on the domain
/// pairs plus ω on the codomain pairs.
pub fn twisted_form(
    dom_pairs: usize,
    cod_pairs: usize,
    u: &[Scalar],
    v: &[Scalar],
) -> Result<Scalar, Error> {
    let split = 2 * dom_pairs;
    let width = split + 2 * cod_pairs;
    if u.len() != width || v.len() != width {
        return Err(Error::DimensionMismatch(format!(
            "twisted form needs vectors of length {width}, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    let left = omega(dom_pairs, &u[..split], &v[..split])?;
    let right = omega(cod_pairs, &u[split..], &v[split..])?;
    Ok(&right - &left)
}

/// A linear relation between pair-spaces is Lagrangian when it is
/// isotropic for the twisted form and has dimension dom_pairs+cod_pairs.
/// Bilinearity lets the isotropy check run over basis rows only.
pub fn is_lagrangian_linear(
    rel: &LinRel,
    dom_pairs: usize,
    cod_pairs: usize,
) -> Result<bool, Error> {
    if rel.dom() != 2 * dom_pairs || rel.cod() != 2 * cod_pairs {
        return Err(Error::DimensionMismatch(format!(
            "relation {}→{} does not split into {dom_pairs}+{cod_pairs} pairs",
            rel.dom(),
            rel.cod()
        )));
    }
    if rel.dim() != dom_pairs + cod_pairs {
        return Ok(false);
    }
    let rows = rel.basis_rows();
    for (i, u) in rows.iter().enumerate() {
        for v in &rows[i + 1..] {
            if !twisted_form(dom_pairs, cod_pairs, u, v)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Empty, or the linear part is Lagrangian. Translation does not disturb
/// the tangent-space condition.
pub fn is_lagrangian_affine(
    rel: &AffRel,
    dom_pairs: usize,
    cod_pairs: usize,
) -> Result<bool, Error> {
    if rel.dom() != 2 * dom_pairs || rel.cod() != 2 * cod_pairs {
        return Err(Error::DimensionMismatch(format!(
            "relation {}→{} does not split into {dom_pairs}+{cod_pairs} pairs",
            rel.dom(),
            rel.cod()
        )));
    }
    match rel.linear() {
        None => Ok(true),
        Some(lin) => is_lagrangian_linear(lin, dom_pairs, cod_pairs),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Body {
    Empty,
    Translate { offset: Vec<Scalar>, linear: LinRel },
}

/// An affine relation m → n: either empty or a translate `offset + L` of a
/// linear relation. The offset is reduced to zeros at the pivot
/// coordinates of L's basis, making the representation (and `==`)
/// canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffRel {
    dom: usize,
    cod: usize,
    body: Body,
}

impl AffRel {
    pub fn empty(dom: usize, cod: usize) -> Self {
        AffRel {
            dom,
            cod,
            body: Body::Empty,
        }
    }

    pub fn from_linear(linear: LinRel) -> Self {
        let offset = vec![Scalar::zero(); linear.dom() + linear.cod()];
        AffRel {
            dom: linear.dom(),
            cod: linear.cod(),
            body: Body::Translate { offset, linear },
        }
    }

    /// The translate offset + linear, with the offset canonicalized.
    pub fn translate(offset: Vec<Scalar>, linear: LinRel) -> Result<Self, Error> {
        let width = linear.dom() + linear.cod();
        if offset.len() != width {
            return Err(Error::DimensionMismatch(format!(
                "offset has length {}, expected {}",
                offset.len(),
                width
            )));
        }
        let offset = linear.reduce_mod(&offset);
        Ok(AffRel {
            dom: linear.dom(),
            cod: linear.cod(),
            body: Body::Translate { offset, linear },
        })
    }

    /// Solution set of `rows · v = rhs`, split as dom+cod coordinates.
    /// An inconsistent system yields the empty relation.
    pub fn from_constraints(
        dom: usize,
        cod: usize,
        rows: Vec<Vec<Scalar>>,
        rhs: Vec<Scalar>,
    ) -> Result<Self, Error> {
        let width = dom + cod;
        if rhs.len() != rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} constraint rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        for r in &rows {
            if r.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "constraint row has length {}, expected {width}",
                    r.len()
                )));
            }
        }
        let mat = crate::linrel::Mat::from_rows(rows.clone(), width);
        match mat.solve(&rhs) {
            None => Ok(AffRel::empty(dom, cod)),
            Some(offset) => {
                let linear = LinRel::from_constraints(dom, cod, rows)?;
                AffRel::translate(offset, linear)
            }
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.body, Body::Empty)
    }

    /// Canonical offset, None when empty.
    pub fn offset(&self) -> Option<&[Scalar]> {
        match &self.body {
            Body::Empty => None,
            Body::Translate { offset, .. } => Some(offset),
        }
    }

    /// Linear part, None when empty.
    pub fn linear(&self) -> Option<&LinRel> {
        match &self.body {
            Body::Empty => None,
            Body::Translate { linear, .. } => Some(linear),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        match &self.body {
            Body::Empty => false,
            Body::Translate { offset, linear } => {
                if v.len() != self.dom + self.cod {
                    return false;
                }
                let diff: Vec<Scalar> = v.iter().zip(offset).map(|(a, b)| a - b).collect();
                linear.contains(&diff)
            }
        }
    }

    /// Relational composite. A middle witness pair is found by solving a
    /// linear system over the two translates; no solution means the
    /// composite is empty. With witness (u,v) ∈ self and (v,w) ∈ other the
    /// composite is (u,w) + (linear composite).
    pub fn compose(&self, other: &AffRel) -> Result<AffRel, Error> {
        if self.cod != other.dom {
            return Err(Error::ArityMismatch(format!(
                "compose: left has codomain {}, right has domain {}",
                self.cod, other.dom
            )));
        }
        let (r0, lin_l) = match &self.body {
            Body::Empty => return Ok(AffRel::empty(self.dom, other.cod)),
            Body::Translate { offset, linear } => (offset, linear),
        };
        let (s0, lin_m) = match &other.body {
            Body::Empty => return Ok(AffRel::empty(self.dom, other.cod)),
            Body::Translate { offset, linear } => (offset, linear),
        };
        let mid = self.cod;
        let dl = lin_l.dim();
        let dm = lin_m.dim();
        let lrows = lin_l.basis_rows();
        let mrows = lin_m.basis_rows();
        // Middle coordinates must agree: r0|mid + Σλℓ|mid = s0|mid + Σμm|mid.
        let mut sys = crate::linrel::Mat::zero(mid, dl + dm);
        let mut rhs = Vec::with_capacity(mid);
        for v in 0..mid {
            for (i, l) in lrows.iter().enumerate() {
                sys.set(v, i, l[self.dom + v].clone());
            }
            for (j, m) in mrows.iter().enumerate() {
                sys.set(v, dl + j, -&m[v]);
            }
            rhs.push(&s0[v] - &r0[self.dom + v]);
        }
        let Some(coeffs) = sys.solve(&rhs) else {
            return Ok(AffRel::empty(self.dom, other.cod));
        };
        let mut offset = Vec::with_capacity(self.dom + other.cod);
        for u in 0..self.dom {
            let mut x = r0[u].clone();
            for (i, l) in lrows.iter().enumerate() {
                x = &x + &(&coeffs[i] * &l[u]);
            }
            offset.push(x);
        }
        for w in 0..other.cod {
            let mut x = s0[other.dom + w].clone();
            for (j, m) in mrows.iter().enumerate() {
                x = &x + &(&coeffs[dl + j] * &m[other.dom + w]);
            }
            offset.push(x);
        }
        AffRel::translate(offset, lin_l.compose(lin_m)?)
    }

    /// Direct sum; empty absorbs.
    pub fn tensor(&self, other: &AffRel) -> AffRel {
        let dom = self.dom + other.dom;
        let cod = self.cod + other.cod;
        let (r0, lin_l) = match &self.body {
            Body::Empty => return AffRel::empty(dom, cod),
            Body::Translate { offset, linear } => (offset, linear),
        };
        let (s0, lin_m) = match &other.body {
            Body::Empty => return AffRel::empty(dom, cod),
            Body::Translate { offset, linear } => (offset, linear),
        };
        let mut offset = Vec::with_capacity(dom + cod);
        offset.extend_from_slice(&r0[..self.dom]);
        offset.extend_from_slice(&s0[..other.dom]);
        offset.extend_from_slice(&r0[self.dom..]);
        offset.extend_from_slice(&s0[other.dom..]);
        AffRel::translate(offset, lin_l.tensor(lin_m)).expect("tensor offset length")
    }

    /// Constraint text with caller-supplied variable names (one per
    /// coordinate), or the single line EMPTY.
    pub fn to_lines_named(&self, names: &[String]) -> Vec<String> {
        assert_eq!(names.len(), self.dom + self.cod, "one name per coordinate");
        match &self.body {
            Body::Empty => vec!["EMPTY".to_string()],
            Body::Translate { offset, linear } => linear
                .constraint_rows()
                .iter()
                .map(|row| {
                    let b = dot(row, offset);
                    render_constraint(row, names, &b)
                })
                .collect(),
        }
    }

    /// Constraint text with positional names x1..xK.
    pub fn to_lines(&self) -> Vec<String> {
        let names: Vec<String> = (1..=self.dom + self.cod).map(|i| format!("x{i}")).collect();
        self.to_lines_named(&names)
    }
}

impl fmt::Display for AffRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_lines().join("\n"))
    }
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (a, b) in u.iter().zip(v) {
        acc = &acc + &(a * b);
    }
    acc
}
