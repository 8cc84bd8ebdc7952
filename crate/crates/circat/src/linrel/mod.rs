//! Linear relations over the scalar field, forming a prop: objects are
//! naturals, a morphism m → n is a linear subspace of k^m ⊕ k^n. Morphisms
//! are kept in a canonical form (reduced row echelon basis), so structural
//! equality decides semantic equality.

mod mat;

use std::fmt;

use num::Signed;

pub(crate) use mat::Mat;

use crate::error::Error;
use crate::kfield::Scalar;

/// A linear relation m → n: a subspace of k^(m+n), domain coordinates
/// first. Stored as a reduced row echelon basis, which is unique per
/// subspace, so `==` is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRel {
    dom: usize,
    cod: usize,
    basis: Mat,
}

impl LinRel {
    /// Relation spanned by the given vectors of k^(dom+cod).
    pub fn from_span(dom: usize, cod: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let width = dom + cod;
        for v in &vectors {
            if v.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "span vector has length {}, expected {}",
                    v.len(),
                    width
                )));
            }
        }
        let mut basis = Mat::from_rows(vectors, width);
        basis.rref();
        Ok(LinRel { dom, cod, basis })
    }

    /// Relation cut out by the given constraint rows: the set of
    /// v ∈ k^(dom+cod) with row · v = 0 for every row. An empty list yields
    /// the full space.
    pub fn from_constraints(dom: usize, cod: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let width = dom + cod;
        for r in &rows {
            if r.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "constraint row has length {}, expected {}",
                    r.len(),
                    width
                )));
            }
        }
        let basis = Mat::from_rows(rows, width).nullspace();
        Ok(LinRel { dom, cod, basis })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis rows (reduced row echelon form).
    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.clone().into_row_vecs()
    }

    /// Canonical constraint rows: an RREF basis of the annihilator, i.e.
    /// every row r satisfies r · v = 0 exactly for the v in the relation.
    pub fn constraint_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.nullspace().into_row_vecs()
    }

    /// Membership test: reduce v against the basis and check the remainder.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.dom + self.cod {
            return false;
        }
        reduce_against(&self.basis, v).iter().all(Scalar::is_zero)
    }

    /// Canonical representative of v modulo the subspace: the unique
    /// vector in v + L with zeros at all pivot coordinates of the basis.
    pub fn reduce_mod(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dom + self.cod, "vector length");
        reduce_against(&self.basis, v)
    }

    /// Identity relation on k^n.
    pub fn identity(n: usize) -> Self {
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![Scalar::zero(); 2 * n];
            v[i] = Scalar::one();
            v[n + i] = Scalar::one();
            rows.push(v);
        }
        LinRel::from_span(n, n, rows).expect("identity construction")
    }

    /// Coordinate swap m+n → n+m: (u, v) relates to (v, u).
    pub fn braiding(m: usize, n: usize) -> Self {
        let total = m + n;
        let mut rows = Vec::with_capacity(total);
        for j in 0..total {
            let target = if j < m { n + j } else { j - m };
            let mut v = vec![Scalar::zero(); 2 * total];
            v[j] = Scalar::one();
            v[total + target] = Scalar::one();
            rows.push(v);
        }
        LinRel::from_span(total, total, rows).expect("braiding construction")
    }

    /// Relational composite: self : a → b, then other : b → c. Pairs (u, w)
    /// such that some middle v satisfies (u, v) ∈ self and (v, w) ∈ other.
    pub fn compose(&self, other: &LinRel) -> Result<LinRel, Error> {
        if self.cod != other.dom {
            return Err(Error::ArityMismatch(format!(
                "compose: left has codomain {}, right has domain {}",
                self.cod, other.dom
            )));
        }
        let mid = self.cod;
        let dl = self.dim();
        let dm = other.dim();
        // Match middle coordinates: kernel vectors (λ, μ) of this matrix
        // satisfy Σ λ_i self_i |mid = Σ μ_j other_j |mid.
        let mut match_mat = Mat::zero(mid, dl + dm);
        for v in 0..mid {
            for i in 0..dl {
                match_mat.set(v, i, self.basis.at(i, self.dom + v).clone());
            }
            for j in 0..dm {
                match_mat.set(v, dl + j, -other.basis.at(j, v));
            }
        }
        let pairs = match_mat.nullspace();
        let mut rows = Vec::with_capacity(pairs.rows());
        for p in 0..pairs.rows() {
            let mut row = vec![Scalar::zero(); self.dom + other.cod];
            for i in 0..dl {
                let lambda = pairs.at(p, i);
                if lambda.is_zero() {
                    continue;
                }
                for u in 0..self.dom {
                    row[u] = &row[u] + &(lambda * self.basis.at(i, u));
                }
            }
            for j in 0..dm {
                let mu = pairs.at(p, dl + j);
                if mu.is_zero() {
                    continue;
                }
                for w in 0..other.cod {
                    row[self.dom + w] =
                        &row[self.dom + w] + &(mu * other.basis.at(j, other.dom + w));
                }
            }
            rows.push(row);
        }
        LinRel::from_span(self.dom, other.cod, rows)
    }

    /// Direct sum, with coordinates reordered to domain-then-codomain.
    pub fn tensor(&self, other: &LinRel) -> LinRel {
        let dom = self.dom + other.dom;
        let cod = self.cod + other.cod;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for i in 0..self.dim() {
            let mut v = vec![Scalar::zero(); dom + cod];
            for u in 0..self.dom {
                v[u] = self.basis.at(i, u).clone();
            }
            for w in 0..self.cod {
                v[dom + w] = self.basis.at(i, self.dom + w).clone();
            }
            rows.push(v);
        }
        for j in 0..other.dim() {
            let mut v = vec![Scalar::zero(); dom + cod];
            for u in 0..other.dom {
                v[self.dom + u] = other.basis.at(j, u).clone();
            }
            for w in 0..other.cod {
                v[dom + self.cod + w] = other.basis.at(j, other.dom + w).clone();
            }
            rows.push(v);
        }
        LinRel::from_span(dom, cod, rows).expect("tensor construction")
    }

    /// Opposite relation: (v, u) for every (u, v). Involutive.
    pub fn dagger(&self) -> LinRel {
        let mut rows = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let mut v = Vec::with_capacity(self.dom + self.cod);
            for w in 0..self.cod {
                v.push(self.basis.at(i, self.dom + w).clone());
            }
            for u in 0..self.dom {
                v.push(self.basis.at(i, u).clone());
            }
            rows.push(v);
        }
        LinRel::from_span(self.cod, self.dom, rows).expect("dagger construction")
    }

    /// Named generator relations. `scalar` needs a parameter; the rest
    /// reject one.
    pub fn generator(name: &str, param: Option<&Scalar>) -> Result<LinRel, Error> {
        let one = Scalar::one;
        let zero = Scalar::zero;
        if name == "scalar" {
            let c = param.ok_or_else(|| {
                Error::TermType("generator scalar requires a value".into())
            })?;
            return LinRel::from_span(1, 1, vec![vec![one(), c.clone()]]);
        }
        if param.is_some() {
            return Err(Error::TermType(format!(
                "generator {name} does not take a value"
            )));
        }
        let (dom, cod, span): (usize, usize, Vec<Vec<Scalar>>) = match name {
            "dup" => (1, 2, vec![vec![one(), one(), one()]]),
            "del" => (1, 0, vec![vec![one()]]),
            "codup" => (2, 1, vec![vec![one(), one(), one()]]),
            "codel" => (0, 1, vec![vec![one()]]),
            "add" => (
                2,
                1,
                vec![vec![one(), zero(), one()], vec![zero(), one(), one()]],
            ),
            "zero" => (0, 1, vec![]),
            "coadd" => (
                1,
                2,
                vec![vec![one(), one(), zero()], vec![one(), zero(), one()]],
            ),
            "cozero" => (1, 0, vec![]),
            "cup" => (2, 0, vec![vec![one(), one()]]),
            "cap" => (0, 2, vec![vec![one(), one()]]),
            _ => return Err(Error::UnknownGenerator(name.to_string())),
        };
        LinRel::from_span(dom, cod, span)
    }

    /// Constraint text, one row per line, variables named x1..xK.
    pub fn to_lines(&self) -> Vec<String> {
        let names: Vec<String> = (1..=self.dom + self.cod).map(|i| format!("x{i}")).collect();
        self.constraint_rows()
            .iter()
            .map(|row| render_constraint(row, &names, &Scalar::zero()))
            .collect()
    }
}

impl fmt::Display for LinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_lines().join("\n"))
    }
}

/// Remainder of v after subtracting its projection onto the RREF basis:
/// for each basis row, cancel v's entry at that row's pivot column.
pub(crate) fn reduce_against(basis: &Mat, v: &[Scalar]) -> Vec<Scalar> {
    let mut rem = v.to_vec();
    for i in 0..basis.rows() {
        let pivot = (0..basis.cols())
            .find(|&c| !basis.at(i, c).is_zero())
            .expect("basis rows are nonzero");
        let f = rem[pivot].clone();
        if f.is_zero() {
            continue;
        }
        for (c, r) in rem.iter_mut().enumerate() {
            *r = &*r - &(&f * basis.at(i, c));
        }
    }
    rem
}

fn scalar_is_negative(c: &Scalar) -> bool {
    // The denominator is kept monic, so the numerator carries the sign.
    c.num().leading().is_some_and(|l| l.is_negative())
}

/// Render one linear constraint `Σ cᵢ · nameᵢ = rhs` as text, folding
/// coefficient signs into the separators.
pub(crate) fn render_constraint(coeffs: &[Scalar], names: &[String], rhs: &Scalar) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = scalar_is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(name);
        } else {
            let t = mag.to_string();
            // A quotient prints as (num)/(den), already tightly bound; a
            // bare multi-term polynomial needs wrapping before `*name`.
            if mag.den().is_one() && t.contains(' ') {
                out.push('(');
                out.push_str(&t);
                out.push(')');
            } else {
                out.push_str(&t);
            }
            out.push('*');
            out.push_str(name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = ");
    out.push_str(&rhs.to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kfield::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn span(dom: usize, cod: usize, rows: &[&[i64]]) -> LinRel {
        LinRel::from_span(
            dom,
            cod,
            rows.iter().map(|r| r.iter().map(|&n| s(n)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_is_the_diagonal() {
        assert_eq!(LinRel::identity(1), span(1, 1, &[&[1, 1]]));
        assert_eq!(LinRel::identity(1), LinRel::generator("scalar", Some(&s(1))).unwrap());
    }

    #[test]
    fn constraints_and_span_agree() {
        // Potentials identified, currents summed: the relation on
        // (φ1, I1, φ2, I2) → (φ3, I3) with φ1 = φ2 = φ3 and I1 + I2 = I3.
        let by_constraints = LinRel::from_constraints(
            4,
            2,
            vec![
                vec![s(1), s(0), s(-1), s(0), s(0), s(0)],
                vec![s(1), s(0), s(0), s(0), s(-1), s(0)],
                vec![s(0), s(1), s(0), s(1), s(0), s(-1)],
            ],
        )
        .unwrap();
        let by_span = span(
            4,
            2,
            &[
                &[1, 0, 1, 0, 1, 0],
                &[0, 1, 0, 0, 0, 1],
                &[0, 0, 0, 1, 0, 1],
            ],
        );
        assert_eq!(by_constraints, by_span);
        assert_eq!(by_constraints.dim(), 3);
    }

    #[test]
    fn empty_constraint_list_gives_full_space() {
        let full = LinRel::from_constraints(1, 1, vec![]).unwrap();
        assert_eq!(full.dim(), 2);
    }

    #[test]
    fn duplicate_then_merge_is_identity() {
        // The special law: comultiplication followed by multiplication.
        let dup = LinRel::generator("dup", None).unwrap();
        let codup = LinRel::generator("codup", None).unwrap();
        assert_eq!(dup.compose(&codup).unwrap(), LinRel::identity(1));
    }

    #[test]
    fn scalars_compose_by_multiplication() {
        let c: Scalar = "s".parse().unwrap();
        let d: Scalar = "(1)/(s)".parse().unwrap();
        let sc = LinRel::generator("scalar", Some(&c)).unwrap();
        let sd = LinRel::generator("scalar", Some(&d)).unwrap();
        assert_eq!(sc.compose(&sd).unwrap(), LinRel::identity(1));
    }

    #[test]
    fn zigzag_straightens_to_identity() {
        let id1 = LinRel::identity(1);
        let cup = LinRel::generator("cup", None).unwrap();
        let cap = LinRel::generator("cap", None).unwrap();
        let bent = id1.tensor(&cap).compose(&cup.tensor(&id1)).unwrap();
        assert_eq!(bent, id1);
    }

    #[test]
    fn dagger_swaps_addition_and_coaddition() {
        let add = LinRel::generator("add", None).unwrap();
        let coadd = LinRel::generator("coadd", None).unwrap();
        assert_eq!(add.dagger(), coadd);
        assert_eq!(add.dagger().dagger(), add);
    }

    #[test]
    fn tensor_adds_dimensions() {
        let id2 = LinRel::identity(1).tensor(&LinRel::identity(1));
        assert_eq!(id2, LinRel::identity(2));
        let dup = LinRel::generator("dup", None).unwrap();
        let del = LinRel::generator("del", None).unwrap();
        let t = dup.tensor(&del);
        assert_eq!((t.dom(), t.cod(), t.dim()), (2, 2, 2));
    }

    #[test]
    fn unit_relation_is_tensor_identity() {
        let unit = span(0, 0, &[]);
        let add = LinRel::generator("add", None).unwrap();
        assert_eq!(add.tensor(&unit), add);
        assert_eq!(unit.tensor(&add), add);
    }

    #[test]
    fn braiding_swaps_blocks() {
        assert_eq!(
            LinRel::braiding(1, 1),
            span(2, 2, &[&[1, 0, 0, 1], &[0, 1, 1, 0]])
        );
        let b = LinRel::braiding(2, 1);
        assert_eq!(b.compose(&LinRel::braiding(1, 2)).unwrap(), LinRel::identity(3));
    }

    #[test]
    fn composition_respects_identities() {
        let add = LinRel::generator("add", None).unwrap();
        assert_eq!(LinRel::identity(2).compose(&add).unwrap(), add);
        assert_eq!(add.compose(&LinRel::identity(1)).unwrap(), add);
    }

    #[test]
    fn membership_follows_the_span() {
        let add = LinRel::generator("add", None).unwrap();
        assert!(add.contains(&[s(2), s(3), s(5)]));
        assert!(!add.contains(&[s(2), s(3), s(6)]));
    }

    #[test]
    fn constraint_text_uses_positional_variables() {
        let dup = LinRel::generator("dup", None).unwrap();
        assert_eq!(dup.to_string(), "x1 - x3 = 0\nx2 - x3 = 0");
        let add = LinRel::generator("add", None).unwrap();
        assert_eq!(add.to_string(), "x1 + x2 - x3 = 0");
        let zero = LinRel::generator("zero", None).unwrap();
        assert_eq!(zero.to_string(), "x1 = 0");
    }

    #[test]
    fn rational_function_coefficients_render_with_parens() {
        let c: Scalar = "s + 1".parse().unwrap();
        let rel = LinRel::generator("scalar", Some(&c)).unwrap();
        // Graph of x2 = (s+1)·x1, canonicalized with pivot 1 on x1.
        assert_eq!(rel.to_string(), "x1 - (1)/(s + 1)*x2 = 0");
    }

    #[test]
    fn generator_errors() {
        assert!(matches!(
            LinRel::generator("frobnicate", None),
            Err(Error::UnknownGenerator(_))
        ));
        assert!(LinRel::generator("scalar", None).is_err());
        assert!(LinRel::generator("dup", Some(&s(2))).is_err());
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let dup = LinRel::generator("dup", None).unwrap();
        assert!(matches!(
            dup.compose(&dup),
            Err(Error::ArityMismatch(_))
        ));
    }

    #[test]
    fn span_length_mismatch_is_rejected() {
        assert!(LinRel::from_span(1, 1, vec![vec![s(1)]]).is_err());
    }
}
