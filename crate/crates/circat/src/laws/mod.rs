//! Equational law suites, checked by evaluating term pairs in a chosen
//! structure: the merge/duplicate and add/split relation structures and
//! the corelation structure satisfy every law of an extraspecial
//! commutative Frobenius monoid; cospans satisfy all but the extra law;
//! and the two mixed monoid/comonoid relation structures satisfy the
//! bicommutative bimonoid laws.

use crate::error::Error;
use crate::freeprop::{
    evaluate, CorelationAlgebra, CospanAlgebra, LinRelAlgebra, PropAlgebra, Signature, Term,
};
use crate::kfield::Scalar;
use crate::linrel::LinRel;

/// One equation: two terms over {mu, iota, delta, epsilon} that must
/// evaluate equally.
pub struct Law {
    pub name: &'static str,
    pub lhs: Term,
    pub rhs: Term,
}

fn law(name: &'static str, lhs: Term, rhs: Term) -> Law {
    Law { name, lhs, rhs }
}

fn mu() -> Term {
    Term::gen("mu")
}
fn iota() -> Term {
    Term::gen("iota")
}
fn delta() -> Term {
    Term::gen("delta")
}
fn epsilon() -> Term {
    Term::gen("epsilon")
}
fn id1() -> Term {
    Term::Id(1)
}

/// The extraspecial commutative Frobenius monoid equations.
pub fn frobenius_laws() -> Vec<Law> {
    vec![
        law(
            "associativity",
            Term::seq(Term::par(mu(), id1()), mu()),
            Term::seq(Term::par(id1(), mu()), mu()),
        ),
        law(
            "left unit",
            Term::seq(Term::par(iota(), id1()), mu()),
            id1(),
        ),
        law(
            "right unit",
            Term::seq(Term::par(id1(), iota()), mu()),
            id1(),
        ),
        law("commutativity", Term::seq(Term::Sym(1, 1), mu()), mu()),
        law(
            "coassociativity",
            Term::seq(delta(), Term::par(delta(), id1())),
            Term::seq(delta(), Term::par(id1(), delta())),
        ),
        law(
            "left counit",
            Term::seq(delta(), Term::par(epsilon(), id1())),
            id1(),
        ),
        law(
            "right counit",
            Term::seq(delta(), Term::par(id1(), epsilon())),
            id1(),
        ),
        law(
            "cocommutativity",
            Term::seq(delta(), Term::Sym(1, 1)),
            delta(),
        ),
        law(
            "frobenius left",
            Term::seq(Term::par(delta(), id1()), Term::par(id1(), mu())),
            Term::seq(mu(), delta()),
        ),
        law(
            "frobenius right",
            Term::seq(Term::par(id1(), delta()), Term::par(mu(), id1())),
            Term::seq(mu(), delta()),
        ),
        law("special", Term::seq(delta(), mu()), id1()),
        law("extra", Term::seq(iota(), epsilon()), Term::Id(0)),
    ]
}

/// The bicommutative bimonoid equations (monoid and comonoid
/// interaction laws; commutativity laws are covered above).
pub fn bimonoid_laws() -> Vec<Law> {
    vec![
        law(
            "multiplication then comultiplication",
            Term::seq(mu(), delta()),
            Term::seq(
                Term::par(delta(), delta()),
                Term::seq(
                    Term::par(id1(), Term::par(Term::Sym(1, 1), id1())),
                    Term::par(mu(), mu()),
                ),
            ),
        ),
        law(
            "multiplication then counit",
            Term::seq(mu(), epsilon()),
            Term::par(epsilon(), epsilon()),
        ),
        law(
            "unit then comultiplication",
            Term::seq(iota(), delta()),
            Term::par(iota(), iota()),
        ),
        law(
            "unit then counit",
            Term::seq(iota(), epsilon()),
            Term::Id(0),
        ),
    ]
}

/// Assignment of the four junction generator names to morphisms of a
/// carrier, overriding a base algebra.
pub struct JunctionStructure<M> {
    pub mu: M,
    pub iota: M,
    pub delta: M,
    pub epsilon: M,
}

struct StructuredAlgebra<'a, A: PropAlgebra> {
    base: &'a A,
    structure: &'a JunctionStructure<A::M>,
}

impl<A: PropAlgebra> PropAlgebra for StructuredAlgebra<'_, A> {
    type M = A::M;

    fn wires_per_object(&self) -> usize {
        self.base.wires_per_object()
    }

    fn generator(&self, name: &str, value: Option<&Scalar>) -> Result<A::M, Error> {
        match name {
            "mu" => Ok(self.structure.mu.clone()),
            "iota" => Ok(self.structure.iota.clone()),
            "delta" => Ok(self.structure.delta.clone()),
            "epsilon" => Ok(self.structure.epsilon.clone()),
            _ => self.base.generator(name, value),
        }
    }

    fn identity(&self, wires: usize) -> A::M {
        self.base.identity(wires)
    }

    fn braiding(&self, m: usize, n: usize) -> A::M {
        self.base.braiding(m, n)
    }

    fn sequential(&self, f: &A::M, g: &A::M) -> Result<A::M, Error> {
        self.base.sequential(f, g)
    }

    fn parallel(&self, f: &A::M, g: &A::M) -> A::M {
        self.base.parallel(f, g)
    }
}

fn linrel_structure(names: [&str; 4]) -> JunctionStructure<LinRel> {
    let gen = |name| LinRel::generator(name, None).expect("structure generator");
    JunctionStructure {
        mu: gen(names[0]),
        iota: gen(names[1]),
        delta: gen(names[2]),
        epsilon: gen(names[3]),
    }
}

/// The potential-style relation structure: merge potentials (all equal),
/// duplicate forward.
pub fn duplicative_structure() -> JunctionStructure<LinRel> {
    linrel_structure(["codup", "codel", "dup", "del"])
}

/// The current-style relation structure: add forward, split backward.
pub fn additive_structure() -> JunctionStructure<LinRel> {
    linrel_structure(["add", "zero", "coadd", "cozero"])
}

/// Additive monoid with duplicative comonoid: a bimonoid, not Frobenius.
pub fn additive_duplicative_bimonoid() -> JunctionStructure<LinRel> {
    linrel_structure(["add", "zero", "dup", "del"])
}

/// Duplicative monoid with additive comonoid: the mirror bimonoid.
pub fn duplicative_additive_bimonoid() -> JunctionStructure<LinRel> {
    linrel_structure(["codup", "codel", "coadd", "cozero"])
}

/// Result of checking one law in one structure.
pub struct LawReport {
    pub structure: &'static str,
    pub law: &'static str,
    pub holds: bool,
    pub expected: bool,
}

impl LawReport {
    pub fn as_expected(&self) -> bool {
        self.holds == self.expected
    }
}

fn check_laws<A: PropAlgebra>(
    alg: &A,
    structure: &'static str,
    laws: &[Law],
    expected: impl Fn(&str) -> bool,
    out: &mut Vec<LawReport>,
) -> Result<(), Error>
where
    A::M: PartialEq,
{
    let sig = Signature::circuit_elements();
    for law in laws {
        let lhs = evaluate(alg, &sig, &law.lhs)?;
        let rhs = evaluate(alg, &sig, &law.rhs)?;
        out.push(LawReport {
            structure,
            law: law.name,
            holds: lhs == rhs,
            expected: expected(law.name),
        });
    }
    Ok(())
}

/// Every law suite in one run: the Frobenius equations in the two
/// relation structures, in cospans (where the extra law is expected to
/// fail), and in corelations; then the bimonoid equations in the two
/// mixed relation structures.
pub fn law_suite() -> Result<Vec<LawReport>, Error> {
    let mut out = Vec::new();
    let frob = frobenius_laws();
    let bi = bimonoid_laws();
    let always = |_: &str| true;

    let base = LinRelAlgebra;
    for (name, structure) in [
        ("relations/duplicative", duplicative_structure()),
        ("relations/additive", additive_structure()),
    ] {
        let alg = StructuredAlgebra {
            base: &base,
            structure: &structure,
        };
        check_laws(&alg, name, &frob, always, &mut out)?;
    }
    check_laws(
        &CospanAlgebra,
        "cospans",
        &frob,
        |law| law != "extra",
        &mut out,
    )?;
    check_laws(&CorelationAlgebra, "corelations", &frob, always, &mut out)?;
    for (name, structure) in [
        ("relations/additive-duplicative", additive_duplicative_bimonoid()),
        ("relations/duplicative-additive", duplicative_additive_bimonoid()),
    ] {
        let alg = StructuredAlgebra {
            base: &base,
            structure: &structure,
        };
        check_laws(&alg, name, &bi, always, &mut out)?;
    }
    Ok(out)
}
