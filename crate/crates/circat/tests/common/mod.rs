//! Shared test infrastructure: independently written reference
//! implementations (row reduction, constraint-stacking composition of
//! affine relations, reachability-closure composition of corelations)
//! and seeded random generators for relations, cospans, and corelations.
//!
//! The reference implementations deliberately avoid the library's
//! internal solvers: they work on plain `Vec<Vec<Scalar>>` data using
//! only the public scalar arithmetic, and results are handed back
//! through public constructors.

#![allow(dead_code)] // each integration-test binary uses a subset

use circat::kfield::Scalar;
use circat::linrel::LinRel;
use circat::setcat::{Corelation, Cospan};
use circat::symplag::AffRel;
use rand::Rng;

// ---------------------------------------------------------------------
// Reference linear algebra.

/// Textbook Gauss–Jordan elimination to reduced row echelon form;
/// returns the reduced matrix (zero rows dropped) and the pivot column
/// of each remaining row.
pub fn rref_oracle(mut m: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for lead in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][lead].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][lead].inv().expect("pivot is nonzero");
        for c in 0..cols {
            m[r][c] = &m[r][c] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][lead].is_zero() {
                let f = m[i][lead].clone();
                for c in 0..cols {
                    m[i][c] = &m[i][c] - &(&f * &m[r][c]);
                }
            }
        }
        pivots.push(lead);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Solve A·x = b over `cols` unknowns: one particular solution with free
/// coordinates set to zero, or None when inconsistent.
pub fn solve_oracle(a: &[Vec<Scalar>], b: &[Scalar], cols: usize) -> Option<Vec<Scalar>> {
    let augmented: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref_oracle(augmented);
    if pivots.contains(&cols) {
        return None; // a pivot in the constants column: 0 = 1
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Basis of the solution space of A·x = 0, by the free-column method.
pub fn nullspace_oracle(a: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let (reduced, pivots) = rref_oracle(a.to_vec());
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------
// Reference composition of affine relations by constraint stacking.

/// Constraint rows (and right-hand sides) cutting out a non-empty affine
/// relation, derived from its public span/offset presentation: the rows
/// are a basis of the annihilator of the linear part, each with
/// rhs = row · offset.
fn constraints_of(rel: &AffRel) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
    let linear = rel.linear().expect("non-empty");
    let offset = rel.offset().expect("non-empty");
    let width = rel.dom() + rel.cod();
    // Annihilator of the span: nullspace of the basis-as-rows matrix
    // read column-wise, i.e. solve vᵀ·basisᵀ = 0 via the oracle.
    let basis = linear.basis_rows();
    let rows = nullspace_oracle(&basis, width);
    let rhs = rows
        .iter()
        .map(|row| dot(row, offset))
        .collect();
    (rows, rhs)
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter()
        .zip(v)
        .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// Compose affine relations by stacking both constraint systems over the
/// joint coordinates (u, v, w), eliminating, and projecting onto (u, w).
/// Independent of the library's witness-translation algorithm.
pub fn aff_compose_oracle(r: &AffRel, s: &AffRel) -> AffRel {
    assert_eq!(r.cod(), s.dom(), "oracle: middle arity");
    let (m, k, p) = (r.dom(), r.cod(), s.cod());
    if r.is_empty() || s.is_empty() {
        return AffRel::empty(m, p);
    }
    let width = m + k + p;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let (r_rows, r_rhs) = constraints_of(r);
    for (row, b) in r_rows.iter().zip(r_rhs) {
        let mut padded = row.clone();
        padded.resize(width, Scalar::zero());
        rows.push(padded);
        rhs.push(b);
    }
    let (s_rows, s_rhs) = constraints_of(s);
    for (row, b) in s_rows.iter().zip(s_rhs) {
        let mut padded = vec![Scalar::zero(); m];
        padded.extend_from_slice(row);
        rows.push(padded);
        rhs.push(b);
    }
    let Some(solution) = solve_oracle(&rows, &rhs, width) else {
        return AffRel::empty(m, p);
    };
    let kernel = nullspace_oracle(&rows, width);
    let project = |v: &[Scalar]| {
        let mut out = Vec::with_capacity(m + p);
        out.extend_from_slice(&v[..m]);
        out.extend_from_slice(&v[m + k..]);
        out
    };
    let span: Vec<Vec<Scalar>> = kernel.iter().map(|v| project(v)).collect();
    AffRel::translate(
        project(&solution),
        LinRel::from_span(m, p, span).expect("projected span"),
    )
    .expect("projected relation")
}

// ---------------------------------------------------------------------
// Reference composition of corelations by reachability closure.

/// Compose corelations by building the "same block" adjacency over the
/// disjoint union of boundaries, closing it transitively (Warshall), and
/// reading off the partition restricted to the outer boundary.
pub fn corel_compose_oracle(f: &Corelation, g: &Corelation) -> Corelation {
    assert_eq!(f.cod(), g.dom(), "oracle: middle arity");
    let (m, k, p) = (f.dom(), f.cod(), g.cod());
    let total = m + k + p;
    let mut reach = vec![vec![false; total]; total];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    // f partitions points 0..m+k; g partitions points m..m+k+p.
    let f_blocks = f.blocks();
    for i in 0..m + k {
        for j in 0..m + k {
            if f_blocks[i] == f_blocks[j] {
                reach[i][j] = true;
            }
        }
    }
    let g_blocks = g.blocks();
    for i in 0..k + p {
        for j in 0..k + p {
            if g_blocks[i] == g_blocks[j] {
                reach[m + i][m + j] = true;
            }
        }
    }
    for via in 0..total {
        for i in 0..total {
            if reach[i][via] {
                for j in 0..total {
                    if reach[via][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let outer: Vec<usize> = (0..m).chain(m + k..total).collect();
    let mut labels = Vec::with_capacity(outer.len());
    let mut seen: Vec<usize> = Vec::new(); // representative outer index per block
    for &i in &outer {
        let rep = seen
            .iter()
            .position(|&r| reach[r][i])
            .unwrap_or_else(|| {
                seen.push(i);
                seen.len() - 1
            });
        labels.push(rep);
    }
    Corelation::from_labels(m, p, &labels)
}

// ---------------------------------------------------------------------
// Seeded random structures.

pub fn scalar_pool() -> Vec<Scalar> {
    ["0", "1", "-1", "2", "1/2", "3", "s", "s + 1"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect()
}

pub fn random_scalar<R: Rng>(rng: &mut R, pool: &[Scalar]) -> Scalar {
    pool[rng.gen_range(0..pool.len())].clone()
}

/// Random linear relation m → n of a random dimension.
pub fn random_linrel<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> LinRel {
    let pool = scalar_pool();
    let width = dom + cod;
    let rows = rng.gen_range(0..=width);
    let vectors = (0..rows)
        .map(|_| (0..width).map(|_| random_scalar(rng, &pool)).collect())
        .collect();
    LinRel::from_span(dom, cod, vectors).expect("random span")
}

/// Random affine relation m → n; occasionally empty.
pub fn random_affrel<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> AffRel {
    if rng.gen_range(0..8u8) == 0 {
        return AffRel::empty(dom, cod);
    }
    let pool = scalar_pool();
    let linear = random_linrel(rng, dom, cod);
    let offset = (0..dom + cod).map(|_| random_scalar(rng, &pool)).collect();
    AffRel::translate(offset, linear).expect("random translate")
}

/// Random cospan m → n.
pub fn random_cospan<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Cospan {
    let apex_hint = rng.gen_range(1..=dom + cod + 2);
    let i = (0..dom).map(|_| rng.gen_range(0..apex_hint)).collect();
    let o = (0..cod).map(|_| rng.gen_range(0..apex_hint)).collect();
    Cospan::new(apex_hint, i, o).expect("random cospan")
}

/// Random corelation m → n (no floating blocks by construction).
pub fn random_corelation<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Corelation {
    if dom + cod == 0 {
        return Corelation::identity(0);
    }
    let blocks_hint = rng.gen_range(1..=dom + cod);
    let labels: Vec<usize> = (0..dom + cod)
        .map(|_| rng.gen_range(0..blocks_hint))
        .collect();
    Corelation::from_labels(dom, cod, &labels)
}
