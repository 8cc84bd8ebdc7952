//! Cospans of finite ordinals and corelations (partitions of the joint
//! boundary), the structural layer between circuits and their relational
//! semantics. A cospan m → N ← n records how terminals attach to shared
//! points; quotienting away points outside the boundary image gives a
//! corelation; a corelation maps on to the linear relation a perfectly
//! conductive junction imposes on its terminals.

mod unionfind;

use std::fmt;

use crate::error::Error;
use crate::kfield::Scalar;
use crate::linrel::LinRel;
pub(crate) use unionfind::UnionFind;

/// A cospan of finite sets m → apex ← n in canonical iso-class form:
/// apex points in the image of the legs are numbered by first occurrence
/// scanning the input leg then the output leg, and points outside the
/// image sit at the top indices (only their count is retained), so `==`
/// decides isomorphism of cospans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cospan {
    m: usize,
    n: usize,
    apex: usize,
    i: Vec<usize>,
    o: Vec<usize>,
}

impl Cospan {
    pub fn new(apex: usize, i: Vec<usize>, o: Vec<usize>) -> Result<Self, Error> {
        for &x in i.iter().chain(o.iter()) {
            if x >= apex {
                return Err(Error::DimensionMismatch(format!(
                    "cospan leg hits {x}, apex has {apex} points"
                )));
            }
        }
        let mut map = vec![usize::MAX; apex];
        let mut next = 0;
        for &x in i.iter().chain(o.iter()) {
            if map[x] == usize::MAX {
                map[x] = next;
                next += 1;
            }
        }
        Ok(Cospan {
            m: i.len(),
            n: o.len(),
            apex,
            i: i.iter().map(|&x| map[x]).collect(),
            o: o.iter().map(|&x| map[x]).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Cospan::new(n, (0..n).collect(), (0..n).collect()).expect("identity cospan")
    }

    /// The swap m+n → n+m through an (m+n)-point apex.
    pub fn braiding(m: usize, n: usize) -> Self {
        let total = m + n;
        let o = (0..total)
            .map(|k| if k < n { m + k } else { k - n })
            .collect();
        Cospan::new(total, (0..total).collect(), o).expect("braiding cospan")
    }

    pub fn dom(&self) -> usize {
        self.m
    }

    pub fn cod(&self) -> usize {
        self.n
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn input_leg(&self) -> &[usize] {
        &self.i
    }

    pub fn output_leg(&self) -> &[usize] {
        &self.o
    }

    /// Pushout composition: glue the apexes along the shared boundary.
    pub fn compose(&self, other: &Cospan) -> Result<Cospan, Error> {
        if self.n != other.m {
            return Err(Error::ArityMismatch(format!(
                "compose: left has codomain {}, right has domain {}",
                self.n, other.m
            )));
        }
        let mut uf = UnionFind::new(self.apex + other.apex);
        for y in 0..self.n {
            uf.union(self.o[y], self.apex + other.i[y]);
        }
        let (labels, classes) = uf.canonical_labels();
        Cospan::new(
            classes,
            self.i.iter().map(|&x| labels[x]).collect(),
            other.o.iter().map(|&y| labels[self.apex + y]).collect(),
        )
    }

    /// Disjoint union of apexes and boundaries.
    pub fn tensor(&self, other: &Cospan) -> Cospan {
        let mut i = self.i.clone();
        i.extend(other.i.iter().map(|&x| x + self.apex));
        let mut o = self.o.clone();
        o.extend(other.o.iter().map(|&y| y + self.apex));
        Cospan::new(self.apex + other.apex, i, o).expect("tensor cospan")
    }

    /// Quotient to a corelation: boundary points share a block iff they
    /// hit the same apex point; apex points outside the image vanish.
    pub fn corelation(&self) -> Corelation {
        let labels = self
            .i
            .iter()
            .chain(self.o.iter())
            .copied()
            .collect::<Vec<_>>();
        Corelation::from_labels(self.m, self.n, &labels)
    }
}

/// A corelation m → n: a partition of the m+n boundary points (inputs
/// first). Each point stores the least member of its block, which makes
/// the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corelation {
    m: usize,
    n: usize,
    block: Vec<usize>,
}

impl Corelation {
    /// Partition of m+n points where two points share a block iff they
    /// carry equal labels.
    pub fn from_labels(m: usize, n: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), m + n, "one label per boundary point");
        let mut least: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for (e, &l) in labels.iter().enumerate() {
            least.entry(l).or_insert(e);
        }
        Corelation {
            m,
            n,
            block: labels.iter().map(|l| least[l]).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let labels: Vec<usize> = (0..n).chain(0..n).collect();
        Corelation::from_labels(n, n, &labels)
    }

    pub fn braiding(m: usize, n: usize) -> Self {
        let total = m + n;
        let mut labels = vec![0; 2 * total];
        for (j, l) in labels.iter_mut().enumerate().take(total) {
            *l = j;
        }
        for k in 0..total {
            let j = if k < n { m + k } else { k - n };
            labels[total + k] = j;
        }
        Corelation::from_labels(total, total, &labels)
    }

    pub fn dom(&self) -> usize {
        self.m
    }

    pub fn cod(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.block
    }

    /// Union the two partitions over shared middle points, keep the outer
    /// points; middle-only blocks drop out.
    pub fn compose(&self, other: &Corelation) -> Result<Corelation, Error> {
        if self.n != other.m {
            return Err(Error::ArityMismatch(format!(
                "compose: left has codomain {}, right has domain {}",
                self.n, other.m
            )));
        }
        let (m, mid, p) = (self.m, self.n, other.n);
        // Combined indexing: inputs, middle, outputs.
        let mut uf = UnionFind::new(m + mid + p);
        for e in 0..m + mid {
            uf.union(e, self.block[e]);
        }
        for e in 0..mid + p {
            uf.union(m + e, m + other.block[e]);
        }
        let mut labels = Vec::with_capacity(m + p);
        for e in 0..m {
            labels.push(uf.find(e));
        }
        for e in 0..p {
            labels.push(uf.find(m + mid + e));
        }
        Ok(Corelation::from_labels(m, p, &labels))
    }

    /// Disjoint union, reindexed to inputs-first.
    pub fn tensor(&self, other: &Corelation) -> Corelation {
        let (m1, n1, m2, n2) = (self.m, self.n, other.m, other.n);
        // Position of a point of each operand in the combined boundary.
        let place1 = |e: usize| if e < m1 { e } else { m1 + m2 + (e - m1) };
        let place2 = |e: usize| if e < m2 { m1 + e } else { m1 + m2 + n1 + (e - m2) };
        let mut labels = vec![0; m1 + m2 + n1 + n2];
        for e in 0..m1 + n1 {
            labels[place1(e)] = place1(self.block[e]);
        }
        for e in 0..m2 + n2 {
            labels[place2(e)] = place2(other.block[e]);
        }
        Corelation::from_labels(m1 + m2, n1 + n2, &labels)
    }

    /// The linear relation of a perfectly conductive junction per block:
    /// terminals carry interleaved (potential, current) coordinates,
    /// inputs first; within each block all potentials agree and input
    /// currents balance output currents.
    pub fn wire_relation(&self) -> LinRel {
        let width = 2 * (self.m + self.n);
        let mut rows = Vec::new();
        let mut members: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for (e, &b) in self.block.iter().enumerate() {
            members.entry(b).or_default().push(e);
        }
        for terminals in members.values() {
            let rep = terminals[0];
            for &t in &terminals[1..] {
                let mut row = vec![Scalar::zero(); width];
                row[2 * rep] = Scalar::one();
                row[2 * t] = -&Scalar::one();
                rows.push(row);
            }
            let mut current = vec![Scalar::zero(); width];
            for &t in terminals {
                current[2 * t + 1] = if t < self.m {
                    Scalar::one()
                } else {
                    -&Scalar::one()
                };
            }
            rows.push(current);
        }
        LinRel::from_constraints(2 * self.m, 2 * self.n, rows).expect("wire relation")
    }
}

impl fmt::Display for Corelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} |", self.m, self.n)?;
        for b in &self.block {
            write!(f, " {b}")?;
        }
        Ok(())
    }
}
