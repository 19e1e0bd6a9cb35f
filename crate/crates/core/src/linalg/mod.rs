//! Exact rational linear algebra over vertex-indexed matrices, plus the
//! brute-force enumerations used as independent oracles.
//!
//! Nothing in here uses floating point. Kernels come from fraction-free
//! elimination followed by rational back substitution.

mod echelon;
mod oracle;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tree::{Tree, VertexId, VertexVector};

pub use oracle::{brute_force, OracleReport, DEFAULT_BRUTE_FORCE_LIMIT};

/// Dense exact matrix whose rows and columns are labeled by vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    row_labels: Vec<VertexId>,
    col_labels: Vec<VertexId>,
    rows: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(
        row_labels: Vec<VertexId>,
        col_labels: Vec<VertexId>,
        rows: Vec<Vec<BigRational>>,
    ) -> Result<RationalMatrix> {
        if rows.len() != row_labels.len() || rows.iter().any(|r| r.len() != col_labels.len()) {
            return Err(Error::DomainMismatch(
                "matrix shape does not match its labels".into(),
            ));
        }
        Ok(RationalMatrix {
            row_labels,
            col_labels,
            rows,
        })
    }

    /// Matrix whose rows are the given vectors (all over one domain).
    pub fn from_vectors(vectors: &[VertexVector]) -> Result<RationalMatrix> {
        let domain = common_domain(vectors)?;
        RationalMatrix::new(
            (0..vectors.len() as u64).map(VertexId).collect(),
            domain,
            vectors.iter().map(|v| v.entries().to_vec()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[VertexId] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[VertexId] {
        &self.col_labels
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn get(&self, row: VertexId, col: VertexId) -> Option<&BigRational> {
        let r = self.row_labels.iter().position(|&v| v == row)?;
        let c = self.col_labels.iter().position(|&v| v == col)?;
        Some(&self.rows[r][c])
    }

    pub fn is_symmetric(&self) -> bool {
        self.row_labels == self.col_labels
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Columns as vectors over the row labels (which must be sorted).
    pub fn columns(&self) -> Vec<VertexVector> {
        (0..self.ncols())
            .map(|c| {
                VertexVector::from_entries(
                    &self.row_labels,
                    self.rows.iter().map(|r| r[c].clone()).collect(),
                )
                .expect("column length equals row count")
            })
            .collect()
    }

    fn echelon(&self) -> echelon::Echelon {
        echelon::echelon(echelon::integer_rows(&self.rows), self.ncols())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel(&self) -> KernelBasis {
        let vectors = self
            .echelon()
            .kernel()
            .into_iter()
            .map(|entries| {
                VertexVector::from_entries(&self.col_labels, entries)
                    .expect("kernel has ncols entries")
            })
            .collect();
        KernelBasis {
            domain: self.col_labels.clone(),
            vectors,
        }
    }
}

/// `A(t)`: symmetric 0/1, zero diagonal, rows and columns in label order.
pub fn adjacency_matrix(t: &Tree) -> RationalMatrix {
    let n = t.order();
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for (i, j) in t.edges() {
        rows[i][j] = BigRational::one();
        rows[j][i] = BigRational::one();
    }
    RationalMatrix {
        row_labels: t.ids().to_vec(),
        col_labels: t.ids().to_vec(),
        rows,
    }
}

/// Basis of a null space, as vectors over a common domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    domain: Vec<VertexId>,
    vectors: Vec<VertexVector>,
}

impl KernelBasis {
    pub fn new(domain: Vec<VertexId>, vectors: Vec<VertexVector>) -> Result<KernelBasis> {
        if vectors.iter().any(|v| v.domain() != domain.as_slice()) {
            return Err(Error::DomainMismatch(
                "basis vectors over different domains".into(),
            ));
        }
        Ok(KernelBasis { domain, vectors })
    }

    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    pub fn vectors(&self) -> &[VertexVector] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Union of the supports of the basis vectors, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        let mut mask = vec![false; self.domain.len()];
        for v in &self.vectors {
            for (k, x) in v.entries().iter().enumerate() {
                if !x.is_zero() {
                    mask[k] = true;
                }
            }
        }
        self.domain
            .iter()
            .zip(mask)
            .filter(|(_, m)| *m)
            .map(|(&v, _)| v)
            .collect()
    }
}

pub fn kernel(m: &RationalMatrix) -> KernelBasis {
    m.kernel()
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

fn tree_echelon(t: &Tree) -> echelon::Echelon {
    let n = t.order();
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (i, j) in t.edges() {
        rows[i][j] = BigInt::one();
        rows[j][i] = BigInt::one();
    }
    echelon::echelon(rows, n)
}

/// Kernel of `A(t)` without materializing the rational matrix.
pub fn tree_kernel(t: &Tree) -> KernelBasis {
    let vectors = tree_echelon(t)
        .kernel()
        .into_iter()
        .map(|entries| VertexVector::from_entries(t.ids(), entries).expect("n entries"))
        .collect();
    KernelBasis {
        domain: t.ids().to_vec(),
        vectors,
    }
}

pub fn tree_rank(t: &Tree) -> usize {
    tree_echelon(t).rank()
}

fn common_domain(vectors: &[VertexVector]) -> Result<Vec<VertexId>> {
    let Some(first) = vectors.first() else {
        return Ok(Vec::new());
    };
    if vectors.iter().any(|v| v.domain() != first.domain()) {
        return Err(Error::DomainMismatch(
            "vectors over different domains".into(),
        ));
    }
    Ok(first.domain().to_vec())
}

/// Dimension of the span of `vectors`.
pub fn rank_of_vectors(vectors: &[VertexVector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(RationalMatrix::from_vectors(vectors)?.rank())
}

/// Whether two lists of vectors span the same rational subspace.
pub fn span_equal(a: &[VertexVector], b: &[VertexVector]) -> Result<bool> {
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        if x.domain() != y.domain() {
            return Err(Error::DomainMismatch("spans over different domains".into()));
        }
    }
    let ra = rank_of_vectors(a)?;
    let rb = rank_of_vectors(b)?;
    if ra != rb {
        return Ok(false);
    }
    let stacked: Vec<VertexVector> = a.iter().chain(b).cloned().collect();
    Ok(rank_of_vectors(&stacked)? == ra)
}

/// A vector in the span of `basis` whose support is the union of the
/// supports of the basis vectors.
///
/// Accumulates the basis one vector at a time, scaling each incoming vector
/// by the smallest positive integer that cancels no coordinate that is
/// currently nonzero.
pub fn full_support_vector(basis: &KernelBasis) -> Result<VertexVector> {
    let mut vectors = basis.vectors().iter();
    let mut acc = vectors.next().ok_or(Error::EmptyBasis)?.clone();
    for v in vectors {
        let mut forbidden: Vec<BigInt> = acc
            .entries()
            .iter()
            .zip(v.entries())
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| -(a / b))
            .filter(|c| c.is_integer() && c.is_positive())
            .map(|c| c.to_integer())
            .collect();
        forbidden.sort();
        let mut c = BigInt::one();
        for f in &forbidden {
            if *f == c {
                c += 1;
            } else if *f > c {
                break;
            }
        }
        acc = acc.add(&v.scaled(&BigRational::from_integer(c)))?;
    }
    Ok(acc)
}
