use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Tree, VertexId};
use crate::error::{Error, Result};

/// An exact vector indexed by the vertices of a tree (its domain). Stored
/// densely in ascending label order.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexVector {
    domain: Vec<VertexId>,
    entries: Vec<BigRational>,
}

impl VertexVector {
    /// The null vector θ over `domain` (which must be sorted and unique).
    pub fn zero(domain: &[VertexId]) -> VertexVector {
        debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
        VertexVector {
            domain: domain.to_vec(),
            entries: vec![BigRational::zero(); domain.len()],
        }
    }

    pub fn zero_on(t: &Tree) -> VertexVector {
        VertexVector::zero(t.ids())
    }

    /// `e_v`.
    pub fn unit(t: &Tree, v: VertexId) -> Result<VertexVector> {
        VertexVector::indicator(t, &[v])
    }

    /// `e_U = Σ_{v ∈ U} e_v`.
    pub fn indicator(t: &Tree, set: &[VertexId]) -> Result<VertexVector> {
        let mut x = VertexVector::zero_on(t);
        for &v in set {
            let i = t.require(v)?;
            x.entries[i] = BigRational::one();
        }
        Ok(x)
    }

    pub fn from_entries(domain: &[VertexId], entries: Vec<BigRational>) -> Result<VertexVector> {
        if domain.len() != entries.len() {
            return Err(Error::DomainMismatch(format!(
                "{} labels for {} entries",
                domain.len(),
                entries.len()
            )));
        }
        Ok(VertexVector {
            domain: domain.to_vec(),
            entries,
        })
    }

    /// Vector over `t` from integer coordinates given in label order.
    pub fn from_ints(t: &Tree, values: &[i64]) -> Result<VertexVector> {
        VertexVector::from_entries(
            t.ids(),
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    /// Vector over `t` from sparse `(vertex, coefficient)` pairs.
    pub fn from_sparse(t: &Tree, pairs: &[(VertexId, i64)]) -> Result<VertexVector> {
        let mut x = VertexVector::zero_on(t);
        for &(v, c) in pairs {
            let i = t.require(v)?;
            x.entries[i] = BigRational::from_integer(c.into());
        }
        Ok(x)
    }

    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<&BigRational> {
        self.domain.binary_search(&v).ok().map(|i| &self.entries[i])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<VertexId> {
        self.domain
            .iter()
            .zip(&self.entries)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&v, _)| v)
            .collect()
    }

    /// Nonzero entries as `(vertex, value)` pairs.
    pub fn sparse(&self) -> Vec<(VertexId, BigRational)> {
        self.domain
            .iter()
            .zip(&self.entries)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&v, x)| (v, x.clone()))
            .collect()
    }

    /// True when every entry lies in {-1, 0, 1}.
    pub fn is_signed_unit(&self) -> bool {
        self.entries
            .iter()
            .all(|x| x.is_integer() && x.numer().abs() <= BigInt::one())
    }

    /// Integer coordinates, if every entry is an integer fitting in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|x| {
                if x.is_integer() {
                    i64::try_from(x.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    fn check_domain(&self, other: &VertexVector) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(
                "vectors live on different vertex sets".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &VertexVector) -> Result<VertexVector> {
        self.check_domain(other)?;
        Ok(VertexVector {
            domain: self.domain.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scaled(&self, c: &BigRational) -> VertexVector {
        VertexVector {
            domain: self.domain.clone(),
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Same vector up to a nonzero scalar.
    pub fn is_parallel_to(&self, other: &VertexVector) -> bool {
        if self.domain != other.domain {
            return false;
        }
        let pivot = self
            .entries
            .iter()
            .zip(&other.entries)
            .find(|(a, _)| !a.is_zero());
        match pivot {
            None => other.is_zero(),
            Some((a, b)) if !b.is_zero() => {
                let ratio = b / a;
                self.entries
                    .iter()
                    .zip(&other.entries)
                    .all(|(x, y)| &(x * &ratio) == y)
            }
            _ => false,
        }
    }

    /// Exact test of `A(t) · x = θ`, walking the adjacency lists of `t`.
    pub fn is_null_vector_of(&self, t: &Tree) -> bool {
        if self.domain != t.ids() {
            return false;
        }
        (0..t.order()).all(|v| {
            let mut sum = BigRational::zero();
            for &w in t.neighbors(v) {
                sum += &self.entries[w];
            }
            sum.is_zero()
        })
    }

    /// `A(t) · x`.
    pub fn apply_adjacency(&self, t: &Tree) -> Result<VertexVector> {
        if self.domain != t.ids() {
            return Err(Error::DomainMismatch(
                "vector is not indexed by the tree".into(),
            ));
        }
        let entries = (0..t.order())
            .map(|v| {
                let mut sum = BigRational::zero();
                for &w in t.neighbors(v) {
                    sum += &self.entries[w];
                }
                sum
            })
            .collect();
        Ok(VertexVector {
            domain: self.domain.clone(),
            entries,
        })
    }
}

impl fmt::Debug for VertexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexVector{{")?;
        for (k, (v, x)) in self.sparse().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}: {x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Keeps the coordinates of `x` that belong to `sub`.
pub fn restrict(x: &VertexVector, sub: &Tree) -> Result<VertexVector> {
    let entries = sub
        .ids()
        .iter()
        .map(|&v| {
            x.get(v).cloned().ok_or_else(|| {
                Error::DomainMismatch(format!("vertex {v} is outside the vector's domain"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexVector {
        domain: sub.ids().to_vec(),
        entries,
    })
}

/// Extends `x` by zeros to the vertices of `host`.
pub fn lift(x: &VertexVector, host: &Tree) -> Result<VertexVector> {
    let mut out = VertexVector::zero_on(host);
    for (v, value) in x.domain.iter().zip(&x.entries) {
        let i = host
            .index_of(*v)
            .ok_or_else(|| Error::DomainMismatch(format!("vertex {v} is not in the host tree")))?;
        out.entries[i] = value.clone();
    }
    Ok(out)
}
