//! Fraction-free (Bareiss) row echelon form.
//!
//! Every intermediate entry is a minor of the input, so the division by the
//! previous pivot is exact. Small inputs run in `i128` with checked
//! arithmetic and fall back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer echelon form with its pivot columns.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

trait Ring: Clone + PartialEq + Sized {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    /// `(a·b − c·d) / q`, exact; `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, q: &Self) -> Option<Self>;
    fn unit() -> Self;
}

impl Ring for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &i128, b: &i128, c: &i128, d: &i128, q: &i128) -> Option<i128> {
        let lhs = a.checked_mul(*b)?;
        let rhs = c.checked_mul(*d)?;
        let num = lhs.checked_sub(rhs)?;
        debug_assert_eq!(num % q, 0, "Bareiss division must be exact");
        num.checked_div(*q)
    }
}

impl Ring for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, q: &BigInt) -> Option<BigInt> {
        let num = a * b - c * d;
        let (quot, rem) = num.div_rem(q);
        debug_assert!(Zero::is_zero(&rem), "Bareiss division must be exact");
        Some(quot)
    }
}

fn bareiss<T: Ring>(rows: &mut [Vec<T>], ncols: usize) -> Option<Vec<usize>> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = T::unit();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_nil()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in (c + 1)..ncols {
                row[j] = T::cross_div(&pivot_row[c], &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[c] = T::nil();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

/// Clears denominators row by row; scaling a row changes neither the row
/// space nor the kernel.
pub(crate) fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

pub(crate) fn echelon(rows: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let small: Option<Vec<Vec<i128>>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| i64::try_from(x).ok().map(i128::from))
                .collect()
        })
        .collect();
    if let Some(mut fast) = small {
        if let Some(pivots) = bareiss(&mut fast, ncols) {
            let rows = fast
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect();
            return Echelon {
                rows,
                pivots,
                ncols,
            };
        }
    }
    let mut rows = rows;
    let pivots = bareiss(&mut rows, ncols).expect("BigInt arithmetic does not overflow");
    Echelon {
        rows,
        pivots,
        ncols,
    }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column: that column set to 1, the other
    /// free columns 0, pivot variables by back substitution. These are the
    /// vectors read off the reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let zero = BigRational::zero();
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = vec![zero.clone(); self.ncols];
                x[free] = BigRational::one();
                for (r, &pc) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[r];
                    let mut s = BigInt::zero();
                    let mut acc = zero.clone();
                    let mut integral = true;
                    for j in (pc + 1)..self.ncols {
                        if row[j].is_zero() || x[j].is_zero() {
                            continue;
                        }
                        if integral && x[j].is_integer() {
                            s += &row[j] * x[j].numer();
                        } else {
                            integral = false;
                            acc += BigRational::from_integer(row[j].clone()) * &x[j];
                        }
                    }
                    let total = acc + BigRational::from_integer(s);
                    x[pc] = -total / BigRational::from_integer(row[pc].clone());
                }
                x
            })
            .collect()
    }
}
