use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::CoreError;

/// A lattice point in `Z^d`. Entries are exact 64-bit integers; all
/// arithmetic is checked and panics on overflow instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn zero(d: usize) -> Self {
        Point(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn checked_add(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("integer overflow in point addition"))
                .collect(),
        )
    }

    pub fn checked_sub(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| {
                    a.checked_sub(*b)
                        .expect("integer overflow in point subtraction")
                })
                .collect(),
        )
    }

    /// Componentwise maximum of two nonnegative points.
    pub fn join(&self, other: &Point) -> Point {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        )
    }

    pub fn entry_sum(&self) -> i64 {
        self.0
            .iter()
            .try_fold(0i64, |acc, &e| acc.checked_add(e))
            .expect("integer overflow in entry sum")
    }

    /// Componentwise residues mod `alpha`; a complete invariant for the
    /// congruence `x ~ y <=> x - y in alpha*Z^d` on nonnegative points.
    pub fn residues(&self, alpha: i64) -> Vec<i64> {
        self.0.iter().map(|&e| e.rem_euclid(alpha)).collect()
    }

    /// True iff every entry is nonnegative and divisible by `alpha`,
    /// i.e. the point lies in the axis submonoid `A = alpha*Z+^d`.
    pub fn in_axis_monoid(&self, alpha: i64) -> bool {
        self.0.iter().all(|&e| e >= 0 && e % alpha == 0)
    }
}

impl Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// Total order within an equivalence class mod `alpha*Z^d`: `b` precedes `c`
/// iff the last nonzero entry of `b - c` is negative.
pub fn class_cmp(b: &Point, c: &Point, alpha: i64) -> Result<std::cmp::Ordering, CoreError> {
    use std::cmp::Ordering;
    assert_eq!(b.dim(), c.dim(), "dimension mismatch");
    let diff = b.checked_sub(c);
    if !diff.0.iter().all(|&e| e % alpha == 0) {
        return Err(CoreError::NotCongruent {
            b: b.clone(),
            c: c.clone(),
            alpha,
        });
    }
    match diff.0.iter().rev().find(|&&e| e != 0) {
        None => Ok(Ordering::Equal),
        Some(&e) if e < 0 => Ok(Ordering::Less),
        Some(_) => Ok(Ordering::Greater),
    }
}
