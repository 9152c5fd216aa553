use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `x^mu * y^nu` of `S = K[x_1..x_c, y_1..y_d]`.
///
/// Exponents are exact nonnegative integers. The variable order is
/// `x_1 > ... > x_c > y_1 > ... > y_d`; "last nonzero entry" always refers
/// to the concatenation `(mu, nu)` read left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
}

impl Monomial {
    pub fn unit(c: usize, d: usize) -> Self {
        Monomial {
            mu: vec![0; c],
            nu: vec![0; d],
        }
    }

    pub fn pure_x(mu: Vec<u32>, d: usize) -> Self {
        Monomial {
            mu,
            nu: vec![0; d],
        }
    }

    pub fn pure_y(c: usize, nu: Vec<u32>) -> Self {
        Monomial {
            mu: vec![0; c],
            nu,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.total_degree() == 0
    }

    pub fn is_pure_x(&self) -> bool {
        self.nu.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.mu
            .iter()
            .chain(&self.nu)
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("integer overflow in total degree")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.mu.len(), other.mu.len(), "variable count mismatch");
        assert_eq!(self.nu.len(), other.nu.len(), "variable count mismatch");
        let add = |a: &[u32], b: &[u32]| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.checked_add(*y).expect("integer overflow in exponent"))
                .collect()
        };
        Monomial {
            mu: add(&self.mu, &other.mu),
            nu: add(&self.nu, &other.nu),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mu.iter().zip(&other.mu).all(|(a, b)| a <= b)
            && self.nu.iter().zip(&other.nu).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            mu: other.mu.iter().zip(&self.mu).map(|(b, a)| b - a).collect(),
            nu: other.nu.iter().zip(&self.nu).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| *a.max(b)).collect(),
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    fn exponents(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.mu.iter().chain(&self.nu).copied()
    }
}

/// Graded reverse lexicographic order: compare total degrees first; on ties
/// the smaller monomial is the one for which the last nonzero entry of the
/// exponent difference is positive in its favor at the back of `(mu, nu)`.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.mu.len(), other.mu.len(), "variable count mismatch");
        debug_assert_eq!(self.nu.len(), other.nu.len(), "variable count mismatch");
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Last nonzero entry of (other - self) negative => self < other.
        for (a, b) in self.exponents().rev().zip(other.exponents().rev()) {
            match (b as i64 - a as i64).cmp(&0) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Grevlex comparison, named for use at call sites that read better with a
/// function than with `Ord`.
pub fn grevlex_cmp(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.cmp(m2)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, var: &str, i: usize, e: u32| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}{}", var, i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
            Ok(())
        };
        for (i, &e) in self.mu.iter().enumerate() {
            put(f, "x", i, e)?;
        }
        for (i, &e) in self.nu.iter().enumerate() {
            put(f, "y", i, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(mu: &[u32], nu: &[u32]) -> Monomial {
        Monomial {
            mu: mu.to_vec(),
            nu: nu.to_vec(),
        }
    }

    #[test]
    fn grevlex_fixture_comparisons() {
        // c=3, d=3: y1*y2 < x2^2
        let y1y2 = m(&[0, 0, 0], &[1, 1, 0]);
        let x2sq = m(&[0, 2, 0], &[0, 0, 0]);
        assert_eq!(grevlex_cmp(&y1y2, &x2sq), Ordering::Less);
        // x3^2*y3^2 < x1^2*x2*y1
        let lhs = m(&[0, 0, 2], &[0, 0, 2]);
        let rhs = m(&[2, 1, 0], &[1, 0, 0]);
        assert_eq!(grevlex_cmp(&lhs, &rhs), Ordering::Less);
        assert_eq!(grevlex_cmp(&lhs, &lhs), Ordering::Equal);
        // degree dominates
        let small = m(&[1, 0, 0], &[0, 0, 0]);
        assert_eq!(grevlex_cmp(&small, &lhs), Ordering::Less);
    }

    #[test]
    fn grevlex_later_variables_weigh_less() {
        // c=4, d=2: x2^2*x4 < x1*x3^2 (weight on the later variable loses)
        let a = m(&[0, 2, 0, 1], &[0, 0]);
        let b = m(&[1, 0, 2, 0], &[0, 0]);
        assert_eq!(grevlex_cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 0, 1], &[0, 1, 0]);
        let b = m(&[2, 1, 1], &[0, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 1, 0], &[0, 0, 1]));
        assert_eq!(a.mul(&a.quotient_of(&b)), b);
    }

    #[test]
    fn display_names_variables() {
        let a = m(&[2, 1, 0], &[1, 0, 0]);
        assert_eq!(a.to_string(), "x1^2*x2*y1");
        assert_eq!(m(&[0, 0, 0], &[0, 0, 0]).to_string(), "1");
    }
}
