use serde::{Deserialize, Serialize};

use super::{CoreError, Monomial, Point};

/// Raw, unvalidated instance data as read from a file or built by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawInstance {
    pub d: usize,
    pub alpha: i64,
    pub generators: Vec<Vec<i64>>,
}

/// Non-fatal observations made during validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// The gcd of all generator entries together with alpha exceeds 1; the
    /// instance could be rescaled but is accepted as given.
    CommonFactor { gcd: i64 },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::CommonFactor { gcd } => write!(
                f,
                "warning: all generator entries and alpha share the common factor {}; \
                 the instance admits a rescaling but is used as given",
                gcd
            ),
        }
    }
}

/// A validated presentation of a simplicial homogeneous affine monoid in
/// normal form: the axis generators are `alpha * u_k` (implicit), and the
/// remaining generators `a_1..a_c` are nonnegative vectors of entry sum
/// `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    d: usize,
    c: usize,
    alpha: i64,
    generators: Vec<Point>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Presentation {
    /// Validates raw input. Axis vectors `alpha * u_k` may be listed
    /// explicitly; they are accepted (and stripped) only when all `d` of
    /// them are present, otherwise a lone axis vector is an error.
    pub fn validate(raw: &RawInstance) -> Result<(Presentation, Vec<Warning>), CoreError> {
        if raw.d == 0 {
            return Err(CoreError::BadDimensions {
                detail: "d must be at least 1".into(),
            });
        }
        if raw.alpha < 1 {
            return Err(CoreError::BadDimensions {
                detail: "alpha must be at least 1".into(),
            });
        }
        let d = raw.d;
        let alpha = raw.alpha;

        let mut non_axis: Vec<Point> = Vec::new();
        let mut axis_seen: Vec<usize> = Vec::new();
        for (idx, g) in raw.generators.iter().enumerate() {
            if g.len() != d {
                return Err(CoreError::BadDimensions {
                    detail: format!(
                        "generator {} has {} entries, expected {}",
                        idx + 1,
                        g.len(),
                        d
                    ),
                });
            }
            let p = Point(g.clone());
            if !p.is_nonnegative() {
                return Err(CoreError::NonNegativityViolation { generator: p });
            }
            if p.entry_sum() != alpha {
                return Err(CoreError::WrongDegree {
                    generator: p,
                    alpha,
                });
            }
            match axis_index(&p, alpha) {
                Some(k) => axis_seen.push(k),
                None => non_axis.push(p),
            }
        }

        if !axis_seen.is_empty() {
            let mut ks = axis_seen.clone();
            ks.sort_unstable();
            ks.dedup();
            if ks.len() != d || axis_seen.len() != d {
                return Err(CoreError::AxisGenerator {
                    detail: format!(
                        "{} axis vector(s) listed; either omit all of them or list \
                         each of the {} axis vectors exactly once",
                        axis_seen.len(),
                        d
                    ),
                });
            }
            // Full explicit axis set: strip it.
        }

        for i in 0..non_axis.len() {
            for j in (i + 1)..non_axis.len() {
                if non_axis[i] == non_axis[j] {
                    return Err(CoreError::DuplicateGenerator {
                        generator: non_axis[i].clone(),
                    });
                }
            }
        }

        let mut warnings = Vec::new();
        if !non_axis.is_empty() {
            let g = non_axis
                .iter()
                .flat_map(|p| p.entries())
                .fold(alpha, |acc, &e| gcd(acc, e));
            if g > 1 {
                warnings.push(Warning::CommonFactor { gcd: g });
            }
        }

        Ok((
            Presentation {
                d,
                c: non_axis.len(),
                alpha,
                generators: non_axis,
            },
            warnings,
        ))
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// The non-axis generators `a_1..a_c`.
    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Point {
        &self.generators[i]
    }

    /// The implicit axis generator `e_k = alpha * u_k` (0-based `k`).
    pub fn axis_generator(&self, k: usize) -> Point {
        let mut v = vec![0; self.d];
        v[k] = self.alpha;
        Point(v)
    }

    pub fn raw(&self) -> RawInstance {
        RawInstance {
            d: self.d,
            alpha: self.alpha,
            generators: self.generators.iter().map(|p| p.0.clone()).collect(),
        }
    }

    /// The grading: `(sum of entries) / alpha`, defined on nonnegative
    /// points whose entry sum is divisible by alpha.
    pub fn degree(&self, p: &Point) -> Result<u32, CoreError> {
        let s = p.entry_sum();
        if s < 0 || s % self.alpha != 0 {
            return Err(CoreError::NotGraded {
                point: p.clone(),
                alpha: self.alpha,
            });
        }
        Ok(u32::try_from(s / self.alpha).expect("degree exceeds u32"))
    }

    /// Evaluates pi on a monomial: `sum mu_i * a_i + sum nu_k * alpha*u_k`.
    pub fn pi_value(&self, m: &Monomial) -> Point {
        assert_eq!(m.mu.len(), self.c, "x-exponent count mismatch");
        assert_eq!(m.nu.len(), self.d, "y-exponent count mismatch");
        let mut acc = vec![0i64; self.d];
        for (i, &e) in m.mu.iter().enumerate() {
            let a = &self.generators[i];
            for k in 0..self.d {
                let term = (e as i64)
                    .checked_mul(a[k])
                    .expect("integer overflow in pi evaluation");
                acc[k] = acc[k].checked_add(term).expect("integer overflow in pi evaluation");
            }
        }
        for (k, &e) in m.nu.iter().enumerate() {
            let term = (e as i64)
                .checked_mul(self.alpha)
                .expect("integer overflow in pi evaluation");
            acc[k] = acc[k].checked_add(term).expect("integer overflow in pi evaluation");
        }
        Point(acc)
    }

    /// The unique pure-y monomial mapping to `a in A = alpha*Z+^d`.
    pub fn y_monomial_of(&self, a: &Point) -> Result<Monomial, CoreError> {
        if !a.in_axis_monoid(self.alpha) {
            return Err(CoreError::NotInA {
                point: a.clone(),
                alpha: self.alpha,
            });
        }
        let nu = a
            .entries()
            .iter()
            .map(|&e| u32::try_from(e / self.alpha).expect("exponent exceeds u32"))
            .collect();
        Ok(Monomial::pure_y(self.c, nu))
    }
}

fn axis_index(p: &Point, alpha: i64) -> Option<usize> {
    let mut hit = None;
    for (k, &e) in p.entries().iter().enumerate() {
        if e == alpha {
            if hit.is_some() {
                return None;
            }
            hit = Some(k);
        } else if e != 0 {
            return None;
        }
    }
    hit
}
