//! Independent brute-force oracles.
//!
//! Nothing here reuses the pipeline's layered enumeration logic: the fiber
//! oracle enumerates raw monomials and checks the standard-monomial
//! bijection directly, the S-pair check runs textbook lead-term reduction,
//! and `brute_min_rep` minimizes over all x-representations by exhaustion.
//!
//! Fiber enumeration parallelizes by degree slice and S-pair checking by
//! pair (behind the `parallel` feature); results are merged in a fixed
//! order so output is independent of scheduling.

use std::collections::{BTreeMap, HashMap};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::core::{Monomial, Point, Presentation, RawInstance};
use crate::groebner::GroebnerResult;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(
        "oracle depth {depth} needs {candidates} candidate monomials, over the budget of {budget}; \
         nothing was checked"
    )]
    DegreeTooLargeForBudget {
        depth: u32,
        candidates: u128,
        budget: u128,
    },
    #[error("reduction of the S-polynomial of pair ({i}, {j}) exceeded {cap} steps")]
    NonTermination { i: usize, j: usize, cap: usize },
    #[error("point {point} has no pure-x representation")]
    NoRepresentation { point: Point },
}

/// Default candidate budget for the fiber oracle.
pub const DEFAULT_ORACLE_BUDGET: u128 = 20_000_000;

/// Default reduction step cap per S-polynomial.
pub const DEFAULT_REDUCTION_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct FiberFailure {
    pub point: Point,
    pub monomial: Monomial,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct FiberReport {
    pub max_degree_checked: u32,
    pub fibers_checked: usize,
    pub failures: Vec<FiberFailure>,
}

impl FiberReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn count_monomials_up_to(vars: usize, depth: u32) -> u128 {
    // C(depth + vars, vars)
    let mut acc: u128 = 1;
    for i in 1..=vars as u128 {
        acc = acc
            .checked_mul(depth as u128 + i)
            .expect("candidate count overflow")
            / i;
    }
    acc
}

/// All exponent vectors of length `vars` with entry sum exactly `total`,
/// in lexicographic order.
fn compositions(vars: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(vars - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    if vars == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(vars, total, &mut Vec::new(), &mut out);
    out
}

fn check_degree_slice(
    pres: &Presentation,
    n0: &[Monomial],
    t: u32,
) -> (usize, Vec<FiberFailure>) {
    let c = pres.c();
    let d = pres.d();
    let mut fibers: HashMap<Point, Vec<Monomial>> = HashMap::new();
    for exps in compositions(c + d, t) {
        let m = Monomial {
            mu: exps[..c].to_vec(),
            nu: exps[c..].to_vec(),
        };
        fibers.entry(pres.pi_value(&m)).or_default().push(m);
    }

    let mut failures = Vec::new();
    let mut standard_count = 0usize;
    for (point, members) in &fibers {
        let min = members.iter().min().unwrap();
        if let Some(g) = n0.iter().find(|g| g.divides(min)) {
            failures.push(FiberFailure {
                point: point.clone(),
                monomial: min.clone(),
                reason: format!("fiber minimum is divisible by the generator {}", g),
            });
        }
        for m in members {
            if m == min {
                continue;
            }
            if !n0.iter().any(|g| g.divides(m)) {
                failures.push(FiberFailure {
                    point: point.clone(),
                    monomial: m.clone(),
                    reason: "non-minimal fiber member is divisible by no generator".into(),
                });
            }
        }
    }
    for members in fibers.values() {
        for m in members {
            if !n0.iter().any(|g| g.divides(m)) {
                standard_count += 1;
            }
        }
    }
    // Hilbert-function agreement: standard monomials of the monomial ideal
    // vs distinct pi-values in this degree.
    if standard_count != fibers.len() {
        failures.push(FiberFailure {
            point: Point::zero(pres.d()),
            monomial: Monomial::unit(c, d),
            reason: format!(
                "degree {}: {} standard monomials but {} distinct values",
                t,
                standard_count,
                fibers.len()
            ),
        });
    }
    failures.sort_by(|a, b| (&a.point, &a.monomial).cmp(&(&b.point, &b.monomial)));
    (fibers.len(), failures)
}

fn assemble_report(depth: u32, slices: Vec<(usize, Vec<FiberFailure>)>) -> FiberReport {
    let mut fibers_checked = 0;
    let mut failures = Vec::new();
    for (count, mut fails) in slices {
        fibers_checked += count;
        failures.append(&mut fails);
    }
    FiberReport {
        max_degree_checked: depth,
        fibers_checked,
        failures,
    }
}

fn oracle_budget_check(pres: &Presentation, depth: u32, budget: u128) -> Result<(), VerifyError> {
    let candidates = count_monomials_up_to(pres.c() + pres.d(), depth);
    if candidates > budget {
        return Err(VerifyError::DegreeTooLargeForBudget {
            depth,
            candidates,
            budget,
        });
    }
    Ok(())
}

/// Enumerates every monomial of total degree at most `depth`, groups by
/// pi-value, and checks that in each fiber the grevlex minimum is standard
/// (divisible by no `n0` generator) while every other member is divisible
/// by some generator; also checks Hilbert-function agreement per degree.
pub fn fiber_oracle(
    pres: &Presentation,
    result: &GroebnerResult,
    depth: u32,
    budget: u128,
) -> Result<FiberReport, VerifyError> {
    #[cfg(feature = "parallel")]
    {
        fiber_oracle_parallel(pres, result, depth, budget)
    }
    #[cfg(not(feature = "parallel"))]
    {
        fiber_oracle_sequential(pres, result, depth, budget)
    }
}

pub fn fiber_oracle_sequential(
    pres: &Presentation,
    result: &GroebnerResult,
    depth: u32,
    budget: u128,
) -> Result<FiberReport, VerifyError> {
    oracle_budget_check(pres, depth, budget)?;
    let slices = (0..=depth)
        .map(|t| check_degree_slice(pres, &result.n0, t))
        .collect();
    Ok(assemble_report(depth, slices))
}

#[cfg(feature = "parallel")]
pub fn fiber_oracle_parallel(
    pres: &Presentation,
    result: &GroebnerResult,
    depth: u32,
    budget: u128,
) -> Result<FiberReport, VerifyError> {
    oracle_budget_check(pres, depth, budget)?;
    let slices: Vec<_> = (0..=depth)
        .into_par_iter()
        .map(|t| check_degree_slice(pres, &result.n0, t))
        .collect();
    Ok(assemble_report(depth, slices))
}

/// Default oracle depth: max degree over `n0` plus 2.
pub fn default_oracle_depth(result: &GroebnerResult) -> u32 {
    result
        .n0
        .iter()
        .map(Monomial::total_degree)
        .max()
        .unwrap_or(0)
        + 2
}

/// How the reducer picks among applicable divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorStrategy {
    /// The applicable basis element with the grevlex-smallest lead.
    SmallestLead,
    /// The first applicable basis element in list order. Exists for the
    /// confluence cross-check.
    FirstInList,
}

#[derive(Clone, Debug)]
pub struct SpairFailure {
    pub i: usize,
    pub j: usize,
    pub normal_form: Vec<(Monomial, i64)>,
}

#[derive(Clone, Debug)]
pub struct SpairOutcome {
    pub pairs_checked: usize,
    pub failures: Vec<SpairFailure>,
}

impl SpairOutcome {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

type Poly = BTreeMap<Monomial, i64>;

fn poly_add(poly: &mut Poly, m: Monomial, coeff: i64) {
    let entry = poly.entry(m).or_insert(0);
    *entry = entry.checked_add(coeff).expect("coefficient overflow");
    if *entry == 0 {
        poly.retain(|_, &mut c| c != 0);
    }
}

fn reduce_to_normal_form(
    mut poly: Poly,
    basis: &[crate::groebner::Binomial],
    strategy: DivisorStrategy,
    cap: usize,
) -> Result<Poly, usize> {
    let mut steps = 0;
    loop {
        // Reduce the grevlex-largest reducible term.
        let target = poly
            .iter()
            .rev()
            .find_map(|(m, &c)| {
                let applicable: Vec<usize> = basis
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.lead.divides(m))
                    .map(|(k, _)| k)
                    .collect();
                if applicable.is_empty() {
                    return None;
                }
                let k = match strategy {
                    DivisorStrategy::FirstInList => applicable[0],
                    DivisorStrategy::SmallestLead => *applicable
                        .iter()
                        .min_by(|&&a, &&b| basis[a].lead.cmp(&basis[b].lead))
                        .unwrap(),
                };
                Some((m.clone(), c, k))
            });
        let Some((m, c, k)) = target else {
            return Ok(poly);
        };
        if steps >= cap {
            return Err(cap);
        }
        steps += 1;
        let g = &basis[k];
        let factor = g.lead.quotient_of(&m);
        poly_add(&mut poly, m, -c);
        poly_add(&mut poly, factor.mul(&g.tail), c);
    }
}

fn spair_of(
    g1: &crate::groebner::Binomial,
    g2: &crate::groebner::Binomial,
) -> Poly {
    let lcm = g1.lead.lcm(&g2.lead);
    let f1 = g1.lead.quotient_of(&lcm);
    let f2 = g2.lead.quotient_of(&lcm);
    // (lcm/l1)*g1 - (lcm/l2)*g2 = (lcm/l2)*t2 - (lcm/l1)*t1
    let mut poly = Poly::new();
    poly_add(&mut poly, f2.mul(&g2.tail), 1);
    poly_add(&mut poly, f1.mul(&g1.tail), -1);
    poly
}

fn check_pair(
    result: &GroebnerResult,
    i: usize,
    j: usize,
    strategy: DivisorStrategy,
    cap: usize,
) -> Result<Option<SpairFailure>, VerifyError> {
    let s = spair_of(&result.basis[i], &result.basis[j]);
    match reduce_to_normal_form(s, &result.basis, strategy, cap) {
        Ok(nf) if nf.is_empty() => Ok(None),
        Ok(nf) => Ok(Some(SpairFailure {
            i,
            j,
            normal_form: nf.into_iter().collect(),
        })),
        Err(cap) => Err(VerifyError::NonTermination { i, j, cap }),
    }
}

/// Buchberger's criterion: every S-polynomial of a basis pair must reduce
/// to zero modulo the basis. Confirms the emitted set is a Groebner basis
/// of the ideal it generates.
pub fn spair_check(
    result: &GroebnerResult,
    strategy: DivisorStrategy,
    cap: usize,
) -> Result<SpairOutcome, VerifyError> {
    let n = result.basis.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();

    #[cfg(feature = "parallel")]
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| check_pair(result, i, j, strategy, cap))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = pairs
        .iter()
        .map(|&(i, j)| check_pair(result, i, j, strategy, cap))
        .collect();

    let mut failures = Vec::new();
    for r in results {
        if let Some(f) = r? {
            failures.push(f);
        }
    }
    Ok(SpairOutcome {
        pairs_checked: pairs.len(),
        failures,
    })
}

/// Sequential S-pair check regardless of the `parallel` feature; used by
/// the bench suite for a like-for-like comparison.
pub fn spair_check_sequential(
    result: &GroebnerResult,
    strategy: DivisorStrategy,
    cap: usize,
) -> Result<SpairOutcome, VerifyError> {
    let n = result.basis.len();
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            pairs_checked += 1;
            if let Some(f) = check_pair(result, i, j, strategy, cap)? {
                failures.push(f);
            }
        }
    }
    Ok(SpairOutcome {
        pairs_checked,
        failures,
    })
}

/// Exhaustive grevlex minimum over all x-representations of `b`: searches
/// every exponent vector of sum `deg b` and keeps the smallest whose
/// pi-value is `b`.
pub fn brute_min_rep(pres: &Presentation, b: &Point) -> Result<Monomial, VerifyError> {
    let no_rep = || VerifyError::NoRepresentation { point: b.clone() };
    if !b.is_nonnegative() {
        return Err(no_rep());
    }
    let t = pres.degree(b).map_err(|_| no_rep())?;
    let mut best: Option<Monomial> = None;
    for mu in compositions(pres.c(), t) {
        let m = Monomial::pure_x(mu, pres.d());
        if &pres.pi_value(&m) == b {
            best = match best {
                Some(cur) if cur < m => Some(cur),
                _ => Some(m),
            };
        }
    }
    best.ok_or_else(no_rep)
}

/// Caps for the seeded random instance generator.
#[derive(Clone, Copy, Debug)]
pub struct InstanceCaps {
    pub max_d: usize,
    pub max_c: usize,
    pub max_alpha: i64,
    pub max_ba_size: usize,
}

impl Default for InstanceCaps {
    fn default() -> Self {
        InstanceCaps {
            max_d: 3,
            max_c: 4,
            max_alpha: 6,
            max_ba_size: 200,
        }
    }
}

/// Samples a random valid instance: `c` distinct lattice points with entry
/// sum alpha, axis points excluded. Returns `None` when the draw violates
/// the `B_A` size cap, so callers can re-draw; reproducible given the RNG.
pub fn random_instance<R: Rng>(rng: &mut R, caps: &InstanceCaps) -> Option<Presentation> {
    let d = rng.gen_range(1..=caps.max_d);
    let alpha = rng.gen_range(1..=caps.max_alpha);
    let mut pool: Vec<Vec<i64>> = compositions(d, alpha as u32)
        .into_iter()
        .map(|v| v.into_iter().map(|e| e as i64).collect::<Vec<i64>>())
        .filter(|v| !v.iter().any(|&e| e == alpha)) // drop axis points
        .collect();
    pool.shuffle(rng);
    let c = rng.gen_range(0..=caps.max_c.min(pool.len()));
    pool.truncate(c);
    let raw = RawInstance {
        d,
        alpha,
        generators: pool,
    };
    let (pres, _) = Presentation::validate(&raw).ok()?;
    let (table, _) = crate::enumerate::enumerate_ba(&pres).ok()?;
    if table.len() > caps.max_ba_size {
        return None;
    }
    Some(pres)
}
