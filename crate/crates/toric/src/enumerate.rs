//! Layered enumeration of `B_A`.
//!
//! `B_A` is the set of monoid elements from which no nonzero element of the
//! axis submonoid `A = alpha*Z+^d` can be subtracted inside `B`. The
//! enumeration proceeds degree by degree: every degree-(t+1) candidate is a
//! generator added to a degree-t entry, examined in a prescribed order so
//! that the first representation reaching a value is its grevlex-minimal
//! one. Accepted representations become table entries carrying `m_b`;
//! rejected ones are collected as the monomial set `N1'`.
//!
//! The examination order is semantically significant, so this module is
//! single-threaded by contract.

use std::collections::HashMap;

use thiserror::Error;

use crate::core::{Monomial, Point, Presentation};

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("enumeration did not terminate within the degree bound {bound}; this indicates an internal bug")]
    TerminationBoundExceeded { bound: u32 },
    #[error("point {point} is not an element of B_A")]
    NotInBA { point: Point },
}

/// One element `b` of `B_A` together with its grevlex-minimal
/// x-representation `m_b`.
#[derive(Clone, Debug)]
pub struct BAEntry {
    pub value: Point,
    /// x-exponents of `m_b`.
    pub mu: Vec<u32>,
    pub degree: u32,
    /// Equivalence-class index, assigned by the decomposition stage.
    pub class_id: Option<usize>,
}

/// The complete layered table of `B_A`.
#[derive(Clone, Debug)]
pub struct BATable {
    layers: Vec<Vec<BAEntry>>,
    index: HashMap<Point, (usize, usize)>,
}

impl BATable {
    fn new() -> Self {
        BATable {
            layers: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn push(&mut self, entry: BAEntry) {
        let t = entry.degree as usize;
        while self.layers.len() <= t {
            self.layers.push(Vec::new());
        }
        let pos = self.layers[t].len();
        self.index.insert(entry.value.clone(), (t, pos));
        self.layers[t].push(entry);
    }

    pub fn layers(&self) -> &[Vec<BAEntry>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BAEntry> {
        self.layers.iter().flatten()
    }

    pub fn get(&self, value: &Point) -> Option<&BAEntry> {
        self.index.get(value).map(|&(t, i)| &self.layers[t][i])
    }

    pub fn contains(&self, value: &Point) -> bool {
        self.index.contains_key(value)
    }

    pub(crate) fn set_class_id(&mut self, value: &Point, class_id: usize) {
        let (t, i) = self.index[value];
        self.layers[t][i].class_id = Some(class_id);
    }

    /// Max degree occurring in `B_A`; the reduction number of the ring.
    pub fn reduction_number(&self) -> u32 {
        (self.layers.len().saturating_sub(1)) as u32
    }

    /// The stored grevlex-minimal representation `m_b` for `b in B_A`.
    pub fn min_rep(&self, b: &Point, pres: &Presentation) -> Result<Monomial, EnumerateError> {
        self.get(b)
            .map(|e| Monomial::pure_x(e.mu.clone(), pres.d()))
            .ok_or_else(|| EnumerateError::NotInBA { point: b.clone() })
    }
}

/// One rejected representation: a pure-x monomial together with the layer
/// of the sweep that produced it.
#[derive(Clone, Debug)]
pub struct N1Entry {
    pub monomial: Monomial,
    pub layer: u32,
}

/// The set `N1'` of rejected representations, in examination order.
#[derive(Clone, Debug, Default)]
pub struct N1PrimeSet {
    pub entries: Vec<N1Entry>,
}

impl N1PrimeSet {
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.entries.iter().map(|e| &e.monomial)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.entries.iter().any(|e| &e.monomial == m)
    }
}

/// Tests `v in B` via `B = B_A + A`: true iff some table entry `b` has
/// `v - b in alpha*Z+^d`. Returns the witness pair `(b, v - b)`.
///
/// The table must be complete for all degrees up to `deg v`.
pub fn member_b(v: &Point, table: &BATable, pres: &Presentation) -> Option<(Point, Point)> {
    if !v.is_nonnegative() || pres.degree(v).is_err() {
        return None;
    }
    member_b_within(v, table, pres, table.reduction_number())
}

/// Membership query restricted to table layers of degree at most
/// `complete_through`; the incremental enumeration uses this to guarantee
/// it only consults layers that are already final.
fn member_b_within(
    v: &Point,
    table: &BATable,
    pres: &Presentation,
    complete_through: u32,
) -> Option<(Point, Point)> {
    let deg = pres.degree(v).ok()?;
    assert!(
        deg <= complete_through,
        "membership query at degree {} but table is only complete through degree {}",
        deg,
        complete_through
    );
    for layer in table.layers().iter().take(deg as usize + 1) {
        for entry in layer {
            let diff = v.checked_sub(&entry.value);
            if diff.in_axis_monoid(pres.alpha()) {
                return Some((entry.value.clone(), diff));
            }
        }
    }
    None
}

/// Runs the layered sweep. For each layer-t entry `sigma` (in list order)
/// the candidates `a_j + sigma` are examined for `j` descending from the
/// smallest generator index occurring in `sigma` (taken as `c` for the zero
/// element). A candidate enters layer t+1 iff its value is new and lies in
/// `B_A`; otherwise its monomial joins `N1'`.
pub fn enumerate_ba(pres: &Presentation) -> Result<(BATable, N1PrimeSet), EnumerateError> {
    let c = pres.c();
    let d = pres.d();
    let mut table = BATable::new();
    let mut n1 = N1PrimeSet::default();

    table.push(BAEntry {
        value: Point::zero(d),
        mu: vec![0; c],
        degree: 0,
        class_id: None,
    });
    if c == 0 {
        return Ok((table, n1));
    }

    let bound = (c as u32)
        .checked_mul(u32::try_from(pres.alpha()).expect("alpha exceeds u32"))
        .expect("degree bound overflow");

    // Values of every representation examined so far, across all layers.
    let mut seen: HashMap<Point, ()> = HashMap::new();
    seen.insert(Point::zero(d), ());

    let mut t: u32 = 0;
    loop {
        if t > bound {
            return Err(EnumerateError::TerminationBoundExceeded { bound });
        }
        let current: Vec<(Point, Vec<u32>)> = match table.layers().get(t as usize) {
            Some(layer) => layer
                .iter()
                .map(|e| (e.value.clone(), e.mu.clone()))
                .collect(),
            None => break,
        };
        if current.is_empty() {
            break;
        }
        let mut produced_any = false;
        for (value, mu) in &current {
            // Smallest 1-based generator index occurring in the
            // representation; c for the zero element.
            let i_sigma = mu.iter().position(|&e| e > 0).map_or(c, |i| i + 1);
            for j in (0..i_sigma).rev() {
                let cand_value = value.checked_add(pres.generator(j));
                let mut cand_mu = mu.clone();
                cand_mu[j] += 1;
                let fresh = !seen.contains_key(&cand_value);
                if fresh {
                    seen.insert(cand_value.clone(), ());
                }
                let accept = fresh && in_ba(&cand_value, &table, pres, t);
                if accept {
                    table.push(BAEntry {
                        value: cand_value,
                        mu: cand_mu,
                        degree: t + 1,
                        class_id: None,
                    });
                    produced_any = true;
                } else {
                    n1.entries.push(N1Entry {
                        monomial: Monomial::pure_x(cand_mu, d),
                        layer: t + 1,
                    });
                }
            }
        }
        if !produced_any {
            break;
        }
        t += 1;
    }
    Ok((table, n1))
}

/// `v in B_A` iff `v - alpha*u_k` lies outside `B` for every axis
/// direction `k`. `v` has degree t+1; the subtracted points have degree t,
/// for which the table is complete.
fn in_ba(v: &Point, table: &BATable, pres: &Presentation, complete_through: u32) -> bool {
    for k in 0..pres.d() {
        let w = v.checked_sub(&pres.axis_generator(k));
        if !w.is_nonnegative() {
            continue;
        }
        if member_b_within(&w, table, pres, complete_through).is_some() {
            return false;
        }
    }
    true
}
