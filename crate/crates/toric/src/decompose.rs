//! Equivalence classes of `B_A` mod `alpha*Z^d`, shift vectors, the induced
//! monomial ideals of the direct-sum decomposition of the semigroup ring,
//! the pair monomials `N2`, and the ring classification flags.

use std::collections::BTreeSet;
use std::collections::HashMap;

use serde::Serialize;

use crate::core::{class_cmp, Monomial, Point, Presentation};
use crate::enumerate::{enumerate_ba, member_b, BATable, EnumerateError};

/// One equivalence class of `B_A` mod `alpha*Z^d`.
///
/// `members` are sorted ascending by the in-class order (last nonzero entry
/// of the difference); `h` is the componentwise minimum; `ideal_gens[i]` is
/// the pure-y monomial `y^((members[i] - h)/alpha)` generating the induced
/// monomial ideal.
#[derive(Clone, Debug, Serialize)]
pub struct EquivClass {
    pub members: Vec<Point>,
    pub h: Point,
    pub ideal_gens: Vec<Monomial>,
}

impl EquivClass {
    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    /// The induced ideal is the whole ring `T` iff the class is a
    /// singleton (its only generator is then the unit monomial).
    pub fn ideal_is_unit(&self) -> bool {
        self.ideal_gens.iter().any(|g| g.is_unit())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub e: usize,
    pub classes: Vec<EquivClass>,
    pub is_cohen_macaulay: bool,
    pub is_buchsbaum: bool,
    pub thm46_condition: bool,
    pub reduction_number: u32,
}

/// Partitions the table into equivalence classes, assigns class ids back
/// into the table, and returns the classes in a deterministic order
/// (grevlex of the minimal member's `m_b`).
pub fn equivalence_classes(table: &mut BATable, pres: &Presentation) -> Vec<EquivClass> {
    let alpha = pres.alpha();
    let mut groups: HashMap<Vec<i64>, Vec<Point>> = HashMap::new();
    for entry in table.entries() {
        groups
            .entry(entry.value.residues(alpha))
            .or_default()
            .push(entry.value.clone());
    }

    let mut classes: Vec<EquivClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort_by(|a, b| {
                class_cmp(a, b, alpha).expect("members of one residue group are congruent")
            });
            let d = pres.d();
            let h = Point(
                (0..d)
                    .map(|k| members.iter().map(|m| m[k]).min().unwrap())
                    .collect(),
            );
            let ideal_gens = members
                .iter()
                .map(|m| {
                    pres.y_monomial_of(&m.checked_sub(&h))
                        .expect("member minus shift lies in the axis monoid")
                })
                .collect();
            EquivClass {
                members,
                h,
                ideal_gens,
            }
        })
        .collect();

    classes.sort_by(|a, b| {
        let ma = table.min_rep(&a.members[0], pres).unwrap();
        let mb = table.min_rep(&b.members[0], pres).unwrap();
        ma.cmp(&mb)
    });

    for (id, class) in classes.iter().enumerate() {
        for m in &class.members {
            table.set_class_id(m, id);
        }
    }
    classes
}

/// The pair monomials: for each class `{b_1 < ... < b_t}` with `t >= 2` and
/// each `i < j`, the monomial `m_{b_j} * y^((b_i v b_j - b_j)/alpha)`.
/// Singleton classes contribute nothing.
pub fn n2_set(
    classes: &[EquivClass],
    table: &BATable,
    pres: &Presentation,
) -> BTreeSet<Monomial> {
    let mut out = BTreeSet::new();
    for class in classes {
        let t = class.members.len();
        for i in 0..t {
            for j in (i + 1)..t {
                let bi = &class.members[i];
                let bj = &class.members[j];
                let join = bi.join(bj);
                let shift = pres
                    .y_monomial_of(&join.checked_sub(bj))
                    .expect("join minus member lies in the axis monoid");
                let m_bj = table.min_rep(bj, pres).unwrap();
                out.insert(m_bj.mul(&shift));
            }
        }
    }
    out
}

fn classification(
    classes: &[EquivClass],
    table: &BATable,
    pres: &Presentation,
) -> (bool, bool, bool) {
    let is_cohen_macaulay = classes.iter().all(EquivClass::is_singleton);

    let thm46_condition = classes.iter().all(|c| {
        c.is_singleton() || c.ideal_gens.iter().all(|g| g.total_degree() == 1)
    });

    let unit_vectors: BTreeSet<Monomial> = (0..pres.d())
        .map(|k| {
            let mut nu = vec![0; pres.d()];
            nu[k] = 1;
            Monomial::pure_y(pres.c(), nu)
        })
        .collect();
    let is_buchsbaum = classes.iter().all(|c| {
        if c.is_singleton() {
            return true;
        }
        let gens: BTreeSet<Monomial> = c.ideal_gens.iter().cloned().collect();
        if gens != unit_vectors {
            return false;
        }
        // Shift plus every Hilbert basis element must land in B.
        let hilb = pres
            .generators()
            .iter()
            .cloned()
            .chain((0..pres.d()).map(|k| pres.axis_generator(k)));
        for a in hilb {
            if member_b(&c.h.checked_add(&a), table, pres).is_none() {
                return false;
            }
        }
        true
    });

    (is_cohen_macaulay, is_buchsbaum, thm46_condition)
}

/// Builds the full decomposition report from scratch.
pub fn decomposition_report(pres: &Presentation) -> Result<DecompositionReport, EnumerateError> {
    let (mut table, _) = enumerate_ba(pres)?;
    let classes = equivalence_classes(&mut table, pres);
    Ok(report_from_parts(classes, &table, pres))
}

/// Assembles the report when the table and classes are already computed.
pub fn report_from_parts(
    classes: Vec<EquivClass>,
    table: &BATable,
    pres: &Presentation,
) -> DecompositionReport {
    let (is_cohen_macaulay, is_buchsbaum, thm46_condition) =
        classification(&classes, table, pres);
    DecompositionReport {
        e: classes.len(),
        classes,
        is_cohen_macaulay,
        is_buchsbaum,
        thm46_condition,
        reduction_number: table.reduction_number(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::RawInstance;

    fn pres(d: usize, alpha: i64, gens: &[&[i64]]) -> Presentation {
        let raw = RawInstance {
            d,
            alpha,
            generators: gens.iter().map(|g| g.to_vec()).collect(),
        };
        Presentation::validate(&raw).unwrap().0
    }

    fn d3a4() -> Presentation {
        pres(3, 4, &[&[0, 1, 3], &[2, 0, 2], &[3, 1, 0]])
    }

    fn classes_of(p: &Presentation) -> (BATable, Vec<EquivClass>) {
        let (mut table, _) = enumerate_ba(p).unwrap();
        let classes = equivalence_classes(&mut table, p);
        (table, classes)
    }

    #[test]
    fn fixture_class_structure() {
        let p = d3a4();
        let (_, classes) = classes_of(&p);
        let multi: Vec<&EquivClass> = classes.iter().filter(|c| !c.is_singleton()).collect();
        assert_eq!(multi.len(), 8);
        // Gamma_8 = {(6,2,0), (2,2,8)} in that order
        assert!(multi.iter().any(|c| {
            c.members == vec![Point(vec![6, 2, 0]), Point(vec![2, 2, 8])]
        }));
        // partition property
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn fixture_n2_matches_expected() {
        let p = d3a4();
        let (mut table, _) = enumerate_ba(&p).unwrap();
        let classes = equivalence_classes(&mut table, &p);
        let n2 = n2_set(&classes, &table, &p);
        let expect = |mu: &[u32], nu: &[u32]| Monomial {
            mu: mu.to_vec(),
            nu: nu.to_vec(),
        };
        let expected: BTreeSet<Monomial> = [
            expect(&[2, 0, 1], &[2, 0, 0]), // x1^2*x3*y1^2
            expect(&[3, 0, 1], &[2, 0, 0]), // x1^3*x3*y1^2
            expect(&[3, 0, 0], &[2, 0, 0]), // x1^3*y1^2
            expect(&[2, 0, 0], &[2, 0, 0]), // x1^2*y1^2
            expect(&[2, 1, 1], &[1, 0, 0]), // x1^2*x2*x3*y1
            expect(&[3, 1, 1], &[1, 0, 0]), // x1^3*x2*x3*y1
            expect(&[3, 1, 0], &[1, 0, 0]), // x1^3*x2*y1
            expect(&[2, 1, 0], &[1, 0, 0]), // x1^2*x2*y1
        ]
        .into_iter()
        .collect();
        assert_eq!(n2, expected);
    }

    #[test]
    fn class_and_pair_d2a12() {
        let p = pres(2, 12, &[&[11, 1], &[9, 3], &[4, 8], &[1, 11]]);
        let (table, classes) = classes_of(&p);
        let class = classes
            .iter()
            .find(|c| c.members.contains(&Point(vec![18, 6])))
            .unwrap();
        assert!(class.members.contains(&Point(vec![6, 30])));
        let n2 = n2_set(std::slice::from_ref(class), &table, &p);
        // x3*x4^2*y1
        assert!(n2.contains(&Monomial {
            mu: vec![0, 0, 1, 2],
            nu: vec![1, 0],
        }));
    }

    #[test]
    fn degree_six_pair_d2a12() {
        let p = pres(2, 12, &[&[11, 1], &[9, 3], &[4, 8], &[1, 11]]);
        let (table, classes) = classes_of(&p);
        let class = classes
            .iter()
            .find(|c| c.members.contains(&Point(vec![31, 5])))
            .unwrap();
        assert_eq!(
            class.members,
            vec![
                Point(vec![31, 5]),
                Point(vec![19, 17]),
                Point(vec![7, 41])
            ]
        );
        let n2 = n2_set(std::slice::from_ref(class), &table, &p);
        // x3*x4^3*y1^2, total degree 6
        let m = Monomial {
            mu: vec![0, 0, 1, 3],
            nu: vec![2, 0],
        };
        assert!(n2.contains(&m));
        assert_eq!(m.total_degree(), 6);
    }

    #[test]
    fn report_d3a3() {
        let p = pres(
            3,
            3,
            &[
                &[2, 0, 1],
                &[1, 2, 0],
                &[1, 1, 1],
                &[1, 0, 2],
                &[0, 2, 1],
                &[0, 1, 2],
            ],
        );
        let report = decomposition_report(&p).unwrap();
        assert_eq!(report.e, 9);
        let multi: Vec<&EquivClass> =
            report.classes.iter().filter(|c| !c.is_singleton()).collect();
        assert_eq!(multi.len(), 1);
        let gens: BTreeSet<Monomial> = multi[0].ideal_gens.iter().cloned().collect();
        let expected: BTreeSet<Monomial> = [
            Monomial::pure_y(6, vec![0, 1, 0]),
            Monomial::pure_y(6, vec![0, 0, 1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(gens, expected);
        assert!(report.thm46_condition);
        assert!(!report.is_cohen_macaulay);
        assert!(!report.is_buchsbaum);
    }

    #[test]
    fn c_zero_report() {
        let p = pres(2, 3, &[]);
        let report = decomposition_report(&p).unwrap();
        assert_eq!(report.e, 1);
        assert!(report.is_cohen_macaulay);
        assert!(report.is_buchsbaum);
        assert!(report.thm46_condition);
        assert_eq!(report.reduction_number, 0);
        assert!(report.classes[0].ideal_is_unit());
    }

    #[test]
    fn shift_and_minimal_generation() {
        let p = d3a4();
        let (_, classes) = classes_of(&p);
        for c in &classes {
            for (m, g) in c.members.iter().zip(&c.ideal_gens) {
                let diff = m.checked_sub(&c.h);
                assert!(diff.in_axis_monoid(4));
                assert_eq!(p.pi_value(g), diff);
            }
            // no generator divides another
            for (i, a) in c.ideal_gens.iter().enumerate() {
                for (j, b) in c.ideal_gens.iter().enumerate() {
                    if i != j {
                        assert!(!a.divides(b), "{} divides {}", a, b);
                    }
                }
            }
            // each coordinate minimum is attained
            for k in 0..3 {
                assert!(c.members.iter().any(|m| m[k] == c.h[k]));
            }
        }
    }
}
