//! The product of a digraph with a family of same-order digraphs.
//!
//! Given a digraph `D`, a family of digraphs on a common vertex set `[1, n]`
//! and a map `h` assigning a family member to each arc of `D`, the product
//! has vertex set `V(D) x [1, n]` and an arc `((a, i), (b, j))` exactly when
//! `(a, b)` is an arc of `D` and `(i, j)` is an arc of `h(a, b)`. The vertex
//! `(a, i)` is materialized only through its integer label `n(a - 1) + i`, so
//! the product is again a [`LabeledDigraph`] and induced sums and differences
//! read `n(a + b - 2) + i + j` and `n(b - a) + j - i`.
//!
//! When every family member is queen-valid, the product is queen-valid
//! provided the sum and difference side conditions hold (see
//! [`check_sum_condition`] and [`check_diff_condition`]). The modular
//! analogue is *not* automatic: modular validity of all factors does not by
//! itself prevent wrap-around collisions between different family members,
//! which is why [`product_preserves_modular`] re-verifies the product instead
//! of trusting the hypotheses. Constant assignments (the Kronecker product)
//! are always safe in the modular case.

use std::collections::{BTreeMap, BTreeSet};

use crate::digraph::{Arc, CycleType, LabeledDigraph};
use crate::error::{Error, Result};
use crate::labeling::{verify_modular_queen, verify_queen, Condition, Failure, VerificationReport};

/// A family of same-order digraphs plus a total map from the arcs of a base
/// digraph into the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAssignment {
    gamma: Vec<LabeledDigraph>,
    assign: BTreeMap<Arc, usize>,
}

impl FamilyAssignment {
    /// Builds an assignment from explicit `(arc, family index)` pairs.
    pub fn new(
        gamma: Vec<LabeledDigraph>,
        assignments: impl IntoIterator<Item = (Arc, usize)>,
    ) -> Result<Self> {
        let order = match gamma.first() {
            Some(first) => first.n(),
            None => return Err(Error::EmptyFamily),
        };
        for (index, member) in gamma.iter().enumerate() {
            if member.n() != order {
                return Err(Error::FamilyOrderMismatch {
                    index,
                    expected: order,
                    found: member.n(),
                });
            }
        }
        let mut assign = BTreeMap::new();
        for (arc, index) in assignments {
            if index >= gamma.len() {
                return Err(Error::AssignmentIndexOutOfRange {
                    index,
                    len: gamma.len(),
                });
            }
            assign.insert(arc, index);
        }
        Ok(Self { gamma, assign })
    }

    /// Assigns the single member to every arc of `d` (Kronecker product).
    pub fn constant(member: LabeledDigraph, d: &LabeledDigraph) -> Self {
        let assign = d.arcs().iter().map(|&arc| (arc, 0)).collect();
        Self {
            gamma: vec![member],
            assign,
        }
    }

    /// Builds an assignment from indices aligned with `d.arcs()`.
    pub fn from_indices(
        gamma: Vec<LabeledDigraph>,
        d: &LabeledDigraph,
        indices: &[usize],
    ) -> Result<Self> {
        if indices.len() != d.arcs().len() {
            return Err(Error::AssignmentLengthMismatch {
                expected: d.arcs().len(),
                found: indices.len(),
            });
        }
        Self::new(
            gamma,
            d.arcs().iter().copied().zip(indices.iter().copied()),
        )
    }

    pub fn family(&self) -> &[LabeledDigraph] {
        &self.gamma
    }

    /// Common order of the family members.
    pub fn member_order(&self) -> usize {
        self.gamma[0].n()
    }

    pub fn index_for(&self, arc: Arc) -> Option<usize> {
        self.assign.get(&arc).copied()
    }

    pub fn member_for(&self, arc: Arc) -> Option<&LabeledDigraph> {
        self.index_for(arc).map(|i| &self.gamma[i])
    }

    /// Checks that the map covers exactly the arcs of `d`.
    fn validate_for(&self, d: &LabeledDigraph) -> Result<()> {
        for &arc in d.arcs() {
            if !self.assign.contains_key(&arc) {
                return Err(Error::UnassignedArc { u: arc.0, v: arc.1 });
            }
        }
        for &arc in self.assign.keys() {
            if !d.contains_arc(arc) {
                return Err(Error::UnknownAssignmentArc { u: arc.0, v: arc.1 });
            }
        }
        Ok(())
    }
}

/// Computes the product of `d` with the assigned family.
///
/// The result has order `d.n() * n`; the vertex `(a, i)` carries the label
/// `n(a - 1) + i`.
pub fn oh_product(d: &LabeledDigraph, fa: &FamilyAssignment) -> Result<LabeledDigraph> {
    fa.validate_for(d)?;
    let n = fa.member_order();
    let mut arcs = Vec::new();
    for &(a, b) in d.arcs() {
        let member = fa.member_for((a, b)).expect("assignment is total");
        for &(i, j) in member.arcs() {
            arcs.push((n * (a - 1) + i, n * (b - 1) + j));
        }
    }
    arcs.sort_unstable();
    Ok(LabeledDigraph::from_parts(d.n() * n, arcs))
}

/// The Kronecker product: the product under a constant assignment.
pub fn direct_product(d1: &LabeledDigraph, d2: &LabeledDigraph) -> LabeledDigraph {
    let fa = FamilyAssignment::constant(d2.clone(), d1);
    oh_product(d1, &fa).expect("constant assignment is total")
}

fn shifted_set_intersects(left: &BTreeSet<i64>, shift: i64, right: &BTreeSet<i64>) -> bool {
    left.iter().any(|&x| right.contains(&(x - shift)))
}

fn check_condition<F: Fn(Arc) -> i64>(
    d: &LabeledDigraph,
    fa: &FamilyAssignment,
    key: F,
    condition: Condition,
) -> Result<VerificationReport> {
    fa.validate_for(d)?;
    let n = fa.member_order() as i64;
    let values: Vec<BTreeSet<i64>> = fa
        .gamma
        .iter()
        .map(|f| f.arcs().iter().map(|&a| key(a)).collect())
        .collect();
    let mut report = VerificationReport::default();
    // Ordered pairs (e, e') with key(e) = key(e') - 1: the value set of the
    // member at e, shifted down by n, must avoid the value set at e'.
    for &e in d.arcs() {
        for &e2 in d.arcs() {
            if key(e) + 1 != key(e2) {
                continue;
            }
            let left = &values[fa.index_for(e).expect("total")];
            let right = &values[fa.index_for(e2).expect("total")];
            if shifted_set_intersects(left, n, right) {
                report.failures.push(Failure {
                    condition,
                    witness: Some((e, e2)),
                });
            }
        }
    }
    Ok(report)
}

/// Checks, for every ordered pair of arcs `e`, `e'` of `d` with
/// `s(e) = s(e') - 1`, that the sum set of the member at `e` shifted down by
/// the member order is disjoint from the sum set of the member at `e'`.
pub fn check_sum_condition(
    d: &LabeledDigraph,
    fa: &FamilyAssignment,
) -> Result<VerificationReport> {
    check_condition(d, fa, |(u, v)| u as i64 + v as i64, Condition::Sum)
}

/// The analogous check over induced differences: for ordered pairs with
/// `d(e) = d(e') - 1`, the shifted difference set of the member at `e` must
/// avoid the difference set of the member at `e'`.
pub fn check_diff_condition(
    d: &LabeledDigraph,
    fa: &FamilyAssignment,
) -> Result<VerificationReport> {
    check_condition(d, fa, |(u, v)| v as i64 - u as i64, Condition::Diff)
}

/// True iff all members share a single sum set `I` and a single difference
/// set `J` with `(I - n)` disjoint from `I` and `(J - n)` disjoint from `J`.
/// Such a family satisfies both side conditions for every base digraph and
/// every assignment.
pub fn check_corollary_sets(gamma: &[LabeledDigraph], n: usize) -> bool {
    let Some(first) = gamma.first() else {
        return false;
    };
    if gamma.iter().any(|f| f.n() != n) {
        return false;
    }
    let sums: BTreeSet<i64> = first.arcs().iter().map(|&(u, v)| (u + v) as i64).collect();
    let diffs: BTreeSet<i64> = first
        .arcs()
        .iter()
        .map(|&(u, v)| v as i64 - u as i64)
        .collect();
    for f in &gamma[1..] {
        let s: BTreeSet<i64> = f.arcs().iter().map(|&(u, v)| (u + v) as i64).collect();
        let d: BTreeSet<i64> = f
            .arcs()
            .iter()
            .map(|&(u, v)| v as i64 - u as i64)
            .collect();
        if s != sums || d != diffs {
            return false;
        }
    }
    let n = n as i64;
    !shifted_set_intersects(&sums, n, &sums) && !shifted_set_intersects(&diffs, n, &diffs)
}

/// Everything a product check observed: factor verifications, side
/// conditions when applicable, and the re-verified product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    /// Verification of the base digraph under the relevant predicate.
    pub base: VerificationReport,
    /// Verification of each family member, in family order.
    pub members: Vec<VerificationReport>,
    /// Sum side condition; only populated by the standard check.
    pub sum_condition: Option<VerificationReport>,
    /// Difference side condition; only populated by the standard check.
    pub diff_condition: Option<VerificationReport>,
    pub product: LabeledDigraph,
    /// Verification of the product under the relevant predicate.
    pub product_report: VerificationReport,
}

impl ProductCheck {
    /// All factors passed their own verification.
    pub fn hypotheses_hold(&self) -> bool {
        self.base.is_valid() && self.members.iter().all(|r| r.is_valid())
    }

    /// Both side conditions passed (vacuously true for the modular check).
    pub fn conditions_hold(&self) -> bool {
        self.sum_condition.as_ref().is_none_or(|r| r.is_valid())
            && self.diff_condition.as_ref().is_none_or(|r| r.is_valid())
    }

    pub fn all_valid(&self) -> bool {
        self.hypotheses_hold() && self.conditions_hold() && self.product_report.is_valid()
    }
}

/// Runs the full standard product check: verifies every factor, both side
/// conditions, and then re-verifies the product itself rather than trusting
/// the hypotheses. Precondition violations appear as factor failures.
pub fn product_preserves_queen(
    d: &LabeledDigraph,
    fa: &FamilyAssignment,
) -> Result<ProductCheck> {
    let product = oh_product(d, fa)?;
    Ok(ProductCheck {
        base: verify_queen(d),
        members: fa.gamma.iter().map(verify_queen).collect(),
        sum_condition: Some(check_sum_condition(d, fa)?),
        diff_condition: Some(check_diff_condition(d, fa)?),
        product_report: verify_queen(&product),
        product,
    })
}

/// Runs the modular product check: verifies every factor modularly and
/// re-verifies the product modulo its order. No side conditions are checked;
/// the product report is authoritative, since modular factors alone do not
/// guarantee a modular product under mixed assignments.
pub fn product_preserves_modular(
    d: &LabeledDigraph,
    fa: &FamilyAssignment,
) -> Result<ProductCheck> {
    let product = oh_product(d, fa)?;
    Ok(ProductCheck {
        base: verify_modular_queen(d),
        members: fa.gamma.iter().map(verify_modular_queen).collect(),
        sum_condition: None,
        diff_condition: None,
        product_report: verify_modular_queen(&product),
        product,
    })
}

/// Cycle type of the direct product of two strong cycles:
/// `gcd(m, n)` copies of a cycle of length `lcm(m, n)`.
pub fn cycle_product_type(m: usize, n: usize) -> CycleType {
    let g = gcd(m, n);
    CycleType::uniform(g, m / g * n)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
