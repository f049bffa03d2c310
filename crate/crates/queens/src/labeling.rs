//! The induced sum/difference calculus and (modular) queen verification.
//!
//! For an arc `(u, v)` the induced sum is `u + v` and the induced difference
//! is `v - u`. A digraph whose vertices are identified with its labels is
//! queen-valid when all induced sums are pairwise distinct and all induced
//! differences are pairwise distinct; for the modular variant both conditions
//! are taken modulo the order. Queen-valid 1-regular digraphs are exactly the
//! solutions of the corresponding n-queens problem, one queen per arc at
//! `(u, v)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::digraph::{Arc, LabeledDigraph};
use crate::error::{Error, Result};

/// A condition that a verification can report as violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Sum,
    Diff,
    SumMod,
    DiffMod,
    Bijectivity,
    Regularity,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Condition::Sum => "sum",
            Condition::Diff => "diff",
            Condition::SumMod => "sum-mod",
            Condition::DiffMod => "diff-mod",
            Condition::Bijectivity => "bijectivity",
            Condition::Regularity => "regularity",
        };
        f.write_str(tag)
    }
}

/// A single violated condition, with the lexicographically smallest pair of
/// colliding arcs when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: Condition,
    pub witness: Option<(Arc, Arc)>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            Some((a, b)) => write!(
                f,
                "{}: ({}, {}) collides with ({}, {})",
                self.condition, a.0, a.1, b.0, b.1
            ),
            None => write!(f, "{}", self.condition),
        }
    }
}

/// Outcome of a verification: valid exactly when no condition failed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn push_collisions(
        &mut self,
        condition: Condition,
        groups: BTreeMap<i64, Vec<Arc>>,
    ) {
        for arcs in groups.values() {
            if arcs.len() >= 2 {
                self.failures.push(Failure {
                    condition,
                    witness: Some((arcs[0], arcs[1])),
                });
            }
        }
    }
}

fn arc_sum((u, v): Arc) -> i64 {
    u as i64 + v as i64
}

fn arc_diff((u, v): Arc) -> i64 {
    v as i64 - u as i64
}

/// Multiset `{u + v : (u, v) arc}`, sorted ascending. Every element lies in
/// `[2, 2n]`, and for a 1-regular digraph the total is `n(n + 1)`.
pub fn sum_multiset(d: &LabeledDigraph) -> Vec<i64> {
    let mut sums: Vec<i64> = d.arcs().iter().map(|&a| arc_sum(a)).collect();
    sums.sort_unstable();
    sums
}

/// Multiset `{v - u : (u, v) arc}`, sorted ascending. Every element lies in
/// `[-(n-1), n-1]`, and for a 1-regular digraph the total is 0.
pub fn diff_multiset(d: &LabeledDigraph) -> Vec<i64> {
    let mut diffs: Vec<i64> = d.arcs().iter().map(|&a| arc_diff(a)).collect();
    diffs.sort_unstable();
    diffs
}

fn group_by<F: Fn(Arc) -> i64>(d: &LabeledDigraph, key: F) -> BTreeMap<i64, Vec<Arc>> {
    let mut groups: BTreeMap<i64, Vec<Arc>> = BTreeMap::new();
    for &arc in d.arcs() {
        groups.entry(key(arc)).or_default().push(arc);
    }
    groups
}

/// Checks the queen-labeling conditions: induced sums pairwise distinct and
/// induced differences pairwise distinct over all arc pairs.
pub fn verify_queen(d: &LabeledDigraph) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.push_collisions(Condition::Sum, group_by(d, arc_sum));
    report.push_collisions(Condition::Diff, group_by(d, arc_diff));
    report
}

/// Checks the modular queen-labeling conditions: sums and differences
/// pairwise distinct modulo `n`, with residues canonicalized to `[0, n-1]`.
///
/// A digraph with more arcs than vertices cannot satisfy either condition,
/// and the pigeonhole collisions show up as ordinary failures.
pub fn verify_modular_queen(d: &LabeledDigraph) -> VerificationReport {
    let n = d.n() as i64;
    let mut report = VerificationReport::default();
    report.push_collisions(Condition::SumMod, group_by(d, |a| arc_sum(a).rem_euclid(n)));
    report.push_collisions(Condition::DiffMod, group_by(d, |a| arc_diff(a).rem_euclid(n)));
    report
}

/// True iff the sum total equals `n(n + 1)` and the difference total is 0.
/// Requires a 1-regular digraph, where both identities always hold.
pub fn sigma_identity_check(d: &LabeledDigraph) -> Result<bool> {
    d.one_regular_successors()?;
    let n = d.n() as i64;
    let sum_total: i64 = sum_multiset(d).iter().sum();
    let diff_total: i64 = diff_multiset(d).iter().sum();
    Ok(sum_total == n * (n + 1) && diff_total == 0)
}

/// A set of queen positions on an n-by-n board, rows and columns in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placement {
    n: usize,
    queens: Vec<(usize, usize)>,
}

impl Placement {
    pub fn new(n: usize, queens: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut sorted: Vec<(usize, usize)> = queens.into_iter().collect();
        sorted.sort_unstable();
        for &(row, col) in &sorted {
            if row == 0 || col == 0 || row > n || col > n {
                return Err(Error::PositionOutOfRange { row, col, n });
            }
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateQueen {
                    row: w[0].0,
                    col: w[0].1,
                });
            }
        }
        Ok(Self { n, queens: sorted })
    }

    /// One queen per row: row `i` holds a queen in column `cols[i - 1]`.
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        Self::new(
            cols.len(),
            cols.iter().enumerate().map(|(i, &c)| (i + 1, c)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Queen positions, sorted lexicographically.
    pub fn queens(&self) -> &[(usize, usize)] {
        &self.queens
    }
}

/// Verifies a placement as a board for the n-queens problem (or its modular
/// variant): the labeling conditions on the arcs `(row, col)`, plus
/// regularity failures for repeated rows or columns and a bijectivity
/// failure when the number of queens differs from `n`.
pub fn verify_board(p: &Placement, modular: bool) -> VerificationReport {
    let d = LabeledDigraph::from_arcs(p.n(), p.queens().iter().copied())
        .expect("placement positions are valid arcs");
    let mut report = if modular {
        verify_modular_queen(&d)
    } else {
        verify_queen(&d)
    };
    report.push_collisions(Condition::Regularity, group_by(&d, |(u, _)| u as i64));
    report.push_collisions(Condition::Regularity, group_by(&d, |(_, v)| v as i64));
    if p.queens().len() != p.n() {
        report.failures.push(Failure {
            condition: Condition::Bijectivity,
            witness: None,
        });
    }
    report
}

/// One queen per arc, at `(u, v)`. For a 1-regular digraph this is a
/// permutation matrix.
pub fn to_placement(d: &LabeledDigraph) -> Placement {
    Placement {
        n: d.n(),
        queens: d.arcs().to_vec(),
    }
}

/// One arc per queen, at `(row, col)`. Rows and columns must each be
/// distinct so that a full placement yields a 1-regular digraph.
pub fn from_placement(p: &Placement) -> Result<LabeledDigraph> {
    let mut row_seen = vec![false; p.n() + 1];
    let mut col_seen = vec![false; p.n() + 1];
    for &(row, col) in p.queens() {
        if row_seen[row] {
            return Err(Error::RepeatedRow { row });
        }
        if col_seen[col] {
            return Err(Error::RepeatedColumn { col });
        }
        row_seen[row] = true;
        col_seen[col] = true;
    }
    LabeledDigraph::from_arcs(p.n(), p.queens().iter().copied())
}
