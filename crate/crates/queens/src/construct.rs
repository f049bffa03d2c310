//! Explicit solution families: strong cycles, the doubling digraph modulo p,
//! Jacobsthal digraphs with their cycle-structure partition, the union of
//! 3-cycles placement, and the composite construction that blends standard
//! m-solutions with a modular n-solution.
//!
//! Constructions stated over residues modulo `k` live on labels `[1, k]`,
//! with residue 0 mapped to the label `k`.

use std::collections::{BTreeMap, BTreeSet};

use crate::digraph::{CycleType, LabeledDigraph};
use crate::error::{Error, Result};
use crate::labeling::{from_placement, verify_modular_queen, verify_queen, Placement};
use crate::product::{direct_product, gcd};

/// The strong orientation of a cycle on `k` vertices, labeled cyclically:
/// arcs `(i, i + 1)` and `(k, 1)`. For `k = 1` this is a single loop.
pub fn strong_cycle(k: usize) -> LabeledDigraph {
    assert!(k >= 1, "cycle length must be at least 1");
    let arcs = (1..=k).map(|i| (i, if i == k { 1 } else { i + 1 }));
    LabeledDigraph::from_arcs(k, arcs).expect("cycle arcs are in range")
}

/// The doubling digraph modulo `p`: an arc from residue `x` to `2x mod p`,
/// shifted to labels `[1, p]`. For odd `p` this is 1-regular, and for primes
/// coprime to 6 its placement solves the modular p-queens problem.
pub fn polya_doubling(p: u64) -> LabeledDigraph {
    assert!(p >= 1, "modulus must be at least 1");
    let arcs = (0..p).map(|x| (x as usize + 1, (2 * x % p) as usize + 1));
    LabeledDigraph::from_arcs(p as usize, arcs).expect("residues are in range")
}

/// Deterministic trial division; intended for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Least `k >= 1` with `g^k = 1` modulo `modulus`.
pub fn multiplicative_order(g: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidModulus);
    }
    let g = g % modulus;
    if gcd(g as usize, modulus as usize) != 1 {
        return Err(Error::NotCoprime { g, modulus });
    }
    let mut cur = g;
    let mut k = 1;
    while cur != 1 {
        cur = ((cur as u128 * g as u128) % modulus as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// True iff the order of `g` modulo the prime `p` is `p - 1`.
pub fn is_primitive_root(g: u64, p: u64) -> Result<bool> {
    Ok(multiplicative_order(g, p)? == p - 1)
}

/// Classifies whether 2 is a primitive root of `p` for the two covered prime
/// forms: `p = 2q + 1` with `q` an odd prime (yes iff `q = 1 mod 4`) and
/// `p = 4q + 1` with `q` prime (always yes). Returns `None` when `p` is not
/// prime or fits neither form; in particular `p = 5` is not covered, since
/// `q = 2` breaks the first clause.
pub fn park_criterion(p: u64) -> Option<bool> {
    if !is_prime(p) {
        return None;
    }
    if (p - 1).is_multiple_of(2) {
        let q = (p - 1) / 2;
        if q % 2 == 1 && is_prime(q) {
            return Some(q % 4 == 1);
        }
    }
    if (p - 1).is_multiple_of(4) {
        let q = (p - 1) / 4;
        if is_prime(q) {
            return Some(true);
        }
    }
    None
}

/// Predicted cycle type of the doubling digraph for an odd prime `p`: one
/// loop plus `(p - 1) / d` cycles of length `d`, where `d` is the order of 2
/// modulo `p`. Specializes to `{p - 1, 1}` when 2 is a primitive root and to
/// `(p - 1) / k` cycles of length `k` plus the loop for `p = 2^k - 1`.
pub fn doubling_structure(p: u64) -> Result<CycleType> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime { p });
    }
    let d = multiplicative_order(2, p)? as usize;
    let copies = (p as usize - 1) / d;
    Ok(CycleType::uniform(copies, d).merged(&CycleType::new([1])))
}

/// The Jacobsthal number `a_i` with `a_1 = a_2 = 1` and
/// `a_i = a_{i-1} + 2 a_{i-2}`.
pub fn jacobsthal_number(i: u32) -> u128 {
    assert!(i >= 1, "the sequence starts at index 1");
    let (mut prev, mut cur) = (1u128, 1u128);
    for _ in 2..i {
        let next = cur + 2 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobsthal sequence reduced modulo `n`, starting at index 1.
fn jacobsthal_mod(n: u64) -> impl Iterator<Item = u64> {
    let mut prev = 1 % n;
    let mut cur = 1 % n;
    let mut index = 0u32;
    std::iter::from_fn(move || {
        index += 1;
        if index <= 2 {
            return Some(cur);
        }
        let next = (cur + 2 * prev) % n;
        prev = cur;
        cur = next;
        Some(cur)
    })
}

/// The digraph on `[1, n]` with an arc from `u` to `-2u + 2 mod n`
/// (residue 0 mapped to the label `n`). Requires odd `n`; the map is not a
/// bijection otherwise.
pub fn jacobsthal_digraph(n: usize) -> Result<LabeledDigraph> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder { n });
    }
    let m = n as i64;
    let arcs = (1..=n).map(|u| {
        let v = (-2 * u as i64 + 2).rem_euclid(m);
        (u, if v == 0 { n } else { v as usize })
    });
    LabeledDigraph::from_arcs(n, arcs)
}

/// The partition of `[1, n]` by minimal Jacobsthal index: `x` belongs to the
/// class `k` where `k` is the least `i` with `3 a_i x = 2 a_i (mod n)`. The
/// class sizes predict the cycle structure of [`jacobsthal_digraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    n: usize,
    classes: BTreeMap<usize, BTreeSet<usize>>,
}

impl ThetaPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &BTreeMap<usize, BTreeSet<usize>> {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.classes
            .iter()
            .find(|(_, members)| members.contains(&x))
            .map(|(&k, _)| k)
    }

    /// The predicted cycle type: `|class k| / k` cycles of length `k`.
    pub fn predicted_cycle_type(&self) -> CycleType {
        let mut lengths = Vec::new();
        for (&k, members) in &self.classes {
            debug_assert_eq!(members.len() % k, 0);
            lengths.extend(std::iter::repeat_n(k, members.len() / k));
        }
        CycleType::new(lengths)
    }
}

/// Computes the partition for odd `n`. Every `x` lands in some class with
/// index at most `n`, because the index is the length of the cycle of `x`
/// in the Jacobsthal digraph.
pub fn theta_partition(n: usize) -> Result<ThetaPartition> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder { n });
    }
    let modulus = n as u64;
    let mut classes: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for x in 1..=n {
        let k = jacobsthal_mod(modulus)
            .take(n)
            .position(|a| (3 * a * x as u64) % modulus == (2 * a) % modulus)
            .map(|i| i + 1)
            .expect("the cycle of x has length at most n");
        classes.entry(k).or_default().insert(x);
    }
    Ok(ThetaPartition { n, classes })
}

/// Places `m(m - 1)` queens at `(i, f(i))` with
/// `f(i) = (m-1)((i-1) mod m) + (m-1) - floor((i-1) / m)`, which is a
/// queens solution whose digraph splits into `m(m-1)/3` cycles of length 3.
/// Requires `m >= 3` with `m = 0` or `1 (mod 3)`.
pub fn three_cycles_placement(m: usize) -> Result<Placement> {
    if m < 3 || m % 3 == 2 {
        return Err(Error::InvalidThreeCycleParameter { m });
    }
    let n = m * (m - 1);
    let cols: Vec<usize> = (1..=n)
        .map(|i| (m - 1) * ((i - 1) % m) + (m - 1) - (i - 1) / m)
        .collect();
    Placement::from_columns(&cols)
}

fn column_map(p: &Placement) -> Vec<usize> {
    // 0-based column per 0-based row; callers guarantee a permutation.
    let mut cols = vec![0usize; p.n()];
    for &(row, col) in p.queens() {
        cols[row - 1] = col - 1;
    }
    cols
}

fn is_full_solution(p: &Placement, modular: bool) -> bool {
    if p.queens().len() != p.n() {
        return false;
    }
    match from_placement(p) {
        Ok(d) => {
            if modular {
                verify_modular_queen(&d).is_valid()
            } else {
                verify_queen(&d).is_valid()
            }
        }
        Err(_) => false,
    }
}

/// The composite construction: given standard m-solutions `f_0, ..., f_{q-1}`,
/// a map `pi` from `[0, n)` into those solutions and a modular n-solution
/// `g`, the row `an + b` (0-based) receives its queen in column
/// `f_{pi(b)}(a) n + g(b)`. Each choice of `pi` yields a distinct valid
/// mn-queens solution. Requires `m, n > 3` and `gcd(n, 6) = 1`.
pub fn polya_composite(
    standard: &[Placement],
    pi: &[usize],
    modular_g: &Placement,
) -> Result<Placement> {
    let m = match standard.first() {
        Some(first) => first.n(),
        None => return Err(Error::BadStandardFamily),
    };
    if m <= 3 || standard.iter().any(|p| p.n() != m) {
        return Err(Error::BadStandardFamily);
    }
    for (index, p) in standard.iter().enumerate() {
        if !is_full_solution(p, false) {
            return Err(Error::InvalidStandardSolution { index });
        }
    }
    let n = modular_g.n();
    if gcd(n, 6) != 1 {
        return Err(Error::GcdConstraint { n });
    }
    if n <= 3 || !is_full_solution(modular_g, true) {
        return Err(Error::InvalidModularFactor);
    }
    if pi.len() != n || pi.iter().any(|&i| i >= standard.len()) {
        return Err(Error::BadPi {
            expected: n,
            family: standard.len(),
        });
    }

    let f: Vec<Vec<usize>> = standard.iter().map(column_map).collect();
    let g = column_map(modular_g);
    let mut queens = Vec::with_capacity(m * n);
    #[allow(clippy::needless_range_loop)]
    for a in 0..m {
        for b in 0..n {
            let row = a * n + b;
            let col = f[pi[b]][a] * n + g[b];
            queens.push((row + 1, col + 1));
        }
    }
    Placement::new(m * n, queens)
}

/// Predicted cycle type of the direct product of the 3-cycles digraph for
/// `m` with the doubling digraph of a prime `p > 4` that has 2 as a
/// primitive root: `m(m-1)/3` groups, each contributing `gcd(p-1, 3)` cycles
/// of length `lcm(p-1, 3)` plus one 3-cycle. The prediction is checked
/// against the cycle type of the concrete product, which is also verified to
/// be queen-valid.
pub fn final_lemma_structure(m: usize, p: u64) -> Result<CycleType> {
    if m < 3 || m % 3 == 2 {
        return Err(Error::InvalidThreeCycleParameter { m });
    }
    if p <= 4 || !is_prime(p) {
        return Err(Error::NotOddPrime { p });
    }
    if !is_primitive_root(2, p)? {
        return Err(Error::NotPrimitiveRoot { p });
    }

    let copies = m * (m - 1) / 3;
    let pm1 = (p - 1) as usize;
    let per_copy = cyc_group(pm1).merged(&CycleType::new([3]));
    let mut predicted = per_copy.clone();
    for _ in 1..copies {
        predicted = predicted.merged(&per_copy);
    }

    let base = from_placement(&three_cycles_placement(m)?)?;
    let member = polya_doubling(p);
    let product = direct_product(&base, &member);
    let actual = product.cycle_type()?;
    if actual != predicted {
        return Err(Error::PredictionMismatch { predicted, actual });
    }
    if !verify_queen(&product).is_valid() {
        return Err(Error::PredictionMismatch { predicted, actual });
    }
    Ok(actual)
}

fn cyc_group(pm1: usize) -> CycleType {
    let g = gcd(pm1, 3);
    CycleType::uniform(g, pm1 / g * 3)
}
