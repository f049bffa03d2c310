//! Brute-force ground truth: enumeration and counting of standard and
//! modular solutions, the cycle types they realize, and desk-scale checks of
//! the product counting bound.

use std::collections::{BTreeSet, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::digraph::{CycleType, LabeledDigraph};
use crate::error::{Error, Result};
use crate::labeling::{from_placement, verify_modular_queen, Placement};
use crate::product::{gcd, oh_product, FamilyAssignment};

const MAX_BOARD: usize = 64;

/// Lazily yields every solution for one board, in lexicographic order of the
/// column vector `(f(1), ..., f(n))`. Each solution appears exactly once.
pub struct SolutionStream {
    n: usize,
    modular: bool,
    limit: Option<usize>,
    emitted: usize,
    cols: Vec<usize>,
    cursor: Vec<usize>,
    used_cols: u64,
    used_a: u128,
    used_b: u128,
    done: bool,
}

impl SolutionStream {
    fn new(n: usize, modular: bool, limit: Option<usize>) -> Self {
        assert!(n <= MAX_BOARD, "board size capped at {MAX_BOARD}");
        Self {
            n,
            modular,
            limit,
            emitted: 0,
            cols: Vec::with_capacity(n),
            cursor: vec![1],
            used_cols: 0,
            used_a: 0,
            used_b: 0,
            done: n == 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_modular(&self) -> bool {
        self.modular
    }

    fn masks(&self, row: usize, col: usize) -> (u64, u128, u128) {
        let (a, b) = if self.modular {
            let n = self.n as i64;
            (
                ((row + col) as i64).rem_euclid(n) as u32,
                (row as i64 - col as i64).rem_euclid(n) as u32,
            )
        } else {
            (
                (row + col - 2) as u32,
                (row + self.n - col) as u32 - 1,
            )
        };
        (1u64 << (col - 1), 1u128 << a, 1u128 << b)
    }

    fn fits(&self, row: usize, col: usize) -> bool {
        let (c, a, b) = self.masks(row, col);
        self.used_cols & c == 0 && self.used_a & a == 0 && self.used_b & b == 0
    }

    fn toggle(&mut self, row: usize, col: usize) {
        let (c, a, b) = self.masks(row, col);
        self.used_cols ^= c;
        self.used_a ^= a;
        self.used_b ^= b;
    }
}

impl Iterator for SolutionStream {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        if self.done {
            return None;
        }
        if let Some(limit) = self.limit {
            if self.emitted >= limit {
                self.done = true;
                return None;
            }
        }
        loop {
            let depth = self.cols.len();
            let row = depth + 1;
            let mut candidate = self.cursor[depth];
            while candidate <= self.n && !self.fits(row, candidate) {
                candidate += 1;
            }
            if candidate > self.n {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.cursor.pop();
                let col = self.cols.pop().expect("non-root depth");
                self.toggle(depth, col);
                continue;
            }
            self.cursor[depth] = candidate + 1;
            self.toggle(row, candidate);
            self.cols.push(candidate);
            if self.cols.len() == self.n {
                let solution =
                    Placement::from_columns(&self.cols).expect("search state is a permutation");
                let col = self.cols.pop().expect("just pushed");
                self.toggle(row, col);
                self.emitted += 1;
                return Some(solution);
            }
            self.cursor.push(1);
        }
    }
}

/// All standard n-queens solutions, lexicographic by column vector.
pub fn enumerate_standard(n: usize, limit: Option<usize>) -> SolutionStream {
    SolutionStream::new(n, false, limit)
}

/// All modular (toroidal) n-queens solutions, lexicographic by column vector.
pub fn enumerate_modular(n: usize, limit: Option<usize>) -> SolutionStream {
    SolutionStream::new(n, true, limit)
}

fn count_all(n: usize, modular: bool) -> u64 {
    let mut stream = SolutionStream::new(n, modular, None);
    let mut count = 0;
    while stream.next().is_some() {
        count += 1;
    }
    count
}

/// Q(n), the number of standard solutions.
pub fn count_standard(n: usize) -> u64 {
    count_all(n, false)
}

/// M(n), the number of modular solutions; zero exactly when `gcd(n, 6) > 1`.
pub fn count_modular(n: usize) -> u64 {
    count_all(n, true)
}

/// The set of cycle types realized by standard n-queens solutions.
pub fn achievable_cycle_types(n: usize) -> BTreeSet<CycleType> {
    enumerate_standard(n, None)
        .map(|p| {
            from_placement(&p)
                .expect("solutions are permutations")
                .cycle_type()
                .expect("solution digraphs are 1-regular")
        })
        .collect()
}

/// How the assignment space is explored by [`modular_bound_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignmentMode {
    /// Take the lexicographically first `family_size` modular n-solutions as
    /// the family and run every assignment of every modular m-solution.
    Exhaustive { family_size: usize },
    /// Use the full family of modular n-solutions and sample `samples`
    /// random (base solution, assignment) pairs.
    Sampled { samples: usize, seed: u64 },
}

/// Outcome of a bound check run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheckReport {
    /// Distinct (base, assignment) pairs whose products were generated.
    pub generated: u64,
    /// How many generated products verified as modular solutions.
    pub valid: u64,
    /// Whether all generated products were pairwise distinct.
    pub distinct: bool,
    /// The realized lower bound: distinct products that verified as valid.
    pub bound: u64,
}

impl BoundCheckReport {
    pub fn all_valid(&self) -> bool {
        self.valid == self.generated
    }
}

const EXHAUSTIVE_CAP: u128 = 1_000_000;

fn advance_mixed_radix(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Generates products of modular m-solutions with families of modular
/// n-solutions and reports how many are valid and pairwise distinct.
///
/// Products of distinct pairs are always distinct digraphs; validity is the
/// interesting part, since mixed assignments can wrap differences or sums
/// across family members. The exhaustive mode realizes the lower bound
/// `M(m) * family_size^m` exactly when all products verify.
pub fn modular_bound_check(
    m: usize,
    n: usize,
    mode: AssignmentMode,
) -> Result<BoundCheckReport> {
    if m == 0 || n == 0 || m > 7 || n > 7 || gcd(m, 6) != 1 || gcd(n, 6) != 1 {
        return Err(Error::BoundCheckInfeasible { m, n });
    }
    let bases: Vec<LabeledDigraph> = enumerate_modular(m, None)
        .map(|p| from_placement(&p).expect("modular solutions are permutations"))
        .collect();
    let pool: Vec<LabeledDigraph> = enumerate_modular(n, None)
        .map(|p| from_placement(&p).expect("modular solutions are permutations"))
        .collect();

    let mut products: HashSet<LabeledDigraph> = HashSet::new();
    let mut generated = 0u64;
    let mut valid = 0u64;
    let mut run = |base: &LabeledDigraph, family: &[LabeledDigraph], indices: &[usize]| {
        let fa = FamilyAssignment::from_indices(family.to_vec(), base, indices)
            .expect("indices are aligned and in range");
        let product = oh_product(base, &fa).expect("assignment is total");
        generated += 1;
        if verify_modular_queen(&product).is_valid() {
            valid += 1;
        }
        products.insert(product);
    };

    match mode {
        AssignmentMode::Exhaustive { family_size } => {
            if family_size == 0 || family_size > pool.len() {
                return Err(Error::BadFamilySize {
                    requested: family_size,
                    available: pool.len(),
                });
            }
            let family = &pool[..family_size];
            let total = bases.len() as u128 * (family_size as u128).pow(m as u32);
            if total > EXHAUSTIVE_CAP {
                return Err(Error::BoundCheckTooLarge {
                    products: total,
                    cap: EXHAUSTIVE_CAP,
                });
            }
            for base in &bases {
                let mut indices = vec![0usize; base.arcs().len()];
                loop {
                    run(base, family, &indices);
                    if !advance_mixed_radix(&mut indices, family_size) {
                        break;
                    }
                }
            }
        }
        AssignmentMode::Sampled { samples, seed } => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut seen: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
            for _ in 0..samples {
                let which = rng.random_range(0..bases.len());
                let indices: Vec<usize> = (0..m).map(|_| rng.random_range(0..pool.len())).collect();
                if seen.insert((which, indices.clone())) {
                    run(&bases[which], &pool, &indices);
                }
            }
        }
    }

    let distinct = products.len() as u64 == generated;
    let bound = if distinct { valid } else { 0 };
    Ok(BoundCheckReport {
        generated,
        valid,
        distinct,
        bound,
    })
}
