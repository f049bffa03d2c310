//! Labeled digraphs with loops and their structural operations.
//!
//! Vertices of a [`LabeledDigraph`] are identified with their labels, which
//! always run over `[1, n]`. Constructions stated over residues shift a
//! residue `x` to the label `x + 1` at the boundary.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered pair of vertex labels, both in `[1, n]`.
pub type Arc = (usize, usize);

/// A digraph on the vertex set `[1, n]`, possibly with loops.
///
/// The arc set is kept sorted and free of duplicates, so equality is set
/// equality and iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDigraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl LabeledDigraph {
    /// Builds a digraph of order `n` from an explicit arc list.
    ///
    /// Every endpoint must lie in `[1, n]` and duplicate arcs are rejected.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut seen = BTreeSet::new();
        for (u, v) in arcs {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::ArcOutOfRange { u, v, n });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc { u, v });
            }
        }
        Ok(Self {
            n,
            arcs: seen.into_iter().collect(),
        })
    }

    /// Builds the 1-regular digraph of a permutation given in one-line
    /// notation: arc `(i, image[i-1])` for every `i`.
    pub fn from_permutation(image: &[usize]) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut hit = vec![false; n + 1];
        for &v in image {
            if v == 0 || v > n || hit[v] {
                return Err(Error::NotBijective { n });
            }
            hit[v] = true;
        }
        let arcs = image.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect();
        Ok(Self { n, arcs })
    }

    /// Internal constructor for arc vectors already known to be sorted sets.
    pub(crate) fn from_parts(n: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(arcs.iter().all(|&(u, v)| (1..=n).contains(&u) && (1..=n).contains(&v)));
        Self { n, arcs }
    }

    /// Order of the digraph (number of vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The arcs, sorted lexicographically.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn contains_arc(&self, arc: Arc) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// True iff every vertex has out-degree 1 and in-degree 1, i.e. the
    /// digraph is the functional graph of a permutation.
    pub fn is_one_regular(&self) -> bool {
        self.one_regular_successors().is_ok()
    }

    pub(crate) fn one_regular_successors(&self) -> Result<Vec<usize>> {
        // succ[u] = 0 marks "no out-arc yet"; vertex indices are 1-based.
        let mut succ = vec![0usize; self.n + 1];
        let mut indeg = vec![0usize; self.n + 1];
        for &(u, v) in &self.arcs {
            if succ[u] != 0 {
                return Err(Error::NotOneRegular { vertex: u });
            }
            succ[u] = v;
            indeg[v] += 1;
        }
        for u in 1..=self.n {
            if succ[u] == 0 {
                return Err(Error::NotOneRegular { vertex: u });
            }
            if indeg[u] != 1 {
                return Err(Error::NotOneRegular { vertex: u });
            }
        }
        Ok(succ)
    }

    /// Multiset of cycle lengths of the permutation underlying a 1-regular
    /// digraph. Loops count as cycles of length 1.
    pub fn cycle_type(&self) -> Result<CycleType> {
        let succ = self.one_regular_successors()?;
        let mut visited = vec![false; self.n + 1];
        let mut lengths = Vec::new();
        for start in 1..=self.n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut u = start;
            while !visited[u] {
                visited[u] = true;
                len += 1;
                u = succ[u];
            }
            lengths.push(len);
        }
        Ok(CycleType::new(lengths))
    }

    /// Disjoint union; the labels of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        arcs.sort_unstable();
        Self::from_parts(self.n + other.n, arcs)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Self {
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_parts(self.n, arcs)
    }

    /// Rotates the adjacency matrix a quarter turn clockwise: with 1-based
    /// cells the arc `(r, c)` maps to `(c, n + 1 - r)`.
    pub fn rotate_quarter(&self) -> Self {
        let n = self.n;
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|&(r, c)| (c, n + 1 - r)).collect();
        arcs.sort_unstable();
        Self::from_parts(n, arcs)
    }
}

/// The multiset of cycle lengths of a 1-regular digraph, the complete
/// isomorphism invariant for such digraphs. Lengths are kept sorted in
/// descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut lengths: Vec<usize> = lengths.into_iter().collect();
        assert!(lengths.iter().all(|&l| l > 0), "cycle lengths are positive");
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self { lengths }
    }

    /// `count` copies of a cycle of length `len`.
    pub fn uniform(count: usize, len: usize) -> Self {
        Self::new(std::iter::repeat_n(len, count))
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Sum of the lengths, i.e. the order of the digraph described.
    pub fn order(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Multiset union with another cycle type.
    pub fn merged(&self, other: &Self) -> Self {
        Self::new(self.lengths.iter().chain(other.lengths.iter()).copied())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, len) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{len}")?;
        }
        write!(f, "}}")
    }
}
