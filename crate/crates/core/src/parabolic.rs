//! Parabolic subgroups as markings of simple roots, the induced grading,
//! and the nilradical.
//!
//! The marking is the set of simple roots `alpha` whose negative root space
//! is not in the parabolic. The degree of a root is the sum of its marked
//! coefficients; the parabolic is the sum of the nonnegative layers and its
//! opposite nilradical the sum of the negative ones. Nilradicals are
//! reported through their positive mirror `{beta > 0 : deg(beta) >= 1}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Marked simple roots (1-based) of a parabolic in a given rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking {
    rank: usize,
    marked: BTreeSet<usize>,
}

impl Marking {
    /// Validates indices against `rank`; duplicates are rejected.
    pub fn new(rank: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut marked = BTreeSet::new();
        for i in indices {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            if !marked.insert(i) {
                return Err(Error::DuplicateIndex(i));
            }
        }
        Ok(Marking { rank, marked })
    }

    pub fn empty(rank: usize) -> Self {
        Marking {
            rank,
            marked: BTreeSet::new(),
        }
    }

    /// The Borel subgroup: every simple root marked.
    pub fn full(rank: usize) -> Self {
        Marking {
            rank,
            marked: (1..=rank).collect(),
        }
    }

    pub fn single(rank: usize, i: usize) -> Result<Self> {
        Self::new(rank, [i])
    }

    /// All markings of `rank`, indexed by bitmask (bit `k` marks `k+1`).
    pub fn from_mask(rank: usize, mask: u32) -> Self {
        Marking {
            rank,
            marked: (0..rank).filter(|k| mask & (1 << k) != 0).map(|k| k + 1).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.marked.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.marked.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.marked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marked.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.marked.contains(&i)
    }

    pub fn is_subset(&self, other: &Marking) -> bool {
        self.marked.is_subset(&other.marked)
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.marked.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Positive roots partitioned by degree. Negative layers are the mirror
/// images and are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    layers: BTreeMap<i32, Vec<Root>>,
}

impl Grading {
    pub fn layers(&self) -> &BTreeMap<i32, Vec<Root>> {
        &self.layers
    }

    pub fn layer(&self, k: i32) -> &[Root] {
        self.layers.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_degree(&self) -> i32 {
        self.layers.keys().next_back().copied().unwrap_or(0)
    }

    /// Sizes of layers `0..=max_degree`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|k| self.layer(k).len()).collect()
    }
}

fn check(rs: &RootSystem, m: &Marking) {
    assert_eq!(
        rs.rank(),
        m.rank(),
        "marking of rank {} used with {}",
        m.rank(),
        rs.stype()
    );
}

/// Sum of the coefficients of `beta` at marked simple roots. Negative
/// roots get negative degree.
pub fn degree(beta: &Root, m: &Marking) -> i32 {
    m.indices().map(|i| beta.coeffs()[i - 1]).sum()
}

pub fn grading(rs: &RootSystem, m: &Marking) -> Grading {
    check(rs, m);
    let mut layers: BTreeMap<i32, Vec<Root>> = BTreeMap::new();
    for beta in rs.positive_roots() {
        layers.entry(degree(beta, m)).or_default().push(beta.clone());
    }
    Grading { layers }
}

/// Positive roots of degree at least 1, in root order.
pub fn nilradical(rs: &RootSystem, m: &Marking) -> Vec<Root> {
    check(rs, m);
    rs.positive_roots()
        .iter()
        .filter(|beta| degree(beta, m) >= 1)
        .cloned()
        .collect()
}

/// Pairwise test: no two nilradical roots sum to a root.
pub fn nilradical_pairwise_commutative(rs: &RootSystem, m: &Marking) -> bool {
    let nil = nilradical(rs, m);
    for (k, beta) in nil.iter().enumerate() {
        for gamma in &nil[k..] {
            if rs.contains(&(beta + gamma)) {
                return false;
            }
        }
    }
    true
}

/// Whether the nilradical is abelian.
///
/// The pairwise definition is authoritative; the grading shortcut
/// `deg(theta) <= 1` is evaluated as well and any disagreement is an
/// [`Error::Inconsistent`].
pub fn is_commutative_nilradical(rs: &RootSystem, m: &Marking) -> Result<bool> {
    check(rs, m);
    let pairwise = nilradical_pairwise_commutative(rs, m);
    let shortcut = degree(rs.highest_root(), m) <= 1;
    if pairwise != shortcut {
        return Err(Error::Inconsistent(format!(
            "{}{m}: pairwise commutativity {pairwise}, highest-root degree test {shortcut}",
            rs.stype()
        )));
    }
    Ok(pairwise)
}

/// `dim G/P`, the number of nilradical roots.
pub fn flag_dimension(rs: &RootSystem, m: &Marking) -> usize {
    check(rs, m);
    rs.positive_roots()
        .iter()
        .filter(|beta| degree(beta, m) >= 1)
        .count()
}
