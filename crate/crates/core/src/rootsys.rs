//! Simple root systems of types A through G, built from their Cartan
//! matrices with exact integer arithmetic.
//!
//! Simple roots follow the Bourbaki numbering:
//!
//! ```text
//! A_r   1 - 2 - ... - r
//! B_r   1 - 2 - ... - (r-1) => r          (alpha_r short)
//! C_r   1 - 2 - ... - (r-1) <= r          (alpha_r long)
//! D_r   1 - 2 - ... - (r-2) - (r-1)
//!                       |
//!                       r
//! E_r   1 - 3 - 4 - 5 - ... - r
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                    (alpha_1, alpha_2 long)
//! G_2   1 <= 2                            (alpha_1 short, alpha_2 long)
//! ```
//!
//! Roots are integer coefficient vectors over the simple roots. Every
//! pairing is computed from the Cartan matrix, so nothing here touches
//! floating point.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    /// Accepted ranks, as a human readable range.
    pub fn rank_bounds(self) -> &'static str {
        match self {
            Family::A => "r >= 1",
            Family::B | Family::C => "r >= 2",
            Family::D => "r >= 4",
            Family::E => "r in {6, 7, 8}",
            Family::F => "r = 4",
            Family::G => "r = 2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type such as `E8` or `C3`.
///
/// Only canonical ranks are accepted: `B1`, `C1`, `D2` and `D3` are
/// rejected with a pointer to the isomorphic canonical type instead of
/// being silently relabeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.accepts(rank) {
            return Ok(SimpleType { family, rank });
        }
        let label = format!("{family}{rank}");
        let alias = match (family, rank) {
            (Family::B, 1) | (Family::C, 1) => Some("A1"),
            (Family::D, 2) => Some("A1xA1"),
            (Family::D, 3) => Some("A3"),
            _ => None,
        };
        let reason = match alias {
            Some(alias) => format!(
                "{label} is isomorphic to {alias}; use {alias} ({family} requires {})",
                family.rank_bounds()
            ),
            None => format!("{family} requires {}", family.rank_bounds()),
        };
        Err(Error::RankOutOfBounds { label, reason })
    }

    /// Covering pairs may land on `D3`, which is not a canonical rank but
    /// is still a perfectly good Dynkin diagram (it is `A3` with the
    /// middle node labeled 1).
    pub(crate) fn covering(family: Family, rank: usize) -> Self {
        debug_assert!(family.accepts(rank) || (family == Family::D && rank == 3));
        SimpleType { family, rank }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every canonical simple type of rank at most `max_rank`, ordered by
    /// family and then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if family.accepts(rank) {
                    out.push(SimpleType { family, rank });
                }
            }
        }
        out
    }

    /// Name of the adjoint group, e.g. `PSL(4)`, `SO(7)`, `PSp(6)`.
    pub fn group_label(&self) -> String {
        let r = self.rank;
        match self.family {
            Family::A => format!("PSL({})", r + 1),
            Family::B => format!("SO({})", 2 * r + 1),
            Family::C => format!("PSp({})", 2 * r),
            Family::D => format!("PSO({})", 2 * r),
            Family::E | Family::F | Family::G => self.to_string(),
        }
    }

    /// Symmetric bilinear form on the simple roots, normalized so that
    /// short roots have squared length 2.
    fn gram_matrix(&self) -> Vec<Vec<i32>> {
        let r = self.rank;
        let mut d = vec![1i32; r];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match self.family {
            Family::A => edges.extend((1..r).map(|i| (i, i + 1))),
            Family::B => {
                edges.extend((1..r).map(|i| (i, i + 1)));
                d.iter_mut().take(r - 1).for_each(|x| *x = 2);
            }
            Family::C => {
                edges.extend((1..r).map(|i| (i, i + 1)));
                d[r - 1] = 2;
            }
            Family::D => {
                edges.extend((1..r - 1).map(|i| (i, i + 1)));
                edges.push((r - 2, r));
            }
            Family::E => {
                edges.push((1, 3));
                edges.push((2, 4));
                edges.extend((3..r).map(|i| (i, i + 1)));
            }
            Family::F => {
                edges.extend([(1, 2), (2, 3), (3, 4)]);
                d = vec![2, 2, 1, 1];
            }
            Family::G => {
                edges.push((1, 2));
                d = vec![1, 3];
            }
        }
        let mut gram = vec![vec![0i32; r]; r];
        for i in 0..r {
            gram[i][i] = 2 * d[i];
        }
        for (i, j) in edges {
            let v = -d[i - 1].max(d[j - 1]);
            gram[i - 1][j - 1] = v;
            gram[j - 1][i - 1] = v;
        }
        gram
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `E8`, `c3`, ... (no marking).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::RankOutOfBounds {
            label: s.to_string(),
            reason: "expected a family letter A-G followed by a rank".into(),
        };
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

/// A root, as its coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The `i`-th simple root (0-based) in rank `rank`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&a| a >= 0) && self.0.iter().any(|&a| a > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// The positive root among `self` and `-self`.
    pub fn abs(&self) -> Root {
        if self.is_positive() {
            self.clone()
        } else {
            -self
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

/// A simple root system together with its positive roots.
///
/// `cartan[i][j]` is the pairing `<alpha_j, alpha_i^vee>`, so the row of
/// `i` gives the pairing of each simple root against the coroot of
/// `alpha_i`. `symmetrizer[i]` is `(alpha_i, alpha_i) / 2` with short roots
/// normalized to 1.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<i32>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.stype == other.stype && self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

/// Builds the root system of a canonical simple type.
pub fn build_root_system(stype: SimpleType) -> Result<RootSystem> {
    SimpleType::new(stype.family, stype.rank)?;
    Ok(RootSystem::build_any(stype))
}

/// Deterministic root order: by height, then coefficient vectors in
/// decreasing lexicographic order (so `alpha_1` comes before `alpha_2`).
fn root_order_key(root: &Root) -> (i32, Reverse<Vec<i32>>) {
    (root.height(), Reverse(root.0.clone()))
}

impl RootSystem {
    pub(crate) fn build_any(stype: SimpleType) -> Self {
        let gram = stype.gram_matrix();
        let symmetrizer: Vec<i32> = (0..stype.rank).map(|i| gram[i][i] / 2).collect();
        let cartan = gram
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&b| b / symmetrizer[i]).collect())
            .collect();
        Self::from_cartan(stype, cartan, symmetrizer)
    }

    fn from_cartan(stype: SimpleType, cartan: Vec<Vec<i32>>, symmetrizer: Vec<i32>) -> Self {
        let rank = cartan.len();
        let pairing = |beta: &Root, i: usize| -> i32 {
            cartan[i].iter().zip(&beta.0).map(|(c, a)| c * a).sum()
        };

        let mut seen: HashSet<Root> = HashSet::new();
        let mut layer: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
        let mut all = Vec::new();
        seen.extend(layer.iter().cloned());

        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    // Length of the descending alpha_i-string through beta.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing(beta, i) > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }

        all.sort_by_key(root_order_key);
        let index = all.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem {
            stype,
            cartan,
            symmetrizer,
            positive_roots: all,
            index,
        }
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer
    }

    /// Positive roots in the deterministic order (height, then decreasing
    /// lexicographic).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The highest root. It is the unique root of maximal height, hence
    /// the last one in the root order.
    pub fn highest_root(&self) -> &Root {
        self.positive_roots
            .last()
            .expect("a root system has at least one positive root")
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Whether `v` or `-v` is a positive root.
    ///
    /// # Panics
    ///
    /// If `v` does not have length `rank`.
    pub fn is_root(&self, v: &[i32]) -> bool {
        assert_eq!(v.len(), self.rank(), "root vector length mismatch");
        let root = Root(v.to_vec());
        if root.is_positive() {
            self.index.contains_key(&root)
        } else {
            self.index.contains_key(&-&root)
        }
    }

    pub fn contains(&self, root: &Root) -> bool {
        root.rank() == self.rank() && self.is_root(&root.0)
    }

    /// `<beta, alpha_i^vee>` for a 0-based simple index.
    pub fn pairing(&self, beta: &Root, i: usize) -> i32 {
        self.cartan[i].iter().zip(&beta.0).map(|(c, a)| c * a).sum()
    }

    /// Invariant inner product `(beta, gamma)`, short roots of length 2.
    pub fn inner(&self, beta: &Root, gamma: &Root) -> i32 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if beta.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += beta.0[i] * self.symmetrizer[i] * self.cartan[i][j] * gamma.0[j];
            }
        }
        s
    }

    /// Coefficients of the coroot `beta^vee` over the simple coroots:
    /// `c_j = a_j * d_j / d_beta`.
    pub fn coroot_coefficients(&self, beta: &Root) -> Result<Vec<i32>> {
        if beta.rank() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: beta.rank(),
            });
        }
        if !self.is_root(&beta.0) {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        let d_beta = self.inner(beta, beta) / 2;
        beta.0
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&a, &d)| {
                let num = a * d;
                if num % d_beta != 0 {
                    Err(Error::Inconsistent(format!(
                        "coroot of {beta} has non-integral coefficient {num}/{d_beta}"
                    )))
                } else {
                    Ok(num / d_beta)
                }
            })
            .collect()
    }

    /// The root system of the dual group: Cartan matrix transposed, long
    /// and short roots exchanged, simple-root indexing preserved.
    ///
    /// `B_r` and `C_r` swap; every other family maps to itself. For `F4`
    /// and `G2` the result keeps the family label but carries the
    /// transposed Cartan matrix, since the indices are not relabeled.
    pub fn dual_system(&self) -> RootSystem {
        let r = self.rank();
        let cartan: Vec<Vec<i32>> = (0..r)
            .map(|i| (0..r).map(|j| self.cartan[j][i]).collect())
            .collect();
        let dmax = *self.symmetrizer.iter().max().expect("rank >= 1");
        let symmetrizer = self.symmetrizer.iter().map(|&d| dmax / d).collect();
        let family = match self.stype.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        let stype = SimpleType {
            family,
            rank: self.stype.rank,
        };
        RootSystem::from_cartan(stype, cartan, symmetrizer)
    }
}

/// Classical count of positive roots.
pub fn expected_positive_root_count(stype: SimpleType) -> usize {
    let r = stype.rank();
    match stype.family() {
        Family::A => r * (r + 1) / 2,
        Family::B | Family::C => r * r,
        Family::D => r * (r - 1),
        Family::E => match r {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}
