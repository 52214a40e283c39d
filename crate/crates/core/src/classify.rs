//! The classification: a flag variety `G/P` of a semisimple adjoint group
//! admits a generically transitive `G_a^n`-action iff every simple factor
//! `(G_i, P_i)` has a commutative nilradical or is an exceptional pair.
//!
//! The exceptional pairs of a simple group are those where `Aut(G/P)` is
//! strictly larger than `G`:
//!
//! | pair            | covering pair              |
//! |-----------------|----------------------------|
//! | `PSp(2r)`, `P_1`  | `PSL(2r)`, `P_1`    (`A_{2r-1}[1]`)  |
//! | `SO(2r+1)`, `P_r` | `PSO(2r+2)`, `P_{r+1}` (`D_{r+1}[r+1]`) |
//! | `G2`, `P_1`       | `SO(7)`, `P_1`      (`B3[1]`)       |
//!
//! The table is fixed data; tests check that each covering pair has a
//! commutative nilradical and the same flag dimension as the pair it
//! covers. For `r = 2` the second row lands on `D3`, which is `A3` with
//! the middle node labeled 1.
//!
//! `B2` and `C2` are decided under the labeling given; `(C2, [1])` and
//! `(B2, [2])` are the same flag variety.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::{flag_dimension, is_commutative_nilradical, Marking};
use crate::rootsys::{build_root_system, Family, RootSystem, SimpleType};

/// The group `G~ = Aut(G/P)^0` and parabolic `Q` with `G/P = G~/Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringPair {
    pub group_label: String,
    pub stype: SimpleType,
    pub marking: Marking,
}

/// Verdict for one simple factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePairVerdict {
    pub commutative: bool,
    pub exceptional: Option<CoveringPair>,
    pub admits: bool,
    pub dimension: usize,
}

/// A simple factor together with its parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub stype: SimpleType,
    pub marking: Marking,
}

impl Component {
    pub fn new(stype: SimpleType, marking: Marking) -> Result<Self> {
        if marking.rank() != stype.rank() {
            return Err(Error::LengthMismatch {
                expected: stype.rank(),
                found: marking.rank(),
            });
        }
        Ok(Component { stype, marking })
    }
}

impl std::fmt::Display for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.stype, self.marking)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub component: Component,
    pub verdict: SimplePairVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductVerdict {
    pub components: Vec<ComponentVerdict>,
    pub admits: bool,
    pub total_dimension: usize,
}

/// Looks up the covering pair of an exceptional pair.
pub fn exceptional_covering(stype: SimpleType, m: &Marking) -> Option<CoveringPair> {
    let r = stype.rank();
    let is_single = |i: usize| m.len() == 1 && m.contains(i);
    let (family, rank, index) = match stype.family() {
        Family::C if is_single(1) => (Family::A, 2 * r - 1, 1),
        Family::B if is_single(r) => (Family::D, r + 1, r + 1),
        Family::G if is_single(1) => (Family::B, 3, 1),
        _ => return None,
    };
    let cover = SimpleType::covering(family, rank);
    Some(CoveringPair {
        group_label: cover.group_label(),
        stype: cover,
        marking: Marking::single(rank, index).expect("covering index in range"),
    })
}

/// Flag dimension of a covering pair, computed from its own root system.
pub fn covering_dimension(pair: &CoveringPair) -> usize {
    let rs = RootSystem::build_any(pair.stype);
    flag_dimension(&rs, &pair.marking)
}

/// Whether the covering pair's own nilradical is commutative.
pub fn covering_is_commutative(pair: &CoveringPair) -> Result<bool> {
    let rs = RootSystem::build_any(pair.stype);
    is_commutative_nilradical(&rs, &pair.marking)
}

fn decide_with(rs: &RootSystem, m: &Marking) -> Result<SimplePairVerdict> {
    if m.rank() != rs.rank() {
        return Err(Error::LengthMismatch {
            expected: rs.rank(),
            found: m.rank(),
        });
    }
    let commutative = is_commutative_nilradical(rs, m)?;
    let exceptional = exceptional_covering(rs.stype(), m);
    let dimension = flag_dimension(rs, m);
    if let Some(cover) = &exceptional {
        let cover_dim = covering_dimension(cover);
        if cover_dim != dimension {
            return Err(Error::Inconsistent(format!(
                "{}{m} has dimension {dimension} but its covering pair {}{} has {cover_dim}",
                rs.stype(),
                cover.stype,
                cover.marking
            )));
        }
    }
    Ok(SimplePairVerdict {
        commutative,
        admits: commutative || exceptional.is_some(),
        exceptional,
        dimension,
    })
}

/// Decides a single simple factor.
pub fn decide_simple(stype: SimpleType, m: &Marking) -> Result<SimplePairVerdict> {
    let rs = build_root_system(stype)?;
    decide_with(&rs, m)
}

/// Decides a product of simple factors: it admits iff every factor does.
pub fn decide_product(components: &[Component]) -> Result<ProductVerdict> {
    if components.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let verdicts = components
        .iter()
        .map(|c| {
            Ok(ComponentVerdict {
                component: c.clone(),
                verdict: decide_simple(c.stype, &c.marking)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductVerdict {
        admits: verdicts.iter().all(|v| v.verdict.admits),
        total_dimension: verdicts.iter().map(|v| v.verdict.dimension).sum(),
        components: verdicts,
    })
}

/// One row of the maximal-parabolic table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub family: Family,
    pub rank: usize,
    pub index: usize,
    pub commutative: bool,
    pub exceptional: Option<CoveringSummary>,
    pub admits: bool,
    pub dimension: usize,
}

/// Serializable form of a covering pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringSummary {
    pub family: Family,
    pub rank: usize,
    pub marking: Vec<usize>,
    pub label: String,
}

impl From<&CoveringPair> for CoveringSummary {
    fn from(c: &CoveringPair) -> Self {
        CoveringSummary {
            family: c.stype.family(),
            rank: c.stype.rank(),
            marking: c.marking.to_vec(),
            label: c.group_label.clone(),
        }
    }
}

/// Every (simple type, maximal parabolic) with rank at most `max_rank`,
/// ordered by family, rank and index.
pub fn enumerate_maximal(max_rank: usize) -> Result<Vec<ClassificationRow>> {
    if max_rank < 2 {
        return Err(Error::MaxRankTooSmall(max_rank));
    }
    let mut rows = Vec::new();
    for stype in SimpleType::all_up_to(max_rank) {
        let rs = build_root_system(stype)?;
        for i in 1..=stype.rank() {
            let v = decide_with(&rs, &Marking::single(stype.rank(), i)?)?;
            rows.push(ClassificationRow {
                family: stype.family(),
                rank: stype.rank(),
                index: i,
                commutative: v.commutative,
                exceptional: v.exceptional.as_ref().map(CoveringSummary::from),
                admits: v.admits,
                dimension: v.dimension,
            });
        }
    }
    Ok(rows)
}
