//! Weyl group reflections, orbits, the Weyl dimension formula and the
//! minuscule test.
//!
//! Weights are stored in the fundamental-weight basis, so `coords[i]` is
//! `<lambda, alpha_i^vee>` and a simple reflection is a single row update.
//! Simple-root and fundamental-weight indices in the public API are
//! 1-based, matching the Bourbaki labels.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem, SimpleType};

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `omega_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        check_index(rank, i)?;
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Ok(Weight(v))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_index(rank: usize, i: usize) -> Result<()> {
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange { index: i, rank });
    }
    Ok(())
}

fn check_weight(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.0.len() != rs.rank() {
        return Err(Error::LengthMismatch {
            expected: rs.rank(),
            found: lambda.0.len(),
        });
    }
    Ok(())
}

fn reflect_in_place(cartan: &[Vec<i32>], coords: &mut [i64], i: usize) {
    let li = coords[i];
    if li == 0 {
        return;
    }
    // alpha_i = sum_j <alpha_i, alpha_j^vee> omega_j = sum_j cartan[j][i] omega_j
    for (j, c) in coords.iter_mut().enumerate() {
        *c -= li * cartan[j][i] as i64;
    }
}

/// The simple reflection `s_i(lambda) = lambda - lambda_i alpha_i`.
pub fn reflect(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<Weight> {
    check_index(rs.rank(), i)?;
    check_weight(rs, lambda)?;
    let mut out = lambda.clone();
    reflect_in_place(rs.cartan(), &mut out.0, i - 1);
    Ok(out)
}

/// Moves `lambda` into the dominant chamber by repeatedly reflecting away
/// negative coordinates.
pub fn to_dominant(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    check_weight(rs, lambda)?;
    let mut out = lambda.clone();
    while let Some(i) = out.0.iter().position(|&c| c < 0) {
        reflect_in_place(rs.cartan(), &mut out.0, i);
    }
    Ok(out)
}

/// Size of the Weyl orbit of a dominant weight, by breadth-first search
/// over simple reflections.
pub fn weyl_orbit_size(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    check_weight(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    // Starting from the dominant weight, only reflections s_i with
    // mu_i > 0 produce new weights (mu_i = 0 fixes mu, mu_i < 0 steps back
    // toward lambda). Each orbit element sits at exactly one BFS depth, so
    // deduplication is only needed within a frontier.
    let cartan = rs.cartan();
    let mut frontier: Vec<Vec<i64>> = vec![lambda.0.clone()];
    let mut total = 0u64;
    while !frontier.is_empty() {
        total += frontier.len() as u64;
        let mut next: HashSet<Vec<i64>> = HashSet::new();
        for mu in &frontier {
            for i in 0..mu.len() {
                if mu[i] > 0 {
                    let mut nu = mu.clone();
                    reflect_in_place(cartan, &mut nu, i);
                    next.insert(nu);
                }
            }
        }
        frontier = next.into_iter().collect();
    }
    Ok(total)
}

/// Collects the full orbit of a dominant weight. Only sensible for small
/// orbits; used by tests and the CLI's explanations.
pub fn weyl_orbit(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    check_weight(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(lambda.0.clone());
    queue.push_back(lambda.0.clone());
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        for i in 0..mu.len() {
            let mut nu = mu.clone();
            reflect_in_place(rs.cartan(), &mut nu, i);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
        out.push(Weight(mu));
    }
    Ok(out)
}

/// Dimension of the irreducible module of highest weight `lambda`:
/// the product over positive roots of `<lambda + delta, beta^vee> /
/// <delta, beta^vee>`, evaluated with big integers.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    check_weight(rs, lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for beta in rs.positive_roots() {
        let co = rs.coroot_coefficients(beta)?;
        // delta has every fundamental coordinate equal to 1.
        let d: i64 = co.iter().map(|&c| c as i64).sum();
        let n: i64 = co
            .iter()
            .zip(&lambda.0)
            .map(|(&c, &l)| c as i64 * (l + 1))
            .sum();
        num *= BigUint::from(n as u64);
        den *= BigUint::from(d as u64);
    }
    if !(&num % &den).is_zero() {
        return Err(Error::Inconsistent(format!(
            "Weyl dimension {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

/// Whether the fundamental weight `omega_i` is minuscule.
///
/// Two characterizations are computed and compared: the Weyl orbit of
/// `omega_i` has the same size as the module `V(omega_i)`, and every
/// positive coroot has `alpha_i^vee`-coefficient at most 1. A
/// disagreement is reported as [`Error::Inconsistent`].
pub fn is_minuscule(rs: &RootSystem, i: usize) -> Result<bool> {
    check_index(rs.rank(), i)?;
    let omega = Weight::fundamental(rs.rank(), i)?;
    let by_orbit = BigUint::from(weyl_orbit_size(rs, &omega)?) == weyl_dim(rs, &omega)?;
    let by_pairing = minuscule_by_pairing(rs, i)?;
    if by_orbit != by_pairing {
        return Err(Error::Inconsistent(format!(
            "{} omega_{i}: orbit test says {by_orbit}, pairing test says {by_pairing}",
            rs.stype()
        )));
    }
    Ok(by_orbit)
}

/// Pairing characterization alone: `<omega_i, beta^vee> <= 1` for every
/// positive root `beta`.
pub fn minuscule_by_pairing(rs: &RootSystem, i: usize) -> Result<bool> {
    check_index(rs.rank(), i)?;
    for beta in rs.positive_roots() {
        if rs.coroot_coefficients(beta)?[i - 1] > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order of the Weyl group.
pub fn weyl_group_order(stype: SimpleType) -> u64 {
    let r = stype.rank() as u64;
    let fact = |n: u64| (1..=n).product::<u64>();
    match stype.family() {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u64 << r) * fact(r),
        Family::D => (1u64 << (r - 1)) * fact(r),
        Family::E => match r {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}
