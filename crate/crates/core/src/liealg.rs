//! Chevalley-basis structure constants, used as an independent,
//! bracket-level check of the combinatorial commutativity test.
//!
//! The basis is `{e_beta : beta in Phi} ∪ {h_1, ..., h_r}` with
//!
//! ```text
//! [e_b, e_c]  = N_{b,c} e_{b+c}      if b + c is a root
//! [e_b, e_-b] = h_b                  (the coroot, sum_j c_j h_j)
//! [h_i, e_b]  = <b, alpha_i^vee> e_b
//! [h_i, h_j]  = 0
//! ```
//!
//! Signs are fixed to `+` on extraspecial pairs (taken in the root order
//! of [`RootSystem::positive_roots`]) and every other constant is derived
//! from those through the standard identities, with `N_{-b,-c} = -N_{b,c}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::parabolic::{degree, is_commutative_nilradical, nilradical, Marking};
use crate::rootsys::{Root, RootSystem};

/// Index of a basis vector: `0..2n` are root vectors (positive roots first,
/// then their negatives in the same order), `2n..2n+r` the Cartan
/// generators `h_1..h_r`.
pub type BasisIndex = usize;

/// Sparse Lie algebra element.
pub type Element = BTreeMap<BasisIndex, i64>;

#[derive(Debug, Clone)]
pub struct StructureConstants {
    rs: RootSystem,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    constants: HashMap<(usize, usize), i32>,
    coroots: Vec<Vec<i32>>,
}

/// Builds the structure constants of the Chevalley basis.
///
/// Fails with [`Error::Inconsistent`] if a derived constant is not an
/// integer of the expected magnitude, or if the Jacobi identity fails on a
/// triple of positive root vectors. Either means a bug, not a property of
/// the input.
pub fn chevalley_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let n = rs.num_positive_roots();
    let mut roots: Vec<Root> = rs.positive_roots().to_vec();
    roots.extend(rs.positive_roots().iter().map(|b| -b));
    let index: HashMap<Root, usize> =
        roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();

    let mut sc = StructureConstants {
        rs: rs.clone(),
        roots,
        index,
        constants: HashMap::new(),
        coroots: Vec::new(),
    };
    sc.coroots = rs
        .positive_roots()
        .iter()
        .map(|b| rs.coroot_coefficients(b))
        .collect::<Result<_>>()?;

    // Positive pairs, root by root in increasing order.
    let mut positive: HashMap<(usize, usize), i32> = HashMap::new();
    for xi in 0..n {
        let xi_root = &sc.roots[xi];
        let mut special = Vec::new();
        for a in 0..xi {
            if let Some(b) = sc.positive_index(&(xi_root - &sc.roots[a])) {
                if a < b {
                    special.push((a, b));
                }
            }
        }
        let Some(&(alpha, beta)) = special.first() else {
            continue;
        };
        let n_ab = sc.string_p(alpha, beta) + 1;
        positive.insert((alpha, beta), n_ab);
        positive.insert((beta, alpha), -n_ab);

        let xi_norm = rs.inner(xi_root, xi_root) as i64;
        let (ra, rb) = (sc.roots[alpha].clone(), sc.roots[beta].clone());
        for &(gamma, delta) in &special[1..] {
            let (rg, rd) = (sc.roots[gamma].clone(), sc.roots[delta].clone());
            // Four-term identity on (gamma, delta, -alpha, -beta):
            // N_{g,d} = (xi,xi)/N_{a,b} * ( N_{d,-a} N_{g,-b} / (d-a, d-a)
            //                             + N_{-a,g} N_{d,-b} / (g-a, g-a) )
            let mut acc = Ratio::from_integer(0i64);
            let d_minus_a = &rd - &ra;
            if rs.contains(&d_minus_a) {
                let n1 = sc.general(&positive, &rd, &-&ra)?;
                let n2 = sc.general(&positive, &rg, &-&rb)?;
                acc += Ratio::new(n1 * n2, rs.inner(&d_minus_a, &d_minus_a) as i64);
            }
            let g_minus_a = &rg - &ra;
            if rs.contains(&g_minus_a) {
                let n1 = sc.general(&positive, &-&ra, &rg)?;
                let n2 = sc.general(&positive, &rd, &-&rb)?;
                acc += Ratio::new(n1 * n2, rs.inner(&g_minus_a, &g_minus_a) as i64);
            }
            let value = acc * Ratio::new(xi_norm, n_ab as i64);
            let expected = (sc.string_p(gamma, delta) + 1) as i64;
            if !value.is_integer() || value.to_integer().abs() != expected {
                return Err(Error::Inconsistent(format!(
                    "N({}, {}) derived as {value}, expected magnitude {expected}",
                    sc.roots[gamma], sc.roots[delta]
                )));
            }
            let v = value.to_integer() as i32;
            positive.insert((gamma, delta), v);
            positive.insert((delta, gamma), -v);
        }
    }

    // Every ordered pair of roots whose sum is a root.
    let total = sc.roots.len();
    let mut constants = HashMap::new();
    for a in 0..total {
        for b in 0..total {
            let sum = &sc.roots[a] + &sc.roots[b];
            if sum.is_zero() || !rs.contains(&sum) {
                continue;
            }
            let v = sc.general(&positive, &sc.roots[a], &sc.roots[b])?;
            constants.insert((a, b), v as i32);
        }
    }
    sc.constants = constants;

    sc.check_integrality()?;
    sc.check_positive_jacobi()?;
    Ok(sc)
}

impl StructureConstants {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// All roots in basis order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn dim(&self) -> usize {
        self.roots.len() + self.rs.rank()
    }

    pub fn root_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    fn positive_index(&self, root: &Root) -> Option<usize> {
        self.rs.positive_index(root)
    }

    /// Number of stored (ordered) root pairs.
    pub fn len(&self) -> usize {
        self.constants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constants.is_empty()
    }

    /// `N_{b,c}` by root indices, `None` when `b + c` is not a root.
    pub fn constant(&self, b: usize, c: usize) -> Option<i32> {
        self.constants.get(&(b, c)).copied()
    }

    /// Largest `p >= 0` with `c - p b` a root (indices into `roots`).
    fn string_p(&self, b: usize, c: usize) -> i32 {
        let mut p = 0;
        let mut v = self.roots[c].clone();
        loop {
            v = &v - &self.roots[b];
            if !v.is_zero() && self.rs.contains(&v) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{r,s}` for arbitrary roots with `r + s` a root, reduced to
    /// positive pairs through antisymmetry, `N_{-r,-s} = -N_{r,s}`, and
    /// the three-term identity `N_{r,s}/(t,t) = N_{s,t}/(r,r) =
    /// N_{t,r}/(s,s)` for `r + s + t = 0`.
    fn general(
        &self,
        positive: &HashMap<(usize, usize), i32>,
        r: &Root,
        s: &Root,
    ) -> Result<i64> {
        let lookup = |x: &Root, y: &Root| -> Result<i64> {
            let (Some(a), Some(b)) = (self.positive_index(x), self.positive_index(y)) else {
                return Err(Error::Inconsistent(format!("{x} or {y} is not positive")));
            };
            positive.get(&(a, b)).map(|&v| v as i64).ok_or_else(|| {
                Error::Inconsistent(format!("N({x}, {y}) requested before it was fixed"))
            })
        };
        let exact = |num: i64, den: i64, what: &str| -> Result<i64> {
            if num % den != 0 {
                return Err(Error::Inconsistent(format!("{what}: {num}/{den} not integral")));
            }
            Ok(num / den)
        };
        match (r.is_positive(), s.is_positive()) {
            (true, true) => lookup(r, s),
            (false, false) => Ok(-lookup(&-r, &-s)?),
            (false, true) => Ok(-self.general(positive, s, r)?),
            (true, false) => {
                let sum = r + s;
                let t = -&sum;
                let tt = self.rs.inner(&t, &t) as i64;
                if sum.is_positive() {
                    // N_{r,s} = (t,t)/(r,r) N_{s,t} and N_{s,t} = -N_{-s,-t}.
                    let rr = self.rs.inner(r, r) as i64;
                    exact(-tt * lookup(&-s, &sum)?, rr, "mixed pair")
                } else {
                    // N_{r,s} = (t,t)/(s,s) N_{t,r}.
                    let ss = self.rs.inner(s, s) as i64;
                    exact(tt * lookup(&t, r)?, ss, "mixed pair")
                }
            }
        }
    }

    /// Checks `|N_{b,c}| = p + 1` and `N_{c,b} = -N_{b,c}` on every stored
    /// constant.
    pub fn check_integrality(&self) -> Result<()> {
        for (&(b, c), &v) in &self.constants {
            let p = self.string_p(b, c);
            if v.abs() != p + 1 {
                return Err(Error::Inconsistent(format!(
                    "|N({}, {})| = {} but p + 1 = {}",
                    self.roots[b],
                    self.roots[c],
                    v.abs(),
                    p + 1
                )));
            }
            if self.constants.get(&(c, b)) != Some(&-v) {
                return Err(Error::Inconsistent(format!(
                    "N is not antisymmetric on ({}, {})",
                    self.roots[b], self.roots[c]
                )));
            }
        }
        Ok(())
    }

    /// Scalar Jacobi check on triples of positive root vectors: all three
    /// terms are multiples of `e_{a+b+c}`.
    fn check_positive_jacobi(&self) -> Result<()> {
        let n = self.rs.num_positive_roots();
        let nn = |x: usize, y: usize| self.constants.get(&(x, y)).copied().unwrap_or(0) as i64;
        let sum_index = |x: usize, y: usize| self.root_index(&(&self.roots[x] + &self.roots[y]));
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let mut total = 0;
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        if let Some(yz) = sum_index(y, z) {
                            total += nn(x, yz) * nn(y, z);
                        }
                    }
                    if total != 0 {
                        return Err(Error::Inconsistent(format!(
                            "Jacobi identity fails on {}, {}, {}",
                            self.roots[a], self.roots[b], self.roots[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `[e_b, e_c]` for roots with `b + c != 0`: `Some((b + c, N_{b,c}))`
    /// when `b + c` is a root, `None` otherwise.
    pub fn bracket_roots(&self, b: &Root, c: &Root) -> Result<Option<(Root, i32)>> {
        for r in [b, c] {
            if !self.rs.contains(r) {
                return Err(Error::NotARoot(r.coeffs().to_vec()));
            }
        }
        let sum = b + c;
        if sum.is_zero() {
            return Err(Error::OppositeRoots(b.coeffs().to_vec(), c.coeffs().to_vec()));
        }
        let (bi, ci) = (self.index[b], self.index[c]);
        Ok(self.constants.get(&(bi, ci)).map(|&v| (sum, v)))
    }

    fn coroot_element(&self, root: usize) -> Element {
        let n = self.rs.num_positive_roots();
        let (pos, sign) = if root < n { (root, 1) } else { (root - n, -1) };
        let base = 2 * n;
        self.coroots[pos]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (base + j, sign * c as i64))
            .collect()
    }

    /// Bracket of two basis vectors.
    pub fn bracket_basis(&self, x: BasisIndex, y: BasisIndex) -> Element {
        let nroots = self.roots.len();
        let mut out = Element::new();
        match (x < nroots, y < nroots) {
            (true, true) => {
                let sum = &self.roots[x] + &self.roots[y];
                if sum.is_zero() {
                    return self.coroot_element(x);
                }
                if let Some(&v) = self.constants.get(&(x, y)) {
                    out.insert(self.index[&sum], v as i64);
                }
            }
            (false, true) => {
                let c = self.rs.pairing(&self.roots[y], x - nroots);
                if c != 0 {
                    out.insert(y, c as i64);
                }
            }
            (true, false) => {
                let c = self.rs.pairing(&self.roots[x], y - nroots);
                if c != 0 {
                    out.insert(x, -c as i64);
                }
            }
            (false, false) => {}
        }
        out
    }

    /// Bracket of a basis vector with an arbitrary element.
    pub fn bracket_with(&self, x: BasisIndex, v: &Element) -> Element {
        let mut out = Element::new();
        for (&k, &coef) in v {
            for (j, c) in self.bracket_basis(x, k) {
                *out.entry(j).or_insert(0) += coef * c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Whether `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on basis vectors.
    pub fn jacobi_holds(&self, x: BasisIndex, y: BasisIndex, z: BasisIndex) -> bool {
        let mut total = Element::new();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (k, v) in self.bracket_with(a, &self.bracket_basis(b, c)) {
                *total.entry(k).or_insert(0) += v;
            }
        }
        total.values().all(|&v| v == 0)
    }

    /// Runs the Jacobi identity on every unordered basis triple and
    /// returns the number of failures.
    pub fn jacobi_violations_exhaustive(&self) -> usize {
        let d = self.dim();
        let mut bad = 0;
        for x in 0..d {
            for y in x..d {
                for z in y..d {
                    if !self.jacobi_holds(x, y, z) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }

    /// Runs the Jacobi identity on the given triples.
    pub fn jacobi_violations<I>(&self, triples: I) -> usize
    where
        I: IntoIterator<Item = (BasisIndex, BasisIndex, BasisIndex)>,
    {
        triples
            .into_iter()
            .filter(|&(x, y, z)| !self.jacobi_holds(x, y, z))
            .count()
    }

    /// Deterministic dump: one line `b c N` per ordered pair with nonzero
    /// bracket. Indices are signed and 1-based: `k` is the `k`-th positive
    /// root, `-k` its negative.
    pub fn dump(&self) -> String {
        let n = self.rs.num_positive_roots() as i64;
        let signed = |k: usize| {
            let k = k as i64;
            if k < n {
                k + 1
            } else {
                -(k - n + 1)
            }
        };
        let mut rows: Vec<(i64, i64, i32)> = self
            .constants
            .iter()
            .map(|(&(b, c), &v)| (signed(b), signed(c), v))
            .collect();
        let key = |k: i64| (k < 0, k.abs());
        rows.sort_by_key(|&(b, c, _)| (key(b), key(c)));

        let mut out = String::new();
        let _ = writeln!(out, "# {} structure constants: beta gamma N", self.rs.stype());
        for (k, root) in self.rs.positive_roots().iter().enumerate() {
            let _ = writeln!(out, "# {} = {}", k + 1, root);
        }
        for (b, c, v) in rows {
            let _ = writeln!(out, "{b} {c} {v}");
        }
        out
    }
}

/// Literal check that all brackets among nilradical root vectors vanish.
///
/// The result must agree with [`is_commutative_nilradical`]; disagreement
/// is an [`Error::Inconsistent`].
pub fn verify_nilradical_abelian(sc: &StructureConstants, m: &Marking) -> Result<bool> {
    let nil: Vec<usize> = nilradical(&sc.rs, m)
        .iter()
        .map(|b| sc.index[b])
        .collect();
    let abelian = nil
        .iter()
        .all(|&x| nil.iter().all(|&y| sc.bracket_basis(x, y).is_empty()));
    let combinatorial = is_commutative_nilradical(&sc.rs, m)?;
    if abelian != combinatorial {
        return Err(Error::Inconsistent(format!(
            "{}{m}: brackets say abelian = {abelian}, root test says {combinatorial}",
            sc.rs.stype()
        )));
    }
    Ok(abelian)
}

/// Checks `[g_j, g_k] ⊆ g_{j+k}` on all pairs of root vectors. The
/// Cartan generators have degree 0.
pub fn verify_grading(sc: &StructureConstants, m: &Marking) -> bool {
    let nroots = sc.roots.len();
    let deg = |k: BasisIndex| {
        if k < nroots {
            degree(&sc.roots[k], m)
        } else {
            0
        }
    };
    for x in 0..nroots {
        for y in 0..nroots {
            let target = deg(x) + deg(y);
            if sc.bracket_basis(x, y).keys().any(|&k| deg(k) != target) {
                return false;
            }
        }
    }
    true
}
