//! Test-only oracles that do not go through the library's algorithms.
//!
//! - Positive roots as the Weyl orbit of the simple roots.
//! - Module dimensions from Freudenthal's multiplicity formula summed over
//!   dominant weights times their orbit sizes.
//!
//! Cartan matrices are written out by hand here (row `i` pairs against
//! `alpha_i^vee`) so that an orientation mistake in the library cannot leak
//! into the expected values.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

/// Hand-written Cartan matrix and symmetrizer for a few small types.
pub fn hand_cartan(name: &str) -> (Vec<Vec<i32>>, Vec<i32>) {
    match name {
        "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
        "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
        "C2" => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
        "G2" => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
        "B3" => (
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
            vec![2, 2, 1],
        ),
        "C3" => (
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
            vec![1, 1, 2],
        ),
        "F4" => (
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![2, 2, 1, 1],
        ),
        "D4" => (
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ],
            vec![1, 1, 1, 1],
        ),
        other => panic!("no hand-written Cartan matrix for {other}"),
    }
}

fn pairing(cartan: &[Vec<i32>], beta: &[i32], i: usize) -> i32 {
    cartan[i].iter().zip(beta).map(|(c, a)| c * a).sum()
}

/// Positive roots as the Weyl orbit of the simple roots, keeping the
/// positive half.
pub fn roots_by_reflection(cartan: &[Vec<i32>]) -> BTreeSet<Vec<i32>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let c = pairing(cartan, &beta, i);
            let mut s = beta.clone();
            s[i] -= c;
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.into_iter().filter(|b| b.iter().all(|&a| a >= 0)).collect()
}

/// Orbit size of a weight in fundamental coordinates by plain BFS.
pub fn orbit_size(cartan: &[Vec<i32>], lambda: &[i64]) -> u64 {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.to_vec());
    queue.push_back(lambda.to_vec());
    while let Some(mu) = queue.pop_front() {
        for i in 0..r {
            let li = mu[i];
            let nu: Vec<i64> = (0..r).map(|j| mu[j] - li * cartan[j][i] as i64).collect();
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen.len() as u64
}

/// Dominant weights of `V(lambda)` with multiplicities, by Freudenthal's
/// formula. Weights are written as `lambda - nu` with `nu` a nonnegative
/// integer combination of simple roots, `nu_i <= bound`.
pub fn freudenthal(
    cartan: &[Vec<i32>],
    d: &[i32],
    lambda: &[i64],
    bound: i64,
) -> Vec<(Vec<i64>, i64)> {
    let r = cartan.len();
    let gram = |i: usize, j: usize| (d[i] * cartan[i][j]) as i64;
    let coord = |nu: &[i64], i: usize| -> i64 {
        lambda[i] - (0..r).map(|j| cartan[i][j] as i64 * nu[j]).sum::<i64>()
    };
    let roots: Vec<Vec<i64>> = roots_by_reflection(cartan)
        .into_iter()
        .map(|b| b.into_iter().map(i64::from).collect())
        .collect();

    // Candidate nu in the box, sorted by height.
    let mut cands: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..r {
        cands = cands
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    cands.retain(|nu| (0..r).all(|i| coord(nu, i) >= 0));
    cands.sort_by_key(|nu| nu.iter().sum::<i64>());

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    let dominant_nu = |nu: &[i64]| -> Vec<i64> {
        let mut nu = nu.to_vec();
        while let Some(i) = (0..r).find(|&i| coord(&nu, i) < 0) {
            let c = coord(&nu, i);
            nu[i] += c;
        }
        nu
    };

    // (lambda + delta, nu) and (nu, nu).
    let ld_nu = |nu: &[i64]| -> i64 { (0..r).map(|j| nu[j] * (lambda[j] + 1) * d[j] as i64).sum() };
    let nu_nu = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += x[i] * gram(i, j) * y[j];
            }
        }
        s
    };
    // (lambda - nu, alpha)
    let mu_alpha = |nu: &[i64], alpha: &[i64]| -> i64 {
        let lam: i64 = (0..r).map(|j| alpha[j] * lambda[j] * d[j] as i64).sum();
        lam - nu_nu(nu, alpha)
    };

    for nu in &cands {
        if nu.iter().all(|&x| x == 0) {
            mult.insert(nu.clone(), 1);
            continue;
        }
        let denom = 2 * ld_nu(nu) - nu_nu(nu, nu);
        assert!(denom > 0);
        let mut num = 0i64;
        for alpha in &roots {
            let mut k = 1;
            loop {
                // mu + k alpha = lambda - (nu - k alpha)
                let shifted: Vec<i64> = (0..r).map(|j| nu[j] - k * alpha[j]).collect();
                let dom = dominant_nu(&shifted);
                if dom.iter().any(|&x| x < 0) {
                    break;
                }
                let m = mult.get(&dom).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                num += m * mu_alpha(&shifted, alpha);
                k += 1;
            }
        }
        let m = 2 * num;
        assert_eq!(m % denom, 0, "Freudenthal multiplicity not integral");
        mult.insert(nu.clone(), m / denom);
    }

    let mut out: Vec<(Vec<i64>, i64)> = cands
        .iter()
        .filter_map(|nu| {
            let m = mult[nu];
            (m > 0).then(|| ((0..r).map(|i| coord(nu, i)).collect(), m))
        })
        .collect();
    out.sort();
    out
}

/// `dim V(lambda)` as the sum over dominant weights of multiplicity times
/// orbit size.
pub fn dim_by_freudenthal(cartan: &[Vec<i32>], d: &[i32], lambda: &[i64], bound: i64) -> u64 {
    freudenthal(cartan, d, lambda, bound)
        .iter()
        .map(|(mu, m)| *m as u64 * orbit_size(cartan, mu))
        .sum()
}
