//! Integer hives, integer standard pairs and Littlewood–Richardson
//! coefficients, with the counting identities behind commutativity and
//! associativity checked element by element.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::array::{rows_d_tight, Array, Partition};
use crate::bijections::{associate, associate_inverse, commute_sp};
use crate::hive::{RhombusKind, StandardPair, TriangleFunction};
use crate::scalar::Scalar;

fn ints(p: &Partition) -> Option<Vec<i64>> {
    p.parts().iter().map(Scalar::to_integer).collect()
}

fn same_length(l: &Partition, m: &Partition, n: &Partition) -> bool {
    l.len() == m.len() && m.len() == n.len() && !l.is_empty()
}

/// All integer hives on `Δ_n` with increments `(λ, μ, ν)` and value 0 at the
/// origin, in lexicographic order of the interior values scanned by rows
/// `v = 2..n` and `u = 1..v`.
pub fn enumerate_hives(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Vec<TriangleFunction> {
    let (Some(l), Some(m), Some(v)) = (ints(lambda), ints(mu), ints(nu)) else {
        return Vec::new();
    };
    if !same_length(lambda, mu, nu)
        || l.iter().sum::<i64>() + m.iter().sum::<i64>() != v.iter().sum::<i64>()
    {
        return Vec::new();
    }
    HiveSearch::new(&l, &m, &v).run()
}

struct HiveSearch {
    n: usize,
    // h[v][u]
    h: Vec<Vec<i64>>,
    interior: Vec<(usize, usize)>,
    bounds: Vec<(i64, i64)>,
    // rhombi keyed by the interior point assigned last; boundary-only ones at 0
    checks: Vec<Vec<[(usize, usize); 4]>>,
    found: Vec<TriangleFunction>,
}

impl HiveSearch {
    fn new(lambda: &[i64], mu: &[i64], nu: &[i64]) -> Self {
        let n = lambda.len();
        let mut h = vec![vec![0i64; n + 1]; n + 1];
        let total: i64 = lambda.iter().sum();
        for v in 1..=n {
            h[v][0] = h[v - 1][0] + lambda[v - 1];
            h[v][v] = h[v - 1][v - 1] + nu[v - 1];
        }
        for u in 1..=n {
            h[n][u] = total + mu[..u].iter().sum::<i64>();
        }
        let interior: Vec<(usize, usize)> =
            (2..n).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
        let bounds = interior
            .iter()
            .map(|&(u, v)| (h[v][0] + h[u][u] - h[u][0], h[v][0] + h[n][u] - h[n][0]))
            .collect();
        let order: HashMap<(usize, usize), usize> = interior
            .iter()
            .enumerate()
            .map(|(k, &p)| (p, k + 1))
            .collect();
        let mut checks = vec![Vec::new(); interior.len() + 1];
        let inside = |i: i64, j: i64| 0 <= i && i <= j && j <= n as i64;
        for j in 0..=n as i64 {
            for i in 0..=j {
                for kind in RhombusKind::ALL {
                    let (short, long) = kind.offsets();
                    let pts =
                        [short[0], short[1], long[0], long[1]].map(|(di, dj)| (i + di, j + dj));
                    if pts.iter().all(|&(a, b)| inside(a, b)) {
                        let pts = pts.map(|(a, b)| (a as usize, b as usize));
                        let last = pts
                            .iter()
                            .map(|p| order.get(p).copied().unwrap_or(0))
                            .max()
                            .unwrap_or(0);
                        checks[last].push(pts);
                    }
                }
            }
        }
        HiveSearch {
            n,
            h,
            interior,
            bounds,
            checks,
            found: Vec::new(),
        }
    }

    fn holds(&self, level: usize) -> bool {
        self.checks[level].iter().all(|&[s0, s1, l0, l1]| {
            let at = |(u, v): (usize, usize)| self.h[v][u];
            at(s0) + at(s1) >= at(l0) + at(l1)
        })
    }

    fn run(mut self) -> Vec<TriangleFunction> {
        if self.holds(0) {
            self.descend(0);
        }
        self.found
    }

    fn descend(&mut self, k: usize) {
        if k == self.interior.len() {
            let h = &self.h;
            self.found.push(TriangleFunction::from_fn(self.n, |u, v| {
                Scalar::int(h[v][u])
            }));
            return;
        }
        let (u, v) = self.interior[k];
        let (lo, hi) = self.bounds[k];
        for value in lo..=hi {
            self.h[v][u] = value;
            if self.holds(k + 1) {
                self.descend(k + 1);
            }
        }
    }
}

/// All integer standard pairs `(diag(λ), b)` of type `(λ, μ, ν)`, found
/// directly on arrays: `b` is `L`-tight with column sums `μ`, row sums
/// `ν - λ`, and `diag(λ) ⊗ b` is `D`-tight.
pub fn standard_pairs(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<StandardPair> {
    let (Some(l), Some(m), Some(v)) = (ints(lambda), ints(mu), ints(nu)) else {
        return Vec::new();
    };
    if !same_length(lambda, mu, nu) {
        return Vec::new();
    }
    let n = l.len();
    let row_totals: Vec<i64> = (0..n).map(|j| v[j] - l[j]).collect();
    if row_totals.iter().any(|&r| r < 0) || row_totals.iter().sum::<i64>() != m.iter().sum::<i64>()
    {
        return Vec::new();
    }
    let diag = Array::diag(lambda);
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut room = m.clone();
    pair_rows(&diag, &row_totals, &mut room, &mut rows, &mut out);
    out
}

fn pair_rows(
    diag: &Array,
    totals: &[i64],
    room: &mut Vec<i64>,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<StandardPair>,
) {
    let n = totals.len();
    let j = rows.len();
    if j == n {
        if room.iter().all(|&r| r == 0) {
            let b = Array::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                    .collect(),
            )
            .expect("non-negative counts");
            if let Ok(p) = StandardPair::new(diag.clone(), b) {
                out.push(p);
            }
        }
        return;
    }
    let mut candidates = Vec::new();
    let mut row = vec![0i64; n];
    compositions(0, j + 1, totals[j], room, &mut row, &mut |r| {
        candidates.push(r.to_vec())
    });
    let full = |r: &[i64], k: usize| -> Vec<Scalar> {
        diag.row(k + 1)
            .iter()
            .copied()
            .chain(r.iter().map(|&x| Scalar::int(x)))
            .collect()
    };
    for row in candidates {
        if j > 0 && !rows_d_tight(&full(&rows[j - 1], j - 1), &full(&row, j)) {
            continue;
        }
        for (r, x) in room.iter_mut().zip(&row) {
            *r -= x;
        }
        rows.push(row);
        pair_rows(diag, totals, room, rows, out);
        let row = rows.pop().expect("just pushed");
        for (r, x) in room.iter_mut().zip(&row) {
            *r += x;
        }
    }
}

// Fills row[i..width] with non-negative entries summing to `left`, each at
// most the remaining room of its column.
fn compositions(
    i: usize,
    width: usize,
    left: i64,
    room: &[i64],
    row: &mut [i64],
    visit: &mut dyn FnMut(&[i64]),
) {
    if i + 1 == width {
        if left <= room[i] {
            row[i] = left;
            visit(row);
            row[i] = 0;
        }
        return;
    }
    for x in 0..=left.min(room[i]) {
        row[i] = x;
        compositions(i + 1, width, left - x, room, row, visit);
    }
    row[i] = 0;
}

type Triple = (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>);

fn memo() -> &'static Mutex<HashMap<Triple, u64>> {
    static MEMO: OnceLock<Mutex<HashMap<Triple, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `c^ν_{λμ}`, the number of integer hives of type `(λ, μ, ν)`.
///
/// # Panics
///
/// Panics if the hive count and the standard-pair count disagree.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let key = (lambda.trimmed(), mu.trimmed(), nu.trimmed());
    if let Some(&c) = memo().lock().expect("memo lock").get(&key) {
        return c;
    }
    let hives = enumerate_hives(lambda, mu, nu).len() as u64;
    let pairs = standard_pairs(lambda, mu, nu).len() as u64;
    assert_eq!(
        hives, pairs,
        "hive and standard-pair counts differ for {lambda:?} {mu:?} {nu:?}"
    );
    memo().lock().expect("memo lock").insert(key, hives);
    hives
}

/// Independent count of skew tableaux of shape `ν / λ` and weight `μ` whose
/// row reading word (bottom row first, each row right to left) is a lattice
/// word.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (Some(l), Some(m), Some(v)) = (ints(lambda), ints(mu), ints(nu)) else {
        return 0;
    };
    if !same_length(lambda, mu, nu) || l.iter().zip(&v).any(|(a, b)| a > b) {
        return 0;
    }
    if l.iter().sum::<i64>() + m.iter().sum::<i64>() != v.iter().sum::<i64>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..v.len())
        .flat_map(|j| (l[j] as usize..v[j] as usize).rev().map(move |c| (j, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = v.iter().map(|&len| vec![0; len as usize]).collect();
    let mut used = vec![0i64; m.len() + 1];
    skew_fill(&cells, 0, &l, &m, &mut grid, &mut used)
}

fn skew_fill(
    cells: &[(usize, usize)],
    k: usize,
    inner: &[i64],
    weight: &[i64],
    grid: &mut Vec<Vec<u32>>,
    used: &mut Vec<i64>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (j, c) = cells[k];
    let mut count = 0;
    for x in 1..=weight.len() as u32 {
        let xi = x as usize;
        if used[xi] == weight[xi - 1] {
            continue;
        }
        if xi > 1 && used[xi] + 1 > used[xi - 1] {
            continue;
        }
        if c + 1 < grid[j].len() && x > grid[j][c + 1] {
            continue;
        }
        if j > 0 && c >= inner[j - 1] as usize && x <= grid[j - 1][c] {
            continue;
        }
        grid[j][c] = x;
        used[xi] += 1;
        count += skew_fill(cells, k + 1, inner, weight, grid, used);
        used[xi] -= 1;
        grid[j][c] = 0;
    }
    count
}

/// Integer partitions with exactly `parts` entries (zeros allowed), of the
/// given size, each part at most `max_part`, in decreasing lexicographic
/// order.
pub fn partitions(parts: usize, size: i64, max_part: i64) -> Vec<Partition> {
    fn go(parts: usize, size: i64, cap: i64, acc: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if acc.len() == parts {
            if size == 0 {
                out.push(Partition::from_ints(acc));
            }
            return;
        }
        let slots = (parts - acc.len()) as i64;
        for x in (0..=cap.min(size)).rev() {
            if x * slots < size {
                break;
            }
            acc.push(x);
            go(parts, size - x, x, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(parts, size, max_part, &mut Vec::new(), &mut out);
    out
}

/// Outcome of an element-by-element bijection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub domain: usize,
    pub codomain: usize,
    pub bijective: bool,
    pub failures: Vec<String>,
}

impl CountReport {
    fn finish(domain: usize, codomain: usize, images: usize, failures: Vec<String>) -> Self {
        let bijective = failures.is_empty() && images == domain && domain == codomain;
        CountReport {
            domain,
            codomain,
            bijective,
            failures,
        }
    }
}

/// Applies the commuter to every element of `SP(λ, μ, ν)` and checks it is a
/// bijection onto `SP(μ, λ, ν)` and its own inverse.
pub fn verify_commutativity(lambda: &Partition, mu: &Partition, nu: &Partition) -> CountReport {
    let domain = standard_pairs(lambda, mu, nu);
    let codomain: HashSet<StandardPair> = standard_pairs(mu, lambda, nu).into_iter().collect();
    let mut images = HashSet::new();
    let mut failures = Vec::new();
    for p in &domain {
        let q = commute_sp(p);
        if !codomain.contains(&q) {
            failures.push(format!("image of {:?} is not in the target set", p.b()));
        }
        if &commute_sp(&q) != p {
            failures.push(format!("commuter is not an involution at {:?}", p.b()));
        }
        if !images.insert(q) {
            failures.push(format!("repeated image from {:?}", p.b()));
        }
    }
    CountReport::finish(domain.len(), codomain.len(), images.len(), failures)
}

type Couple = (StandardPair, StandardPair);

fn couples(first: &[Couple], seconds: impl Fn(&Partition) -> Vec<StandardPair>) -> Vec<Couple> {
    first
        .iter()
        .flat_map(|(x, _)| {
            seconds(&x.hive_type().nu)
                .into_iter()
                .map(move |y| (x.clone(), y))
        })
        .collect()
}

/// Materialises `⋃_σ SP(λ, μ, σ) x SP(σ, ν, π)` and `⋃_τ SP(μ, ν, τ) x
/// SP(λ, τ, π)` with intermediate parts at most `bound`, applies
/// [`associate`] to every element of the first and checks it is a bijection
/// onto the second, inverted by [`associate_inverse`].
pub fn verify_associativity(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    pi: &Partition,
    bound: i64,
) -> CountReport {
    let n = lambda.len();
    let int_size = |p: &Partition| p.size().to_integer().unwrap_or(-1);
    let tag = |p: &StandardPair| (p.clone(), p.clone());
    let sigmas = partitions(n, int_size(lambda) + int_size(mu), bound);
    let taus = partitions(n, int_size(mu) + int_size(nu), bound);
    let firsts: Vec<Couple> = sigmas
        .iter()
        .flat_map(|s| standard_pairs(lambda, mu, s))
        .map(|p| tag(&p))
        .collect();
    let left = couples(&firsts, |sigma| standard_pairs(sigma, nu, pi));
    let firsts: Vec<Couple> = taus
        .iter()
        .flat_map(|t| standard_pairs(mu, nu, t))
        .map(|p| tag(&p))
        .collect();
    let right: HashSet<Couple> = couples(&firsts, |tau| standard_pairs(lambda, tau, pi))
        .into_iter()
        .collect();
    let mut images = HashSet::new();
    let mut failures = Vec::new();
    for (x, y) in &left {
        match associate(x, y) {
            Ok(image) => {
                if !right.contains(&image) {
                    failures.push(format!(
                        "image of {:?} / {:?} is not in the target set",
                        x.b(),
                        y.b()
                    ));
                }
                match associate_inverse(&image.0, &image.1) {
                    Ok(back) if back == (x.clone(), y.clone()) => {}
                    _ => failures.push(format!(
                        "inverse does not recover {:?} / {:?}",
                        x.b(),
                        y.b()
                    )),
                }
                if !images.insert(image) {
                    failures.push(format!("repeated image from {:?} / {:?}", x.b(), y.b()));
                }
            }
            Err(e) => failures.push(format!("associate failed: {e}")),
        }
    }
    CountReport::finish(left.len(), right.len(), images.len(), failures)
}
