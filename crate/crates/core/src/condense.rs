//! Full condensations `D`, `L`, `R`, `U`, the array shape, and the
//! Schützenberger involution.
//!
//! `D` pushes mass down until the array is `D`-tight. It is assembled from a
//! two-row kernel ([`condense_pair`]) that settles one pair of adjacent rows
//! at a time. The tight result does not depend on the order in which pairs
//! are settled; [`Schedule`] exposes a few orders so that this can be checked.
//! The other three directions are conjugates of `D`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::array::{partial_sums, rows_d_tight, Array, Partition};
use crate::scalar::Scalar;

/// Settles a two-row array with `lower` below `upper`.
///
/// With prefix sums `U(i)` and `V(i)` of the two rows and
/// `β_k = V(k) - U(k - 1)`, the new lower row has prefix sums
/// `U(i) + max(β_1, ..., β_i)`. Column sums are preserved and the returned
/// pair is `D`-tight.
pub fn condense_pair(lower: &[Scalar], upper: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    assert_eq!(lower.len(), upper.len(), "rows of different length");
    let below = partial_sums(lower);
    let above = partial_sums(upper);
    let mut new_lower = Vec::with_capacity(lower.len());
    let mut new_upper = Vec::with_capacity(lower.len());
    let mut best: Option<Scalar> = None;
    let mut prev = Scalar::ZERO;
    for i in 1..=lower.len() {
        let beta = above[i] - below[i - 1];
        let best_i = best.map_or(beta, |b| b.max(beta));
        best = Some(best_i);
        let cumulative = below[i] + best_i;
        let low = cumulative - prev;
        prev = cumulative;
        let high = lower[i - 1] + upper[i - 1] - low;
        assert!(
            !low.is_negative() && !high.is_negative(),
            "pair condensation produced a negative mass"
        );
        new_lower.push(low);
        new_upper.push(high);
    }
    debug_assert!(rows_d_tight(&new_lower, &new_upper));
    (new_lower, new_upper)
}

/// Order in which adjacent row pairs are settled while computing `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// Sweep the pairs top to bottom, repeating until tight.
    DescendingSweeps,
    /// Insert rows one at a time: after adding row `k + 1`, cascade the pairs
    /// `(k, k+1), (k-1, k), ..., (1, 2)`.
    RowInsertion,
    /// Settle a uniformly random non-tight pair until none is left.
    Random { seed: u64 },
}

/// `D`: the unique `D`-tight array reachable by moving mass down.
pub fn condense_down(a: &Array) -> Array {
    condense_down_with(a, Schedule::DescendingSweeps)
}

/// `D` computed with an explicit pair schedule.
pub fn condense_down_with(a: &Array, schedule: Schedule) -> Array {
    let n = a.n();
    let m = a.m();
    let mut rows = a.to_rows();
    let settle = |rows: &mut Vec<Vec<Scalar>>, j: usize| {
        let (low, high) = condense_pair(&rows[j], &rows[j + 1]);
        rows[j] = low;
        rows[j + 1] = high;
    };
    match schedule {
        Schedule::DescendingSweeps => {
            let mut sweeps = 0;
            while !(0..m - 1).all(|j| rows_d_tight(&rows[j], &rows[j + 1])) {
                sweeps += 1;
                assert!(
                    sweeps <= m,
                    "condensation did not converge within {m} sweeps"
                );
                for j in (0..m - 1).rev() {
                    settle(&mut rows, j);
                }
            }
        }
        Schedule::RowInsertion => {
            for k in 1..m {
                for j in (0..k).rev() {
                    settle(&mut rows, j);
                }
            }
        }
        Schedule::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = m * m * m + 1;
            for _ in 0..bound * 64 {
                let loose: Vec<usize> = (0..m - 1)
                    .filter(|&j| !rows_d_tight(&rows[j], &rows[j + 1]))
                    .collect();
                match loose.choose(&mut rng) {
                    Some(&j) => settle(&mut rows, j),
                    None => break,
                }
            }
        }
    }
    let out = Array::from_raw(n, m, rows.into_iter().flatten().collect());
    assert!(
        out.is_d_tight(),
        "condensation schedule {schedule:?} did not reach a D-tight array"
    );
    out
}

/// `L = T ∘ D ∘ T`: mass moves left along rows.
pub fn condense_left(a: &Array) -> Array {
    condense_down(&a.transpose()).transpose()
}

/// `R = * ∘ L ∘ *`.
pub fn condense_right(a: &Array) -> Array {
    condense_left(&a.central_reverse()).central_reverse()
}

/// `U = * ∘ D ∘ *`.
pub fn condense_up(a: &Array) -> Array {
    condense_down(&a.central_reverse()).central_reverse()
}

/// The shape: row sums of `D a`, which agree with the column sums of `L a`
/// (up to trailing zeros when the array is not square). Has length `m`.
pub fn shape(a: &Array) -> Partition {
    let d = condense_down(a).row_sums();
    debug_assert!(
        same_up_to_zeros(&d, &condense_left(a).col_sums()),
        "D-shape and L-shape differ"
    );
    Partition::new(d).expect("row sums of a D-tight array are weakly decreasing")
}

pub(crate) fn same_up_to_zeros(x: &[Scalar], y: &[Scalar]) -> bool {
    let len = x.len().max(y.len());
    (0..len).all(|k| x.get(k).copied().unwrap_or_default() == y.get(k).copied().unwrap_or_default())
}

/// `S a = D(*a)`.
pub fn schutzenberger(a: &Array) -> Array {
    condense_down(&a.central_reverse())
}
