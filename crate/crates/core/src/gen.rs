//! Seeded random instances for property checks and the `verify` suites.
//!
//! Valid structured objects are produced by condensing random arrays, so
//! every generator below returns data that passes its own validator by
//! construction.

use rand::Rng;

use crate::array::Array;
use crate::bijections::to_antistandard;
use crate::condense::{condense_down, condense_left};
use crate::hive::{pair_to_hive, AntiStandardPair, StandardPair, TriangleFunction};
use crate::scalar::Scalar;

/// Masses `k / d` with `d` uniform in `1..=max_denom` and value at most
/// `max_mass`.
pub fn array<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_mass: i64,
    max_denom: i64,
) -> Array {
    let rows = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let d = rng.gen_range(1..=max_denom);
                    Scalar::ratio(rng.gen_range(0..=max_mass * d), d)
                })
                .collect()
        })
        .collect();
    Array::from_rows(rows).expect("non-negative masses")
}

pub fn int_array<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, max_mass: i64) -> Array {
    array(rng, n, m, max_mass, 1)
}

/// Halves of `D(L a ⊗ L b)` for random `n x n` arrays `a`, `b`.
pub fn standard_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_mass: i64,
    max_denom: i64,
) -> StandardPair {
    let a = condense_left(&array(rng, n, n, max_mass, max_denom));
    let b = condense_left(&array(rng, n, n, max_mass, max_denom));
    StandardPair::from_concat(&condense_down(&a.concat(&b).expect("square blocks")))
        .expect("condensed L-tight blocks form a standard pair")
}

pub fn antistandard_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_mass: i64,
    max_denom: i64,
) -> AntiStandardPair {
    to_antistandard(&standard_pair(rng, n, max_mass, max_denom))
}

/// An integer hive of size `n`.
pub fn hive<R: Rng + ?Sized>(rng: &mut R, n: usize, max_mass: i64) -> TriangleFunction {
    pair_to_hive(&standard_pair(rng, n, max_mass, 1))
}

/// A couple `((a, b), (l, c))` with the final shape of the first pair equal
/// to the starting shape of the second: the three blocks of
/// `D(L x ⊗ L y ⊗ L z)`, and `l = L(a ⊗ b)` cut to `n` columns.
pub fn compatible_couple<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_mass: i64,
    max_denom: i64,
) -> (StandardPair, StandardPair) {
    let blocks: Vec<Array> = (0..3)
        .map(|_| condense_left(&array(rng, n, n, max_mass, max_denom)))
        .collect();
    let whole = condense_down(
        &blocks[0]
            .concat(&blocks[1])
            .and_then(|ab| ab.concat(&blocks[2]))
            .expect("square blocks"),
    );
    let (a, bc) = whole.split_at(n);
    let (b, c) = bc.split_at(n);
    let ab = a.concat(&b).expect("square blocks");
    let l = condense_left(&ab)
        .truncate_columns(n)
        .expect("L-tight arrays vanish beyond their height");
    let sp1 = StandardPair::new(a, b).expect("leading blocks of a condensed triple");
    let sp2 = StandardPair::new(l, c).expect("condensed prefix with the last block");
    (sp1, sp2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_objects() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=4 {
            let a = array(&mut rng, n, n + 1, 3, 4);
            assert!(a
                .rows()
                .flatten()
                .all(|v| v.denom() <= 4 && !v.is_negative()));
            let _ = antistandard_pair(&mut rng, n, 3, 2);
            let (sp1, sp2) = compatible_couple(&mut rng, n, 2, 1);
            assert_eq!(sp1.hive_type().nu, sp2.hive_type().lambda);
        }
    }
}
