//! The commuter on anti-standard pairs, its transport to standard pairs and
//! hives, and the two symmetries it coincides with.

use crate::array::Array;
use crate::condense::{condense_left, condense_right, schutzenberger};
use crate::error::{Error, Result};
use crate::hive::{hive_to_pair, AntiStandardPair, StandardPair, TriangleFunction};
use crate::octahedron::{prism_propagate, prism_top, PrismFunction};
use crate::scalar::Scalar;

/// `(a, b) -> (R a, b)`.
pub fn to_antistandard(p: &StandardPair) -> AntiStandardPair {
    AntiStandardPair::new(condense_right(p.a()), p.b().clone())
        .expect("R keeps the pair anti-standard")
}

/// `(a, b) -> (L a, b)`.
pub fn to_standard(q: &AntiStandardPair) -> StandardPair {
    StandardPair::new(condense_left(q.a()), q.b().clone()).expect("L keeps the pair standard")
}

/// `Com(a, b) = D(*(a ⊗ b))`, split in half. Type `(λ, μ, ν)` goes to
/// `(μ, λ, ν)`.
pub fn commute(q: &AntiStandardPair) -> AntiStandardPair {
    let out = schutzenberger(&q.concat());
    AntiStandardPair::from_concat(&out).expect("the commuter preserves anti-standard pairs")
}

/// The commuter on standard pairs.
pub fn commute_sp(p: &StandardPair) -> StandardPair {
    to_standard(&commute(&to_antistandard(p)))
}

// Prism over *(R diag(λ) ⊗ b) for the hive f.
fn commuter_prism(f: &TriangleFunction) -> Result<(PrismFunction, Vec<Scalar>)> {
    let p = hive_to_pair(f)?;
    let nu = p.hive_type().nu.parts().to_vec();
    let ab = condense_right(p.a()).concat(p.b())?;
    Ok((prism_propagate(&ab.central_reverse()), nu))
}

/// The commuter on hives, read off the ceiling of the prism built over the
/// central reverse of the anti-standard pair of `f`. Increments `(μ, λ, ν)`.
pub fn com_prime(f: &TriangleFunction) -> Result<TriangleFunction> {
    let n = f.n();
    let (prism, _) = commuter_prism(f)?;
    let top = prism_top(&prism);
    Ok(TriangleFunction::from_fn(n, |u, v| top.at(n + u, v)))
}

// h(i, j) = w(i, j) - (ν_n + ... + ν_{n+1-j}) + |ν|.
fn shift_by_reversed_nu(
    n: usize,
    nu: &[Scalar],
    w: impl Fn(usize, usize) -> Scalar,
) -> TriangleFunction {
    let total: Scalar = nu.iter().sum();
    TriangleFunction::from_fn(n, |i, j| {
        let tail: Scalar = (1..=j).map(|k| nu[n - k]).sum();
        w(i, j) - tail + total
    })
}

/// The wall `x = n` of the commuter prism, normalised to a hive with
/// increments `(-ν^op, μ, -λ^op)`.
pub fn hk_wall_h(f: &TriangleFunction) -> Result<TriangleFunction> {
    let n = f.n();
    let (prism, nu) = commuter_prism(f)?;
    Ok(shift_by_reversed_nu(n, &nu, |i, j| prism.at(n, i, j)))
}

/// `S_1 S_12 S_1`: Schützenberger on the first block, on the whole pair,
/// then on the first block again.
pub fn rho1(p: &StandardPair) -> StandardPair {
    let n = p.n();
    let first = schutzenberger(p.a());
    let whole = schutzenberger(&first.concat(p.b()).expect("blocks share their height"));
    let (a, b) = whole.split_at(n);
    StandardPair::new(schutzenberger(&a), b).expect("S_1 S_12 S_1 returns a standard pair")
}

/// `L(*b)` by transposing, applying Schützenberger and transposing back.
fn l_of_reverse(b: &Array) -> Array {
    schutzenberger(&b.transpose()).transpose()
}

/// The hive of `ρ2'` assembled from `L(*b)` without any propagation, then
/// rotated by `res(u, v) = h(v - u, n - u)`.
pub fn rho2_prime(f: &TriangleFunction) -> Result<TriangleFunction> {
    let n = f.n();
    let p = hive_to_pair(f)?;
    let nu = p.hive_type().nu.parts().to_vec();
    let w = l_of_reverse(p.b()).integrate();
    let h = shift_by_reversed_nu(n, &nu, |i, j| w.at(i, j));
    Ok(TriangleFunction::from_fn(n, |u, v| h.at(v - u, n - u)))
}

/// The array `b̃(i, j)`, `1 <= i <= j <= n`, computed from the second block
/// `a'` of the commuted pair and `μ` by the index identity
/// `b̃(i, j) = [μ_{k} + Σ_{l <= n-j} a'(l, k)] - [μ_{k+1} + Σ_{l <= n-j+1} a'(l, k+1)]`
/// with `k = n - j + i`, `μ_{n+1} = 0` and `a'` zero out of range. Boxes
/// with `i > j` are zero.
pub fn gamma_array(f: &TriangleFunction) -> Result<Array> {
    let n = f.n();
    let p = hive_to_pair(f)?;
    let mu = p.hive_type().mu.parts().to_vec();
    let a_prime = commute_sp(&p).b().clone();
    let entry = |l: usize, k: usize| {
        if (1..=n).contains(&l) && (1..=n).contains(&k) {
            a_prime.mass(l, k)
        } else {
            Scalar::ZERO
        }
    };
    let mu_at = |k: usize| if k <= n { mu[k - 1] } else { Scalar::ZERO };
    let mut rows = vec![vec![Scalar::ZERO; n]; n];
    for j in 1..=n {
        for i in 1..=j {
            let k = n - j + i;
            let first = mu_at(k) + (1..=n - j).map(|l| entry(l, k)).sum::<Scalar>();
            let second = mu_at(k + 1) + (1..=n - j + 1).map(|l| entry(l, k + 1)).sum::<Scalar>();
            rows[j - 1][i - 1] = first - second;
        }
    }
    Array::from_rows(rows).map_err(|e| Error::Inconsistent(format!("index identity gave {e}")))
}

/// `L(*b)` for the pair of `f`; the array `gamma_array` must reproduce.
pub fn reversed_second_block(f: &TriangleFunction) -> Result<Array> {
    Ok(l_of_reverse(hive_to_pair(f)?.b()))
}
