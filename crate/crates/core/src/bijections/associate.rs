//! The associativity bijection between compatible couples of standard
//! pairs, on arrays and on hives.
//!
//! A couple `((a, b), (l, c))` with `(a, b)` of type `(λ, μ, σ)` and
//! `(l, c)` of type `(σ, ν, π)` is sent to `((b', c'), (a, L(b ⊗ c)))` of
//! types `(μ, ν, τ)` and `(λ, τ, π)`, where `(b', c')` halves `D(b ⊗ c)`.

use crate::array::Array;
use crate::condense::{condense_down, condense_left};
use crate::error::{Error, Result};
use crate::hive::{is_discrete_concave, rhombus_violations, StandardPair, TriangleFunction};
use crate::octahedron::{rsk_inverse, tetra_propagate};

fn left_block(x: &Array, n: usize) -> Result<Array> {
    x.truncate_columns(n)
}

/// Forward associativity map.
pub fn associate(sp1: &StandardPair, sp2: &StandardPair) -> Result<(StandardPair, StandardPair)> {
    let n = sp1.n();
    if sp2.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "pairs of size {n} and {}",
            sp2.n()
        )));
    }
    let sigma = sp1.hive_type().nu;
    if sp2.hive_type().lambda != sigma {
        return Err(Error::ShapeMismatch(format!(
            "final shape {sigma:?} of the first pair differs from starting shape {:?} of the second",
            sp2.hive_type().lambda
        )));
    }
    let bc = sp1.b().concat(sp2.b())?;
    let first = StandardPair::from_concat(&condense_down(&bc))?;
    let second = StandardPair::new(sp1.a().clone(), left_block(&condense_left(&bc), n)?)?;
    Ok((first, second))
}

/// Inverse of [`associate`]: `(b, c)` is the unique array with
/// `D(b ⊗ c) = b' ⊗ c'` and `L(b ⊗ c) = l`.
pub fn associate_inverse(
    out1: &StandardPair,
    out2: &StandardPair,
) -> Result<(StandardPair, StandardPair)> {
    let n = out1.n();
    if out2.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "pairs of size {n} and {}",
            out2.n()
        )));
    }
    let tau = out1.hive_type().nu;
    if out2.hive_type().mu != tau {
        return Err(Error::ShapeMismatch(format!(
            "final shape {tau:?} of the first pair differs from intermediate shape {:?} of the second",
            out2.hive_type().mu
        )));
    }
    let d = out1.concat();
    let l = out2.b().pad_columns(2 * n);
    let (b, c) = rsk_inverse(&d, &l)?.split_at(n);
    let a = out2.a().clone();
    let l_ab = left_block(&condense_left(&a.concat(&b)?), n)?;
    Ok((StandardPair::new(a, b)?, StandardPair::new(l_ab, c)?))
}

fn require_normalised_hive(h: &TriangleFunction, name: &str) -> Result<()> {
    if let Some(v) = rhombus_violations(h).first() {
        return Err(Error::NotDiscreteConcave(format!("{name}: {v}")));
    }
    if !h.at(0, 0).is_zero() {
        return Err(Error::Inconsistent(format!(
            "{name} is not normalised to 0 at the origin"
        )));
    }
    Ok(())
}

/// Functional associativity. `f` sits on the front wall and `g` on the
/// ground of the tetrahedron of size `n`:
/// `F(x, 0, z) = f(x, x + z)` and `F(x, y, 0) = g(y, x + y)`, sharing the
/// `σ` edge `f(x, x) = g(0, x)`. After propagation along `(-1, 1, 1)` the
/// slope wall gives `p(u, v) = F(v - u, u, n - v) - f(0, n)` of type
/// `(μ, ν, τ)` and the shadow wall gives `q(u, v) = F(0, u, v - u)` of type
/// `(λ, τ, π)`.
pub fn associate_functional(
    f: &TriangleFunction,
    g: &TriangleFunction,
) -> Result<(TriangleFunction, TriangleFunction)> {
    let n = f.n();
    if g.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "hives of size {n} and {}",
            g.n()
        )));
    }
    require_normalised_hive(f, "first hive")?;
    require_normalised_hive(g, "second hive")?;
    if (0..=n).any(|x| f.at(x, x) != g.at(0, x)) {
        return Err(Error::ShapeMismatch(
            "the σ edges of the two hives differ".into(),
        ));
    }
    let t = tetra_propagate(n, |x, y| g.at(y, x + y), |x, z| f.at(x, x + z))?;
    let lambda_total = f.at(0, n);
    let p = TriangleFunction::from_fn(n, |u, v| t.at(v - u, u, n - v) - lambda_total);
    let q = TriangleFunction::from_fn(n, |u, v| t.at(0, u, v - u));
    debug_assert!(is_discrete_concave(&p) && is_discrete_concave(&q));
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::Partition;
    use crate::hive::pair_to_hive;

    fn unit_pair() -> (StandardPair, StandardPair) {
        // λ = (1,0), μ = (1,0), σ = (1,1); ν = (1,0), π = (2,1)
        let sp1 = StandardPair::new(
            Array::diag(&Partition::from_ints(&[1, 0])),
            Array::from_int_rows(&[&[0, 0], &[1, 0]]),
        )
        .unwrap();
        let sp2 = StandardPair::new(
            Array::diag(&Partition::from_ints(&[1, 1])),
            Array::from_int_rows(&[&[1, 0], &[0, 0]]),
        )
        .unwrap();
        (sp1, sp2)
    }

    #[test]
    fn small_couple_round_trip() {
        let (sp1, sp2) = unit_pair();
        let (o1, o2) = associate(&sp1, &sp2).unwrap();
        assert_eq!(o1.hive_type().lambda, Partition::from_ints(&[1, 0]));
        assert_eq!(o1.hive_type().mu, Partition::from_ints(&[1, 0]));
        assert_eq!(o2.hive_type().lambda, Partition::from_ints(&[1, 0]));
        assert_eq!(o2.hive_type().nu, Partition::from_ints(&[2, 1]));
        assert_eq!(o1.hive_type().nu, o2.hive_type().mu);
        assert_eq!(
            associate_inverse(&o1, &o2).unwrap(),
            (sp1.clone(), sp2.clone())
        );
        let (p, q) = associate_functional(&pair_to_hive(&sp1), &pair_to_hive(&sp2)).unwrap();
        assert_eq!((p, q), (pair_to_hive(&o1), pair_to_hive(&o2)));
    }

    #[test]
    fn zero_third_array() {
        let lambda = Partition::from_ints(&[2, 0]);
        let sp1 = StandardPair::new(
            Array::diag(&lambda),
            Array::from_int_rows(&[&[1, 0], &[1, 0]]),
        )
        .unwrap();
        let sigma = sp1.hive_type().nu;
        let sp2 = StandardPair::new(Array::diag(&sigma), Array::zeros(2, 2)).unwrap();
        let (o1, o2) = associate(&sp1, &sp2).unwrap();
        assert!(o1.b().is_zero());
        assert_eq!(o2.b(), &condense_left(sp1.b()));
        assert_eq!(o2.hive_type().nu, sigma);
    }

    #[test]
    fn incompatible_shapes() {
        let (sp1, _) = unit_pair();
        assert!(matches!(
            associate(&sp1, &sp1),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn zero_hives() {
        let z = TriangleFunction::from_fn(3, |_, _| crate::scalar::Scalar::ZERO);
        assert_eq!(associate_functional(&z, &z).unwrap(), (z.clone(), z));
    }
}
