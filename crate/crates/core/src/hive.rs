//! Functions on planar grids, the three rhombus inequalities, hives and the
//! correspondence between standard pairs of arrays and hives.
//!
//! Two grids occur. The rectangle `{0..=n} x {0..=m}` carries
//! [`CornerFunction`]s. The triangle `Δ_n = {(u, v) : 0 <= u <= v <= n}`
//! carries [`TriangleFunction`]s. Both are triangulated by the directions
//! `(1, 0)`, `(0, 1)` and `(1, 1)`, so one rhombus checker serves both.

use std::fmt;

use crate::array::{Array, CornerFunction, Partition};
use crate::condense::shape;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A function on a finite subset of `Z^2`.
pub trait GridFunction {
    /// Value at `(i, j)`, or `None` outside the domain.
    fn value(&self, i: i64, j: i64) -> Option<Scalar>;

    /// All domain points.
    fn points(&self) -> Vec<(i64, i64)>;
}

impl GridFunction for CornerFunction {
    fn value(&self, i: i64, j: i64) -> Option<Scalar> {
        let inside = i >= 0 && j >= 0 && i as usize <= self.n() && j as usize <= self.m();
        inside.then(|| self.at(i as usize, j as usize))
    }

    fn points(&self) -> Vec<(i64, i64)> {
        let (n, m) = (self.n() as i64, self.m() as i64);
        (0..=m).flat_map(|j| (0..=n).map(move |i| (i, j))).collect()
    }
}

/// The three families of primitive rhombi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RhombusKind {
    /// `f(i,j) + f(i+1,j+1) >= f(i+1,j) + f(i,j+1)`.
    I,
    /// `f(i,j+1) + f(i+1,j+1) >= f(i+1,j+2) + f(i,j)`.
    II,
    /// `f(i+1,j) + f(i+1,j+1) >= f(i,j) + f(i+2,j+1)`.
    III,
}

/// Two diagonals of a rhombus, as offsets from its base point.
pub type Diagonals = ([(i64, i64); 2], [(i64, i64); 2]);

impl RhombusKind {
    pub const ALL: [RhombusKind; 3] = [RhombusKind::I, RhombusKind::II, RhombusKind::III];

    /// Vertices as `([short diagonal], [long diagonal])` offsets from the
    /// base point.
    pub fn offsets(self) -> Diagonals {
        match self {
            RhombusKind::I => ([(0, 0), (1, 1)], [(1, 0), (0, 1)]),
            RhombusKind::II => ([(0, 1), (1, 1)], [(1, 2), (0, 0)]),
            RhombusKind::III => ([(1, 0), (1, 1)], [(0, 0), (2, 1)]),
        }
    }
}

/// A failed rhombus inequality, located by its base point `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RhombusViolation {
    pub kind: RhombusKind,
    pub at: (i64, i64),
    /// Long-diagonal sum minus short-diagonal sum; always positive.
    pub excess: Scalar,
}

impl fmt::Display for RhombusViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rhombus {:?} at ({}, {}) off by {}",
            self.kind, self.at.0, self.at.1, self.excess
        )
    }
}

/// Every violated rhombus inequality whose four vertices lie in the domain,
/// in scan order of the base point and then by kind.
pub fn rhombus_violations<F: GridFunction + ?Sized>(f: &F) -> Vec<RhombusViolation> {
    violations_of_kinds(f, &RhombusKind::ALL)
}

fn violations_of_kinds<F: GridFunction + ?Sized>(
    f: &F,
    kinds: &[RhombusKind],
) -> Vec<RhombusViolation> {
    let mut out = Vec::new();
    for (i, j) in f.points() {
        for &kind in kinds {
            let (short, long) = kind.offsets();
            let at = |(di, dj): (i64, i64)| f.value(i + di, j + dj);
            let (Some(s0), Some(s1), Some(l0), Some(l1)) =
                (at(short[0]), at(short[1]), at(long[0]), at(long[1]))
            else {
                continue;
            };
            let excess = l0 + l1 - s0 - s1;
            if excess > Scalar::ZERO {
                out.push(RhombusViolation {
                    kind,
                    at: (i, j),
                    excess,
                });
            }
        }
    }
    out
}

fn satisfies<F: GridFunction + ?Sized>(f: &F, kinds: &[RhombusKind]) -> bool {
    violations_of_kinds(f, kinds).is_empty()
}

/// All three rhombus families hold.
pub fn is_discrete_concave<F: GridFunction + ?Sized>(f: &F) -> bool {
    satisfies(f, &RhombusKind::ALL)
}

/// Families I and II.
pub fn is_vs_concave<F: GridFunction + ?Sized>(f: &F) -> bool {
    satisfies(f, &[RhombusKind::I, RhombusKind::II])
}

/// Families I and III.
pub fn is_hs_concave<F: GridFunction + ?Sized>(f: &F) -> bool {
    satisfies(f, &[RhombusKind::I, RhombusKind::III])
}

/// Family I.
pub fn is_supermodular<F: GridFunction + ?Sized>(f: &F) -> bool {
    satisfies(f, &[RhombusKind::I])
}

/// A function on `Δ_n = {(u, v) : 0 <= u <= v <= n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriangleFunction {
    n: usize,
    // row v holds h(0, v) ..= h(v, v)
    values: Vec<Scalar>,
}

fn tri_index(u: usize, v: usize) -> usize {
    v * (v + 1) / 2 + u
}

impl TriangleFunction {
    pub fn from_fn(n: usize, mut h: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut values = Vec::with_capacity(tri_index(0, n + 1));
        for v in 0..=n {
            for u in 0..=v {
                values.push(h(u, v));
            }
        }
        TriangleFunction { n, values }
    }

    /// Rows `v = 0..=n`, row `v` holding `h(0, v) ..= h(v, v)`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::DimensionMismatch(
                "a triangle needs at least one row".into(),
            ));
        }
        let n = rows.len() - 1;
        let mut values = Vec::with_capacity(tri_index(0, n + 1));
        for (v, row) in rows.into_iter().enumerate() {
            if row.len() != v + 1 {
                return Err(Error::RaggedRows {
                    row: v,
                    expected: v + 1,
                    found: row.len(),
                });
            }
            values.extend(row);
        }
        Ok(TriangleFunction { n, values })
    }

    /// Integer convenience constructor, rows as in [`TriangleFunction::from_rows`].
    ///
    /// # Panics
    ///
    /// Panics on a malformed triangle.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
            .collect();
        TriangleFunction::from_rows(rows).expect("valid triangle")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, u: usize, v: usize) -> Scalar {
        assert!(
            u <= v && v <= self.n,
            "point ({u}, {v}) outside the triangle of size {}",
            self.n
        );
        self.values[tri_index(u, v)]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..=self.n)
            .map(|v| self.values[tri_index(0, v)..=tri_index(v, v)].to_vec())
            .collect()
    }

    /// Adds a constant to every value.
    pub fn shifted(&self, c: Scalar) -> TriangleFunction {
        TriangleFunction {
            n: self.n,
            values: self.values.iter().map(|&x| x + c).collect(),
        }
    }

    /// Side increments: `λ` along `u = 0`, `μ` along `v = n`, `ν` along the
    /// diagonal.
    pub fn increments(&self) -> Increments {
        let n = self.n;
        Increments {
            lambda: (1..=n).map(|v| self.at(0, v) - self.at(0, v - 1)).collect(),
            mu: (1..=n).map(|u| self.at(u, n) - self.at(u - 1, n)).collect(),
            nu: (1..=n)
                .map(|k| self.at(k, k) - self.at(k - 1, k - 1))
                .collect(),
        }
    }

    /// The hive type, if the increments are partitions.
    pub fn hive_type(&self) -> Result<HiveType> {
        self.increments().to_type()
    }
}

impl GridFunction for TriangleFunction {
    fn value(&self, i: i64, j: i64) -> Option<Scalar> {
        (0 <= i && i <= j && j as usize <= self.n).then(|| self.at(i as usize, j as usize))
    }

    fn points(&self) -> Vec<(i64, i64)> {
        let n = self.n as i64;
        (0..=n).flat_map(|v| (0..=v).map(move |u| (u, v))).collect()
    }
}

impl fmt::Debug for TriangleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriangleFunction {} ", self.n)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Boundary increments of a triangle function, not necessarily partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Increments {
    pub lambda: Vec<Scalar>,
    pub mu: Vec<Scalar>,
    pub nu: Vec<Scalar>,
}

impl Increments {
    pub fn to_type(&self) -> Result<HiveType> {
        Ok(HiveType {
            lambda: Partition::new(self.lambda.clone())?,
            mu: Partition::new(self.mu.clone())?,
            nu: Partition::new(self.nu.clone())?,
        })
    }
}

/// The type `(λ, μ, ν)` of a hive or of a pair of arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HiveType {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl HiveType {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        HiveType { lambda, mu, nu }
    }

    /// `|λ| + |μ| = |ν|` and all three have the same length.
    pub fn is_balanced(&self) -> bool {
        let n = self.lambda.len();
        self.mu.len() == n
            && self.nu.len() == n
            && self.lambda.size() + self.mu.size() == self.nu.size()
    }

    pub fn increments(&self) -> Increments {
        Increments {
            lambda: self.lambda.parts().to_vec(),
            mu: self.mu.parts().to_vec(),
            nu: self.nu.parts().to_vec(),
        }
    }
}

fn check_square_pair(a: &Array, b: &Array) -> Result<usize> {
    let n = a.n();
    if a.m() != n || b.n() != n || b.m() != n {
        return Err(Error::InvalidPair(format!(
            "blocks must both be n x n, got {}x{} and {}x{}",
            a.n(),
            a.m(),
            b.n(),
            b.m()
        )));
    }
    Ok(n)
}

/// `(a, b)` with `a` and `b` `L`-tight and `a ⊗ b` `D`-tight. The first
/// block is then necessarily `diag(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardPair {
    a: Array,
    b: Array,
}

impl StandardPair {
    pub fn new(a: Array, b: Array) -> Result<Self> {
        check_square_pair(&a, &b)?;
        if !a.is_l_tight() {
            return Err(Error::InvalidPair("first block is not L-tight".into()));
        }
        if !b.is_l_tight() {
            return Err(Error::InvalidPair("second block is not L-tight".into()));
        }
        let ab = a.concat(&b)?;
        if !ab.is_d_tight() {
            return Err(Error::InvalidPair("concatenation is not D-tight".into()));
        }
        let lambda = Partition::new(a.col_sums())?;
        if a != Array::diag(&lambda) {
            return Err(Error::Inconsistent(
                "bi-tight first block is not diagonal".into(),
            ));
        }
        Ok(StandardPair { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn a(&self) -> &Array {
        &self.a
    }

    pub fn b(&self) -> &Array {
        &self.b
    }

    pub fn into_parts(self) -> (Array, Array) {
        (self.a, self.b)
    }

    pub fn concat(&self) -> Array {
        self.a.concat(&self.b).expect("blocks share their height")
    }

    /// `(λ, μ, ν)`: shapes of the two blocks and the row sums.
    pub fn hive_type(&self) -> HiveType {
        HiveType {
            lambda: Partition::new(self.a.col_sums()).expect("shape of an L-tight block"),
            mu: Partition::new(self.b.col_sums()).expect("shape of an L-tight block"),
            nu: Partition::new(self.concat().row_sums()).expect("row sums of a D-tight array"),
        }
    }
}

/// `(a, b)` with `a` `R`-tight, `b` `L`-tight and `a ⊗ b` `D`-tight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AntiStandardPair {
    a: Array,
    b: Array,
}

impl AntiStandardPair {
    pub fn new(a: Array, b: Array) -> Result<Self> {
        check_square_pair(&a, &b)?;
        if !a.is_r_tight() {
            return Err(Error::InvalidPair("first block is not R-tight".into()));
        }
        if !b.is_l_tight() {
            return Err(Error::InvalidPair("second block is not L-tight".into()));
        }
        if !a.concat(&b)?.is_d_tight() {
            return Err(Error::InvalidPair("concatenation is not D-tight".into()));
        }
        Ok(AntiStandardPair { a, b })
    }

    /// Splits a `n x 2n` array in half and validates.
    pub fn from_concat(ab: &Array) -> Result<Self> {
        if !ab.n().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!("odd width {}", ab.n())));
        }
        let (a, b) = ab.split_at(ab.n() / 2);
        AntiStandardPair::new(a, b)
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn a(&self) -> &Array {
        &self.a
    }

    pub fn b(&self) -> &Array {
        &self.b
    }

    pub fn concat(&self) -> Array {
        self.a.concat(&self.b).expect("blocks share their height")
    }

    pub fn hive_type(&self) -> HiveType {
        HiveType {
            lambda: shape(&self.a),
            mu: Partition::new(self.b.col_sums()).expect("shape of an L-tight block"),
            nu: Partition::new(self.concat().row_sums()).expect("row sums of a D-tight array"),
        }
    }
}

impl StandardPair {
    /// Splits a `n x 2n` array in half and validates.
    pub fn from_concat(ab: &Array) -> Result<Self> {
        if !ab.n().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!("odd width {}", ab.n())));
        }
        let (a, b) = ab.split_at(ab.n() / 2);
        StandardPair::new(a, b)
    }
}

/// `h(u, v) = ∫∫(a ⊗ b)(n + u, v)`: the integral of the pair on the triangle
/// to the right of the first block.
pub fn pair_to_hive(p: &StandardPair) -> TriangleFunction {
    let n = p.n();
    let f = p.concat().integrate();
    TriangleFunction::from_fn(n, |u, v| f.at(n + u, v))
}

/// Inverse of [`pair_to_hive`] on hives normalised by `h(0, 0) = 0`.
pub fn hive_to_pair(h: &TriangleFunction) -> Result<StandardPair> {
    if let Some(v) = rhombus_violations(h).first() {
        return Err(Error::NotDiscreteConcave(v.to_string()));
    }
    if !h.at(0, 0).is_zero() {
        return Err(Error::Inconsistent(format!(
            "hive is not normalised: h(0, 0) = {}",
            h.at(0, 0)
        )));
    }
    let n = h.n();
    if n == 0 {
        return Err(Error::EmptyArray { n: 0, m: 0 });
    }
    let lambda = h.hive_type()?.lambda;
    let mut rows = vec![vec![Scalar::ZERO; n]; n];
    for v in 1..=n {
        for u in 1..v {
            rows[v - 1][u - 1] = h.at(u, v) - h.at(u - 1, v) - h.at(u, v - 1) + h.at(u - 1, v - 1);
        }
        rows[v - 1][v - 1] = h.at(v, v) - h.at(v - 1, v);
    }
    let b = Array::from_rows(rows)?;
    StandardPair::new(Array::diag(&lambda), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{s, scalars};

    pub(crate) fn f4_hive() -> TriangleFunction {
        TriangleFunction::from_int_rows(&[&[0], &[3, 6], &[5, 9, 11], &[5, 10, 14, 15]])
    }

    fn f3_b() -> Array {
        Array::from_int_rows(&[&[3, 0, 0], &[1, 2, 0], &[1, 2, 1]])
    }

    #[test]
    fn product_has_only_vertical_and_horizontal_failures() {
        let f = CornerFunction::from_rows(vec![
            scalars(&[0, 0, 0]),
            scalars(&[0, 1, 2]),
            scalars(&[0, 2, 4]),
        ])
        .unwrap();
        let kinds: Vec<_> = rhombus_violations(&f).iter().map(|v| v.kind).collect();
        assert!(kinds.contains(&RhombusKind::II) && kinds.contains(&RhombusKind::III));
        assert!(!kinds.contains(&RhombusKind::I));
        assert!(is_supermodular(&f) && !is_vs_concave(&f) && !is_hs_concave(&f));
    }

    #[test]
    fn affine_has_no_violations() {
        let h = TriangleFunction::from_fn(4, |u, v| s(3 * u as i64 - 2 * v as i64 + 7));
        assert!(rhombus_violations(&h).is_empty());
    }

    #[test]
    fn tight_integrals_are_strip_concave() {
        let f1 = Array::from_int_rows(&[&[5, 1, 2, 4], &[0, 4, 0, 4], &[0, 0, 0, 3]]);
        assert!(is_vs_concave(&f1.integrate()));
        let f2 = Array::from_int_rows(&[&[2, 3, 1], &[1, 1, 5], &[1, 2, 2]]);
        assert!(is_hs_concave(
            &crate::condense::condense_left(&f2).integrate()
        ));
    }

    #[test]
    fn f4_hive_is_concave_of_the_expected_type() {
        let h = f4_hive();
        assert!(is_discrete_concave(&h));
        let t = h.hive_type().unwrap();
        assert_eq!(t.lambda, Partition::from_ints(&[3, 2, 0]));
        assert_eq!(t.mu, Partition::from_ints(&[5, 4, 1]));
        assert_eq!(t.nu, Partition::from_ints(&[6, 5, 4]));
        assert!(t.is_balanced());
    }

    #[test]
    fn constant_has_zero_increments() {
        let inc = TriangleFunction::from_fn(3, |_, _| s(5)).increments();
        assert!(inc
            .lambda
            .iter()
            .chain(&inc.mu)
            .chain(&inc.nu)
            .all(Scalar::is_zero));
    }

    #[test]
    fn hive_to_pair_of_f4() {
        let p = hive_to_pair(&f4_hive()).unwrap();
        assert_eq!(p.a(), &Array::diag(&Partition::from_ints(&[3, 2, 0])));
        assert_eq!(p.b(), &f3_b());
        assert_eq!(pair_to_hive(&p), f4_hive());
    }

    #[test]
    fn diagonal_pair_gives_partial_sums() {
        let lambda = Partition::from_ints(&[4, 1, 1]);
        let p = StandardPair::new(Array::diag(&lambda), Array::zeros(3, 3)).unwrap();
        let h = pair_to_hive(&p);
        let sums = lambda.partial_sums();
        assert_eq!(h, TriangleFunction::from_fn(3, |_, v| sums[v]));
        assert_eq!(h.increments().mu, scalars(&[0, 0, 0]));
        assert_eq!(hive_to_pair(&h).unwrap(), p);
    }

    #[test]
    fn pair_validation() {
        let left = Array::from_int_rows(&[&[0, 2, 1], &[0, 0, 2], &[0, 0, 0]]);
        assert!(AntiStandardPair::new(left.clone(), f3_b()).is_ok());
        assert!(matches!(
            StandardPair::new(left, f3_b()),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            StandardPair::new(Array::zeros(2, 2), Array::zeros(3, 3)),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn non_concave_is_rejected() {
        let h = TriangleFunction::from_int_rows(&[&[0], &[0, 5], &[0, 0, 0]]);
        assert!(matches!(
            hive_to_pair(&h),
            Err(Error::NotDiscreteConcave(_))
        ));
    }
}
