//! Arrays of non-negative masses and their cumulative corner functions.
//!
//! An [`Array`] has `n` columns (indexed `1..=n`, left to right) and `m` rows
//! (indexed `1..=m`, bottom to top). Its integral [`CornerFunction`] assigns to
//! each lattice point `(i, j)` the total mass of the boxes south-west of it;
//! the mixed second difference recovers the masses again.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A rectangular filling of unit boxes with non-negative exact masses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Array {
    n: usize,
    m: usize,
    // row-major, bottom row first
    data: Vec<Scalar>,
}

impl Array {
    /// Builds an array from rows listed bottom to top.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 || m == 0 {
            return Err(Error::EmptyArray { n, m });
        }
        let mut data = Vec::with_capacity(n * m);
        for (j, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows {
                    row: j + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            for (i, value) in row.into_iter().enumerate() {
                if value.is_negative() {
                    return Err(Error::NegativeMass {
                        i: i + 1,
                        j: j + 1,
                        value: value.to_string(),
                    });
                }
                data.push(value);
            }
        }
        Ok(Array { n, m, data })
    }

    /// Integer convenience constructor; rows bottom to top.
    ///
    /// # Panics
    ///
    /// Panics on empty, ragged or negative input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
            .collect();
        Array::from_rows(rows).expect("valid integer array")
    }

    pub fn zeros(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "arrays are at least 1x1");
        Array {
            n,
            m,
            data: vec![Scalar::ZERO; n * m],
        }
    }

    /// The `n x n` array holding `parts[i]` on the diagonal box `(i, i)`.
    pub fn diag(parts: &Partition) -> Self {
        let n = parts.len();
        let mut a = Array::zeros(n, n);
        for (k, &p) in parts.parts().iter().enumerate() {
            a.data[k * n + k] = p;
        }
        a
    }

    pub(crate) fn from_raw(n: usize, m: usize, data: Vec<Scalar>) -> Self {
        debug_assert_eq!(data.len(), n * m);
        debug_assert!(data.iter().all(|v| !v.is_negative()));
        Array { n, m, data }
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Mass of box `(i, j)`, both 1-based.
    pub fn mass(&self, i: usize, j: usize) -> Scalar {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.m).contains(&j),
            "box ({i}, {j}) out of range"
        );
        self.data[(j - 1) * self.n + (i - 1)]
    }

    /// Row `j` (1-based), left to right.
    pub fn row(&self, j: usize) -> &[Scalar] {
        &self.data[(j - 1) * self.n..j * self.n]
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows().map(<[Scalar]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<Scalar> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<Scalar> {
        (1..=self.n)
            .map(|i| (1..=self.m).map(|j| self.mass(i, j)).sum())
            .collect()
    }

    pub fn total(&self) -> Scalar {
        self.data.iter().sum()
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(Scalar::is_integer)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Places the columns of `other` to the right of the columns of `self`.
    pub fn concat(&self, other: &Array) -> Result<Array> {
        if self.m != other.m {
            return Err(Error::HeightMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let n = self.n + other.n;
        let mut data = Vec::with_capacity(n * self.m);
        for (left, right) in self.rows().zip(other.rows()) {
            data.extend_from_slice(left);
            data.extend_from_slice(right);
        }
        Ok(Array { n, m: self.m, data })
    }

    /// Splits after column `k`, returning the left `k` columns and the rest.
    pub fn split_at(&self, k: usize) -> (Array, Array) {
        assert!(
            k >= 1 && k < self.n,
            "split column {k} out of range for width {}",
            self.n
        );
        let mut left = Vec::with_capacity(k * self.m);
        let mut right = Vec::with_capacity((self.n - k) * self.m);
        for row in self.rows() {
            left.extend_from_slice(&row[..k]);
            right.extend_from_slice(&row[k..]);
        }
        (
            Array {
                n: k,
                m: self.m,
                data: left,
            },
            Array {
                n: self.n - k,
                m: self.m,
                data: right,
            },
        )
    }

    /// Keeps the first `k` columns; fails if a dropped column carries mass.
    pub fn truncate_columns(&self, k: usize) -> Result<Array> {
        if k >= self.n {
            return Ok(self.clone());
        }
        let (left, right) = self.split_at(k);
        if !right.is_zero() {
            return Err(Error::DimensionMismatch(format!(
                "columns {}..{} are not empty",
                k + 1,
                self.n
            )));
        }
        Ok(left)
    }

    /// Appends empty columns up to width `k`.
    pub fn pad_columns(&self, k: usize) -> Array {
        if k <= self.n {
            return self.clone();
        }
        self.concat(&Array::zeros(k - self.n, self.m))
            .expect("same height")
    }

    /// Mirror in the main diagonal: `a^T(i, j) = a(j, i)`.
    pub fn transpose(&self) -> Array {
        let mut data = Vec::with_capacity(self.data.len());
        for i in 1..=self.n {
            for j in 1..=self.m {
                data.push(self.mass(i, j));
            }
        }
        Array {
            n: self.m,
            m: self.n,
            data,
        }
    }

    /// Central symmetry: `*a(i, j) = a(n - i + 1, m - j + 1)`.
    pub fn central_reverse(&self) -> Array {
        let mut data = self.data.clone();
        data.reverse();
        Array {
            n: self.n,
            m: self.m,
            data,
        }
    }

    /// The cumulative south-west sum `f(i, j) = sum of a(i', j')` over
    /// `i' <= i, j' <= j`.
    pub fn integrate(&self) -> CornerFunction {
        let w = self.n + 1;
        let mut values = vec![Scalar::ZERO; w * (self.m + 1)];
        for j in 1..=self.m {
            let mut running = Scalar::ZERO;
            for i in 1..=self.n {
                running += self.mass(i, j);
                values[j * w + i] = values[(j - 1) * w + i] + running;
            }
        }
        CornerFunction {
            n: self.n,
            m: self.m,
            values,
        }
    }

    /// `D`-tightness in partial-row-sum form: for every pair of adjacent
    /// rows `j, j + 1` and every column `i`, the mass of row `j` strictly left
    /// of `i` dominates the mass of row `j + 1` up to and including `i`.
    pub fn is_d_tight(&self) -> bool {
        (1..self.m).all(|j| rows_d_tight(self.row(j), self.row(j + 1)))
    }

    pub fn is_l_tight(&self) -> bool {
        self.transpose().is_d_tight()
    }

    pub fn is_r_tight(&self) -> bool {
        self.central_reverse().is_l_tight()
    }

    pub fn is_u_tight(&self) -> bool {
        self.central_reverse().is_d_tight()
    }
}

/// Two-row `D`-tightness of `lower` below `upper`.
pub(crate) fn rows_d_tight(lower: &[Scalar], upper: &[Scalar]) -> bool {
    let mut below = Scalar::ZERO;
    let mut above = Scalar::ZERO;
    for (l, u) in lower.iter().zip(upper) {
        above += *u;
        if below < above {
            return false;
        }
        below += *l;
    }
    true
}

impl fmt::Debug for Array {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Array {}x{} ", self.n, self.m)?;
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Array {
    /// Top row first, the way arrays are usually drawn.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.rows().collect();
        for (k, row) in rows.iter().rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Function on the rectangular grid `{0..=n} x {0..=m}` vanishing on the two
/// axes; the integral of an array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CornerFunction {
    n: usize,
    m: usize,
    // (m + 1) rows of n + 1 values, j = 0 first
    values: Vec<Scalar>,
}

impl CornerFunction {
    /// Builds from rows `j = 0..=m`, each holding `f(0, j) ..= f(n, j)`.
    /// The axes must be zero; supermodularity is checked by
    /// [`CornerFunction::mixed_derivative`].
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.len() < 2 || rows[0].len() < 2 {
            return Err(Error::EmptyArray {
                n: rows.first().map_or(0, |r| r.len().saturating_sub(1)),
                m: rows.len().saturating_sub(1),
            });
        }
        let m = rows.len() - 1;
        let n = rows[0].len() - 1;
        let mut values = Vec::with_capacity((n + 1) * (m + 1));
        for (j, row) in rows.into_iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::RaggedRows {
                    row: j,
                    expected: n + 1,
                    found: row.len(),
                });
            }
            for (i, v) in row.into_iter().enumerate() {
                if (i == 0 || j == 0) && !v.is_zero() {
                    return Err(Error::NonZeroAxis { i, j });
                }
                values.push(v);
            }
        }
        Ok(CornerFunction { n, m, values })
    }

    pub(crate) fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut values = Vec::with_capacity((n + 1) * (m + 1));
        for j in 0..=m {
            for i in 0..=n {
                values.push(if i == 0 || j == 0 {
                    Scalar::ZERO
                } else {
                    f(i, j)
                });
            }
        }
        CornerFunction { n, m, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn at(&self, i: usize, j: usize) -> Scalar {
        assert!(i <= self.n && j <= self.m, "point ({i}, {j}) out of range");
        self.values[j * (self.n + 1) + i]
    }

    /// Rows `j = 0..=m`.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.values
            .chunks(self.n + 1)
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    fn box_difference(&self, i: usize, j: usize) -> Scalar {
        self.at(i, j) - self.at(i - 1, j) - self.at(i, j - 1) + self.at(i - 1, j - 1)
    }

    pub fn is_supermodular(&self) -> bool {
        (1..=self.m).all(|j| (1..=self.n).all(|i| !self.box_difference(i, j).is_negative()))
    }

    /// The array of mixed second differences; the exact inverse of
    /// [`Array::integrate`].
    pub fn mixed_derivative(&self) -> Result<Array> {
        let mut data = Vec::with_capacity(self.n * self.m);
        for j in 1..=self.m {
            for i in 1..=self.n {
                let d = self.box_difference(i, j);
                if d.is_negative() {
                    return Err(Error::NotSupermodular { i, j });
                }
                data.push(d);
            }
        }
        Ok(Array::from_raw(self.n, self.m, data))
    }
}

impl fmt::Debug for CornerFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CornerFunction {}x{} ", self.n, self.m)?;
        f.debug_list()
            .entries(self.values.chunks(self.n + 1))
            .finish()
    }
}

/// A weakly decreasing tuple of non-negative scalars.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Scalar>", into = "Vec<Scalar>")]
pub struct Partition(Vec<Scalar>);

impl Partition {
    pub fn new(parts: Vec<Scalar>) -> Result<Self> {
        if parts.iter().any(Scalar::is_negative) {
            return Err(Error::NotPartition(format!(
                "{parts:?} has a negative part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// # Panics
    ///
    /// Panics if `parts` is not a partition.
    pub fn from_ints(parts: &[i64]) -> Self {
        Partition::new(parts.iter().map(|&p| Scalar::int(p)).collect()).expect("valid partition")
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![Scalar::ZERO; n])
    }

    pub fn parts(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> Scalar {
        self.0.iter().sum()
    }

    pub fn is_integer(&self) -> bool {
        self.0.iter().all(Scalar::is_integer)
    }

    /// Parts in increasing order, `(λ_n, ..., λ_1)`.
    pub fn reversed(&self) -> Vec<Scalar> {
        self.0.iter().rev().copied().collect()
    }

    /// Partial sums `0, λ_1, λ_1 + λ_2, ...` of length `len + 1`.
    pub fn partial_sums(&self) -> Vec<Scalar> {
        partial_sums(&self.0)
    }

    /// Integer parts with trailing zeros removed.
    pub fn trimmed(&self) -> Vec<Scalar> {
        let mut parts = self.0.clone();
        while parts.last().is_some_and(Scalar::is_zero) {
            parts.pop();
        }
        parts
    }
}

impl TryFrom<Vec<Scalar>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<Scalar>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<Scalar> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Running sums `0, x_1, x_1 + x_2, ...` of length `xs.len() + 1`.
pub fn partial_sums(xs: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(xs.len() + 1);
    let mut acc = Scalar::ZERO;
    out.push(acc);
    for &x in xs {
        acc += x;
        out.push(acc);
    }
    out
}
