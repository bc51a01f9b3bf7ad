//! Semistandard tableaux as integer `D`-tight arrays, and
//! Littlewood–Richardson skew tableaux as integer standard pairs.
//!
//! Tableaux use the French convention: row 1 is the bottom row and the
//! longest. Row `j` of the tableau of an array holds letter `i` exactly
//! `a(i, j)` times.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::{Array, Partition};
use crate::error::{Error, Result};
use crate::hive::StandardPair;
use crate::scalar::Scalar;

/// A semistandard tableau over the alphabet `1..=n`, rows bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SsytRepr", into = "SsytRepr")]
pub struct Ssyt {
    n: usize,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SsytRepr {
    alphabet: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<SsytRepr> for Ssyt {
    type Error = Error;
    fn try_from(r: SsytRepr) -> Result<Self> {
        Ssyt::new(r.alphabet, r.rows)
    }
}

impl From<Ssyt> for SsytRepr {
    fn from(t: Ssyt) -> Self {
        SsytRepr {
            alphabet: t.n,
            rows: t.rows,
        }
    }
}

impl Ssyt {
    /// Validates rows (weakly increasing), row lengths (weakly decreasing
    /// upwards), columns (strictly increasing upwards) and the alphabet.
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if rows.is_empty() || n == 0 {
            return bad("a tableau needs at least one row and one letter".into());
        }
        for (j, row) in rows.iter().enumerate() {
            if let Some(&x) = row.iter().find(|&&x| x == 0 || x as usize > n) {
                return bad(format!("letter {x} in row {} outside 1..={n}", j + 1));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", j + 1));
            }
        }
        for j in 1..rows.len() {
            let (below, above) = (&rows[j - 1], &rows[j]);
            if above.len() > below.len() {
                return bad(format!("row {} is longer than the row below", j + 1));
            }
            if let Some(c) = (0..above.len()).find(|&c| above[c] <= below[c]) {
                return bad(format!(
                    "column {} is not strictly increasing at row {}",
                    c + 1,
                    j + 1
                ));
            }
        }
        Ok(Ssyt { n, rows })
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for Ssyt {
    /// French picture: the bottom row is printed last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect())
            .collect();
        render_rows(f, &cells)
    }
}

fn render_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<String>]) -> fmt::Result {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut first = true;
    for row in rows.iter().rev() {
        if row.is_empty() {
            continue;
        }
        if !first {
            writeln!(f)?;
        }
        first = false;
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        write!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

fn integer_masses(a: &Array) -> Result<Vec<Vec<usize>>> {
    a.rows()
        .map(|row| {
            row.iter()
                .map(|v| v.to_integer().map(|k| k as usize).ok_or(Error::NonInteger))
                .collect()
        })
        .collect()
}

/// Row `j` holds letter `i` with multiplicity `a(i, j)`.
pub fn dtight_to_ssyt(a: &Array) -> Result<Ssyt> {
    let masses = integer_masses(a)?;
    if !a.is_d_tight() {
        return Err(Error::NotTight { direction: 'D' });
    }
    let rows = masses
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(i as u32 + 1, k))
                .collect()
        })
        .collect();
    Ssyt::new(a.n(), rows)
}

/// The `n x m` array of letter multiplicities; inverse of [`dtight_to_ssyt`].
pub fn ssyt_to_dtight(t: &Ssyt) -> Array {
    let rows = t
        .rows
        .iter()
        .map(|row| {
            let mut counts = vec![Scalar::ZERO; t.n];
            for &x in row {
                counts[x as usize - 1] += Scalar::ONE;
            }
            counts
        })
        .collect();
    Array::from_rows(rows).expect("counts form a valid array")
}

/// `true` iff every suffix of `word` contains, for each `i`, at least as
/// many letters `i` as letters `i + 1`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let top = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; top + 2];
    for &x in word.iter().rev() {
        let x = x as usize;
        counts[x] += 1;
        if x > 1 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// A skew tableau of shape `ν / λ` with letters `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LrTableau {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    /// Filled cells of each row, bottom to top.
    pub rows: Vec<Vec<u32>>,
}

impl LrTableau {
    pub fn n(&self) -> usize {
        self.outer.len()
    }

    /// Rows read top row first, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Letter multiplicities.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.n()];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        w
    }

    /// Semistandard on the skew shape with a Yamanouchi reading word.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if self.inner.len() != n || self.rows.len() != n {
            return bad("outer shape, inner shape and rows differ in length".into());
        }
        for j in 0..n {
            if self.inner[j] > self.outer[j] || self.outer[j] - self.inner[j] != self.rows[j].len()
            {
                return bad(format!("row {} does not fit the skew shape", j + 1));
            }
            if j > 0 && (self.outer[j] > self.outer[j - 1] || self.inner[j] > self.inner[j - 1]) {
                return bad("shapes are not partitions".into());
            }
        }
        let cell = |j: usize, c: usize| -> Option<u32> {
            (c >= self.inner[j] && c < self.outer[j]).then(|| self.rows[j][c - self.inner[j]])
        };
        for j in 0..n {
            let row = &self.rows[j];
            if row.iter().any(|&x| x == 0 || x as usize > n) {
                return bad(format!("letter outside 1..={n} in row {}", j + 1));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {} is not weakly increasing", j + 1));
            }
            if j > 0 {
                for c in self.inner[j]..self.outer[j] {
                    if let (Some(below), Some(here)) = (cell(j - 1, c), cell(j, c)) {
                        if here <= below {
                            return bad(format!(
                                "column {} is not strictly increasing at row {}",
                                c + 1,
                                j + 1
                            ));
                        }
                    }
                }
            }
        }
        if !is_yamanouchi(&self.reading_word()) {
            return bad("reading word is not a Yamanouchi word".into());
        }
        Ok(())
    }
}

impl fmt::Display for LrTableau {
    /// French picture with the inner shape drawn as dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n())
            .map(|j| {
                std::iter::repeat_n(".".to_string(), self.inner[j])
                    .chain(self.rows[j].iter().map(u32::to_string))
                    .collect()
            })
            .collect();
        render_rows(f, &rows)
    }
}

fn to_usize(p: &[Scalar]) -> Result<Vec<usize>> {
    p.iter()
        .map(|v| v.to_integer().map(|k| k as usize).ok_or(Error::NonInteger))
        .collect()
}

/// The tableau of `diag(λ) ⊗ b` with the first-block letters removed and
/// the remaining letters lowered by `n`.
pub fn pair_to_lr_tableau(p: &StandardPair) -> Result<LrTableau> {
    let n = p.n();
    let t = p.hive_type();
    let inner = to_usize(t.lambda.parts())?;
    let outer = to_usize(t.nu.parts())?;
    let full = dtight_to_ssyt(&p.concat())?;
    let rows = full
        .rows()
        .iter()
        .enumerate()
        .map(|(j, row)| {
            debug_assert!(row[..inner[j]].iter().all(|&x| x as usize == j + 1));
            row[inner[j]..].iter().map(|&x| x - n as u32).collect()
        })
        .collect();
    let lr = LrTableau { outer, inner, rows };
    lr.validate()?;
    Ok(lr)
}

/// Inverse of [`pair_to_lr_tableau`].
pub fn lr_tableau_to_pair(t: &LrTableau) -> Result<StandardPair> {
    t.validate()?;
    let n = t.n();
    let lambda = Partition::new(t.inner.iter().map(|&k| Scalar::int(k as i64)).collect())?;
    let rows = t
        .rows
        .iter()
        .map(|row| {
            let mut counts = vec![Scalar::ZERO; n];
            for &x in row {
                counts[x as usize - 1] += Scalar::ONE;
            }
            counts
        })
        .collect();
    StandardPair::new(Array::diag(&lambda), Array::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(counts: &[(u32, usize)]) -> Vec<u32> {
        counts
            .iter()
            .flat_map(|&(x, k)| std::iter::repeat_n(x, k))
            .collect()
    }

    #[test]
    fn tableau_of_a_tight_array() {
        let f1 = Array::from_int_rows(&[&[5, 1, 2, 4], &[0, 4, 0, 4], &[0, 0, 0, 3]]);
        let t = dtight_to_ssyt(&f1).unwrap();
        assert_eq!(t.rows()[0], letters(&[(1, 5), (2, 1), (3, 2), (4, 4)]));
        assert_eq!(t.rows()[1], letters(&[(2, 4), (4, 4)]));
        assert_eq!(t.rows()[2], letters(&[(4, 3)]));
        assert_eq!(ssyt_to_dtight(&t), f1);
    }

    #[test]
    fn single_cell() {
        let t = dtight_to_ssyt(&Array::diag(&Partition::from_ints(&[1, 0]))).unwrap();
        assert_eq!(t.to_string(), "1");
    }

    #[test]
    fn rejects_loose_and_fractional() {
        assert_eq!(
            dtight_to_ssyt(&Array::from_int_rows(&[&[0, 0], &[1, 0]])),
            Err(Error::NotTight { direction: 'D' })
        );
        let half = Array::from_rows(vec![vec![Scalar::ratio(1, 2)]]).unwrap();
        assert_eq!(dtight_to_ssyt(&half), Err(Error::NonInteger));
        assert!(Ssyt::new(2, vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn yamanouchi_words() {
        let shifted: Vec<u32> = "4556455444"
            .bytes()
            .map(|b| (b - b'0') as u32 - 3)
            .collect();
        assert!(is_yamanouchi(&shifted));
        assert!(is_yamanouchi(&[1, 1, 1]));
        assert!(!is_yamanouchi(&[1, 2]));
        assert!(is_yamanouchi(&[2, 1]));
        assert!(is_yamanouchi(&[]));
    }

    #[test]
    fn skew_tableau_round_trip() {
        let b = Array::from_int_rows(&[&[3, 0, 0], &[1, 2, 0], &[1, 2, 1]]);
        let p = StandardPair::new(Array::diag(&Partition::from_ints(&[3, 2, 0])), b).unwrap();
        let t = pair_to_lr_tableau(&p).unwrap();
        assert_eq!(t.rows, vec![vec![1, 1, 1], vec![1, 2, 2], vec![1, 2, 2, 3]]);
        let word: String = t
            .reading_word()
            .iter()
            .map(|x| char::from(b'0' + *x as u8 + 3))
            .collect();
        assert_eq!(word, "4556455444");
        assert_eq!(lr_tableau_to_pair(&t).unwrap(), p);
    }

    #[test]
    fn empty_skew_tableau() {
        let lambda = Partition::from_ints(&[2, 1]);
        let p = StandardPair::new(Array::diag(&lambda), Array::zeros(2, 2)).unwrap();
        let t = pair_to_lr_tableau(&p).unwrap();
        assert_eq!(t.outer, t.inner);
        assert!(t.rows.iter().all(Vec::is_empty));
        assert_eq!(lr_tableau_to_pair(&t).unwrap(), p);
    }
}
