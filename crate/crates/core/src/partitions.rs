//! Integer partitions and Young-diagram combinatorics: border strips, hook
//! lengths, straight and skew standard-tableau counts, centralizer sizes.
//!
//! Cells are addressed `(row, column)`, both zero-based, in English notation.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::Rational;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A rim hook removed from a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStrip {
    /// Removed cells, ordered from the top-right end to the bottom-left end.
    pub cells: Vec<(usize, usize)>,
    /// Number of rows occupied minus one.
    pub height: usize,
    pub remainder: Partition,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts are
    /// weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::arg(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut p = Partition(parts);
        while p.0.last() == Some(&0) {
            p.0.pop();
        }
        p
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^count)`.
    pub fn ones(count: usize) -> Self {
        Partition(vec![1; count])
    }

    /// The `rows × cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    /// The hook `(k − j, 1^j)`.
    pub fn hook(k: usize, j: usize) -> Result<Self> {
        if k == 0 || j >= k {
            return Err(Error::arg(format!("hook (k={k}, j={j}) needs 0 <= j < k")));
        }
        let mut parts = vec![k - j];
        parts.extend(std::iter::repeat_n(1, j));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Entrywise sum, the shorter sequence padded by zeros.
    pub fn add_padded(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Entrywise difference; fails unless `other ⊆ self` and the result is a partition.
    pub fn sub_padded(&self, other: &Partition) -> Result<Partition> {
        if !self.contains(other) {
            return Err(Error::arg(format!("{other} is not contained in {self}")));
        }
        Partition::new((0..self.length()).map(|i| self.part(i) - other.part(i)).collect::<Vec<_>>())
    }

    /// Every part multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p * factor).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().take_while(|&&p| p > c).count()).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.0[row + 1..].iter().take_while(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Multiplicity `m_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// All border strips with exactly `strip_size` cells.
    ///
    /// Walks the rim from the last cell of each row towards the bottom-left,
    /// stepping down whenever possible; the strip is kept when its final cell
    /// is the bottom of its column.
    pub fn border_strips(&self, strip_size: usize) -> Vec<BorderStrip> {
        let mut strips = Vec::new();
        if strip_size == 0 {
            return strips;
        }
        for start_row in 0..self.length() {
            let (mut r, mut c) = (start_row, self.part(start_row) - 1);
            let mut cells = vec![(r, c)];
            while cells.len() < strip_size {
                if self.contains_cell(r + 1, c) {
                    r += 1;
                } else if c > 0 {
                    c -= 1;
                } else {
                    break;
                }
                cells.push((r, c));
            }
            if cells.len() < strip_size || self.contains_cell(r + 1, c) {
                continue;
            }
            let mut parts = self.0.clone();
            for &(row, _) in &cells {
                parts[row] -= 1;
            }
            strips.push(BorderStrip {
                height: r - start_row,
                remainder: Partition::from_sorted(parts),
                cells,
            });
        }
        strips
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn syt_count(&self) -> BigUint {
        let hooks: BigUint = self.cells().map(|(r, c)| BigUint::from(self.hook_length(r, c))).product();
        factorial(self.size()) / hooks
    }

    /// Number of standard fillings of the skew shape `self / inner`.
    ///
    /// Uses the Aitken determinant `d! · det[1/(λ_i − ν_j − i + j)!]` with
    /// `1/t! = 0` for negative `t`.
    pub fn skew_syt_count(&self, inner: &Partition) -> Result<BigUint> {
        if !self.contains(inner) {
            return Err(Error::arg(format!("{inner} is not contained in {self}")));
        }
        let len = self.length();
        let rows: Vec<Vec<Rational>> = (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| {
                        let t = self.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                        if t < 0 {
                            Rational::zero()
                        } else {
                            Rational::new(BigInt::one(), factorial(t as usize).into())
                        }
                    })
                    .collect()
            })
            .collect();
        let count = linalg::determinant(rows) * Rational::from_integer(factorial(self.size() - inner.size()).into());
        if !count.is_integer() {
            return Err(Error::internal(format!("non-integral skew count for {self}/{inner}")));
        }
        count
            .to_integer()
            .to_biguint()
            .ok_or_else(|| Error::internal(format!("negative skew count for {self}/{inner}")))
    }

    /// Size `z_ν = ∏ i^{m_i} m_i!` of the centralizer of a permutation of cycle type `self`.
    pub fn centralizer_size(&self) -> BigUint {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| BigUint::from(i).pow(m as u32) * factorial(m))
            .product()
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    (factorial(n as usize) / (factorial(k as usize) * factorial((n - k) as usize))).into()
}

/// The hook `π_j(k) = (k − j, 1^j)`.
pub fn hook_partition(k: usize, j: usize) -> Result<Partition> {
    Partition::hook(k, j)
}

/// Staircases `δ_n = (n−1, …, 1)` and `ρ_n = (n, …, 1)`.
pub fn staircases(n: usize) -> (Partition, Partition) {
    let delta = Partition::from_sorted((0..n).rev().collect());
    let rho = Partition::from_sorted((1..=n).rev().collect());
    (delta, rho)
}

/// Partitions of `k` with at most `max_length` parts, in reverse-lexicographic order.
pub fn partitions_of(k: usize, max_length: Option<usize>) -> PartitionsOf {
    PartitionsOf {
        next: Some(if k == 0 { Vec::new() } else { vec![k] }),
        max_length: max_length.unwrap_or(usize::MAX),
    }
}

#[derive(Debug, Clone)]
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
    max_length: usize,
}

impl PartitionsOf {
    fn advance(parts: &[usize]) -> Option<Vec<usize>> {
        let i = parts.iter().rposition(|&p| p > 1)?;
        let mut rest: usize = parts[i..].iter().sum();
        let fill = parts[i] - 1;
        let mut next = parts[..i].to_vec();
        while rest >= fill {
            next.push(fill);
            rest -= fill;
        }
        if rest > 0 {
            next.push(rest);
        }
        Some(next)
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let current = self.next.take()?;
            self.next = Self::advance(&current);
            if current.len() <= self.max_length {
                return Some(Partition(current));
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Accepts `4,3,2,1`, `[4,3,2,1]`, `(4,3,2,1)` or an empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::arg(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
