//! Closed-form eigenweights from symmetric-group characters.
//!
//! Type A, C and D (spin) values are alternating sums of characters at the
//! class `ν_k`. Type B and type D with the standard coweight are constants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::characters::character;
use crate::error::Result;
use crate::group::{Coweight, Family, Generator, GroupSpec};
use crate::partitions::{binomial, factorial, staircases, Partition};
use crate::polyalg::{integer, Rational};

/// `∇̄` restricted to a two-dimensional graded piece of `V`. Column `j` of
/// `matrix` is the image of `basis[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub basis: [Generator; 2],
    pub matrix: [[Rational; 2]; 2],
    /// Both roots in descending order, when they are rational.
    pub eigenvalues: Option<[Rational; 2]>,
    /// `[1, −trace, det]`, highest power first.
    pub char_poly: [Rational; 3],
}

impl Block {
    pub fn new(basis: [Generator; 2], matrix: [[Rational; 2]; 2]) -> Self {
        let trace = &matrix[0][0] + &matrix[1][1];
        let det = &matrix[0][0] * &matrix[1][1] - &matrix[0][1] * &matrix[1][0];
        let discriminant = &trace * &trace - integer(4) * &det;
        let eigenvalues = rational_sqrt(&discriminant).map(|root| {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            [(&trace + &root) * &half, (&trace - &root) * &half]
        });
        Block { basis, matrix, eigenvalues, char_poly: [Rational::one(), -trace, det] }
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    // lowest terms, so both parts must be squares
    let (num, den) = (q.numer().sqrt(), q.denom().sqrt());
    (&num * &num == *q.numer() && &den * &den == *q.denom()).then(|| Rational::new(num, den))
}

/// Eigenweights of `∇̄` on the generator basis of `V`. Generators spanning
/// a [`Block`] carry no scalar entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenResult {
    pub spec: GroupSpec,
    pub eigenweights: BTreeMap<Generator, Rational>,
    pub block: Option<Block>,
}

impl EigenResult {
    pub fn new(spec: GroupSpec, eigenweights: BTreeMap<Generator, Rational>, block: Option<Block>) -> Self {
        EigenResult { spec, eigenweights, block }
    }

    /// All eigenvalues of `∇̄` on `V`, sorted ascending; `None` if the block
    /// has irrational eigenvalues.
    pub fn graded_eigenvalues(&self) -> Option<Vec<Rational>> {
        let mut values: Vec<Rational> = self.eigenweights.values().cloned().collect();
        if let Some(block) = &self.block {
            values.extend(block.eigenvalues.clone()?);
        }
        values.sort();
        Some(values)
    }

    /// Every rational appearing in the result, for bounds checks.
    pub fn values(&self) -> Vec<&Rational> {
        let mut out: Vec<&Rational> = self.eigenweights.values().collect();
        if let Some(block) = &self.block {
            out.extend(block.matrix.iter().flatten());
            out.extend(block.eigenvalues.iter().flatten());
        }
        out
    }
}

/// Dispatches to the closed form for `spec`.
pub fn formula_eigen(spec: &GroupSpec) -> Result<EigenResult> {
    let n = spec.rank();
    match (spec.family(), spec.coweight()) {
        (Family::A, _) => type_a(n, spec.m().expect("type A carries m")),
        (Family::B, _) => type_b(n),
        (Family::C, _) => type_c(n),
        (Family::D, Some(Coweight::Standard)) => type_d_standard(n),
        (Family::D, _) => type_d_spin(n),
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn pow2(exp: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << exp.unsigned_abs());
    if exp >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `ν = (head, 1^ones)`; a head of 0 or 1 just extends the column.
fn nu(head: usize, ones: usize) -> Partition {
    let mut parts = Vec::with_capacity(ones + 1);
    if head > 0 {
        parts.push(head);
    }
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::new(parts).expect("weakly decreasing by construction")
}

/// `Σ_{j=0}^{k−1} (−1)^j χ^{scale·π_j(k) + base}(ν)`.
fn hook_sum(k: usize, j_max: usize, scale: usize, base: &Partition, class: &Partition) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for j in 0..=j_max.min(k - 1) {
        let shape = Partition::hook(k, j)?.scaled(scale).add_padded(base);
        total += character(&shape, class)? * sign(j);
    }
    Ok(total)
}

/// `Π = ((n−m)^m)`, `ν_k = (k−1, 1^N)`, and
/// `ε_k = (−1)^{N−1} Λ_k Σ_j (−1)^j χ^{π_j(k)+Π}(ν_k)` with `Λ_1 = m`.
pub fn type_a(n: usize, m: usize) -> Result<EigenResult> {
    let spec = GroupSpec::a(n, m)?;
    let big_n = spec.big_n();
    let rect = Partition::rectangle(m, n - m);
    let mut eigenweights = BTreeMap::new();
    for k in 1..=n {
        let lambda = if k == 1 { m } else { 1 };
        let sum = hook_sum(k, m - 1, 1, &rect, &nu(k - 1, big_n))?;
        eigenweights.insert(Generator::Power(k), integer(sum * sign(big_n - 1) * lambda as i64));
    }
    Ok(EigenResult::new(spec, eigenweights, None))
}

pub fn type_b(n: usize) -> Result<EigenResult> {
    let spec = GroupSpec::b(n)?;
    let eigenweights = (1..=n).map(|k| (Generator::Power(k), integer(-4))).collect();
    Ok(EigenResult::new(spec, eigenweights, None))
}

/// `ε_k = (−1)^{N−1} 2^{−N} Σ_j (−1)^j χ^{2π_j(k)+ρ_n}(ν_k)`, `ν_k = (2k−1, 1^N)`.
pub fn type_c(n: usize) -> Result<EigenResult> {
    let spec = GroupSpec::c(n)?;
    let big_n = spec.big_n();
    let (_, rho) = staircases(n);
    let scale = pow2(-(big_n as i64)) * integer(sign(big_n - 1));
    let mut eigenweights = BTreeMap::new();
    for k in 1..=n {
        let sum = hook_sum(k, k - 1, 2, &rho, &nu(2 * k - 1, big_n))?;
        eigenweights.insert(Generator::Power(k), integer(sum) * &scale);
    }
    Ok(EigenResult::new(spec, eigenweights, None))
}

/// `(C(n,2)+1) · C(n,2)! / ∏_{i=1}^{n−1} (2i−1)^{n−i}`.
fn pfaffian_factor(n: usize) -> Rational {
    let c = n * (n - 1) / 2;
    let denominator: BigInt = (1..n).map(|i| BigInt::from(2 * i - 1).pow((n - i) as u32)).product();
    Rational::new(BigInt::from(factorial(c)) * (c + 1), denominator)
}

/// Theorem-level closed forms for the spin coweight. For even `n = 2m` the
/// pair `(p_m, Pf)` is returned as a block.
pub fn type_d_spin(n: usize) -> Result<EigenResult> {
    let spec = GroupSpec::d(n, Coweight::Spin)?;
    let big_n = spec.big_n();
    let (delta, _) = staircases(n);
    let nu_k = |k: usize| nu(2 * k - 1, big_n);
    // (−1)^{N−1} 2^{n−1−N}
    let scale = pow2(n as i64 - 1 - big_n as i64) * integer(sign(big_n - 1));
    let diagonal = |k: usize| -> Result<Rational> { Ok(integer(hook_sum(k, k - 1, 2, &delta, &nu_k(k))?) * &scale) };
    let pf = &scale * pfaffian_factor(n) / integer(2);
    let pair = spec.collision_pair();

    let mut eigenweights = BTreeMap::new();
    for k in 1..n {
        if pair.is_some_and(|p| p[0] == Generator::Power(k)) {
            continue;
        }
        eigenweights.insert(Generator::Power(k), diagonal(k)?);
    }
    let block = match pair {
        None => {
            eigenweights.insert(Generator::Pfaffian, pf);
            None
        }
        Some(basis) => {
            let m = n / 2;
            let column = Partition::ones(n - 1);
            let mut skew = BigInt::zero();
            for j in 0..m {
                let shape = Partition::hook(m, j)?.scaled(2).add_padded(&delta);
                skew += BigInt::from(shape.skew_syt_count(&column)?) * sign(j);
            }
            let b = integer(skew) * &scale / integer(n as i64);
            let c = integer(character(&delta.add_padded(&Partition::ones(n)), &nu_k(m))? * m) * &scale;
            Some(Block::new(basis, [[diagonal(m)?, b], [c, pf]]))
        }
    };
    Ok(EigenResult::new(spec, eigenweights, block))
}

/// Constants for the standard coweight: `ε_k = 4`, `ε_Pf = 2`.
pub fn type_d_standard(n: usize) -> Result<EigenResult> {
    let spec = GroupSpec::d(n, Coweight::Standard)?;
    let mut eigenweights: BTreeMap<Generator, Rational> = (1..n).map(|k| (Generator::Power(k), integer(4))).collect();
    eigenweights.insert(Generator::Pfaffian, integer(2));
    Ok(EigenResult::new(spec, eigenweights, None))
}

/// `ε_k` for `m = 1`: `(−1)^{n−1}`.
pub fn type_a_m1_closed(n: usize, _k: usize) -> Rational {
    integer(sign(n - 1))
}

/// `ε_k` for `m = 2`:
/// `C(2n−2, n−1)/n − C(2n−3, n−k) + 2 C(2n−3, n−k−1) − C(2n−3, n−k−2)`.
pub fn type_a_m2_closed(n: usize, k: usize) -> Rational {
    let (n, k) = (n as i64, k as i64);
    Rational::new(binomial(2 * n - 2, n - 1), BigInt::from(n)) - integer(binomial(2 * n - 3, n - k))
        + integer(binomial(2 * n - 3, n - k - 1) * 2)
        - integer(binomial(2 * n - 3, n - k - 2))
}
