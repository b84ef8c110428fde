//! Exact multivariate polynomials over `Q`, the ring `R = Q[x_1, …, x_n]`.
//!
//! Terms are kept in a map ordered by graded lexicographic order on dense
//! exponent vectors, so the leading term is always the last entry.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

mod symmetric;

pub use symmetric::*;

/// Exact arbitrary-precision fraction, always in lowest terms.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::arg(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Dense exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divided_by(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial in a fixed number of variables with rational coefficients.
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents), coeff);
        }
        p
    }

    /// Sums the given terms; repeated exponent vectors accumulate.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::from_accumulator(nvars, acc)
    }

    fn from_accumulator(nvars: usize, acc: HashMap<Vec<u32>, Rational>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (Monomial(e), c)).collect();
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn leading_term(&self) -> Option<(&[u32], &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (m.exponents(), c))
    }

    /// Total degree; an error for the zero polynomial.
    pub fn degree(&self) -> Result<u32> {
        self.terms.keys().next_back().map(Monomial::degree).ok_or(Error::ZeroDegree)
    }

    /// `Some(d)` when every term has total degree `d`; an error for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let top = self.degree()?;
        let low = self.terms.keys().next().map(Monomial::degree).unwrap_or(top);
        Ok((low == top).then_some(top))
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.times(mb).0;
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Ok(Self::from_accumulator(self.nvars, acc))
    }

    /// In-place `self += factor · other` (rings assumed equal).
    pub(crate) fn add_scaled(&mut self, other: &MultiPoly, factor: &Rational) {
        for (m, c) in &other.terms {
            let delta = c * factor;
            match self.terms.get_mut(m) {
                Some(v) => {
                    *v += delta;
                    if v.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    if !delta.is_zero() {
                        self.terms.insert(m.clone(), delta);
                    }
                }
            }
        }
    }

    pub fn scalar_mul(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Directional derivative `Σ_i c_i ∂f/∂x_i`.
    pub fn partial_derivative(&self, direction: &[Rational]) -> Result<MultiPoly> {
        if direction.len() != self.nvars {
            return Err(Error::arg(format!("direction has {} entries for {} variables", direction.len(), self.nvars)));
        }
        let terms = self.terms.iter().flat_map(|(m, c)| {
            direction.iter().enumerate().filter(|(i, d)| !d.is_zero() && m.0[*i] > 0).map(move |(i, d)| {
                let mut e = m.0.clone();
                let k = e[i];
                e[i] -= 1;
                (e, c * d * integer(k))
            })
        });
        Ok(Self::from_terms(self.nvars, terms))
    }

    /// Substitutes `x_i ↦ signs[i] · x_{perm[i]}`.
    pub fn apply_signed_permutation(&self, perm: &[usize], signs: &[i8]) -> Result<MultiPoly> {
        let n = self.nvars;
        let mut seen = vec![false; n];
        if perm.len() != n || signs.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::arg(format!("invalid signed permutation {perm:?} / {signs:?} on {n} variables")));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::arg(format!("signs must be ±1, got {signs:?}")));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            let mut negative = false;
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] = k;
                negative ^= signs[i] < 0 && k % 2 == 1;
            }
            (Monomial(e), if negative { -c.clone() } else { c.clone() })
        });
        Ok(MultiPoly { nvars: n, terms: terms.collect() })
    }

    /// Exact quotient `self / den`; fails with [`Error::NotDivisible`] on any
    /// remainder under graded-lex leading-term division.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(den)?;
        let (lead_m, lead_c) = den
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::arg("division by the zero polynomial"))?;
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let Some(qm) = m.divided_by(lead_m) else {
                return Err(Error::NotDivisible(format!("leading monomial {m:?} not divisible by {lead_m:?}")));
            };
            let qc = c / lead_c;
            for (dm, dc) in &den.terms {
                let key = qm.times(dm);
                let delta = dc * &qc;
                match rem.terms.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.terms.remove(&key);
                        }
                    }
                    None => {
                        rem.terms.insert(key, -delta);
                    }
                }
            }
            quotient.insert(qm, qc);
        }
        Ok(MultiPoly { nvars: self.nvars, terms: quotient })
    }

    /// Maps every exponent vector through `f`, which must be injective on the support.
    pub(crate) fn map_monomials(&self, nvars: usize, f: impl Fn(&[u32]) -> Vec<u32>) -> MultiPoly {
        MultiPoly::from_terms(nvars, self.terms.iter().map(|(m, c)| (f(&m.0), c.clone())))
    }

    /// `f(x_1², …, x_n²)`.
    pub fn in_squares(&self) -> MultiPoly {
        self.map_monomials(self.nvars, |e| e.iter().map(|k| 2 * k).collect())
    }

    /// Inverse of [`MultiPoly::in_squares`]; fails if an odd exponent occurs.
    pub fn halve_exponents(&self) -> Result<MultiPoly> {
        if self.terms.keys().any(|m| m.0.iter().any(|k| k % 2 == 1)) {
            return Err(Error::arg("polynomial has odd exponents"));
        }
        Ok(self.map_monomials(self.nvars, |e| e.iter().map(|k| k / 2).collect()))
    }

    /// Places this polynomial in a ring of `nvars` variables, sending `x_i` to
    /// `x_{positions[i]}`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> MultiPoly {
        assert_eq!(positions.len(), self.nvars);
        self.map_monomials(nvars, |e| {
            let mut out = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                out[positions[i]] = k;
            }
            out
        })
    }

    /// Keeps the terms whose exponent vectors satisfy `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&[u32]) -> bool) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(&m.0)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    /// Panics when the operands live in different rings; see [`MultiPoly::checked_add`].
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scalar_mul(&-Rational::one())
    }
}

/// Terms from the leading one down, as `coeff * x1^a1 x2^a2 …`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", format_rational(&c.abs()))?;
            for (v, k) in m.0.iter().enumerate().filter(|(_, k)| **k > 0) {
                write!(f, " * x{}^{}", v + 1, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, integer(v))
    }

    #[test]
    fn square_of_binomial() {
        let s = &x(2, 0) + &x(2, 1);
        let expected = MultiPoly::from_terms(2, [(vec![2, 0], integer(1)), (vec![1, 1], integer(2)), (vec![0, 2], integer(1))]);
        assert_eq!(s.pow(2), expected);
        assert_eq!(s.pow(0), MultiPoly::one(2));
        assert!((&MultiPoly::zero(2) * &s).is_zero());
        assert!(s.scalar_mul(&integer(0)).is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        assert_eq!(x(2, 0).checked_add(&x(3, 0)), Err(Error::VariableMismatch { left: 2, right: 3 }));
        assert!(x(2, 0).checked_mul(&x(3, 0)).is_err());
        assert!(x(2, 0).exact_divide(&x(3, 0)).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(MultiPoly::zero(2).degree(), Err(Error::ZeroDegree));
        let f = &x(2, 0).pow(3) + &x(2, 1);
        assert_eq!(f.degree(), Ok(3));
        assert_eq!(f.homogeneous_degree(), Ok(None));
        assert_eq!(x(2, 1).pow(4).homogeneous_degree(), Ok(Some(4)));
    }

    #[test]
    fn derivative_along_direction() {
        // d/dx1 + d/dx2 of x1^2 x2 = 2 x1 x2 + x1^2
        let f = &x(2, 0).pow(2) * &x(2, 1);
        let d = f.partial_derivative(&[integer(1), integer(1)]).unwrap();
        let expected = &(&(&x(2, 0) * &x(2, 1)) * &c(2, 2)) + &x(2, 0).pow(2);
        assert_eq!(d, expected);
        assert!(f.partial_derivative(&[integer(1)]).is_err());
    }

    #[test]
    fn signed_permutations() {
        let f = &x(2, 0) - &x(2, 1);
        assert_eq!(f.apply_signed_permutation(&[0, 1], &[1, 1]).unwrap(), f);
        assert_eq!(f.apply_signed_permutation(&[1, 0], &[1, 1]).unwrap(), -&f);
        assert_eq!(f.apply_signed_permutation(&[0, 1], &[-1, -1]).unwrap(), -&f);
        assert!(f.apply_signed_permutation(&[0, 0], &[1, 1]).is_err());
        assert!(f.apply_signed_permutation(&[0, 1], &[1, 2]).is_err());
        // x1 ↦ x2 only: x1^2 x2^0 becomes x2^2
        let g = x(2, 0).pow(2);
        assert_eq!(g.apply_signed_permutation(&[1, 0], &[-1, 1]).unwrap(), x(2, 1).pow(2));
    }

    #[test]
    fn exact_division() {
        let num = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        let den = &x(2, 0) - &x(2, 1);
        assert_eq!(num.exact_divide(&den).unwrap(), &x(2, 0) + &x(2, 1));
        let odd = &num + &c(2, 1);
        assert!(matches!(odd.exact_divide(&den), Err(Error::NotDivisible(_))));
        assert!(num.exact_divide(&MultiPoly::zero(2)).is_err());
        assert!(MultiPoly::zero(2).exact_divide(&den).unwrap().is_zero());
    }

    #[test]
    fn rational_strings() {
        for s in ["5/16", "-1/8", "4", "0", "-6"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_sorted() {
        let f = &(&x(2, 0).pow(2) - &x(2, 1)).scalar_mul(&rational(1, 2)) + &c(2, 3);
        assert_eq!(f.to_string(), "1/2 * x1^2 - 1/2 * x2^1 + 3");
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -4i64..5), 0..5)
            .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(e, c)| (e, integer(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a.clone());
            }
            let perm = [2, 0, 1];
            let signs = [1, -1, 1];
            prop_assert_eq!(
                (&a * &b).apply_signed_permutation(&perm, &signs).unwrap(),
                &a.apply_signed_permutation(&perm, &signs).unwrap() * &b.apply_signed_permutation(&perm, &signs).unwrap()
            );
        }
    }
}
