//! Classical root data, minuscule coweights, Weyl-group generators and the
//! generator basis of `V = I/I²`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{elementary, power_sum, rational, MultiPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// Choice of minuscule coweight in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coweight {
    /// `½(1, …, 1)`.
    Spin,
    /// `(1, 0, …, 0)`.
    Standard,
}

/// A basis element of `V`: the power sum `p_k` (in the squared variables for
/// types B, C, D) or the Pfaffian `x_1⋯x_n` in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Power(usize),
    Pfaffian,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Power(k) => write!(f, "p{k}"),
            Generator::Pfaffian => write!(f, "Pf"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Pf" {
            return Ok(Generator::Pfaffian);
        }
        s.strip_prefix('p')
            .and_then(|k| k.parse().ok())
            .filter(|&k| k > 0)
            .map(Generator::Power)
            .ok_or_else(|| Error::arg(format!("unknown generator label {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::arg(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coweight::Spin => "spin",
            Coweight::Standard => "standard",
        })
    }
}

impl FromStr for Coweight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spin" => Ok(Coweight::Spin),
            "standard" => Ok(Coweight::Standard),
            _ => Err(Error::arg(format!("unknown coweight {s:?}"))),
        }
    }
}

/// A classical group of rank `n` together with its minuscule coweight `μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
    /// Type A only: `μ = (1^m, 0^{n−m})`.
    m: Option<usize>,
    /// Type D only.
    coweight: Option<Coweight>,
}

impl GroupSpec {
    pub fn a(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m == 0 || m >= n {
            return Err(Error::arg(format!("type A needs n >= 2 and 1 <= m < n, got n={n}, m={m}")));
        }
        Ok(GroupSpec { family: Family::A, rank: n, m: Some(m), coweight: None })
    }

    pub fn b(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::arg("type B needs n >= 1"));
        }
        Ok(GroupSpec { family: Family::B, rank: n, m: None, coweight: None })
    }

    pub fn c(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg(format!("type C needs n >= 2, got n={n}")));
        }
        Ok(GroupSpec { family: Family::C, rank: n, m: None, coweight: None })
    }

    pub fn d(n: usize, coweight: Coweight) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg(format!("type D needs n >= 2, got n={n}")));
        }
        Ok(GroupSpec { family: Family::D, rank: n, m: None, coweight: Some(coweight) })
    }

    /// Generic constructor; `m` is required for A, `coweight` defaults to spin for D,
    /// and parameters that do not apply to the family are rejected.
    pub fn new(family: Family, n: usize, m: Option<usize>, coweight: Option<Coweight>) -> Result<Self> {
        if family != Family::A && m.is_some() {
            return Err(Error::arg("--m only applies to type A"));
        }
        if family != Family::D && coweight.is_some() {
            return Err(Error::arg("coweight only applies to type D"));
        }
        match family {
            Family::A => Self::a(n, m.ok_or_else(|| Error::arg("type A needs m"))?),
            Family::B => Self::b(n),
            Family::C => Self::c(n),
            Family::D => Self::d(n, coweight.unwrap_or(Coweight::Spin)),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn coweight(&self) -> Option<Coweight> {
        self.coweight
    }

    /// `dim G/P_μ`.
    pub fn flag_dimension(&self) -> usize {
        let n = self.rank;
        match (self.family, self.coweight) {
            (Family::A, _) => self.m.unwrap() * (n - self.m.unwrap()),
            (Family::B, _) => 2 * n - 1,
            (Family::C, _) => n * (n + 1) / 2,
            (Family::D, Some(Coweight::Standard)) => 2 * n - 2,
            (Family::D, _) => n * (n - 1) / 2,
        }
    }

    /// `N = dim G/P_μ + 1`, the exponent of `η = t_μ^N`.
    pub fn big_n(&self) -> usize {
        self.flag_dimension() + 1
    }

    /// True when `V` has a two-dimensional graded piece spanned by
    /// `p_{n/2}` and `Pf` (type D spin, even rank).
    pub fn has_degree_collision(&self) -> bool {
        self.family == Family::D && self.coweight == Some(Coweight::Spin) && self.rank.is_multiple_of(2)
    }

    /// The pair `(p_{n/2}, Pf)` when [`GroupSpec::has_degree_collision`].
    pub fn collision_pair(&self) -> Option<[Generator; 2]> {
        self.has_degree_collision().then_some([Generator::Power(self.rank / 2), Generator::Pfaffian])
    }

    /// Coordinates of `μ` in the basis dual to `x_1, …, x_n`.
    pub fn coweight_vector(&self) -> Vec<Rational> {
        let n = self.rank;
        let unit = |i: usize| (0..n).map(|j| if j == i { Rational::one() } else { Rational::zero() }).collect();
        match (self.family, self.coweight) {
            (Family::A, _) => (0..n).map(|i| if i < self.m.unwrap() { Rational::one() } else { Rational::zero() }).collect(),
            (Family::B, _) | (Family::D, Some(Coweight::Standard)) => unit(0),
            (Family::C, _) | (Family::D, _) => vec![rational(1, 2); n],
        }
    }

    /// All roots as integer coordinate vectors in `x_1, …, x_n`.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots = Vec::new();
        let vec_of = |pairs: &[(usize, i64)]| {
            let mut v = vec![0i64; n];
            for &(i, c) in pairs {
                v[i] += c;
            }
            v
        };
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                roots.push(vec_of(&[(i, 1), (j, -1)]));
                if self.family != Family::A && i < j {
                    roots.push(vec_of(&[(i, 1), (j, 1)]));
                    roots.push(vec_of(&[(i, -1), (j, -1)]));
                }
            }
            match self.family {
                Family::B => {
                    roots.push(vec_of(&[(i, 1)]));
                    roots.push(vec_of(&[(i, -1)]));
                }
                Family::C => {
                    roots.push(vec_of(&[(i, 2)]));
                    roots.push(vec_of(&[(i, -2)]));
                }
                _ => {}
            }
        }
        roots
    }

    /// Generator label set of `V` in the conventional order.
    pub fn generators(&self) -> Vec<Generator> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C => (1..=n).map(Generator::Power).collect(),
            Family::D => (1..n).map(Generator::Power).chain([Generator::Pfaffian]).collect(),
        }
    }

    /// The generator as an invariant polynomial in `x_1, …, x_n`.
    pub fn generator_polynomial(&self, generator: Generator) -> Result<MultiPoly> {
        if !self.generators().contains(&generator) {
            return Err(Error::arg(format!("{generator} is not a generator of V for {self}")));
        }
        let n = self.rank;
        Ok(match (self.family, generator) {
            (Family::A, Generator::Power(k)) => power_sum(n, k as u32),
            (_, Generator::Power(k)) => power_sum(n, k as u32).in_squares(),
            (_, Generator::Pfaffian) => elementary(n, n),
        })
    }

    /// Degree of the generator in the `x` variables.
    pub fn generator_degree(&self, generator: Generator) -> usize {
        match (self.family, generator) {
            (Family::A, Generator::Power(k)) => k,
            (_, Generator::Power(k)) => 2 * k,
            (_, Generator::Pfaffian) => self.rank,
        }
    }

    /// Simple reflections of `W` as signed permutations `x_i ↦ s_i·x_{π(i)}`.
    pub fn weyl_generators(&self) -> Vec<(Vec<usize>, Vec<i8>)> {
        let n = self.rank;
        let mut gens: Vec<(Vec<usize>, Vec<i8>)> = (0..n.saturating_sub(1)).map(|i| transposition(n, i, i + 1)).collect();
        match self.family {
            Family::A => {}
            Family::B | Family::C => gens.push(sign_flip(n, &[n - 1])),
            Family::D if n >= 2 => {
                let (perm, _) = transposition(n, n - 2, n - 1);
                let mut signs = vec![1; n];
                signs[n - 2] = -1;
                signs[n - 1] = -1;
                gens.push((perm, signs));
            }
            Family::D => {}
        }
        gens
    }

    /// Simple reflections of the Levi Weyl group `W_μ`.
    pub fn levi_generators(&self) -> Vec<(Vec<usize>, Vec<i8>)> {
        let n = self.rank;
        match (self.family, self.coweight) {
            (Family::A, _) => {
                let m = self.m.unwrap();
                (0..n - 1).filter(|&i| i + 1 != m).map(|i| transposition(n, i, i + 1)).collect()
            }
            (Family::B, _) => {
                let mut gens: Vec<_> = (1..n.saturating_sub(1)).map(|i| transposition(n, i, i + 1)).collect();
                if n >= 2 {
                    gens.push(sign_flip(n, &[n - 1]));
                }
                gens
            }
            (Family::D, Some(Coweight::Standard)) => {
                let mut gens: Vec<_> = (1..n.saturating_sub(1)).map(|i| transposition(n, i, i + 1)).collect();
                if n >= 3 {
                    let mut signs = vec![1; n];
                    signs[n - 2] = -1;
                    signs[n - 1] = -1;
                    gens.push((transposition(n, n - 2, n - 1).0, signs));
                }
                gens
            }
            (Family::C, _) | (Family::D, _) => (0..n - 1).map(|i| transposition(n, i, i + 1)).collect(),
        }
    }

    /// Stable key for sorting and reporting, e.g. `A5m2`, `D4spin`.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)?;
        if let Some(m) = self.m {
            write!(f, "m{m}")?;
        }
        if let Some(c) = self.coweight {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn transposition(n: usize, i: usize, j: usize) -> (Vec<usize>, Vec<i8>) {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i, j);
    (perm, vec![1; n])
}

fn sign_flip(n: usize, which: &[usize]) -> (Vec<usize>, Vec<i8>) {
    let mut signs = vec![1; n];
    for &i in which {
        signs[i] = -1;
    }
    ((0..n).collect(), signs)
}
