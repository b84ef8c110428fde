//! Brute-force eigenweights straight from the definition
//! `∇̄(f) = ∫_{G/P_μ} η · ∂_μ f`, with `η = (∂_μ Ω)^N` and `Ω = ½ Σ x_i²`.
//!
//! The pushforward is the localization sum `Σ_{w ∈ W/W_μ} w(f / 𝔯_μ)`. Each
//! family clears denominators its own way so that only exact polynomial
//! divisions are needed:
//!
//! * A: `(−1)^D / (m!(n−m)!) · Alt_{S_n}(f Δ(A) Δ(B)) / Δ(X)`
//! * B: the `2n` coset terms over the common denominator `e_n(X) Δ(X²)`
//! * C: `(−1)^D 2^{−n} Σ_{σ ∈ {±1}ⁿ} (∏σ_i) σ(f Δ(X)) / e_n(X) / Δ(X²)`
//! * D (spin): `(−1)^D Σ_{σ even} σ(f Δ(X)) / Δ(X²)`
//!
//! None of this touches the character machinery, so agreement with
//! [`crate::formulas`] is an independent check.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::formulas::{Block, EigenResult};
use crate::group::{Coweight, Family, Generator, GroupSpec};
use crate::partitions::factorial;
use crate::polyalg::{antisymmetrize_with, elementary, integer, power_sum_linear_part, rational, vandermonde, vandermonde_of, MultiPoly, Rational};

/// An element of `V = I/I²` in the generator basis. Only nonzero
/// coordinates are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReducedVector(BTreeMap<Generator, Rational>);

impl ReducedVector {
    pub fn get(&self, generator: Generator) -> Rational {
        self.0.get(&generator).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_entry(&mut self, generator: Generator, value: Rational) {
        let entry = self.0.entry(generator).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.0.remove(&generator);
        }
    }

    pub fn add(&self, other: &ReducedVector) -> ReducedVector {
        let mut out = self.clone();
        for (g, v) in other.iter() {
            out.add_entry(*g, v.clone());
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> ReducedVector {
        let mut out = ReducedVector::default();
        for (g, v) in self.iter() {
            out.add_entry(*g, v * c);
        }
        out
    }
}

impl FromIterator<(Generator, Rational)> for ReducedVector {
    fn from_iter<I: IntoIterator<Item = (Generator, Rational)>>(iter: I) -> Self {
        let mut out = ReducedVector::default();
        for (g, v) in iter {
            out.add_entry(g, v);
        }
        out
    }
}

impl fmt::Display for ReducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.iter().map(|(g, v)| format!("{g}: {v}")).collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}

/// `𝔯_μ`: the product of the roots pairing negatively with `μ`.
pub fn equivariant_euler(spec: &GroupSpec) -> MultiPoly {
    let n = spec.rank();
    let mu = spec.coweight_vector();
    let mut product = MultiPoly::one(n);
    for root in spec.roots() {
        let pairing: Rational = root.iter().zip(&mu).map(|(&a, b)| b * integer(a)).sum();
        if pairing.is_negative() {
            let form = MultiPoly::from_terms(
                n,
                root.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, &a)| {
                    let mut e = vec![0; n];
                    e[i] = 1;
                    (e, integer(a))
                }),
            );
            product = &product * &form;
        }
    }
    product
}

/// `η = t_μ^N` with `t_μ = ∂_μ(½ Σ x_i²)`.
pub fn eta(spec: &GroupSpec) -> MultiPoly {
    let n = spec.rank();
    let omega = crate::polyalg::power_sum(n, 2).scalar_mul(&rational(1, 2));
    let t = omega.partial_derivative(&spec.coweight_vector()).expect("coweight has rank entries");
    t.pow(spec.big_n() as u32)
}

/// The localization oracle with a chosen execution policy for its inner
/// Weyl-group sums and per-generator fan-out.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Oracle {
    pub exec: Exec,
}

impl Oracle {
    pub fn new(exec: Exec) -> Self {
        Oracle { exec }
    }

    /// `∫_{G/P_μ} f` for a homogeneous, `W_μ`-invariant `f`.
    pub fn integrate(&self, spec: &GroupSpec, f: &MultiPoly) -> Result<MultiPoly> {
        let n = spec.rank();
        if f.nvars() != n {
            return Err(Error::VariableMismatch { left: f.nvars(), right: n });
        }
        if spec.coweight() == Some(Coweight::Standard) {
            return Err(Error::arg("the localization oracle only covers the spin coweight in type D"));
        }
        if f.is_zero() {
            return Ok(f.clone());
        }
        let Some(degree) = f.homogeneous_degree()? else {
            return Err(Error::arg("integrand must be homogeneous"));
        };
        for (perm, signs) in spec.levi_generators() {
            if &f.apply_signed_permutation(&perm, &signs)? != f {
                return Err(Error::NotInvariant(format!("the Levi Weyl group of {spec}")));
            }
        }
        let dim = spec.flag_dimension();
        if (degree as usize) < dim {
            return Ok(MultiPoly::zero(n));
        }
        let sign = if dim.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let result = match spec.family() {
            Family::A => self.integrate_a(spec, f)?,
            Family::B => self.integrate_b(spec, f)?,
            Family::C => {
                let numerator = self.sign_sum(f * &vandermonde(n), n, |signs| signs.iter().product::<i8>());
                let scale = sign / integer(1u64 << n);
                numerator.exact_divide(&elementary(n, n))?.exact_divide(&vandermonde(n).in_squares())?.scalar_mul(&scale)
            }
            Family::D => {
                let numerator = self.sign_sum(f * &vandermonde(n), n, |signs| if signs.iter().product::<i8>() == 1 { 1 } else { 0 });
                numerator.exact_divide(&vandermonde(n).in_squares())?.scalar_mul(&sign)
            }
        };
        if !result.is_zero() && result.homogeneous_degree()? != Some(degree - dim as u32) {
            return Err(Error::internal(format!("pushforward for {spec} broke the degree contract")));
        }
        Ok(result)
    }

    fn integrate_a(&self, spec: &GroupSpec, f: &MultiPoly) -> Result<MultiPoly> {
        let n = spec.rank();
        let m = spec.m().expect("type A carries m");
        let a: Vec<usize> = (0..m).collect();
        let b: Vec<usize> = (m..n).collect();
        let lifted = &(f * &vandermonde_of(n, &a)) * &vandermonde_of(n, &b);
        let alt = antisymmetrize_with(&lifted, self.exec);
        let mut scale = Rational::one() / Rational::from_integer((factorial(m) * factorial(n - m)).into());
        if spec.flag_dimension() % 2 == 1 {
            scale = -scale;
        }
        Ok(alt.exact_divide(&vandermonde(n))?.scalar_mul(&scale))
    }

    fn integrate_b(&self, spec: &GroupSpec, f: &MultiPoly) -> Result<MultiPoly> {
        let n = spec.rank();
        let euler = equivariant_euler(spec);
        let common = &elementary(n, n) * &vandermonde(n).in_squares();
        // Cosets of W/W_μ are determined by the image ±x_i of x_1.
        let cosets: Vec<(Vec<usize>, Vec<i8>)> = (0..n)
            .flat_map(|i| {
                [1i8, -1].map(|s| {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(0, i);
                    let mut signs = vec![1i8; n];
                    signs[0] = s;
                    (perm, signs)
                })
            })
            .collect();
        let terms: Vec<Result<MultiPoly>> = self.exec.map(&cosets, |(perm, signs)| {
            let cofactor = common.exact_divide(&euler.apply_signed_permutation(perm, signs)?)?;
            Ok(&f.apply_signed_permutation(perm, signs)? * &cofactor)
        });
        let mut numerator = MultiPoly::zero(n);
        for term in terms {
            numerator.add_scaled(&term?, &Rational::one());
        }
        numerator.exact_divide(&common)
    }

    /// `Σ_σ weight(σ) · σ(g)` over all sign vectors `σ ∈ {±1}ⁿ`.
    fn sign_sum(&self, g: MultiPoly, n: usize, weight: impl Fn(&[i8]) -> i8 + Sync + Send) -> MultiPoly {
        let identity: Vec<usize> = (0..n).collect();
        let patterns: Vec<Vec<i8>> = (0..1u32 << n).map(|bits| (0..n).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect()).collect();
        self.exec.map_reduce(
            &patterns,
            |signs| {
                let w = weight(signs);
                if w == 0 {
                    return MultiPoly::zero(n);
                }
                g.apply_signed_permutation(&identity, signs).expect("sign vector has rank entries").scalar_mul(&integer(w))
            },
            || MultiPoly::zero(n),
            |mut acc, term| {
                acc.add_scaled(&term, &Rational::one());
                acc
            },
        )
    }

    /// `∇̄` applied to one generator of `V`.
    pub fn nabla_bar(&self, spec: &GroupSpec, generator: Generator) -> Result<ReducedVector> {
        let f = spec.generator_polynomial(generator)?;
        let image = self.nabla_bar_poly(spec, &f)?;
        let expected = spec.generator_degree(generator);
        if image.support().any(|g| spec.generator_degree(g) != expected) {
            return Err(Error::internal(format!("∇̄({generator}) for {spec} left degree {expected}")));
        }
        Ok(image)
    }

    /// `∇̄` extended linearly to any `W`-invariant `f` in the augmentation ideal.
    pub fn nabla_bar_poly(&self, spec: &GroupSpec, f: &MultiPoly) -> Result<ReducedVector> {
        let n = spec.rank();
        let derivative = f.partial_derivative(&spec.coweight_vector())?;
        let eta = eta(spec);
        // integrate each homogeneous piece separately
        let mut pieces: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in derivative.terms() {
            let d: u32 = e.iter().sum();
            pieces.entry(d).or_insert_with(|| MultiPoly::zero(n)).add_scaled(&MultiPoly::monomial(n, e.to_vec(), c.clone()), &Rational::one());
        }
        let mut total = MultiPoly::zero(n);
        for piece in pieces.values() {
            total.add_scaled(&self.integrate(spec, &(&eta * piece))?, &Rational::one());
        }
        reduce_mod_i2(spec, &total)
    }

    /// Eigenweights from the definition, plus the 2×2 block where `V` has a
    /// two-dimensional graded piece.
    pub fn eigen(&self, spec: &GroupSpec) -> Result<EigenResult> {
        let generators = spec.generators();
        let images: Vec<Result<ReducedVector>> = self.exec.map(&generators, |&g| self.nabla_bar(spec, g));
        let images: BTreeMap<Generator, ReducedVector> = generators.iter().copied().zip(images.into_iter().collect::<Result<Vec<_>>>()?).collect();
        let pair = spec.collision_pair();
        let mut eigenweights = BTreeMap::new();
        for (&g, image) in &images {
            if pair.is_some_and(|p| p.contains(&g)) {
                continue;
            }
            if let Some(stray) = image.support().find(|&h| h != g) {
                return Err(Error::UnexpectedNonEigenvector { generator: g.to_string(), target: stray.to_string() });
            }
            eigenweights.insert(g, image.get(g));
        }
        let block = pair.map(|basis| {
            // column j is the image of basis[j]
            let entry = |row: usize, col: usize| images[&basis[col]].get(basis[row]);
            Block::new(basis, [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
        });
        Ok(EigenResult::new(*spec, eigenweights, block))
    }
}

/// The class of a `W`-invariant polynomial in `V = I/I²`.
pub fn reduce_mod_i2(spec: &GroupSpec, g: &MultiPoly) -> Result<ReducedVector> {
    let n = spec.rank();
    if !g.constant_term().is_zero() {
        return Err(Error::arg("polynomial is not in the augmentation ideal"));
    }
    let mut pieces: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (e, c) in g.terms() {
        pieces.entry(e.iter().sum()).or_insert_with(|| MultiPoly::zero(n)).add_scaled(&MultiPoly::monomial(n, e.to_vec(), c.clone()), &Rational::one());
    }
    let mut out = ReducedVector::default();
    for (degree, piece) in pieces {
        let degree = degree as usize;
        match spec.family() {
            Family::A => {
                // everything above degree n is decomposable
                if degree <= n {
                    out.add_entry(Generator::Power(degree), power_sum_linear_part(&piece, degree)?);
                } else if !crate::polyalg::is_symmetric(&piece) {
                    return Err(Error::NotSymmetric);
                }
            }
            Family::B | Family::C => {
                let y = piece.halve_exponents().map_err(|_| Error::internal(format!("odd exponent in a {spec} invariant")))?;
                if degree / 2 <= n {
                    out.add_entry(Generator::Power(degree / 2), power_sum_linear_part(&y, degree / 2)?);
                }
            }
            Family::D => {
                let all_even = |e: &[u32]| e.iter().all(|k| k % 2 == 0);
                let all_odd = |e: &[u32]| e.iter().all(|k| k % 2 == 1);
                if piece.terms().any(|(e, _)| !all_even(e) && !all_odd(e)) {
                    return Err(Error::internal(format!("mixed-parity monomial in a {spec} invariant")));
                }
                let even = piece.filter_terms(all_even).halve_exponents()?;
                if !even.is_zero() && degree / 2 < n {
                    out.add_entry(Generator::Power(degree / 2), power_sum_linear_part(&even, degree / 2)?);
                }
                let odd = piece.filter_terms(all_odd);
                if !odd.is_zero() {
                    // Pf · h ≡ h(0) · Pf
                    let h = odd.exact_divide(&elementary(n, n))?;
                    out.add_entry(Generator::Pfaffian, h.constant_term());
                }
            }
        }
    }
    Ok(out)
}

pub fn gysin_integrate(spec: &GroupSpec, f: &MultiPoly) -> Result<MultiPoly> {
    Oracle::default().integrate(spec, f)
}

pub fn nabla_bar(spec: &GroupSpec, generator: Generator) -> Result<ReducedVector> {
    Oracle::default().nabla_bar(spec, generator)
}

pub fn oracle_eigen(spec: &GroupSpec) -> Result<EigenResult> {
    Oracle::default().eigen(spec)
}
