//! Irreducible characters of the symmetric groups via the
//! Murnaghan–Nakayama rule.
//!
//! Values are memoized on the `(shape, class)` pair in a process-wide table
//! guarded by a read-write lock, so concurrent callers share the cache.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A memo table of character values.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: RwLock<HashMap<(Partition, Partition), BigInt>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide shared table.
    pub fn global() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(CharacterTable::new)
    }

    /// `χ^shape(class_type)`.
    pub fn value(&self, shape: &Partition, class_type: &Partition) -> Result<BigInt> {
        if shape.size() != class_type.size() {
            return Err(Error::arg(format!(
                "shape {shape} and class {class_type} have different sizes ({} vs {})",
                shape.size(),
                class_type.size()
            )));
        }
        Ok(self.lookup(shape, class_type))
    }

    fn lookup(&self, shape: &Partition, class_type: &Partition) -> BigInt {
        // identity class: dimension
        if class_type.part(0) <= 1 {
            return shape.syt_count().into();
        }
        let key = (shape.clone(), class_type.clone());
        if let Some(v) = self.memo.read().expect("character memo poisoned").get(&key) {
            return v.clone();
        }
        // Strip the largest cycle first; the class is sorted so it is part 0.
        let cycle = class_type.part(0);
        let rest = Partition::new(class_type.parts()[1..].to_vec()).expect("suffix of a partition");
        let mut total = BigInt::zero();
        for strip in shape.border_strips(cycle) {
            let v = self.lookup(&strip.remainder, &rest);
            if strip.height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.write().expect("character memo poisoned").insert(key, total.clone());
        total
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("character memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `χ^shape(class_type)` through the shared table.
pub fn character(shape: &Partition, class_type: &Partition) -> Result<BigInt> {
    CharacterTable::global().value(shape, class_type)
}

/// `χ^shape((k))` in closed form: `(−1)^j` on the hook `(k − j, 1^j)`, zero
/// on every other shape.
pub fn cycle_character(k: usize, shape: &Partition) -> Result<BigInt> {
    if shape.size() != k {
        return Err(Error::arg(format!("shape {shape} is not a partition of {k}")));
    }
    let parts = shape.parts();
    let is_hook = parts.iter().skip(1).all(|&p| p == 1);
    if k == 0 || !is_hook {
        return Ok(BigInt::from(if k == 0 { 1 } else { 0 }));
    }
    let j = parts.len() - 1;
    Ok(BigInt::from(if j.is_multiple_of(2) { 1 } else { -1 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::polyalg::{permutations, Rational};
    use num_traits::One;

    fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut lengths = Vec::new();
        for start in 0..perm.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).unwrap()
    }

    // Oracle: permutation characters of the Young modules M^λ, counted by
    // brute force over explicit permutations and tabloids, then peeled into
    // irreducibles by Gram–Schmidt in decreasing lexicographic order
    // (M^λ = χ^λ + Σ_{μ ▷ λ} K_{μλ} χ^μ).
    fn character_table_by_young_modules(n: usize) -> Vec<(Partition, Vec<(Partition, BigInt)>)> {
        let perms = permutations(n);
        let mut classes: Vec<(Partition, Vec<usize>, usize)> = Vec::new();
        for (perm, _) in &perms {
            let ct = cycle_type(perm);
            match classes.iter_mut().find(|c| c.0 == ct) {
                Some(c) => c.2 += 1,
                None => classes.push((ct, perm.clone(), 1)),
            }
        }
        let order = Rational::from_integer(BigInt::from(perms.len()));
        let inner = |a: &[Rational], b: &[Rational]| -> Rational {
            classes.iter().zip(a.iter().zip(b)).map(|(c, (x, y))| x * y * Rational::from_integer(BigInt::from(c.2))).sum::<Rational>() / &order
        };
        let mut irreducibles: Vec<(Partition, Vec<Rational>)> = Vec::new();
        for shape in partitions_of(n, None) {
            // all row assignments with row sizes given by the shape
            let mut tabloids: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..n {
                tabloids = tabloids
                    .into_iter()
                    .flat_map(|t| {
                        (0..shape.length())
                            .filter(|&r| t.iter().filter(|&&x| x == r).count() < shape.part(r))
                            .map(|r| {
                                let mut next = t.clone();
                                next.push(r);
                                next
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect();
            }
            let mut chi: Vec<Rational> = classes
                .iter()
                .map(|(_, rep, _)| {
                    let fixed = tabloids.iter().filter(|t| (0..n).all(|i| t[rep[i]] == t[i])).count();
                    Rational::from_integer(BigInt::from(fixed))
                })
                .collect();
            for (_, prev) in &irreducibles {
                let coeff = inner(&chi, prev);
                for (v, w) in chi.iter_mut().zip(prev) {
                    *v -= &coeff * w;
                }
            }
            assert_eq!(inner(&chi, &chi), Rational::one(), "Gram–Schmidt produced a non-irreducible for {shape}");
            irreducibles.push((shape, chi));
        }
        irreducibles
            .into_iter()
            .map(|(shape, chi)| {
                let row = classes.iter().zip(chi).map(|(c, v)| (c.0.clone(), v.to_integer())).collect();
                (shape, row)
            })
            .collect()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(character(&p(&[4, 3, 2, 1]), &p(&[3, 1, 1, 1, 1, 1, 1, 1])).unwrap(), (-48).into());
        assert_eq!(character(&p(&[4, 1]), &p(&[1, 1, 1, 1, 1])).unwrap(), 4.into());
        assert_eq!(character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2.into());
        assert_eq!(character(&Partition::empty(), &Partition::empty()).unwrap(), 1.into());
        assert!(character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn cycle_character_examples() {
        assert_eq!(cycle_character(5, &p(&[3, 1, 1])).unwrap(), 1.into());
        assert_eq!(cycle_character(4, &p(&[2, 2])).unwrap(), 0.into());
        assert_eq!(cycle_character(1, &p(&[1])).unwrap(), 1.into());
        assert!(cycle_character(3, &p(&[2])).is_err());
    }

    #[test]
    fn cycle_character_agrees_with_recursion() {
        for k in 1..=9 {
            for shape in partitions_of(k, None) {
                assert_eq!(cycle_character(k, &shape).unwrap(), character(&shape, &p(&[k])).unwrap(), "{shape}");
            }
        }
    }

    #[test]
    fn first_column_is_dimension() {
        for k in 0..=10 {
            for shape in partitions_of(k, None) {
                assert_eq!(character(&shape, &Partition::ones(k)).unwrap(), BigInt::from(shape.syt_count()));
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=8 {
            let shapes: Vec<Partition> = partitions_of(n, None).collect();
            for a in &shapes {
                for b in &shapes {
                    let sum: Rational = shapes
                        .iter()
                        .map(|nu| {
                            let num = character(a, nu).unwrap() * character(b, nu).unwrap();
                            Rational::new(num, BigInt::from(nu.centralizer_size()))
                        })
                        .sum();
                    let expected = if a == b { Rational::one() } else { Rational::zero() };
                    assert_eq!(sum, expected, "<{a}, {b}> in S_{n}");
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_tables() {
        for n in 1..=5 {
            let table = character_table_by_young_modules(n);
            for (shape, row) in &table {
                for (class, value) in row {
                    assert_eq!(&character(shape, class).unwrap(), value, "χ^{shape}({class})");
                }
            }
        }
    }

    #[test]
    fn private_tables_are_independent() {
        let table = CharacterTable::new();
        assert!(table.is_empty());
        assert_eq!(table.value(&p(&[3, 2]), &p(&[3, 2])).unwrap(), 1.into());
        assert!(!table.is_empty());
    }
}
