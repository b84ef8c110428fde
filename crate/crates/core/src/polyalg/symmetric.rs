//! Symmetric-function machinery on `Q[x_1, …, x_n]`: power sums, alternants,
//! Schur polynomials via the bialternant quotient, antisymmetrization over
//! `S_n`, and the reduction of a symmetric polynomial to its `p_k`-coefficient.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{integer, MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{partitions_of, Partition};

/// All permutations of `0..n` (one-line notation) with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // choosing the r-th smallest unused value adds r inversions
        let mut rank = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, if rank % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
            rank += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], 1, &mut out);
    out
}

/// `p_k(x_1, …, x_n)`.
pub fn power_sum(nvars: usize, k: u32) -> MultiPoly {
    let vars: Vec<usize> = (0..nvars).collect();
    power_sum_of(nvars, &vars, k)
}

/// `p_k` in the listed variables only; `p_0` is the number of variables.
pub fn power_sum_of(nvars: usize, vars: &[usize], k: u32) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        vars.iter().map(|&v| {
            let mut e = vec![0; nvars];
            e[v] = k;
            (e, Rational::one())
        }),
    )
}

/// `p_ν = ∏ p_{ν_i}`.
pub fn power_sum_product(nvars: usize, nu: &Partition) -> MultiPoly {
    nu.parts().iter().fold(MultiPoly::one(nvars), |acc, &part| &acc * &power_sum(nvars, part as u32))
}

/// Elementary symmetric polynomial `e_k`.
pub fn elementary(nvars: usize, k: usize) -> MultiPoly {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            cur[i] = 1;
            subsets(n, k - 1, i + 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut out = Vec::new();
    if k <= nvars {
        subsets(nvars, k, 0, &mut vec![0; nvars], &mut out);
    }
    MultiPoly::from_terms(nvars, out.into_iter().map(|e| (e, Rational::one())))
}

/// `Δ(X) = ∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(nvars: usize) -> MultiPoly {
    let vars: Vec<usize> = (0..nvars).collect();
    vandermonde_of(nvars, &vars)
}

/// Vandermonde product over the listed variables, in the listed order.
pub fn vandermonde_of(nvars: usize, vars: &[usize]) -> MultiPoly {
    let mut acc = MultiPoly::one(nvars);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            acc = &acc * &(&MultiPoly::var(nvars, i) - &MultiPoly::var(nvars, j));
        }
    }
    acc
}

/// Alternant `a_γ = Σ_{w ∈ S_n} sgn(w) · w(x^γ)` in `γ.len()` variables; zero
/// when `γ` has a repeated entry.
pub fn alternant(gamma: &[u32]) -> MultiPoly {
    let n = gamma.len();
    let mut sorted = gamma.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return MultiPoly::zero(n);
    }
    MultiPoly::from_terms(
        n,
        permutations(n).into_iter().map(|(perm, sign)| {
            let mut e = vec![0; n];
            for (i, &g) in gamma.iter().enumerate() {
                e[perm[i]] = g;
            }
            (e, integer(sign))
        }),
    )
}

/// Schur polynomial `s_λ(x_1, …, x_n) = a_{λ+δ_n} / Δ`; zero when `λ` has more than `n` parts.
pub fn schur(lambda: &Partition, nvars: usize) -> MultiPoly {
    if lambda.length() > nvars {
        return MultiPoly::zero(nvars);
    }
    if nvars == 0 {
        return MultiPoly::one(0);
    }
    let gamma: Vec<u32> = (0..nvars).map(|i| (lambda.part(i) + nvars - 1 - i) as u32).collect();
    alternant(&gamma)
        .exact_divide(&vandermonde(nvars))
        .expect("bialternant quotient is exact")
}

/// `s_λ(x_1, …, x_n)` by the branching rule: in a semistandard tableau the
/// cells holding the largest entry form a horizontal strip. Independent of
/// [`schur`] and much cheaper when `n` is large, since it never sums over `S_n`.
pub fn schur_by_branching(lambda: &Partition, nvars: usize) -> MultiPoly {
    fn branch(lambda: &Partition, k: usize, nvars: usize, memo: &mut HashMap<(Partition, usize), MultiPoly>) -> MultiPoly {
        if lambda.length() > k {
            return MultiPoly::zero(nvars);
        }
        if k == 0 || lambda.is_empty() {
            return MultiPoly::one(nvars);
        }
        if let Some(hit) = memo.get(&(lambda.clone(), k)) {
            return hit.clone();
        }
        // μ interlaces λ: λ_{i+1} ≤ μ_i ≤ λ_i
        let mut inner: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..lambda.length() {
            inner = inner
                .into_iter()
                .flat_map(|prefix| {
                    (lambda.part(i + 1)..=lambda.part(i)).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        let mut total = MultiPoly::zero(nvars);
        for parts in inner {
            let mu = Partition::new(parts).expect("interlacing sequences are partitions");
            let mut e = vec![0; nvars];
            e[k - 1] = (lambda.size() - mu.size()) as u32;
            let strip = MultiPoly::monomial(nvars, e, Rational::one());
            total.add_scaled(&(&branch(&mu, k - 1, nvars, memo) * &strip), &Rational::one());
        }
        memo.insert((lambda.clone(), k), total.clone());
        total
    }
    branch(lambda, nvars, nvars, &mut HashMap::new())
}

/// `Σ_{w ∈ S_n} sgn(w) · w(f)` using the default execution policy.
pub fn antisymmetrize(f: &MultiPoly) -> MultiPoly {
    antisymmetrize_with(f, Exec::default())
}

pub fn antisymmetrize_with(f: &MultiPoly, exec: Exec) -> MultiPoly {
    let n = f.nvars();
    let signs = vec![1i8; n];
    exec.map_reduce(
        &permutations(n),
        |(perm, sign)| {
            let image = f.apply_signed_permutation(perm, &signs).expect("valid permutation");
            if *sign < 0 {
                -&image
            } else {
                image
            }
        },
        || MultiPoly::zero(n),
        |mut a, b| {
            a.add_scaled(&b, &Rational::one());
            a
        },
    )
}

/// True when `f` is invariant under every adjacent transposition.
pub fn is_symmetric(f: &MultiPoly) -> bool {
    let n = f.nvars();
    let signs = vec![1i8; n];
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        f.apply_signed_permutation(&perm, &signs).as_ref() == Ok(f)
    })
}

/// Coefficient of `p_k` when the symmetric, degree-`k` polynomial `g` is
/// written in the power-sum basis `{p_ν : |ν| = k}`; this is the class of `g`
/// in `I/I²`. Requires `k ≤ n` so that the basis is independent.
///
/// Works in the monomial symmetric basis: `p_ρ` only involves `m_λ` with `λ`
/// coarser than `ρ`, so the transition matrix is triangular when partitions
/// are visited from finest to coarsest.
pub fn power_sum_linear_part(g: &MultiPoly, k: usize) -> Result<Rational> {
    let n = g.nvars();
    if k == 0 || k > n {
        return Err(Error::arg(format!("degree {k} is outside the stable range 1..={n}")));
    }
    if g.is_zero() {
        return Ok(Rational::zero());
    }
    if g.homogeneous_degree()? != Some(k as u32) {
        return Err(Error::arg(format!("polynomial is not homogeneous of degree {k}")));
    }
    if !is_symmetric(g) {
        return Err(Error::NotSymmetric);
    }
    let mut shapes: Vec<Partition> = partitions_of(k, None).collect();
    shapes.reverse();
    let exps = |lambda: &Partition| -> Vec<u32> { (0..n).map(|i| lambda.part(i) as u32).collect() };
    let products: Vec<MultiPoly> = shapes.iter().map(|rho| power_sum_product(n, rho)).collect();
    let mut coeffs: Vec<Rational> = Vec::with_capacity(shapes.len());
    for (idx, lambda) in shapes.iter().enumerate() {
        let e = exps(lambda);
        let mut residual = g.coefficient(&e);
        for (c, p) in coeffs.iter().zip(&products[..idx]) {
            residual -= c * p.coefficient(&e);
        }
        coeffs.push(residual / products[idx].coefficient(&e));
    }
    Ok(coeffs.pop().expect("at least one partition"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character;
    use crate::linalg;
    use crate::polyalg::rational;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    // Oracle: s_λ as a sum over semistandard tableaux with entries 1..=n.
    fn schur_by_tableaux(lambda: &Partition, n: usize) -> MultiPoly {
        let cells: Vec<(usize, usize)> = lambda.cells().collect();
        let mut filling = vec![0usize; cells.len()];
        let mut terms = Vec::new();
        fn rec(idx: usize, cells: &[(usize, usize)], lambda: &Partition, n: usize, filling: &mut Vec<usize>, terms: &mut Vec<(Vec<u32>, Rational)>) {
            if idx == cells.len() {
                let mut e = vec![0u32; n];
                for &v in filling.iter() {
                    e[v] += 1;
                }
                terms.push((e, Rational::one()));
                return;
            }
            let (r, c) = cells[idx];
            let left = if c > 0 { filling[idx - 1] } else { 0 };
            let above = if r > 0 { filling[cells.iter().position(|&q| q == (r - 1, c)).unwrap()] + 1 } else { 0 };
            let _ = lambda;
            for v in left.max(above)..n {
                filling[idx] = v;
                rec(idx + 1, cells, lambda, n, filling, terms);
            }
        }
        rec(0, &cells, lambda, n, &mut filling, &mut terms);
        MultiPoly::from_terms(n, terms)
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for (perm, sign) in &perms {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            assert_eq!(*sign, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn newton_identity_two_vars() {
        let p1 = power_sum(2, 1);
        assert_eq!(p1.pow(2), &power_sum(2, 2) + &elementary(2, 2).scalar_mul(&integer(2)));
    }

    #[test]
    fn vandermonde_and_alternants() {
        assert_eq!(vandermonde(2), &x(2, 0) - &x(2, 1));
        assert_eq!(alternant(&[1, 0]), vandermonde(2));
        assert!(alternant(&[2, 2]).is_zero());
        for n in 1..=4 {
            let delta: Vec<u32> = (0..n as u32).rev().collect();
            assert_eq!(alternant(&delta), vandermonde(n));
        }
        assert_eq!(vandermonde(1), MultiPoly::one(1));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[1]), 2), &x(2, 0) + &x(2, 1));
        assert_eq!(schur(&p(&[1, 1]), 2), &x(2, 0) * &x(2, 1));
        assert_eq!(schur(&p(&[2, 1]), 3), schur_by_tableaux(&p(&[2, 1]), 3));
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(alternant(&[4, 1]).exact_divide(&vandermonde(2)).unwrap(), schur(&p(&[3, 1]), 2));
    }

    #[test]
    fn schur_matches_tableau_sum() {
        for n in 1..=4 {
            for k in 0..=5 {
                for lambda in partitions_of(k, Some(n)) {
                    let oracle = schur_by_tableaux(&lambda, n);
                    assert_eq!(schur(&lambda, n), oracle, "{lambda} n={n}");
                    assert_eq!(schur_by_branching(&lambda, n), oracle, "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn bialternant_identity() {
        for n in 1..=4 {
            let delta = vandermonde(n);
            for k in 0..=6 {
                for lambda in partitions_of(k, Some(n)) {
                    let gamma: Vec<u32> = (0..n).map(|i| (lambda.part(i) + n - 1 - i) as u32).collect();
                    assert_eq!(&schur(&lambda, n) * &delta, alternant(&gamma), "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn antisymmetrize_examples() {
        assert_eq!(antisymmetrize(&MultiPoly::monomial(3, vec![4, 2, 0], Rational::one())), alternant(&[4, 2, 0]));
        assert!(antisymmetrize(&power_sum(3, 2)).is_zero());
        // x^{λ+δ} · g with g symmetric antisymmetrizes to g · a_{λ+δ}
        let g = &power_sum(3, 1) + &elementary(3, 2);
        let f = &MultiPoly::monomial(3, vec![3, 1, 0], Rational::one()) * &g;
        assert_eq!(antisymmetrize(&f), &g * &alternant(&[3, 1, 0]));
        assert_eq!(antisymmetrize_with(&f, Exec::Sequential), antisymmetrize_with(&f, Exec::Parallel));
    }

    #[test]
    fn vandermonde_factorizations() {
        for n in 2..=5 {
            for m in 1..n {
                let a: Vec<usize> = (0..m).collect();
                let b: Vec<usize> = (m..n).collect();
                let mut cross = MultiPoly::one(n);
                for &i in &a {
                    for &j in &b {
                        cross = &cross * &(&x(n, i) - &x(n, j));
                    }
                }
                assert_eq!(vandermonde(n), &(&vandermonde_of(n, &a) * &vandermonde_of(n, &b)) * &cross);
            }
            let mut plus = MultiPoly::one(n);
            for i in 0..n {
                for j in i + 1..n {
                    plus = &plus * &(&x(n, i) + &x(n, j));
                }
            }
            assert_eq!(vandermonde(n).in_squares(), &vandermonde(n) * &plus);
        }
    }

    #[test]
    fn frobenius_and_inverse() {
        for k in 1..=6usize {
            let n = k;
            let shapes: Vec<Partition> = partitions_of(k, None).collect();
            for nu in &shapes {
                let mut rhs = MultiPoly::zero(n);
                for pi in &shapes {
                    rhs.add_scaled(&schur(pi, n), &integer(character(pi, nu).unwrap()));
                }
                assert_eq!(power_sum_product(n, nu), rhs, "p_{nu}");
            }
            for pi in &shapes {
                let mut rhs = MultiPoly::zero(n);
                for nu in &shapes {
                    let weight = Rational::new(character(pi, nu).unwrap(), nu.centralizer_size().into());
                    rhs.add_scaled(&power_sum_product(n, nu), &weight);
                }
                assert_eq!(schur(pi, n), rhs, "s_{pi}");
            }
        }
    }

    #[test]
    fn iterated_pieri() {
        for steps in 1..=5usize {
            for size in 0..=4usize {
                for nu in partitions_of(size, None) {
                    let n = size + steps;
                    let lhs = &power_sum(n, 1).pow(steps as u32) * &schur_by_branching(&nu, n);
                    let mut rhs = MultiPoly::zero(n);
                    for lambda in partitions_of(size + steps, Some(n)) {
                        if lambda.contains(&nu) {
                            rhs.add_scaled(&schur_by_branching(&lambda, n), &integer(lambda.skew_syt_count(&nu).unwrap()));
                        }
                    }
                    assert_eq!(lhs, rhs, "p1^{steps} s_{nu}");
                }
            }
        }
    }

    #[test]
    fn linear_part_examples() {
        for k in 1..=4u32 {
            assert_eq!(power_sum_linear_part(&power_sum(4, k), k as usize).unwrap(), Rational::one());
        }
        for k in 2..=4u32 {
            let g = &power_sum(4, 1) * &power_sum(4, k - 1);
            assert!(power_sum_linear_part(&g, k as usize).unwrap().is_zero());
        }
        // (2,1) is the hook π_1(3), so this is χ((3))/3 = −1/3; (2,2) is not a hook
        assert_eq!(power_sum_linear_part(&schur(&p(&[2, 1]), 3), 3).unwrap(), rational(-1, 3));
        assert!(power_sum_linear_part(&schur(&p(&[2, 2]), 4), 4).unwrap().is_zero());
        assert_eq!(power_sum_linear_part(&schur(&p(&[2, 1, 1]), 4), 4).unwrap(), rational(1, 4));
        assert_eq!(power_sum_linear_part(&schur(&p(&[3, 1]), 4), 4).unwrap(), rational(-1, 4));
        assert_eq!(power_sum_linear_part(&x(2, 0), 1), Err(Error::NotSymmetric));
        assert!(power_sum_linear_part(&power_sum(2, 3), 3).is_err());
        assert!(power_sum_linear_part(&power_sum(3, 2), 3).is_err());
        assert!(power_sum_linear_part(&MultiPoly::zero(3), 2).unwrap().is_zero());
    }

    #[test]
    fn linear_part_matches_dense_solve() {
        for n in 1..=5usize {
            for k in 1..=n {
                let basis: Vec<Partition> = partitions_of(k, None).collect();
                let monomials: Vec<Vec<u32>> = basis.iter().map(|l| (0..n).map(|i| l.part(i) as u32).collect()).collect();
                let products: Vec<MultiPoly> = basis.iter().map(|rho| power_sum_product(n, rho)).collect();
                // every Schur polynomial of degree k plus one mixed combination
                let mut targets: Vec<MultiPoly> = basis.iter().map(|l| schur(l, n)).collect();
                targets.push(products.iter().enumerate().fold(MultiPoly::zero(n), |acc, (i, q)| &acc + &q.scalar_mul(&rational(i as i64 + 1, 3))));
                for g in targets {
                    let matrix: Vec<Vec<Rational>> = monomials.iter().map(|e| products.iter().map(|q| q.coefficient(e)).collect()).collect();
                    let rhs: Vec<Rational> = monomials.iter().map(|e| g.coefficient(e)).collect();
                    let solution = linalg::solve(matrix, rhs).expect("power sums independent");
                    assert_eq!(power_sum_linear_part(&g, k).unwrap(), solution[0], "n={n} k={k}");
                }
            }
        }
    }
}
