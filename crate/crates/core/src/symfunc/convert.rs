//! Basis changes. Every basis element is expanded in the monomial basis; a
//! conversion goes to M and then back out through the inverse of the target
//! basis's transition matrix, computed once per (basis, degree) by exact
//! Gauss-Jordan elimination.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{kostka, Basis, Rational, SymFunc};
use crate::error::{CsfError, Result};
use crate::memo::{for_each_arrangement, get_or_insert_with, SharedTable};
use crate::partition::{orbit_size, partitions_of, Partition};

static MONOMIAL_PRODUCTS: SharedTable<(Partition, Partition), Vec<(Partition, BigUint)>> =
    SharedTable::new();
static EXPANSIONS: SharedTable<(Basis, Partition), SymFunc> = SharedTable::new();
static TRANSITIONS: SharedTable<(Basis, usize), Transition> = SharedTable::new();

/// `m_alpha * m_beta` as `(gamma, coefficient)` pairs.
///
/// With `L = l(alpha) + l(beta)` variables, fix the exponent vector of `alpha`
/// and run over every distinct arrangement `b` of `beta`. Counting how often
/// `alpha + b` sorts to `gamma` gives the number of pairs with a fixed first
/// factor; the coefficient of `m_gamma` is that count times
/// `|orbit(alpha)| / |orbit(gamma)|`.
fn monomial_product(alpha: &Partition, beta: &Partition) -> Arc<Vec<(Partition, BigUint)>> {
    let (alpha, beta) = if alpha >= beta {
        (alpha.clone(), beta.clone())
    } else {
        (beta.clone(), alpha.clone())
    };
    get_or_insert_with(&MONOMIAL_PRODUCTS, (alpha.clone(), beta.clone()), || {
        if alpha.is_empty() || beta.is_empty() {
            return vec![(alpha.union(&beta), BigUint::one())];
        }
        let len = alpha.len() + beta.len();
        let mut fixed = alpha.parts().to_vec();
        fixed.resize(len, 0);
        let mut moving = beta.parts().to_vec();
        moving.resize(len, 0);

        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        let mut merged = vec![0u32; len];
        for_each_arrangement(&moving, |b| {
            for i in 0..len {
                merged[i] = fixed[i] + b[i];
            }
            let mut parts: Vec<u32> = merged.iter().copied().filter(|&x| x > 0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            *counts.entry(Partition::new(parts).expect("sorted")).or_default() += 1;
        });

        let alpha_orbit = orbit_size(&alpha, len);
        counts
            .into_iter()
            .map(|(gamma, c)| {
                let numerator = BigUint::from(c) * &alpha_orbit;
                let gamma_orbit = orbit_size(&gamma, len);
                debug_assert!((&numerator % &gamma_orbit).is_zero());
                (gamma, numerator / gamma_orbit)
            })
            .collect()
    })
}

/// Product of two functions in the monomial basis.
pub fn m_multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    for h in [f, g] {
        if h.basis() != Basis::M {
            return Err(CsfError::BasisMismatch {
                left: Basis::M,
                right: h.basis(),
            });
        }
    }
    let mut out = SymFunc::zero(Basis::M, f.degree() + g.degree());
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let scale = ca * cb;
            for (gamma, c) in monomial_product(a, b).iter() {
                let c = Rational::from_integer(BigInt::from(c.clone()));
                out.add_term(gamma.clone(), &(&scale * c));
            }
        }
    }
    Ok(out)
}

fn generator_in_m(basis: Basis, n: u32) -> SymFunc {
    match basis {
        Basis::P => SymFunc::basis_element(Basis::M, Partition::row(n)),
        Basis::E => SymFunc::basis_element(Basis::M, Partition::column(n)),
        Basis::H => SymFunc::from_terms(
            Basis::M,
            n as usize,
            partitions_of(n as usize).into_iter().map(|mu| (mu, Rational::one())),
        )
        .expect("partitions of n have size n"),
        Basis::M | Basis::S => unreachable!("not a multiplicative basis"),
    }
}

fn expansion(basis: Basis, lambda: &Partition) -> Arc<SymFunc> {
    if basis == Basis::M {
        return Arc::new(SymFunc::basis_element(Basis::M, lambda.clone()));
    }
    get_or_insert_with(&EXPANSIONS, (basis, lambda.clone()), || match basis {
        Basis::S => {
            let d = lambda.size();
            let terms = partitions_of(d).into_iter().filter_map(|mu| {
                let k = kostka(lambda, &mu).expect("same size");
                (!k.is_zero()).then(|| (mu, Rational::from_integer(BigInt::from(k))))
            });
            SymFunc::from_terms(Basis::M, d, terms).expect("homogeneous")
        }
        _ => match lambda.parts() {
            [] => SymFunc::one(Basis::M),
            [n] => generator_in_m(basis, *n),
            [n, ..] => {
                let head = generator_in_m(basis, *n);
                let rest = expansion(basis, &lambda.tail());
                m_multiply(&head, &rest).expect("both in M")
            }
        },
    })
}

/// The basis element `b_lambda` expanded in the monomial basis.
pub fn basis_in_m(basis: Basis, lambda: &Partition) -> SymFunc {
    (*expansion(basis, lambda)).clone()
}

/// Dense matrix `A` with `b_lambda = sum_mu A[lambda][mu] m_mu`, rows and
/// columns indexed by `partitions_of(degree)`.
pub fn transition_matrix(basis: Basis, degree: usize) -> Vec<Vec<Rational>> {
    let parts = partitions_of(degree);
    parts
        .iter()
        .map(|lambda| {
            let row = expansion(basis, lambda);
            parts.iter().map(|mu| row.coeff(mu)).collect()
        })
        .collect()
}

struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Row lambda: the M-coordinates of `b_lambda`.
    to_m: Vec<Vec<(usize, Rational)>>,
    /// Row mu: the target-basis coordinates of `m_mu`.
    from_m: Vec<Vec<(usize, Rational)>>,
}

fn sparse_rows(dense: Vec<Vec<Rational>>) -> Vec<Vec<(usize, Rational)>> {
    dense
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect()
}

fn invert(mut a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        if !p.is_one() {
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[col][j] /= &p;
                }
                if !inv[col][j].is_zero() {
                    inv[col][j] /= &p;
                }
            }
        }
        let (pivot_a, pivot_inv) = (a[col].clone(), inv[col].clone());
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                if !pivot_a[j].is_zero() {
                    let delta = &factor * &pivot_a[j];
                    a[r][j] -= delta;
                }
                if !pivot_inv[j].is_zero() {
                    let delta = &factor * &pivot_inv[j];
                    inv[r][j] -= delta;
                }
            }
        }
    }
    Some(inv)
}

fn transition(basis: Basis, degree: usize) -> Arc<Transition> {
    get_or_insert_with(&TRANSITIONS, (basis, degree), || {
        let parts = partitions_of(degree);
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dense = transition_matrix(basis, degree);
        let inverse = invert(dense.clone())
            .unwrap_or_else(|| panic!("transition matrix for {basis} at degree {degree} is singular"));
        Transition {
            parts,
            index,
            to_m: sparse_rows(dense),
            from_m: sparse_rows(inverse),
        }
    })
}

/// Rewrites `f` in the `target` basis exactly.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis() == target {
        return f.clone();
    }
    let d = f.degree();
    let in_m = if f.basis() == Basis::M {
        f.clone()
    } else {
        let t = transition(f.basis(), d);
        let mut acc = vec![Rational::zero(); t.parts.len()];
        for (lambda, c) in f.terms() {
            for (mu, a) in &t.to_m[t.index[lambda]] {
                acc[*mu] += c * a;
            }
        }
        collect(Basis::M, d, &t.parts, acc)
    };
    if target == Basis::M {
        return in_m;
    }
    let t = transition(target, d);
    let mut acc = vec![Rational::zero(); t.parts.len()];
    for (mu, c) in in_m.terms() {
        for (lambda, a) in &t.from_m[t.index[mu]] {
            acc[*lambda] += c * a;
        }
    }
    collect(target, d, &t.parts, acc)
}

fn collect(basis: Basis, degree: usize, parts: &[Partition], acc: Vec<Rational>) -> SymFunc {
    let mut out = SymFunc::zero(basis, degree);
    for (p, c) in parts.iter().zip(acc) {
        out.add_term(p.clone(), &c);
    }
    out
}
