//! The weak CSF and the chromatic polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::delcon::shared;
use crate::dense::DensePoly;
use crate::error::{CsfError, Result};
use crate::graph::{acyclic_masks, WeightedGraph};
use crate::symfunc::{rat, Rational};

/// `X̄` in `k` variables: the sum over acyclic orientations `γ` and colourings
/// `κ` with `κ(tail) ≤ κ(head)` on every arc, of `∏ x_{κ(v)}^{w(v)}`.
///
/// For each colouring, edges with distinct end colours force their arc, so the
/// colouring contributes the number of acyclic orientations matching those bits.
pub fn weak_csf_truncated(g: &WeightedGraph, k: usize) -> Result<DensePoly> {
    if k == 0 {
        return Err(CsfError::Unsupported("at least one variable is required".into()));
    }
    let mut out = DensePoly::new(k);
    let masks = acyclic_masks(g)?;
    if masks.is_empty() {
        return Ok(out);
    }
    let n = g.n();
    let edges = g.index_edges();
    let mut colours = vec![0usize; n];
    let mut exponents = vec![0u32; k];
    loop {
        let (mut fixed, mut reversed) = (0u64, 0u64);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if colours[u] != colours[v] {
                fixed |= 1 << i;
                if colours[u] > colours[v] {
                    reversed |= 1 << i;
                }
            }
        }
        let count = masks.iter().filter(|&&m| m & fixed == reversed).count();
        if count > 0 {
            exponents.iter_mut().for_each(|x| *x = 0);
            for (v, &c) in colours.iter().enumerate() {
                exponents[c] += g.weights()[v];
            }
            out.add_term(&exponents, &rat(count as i64));
        }
        let mut i = 0;
        while i < n && colours[i] == k - 1 {
            colours[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        colours[i] += 1;
    }
    Ok(out)
}

/// The chromatic polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticPolynomial {
    coeffs: Vec<BigInt>,
}

impl ChromaticPolynomial {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// `χ_G`, interpolated from `X(1^k)` for `k = 0..=n`.
pub fn chromatic_polynomial(g: &WeightedGraph) -> ChromaticPolynomial {
    let x = shared().compute(g).value;
    let n = g.n();
    let values: Vec<Rational> = (0..=n)
        .map(|k| x.evaluate(&vec![Rational::one(); k]))
        .collect();
    // Newton form on the nodes 0..=n: χ(t) = Σ_j Δ^j χ(0) · t(t-1)…(t-j+1) / j!
    let mut diffs = values.clone();
    let mut leading = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut falling = vec![Rational::one()];
    let mut factorial = Rational::one();
    for (j, delta) in leading.iter().enumerate() {
        if j > 0 {
            factorial *= rat(j as i64);
            let shift = rat(j as i64 - 1);
            let mut next = vec![Rational::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &shift;
            }
            falling = next;
        }
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += delta * c / &factorial;
        }
    }
    ChromaticPolynomial {
        coeffs: coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "chromatic coefficients are integers");
                c.to_integer()
            })
            .collect(),
    }
}

/// `χ_G(k)`; for `k < 0` this is the interpolated polynomial's value.
pub fn chromatic_value(g: &WeightedGraph, k: i64) -> BigInt {
    chromatic_polynomial(g).eval(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{acyclic_orientations, families};
    use crate::symfunc::{truncate, Basis};

    fn brute_weak(g: &WeightedGraph, k: usize) -> DensePoly {
        let mut out = DensePoly::new(k);
        let n = g.n();
        for o in acyclic_orientations(g).unwrap() {
            let arcs: Vec<(usize, usize)> = o
                .arcs()
                .iter()
                .map(|&(t, h)| (g.index_of(t).unwrap(), g.index_of(h).unwrap()))
                .collect();
            for code in 0..k.pow(n as u32) {
                let colours: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
                if arcs.iter().all(|&(t, h)| colours[t] <= colours[h]) {
                    let mut e = vec![0u32; k];
                    for v in 0..n {
                        e[colours[v]] += g.weights()[v];
                    }
                    out.add_term(&e, &Rational::one());
                }
            }
        }
        out
    }

    #[test]
    fn single_unit_edge() {
        let g = families::path(&[1, 1]);
        let w = weak_csf_truncated(&g, 2).unwrap();
        // both orientations admit each monochromatic colouring
        assert_eq!(w.coeff(&[2, 0]), rat(2));
        assert_eq!(w.coeff(&[0, 2]), rat(2));
        assert_eq!(w.coeff(&[1, 1]), rat(2));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn matches_direct_enumeration() {
        let graphs = [
            families::complete(&[1, 2, 1]),
            families::cycle(&[2, 1, 1, 1]),
            WeightedGraph::with_weights(&[1, 2, 1], &[(0, 1), (0, 1), (1, 2)]).unwrap(),
        ];
        for g in &graphs {
            let k = g.total_weight().min(4);
            assert_eq!(weak_csf_truncated(g, k).unwrap(), brute_weak(g, k));
        }
    }

    #[test]
    fn edgeless_and_loops() {
        let g = families::edgeless(&[2, 1]);
        let x = crate::symfunc::SymFunc::basis_element(Basis::P, g.weight_partition());
        assert_eq!(weak_csf_truncated(&g, 3).unwrap(), truncate(&x, 3));
        let looped = WeightedGraph::unweighted(2, &[(0, 0), (0, 1)]).unwrap();
        assert!(weak_csf_truncated(&looped, 3).unwrap().is_zero());
    }

    #[test]
    fn chromatic_polynomials() {
        let tri = families::complete(&[1, 1, 1]);
        let chi = chromatic_polynomial(&tri);
        // t(t-1)(t-2) = t^3 - 3t^2 + 2t
        let want: Vec<BigInt> = [0, 2, -3, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(chi.coeffs(), want.as_slice());
        assert_eq!(chromatic_value(&tri, 3), BigInt::from(6));
        assert_eq!(chromatic_value(&tri, -1), BigInt::from(-6));
        let heavy = families::complete(&[2, 3, 1]);
        assert_eq!(chromatic_polynomial(&heavy), chi);
        let looped = WeightedGraph::unweighted(2, &[(0, 0)]).unwrap();
        for k in -2..4 {
            assert!(chromatic_value(&looped, k).is_zero());
        }
        let c5 = families::cycle(&[1; 5]);
        // (t-1)^5 - (t-1)
        for t in -3i64..6 {
            assert_eq!(chromatic_value(&c5, t), BigInt::from((t - 1).pow(5) - (t - 1)));
        }
    }
}
