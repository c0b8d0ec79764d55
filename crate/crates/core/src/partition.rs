//! Integer partitions and the orders used to index symmetric-function bases.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};

/// A weakly decreasing tuple of positive integers.
///
/// `Ord` is reverse-lexicographic: `(4)` sorts before `(3,1)`, which sorts
/// before `(1,1,1,1)`. Every `BTreeMap<Partition, _>` in the crate therefore
/// iterates in the canonical output order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(CsfError::InvalidPartition(parts))
        }
    }

    /// Sorts the given positive integers into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `1^n`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(m, 1^{n-m})`, for `1 <= m <= n`.
    pub fn hook(m: u32, n: u32) -> Result<Self> {
        if m == 0 || m > n {
            return Err(CsfError::InvalidPartition(vec![m, n]));
        }
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, (n - m) as usize));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `(value, multiplicity)` pairs in decreasing value order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `prod_i r_i(self)!`, the number of color permutations fixing the type.
    pub fn multiplicity_factorial(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (_, r)| acc * factorial(r))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        let len = self.len().max(other.len());
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0) as usize;
            b += other.0.get(i).copied().unwrap_or(0) as usize;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiset union of parts; the product index for multiplicative bases.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// The partition with its first part removed.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = CsfError;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

/// Shorthand for building partitions in tests and fixtures; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// All partitions of `d` in reverse-lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// Whether the parts of `mu` can be grouped into blocks summing to the parts of `lambda`.
pub fn is_refinement(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(CsfError::SizeMismatch {
            left: mu.0.clone(),
            right: lambda.0.clone(),
        });
    }
    // Assign parts of mu (largest first) into bins with capacities lambda_i;
    // every bin must end exactly full, which the size equality guarantees
    // once all parts are placed.
    fn place(parts: &[u32], bins: &mut [u32]) -> bool {
        let Some((&first, rest)) = parts.split_first() else {
            return true;
        };
        let mut tried: Vec<u32> = Vec::new();
        for i in 0..bins.len() {
            let room = bins[i];
            if room < first || tried.contains(&room) {
                continue;
            }
            tried.push(room);
            bins[i] -= first;
            if place(rest, bins) {
                return true;
            }
            bins[i] += first;
        }
        false
    }
    let mut bins = lambda.0.clone();
    Ok(place(&mu.0, &mut bins))
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of distinct rearrangements of `lambda` padded with zeros to length `len`.
pub(crate) fn orbit_size(lambda: &Partition, len: usize) -> BigUint {
    if lambda.len() > len {
        return BigUint::default();
    }
    let denom = lambda.multiplicity_factorial() * factorial(len - lambda.len());
    factorial(len) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_partitions(d: u32) -> Vec<Vec<u32>> {
        // every weakly decreasing tuple built by appending parts <= the previous
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<u32>::new(), 0u32)];
        while let Some((parts, total)) = stack.pop() {
            if total == d {
                out.push(parts);
                continue;
            }
            let max = parts.last().copied().unwrap_or(d);
            for p in 1..=max {
                if total + p <= d {
                    let mut next = parts.clone();
                    next.push(p);
                    stack.push((next, total + p));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    fn partition_number(d: usize) -> usize {
        // p(n, k) = p(n, k-1) + p(n-k, k)
        let mut table = vec![vec![0usize; d + 1]; d + 1];
        table[0].fill(1);
        for n in 1..=d {
            for k in 1..=d {
                table[n][k] = table[n][k - 1] + if n >= k { table[n - k][k] } else { 0 };
            }
        }
        table[d][d]
    }

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let got: Vec<Vec<u32>> = partitions_of(4).into_iter().map(Vec::from).collect();
        assert_eq!(
            got,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn partitions_match_brute_force_and_recurrence() {
        for d in 0..=10u32 {
            let got: Vec<Vec<u32>> = partitions_of(d as usize).into_iter().map(Vec::from).collect();
            assert_eq!(got, brute_force_partitions(d));
            assert_eq!(got.len(), partition_number(d as usize));
        }
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn ord_is_reverse_lex() {
        let ps = partitions_of(6);
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_parts(vec![1, 3, 2]).unwrap(), partition![3, 2, 1]);
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert!(partition![3, 1].dominates(&partition![2, 2]));
        assert!(!partition![2, 2].dominates(&partition![3, 1]));
        assert!(!partition![3, 3].dominates(&partition![4, 1, 1]));
        assert!(!partition![4, 1, 1].dominates(&partition![3, 3]));
        for p in partitions_of(7) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn refinement_examples() {
        assert!(is_refinement(&partition![2, 2], &partition![2, 2]).unwrap());
        assert!(is_refinement(&partition![2, 1], &partition![3]).unwrap());
        assert!(!is_refinement(&partition![2, 2], &partition![3, 1]).unwrap());
        assert!(is_refinement(&partition![1, 1, 1, 1], &partition![3, 1]).unwrap());
        assert!(is_refinement(&partition![2, 2, 1, 1], &partition![3, 3]).unwrap());
        assert!(is_refinement(&partition![3, 2, 2], &partition![4, 3]).unwrap());
        assert!(!is_refinement(&partition![2, 2, 2], &partition![3, 3]).unwrap());
        assert!(is_refinement(&partition![2, 1], &partition![2, 2]).is_err());
    }

    #[test]
    fn refinement_implies_reverse_dominance() {
        for d in 1..=7 {
            let ps = partitions_of(d);
            for mu in &ps {
                for lambda in &ps {
                    if is_refinement(mu, lambda).unwrap() {
                        assert!(lambda.dominates(mu), "{mu} refines {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&partition![1], 3), BigUint::from(3u32));
        assert_eq!(orbit_size(&partition![2, 1], 3), BigUint::from(6u32));
        assert_eq!(orbit_size(&partition![1, 1], 3), BigUint::from(3u32));
        assert_eq!(orbit_size(&partition![1, 1, 1, 1], 3), BigUint::default());
    }
}
