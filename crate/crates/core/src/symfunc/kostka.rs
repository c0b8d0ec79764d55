//! Kostka numbers by direct enumeration of semistandard Young tableaux.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{CsfError, Result};
use crate::memo::{get_or_insert_with, SharedTable};
use crate::partition::{partitions_of, Partition};

static KOSTKA: SharedTable<(Partition, Partition), BigUint> = SharedTable::new();

/// Number of SSYT of shape `shape` whose content has `content[i]` copies of `i + 1`.
fn count_ssyt(shape: &Partition, content: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut remaining: Vec<u32> = content.parts().to_vec();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        // entries are 1-based; rows weakly increase, columns strictly increase
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above) as usize;
        let mut total = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v as u32;
            total += fill(k + 1, cells, grid, remaining);
            remaining[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }

    fill(0, &cells, &mut grid, &mut remaining)
}

/// `K_{lambda, mu}`, memoized per pair.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.size() != mu.size() {
        return Err(CsfError::SizeMismatch {
            left: lambda.parts().to_vec(),
            right: mu.parts().to_vec(),
        });
    }
    let value = get_or_insert_with(&KOSTKA, (lambda.clone(), mu.clone()), || {
        BigUint::from(count_ssyt(lambda, mu))
    });
    Ok((*value).clone())
}

/// All Kostka numbers of one degree.
#[derive(Clone, Debug)]
pub struct KostkaTable {
    degree: usize,
    values: HashMap<(Partition, Partition), BigUint>,
}

impl KostkaTable {
    pub fn new(degree: usize) -> Self {
        let parts = partitions_of(degree);
        let mut values = HashMap::new();
        for lambda in &parts {
            for mu in &parts {
                values.insert(
                    (lambda.clone(), mu.clone()),
                    kostka(lambda, mu).expect("same degree"),
                );
            }
        }
        KostkaTable { degree, values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigUint> {
        self.values.get(&(lambda.clone(), mu.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    /// Every filling of the shape with values 1..=l(content), checked against
    /// the row/column rules and the content afterwards.
    fn brute_force(shape: &Partition, content: &Partition) -> u64 {
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        let k = content.len() as u32;
        let n = cells.len() as u32;
        let mut count = 0;
        for code in 0..k.pow(n) {
            let mut grid: Vec<Vec<u32>> =
                shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
            let mut x = code;
            for &(r, c) in &cells {
                grid[r][c] = x % k + 1;
                x /= k;
            }
            let rows_ok = grid.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
            let cols_ok = cells
                .iter()
                .all(|&(r, c)| r == 0 || grid[r - 1][c] < grid[r][c]);
            let content_ok = (1..=k).all(|v| {
                grid.iter().flatten().filter(|&&x| x == v).count()
                    == content.parts()[v as usize - 1] as usize
            });
            if rows_ok && cols_ok && content_ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn named_values() {
        assert_eq!(kostka(&partition![3, 1], &partition![3, 1]).unwrap(), 1u32.into());
        assert_eq!(kostka(&partition![2, 1], &partition![1, 1, 1]).unwrap(), 2u32.into());
        assert_eq!(kostka(&partition![1, 1, 1], &partition![2, 1]).unwrap(), 0u32.into());
        assert!(kostka(&partition![2], &partition![1]).is_err());
    }

    #[test]
    fn matches_brute_force_fillings() {
        for d in 1..=6 {
            for lambda in partitions_of(d) {
                for mu in partitions_of(d) {
                    assert_eq!(
                        kostka(&lambda, &mu).unwrap(),
                        BigUint::from(brute_force(&lambda, &mu)),
                        "K[{lambda}, {mu}]"
                    );
                }
            }
        }
    }

    #[test]
    fn unitriangular_in_dominance() {
        for d in 1..=8 {
            let table = KostkaTable::new(d);
            for lambda in partitions_of(d) {
                assert_eq!(table.get(&lambda, &lambda), Some(&1u32.into()));
                for mu in partitions_of(d) {
                    if !lambda.dominates(&mu) {
                        assert_eq!(table.get(&lambda, &mu), Some(&0u32.into()), "{lambda} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn standard_tableaux_counts() {
        // K[lambda, 1^d] = f^lambda; the squares sum to d!
        for d in 1..=7u32 {
            let ones = Partition::column(d);
            let sum: BigUint = partitions_of(d as usize)
                .iter()
                .map(|l| {
                    let f = kostka(l, &ones).unwrap();
                    &f * &f
                })
                .sum();
            assert_eq!(sum, crate::partition::factorial(d as usize));
        }
    }
}
