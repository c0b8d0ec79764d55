use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{Basis, Rational, SymFunc};
use crate::dense::DensePoly;
use crate::memo::for_each_arrangement;
use crate::partition::{orbit_size, Partition};

fn monomial_at(lambda: &Partition, values: &[Rational]) -> Rational {
    if lambda.len() > values.len() {
        return Rational::zero();
    }
    if let Some(first) = values.first() {
        if values.iter().all(|v| v == first) {
            let orbit = Rational::from_integer(BigInt::from(orbit_size(lambda, values.len())));
            return orbit * Pow::pow(first, lambda.size() as i32);
        }
    }
    // distinct placements of the parts of lambda onto the variables
    let mut padded = lambda.parts().to_vec();
    padded.resize(values.len(), 0);
    let mut total = Rational::zero();
    for_each_arrangement(&padded, |exps| {
        let mut term = Rational::one();
        for (x, &e) in values.iter().zip(exps) {
            if e > 0 {
                term *= Pow::pow(x, e as i32);
            }
        }
        total += term;
    });
    total
}

/// Substitutes `x_i = values[i]` and `x_i = 0` beyond them.
pub fn evaluate(f: &SymFunc, values: &[Rational]) -> Rational {
    let m = f.convert(Basis::M);
    m.terms()
        .iter()
        .map(|(lambda, c)| c * monomial_at(lambda, values))
        .sum()
}

/// The polynomial obtained by keeping only the first `nvars` variables.
pub fn truncate(f: &SymFunc, nvars: usize) -> DensePoly {
    let m = f.convert(Basis::M);
    let mut out = DensePoly::new(nvars);
    for (lambda, c) in m.terms() {
        if lambda.len() > nvars {
            continue;
        }
        let mut padded = lambda.parts().to_vec();
        padded.resize(nvars, 0);
        for_each_arrangement(&padded, |exps| out.add_term(exps, c));
    }
    out
}

/// Sum of the e-basis coefficients, optionally only over partitions with `length` parts.
pub fn sigma(f: &SymFunc, length: Option<usize>) -> Rational {
    let e = f.convert(Basis::E);
    e.terms()
        .iter()
        .filter(|(lambda, _)| length.is_none_or(|m| lambda.len() == m))
        .map(|(_, c)| c.clone())
        .sum()
}
