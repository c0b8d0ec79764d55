//! Polynomials in finitely many variables, stored as exponent vector -> coefficient.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::symfunc::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DensePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl DensePoly {
    pub fn new(nvars: usize) -> Self {
        DensePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exponents: &[u32], c: &Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(exponents) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(exponents);
                }
            }
            None => {
                self.terms.insert(exponents.to_vec(), c.clone());
            }
        }
    }

    /// Terms as `{"exponents": [...], "coeff": "num/den"}`, largest exponent vector first.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| json!({"exponents": e, "coeff": c.to_string()}))
            .collect();
        json!({"k": self.nvars, "terms": terms})
    }
}
