//! Homogeneous symmetric functions over exact rationals in the five classical bases.
//!
//! A [`SymFunc`] is a sparse map from partitions of its degree to nonzero
//! rational coefficients, tagged with the basis it is written in. All basis
//! changes pass through the monomial basis; see [`convert`].

mod convert;
mod eval;
mod kostka;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{CsfError, Result};
use crate::partition::Partition;

pub use convert::{basis_in_m, convert, m_multiply, transition_matrix};
pub use eval::{evaluate, sigma, truncate};
pub use kostka::{kostka, KostkaTable};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    P,
    E,
    H,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::P, Basis::E, Basis::H, Basis::S];

    pub fn symbol(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::P => 'p',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::S => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Basis {
    type Err = CsfError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            other => Err(CsfError::Parse(format!("unknown basis '{other}'"))),
        }
    }
}

/// A homogeneous symmetric function of a fixed degree in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymFunc {
            basis,
            degree,
            terms,
        }
    }

    /// Builds a function from `(partition, coefficient)` pairs, summing repeats
    /// and dropping zeros. Every partition must have size `degree`.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(CsfError::TermDegree {
                    size: lambda.size(),
                    partition: lambda.into(),
                    degree,
                });
            }
            f.add_term(lambda, &c);
        }
        Ok(f)
    }

    pub fn from_int_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        SymFunc::from_terms(basis, degree, terms.into_iter().map(|(p, c)| (p, rat(c))))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when no coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(CsfError::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        if self.degree != other.degree {
            return Err(CsfError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), &-c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect();
        out
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&rat(c))
    }

    /// Product of two functions written in the same basis; the result stays in that basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(CsfError::BasisMismatch {
                left: self.basis,
                right: other.basis,
            });
        }
        match self.basis {
            Basis::M => m_multiply(self, other),
            Basis::P | Basis::E | Basis::H => {
                let mut out = SymFunc::zero(self.basis, self.degree + other.degree);
                for (a, ca) in &self.terms {
                    for (b, cb) in &other.terms {
                        out.add_term(a.union(b), &(ca * cb));
                    }
                }
                Ok(out)
            }
            Basis::S => {
                let prod = self.convert(Basis::P).mul(&other.convert(Basis::P))?;
                Ok(prod.convert(Basis::S))
            }
        }
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        convert(self, target)
    }

    /// The involution fixed by `omega(p_lambda) = (-1)^{|lambda| - l(lambda)} p_lambda`,
    /// returned in the basis of `self`.
    pub fn omega(&self) -> SymFunc {
        let p = self.convert(Basis::P);
        let mut out = SymFunc::zero(Basis::P, p.degree);
        for (lambda, c) in p.terms {
            let odd = (lambda.size() - lambda.len()) % 2 == 1;
            out.terms.insert(lambda, if odd { -c } else { c });
        }
        out.convert(self.basis)
    }

    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        evaluate(self, values)
    }

    pub fn sigma(&self, length: Option<usize>) -> Rational {
        sigma(self, length)
    }

    /// JSON object `{"basis","degree","terms":[{"partition","num","den"}]}` with
    /// terms in reverse-lexicographic partition order. Integers that do not fit
    /// in an `i64` are written as decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                json!({
                    "partition": p.parts(),
                    "num": int_to_json(c.numer()),
                    "den": int_to_json(c.denom()),
                })
            })
            .collect();
        json!({
            "basis": self.basis.to_string(),
            "degree": self.degree,
            "terms": terms,
        })
    }

    pub fn from_json(value: &Value) -> Result<SymFunc> {
        let parse = |msg: &str| CsfError::Parse(msg.to_string());
        let basis: Basis = value
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| parse("missing \"basis\""))?
            .parse()?;
        let degree = value
            .get("degree")
            .and_then(Value::as_u64)
            .ok_or_else(|| parse("missing \"degree\""))? as usize;
        let raw_terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| parse("missing \"terms\""))?;
        let mut terms = Vec::with_capacity(raw_terms.len());
        for t in raw_terms {
            let parts: Vec<u32> = serde_json::from_value(
                t.get("partition").cloned().ok_or_else(|| parse("term without \"partition\""))?,
            )
            .map_err(|e| CsfError::Parse(e.to_string()))?;
            let num = int_from_json(t.get("num").ok_or_else(|| parse("term without \"num\""))?)?;
            let den = match t.get("den") {
                Some(d) => int_from_json(d)?,
                None => BigInt::one(),
            };
            if den.is_zero() {
                return Err(parse("zero denominator"));
            }
            terms.push((Partition::new(parts)?, Rational::new(num, den)));
        }
        SymFunc::from_terms(basis, degree, terms)
    }
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| CsfError::Parse(format!("coefficient {n} is not an integer"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| CsfError::Parse(format!("coefficient '{s}': {e}"))),
        other => Err(CsfError::Parse(format!("bad coefficient {other}"))),
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{}{}", self.basis, lambda)?;
        }
        Ok(())
    }
}

/// A finite sum of homogeneous components of different degrees, all in one basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedSymFunc {
    components: BTreeMap<usize, SymFunc>,
}

impl GradedSymFunc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn components(&self) -> impl Iterator<Item = &SymFunc> {
        self.components.values()
    }

    pub fn component(&self, degree: usize) -> Option<&SymFunc> {
        self.components.get(&degree)
    }

    pub fn add_homogeneous(&mut self, f: &SymFunc) -> Result<()> {
        let updated = match self.components.get(&f.degree()) {
            Some(existing) => existing.add(&f.convert(existing.basis()))?,
            None => f.clone(),
        };
        if updated.is_zero() {
            self.components.remove(&f.degree());
        } else {
            self.components.insert(f.degree(), updated);
        }
        Ok(())
    }

    pub fn convert(&self, target: Basis) -> GradedSymFunc {
        GradedSymFunc {
            components: self
                .components
                .iter()
                .map(|(&d, f)| (d, f.convert(target)))
                .collect(),
        }
    }

    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        self.components.values().map(|f| f.evaluate(values)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn display_and_json_order() {
        let f = SymFunc::from_int_terms(
            Basis::E,
            3,
            [(partition![1, 1, 1], 1), (partition![3], 6), (partition![2, 1], -3)],
        )
        .unwrap();
        assert_eq!(f.to_string(), "6e(3) - 3e(2,1) + e(1,1,1)");
        let j = f.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"basis":"e","degree":3,"terms":[{"partition":[3],"num":6,"den":1},{"partition":[2,1],"num":-3,"den":1},{"partition":[1,1,1],"num":1,"den":1}]}"#
        );
        assert_eq!(SymFunc::from_json(&j).unwrap(), f);
    }

    #[test]
    fn json_accepts_big_string_coefficients() {
        let j: Value = serde_json::from_str(
            r#"{"basis":"p","degree":2,"terms":[{"partition":[2],"num":"123456789012345678901234567891","den":"7"}]}"#,
        )
        .unwrap();
        let f = SymFunc::from_json(&j).unwrap();
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        assert!(!f.is_integral());
    }

    #[test]
    fn rejects_wrong_degree_terms_and_mixed_bases() {
        assert!(SymFunc::from_int_terms(Basis::P, 2, [(partition![3], 1)]).is_err());
        let a = SymFunc::basis_element(Basis::P, partition![2]);
        let b = SymFunc::basis_element(Basis::E, partition![2]);
        assert!(matches!(a.add(&b), Err(CsfError::BasisMismatch { .. })));
        let c = SymFunc::basis_element(Basis::P, partition![1]);
        assert!(matches!(a.add(&c), Err(CsfError::DegreeMismatch { .. })));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = SymFunc::basis_element(Basis::P, partition![2]);
        let z = a.sub(&a).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 2);
    }

    #[test]
    fn empty_partition_is_the_unit() {
        for basis in Basis::ALL {
            let f = SymFunc::basis_element(basis, partition![2, 1]);
            assert_eq!(f.mul(&SymFunc::one(basis)).unwrap(), f, "basis {basis}");
        }
    }

    #[test]
    fn graded_sums_keep_components_apart() {
        let mut g = GradedSymFunc::new();
        g.add_homogeneous(&SymFunc::basis_element(Basis::P, partition![2])).unwrap();
        g.add_homogeneous(&SymFunc::basis_element(Basis::E, partition![1])).unwrap();
        g.add_homogeneous(&SymFunc::basis_element(Basis::P, partition![1, 1])).unwrap();
        assert_eq!(g.components().count(), 2);
        // p2 + p11 + e1 at (1,1,1): 3 + 9 + 3
        let ones = vec![rat(1); 3];
        assert_eq!(g.evaluate(&ones), rat(15));
        let e = g.convert(Basis::E);
        assert_eq!(e.evaluate(&ones), rat(15));
    }
}
