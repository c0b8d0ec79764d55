//! The q-deformed chromatic function of an oriented weighted graph, truncated
//! to finitely many variables.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{CsfError, Result};
use crate::graph::{contract_orientation, EdgeId, Orientation, WeightedGraph};

/// Polynomial in `x_1..x_k` whose coefficients are integer polynomials in `q`
/// (ascending coefficient lists without trailing zeros).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Vec<i64>>,
}

fn trim(c: &mut Vec<i64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

fn add_into(acc: &mut Vec<i64>, c: &[i64], sign: i64) {
    if acc.len() < c.len() {
        acc.resize(c.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(c) {
        *a += sign * b;
    }
    trim(acc);
}

/// Whether `1 + q` divides the polynomial, i.e. it vanishes at `q = -1`.
pub fn divisible_by_one_plus_q(coeffs: &[i64]) -> bool {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { *c } else { -c })
        .sum::<i64>()
        == 0
}

impl QPolynomial {
    pub fn new(nvars: usize) -> Self {
        QPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Vec<i64>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Vec<i64> {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: &[u32], c: &[i64]) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        let entry = self.terms.entry(exponents.to_vec()).or_default();
        add_into(entry, c, 1);
        if entry.is_empty() {
            self.terms.remove(exponents);
        }
    }

    fn combine(&self, other: &QPolynomial, sign: i64) -> Result<QPolynomial> {
        if self.nvars != other.nvars {
            return Err(CsfError::DegreeMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_default();
            add_into(entry, c, sign);
            if entry.is_empty() {
                out.terms.remove(e);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QPolynomial) -> Result<QPolynomial> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &QPolynomial) -> Result<QPolynomial> {
        self.combine(other, -1)
    }

    /// Multiplication by `1 + q`.
    pub fn times_one_plus_q(&self) -> QPolynomial {
        let mut out = QPolynomial::new(self.nvars);
        for (e, c) in &self.terms {
            let mut shifted = vec![0; c.len() + 1];
            for (i, &x) in c.iter().enumerate() {
                shifted[i] += x;
                shifted[i + 1] += x;
            }
            trim(&mut shifted);
            out.terms.insert(e.clone(), shifted);
        }
        out
    }

    /// The polynomial in `q` obtained by setting every `x_i = 1`.
    pub fn at_all_ones(&self) -> Vec<i64> {
        let mut acc = Vec::new();
        for c in self.terms.values() {
            add_into(&mut acc, c, 1);
        }
        acc
    }

    /// The `x`-polynomial at a fixed integer `q`.
    pub fn at_q(&self, q: i64) -> BTreeMap<Vec<u32>, i64> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.iter().rev().fold(0, |acc, x| acc * q + x)))
            .filter(|(_, v)| *v != 0)
            .collect()
    }

    /// `{"k": .., "terms": [{"exponents": [..], "q_coeffs": [..]}]}`, largest exponent vector first.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| json!({"exponents": e, "q_coeffs": c}))
            .collect();
        json!({"k": self.nvars, "terms": terms})
    }
}

/// `Σ_κ x_κ q^{asc(κ)}` over proper colourings `κ: V → {1..k}`, where an
/// ascent is an arc `t → h` with `κ(t) < κ(h)`, counted per edge occurrence.
pub fn quasi_csf(g: &WeightedGraph, gamma: &Orientation, k: usize) -> Result<QPolynomial> {
    if gamma.arcs().len() != g.num_edges() {
        return Err(CsfError::InvalidOrientation("orientation/graph mismatch".into()));
    }
    let mut out = QPolynomial::new(k);
    if g.has_loop() || (k == 0 && g.n() > 0) {
        return Ok(out);
    }
    let n = g.n();
    let arcs: Vec<(usize, usize)> = gamma
        .arcs()
        .iter()
        .map(|&(t, h)| (g.index_of(t).unwrap(), g.index_of(h).unwrap()))
        .collect();
    // arcs grouped by their later-coloured endpoint so each is decided once
    let mut closing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(t, h) in &arcs {
        closing[t.max(h)].push((t, h));
    }
    let mut tally: BTreeMap<Vec<u32>, Vec<i64>> = BTreeMap::new();
    let mut colours = vec![0usize; n];
    colour_from(0, 0, g, k, &closing, &mut colours, &mut tally);
    for (e, c) in tally {
        out.add_term(&e, &c);
    }
    Ok(out)
}

fn colour_from(
    v: usize,
    ascents: usize,
    g: &WeightedGraph,
    k: usize,
    closing: &[Vec<(usize, usize)>],
    colours: &mut Vec<usize>,
    tally: &mut BTreeMap<Vec<u32>, Vec<i64>>,
) {
    if v == colours.len() {
        let mut e = vec![0u32; k];
        for (i, &c) in colours.iter().enumerate() {
            e[c] += g.weights()[i];
        }
        let entry = tally.entry(e).or_default();
        if entry.len() <= ascents {
            entry.resize(ascents + 1, 0);
        }
        entry[ascents] += 1;
        return;
    }
    'colour: for c in 0..k {
        colours[v] = c;
        let mut extra = 0;
        for &(t, h) in &closing[v] {
            if colours[t] == colours[h] {
                continue 'colour;
            }
            if colours[t] < colours[h] {
                extra += 1;
            }
        }
        colour_from(v + 1, ascents + extra, g, k, closing, colours, tally);
    }
}

/// `γ` with the head and tail of one edge occurrence swapped.
pub fn flip_orientation(gamma: &Orientation, e: EdgeId) -> Result<Orientation> {
    gamma.flip(e)
}

/// Both sides of `X(γ) + X(flip_e γ) = (1+q)(X(G\e, γ) − X(G/e, γ/e))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipRelation {
    pub left: QPolynomial,
    pub right: QPolynomial,
}

impl FlipRelation {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

pub fn flip_relation(
    g: &WeightedGraph,
    gamma: &Orientation,
    e: EdgeId,
    k: usize,
) -> Result<FlipRelation> {
    let left = quasi_csf(g, gamma, k)?.add(&quasi_csf(g, &flip_orientation(gamma, e)?, k)?)?;
    let deleted_graph = g.delete_edge(e)?;
    let mut kept = gamma.arcs().to_vec();
    kept.remove(e.0);
    let deleted = quasi_csf(&deleted_graph, &Orientation::new(&deleted_graph, kept)?, k)?;
    let (contraction, contracted_gamma) = contract_orientation(g, gamma, e)?;
    let contracted = quasi_csf(&contraction.graph, &contracted_gamma, k)?;
    let right = deleted.sub(&contracted)?.times_one_plus_q();
    Ok(FlipRelation { left, right })
}

pub fn verify_flip_relation(
    g: &WeightedGraph,
    gamma: &Orientation,
    e: EdgeId,
    k: usize,
) -> Result<bool> {
    Ok(flip_relation(g, gamma, e, k)?.holds())
}
