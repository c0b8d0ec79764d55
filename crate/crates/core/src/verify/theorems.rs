//! Single-instance verifiers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::{crosschecked, describe, excess_sign, Check, VerificationReport};
use crate::engine::{
    chromatic_value, csf_delcon, csf_stable, csf_subsets, weak_csf_truncated, EngineConfig,
};
use crate::error::{CsfError, Result};
use crate::graph::{
    acyclic_masks, canonical_key, connected_partition_types, contract_orientation, families,
    is_cycle, simple_cycles, EdgeId, Orientation, SinkMap, WeightedGraph, DEFAULT_MEMO_BOUND,
};
use crate::oriented::{flip_relation, quasi_csf, QPolynomial};
use crate::partition::{is_refinement, partitions_of, Partition};
use crate::symfunc::{rat, truncate, Basis, Rational, SymFunc};

/// The e-basis top coefficient is only claimed up to sign; attached whenever its absolute value is not 1.
pub const E_TOP_NOTE: &str =
    "coefficient of e_(d) in X has sign (-1)^(d-n) but its absolute value is not 1; only the sign is asserted";

macro_rules! x_or_report {
    ($check:expr, $g:expr) => {
        match crosschecked($check, $g) {
            Ok(x) => x,
            Err(report) => return Ok(report),
        }
    };
}

fn big(r: &Rational) -> Value {
    json!(r.to_string())
}

pub fn verify_engines(g: &WeightedGraph) -> Result<VerificationReport> {
    let stable = csf_stable(g).value;
    let subsets = csf_subsets(g, &EngineConfig::default())?.value;
    let delcon = csf_delcon(g).value;
    let ok = stable == subsets && subsets == delcon;
    Ok(VerificationReport::compare(Check::Engines, describe(g, json!({})), ok, || {
        json!({"stable": stable.to_json(), "subsets": subsets.to_json(), "delcon": delcon.to_json()})
    }))
}

/// Weak CSF in `d` variables against the `d`-variable truncation of `(-1)^{d-n} ω(X)`.
pub fn verify_involution(g: &WeightedGraph) -> Result<VerificationReport> {
    let x = x_or_report!(Check::Involution, g);
    let k = g.total_weight().max(1);
    let weak = weak_csf_truncated(g, k)?;
    let dual = truncate(&x.omega().scale_int(excess_sign(g)), k);
    Ok(VerificationReport::compare(
        Check::Involution,
        describe(g, json!({"k": k})),
        weak == dual,
        || json!({"weak": weak.to_json(), "signed_omega": dual.to_json()}),
    ))
}

pub fn verify_p_positivity(g: &WeightedGraph) -> Result<VerificationReport> {
    let x = x_or_report!(Check::PPositivity, g);
    let y = x.omega().scale_int(excess_sign(g));
    Ok(VerificationReport::compare(
        Check::PPositivity,
        describe(g, json!({})),
        y.is_nonnegative(),
        || json!({"signed_omega": y.to_json()}),
    ))
}

fn cycle_sum(g: &WeightedGraph, others: &[EdgeId]) -> Result<SymFunc> {
    let mut total = SymFunc::zero(Basis::P, g.total_weight());
    for mask in 0..1u64 << others.len() {
        let subset: Vec<EdgeId> = (0..others.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| others[i])
            .collect();
        let term = csf_delcon(&g.delete_edges(&subset)?).value;
        total = if subset.len().is_multiple_of(2) {
            total.add(&term)?
        } else {
            total.sub(&term)?
        };
    }
    Ok(total)
}

/// `Σ_{S ⊆ C∖e} (-1)^{|S|} X(G∖S) = 0`.
pub fn verify_cycle_relation(
    g: &WeightedGraph,
    cycle: &[EdgeId],
    e: EdgeId,
) -> Result<VerificationReport> {
    if !is_cycle(g, cycle) {
        return Err(CsfError::NotACycle(format!("{cycle:?}")));
    }
    if !cycle.contains(&e) {
        return Err(CsfError::NotACycle(format!("{e} is not on {cycle:?}")));
    }
    x_or_report!(Check::Cycles, g);
    let others: Vec<EdgeId> = cycle.iter().copied().filter(|&f| f != e).collect();
    let total = cycle_sum(g, &others)?;
    let ids: Vec<usize> = cycle.iter().map(|c| c.0).collect();
    Ok(VerificationReport::compare(
        Check::Cycles,
        describe(g, json!({"cycle": ids, "edge": e.0})),
        total.is_zero(),
        || json!({"alternating_sum": total.to_json()}),
    ))
}

/// The cycle relation for every simple cycle and every choice of distinguished edge.
pub fn verify_all_cycles(g: &WeightedGraph) -> Result<VerificationReport> {
    x_or_report!(Check::Cycles, g);
    let cycles = simple_cycles(g);
    let mut pairs = 0;
    for cycle in &cycles {
        for &e in cycle {
            pairs += 1;
            let report = verify_cycle_relation(g, cycle, e)?;
            if !report.pass {
                return Ok(report);
            }
        }
    }
    Ok(VerificationReport::passed(
        Check::Cycles,
        describe(g, json!({"cycles": cycles.len(), "cycle_edge_pairs": pairs})),
    ))
}

/// Coefficients of `∏_v ((1+t)^{w(v)} - 1)` over the given weights.
fn sink_map_polynomial(weights: &[u32]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(1)];
    for &w in weights {
        let factor: Vec<BigInt> = (0..=w as u64)
            .map(|j| if j == 0 { BigInt::zero() } else { binomial(BigInt::from(w), BigInt::from(j)) })
            .collect();
        let mut next = vec![BigInt::zero(); acc.len() + factor.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, f) in factor.iter().enumerate() {
                next[i + j] += a * f;
            }
        }
        acc = next;
    }
    acc
}

/// `(-1)^{d-n} Σ_{(γ,S): swt = m} (-1)^{m - sink(γ)}` for every `m` (index `m`).
fn sink_sums(g: &WeightedGraph) -> Result<Vec<BigInt>> {
    let d = g.total_weight();
    let mut out = vec![BigInt::zero(); d + 1];
    for mask in acyclic_masks(g)? {
        let gamma = Orientation::from_mask(g, mask);
        let sinks = gamma.sinks(g);
        let weights: Vec<u32> = sinks.iter().map(|&v| g.weight(v).unwrap()).collect();
        for (m, c) in sink_map_polynomial(&weights).into_iter().enumerate() {
            if (m + sinks.len()).is_multiple_of(2) {
                out[m] += c;
            } else {
                out[m] -= c;
            }
        }
    }
    let sign = excess_sign(g);
    Ok(out.into_iter().map(|c| c * sign).collect())
}

/// Right-hand side of the sink theorem, counting sink maps by subset sizes.
pub fn sink_sum(g: &WeightedGraph, m: usize) -> Result<BigInt> {
    Ok(sink_sums(g)?.get(m).cloned().unwrap_or_default())
}

/// The same sum with every sink map materialized.
pub fn sink_sum_materialized(g: &WeightedGraph, m: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for mask in acyclic_masks(g)? {
        let gamma = Orientation::from_mask(g, mask);
        let sink = gamma.sinks(g).len();
        for s in SinkMap::enumerate(g, &gamma) {
            if s.swt() == m {
                total += if (m + sink).is_multiple_of(2) { 1 } else { -1 };
            }
        }
    }
    Ok(total * excess_sign(g))
}

pub fn verify_sink_theorem(g: &WeightedGraph, m: usize) -> Result<VerificationReport> {
    let d = g.total_weight();
    if m == 0 || m > d {
        return Err(CsfError::Unsupported(format!("m = {m} outside 1..={d}")));
    }
    let x = x_or_report!(Check::Sinks, g);
    let lhs = x.sigma(Some(m));
    let rhs = sink_sum(g, m)?;
    Ok(VerificationReport::compare(
        Check::Sinks,
        describe(g, json!({"m": m})),
        lhs == Rational::from_integer(rhs.clone()),
        || json!({"sigma_m": big(&lhs), "sink_sum": rhs.to_string()}),
    ))
}

/// Every `m`, the summed form, and (for small weight) the materialized sink-map count.
pub fn verify_sink_theorem_all(g: &WeightedGraph) -> Result<VerificationReport> {
    let x = x_or_report!(Check::Sinks, g);
    let d = g.total_weight();
    let sums = sink_sums(g)?;
    let instance = describe(g, json!({"m": format!("1..={d}")}));
    let sigma_m: Vec<Rational> = (0..=d).map(|m| x.sigma(Some(m))).collect();
    for m in 1..=d {
        if sigma_m[m] != Rational::from_integer(sums[m].clone()) {
            return Ok(VerificationReport::failed(
                Check::Sinks,
                instance,
                json!({"m": m, "sigma_m": big(&sigma_m[m]), "sink_sum": sums[m].to_string()}),
            ));
        }
    }
    let total: BigInt = sums.iter().sum();
    if x.sigma(None) != Rational::from_integer(total.clone()) {
        return Ok(VerificationReport::failed(
            Check::Sinks,
            instance,
            json!({"sigma": big(&x.sigma(None)), "sink_sum_total": total.to_string()}),
        ));
    }
    if g.total_weight() <= 8 {
        for (m, sum) in sums.iter().enumerate().skip(1) {
            let direct = sink_sum_materialized(g, m)?;
            if direct != *sum {
                return Ok(VerificationReport::failed(
                    Check::Sinks,
                    instance,
                    json!({"m": m, "by_sizes": sum.to_string(), "materialized": direct.to_string()}),
                ));
            }
        }
    }
    Ok(VerificationReport::passed(Check::Sinks, instance))
}

fn require_simple_unweighted(g: &WeightedGraph) -> Result<()> {
    if !g.is_unweighted() {
        return Err(CsfError::Unsupported("statement is for unweighted graphs".into()));
    }
    if !g.is_simple() {
        return Err(CsfError::NotSimple);
    }
    Ok(())
}

/// `a_m` for `m = 0..=n`.
fn sink_counts(g: &WeightedGraph) -> Result<Vec<BigInt>> {
    let mut a = vec![BigInt::zero(); g.n() + 1];
    for mask in acyclic_masks(g)? {
        a[Orientation::from_mask(g, mask).sinks(g).len()] += 1;
    }
    Ok(a)
}

/// `σ_m(X) = a_m` for every `m`, `σ(X) = a(G)`, and `a(G) = (-1)^n χ(-1)`.
pub fn verify_stanley_sinks(g: &WeightedGraph) -> Result<VerificationReport> {
    require_simple_unweighted(g)?;
    let x = x_or_report!(Check::Stanley, g);
    let n = g.n();
    let a = sink_counts(g)?;
    let total: BigInt = a.iter().sum();
    let sigma_m: Vec<Rational> = (0..=n).map(|m| x.sigma(Some(m))).collect();
    let chi = chromatic_value(g, -1);
    let from_chi = if n.is_multiple_of(2) { chi.clone() } else { -chi.clone() };
    let ok = (1..=n).all(|m| sigma_m[m] == Rational::from_integer(a[m].clone()))
        && x.sigma(None) == Rational::from_integer(total.clone())
        && from_chi == total;
    Ok(VerificationReport::compare(Check::Stanley, describe(g, json!({})), ok, || {
        json!({
            "a_m": a.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "sigma_m": sigma_m.iter().map(big).collect::<Vec<_>>(),
            "chi_at_minus_one": chi.to_string(),
        })
    }))
}

/// Coefficient of `s_(m,1^{n-m})` against `Σ_k C(k-1, m-1) a_k`.
pub fn verify_hook_coefficient(g: &WeightedGraph) -> Result<VerificationReport> {
    require_simple_unweighted(g)?;
    let x = x_or_report!(Check::Hook, g);
    let n = g.n();
    let s = x.convert(Basis::S);
    let a = sink_counts(g)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for m in 1..=n {
        let hook = Partition::hook(m as u32, n as u32)?;
        let got = s.coeff(&hook);
        let want: BigInt = (1..=n)
            .map(|k| binomial(BigInt::from(k - 1), BigInt::from(m - 1)) * &a[k])
            .sum();
        ok &= got == Rational::from_integer(want.clone());
        rows.push(json!({"m": m, "schur": big(&got), "sink_formula": want.to_string()}));
    }
    Ok(VerificationReport::compare(Check::Hook, describe(g, json!({})), ok, || {
        json!({"hooks": rows})
    }))
}

/// Sign pattern of `(-1)^{d-n} X` in the e-basis: a negative coefficient must
/// appear once some weight exceeds 1; if none appears, every refinement of
/// every connected-partition type must be a connected-partition type; and on
/// connected graphs the `e_(d)` coefficient of `X` has sign `(-1)^{d-n}`.
pub fn check_e_positivity(g: &WeightedGraph) -> Result<VerificationReport> {
    if g.has_loop() {
        return Err(CsfError::Unsupported(
            "graphs with loops have X = 0; the e-positivity statements need loop-free graphs".into(),
        ));
    }
    let x = x_or_report!(Check::EPositivity, g);
    let d = g.total_weight();
    let y = x.scale_int(excess_sign(g)).convert(Basis::E);
    let negatives: Vec<String> = y
        .terms()
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(l, c)| format!("{l}:{c}"))
        .collect();
    let e_positive = negatives.is_empty();
    let heavy = g.max_weight() > 1;
    let mut instance = describe(g, json!({"e_positive": e_positive, "negative_terms": negatives.clone()}));
    let mut notes = Vec::new();

    if heavy && e_positive {
        return Ok(VerificationReport::failed(
            Check::EPositivity,
            instance,
            json!({"reason": "weight above 1 but no negative e-coefficient", "signed_x_in_e": y.to_json()}),
        ));
    }
    if e_positive {
        let types = connected_partition_types(g);
        for lambda in &types {
            for mu in partitions_of(d) {
                if is_refinement(&mu, lambda)? && !types.contains(&mu) {
                    return Ok(VerificationReport::failed(
                        Check::EPositivity,
                        instance,
                        json!({"reason": "refinement of a connected type is not connected",
                               "type": lambda.parts(), "refinement": mu.parts()}),
                    ));
                }
            }
        }
    }
    if g.is_connected() && d > 0 {
        let top = y.coeff(&Partition::row(d as u32));
        instance["e_d_coefficient_of_x"] = big(&(&top * rat(excess_sign(g))));
        if !top.is_positive() {
            return Ok(VerificationReport::failed(
                Check::EPositivity,
                instance,
                json!({"reason": "e_(d) coefficient has the wrong sign", "signed_x_in_e": y.to_json()}),
            ));
        }
        if top != rat(1) {
            notes.push(E_TOP_NOTE.to_string());
        }
    }
    let mut report = VerificationReport::passed(Check::EPositivity, instance);
    report.notes = notes;
    Ok(report)
}

/// The two weighted paths with equal CSF, their non-isomorphism, and the
/// path = 5-cycle + 4-cycle decomposition from adding the closing edge.
pub fn verify_fig1_pair() -> Result<VerificationReport> {
    let a = families::path(&[1, 2, 1, 3, 2]);
    let b = families::path(&[1, 3, 2, 1, 2]);
    let xa = x_or_report!(Check::Fig1, &a);
    let xb = x_or_report!(Check::Fig1, &b);
    let keys_differ = canonical_key(&a, DEFAULT_MEMO_BOUND) != canonical_key(&b, DEFAULT_MEMO_BOUND);

    let c5 = families::cycle(&[1, 2, 1, 3, 2]);
    let c4 = families::cycle(&[3, 2, 1, 3]);
    let closed = a.add_edge(0, 4)?;
    let closing = closed.find_edge(0, 4)?;
    let contracted = closed.contract_edge(closing)?.graph;
    let minors_match = canonical_key(&closed, DEFAULT_MEMO_BOUND) == canonical_key(&c5, DEFAULT_MEMO_BOUND)
        && canonical_key(&contracted, DEFAULT_MEMO_BOUND) == canonical_key(&c4, DEFAULT_MEMO_BOUND);
    let x5 = x_or_report!(Check::Fig1, &c5);
    let x4 = x_or_report!(Check::Fig1, &c4);
    let sum = x5.add(&x4)?;
    let decomposition = xa == sum;

    let ok = xa == xb && keys_differ && minors_match && decomposition;
    Ok(VerificationReport::compare(
        Check::Fig1,
        json!({"path_a": [1, 2, 1, 3, 2], "path_b": [1, 3, 2, 1, 2],
               "cycle5": [1, 2, 1, 3, 2], "cycle4": [3, 2, 1, 3]}),
        ok,
        || {
            json!({
                "equal_csf": xa == xb,
                "keys_differ": keys_differ,
                "minors_match": minors_match,
                "decomposition": decomposition,
                "x_a": xa.to_json(),
                "x_b": xb.to_json(),
                "x_cycle5_plus_cycle4": sum.to_json(),
            })
        },
    ))
}

/// The flip relation for one orientation and edge in `k` variables.
pub fn verify_flip(
    g: &WeightedGraph,
    gamma: &Orientation,
    e: EdgeId,
    k: usize,
) -> Result<VerificationReport> {
    let rel = flip_relation(g, gamma, e, k)?;
    let arcs: Vec<[u32; 2]> = gamma.arcs().iter().map(|&(t, h)| [t, h]).collect();
    Ok(VerificationReport::compare(
        Check::Flip,
        describe(g, json!({"orientation": arcs, "edge": e.0, "k": k})),
        rel.holds(),
        || json!({"left": rel.left.to_json(), "right": rel.right.to_json()}),
    ))
}

/// The flip relation for every orientation and every edge, with `k = d`
/// unless given. Also confirms that `q = 1` recovers the truncated CSF.
pub(crate) fn verify_flip_all(g: &WeightedGraph, k: Option<usize>) -> Result<VerificationReport> {
    let x = x_or_report!(Check::Flip, g);
    let k = k.unwrap_or(g.total_weight()).max(1);
    let m = g.num_edges();
    let truncated = truncate(&x, k);
    let mut by_mask: Vec<QPolynomial> = Vec::with_capacity(1 << m);
    for mask in 0..1u64 << m {
        let q = quasi_csf(g, &Orientation::from_mask(g, mask), k)?;
        let at_one = q.at_q(1);
        let plain: BTreeMap<Vec<u32>, i64> = truncated
            .terms()
            .iter()
            .map(|(e, c)| (e.clone(), i64::try_from(c.to_integer()).expect("small coefficient")))
            .collect();
        if at_one != plain {
            return Ok(VerificationReport::failed(
                Check::Flip,
                describe(g, json!({"orientation_mask": mask, "k": k})),
                json!({"reason": "q = 1 does not recover X", "quasi": q.to_json(), "x": truncated.to_json()}),
            ));
        }
        by_mask.push(q);
    }
    let mut checked = 0;
    for e in g.edge_ids() {
        let deleted_graph = g.delete_edge(e)?;
        let mut minors: BTreeMap<u64, QPolynomial> = BTreeMap::new();
        for mask in 0..1u64 << m {
            let bit = 1u64 << e.0;
            let base = mask & !bit;
            let gamma = Orientation::from_mask(g, mask);
            if let std::collections::btree_map::Entry::Vacant(slot) = minors.entry(base) {
                let mut kept = gamma.arcs().to_vec();
                kept.remove(e.0);
                let deleted = quasi_csf(&deleted_graph, &Orientation::new(&deleted_graph, kept)?, k)?;
                let (c, cg) = contract_orientation(g, &gamma, e)?;
                let contracted = quasi_csf(&c.graph, &cg, k)?;
                slot.insert(deleted.sub(&contracted)?.times_one_plus_q());
            }
            let left = by_mask[mask as usize].add(&by_mask[(mask ^ bit) as usize])?;
            let right = &minors[&base];
            checked += 1;
            if &left != right {
                let arcs: Vec<[u32; 2]> = gamma.arcs().iter().map(|&(t, h)| [t, h]).collect();
                return Ok(VerificationReport::failed(
                    Check::Flip,
                    describe(g, json!({"orientation": arcs, "edge": e.0, "k": k})),
                    json!({"left": left.to_json(), "right": right.to_json()}),
                ));
            }
        }
    }
    Ok(VerificationReport::passed(
        Check::Flip,
        describe(g, json!({"k": k, "orientation_edge_pairs": checked})),
    ))
}

/// `X(K^λ) = ∏ r_i! m_λ`, `X(complement of K^λ) = p_λ`, and for unit cliques
/// of sizes `λ`, `X = ∏ λ_i! e_λ`, for every `λ` with `1 ≤ |λ| ≤ max_size`.
pub fn verify_closed_forms(max_size: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 1..=max_size {
        for lambda in partitions_of(d) {
            let parts: Vec<u32> = lambda.parts().to_vec();

            let clique = families::clique_of(&lambda);
            let x = match crosschecked(Check::ClosedForms, &clique) {
                Ok(x) => x.convert(Basis::M),
                Err(r) => {
                    out.push(r);
                    continue;
                }
            };
            let c = Rational::from_integer(lambda.multiplicity_factorial().into());
            let want = SymFunc::basis_element(Basis::M, lambda.clone()).scale(&c);
            out.push(VerificationReport::compare(
                Check::ClosedForms,
                json!({"family": "weighted clique", "lambda": parts}),
                x == want,
                || json!({"computed_m": x.to_json(), "expected_m": want.to_json()}),
            ));

            let anti = families::anticlique_of(&lambda);
            let want = SymFunc::basis_element(Basis::P, lambda.clone());
            match crosschecked(Check::ClosedForms, &anti) {
                Ok(x) => out.push(VerificationReport::compare(
                    Check::ClosedForms,
                    json!({"family": "weighted anticlique", "lambda": parts}),
                    x == want,
                    || json!({"computed_p": x.to_json(), "expected_p": want.to_json()}),
                )),
                Err(r) => out.push(r),
            }

            let sizes: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
            let cliques = families::disjoint_cliques(&sizes);
            let scale: BigInt = sizes
                .iter()
                .map(|&k| (1..=k as u64).map(BigInt::from).product::<BigInt>())
                .product();
            let want = SymFunc::basis_element(Basis::E, lambda.clone()).scale(&Rational::from_integer(scale));
            match crosschecked(Check::ClosedForms, &cliques) {
                Ok(x) => {
                    let x = x.convert(Basis::E);
                    out.push(VerificationReport::compare(
                        Check::ClosedForms,
                        json!({"family": "disjoint unit cliques", "sizes": parts}),
                        x == want,
                        || json!({"computed_e": x.to_json(), "expected_e": want.to_json()}),
                    ))
                }
                Err(r) => out.push(r),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_reports_pass() {
        let tri = families::complete(&[1, 1, 1]);
        let path = families::path(&[1, 1, 1]);
        let edge = families::path(&[2, 1]);
        for g in [&tri, &path, &edge] {
            assert!(verify_engines(g).unwrap().pass);
            assert!(verify_involution(g).unwrap().pass);
            assert!(verify_p_positivity(g).unwrap().pass);
            assert!(verify_all_cycles(g).unwrap().pass);
            assert!(verify_sink_theorem_all(g).unwrap().pass);
            assert!(check_e_positivity(g).unwrap().pass);
            assert!(verify_flip_all(g, None).unwrap().pass);
        }
        for g in [&tri, &path] {
            assert!(verify_stanley_sinks(g).unwrap().pass);
            assert!(verify_hook_coefficient(g).unwrap().pass);
        }
        assert!(verify_stanley_sinks(&edge).is_err());
    }

    #[test]
    fn sink_examples() {
        let tri = families::complete(&[1, 1, 1]);
        assert_eq!(sink_sum(&tri, 1).unwrap(), BigInt::from(6));
        assert_eq!(sink_sum(&tri, 2).unwrap(), BigInt::zero());
        // edgeless with weights (2,1): σ_m(p_2 p_1)
        let g = families::edgeless(&[2, 1]);
        let x = SymFunc::basis_element(Basis::P, g.weight_partition());
        for m in 1..=3 {
            assert_eq!(Rational::from_integer(sink_sum(&g, m).unwrap()), x.sigma(Some(m)));
            assert_eq!(sink_sum(&g, m).unwrap(), sink_sum_materialized(&g, m).unwrap());
        }
        assert!(verify_sink_theorem(&tri, 0).is_err());
        assert!(verify_sink_theorem(&tri, 1).unwrap().pass);
    }

    #[test]
    fn e_positivity_details() {
        let edge = families::path(&[2, 1]);
        let r = check_e_positivity(&edge).unwrap();
        assert!(r.pass);
        assert_eq!(r.instance["e_positive"], false);
        assert_eq!(r.instance["e_d_coefficient_of_x"], "-3");
        assert_eq!(r.notes, vec![E_TOP_NOTE.to_string()]);
        let k4 = families::complete(&[1; 4]);
        let r = check_e_positivity(&k4).unwrap();
        assert!(r.pass);
        assert_eq!(r.instance["e_positive"], true);
        let looped = WeightedGraph::unweighted(2, &[(0, 0)]).unwrap();
        assert!(check_e_positivity(&looped).is_err());
    }

    #[test]
    fn cycle_relation_preconditions() {
        let tri = families::complete(&[1, 1, 1]);
        let all: Vec<EdgeId> = tri.edge_ids().collect();
        assert!(verify_cycle_relation(&tri, &all, EdgeId(1)).unwrap().pass);
        assert!(verify_cycle_relation(&tri, &all[..2], EdgeId(0)).is_err());
        let looped = WeightedGraph::unweighted(1, &[(0, 0)]).unwrap();
        assert!(verify_cycle_relation(&looped, &[EdgeId(0)], EdgeId(0)).unwrap().pass);
    }

    #[test]
    fn fig1_and_closed_forms() {
        assert!(verify_fig1_pair().unwrap().pass);
        assert!(verify_closed_forms(4).unwrap().iter().all(|r| r.pass));
    }

    #[test]
    fn failures_carry_witnesses() {
        let r = VerificationReport::compare(Check::Hook, json!({}), false, || json!({"x": 1}));
        assert!(!r.pass && r.witness.is_some());
        assert_eq!(r.to_json()["check"], "hook");
    }
}
