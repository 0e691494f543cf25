//! Polarization of monomial ideals and the copy-vertex graph `G^D`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VoGraph};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::vset::MAX_VERTICES;

/// Label of copy `j` of variable `base`, e.g. `x1_2`.
pub fn copy_label(base: &str, j: u32) -> String {
    format!("{base}_{j}")
}

/// Variables `x_{i,1..r_i}`, blocked by base variable then copy index.
pub fn polarized_vars(vars: &[String], counts: &[u32]) -> Vec<String> {
    vars.iter()
        .zip(counts)
        .flat_map(|(v, &r)| (1..=r).map(move |j| copy_label(v, j)))
        .collect()
}

/// Replaces each `x_i^{a_i}` by `x_{i,1} ⋯ x_{i,a_i}`, with copy counts
/// taken from the lcm exponent.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let r = ideal.lcm_exponent()?;
    let vars = polarized_vars(ideal.vars(), &r);
    if vars.len() > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{} polarized variables", vars.len())));
    }
    let offsets: Vec<usize> = r
        .iter()
        .scan(0usize, |acc, &ri| {
            let o = *acc;
            *acc += ri as usize;
            Some(o)
        })
        .collect();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0; vars.len()];
            for (i, &ai) in g.exps().iter().enumerate() {
                for j in 0..ai as usize {
                    e[offsets[i] + j] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// Whether substituting `x_{i,j} -> x_i` into `p` recovers `ideal`.
pub fn depolarize_check(ideal: &MonomialIdeal, p: &MonomialIdeal) -> Result<bool> {
    let index: HashMap<&str, usize> = ideal.vars().iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut base_of = Vec::with_capacity(p.nvars());
    for label in p.vars() {
        let base = label
            .rsplit_once('_')
            .filter(|(_, j)| j.parse::<u32>().is_ok_and(|j| j >= 1))
            .and_then(|(b, _)| index.get(b).copied())
            .ok_or_else(|| Error::VariableMismatch(label.clone()))?;
        base_of.push(base);
    }
    let gens = p
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; ideal.nvars()];
            for (k, &x) in g.exps().iter().enumerate() {
                e[base_of[k]] += x;
            }
            Monomial::new(e)
        })
        .collect();
    Ok(MonomialIdeal::new(ideal.vars().to_vec(), gens)? == *ideal)
}

/// The graph on `x_{i,1}` for every vertex plus `x_{k,2..w(k)}` for each
/// non-sink `x_k` of weight other than 1, with edges `{x_{i,l}, x_{j,1}}`
/// for every arc `(x_i, x_j)` and `l <= w(i)`.
pub fn g_superscript_d(g: &VoGraph) -> Result<SimpleGraph> {
    if let Some(i) = g.first_isolated() {
        return Err(Error::IsolatedVertex(g.label(i).to_owned()));
    }
    let mut labels = Vec::new();
    let mut first_copy = Vec::with_capacity(g.n());
    for i in 0..g.n() {
        first_copy.push(labels.len());
        let copies = if !g.is_sink(i) && g.weight(i) != 1 { g.weight(i) } else { 1 };
        labels.extend((1..=copies).map(|j| copy_label(g.label(i), j)));
    }
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(labels.len(), MAX_VERTICES));
    }
    let mut edges = Vec::new();
    for &(i, j) in g.arcs() {
        for l in 0..g.weight(i) as usize {
            edges.push((first_copy[i] + l, first_copy[j]));
        }
    }
    Ok(SimpleGraph::from_edges(labels, &edges))
}

/// Square-free edge ideal of a simple graph.
pub fn simple_edge_ideal(h: &SimpleGraph) -> MonomialIdeal {
    let n = h.n();
    let gens = h
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let mut e = vec![0; n];
            e[u] = 1;
            e[v] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(h.labels().to_vec(), gens).expect("generators match the vertex list")
}
