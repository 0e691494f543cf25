//! Simplicial vertices, perfect elimination orderings, property (∗) and the
//! Cohen-Macaulay test for the Alexander dual.
//!
//! An ordering `(v_1, ..., v_n)` is a perfect elimination ordering when each
//! `v_i` is simplicial in the subgraph induced by `v_1, ..., v_i`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VoGraph};
use crate::polarize::g_superscript_d;
use crate::vset::VertexSet;

/// Largest graph for which every elimination ordering is enumerated.
pub const MAX_PEO_SEARCH: usize = 8;

fn is_clique(g: &SimpleGraph, s: VertexSet) -> bool {
    s.iter().all(|u| s.without(u).is_subset(g.neighbors(u)))
}

/// Closed neighbourhood of `v` within `within` induces a complete graph.
fn simplicial_in(g: &SimpleGraph, v: usize, within: VertexSet) -> bool {
    is_clique(g, g.neighbors(v).intersection(within))
}

pub fn is_simplicial(g: &SimpleGraph, v: usize) -> bool {
    simplicial_in(g, v, VertexSet::full(g.n()))
}

pub fn is_simplicial_label(g: &SimpleGraph, label: &str) -> Result<bool> {
    let v = g.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_owned()))?;
    Ok(is_simplicial(g, v))
}

/// A perfect elimination ordering, or `None` if the graph is not chordal.
pub fn find_peo(g: &SimpleGraph) -> Option<Vec<usize>> {
    let mut remaining = VertexSet::full(g.n());
    let mut removed = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let v = remaining.iter().find(|&v| simplicial_in(g, v, remaining))?;
        removed.push(v);
        remaining.remove(v);
    }
    removed.reverse();
    Some(removed)
}

pub fn is_chordal(g: &SimpleGraph) -> bool {
    find_peo(g).is_some()
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    let seen: VertexSet = order.iter().copied().filter(|&v| v < n).collect();
    if order.len() != n || seen.len() != n {
        return Err(Error::NotAPermutation);
    }
    Ok(())
}

pub fn verify_peo(g: &SimpleGraph, order: &[usize]) -> Result<bool> {
    check_permutation(g.n(), order)?;
    let mut before = VertexSet::empty();
    for &v in order {
        if !simplicial_in(g, v, before) {
            return Ok(false);
        }
        before.insert(v);
    }
    Ok(true)
}

/// Resolves labels to indices; unknown or repeated labels are not a
/// permutation.
pub fn ordering_from_labels<S: AsRef<str>>(g: &SimpleGraph, labels: &[S]) -> Result<Vec<usize>> {
    let order = labels
        .iter()
        .map(|l| g.index_of(l.as_ref()).ok_or(Error::NotAPermutation))
        .collect::<Result<Vec<_>>>()?;
    check_permutation(g.n(), &order)?;
    Ok(order)
}

/// Calls `visit` on perfect elimination orderings until it returns true.
/// Returns the accepted ordering.
pub fn find_peo_where<F>(g: &SimpleGraph, visit: F) -> Result<Option<Vec<usize>>>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let n = g.n();
    if n > MAX_PEO_SEARCH {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the ordering search limit {MAX_PEO_SEARCH}")));
    }
    // build orderings from the back: the last vertex is simplicial in what remains
    fn rec<F: Fn(&[usize]) -> bool>(g: &SimpleGraph, remaining: VertexSet, tail: &mut Vec<usize>, visit: &F) -> Option<Vec<usize>> {
        if remaining.is_empty() {
            let order: Vec<usize> = tail.iter().rev().copied().collect();
            return visit(&order).then_some(order);
        }
        for v in remaining.iter().filter(|&v| simplicial_in(g, v, remaining)) {
            tail.push(v);
            if let Some(o) = rec(g, remaining.without(v), tail, visit) {
                return Some(o);
            }
            tail.pop();
        }
        None
    }
    let all = VertexSet::full(n);
    if n == 0 {
        return Ok(visit(&[]).then(Vec::new));
    }
    let firsts: Vec<usize> = all.iter().filter(|&v| simplicial_in(g, v, all)).collect();
    Ok(firsts
        .par_iter()
        .map(|&v| rec(g, all.without(v), &mut vec![v], &visit))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next())
}

/// Property (∗) of `g` relative to an ordering of the complement of its
/// underlying graph.
pub fn property_star(g: &VoGraph, order: &[usize]) -> Result<bool> {
    let gbar = g.underlying().complement();
    if !verify_peo(&gbar, order)? {
        return Err(Error::InvalidPeo);
    }
    Ok(star_holds(g, order))
}

fn star_holds(g: &VoGraph, order: &[usize]) -> bool {
    let qualifying: Vec<usize> = (0..g.n())
        .filter(|&k| !g.is_sink(k) && g.weight(k) != 1)
        .collect();
    for (pi, &i) in order.iter().enumerate() {
        for &j in &order[..pi] {
            if g.adjacent(i, j) {
                continue;
            }
            for &k in &qualifying {
                if !g.has_arc(k, i) && g.has_arc(k, j) {
                    return false;
                }
            }
        }
    }
    true
}

/// Some perfect elimination ordering of the complement satisfies (∗).
pub fn property_star_exists(g: &VoGraph) -> Result<Option<Vec<usize>>> {
    let gbar = g.underlying().complement();
    find_peo_where(&gbar, |o| star_holds(g, o))
}

/// `I(D_G)^∨` is Cohen-Macaulay iff the complement of `G^D` is chordal.
pub fn dual_is_cm(g: &VoGraph) -> Result<bool> {
    Ok(is_chordal(&g_superscript_d(g)?.complement()))
}
