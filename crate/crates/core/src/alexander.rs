//! Generalized Alexander duality with respect to a vector `a ⪰ a_I`.
//!
//! Three routes are provided and cross-checked in the tests: the
//! intersection over generators, the generator list read off the
//! irreducible components, and for edge ideals the intersection of
//! `<x_i^{w(i)}, x_j>` over arcs.

use rayon::prelude::*;

use crate::decomp::primary_decomposition;
use crate::error::{Error, Result};
use crate::graph::VoGraph;
use crate::ideal::{Monomial, MonomialIdeal};

/// `b^a`: `a_i + 1 - b_i` where `b_i >= 1`, and 0 elsewhere.
pub fn dual_vector(b: &[u32], a: &[u32]) -> Result<Vec<u32>> {
    if b.len() != a.len() || b.iter().zip(a).any(|(bi, ai)| bi > ai) {
        return Err(Error::OutOfBox(b.to_vec()));
    }
    Ok(b.iter()
        .zip(a)
        .map(|(&bi, &ai)| if bi >= 1 { ai + 1 - bi } else { 0 })
        .collect())
}

fn resolve_a(ideal: &MonomialIdeal, a: Option<&[u32]>) -> Result<Vec<u32>> {
    let a_i = ideal.lcm_exponent()?;
    match a {
        None => Ok(a_i),
        Some(a) => {
            if a.len() != a_i.len() {
                return Err(Error::AmbientMismatch);
            }
            if a.iter().zip(&a_i).any(|(x, y)| x < y) {
                return Err(Error::VectorTooSmall(a_i));
            }
            if a.contains(&u32::MAX) {
                return Err(Error::ExponentOverflow);
            }
            Ok(a.to_vec())
        }
    }
}

/// Intersection of a nonempty family, reduced pairwise in parallel.
pub fn par_intersect(ideals: Vec<MonomialIdeal>) -> Result<MonomialIdeal> {
    let vars = ideals.first().ok_or(Error::ZeroIdeal)?.vars().to_vec();
    if ideals.iter().any(|i| i.vars() != vars.as_slice()) {
        return Err(Error::AmbientMismatch);
    }
    Ok(ideals
        .into_par_iter()
        .reduce_with(|x, y| x.intersect(&y).expect("checked ambient"))
        .expect("nonempty"))
}

/// `I^a = ∩ m^{b^a}` over the minimal generators `x^b` of `I`.
/// `a` defaults to the lcm exponent.
pub fn alexander_dual(ideal: &MonomialIdeal, a: Option<&[u32]>) -> Result<MonomialIdeal> {
    let a = resolve_a(ideal, a)?;
    let vars = ideal.vars().to_vec();
    let comps = ideal
        .gens()
        .iter()
        .map(|g| {
            let b = dual_vector(g.exps(), &a)?;
            MonomialIdeal::irreducible(vars.clone(), &b)
        })
        .collect::<Result<Vec<_>>>()?;
    if comps.iter().any(|c| c.is_zero()) {
        return Err(Error::ZeroIdeal);
    }
    par_intersect(comps)
}

/// `I^a = <x^{b^a} : m^b in Irr(I)>` for a given list of irreducible
/// components.
pub fn dual_from_components(ideal: &MonomialIdeal, a: Option<&[u32]>, irr: &[Vec<u32>]) -> Result<MonomialIdeal> {
    let a = resolve_a(ideal, a)?;
    let gens = irr
        .iter()
        .map(|b| dual_vector(b, &a).map(Monomial::new))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.vars().to_vec(), gens)
}

/// Irredundant irreducible components of any nonzero monomial ideal.
///
/// Splits on a mixed generator `x_i^e m'` via
/// `I = (I + <x_i^e>) ∩ (I + <m'>)` until every piece is irreducible, then
/// keeps the components that contain no other.
pub fn irreducible_components(ideal: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut leaves = Vec::new();
    split(ideal, &mut leaves);
    leaves.sort();
    leaves.dedup();
    let minimal: Vec<Vec<u32>> = leaves
        .iter()
        .filter(|b| !leaves.iter().any(|c| c != *b && irreducible_contains(b, c)))
        .cloned()
        .collect();
    Ok(minimal)
}

fn split(ideal: &MonomialIdeal, out: &mut Vec<Vec<u32>>) {
    if ideal.is_unit() {
        return;
    }
    let n = ideal.nvars();
    let Some(g) = ideal.gens().iter().find(|g| g.support().len() > 1) else {
        let mut b = vec![0; n];
        for g in ideal.gens() {
            let i = g.support().first().expect("non-unit generator");
            b[i] = g.exps()[i];
        }
        out.push(b);
        return;
    };
    let i = g.support().first().expect("mixed generator");
    let pure = Monomial::var_power(n, i, g.exps()[i]);
    let rest = g.quotient_by(&pure);
    for extra in [pure, rest] {
        let bigger = MonomialIdeal::new(ideal.vars().to_vec(), vec![extra]).expect("same ambient");
        split(&ideal.sum(&bigger).expect("same ambient"), out);
    }
}

/// Whether `m^b ⊇ m^c`.
fn irreducible_contains(b: &[u32], c: &[u32]) -> bool {
    b.iter().zip(c).all(|(&bi, &ci)| ci == 0 || (bi >= 1 && bi <= ci))
}

/// The dual of `I(D_G)` computed from the strong-cover components.
pub fn dual_via_decomposition(g: &VoGraph, a: Option<&[u32]>) -> Result<MonomialIdeal> {
    let ideal = crate::ideal::edge_ideal(g);
    let d = primary_decomposition(g)?;
    let irr: Vec<Vec<u32>> = d.components.into_iter().map(|c| c.b).collect();
    dual_from_components(&ideal, a, &irr)
}

/// `∩ <x_i^{w(i)}, x_j>` over the arcs `(x_i, x_j)`.
pub fn dual_edge_intersection(g: &VoGraph) -> Result<MonomialIdeal> {
    if let Some(i) = g.first_isolated() {
        return Err(Error::IsolatedVertex(g.label(i).to_owned()));
    }
    let vars = g.labels().to_vec();
    let n = g.n();
    let pieces = g
        .arcs()
        .iter()
        .map(|&(i, j)| {
            let mut b = vec![0; n];
            b[i] = g.weight(i);
            b[j] = 1;
            MonomialIdeal::irreducible(vars.clone(), &b)
        })
        .collect::<Result<Vec<_>>>()?;
    par_intersect(pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::minimal_vertex_covers;
    use crate::ideal::{edge_ideal, intersect_all};
    use crate::samples::{e1, ex6};

    fn sorted(i: &MonomialIdeal) -> Vec<String> {
        let mut v = i.render_gens();
        v.sort();
        v
    }

    fn ex6_dual_strings() -> Vec<String> {
        let mut v: Vec<String> = [
            "x2^3*x5^3*x6",
            "x1^2*x4*x6",
            "x1*x2^3*x6",
            "x1^2*x3*x4^4*x5",
            "x2*x4*x5^3*x6",
            "x1*x2*x4*x6",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        v.sort();
        v
    }

    #[test]
    fn dual_vector_examples() {
        assert_eq!(dual_vector(&[0, 1, 0, 0, 1, 1], &[2, 3, 2, 4, 3, 1]).unwrap(), vec![0, 3, 0, 0, 3, 1]);
        assert_eq!(dual_vector(&[1, 3], &[1, 3]).unwrap(), vec![1, 1]);
        assert_eq!(dual_vector(&[2], &[1]).unwrap_err(), Error::OutOfBox(vec![2]));
    }

    #[test]
    fn ex6_dual_all_routes() {
        let g = ex6();
        let i = edge_ideal(&g);
        let d = alexander_dual(&i, None).unwrap();
        assert_eq!(sorted(&d), ex6_dual_strings());
        assert_eq!(dual_via_decomposition(&g, None).unwrap(), d);
        assert_eq!(dual_edge_intersection(&g).unwrap(), d);
        let irr = irreducible_components(&i).unwrap();
        assert_eq!(dual_from_components(&i, None, &irr).unwrap(), d);
    }

    #[test]
    fn ex6_dual_equals_seven_fold_intersection() {
        let v: Vec<String> = (1..=6).map(|i| format!("x{i}")).collect();
        let pairs = [
            [2, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 3, 0],
            [2, 0, 0, 0, 0, 1],
            [0, 3, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 1],
            [0, 0, 0, 4, 0, 1],
            [0, 0, 0, 0, 1, 1],
        ];
        let ideals: Vec<MonomialIdeal> = pairs.iter().map(|b| MonomialIdeal::irreducible(v.clone(), b).unwrap()).collect();
        assert_eq!(sorted(&intersect_all(&ideals).unwrap()), ex6_dual_strings());
    }

    #[test]
    fn single_generator_dual() {
        let d = alexander_dual(&edge_ideal(&e1()), None).unwrap();
        assert_eq!(d.to_string(), "⟨x1, x2⟩");
        assert_eq!(dual_edge_intersection(&e1()).unwrap(), d);
    }

    #[test]
    fn squarefree_dual_is_cover_ideal() {
        let g = ex6().unweighted();
        let d = alexander_dual(&edge_ideal(&g), None).unwrap();
        let mut supports: Vec<_> = d.gens().iter().map(|m| m.support()).collect();
        crate::vset::sort_canonical(&mut supports);
        assert_eq!(supports, minimal_vertex_covers(&g.underlying()).unwrap());
        assert!(d.is_squarefree());
    }

    #[test]
    fn double_dual_with_larger_a() {
        let i = edge_ideal(&ex6());
        let a = [3, 3, 4, 4, 3, 2];
        let d = alexander_dual(&i, Some(&a)).unwrap();
        assert_eq!(alexander_dual(&d, Some(&a)).unwrap(), i);
        assert!(matches!(alexander_dual(&i, Some(&[1, 1, 1, 1, 1, 1])), Err(Error::VectorTooSmall(_))));
    }

    #[test]
    fn errors() {
        let z = MonomialIdeal::zero(vec!["x".into()]);
        assert_eq!(alexander_dual(&z, None).unwrap_err(), Error::ZeroIdeal);
        let iso = VoGraph::new(&[("x1", 1), ("x2", 2), ("x3", 1)], &[("x1", "x2")]).unwrap();
        assert_eq!(dual_edge_intersection(&iso).unwrap_err(), Error::IsolatedVertex("x3".into()));
    }

    #[test]
    fn splitting_matches_strong_cover_components() {
        let g = ex6();
        let mut via_split = irreducible_components(&edge_ideal(&g)).unwrap();
        let mut via_covers: Vec<Vec<u32>> =
            primary_decomposition(&g).unwrap().components.into_iter().map(|c| c.b).collect();
        via_split.sort();
        via_covers.sort();
        assert_eq!(via_split, via_covers);
    }
}
