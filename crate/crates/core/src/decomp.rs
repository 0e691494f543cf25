//! Irredundant irreducible decomposition of `I(D_G)` indexed by strong
//! covers, and a brute-force associated-primes oracle based on colon ideals.

use rayon::prelude::*;

use crate::covers::{partition, strong_covers};
use crate::error::{Error, Result};
use crate::graph::VoGraph;
use crate::ideal::{edge_ideal, intersect_all, Monomial, MonomialIdeal};
use crate::vset::{sort_canonical, VertexSet};

/// Variable cap for [`ass_oracle`].
pub const ORACLE_MAX_VARS: usize = 16;
/// Per-coordinate exponent cap for [`ass_oracle`].
pub const ORACLE_MAX_EXPONENT: u32 = 8;
/// Cap on the number of witness monomials [`ass_oracle`] may scan.
pub const ORACLE_MAX_WITNESSES: u64 = 1 << 22;

/// One irreducible component `m^b` together with the cover it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub cover: VertexSet,
    pub b: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub vars: Vec<String>,
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn ideals(&self) -> Vec<MonomialIdeal> {
        self.components
            .iter()
            .map(|c| MonomialIdeal::irreducible(self.vars.clone(), &c.b).expect("component length matches"))
            .collect()
    }

    /// The intersection of all components; the zero ideal when there are none.
    pub fn intersection(&self) -> MonomialIdeal {
        let ideals = self.ideals();
        if ideals.is_empty() {
            return MonomialIdeal::zero(self.vars.clone());
        }
        intersect_all(&ideals).expect("components share variables")
    }
}

/// `b_i = 1` on the out part, `w(i)` on the full and in parts, 0 elsewhere.
pub fn irreducible_component(g: &VoGraph, c: VertexSet) -> Result<Vec<u32>> {
    let p = partition(g, c)?;
    if !crate::covers::is_strong(g, c)? {
        return Err(Error::NotStrong);
    }
    Ok((0..g.n())
        .map(|i| {
            if p.out_part.contains(i) {
                1
            } else if p.cover.contains(i) {
                g.weight(i)
            } else {
                0
            }
        })
        .collect())
}

/// One component per strong cover; the intersection is checked against the
/// edge ideal before returning.
pub fn primary_decomposition(g: &VoGraph) -> Result<Decomposition> {
    let vars = g.labels().to_vec();
    if g.arcs().is_empty() {
        return Ok(Decomposition { vars, components: Vec::new() });
    }
    let components = strong_covers(g)?
        .into_par_iter()
        .map(|cover| irreducible_component(g, cover).map(|b| Component { cover, b }))
        .collect::<Result<Vec<_>>>()?;
    let d = Decomposition { vars, components };
    let ideal = edge_ideal(g);
    if d.intersection() != ideal {
        return Err(Error::InternalInconsistency(format!(
            "intersection of strong-cover components differs from {ideal}"
        )));
    }
    Ok(d)
}

/// Supports of the associated primes, read off the strong covers.
pub fn associated_primes(g: &VoGraph) -> Result<Vec<VertexSet>> {
    strong_covers(g)
}

/// Associated primes of a monomial ideal by exhaustive colon search.
///
/// Collects every support `S` such that `(I : m) = <x_i : i in S>` for some
/// monomial `m` dividing the lcm of the generators.
pub fn ass_oracle(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>> {
    let a = ideal.lcm_exponent()?;
    let n = ideal.nvars();
    if n > ORACLE_MAX_VARS {
        return Err(Error::TooLarge(format!("{n} variables exceeds {ORACLE_MAX_VARS}")));
    }
    if let Some(&e) = a.iter().find(|&&e| e > ORACLE_MAX_EXPONENT) {
        return Err(Error::TooLarge(format!("exponent {e} exceeds {ORACLE_MAX_EXPONENT}")));
    }
    let total: u64 = a.iter().map(|&e| e as u64 + 1).product();
    if total > ORACLE_MAX_WITNESSES {
        return Err(Error::TooLarge(format!("{total} witness monomials")));
    }
    let mut found: Vec<VertexSet> = (0..total)
        .into_par_iter()
        .filter_map(|k| {
            let m = mixed_radix(k, &a);
            let q = ideal.colon(&m).expect("same ambient");
            prime_support(&q)
        })
        .collect();
    sort_canonical(&mut found);
    Ok(found)
}

fn mixed_radix(mut k: u64, a: &[u32]) -> Monomial {
    let mut e = Vec::with_capacity(a.len());
    for &ai in a {
        let base = ai as u64 + 1;
        e.push((k % base) as u32);
        k /= base;
    }
    Monomial::new(e)
}

/// `Some(S)` when the ideal is generated by the variables indexed by `S`.
fn prime_support(q: &MonomialIdeal) -> Option<VertexSet> {
    if q.is_zero() || q.is_unit() {
        return None;
    }
    let mut s = VertexSet::empty();
    for g in q.gens() {
        if g.degree() != 1 {
            return None;
        }
        s = s.union(g.support());
    }
    Some(s)
}
