//! Monomials as exponent vectors and monomial ideals as minimal generating
//! sets over a fixed list of variables.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VoGraph;
use crate::vset::VertexSet;

/// `x^a` for an exponent vector `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// The empty monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_i^e` in `n` variables.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices with positive exponent.
    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / gcd(self, m)`.
    pub fn quotient_by(&self, m: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&m.0).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    /// Renders as `x1*x2^3`, or `1`.
    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_owned()
        } else {
            parts.join("*")
        }
    }
}

/// A monomial ideal, stored as its unique minimal generating set.
///
/// Generators are kept in a canonical order, so derived equality is ideal
/// equality over the same variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != vars.len()) {
            return Err(Error::AmbientMismatch);
        }
        Ok(MonomialIdeal { gens: minimalize(gens), vars })
    }

    pub fn zero(vars: Vec<String>) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Vec<String>) -> Self {
        let one = Monomial::one(vars.len());
        MonomialIdeal { vars, gens: vec![one] }
    }

    /// `m^b = <x_i^{b_i} : b_i >= 1>`.
    pub fn irreducible(vars: Vec<String>, b: &[u32]) -> Result<Self> {
        if b.len() != vars.len() {
            return Err(Error::AmbientMismatch);
        }
        let n = vars.len();
        let gens = b
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| Monomial::var_power(n, i, e))
            .collect();
        Self::new(vars, gens)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Whether every generator is a pure power of a variable.
    pub fn is_irreducible(&self) -> bool {
        self.gens.iter().all(|g| g.support().len() == 1)
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal { vars: self.vars.clone(), gens: minimalize(gens) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { vars: self.vars.clone(), gens: minimalize(gens) })
    }

    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars() {
            return Err(Error::AmbientMismatch);
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Ok(MonomialIdeal { vars: self.vars.clone(), gens: minimalize(gens) })
    }

    /// Coordinatewise maximum of the generator exponents.
    pub fn lcm_exponent(&self) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut a = vec![0; self.nvars()];
        for g in &self.gens {
            for (ai, &e) in a.iter_mut().zip(g.exps()) {
                *ai = (*ai).max(e);
            }
        }
        Ok(a)
    }

    /// Same generators over a renamed variable list of equal length.
    pub fn with_vars(&self, vars: Vec<String>) -> Result<MonomialIdeal> {
        if vars.len() != self.nvars() {
            return Err(Error::AmbientMismatch);
        }
        Ok(MonomialIdeal { vars, gens: self.gens.clone() })
    }

    pub fn render_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(&self.vars)).collect()
    }

    /// Generators as sorted `(variable, exponent)` lists, independent of
    /// variable order.
    pub fn label_terms(&self) -> BTreeSet<Vec<(String, u32)>> {
        self.gens
            .iter()
            .map(|g| {
                let mut t: Vec<(String, u32)> = g
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars[i].clone(), e))
                    .collect();
                t.sort();
                t
            })
            .collect()
    }

    pub fn exponent_arrays(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.exps().to_vec()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "⟨0⟩");
        }
        write!(f, "⟨{}⟩", self.render_gens().join(", "))
    }
}

/// Drops every generator divisible by another and sorts the rest canonically.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// Intersection of a nonempty family over a common variable list.
pub fn intersect_all<'a, I>(ideals: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = &'a MonomialIdeal>,
{
    let mut it = ideals.into_iter();
    let first = it.next().ok_or(Error::ZeroIdeal)?.clone();
    it.try_fold(first, |acc, j| acc.intersect(j))
}

/// `I(D_G) = <x_i x_j^{w(j)} : (x_i, x_j) an arc>`.
pub fn edge_ideal(g: &VoGraph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .arcs()
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = g.weight(j);
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(g.labels().to_vec(), gens).expect("generators match the vertex list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{e1, ex6};

    fn vars(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars(n), gens.iter().map(|e| m(e)).collect()).unwrap()
    }

    #[test]
    fn ex6_edge_ideal_generators() {
        let i = edge_ideal(&ex6());
        let mut got = i.render_gens();
        got.sort();
        let mut want: Vec<String> = ["x1*x2^3", "x1^2*x5", "x1*x6", "x2*x4^4", "x3^2*x6", "x4*x6", "x5^3*x6"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(i.lcm_exponent().unwrap(), vec![2, 3, 2, 4, 3, 1]);
    }

    #[test]
    fn e1_and_squarefree() {
        let i = edge_ideal(&e1());
        assert_eq!(i.to_string(), "⟨x1*x2^3⟩");
        assert_eq!(i.lcm_exponent().unwrap(), vec![1, 3]);
        let sq = edge_ideal(&ex6().unweighted());
        assert!(sq.is_squarefree());
        assert_eq!(sq.gens().len(), 7);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(minimalize(vec![m(&[1, 0]), m(&[1, 1])]), vec![m(&[1, 0])]);
        assert_eq!(minimalize(vec![m(&[1, 3]), m(&[2, 3])]), vec![m(&[1, 3])]);
    }

    #[test]
    fn intersect_and_colon_examples() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 3]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 3]]));
        let i = ideal(2, &[&[1, 3]]);
        assert_eq!(i.colon(&m(&[0, 2])).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(i.colon(&m(&[1, 2])).unwrap(), ideal(2, &[&[0, 1]]));
        assert!(i.colon(&m(&[1, 3])).unwrap().is_unit());
        let other = MonomialIdeal::zero(vec!["y".into(), "z".into()]);
        assert_eq!(i.intersect(&other).unwrap_err(), Error::AmbientMismatch);
    }

    #[test]
    fn ex6_components_intersect_to_edge_ideal() {
        let v = vars(6);
        let comps: Vec<MonomialIdeal> = [
            [0, 1, 0, 0, 1, 1],
            [1, 0, 0, 4, 0, 1],
            [2, 1, 0, 0, 0, 1],
            [1, 0, 2, 1, 3, 0],
            [0, 3, 0, 4, 1, 1],
            [2, 3, 0, 4, 0, 1],
        ]
        .iter()
        .map(|b| MonomialIdeal::irreducible(v.clone(), b).unwrap())
        .collect();
        assert_eq!(intersect_all(&comps).unwrap(), edge_ideal(&ex6()));
    }

    #[test]
    fn contains_examples() {
        let i = ideal(5, &[&[1, 3, 0, 0, 0]]);
        assert!(i.contains(&m(&[1, 3, 0, 0, 1])));
        assert!(!i.contains(&m(&[1, 2, 0, 0, 0])));
        assert_eq!(MonomialIdeal::zero(vars(2)).lcm_exponent().unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn render_one() {
        assert_eq!(Monomial::one(3).render(&vars(3)), "1");
        assert_eq!(MonomialIdeal::zero(vars(1)).to_string(), "⟨0⟩");
    }
}
