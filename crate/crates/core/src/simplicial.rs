//! Simplicial complexes given by facets, Stanley-Reisner complexes of
//! square-free monomial ideals, and reduced simplicial homology.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::vset::VertexSet;

/// Variable cap for [`stanley_reisner`].
pub const MAX_SR_VARS: usize = 16;

/// Large prime used to screen homology over the rationals.
const SCREEN_PRIME: u64 = 2_147_483_647;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `GF(p)`; `p` must be prime.
    Prime(u64),
}

impl Field {
    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".into(),
            Field::Prime(p) => format!("GF({p})"),
        }
    }
}

/// A simplicial complex stored as its facets.
///
/// An empty facet list is the void complex; `[∅]` is the complex whose only
/// face is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `faces` as facets.
    pub fn new(vertices: Vec<String>, faces: Vec<VertexSet>) -> Self {
        let mut faces = faces;
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        faces.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        crate::vset::sort_canonical(&mut facets);
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    /// Every face, including the empty face.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &facet in &self.facets {
            let bits = facet.bits();
            let mut sub = bits;
            loop {
                seen.insert(VertexSet::from_bits(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        let mut v: Vec<VertexSet> = seen.into_iter().collect();
        crate::vset::sort_canonical(&mut v);
        v
    }

    /// `{G : G ∩ F = ∅, G ∪ F a face}`.
    pub fn link(&self, f: VertexSet) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|g| f.is_subset(**g))
            .map(|g| g.difference(f))
            .collect();
        SimplicialComplex::new(self.vertices.clone(), facets)
    }

    /// Some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        let mut common = match self.facets.first() {
            Some(&f) => f,
            None => return false,
        };
        for &f in &self.facets[1..] {
            common = common.intersection(f);
        }
        !common.is_empty()
    }

    /// Number of connected components of the 1-skeleton.
    pub fn components(&self) -> usize {
        let used: VertexSet = self.facets.iter().fold(VertexSet::empty(), |a, f| a.union(*f));
        let mut parent: HashMap<usize, usize> = used.iter().map(|v| (v, v)).collect();
        fn find(p: &mut HashMap<usize, usize>, v: usize) -> usize {
            let mut r = v;
            while p[&r] != r {
                r = p[&r];
            }
            let mut c = v;
            while p[&c] != r {
                let next = p[&c];
                p.insert(c, r);
                c = next;
            }
            r
        }
        for f in &self.facets {
            if let Some(root) = f.first() {
                for v in f.iter() {
                    let (a, b) = (find(&mut parent, root), find(&mut parent, v));
                    if a != b {
                        parent.insert(a, b);
                    }
                }
            }
        }
        let roots: HashSet<usize> = used.iter().map(|v| find(&mut parent, v)).collect();
        roots.len()
    }

    pub fn render_face(&self, f: VertexSet) -> Vec<String> {
        f.iter().map(|i| self.vertices[i].clone()).collect()
    }
}

/// The complex whose faces are the supports of square-free monomials
/// outside `ideal`.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let n = ideal.nvars();
    if n > MAX_SR_VARS {
        return Err(Error::TooLarge(format!("{n} variables exceeds {MAX_SR_VARS}")));
    }
    let nonfaces: Vec<u64> = ideal.gens().iter().map(|g| g.support().bits()).collect();
    let is_face = |mask: u64| nonfaces.iter().all(|&g| g & mask != g);
    let mut facets = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if is_face(mask) && (0..n).all(|v| mask >> v & 1 == 1 || !is_face(mask | 1 << v)) {
            facets.push(VertexSet::from_bits(mask));
        }
    }
    Ok(SimplicialComplex::new(ideal.vars().to_vec(), facets))
}

/// Sparse boundary matrices: `boundary(k)` maps `k`-faces to `(k-1)`-faces.
struct Chains {
    by_dim: Vec<Vec<VertexSet>>,
    index: Vec<HashMap<VertexSet, usize>>,
}

impl Chains {
    fn new(k: &SimplicialComplex) -> Self {
        let top = (k.dim() + 1).max(0) as usize;
        let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        if !k.is_void() {
            for f in k.faces() {
                by_dim[f.len()].push(f);
            }
        }
        let index = by_dim
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        Chains { by_dim, index }
    }

    /// Faces with `size` vertices (dimension `size - 1`).
    fn count(&self, size: usize) -> usize {
        self.by_dim.get(size).map_or(0, Vec::len)
    }

    /// Columns of the boundary map from `size`-vertex faces, entries `±1`.
    fn boundary(&self, size: usize) -> Vec<Vec<(usize, i64)>> {
        if size == 0 || size >= self.by_dim.len() {
            return Vec::new();
        }
        self.by_dim[size]
            .iter()
            .map(|f| {
                let mut col: Vec<(usize, i64)> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let row = self.index[size - 1][&f.without(v)];
                        (row, if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect()
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

fn rank_mod_p(cols: &[Vec<(usize, i64)>], p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for c in cols {
        let mut col: Vec<(usize, u64)> = c
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, lv)) = col.last() {
            let Some(pc) = pivots.get(&low) else {
                pivots.insert(low, col);
                break;
            };
            let pv = pc.last().expect("pivot column is nonzero").1;
            let factor = lv * inv_mod(pv, p) % p;
            col = merge(&col, pc, |a, b| (a + (p - factor) * b % p) % p, |v| *v == 0);
        }
    }
    pivots.len()
}

fn rank_exact(cols: &[Vec<(usize, i64)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for c in cols {
        let mut col: Vec<(usize, BigInt)> = c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect();
        while let Some((low, lv)) = col.last().cloned() {
            let Some(pc) = pivots.get(&low) else {
                pivots.insert(low, col);
                break;
            };
            let pv = pc.last().expect("pivot column is nonzero").1.clone();
            let scaled: Vec<(usize, BigInt)> = col.iter().map(|(r, v)| (*r, v * &pv)).collect();
            col = merge(&scaled, pc, |a, b| a - &lv * b, |v: &BigInt| v.is_zero());
            let content = col.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
            if !content.is_zero() && !content.is_one() {
                for (_, v) in col.iter_mut() {
                    *v = &*v / &content;
                }
            }
        }
    }
    pivots.len()
}

/// `a + f(b)` over the union of supports of two row-sorted sparse columns.
fn merge<T: Clone + Default, F, Z>(a: &[(usize, T)], b: &[(usize, T)], combine: F, is_zero: Z) -> Vec<(usize, T)>
where
    F: Fn(T, &T) -> T,
    Z: Fn(&T) -> bool,
{
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (row, val) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, a[i - 1].1.clone())
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, combine(T::default(), &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, combine(a[i - 1].1.clone(), &b[j - 1].1))
        };
        if !is_zero(&val) {
            out.push((row, val));
        }
    }
    out
}

fn rank(cols: &[Vec<(usize, i64)>], field: Field) -> usize {
    match field {
        Field::Rationals => rank_exact(cols),
        Field::Prime(p) => rank_mod_p(cols, p),
    }
}

/// Ranks of reduced homology in degrees `-1, 0, ..., dim K`.
pub fn reduced_homology_ranks(k: &SimplicialComplex, field: Field) -> Result<Vec<usize>> {
    if k.vertices().len() > MAX_SR_VARS {
        return Err(Error::TooLarge(format!("{} vertices exceeds {MAX_SR_VARS}", k.vertices().len())));
    }
    if k.is_void() {
        return Ok(Vec::new());
    }
    let chains = Chains::new(k);
    let top = (k.dim() + 1) as usize;
    // ranks[s] is the rank of the boundary from faces with s vertices
    let ranks: Vec<usize> = (0..=top + 1).map(|s| rank(&chains.boundary(s), field)).collect();
    Ok((0..=top)
        .map(|s| chains.count(s) - ranks[s] - ranks.get(s + 1).copied().unwrap_or(0))
        .collect())
}

/// Whether reduced homology vanishes in every degree below `dim K`.
///
/// Returns the first degree that fails.
pub fn first_homology_obstruction(k: &SimplicialComplex, field: Field) -> Option<i32> {
    let d = k.dim();
    if d <= 0 || k.is_cone() {
        return None;
    }
    if k.components() > 1 {
        return Some(0);
    }
    if d == 1 {
        return None;
    }
    let chains = Chains::new(k);
    let screen = match field {
        Field::Rationals => Field::Prime(SCREEN_PRIME),
        f => f,
    };
    let mut cache: HashMap<(usize, Field), usize> = HashMap::new();
    let mut rank_of = |s: usize, f: Field| *cache.entry((s, f)).or_insert_with(|| rank(&chains.boundary(s), f));
    // degree i uses faces with i + 1 vertices
    for i in 1..d {
        let s = i as usize + 1;
        let h = chains.count(s) - rank_of(s, screen) - rank_of(s + 1, screen);
        if h == 0 {
            continue;
        }
        if field == Field::Rationals {
            let exact = chains.count(s) - rank_of(s, field) - rank_of(s + 1, field);
            if exact == 0 {
                continue;
            }
        }
        return Some(i);
    }
    None
}
