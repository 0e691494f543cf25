//! Vertex covers, the out/full/in split of a cover, strong covers and
//! unmixedness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VoGraph};
use crate::vset::{sort_canonical, VertexSet};

/// Largest vertex count accepted by the exhaustive cover enumerators.
pub const DEFAULT_COVER_LIMIT: usize = 24;

pub fn is_cover(g: &SimpleGraph, c: VertexSet) -> bool {
    g.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v))
}

/// A cover is minimal iff each of its vertices has a neighbour outside it.
pub fn is_minimal_cover(g: &SimpleGraph, c: VertexSet) -> bool {
    is_cover(g, c) && c.iter().all(|v| !g.neighbors(v).is_subset(c))
}

/// Every vertex cover, in canonical order.
pub fn vertex_covers(g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    vertex_covers_limited(g, DEFAULT_COVER_LIMIT)
}

pub fn vertex_covers_limited(g: &SimpleGraph, limit: usize) -> Result<Vec<VertexSet>> {
    if g.n() > limit {
        return Err(Error::TooLarge(format!("{} vertices exceeds the cover limit {limit}", g.n())));
    }
    let adj: Vec<VertexSet> = (0..g.n()).map(|i| g.neighbors(i)).collect();
    let mut out = Vec::new();
    // the complement of a cover is independent; branch on leaving each vertex out
    fn rec(adj: &[VertexSet], i: usize, cover: VertexSet, left_out: VertexSet, out: &mut Vec<VertexSet>) {
        if i == adj.len() {
            out.push(cover);
            return;
        }
        rec(adj, i + 1, cover.with(i), left_out, out);
        if adj[i].is_disjoint(left_out) {
            rec(adj, i + 1, cover, left_out.with(i), out);
        }
    }
    rec(&adj, 0, VertexSet::empty(), VertexSet::empty(), &mut out);
    sort_canonical(&mut out);
    Ok(out)
}

pub fn minimal_vertex_covers(g: &SimpleGraph) -> Result<Vec<VertexSet>> {
    let all = vertex_covers(g)?;
    Ok(all.into_iter().filter(|&c| is_minimal_cover(g, c)).collect())
}

/// Size of a smallest cover containing `s`.
pub fn min_cover_containing(g: &SimpleGraph, s: VertexSet) -> Result<usize> {
    Ok(vertex_covers(g)?
        .into_iter()
        .filter(|c| s.is_subset(*c))
        .map(|c| c.len())
        .min()
        .unwrap_or(g.n()))
}

/// A cover split into vertices with an out-arc leaving it, vertices whose
/// whole neighbourhood lies inside it, and the rest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoverPartition {
    pub cover: VertexSet,
    pub out_part: VertexSet,
    pub full_part: VertexSet,
    pub in_part: VertexSet,
}

/// Label form of a partition, keyed `L1`/`L2`/`L3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionJson {
    pub cover: Vec<String>,
    #[serde(rename = "L1")]
    pub l1: Vec<String>,
    #[serde(rename = "L2")]
    pub l2: Vec<String>,
    #[serde(rename = "L3")]
    pub l3: Vec<String>,
}

impl CoverPartition {
    pub fn to_json(&self, g: &VoGraph) -> PartitionJson {
        PartitionJson {
            cover: g.set_labels(self.cover),
            l1: g.set_labels(self.out_part),
            l2: g.set_labels(self.full_part),
            l3: g.set_labels(self.in_part),
        }
    }
}

pub fn partition(g: &VoGraph, c: VertexSet) -> Result<CoverPartition> {
    if !is_cover(&g.underlying(), c) {
        return Err(Error::NotACover);
    }
    Ok(partition_unchecked(g, c))
}

fn partition_unchecked(g: &VoGraph, c: VertexSet) -> CoverPartition {
    let mut p = CoverPartition { cover: c, ..Default::default() };
    for x in c {
        if !g.out_neighbors(x).is_subset(c) {
            p.out_part.insert(x);
        } else if g.neighbors(x).is_subset(c) {
            p.full_part.insert(x);
        } else {
            p.in_part.insert(x);
        }
    }
    p
}

/// Every vertex of the full part receives an arc from a vertex of weight
/// other than 1 lying in the full or in part.
pub fn is_strong(g: &VoGraph, c: VertexSet) -> Result<bool> {
    let p = partition(g, c)?;
    Ok(strong_partition(g, &p))
}

fn strong_partition(g: &VoGraph, p: &CoverPartition) -> bool {
    let inner = p.full_part.union(p.in_part);
    p.full_part.iter().all(|x| {
        g.in_neighbors(x)
            .intersection(inner)
            .iter()
            .any(|y| g.weight(y) != 1)
    })
}

/// All strong covers, in canonical order.
pub fn strong_covers(g: &VoGraph) -> Result<Vec<VertexSet>> {
    let covers = vertex_covers(&g.underlying())?;
    Ok(covers
        .into_iter()
        .filter(|&c| strong_partition(g, &partition_unchecked(g, c)))
        .collect())
}

/// All strong covers have the same size.
pub fn is_unmixed(g: &VoGraph) -> Result<bool> {
    let s = strong_covers(g)?;
    Ok(s.windows(2).all(|w| w[0].len() == w[1].len()))
}

/// `I(G)` is unmixed and every strong cover is minimal.
pub fn is_unmixed_via_minimality(g: &VoGraph) -> Result<bool> {
    let u = g.underlying();
    let minimal = minimal_vertex_covers(&u)?;
    let underlying_unmixed = minimal.windows(2).all(|w| w[0].len() == w[1].len());
    let all_minimal = strong_covers(g)?
        .into_iter()
        .all(|c| partition_unchecked(g, c).full_part.is_empty());
    Ok(underlying_unmixed && all_minimal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Heights {
    pub min_height: usize,
    pub max_height: usize,
}

pub fn heights(g: &VoGraph) -> Result<Heights> {
    let strong = strong_covers(g)?;
    let min_height = strong.iter().map(|c| c.len()).min().unwrap_or(0);
    let max_height = strong.iter().map(|c| c.len()).max().unwrap_or(0);
    Ok(Heights { min_height, max_height })
}
