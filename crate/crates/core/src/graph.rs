//! Weighted oriented graphs and the handful of transformations the rest of
//! the crate needs: underlying simple graph, complement, vertex deletion,
//! whiskering, the two vertex-attachment constructions, and matching of
//! oriented 5-cycles against a small pattern catalog.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// How to treat a source vertex whose weight is not 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SourceWeights {
    #[default]
    Reject,
    Normalize,
}

/// A vertex-weighted directed graph whose underlying undirected graph is
/// simple.
///
/// Vertices are addressed by index (input order) internally and by label at
/// the API boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoGraph {
    labels: Vec<String>,
    weights: Vec<u32>,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl VoGraph {
    /// Builds and validates a graph, rejecting sources of weight other than 1.
    pub fn new<S: AsRef<str>>(vertices: &[(S, u32)], arcs: &[(S, S)]) -> Result<Self> {
        Self::with_mode(vertices, arcs, SourceWeights::Reject)
    }

    pub fn with_mode<S: AsRef<str>>(
        vertices: &[(S, u32)],
        arcs: &[(S, S)],
        mode: SourceWeights,
    ) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|(l, _)| l.as_ref().to_owned()).collect();
        let weights: Vec<u32> = vertices.iter().map(|&(_, w)| w).collect();
        let index = label_index(&labels)?;
        let mut idx_arcs = Vec::with_capacity(arcs.len());
        for (u, v) in arcs {
            let iu = *index
                .get(u.as_ref())
                .ok_or_else(|| Error::UnknownVertex(u.as_ref().to_owned()))?;
            let iv = *index
                .get(v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_owned()))?;
            idx_arcs.push((iu, iv));
        }
        Self::from_indexed(labels, weights, idx_arcs, mode)
    }

    /// Core validating constructor over index-based arcs.
    pub fn from_indexed(
        labels: Vec<String>,
        mut weights: Vec<u32>,
        arcs: Vec<(usize, usize)>,
        mode: SourceWeights,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        assert_eq!(n, weights.len(), "one weight per vertex");
        label_index(&labels)?;
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight(labels[i].clone()));
        }
        let mut out_adj = vec![VertexSet::empty(); n];
        let mut in_adj = vec![VertexSet::empty(); n];
        for &(u, v) in &arcs {
            assert!(u < n && v < n, "arc endpoint out of range");
            if u == v {
                return Err(Error::SelfLoop(labels[u].clone()));
            }
            if out_adj[u].contains(v) {
                return Err(Error::DuplicateArc(labels[u].clone(), labels[v].clone()));
            }
            if out_adj[v].contains(u) {
                return Err(Error::AntiparallelArcs(labels[v].clone(), labels[u].clone()));
            }
            out_adj[u].insert(v);
            in_adj[v].insert(u);
        }
        for i in 0..n {
            let is_source = !out_adj[i].is_empty() && in_adj[i].is_empty();
            if is_source && weights[i] != 1 {
                match mode {
                    SourceWeights::Reject => return Err(Error::SourceWeightNotOne(labels[i].clone())),
                    SourceWeights::Normalize => weights[i] = 1,
                }
            }
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        Ok(VoGraph { labels, weights, arcs, out_adj, in_adj })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// Arcs as `(source, target)` index pairs, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    /// Resolves a list of labels into a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.require_index(l.as_ref())).collect()
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, i: usize) -> VertexSet {
        self.out_adj[i]
    }

    pub fn in_neighbors(&self, i: usize) -> VertexSet {
        self.in_adj[i]
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.out_adj[i].union(self.in_adj[i])
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.neighbors(i).is_empty()
    }

    pub fn is_source(&self, i: usize) -> bool {
        !self.out_adj[i].is_empty() && self.in_adj[i].is_empty()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        !self.in_adj[i].is_empty() && self.out_adj[i].is_empty()
    }

    pub fn first_isolated(&self) -> Option<usize> {
        (0..self.n()).find(|&i| self.is_isolated(i))
    }

    /// Forgets orientation and weights.
    pub fn underlying(&self) -> SimpleGraph {
        let adj = (0..self.n()).map(|i| self.neighbors(i)).collect();
        SimpleGraph { labels: self.labels.clone(), adj }
    }

    pub fn classify_vertices(&self) -> VertexClasses {
        let mut c = VertexClasses::default();
        for i in 0..self.n() {
            if self.is_source(i) {
                c.sources.insert(i);
            }
            if self.is_sink(i) {
                c.sinks.insert(i);
            }
            if self.weights[i] != 1 {
                c.v_plus.insert(i);
            }
        }
        c
    }

    /// Induced subgraph on the complement of `labels`.
    pub fn delete_vertices<S: AsRef<str>>(&self, labels: &[S]) -> Result<VoGraph> {
        let s = self.vertex_set(labels)?;
        Ok(self.remove_set(s))
    }

    /// Induced subgraph on the complement of `s`.
    ///
    /// A surviving vertex that loses every incoming arc gets weight 1.
    pub fn remove_set(&self, s: VertexSet) -> VoGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&i| !s.contains(i)).collect();
        let mut new_index = vec![usize::MAX; self.n()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let weights = keep
            .iter()
            .map(|&i| {
                let had_in = !self.in_adj[i].is_empty();
                let keeps_in = !self.in_adj[i].difference(s).is_empty();
                if had_in && !keeps_in {
                    1
                } else {
                    self.weights[i]
                }
            })
            .collect();
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| !s.contains(u) && !s.contains(v))
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        VoGraph::from_indexed(labels, weights, arcs, SourceWeights::Normalize)
            .expect("induced subgraph of a valid graph is valid")
    }

    /// Same graph with every vertex weight forced to 1.
    pub fn unweighted(&self) -> VoGraph {
        let mut g = self.clone();
        g.weights.iter_mut().for_each(|w| *w = 1);
        g
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self
                .labels
                .iter()
                .zip(&self.weights)
                .map(|(id, &w)| VertexJson { id: id.clone(), weight: w as i64 })
                .collect(),
            edges: self
                .arcs
                .iter()
                .map(|&(u, v)| [self.labels[u].clone(), self.labels[v].clone()])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson, mode: SourceWeights) -> Result<Self> {
        let mut vertices = Vec::with_capacity(json.vertices.len());
        for v in &json.vertices {
            if v.weight <= 0 {
                return Err(Error::NonPositiveWeight(v.id.clone()));
            }
            let w = u32::try_from(v.weight).map_err(|_| Error::ExponentOverflow)?;
            vertices.push((v.id.as_str(), w));
        }
        let arcs: Vec<(&str, &str)> = json.edges.iter().map(|[u, v]| (u.as_str(), v.as_str())).collect();
        Self::with_mode(&vertices, &arcs, mode)
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateVertex(l.clone()));
        }
    }
    Ok(index)
}

/// Sources, sinks and the vertices of weight other than 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VertexClasses {
    pub sources: VertexSet,
    pub sinks: VertexSet,
    pub v_plus: VertexSet,
}

/// Graph interchange format: edges are ordered `[source, target]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub weight: i64,
}

/// A simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len(), MAX_VERTICES));
        }
        let index = label_index(&labels)?;
        let mut adj = vec![VertexSet::empty(); labels.len()];
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = *index.get(u).ok_or_else(|| Error::UnknownVertex(u.to_owned()))?;
            let iv = *index.get(v).ok_or_else(|| Error::UnknownVertex(v.to_owned()))?;
            if iu == iv {
                return Err(Error::SelfLoop(u.to_owned()));
            }
            if adj[iu].contains(iv) {
                return Err(Error::DuplicateEdge(u.to_owned(), v.to_owned()));
            }
            adj[iu].insert(iv);
            adj[iv].insert(iu);
        }
        Ok(SimpleGraph { labels, adj })
    }

    /// Builds from index pairs; duplicate pairs are merged.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![VertexSet::empty(); labels.len()];
        for &(u, v) in edges {
            assert!(u != v, "self-loop");
            adj[u].insert(v);
            adj[v].insert(u);
        }
        SimpleGraph { labels, adj }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                e.push((u, v));
            }
        }
        e
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Same vertices; an edge is present iff it is absent here.
    pub fn complement(&self) -> SimpleGraph {
        let full = VertexSet::full(self.n());
        let adj = (0..self.n())
            .map(|i| full.difference(self.adj[i]).without(i))
            .collect();
        SimpleGraph { labels: self.labels.clone(), adj }
    }

    /// Induced subgraph on `keep`, reindexed in increasing order.
    pub fn induced(&self, keep: VertexSet) -> SimpleGraph {
        let order = keep.to_vec();
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.adj[i].contains(j))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        SimpleGraph { labels, adj }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = VertexSet::singleton(0);
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = self.adj[v].difference(seen);
            seen = seen.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen.len() == self.n()
    }

    /// Vertex order around the graph when it is a single cycle of length ≥ 3.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n < 3 || (0..n).any(|i| self.degree(i) != 2) || !self.is_connected() {
            return None;
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = self.adj[0].first()?;
        while cur != 0 {
            order.push(cur);
            let next = self.adj[cur].without(prev).first()?;
            prev = cur;
            cur = next;
        }
        (order.len() == n).then_some(order)
    }

    /// Vertex order end-to-end when the graph is a single path on ≥ 2 vertices.
    /// The end with the smaller index comes first.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n < 2 || !self.is_connected() || self.edge_count() != n - 1 {
            return None;
        }
        if (0..n).any(|i| self.degree(i) > 2) {
            return None;
        }
        let start = (0..n).find(|&i| self.degree(i) == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = self.adj[cur].iter().find(|&v| v != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    pub fn to_json(&self) -> SimpleGraphJson {
        SimpleGraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [self.labels[u].clone(), self.labels[v].clone()])
                .collect(),
        }
    }
}

/// JSON rendering of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    g.complement()
}

/// Per-vertex whisker orientation and leaf weights.
///
/// By default every whisker points from the new leaf into the graph. Listing
/// a vertex in `outward` flips its whisker to point at the leaf instead; the
/// constructor builds that even when the vertex has weight other than 1.
#[derive(Clone, Debug, Default)]
pub struct WhiskerRule {
    pub outward: BTreeSet<String>,
    pub leaf_weights: BTreeMap<String, u32>,
}

/// Label of the leaf attached to `label`: `x7` becomes `y7`, anything else
/// gets a `_leaf` suffix.
pub fn leaf_label(label: &str) -> String {
    match label.strip_prefix('x') {
        Some(rest) if !rest.is_empty() => format!("y{rest}"),
        _ => format!("{label}_leaf"),
    }
}

/// Attaches one pendant leaf to every vertex.
pub fn add_whiskers(g: &VoGraph, rule: &WhiskerRule) -> Result<VoGraph> {
    for l in rule.outward.iter().chain(rule.leaf_weights.keys()) {
        if g.index_of(l).is_none() {
            return Err(Error::RuleReferencesUnknownVertex(l.clone()));
        }
    }
    let n = g.n();
    let mut labels = g.labels().to_vec();
    let mut weights = g.weights().to_vec();
    let mut arcs = g.arcs().to_vec();
    for i in 0..n {
        let x = g.label(i);
        labels.push(leaf_label(x));
        weights.push(*rule.leaf_weights.get(x).unwrap_or(&1));
        if rule.outward.contains(x) {
            arcs.push((i, n + i));
        } else {
            arcs.push((n + i, i));
        }
    }
    VoGraph::from_indexed(labels, weights, arcs, SourceWeights::Normalize)
}

/// A new vertex `z` joined to existing vertices.
///
/// Arcs run `x -> z` for every attached `x` except those listed in
/// `from_z`, which get `z -> x`; that mixed shape is only allowed when `z`
/// has weight 1.
#[derive(Clone, Debug)]
pub struct Attachment {
    pub z: String,
    pub z_weight: u32,
    pub attach: Vec<String>,
    pub from_z: BTreeSet<String>,
}

impl Attachment {
    pub fn into_z<S: AsRef<str>>(z: &str, z_weight: u32, attach: &[S]) -> Self {
        Attachment {
            z: z.to_owned(),
            z_weight,
            attach: attach.iter().map(|s| s.as_ref().to_owned()).collect(),
            from_z: BTreeSet::new(),
        }
    }
}

/// The pendant leaf `y` hung on `z` in the first construction.
#[derive(Clone, Debug)]
pub struct Leaf {
    pub label: String,
    pub weight: u32,
    pub toward_z: bool,
}

/// Labels, weights and arcs of a graph under construction.
type Parts = (Vec<String>, Vec<u32>, Vec<(usize, usize)>);

fn attach_new_vertex(g: &VoGraph, att: &Attachment) -> Result<Parts> {
    if att.attach.is_empty() {
        return Err(Error::EmptyAttachSet);
    }
    if g.index_of(&att.z).is_some() {
        return Err(Error::DuplicateVertex(att.z.clone()));
    }
    let targets = g.vertex_set(&att.attach)?;
    if targets.len() != att.attach.len() {
        return Err(Error::ConstructionShapeViolation("attach list repeats a vertex".into()));
    }
    for l in &att.from_z {
        if !att.attach.contains(l) {
            return Err(Error::ConstructionShapeViolation(format!("`{l}` is not in the attach set")));
        }
    }
    if !att.from_z.is_empty() && att.z_weight != 1 {
        return Err(Error::ConstructionShapeViolation(
            "arcs leaving z require weight 1 on z".into(),
        ));
    }
    let mut labels = g.labels().to_vec();
    let mut weights = g.weights().to_vec();
    let mut arcs = g.arcs().to_vec();
    let z = labels.len();
    labels.push(att.z.clone());
    weights.push(att.z_weight);
    for x in &att.attach {
        let i = g.require_index(x)?;
        if att.from_z.contains(x) {
            arcs.push((z, i));
        } else {
            arcs.push((i, z));
        }
    }
    Ok((labels, weights, arcs))
}

/// Adds `z` joined to `attach` plus a leaf `y` hanging off `z`.
pub fn first_construction(g: &VoGraph, att: &Attachment, leaf: &Leaf) -> Result<VoGraph> {
    let (mut labels, mut weights, mut arcs) = attach_new_vertex(g, att)?;
    if labels.contains(&leaf.label) {
        return Err(Error::DuplicateVertex(leaf.label.clone()));
    }
    let z = labels.len() - 1;
    let y = labels.len();
    labels.push(leaf.label.clone());
    weights.push(leaf.weight);
    arcs.push(if leaf.toward_z { (y, z) } else { (z, y) });
    VoGraph::from_indexed(labels, weights, arcs, SourceWeights::Normalize)
}

/// Adds `z` joined to `attach`.
pub fn second_construction(g: &VoGraph, att: &Attachment) -> Result<VoGraph> {
    let (labels, weights, arcs) = attach_new_vertex(g, att)?;
    VoGraph::from_indexed(labels, weights, arcs, SourceWeights::Normalize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightClass {
    One,
    Many,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcClass {
    /// Arc from position `i` to position `i + 1`.
    Forward,
    Backward,
    Any,
}

/// A weighted orientation pattern on the 5-cycle.
///
/// `arc_class[i]` constrains the edge between positions `i` and `i + 1`
/// (mod 5).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclePattern {
    pub name: &'static str,
    pub vertex_class: [WeightClass; 5],
    pub arc_class: [ArcClass; 5],
}

impl CyclePattern {
    /// The oriented pentagons `D1` through `D8`.
    pub fn catalog(k: usize) -> Option<CyclePattern> {
        use ArcClass::{Any as A, Backward as B, Forward as F};
        use WeightClass::{Any as W, Many as M, One as O};
        let (name, vertex_class, arc_class) = match k {
            1 => ("D1", [O, O, M, O, M], [A, B, B, F, F]),
            2 => ("D2", [O, O, O, M, M], [A, A, B, B, B]),
            3 => ("D3", [O, O, M, M, M], [A, A, B, B, B]),
            4 => ("D4", [O, M, M, O, M], [F, F, B, F, A]),
            5 => ("D5", [O, O, W, O, W], [A, F, B, F, F]),
            6 => ("D6", [O, O, W, W, W], [A, F, B, F, B]),
            7 => ("D7", [O, O, W, W, W], [A, A, F, B, A]),
            8 => ("D8", [O, O, O, M, O], [A, A, A, A, A]),
            _ => return None,
        };
        Some(CyclePattern { name, vertex_class, arc_class })
    }
}

/// The ten ways of walking around a cycle: five starting points, two
/// directions.
pub fn dihedral_walks(order: &[usize]) -> Vec<Vec<usize>> {
    let n = order.len();
    let mut walks = Vec::with_capacity(2 * n);
    for r in 0..n {
        walks.push((0..n).map(|k| order[(r + k) % n]).collect());
        walks.push((0..n).map(|k| order[(r + n - k) % n]).collect());
    }
    walks
}

/// Whether some symmetry of the 5-cycle aligns `g` with `p`.
pub fn match_pattern(g: &VoGraph, p: &CyclePattern) -> Result<bool> {
    let order = g
        .underlying()
        .cycle_order()
        .filter(|o| o.len() == 5)
        .ok_or(Error::NotAFiveCycle)?;
    Ok(dihedral_walks(&order).iter().any(|walk| walk_matches(g, walk, p)))
}

fn walk_matches(g: &VoGraph, walk: &[usize], p: &CyclePattern) -> bool {
    for k in 0..5 {
        let w = g.weight(walk[k]);
        let weight_ok = match p.vertex_class[k] {
            WeightClass::One => w == 1,
            WeightClass::Many => w != 1,
            WeightClass::Any => true,
        };
        let (a, b) = (walk[k], walk[(k + 1) % 5]);
        let arc_ok = match p.arc_class[k] {
            ArcClass::Forward => g.has_arc(a, b),
            ArcClass::Backward => g.has_arc(b, a),
            ArcClass::Any => true,
        };
        if !weight_ok || !arc_ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{e1, ex6};

    #[test]
    fn ex6_is_valid_and_has_seven_edges() {
        let g = ex6();
        assert_eq!(g.n(), 6);
        assert_eq!(g.weights(), &[2, 3, 2, 4, 3, 1]);
        let u = g.underlying();
        assert_eq!(u.n(), 6);
        assert_eq!(u.edge_count(), 7);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            VoGraph::new(&[("x1", 1), ("x2", 1)], &[("x1", "x2"), ("x2", "x1")]).unwrap_err(),
            Error::AntiparallelArcs("x1".into(), "x2".into())
        );
        assert_eq!(
            VoGraph::new(&[("x1", 1), ("x1", 1)], &[]).unwrap_err(),
            Error::DuplicateVertex("x1".into())
        );
        assert_eq!(
            VoGraph::new(&[("x1", 1)], &[("x1", "x1")]).unwrap_err(),
            Error::SelfLoop("x1".into())
        );
        assert_eq!(
            VoGraph::new(&[("x1", 0)], &[]).unwrap_err(),
            Error::NonPositiveWeight("x1".into())
        );
        assert_eq!(
            VoGraph::new(&[("x1", 2), ("x2", 1)], &[("x1", "x2")]).unwrap_err(),
            Error::SourceWeightNotOne("x1".into())
        );
        assert_eq!(
            VoGraph::new(&[("x1", 1)], &[("x1", "x9")]).unwrap_err(),
            Error::UnknownVertex("x9".into())
        );
    }

    #[test]
    fn normalize_mode_forces_source_weight() {
        let g = VoGraph::with_mode(&[("x1", 5), ("x2", 3)], &[("x1", "x2")], SourceWeights::Normalize).unwrap();
        assert_eq!(g.weights(), &[1, 3]);
    }

    #[test]
    fn e1_and_empty_underlying() {
        let u = e1().underlying();
        assert_eq!(u.edges(), vec![(0, 1)]);
        let empty = VoGraph::new::<&str>(&[], &[]).unwrap();
        assert_eq!(empty.underlying().n(), 0);
    }

    #[test]
    fn complement_examples() {
        let c3 = SimpleGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(c3.complement().edge_count(), 0);
        let c5 = SimpleGraph::from_edges(
            (1..=5).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        );
        let cc = c5.complement();
        assert_eq!(cc.edge_count(), 5);
        assert!(cc.cycle_order().is_some());
    }

    #[test]
    fn classify_vertices_examples() {
        let g = ex6();
        let c = g.classify_vertices();
        assert!(c.sources.is_empty());
        assert_eq!(g.set_labels(c.sinks), vec!["x3"]);
        assert_eq!(g.set_labels(c.v_plus), vec!["x1", "x2", "x3", "x4", "x5"]);

        let c = e1().classify_vertices();
        assert_eq!(c.sources.to_vec(), vec![0]);
        assert_eq!(c.sinks.to_vec(), vec![1]);
        assert_eq!(c.v_plus.to_vec(), vec![1]);

        let iso = VoGraph::new(&[("v", 1)], &[]).unwrap();
        let c = iso.classify_vertices();
        assert!(c.sources.is_empty() && c.sinks.is_empty());
    }

    #[test]
    fn delete_vertices_examples() {
        let path = VoGraph::new(
            &[("y", 1), ("z", 1), ("x1", 1), ("x2", 1)],
            &[("y", "z"), ("z", "x1"), ("x1", "x2")],
        )
        .unwrap();
        let e = path.delete_vertices(&["z", "y"]).unwrap();
        assert_eq!(e.labels(), &["x1", "x2"]);
        assert_eq!(e.arcs(), &[(0, 1)]);

        let g = ex6();
        let h = g.delete_vertices(&["x6"]).unwrap();
        assert_eq!(h.n(), 5);
        let arcs: Vec<_> = h.arcs().iter().map(|&(u, v)| (h.label(u), h.label(v))).collect();
        assert_eq!(arcs, vec![("x1", "x2"), ("x2", "x4"), ("x5", "x1")]);
        // x5 lost its only in-arc (from x6) and became a source
        assert_eq!(h.weight(h.index_of("x5").unwrap()), 1);

        assert_eq!(g.delete_vertices::<&str>(&[]).unwrap(), g);
        assert_eq!(g.delete_vertices(&["x9"]).unwrap_err(), Error::UnknownVertex("x9".into()));
    }

    #[test]
    fn whiskers_default_point_inward() {
        let c3 = VoGraph::new(&[("x1", 2), ("x2", 2), ("x3", 2)], &[("x1", "x2"), ("x2", "x3"), ("x3", "x1")]).unwrap();
        let w = add_whiskers(&c3, &WhiskerRule::default()).unwrap();
        assert_eq!(w.n(), 6);
        for i in 0..3 {
            let y = w.index_of(&leaf_label(c3.label(i))).unwrap();
            assert!(w.has_arc(y, i));
            assert_eq!(w.degree(y), 1);
        }

        let single = VoGraph::new(&[("x", 1)], &[]).unwrap();
        let rule = WhiskerRule { outward: ["x".to_string()].into(), ..Default::default() };
        let w = add_whiskers(&single, &rule).unwrap();
        assert_eq!(w.arcs(), &[(0, 1)]);

        let bad = WhiskerRule { outward: ["q".to_string()].into(), ..Default::default() };
        assert_eq!(add_whiskers(&single, &bad).unwrap_err(), Error::RuleReferencesUnknownVertex("q".into()));
    }

    #[test]
    fn first_construction_builds_a_path() {
        let edge = VoGraph::new(&[("x1", 1), ("x2", 1)], &[("x1", "x2")]).unwrap();
        let att = Attachment::into_z("z", 1, &["x1"]);
        let leaf = Leaf { label: "y".into(), weight: 1, toward_z: true };
        let h = first_construction(&edge, &att, &leaf).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.underlying().path_order().map(|o| o.len()), Some(4));

        let empty = Attachment::into_z::<&str>("z", 1, &[]);
        assert_eq!(first_construction(&edge, &empty, &leaf).unwrap_err(), Error::EmptyAttachSet);

        let mut mixed = Attachment::into_z("z", 2, &["x1"]);
        mixed.from_z.insert("x1".into());
        assert!(matches!(
            first_construction(&edge, &mixed, &leaf).unwrap_err(),
            Error::ConstructionShapeViolation(_)
        ));
    }

    #[test]
    fn second_construction_shapes() {
        let edge = VoGraph::new(&[("x1", 1), ("x2", 1)], &[("x1", "x2")]).unwrap();
        let tri = second_construction(&edge, &Attachment::into_z("z", 3, &["x1", "x2"])).unwrap();
        assert!(tri.underlying().cycle_order().map(|o| o.len()) == Some(3));

        let mut special = Attachment::into_z("z", 1, &["x1", "x2"]);
        special.from_z.insert("x2".into());
        let h = second_construction(&edge, &special).unwrap();
        let z = h.index_of("z").unwrap();
        assert!(h.has_arc(z, 1) && h.has_arc(0, z));
    }

    #[test]
    fn second_construction_rebuilds_d4() {
        // path x4 -> x5 - x1 -> x2, then z = x3 receiving arcs from x2 and x4
        let path = VoGraph::new(
            &[("x1", 1), ("x2", 2), ("x4", 1), ("x5", 2)],
            &[("x1", "x2"), ("x4", "x5"), ("x5", "x1")],
        )
        .unwrap();
        let h = second_construction(&path, &Attachment::into_z("x3", 2, &["x2", "x4"])).unwrap();
        assert!(match_pattern(&h, &CyclePattern::catalog(4).unwrap()).unwrap());
    }

    #[test]
    fn pattern_matching_examples() {
        let d4 = crate::samples::d4_instance();
        let p4 = CyclePattern::catalog(4).unwrap();
        assert!(match_pattern(&d4, &p4).unwrap());

        let plain = crate::samples::oriented_cycle(&[1, 1, 1, 1, 1]);
        assert!(!match_pattern(&plain, &CyclePattern::catalog(1).unwrap()).unwrap());

        assert_eq!(match_pattern(&e1(), &p4).unwrap_err(), Error::NotAFiveCycle);
    }

    #[test]
    fn json_round_trip() {
        let g = ex6();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&s).unwrap();
        assert_eq!(VoGraph::from_json(&back, SourceWeights::Reject).unwrap(), g);
    }

    #[test]
    fn path_and_cycle_orders() {
        let p = SimpleGraph::new(&["a", "b", "c"], &[("b", "a"), ("b", "c")]).unwrap();
        assert_eq!(p.path_order(), Some(vec![0, 1, 2]));
        assert_eq!(p.cycle_order(), None);
        let two_triangles = SimpleGraph::from_edges(
            (0..6).map(|i| i.to_string()).collect(),
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        );
        assert_eq!(two_triangles.cycle_order(), None);
    }
}
