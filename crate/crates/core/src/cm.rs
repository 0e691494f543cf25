//! Cohen-Macaulay decisions: a homological oracle (polarize, then test the
//! links of the Stanley-Reisner complex) and the classification rules for
//! paths, cycles, whiskered graphs and the vertex-attachment constructions.

use serde::Serialize;

use crate::covers::{is_unmixed, min_cover_containing, minimal_vertex_covers};
use crate::error::{Error, Result};
use crate::graph::{match_pattern, CyclePattern, VoGraph};
use crate::ideal::{edge_ideal, MonomialIdeal};
use crate::polarize::polarize_ideal;
use crate::simplicial::{first_homology_obstruction, stanley_reisner, Field, MAX_SR_VARS};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    PathThm,
    CycleThm,
    WhiskerThm,
    Construction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub is_cm: bool,
    pub method: Method,
    pub certificate: String,
}

impl CmReport {
    fn new(is_cm: bool, method: Method, certificate: impl Into<String>) -> Self {
        CmReport { is_cm, method, certificate: certificate.into() }
    }
}

/// Reisner's criterion on the polarization of `ideal`.
pub fn is_cm_oracle(ideal: &MonomialIdeal, field: Field) -> Result<CmReport> {
    if ideal.is_zero() {
        return Ok(CmReport::new(true, Method::Oracle, "zero ideal"));
    }
    let pol = if ideal.is_squarefree() { ideal.clone() } else { polarize_ideal(ideal)? };
    if pol.nvars() > MAX_SR_VARS {
        return Err(Error::TooLarge(format!(
            "{} polarized variables exceeds {MAX_SR_VARS}",
            pol.nvars()
        )));
    }
    let k = stanley_reisner(&pol)?;
    if !k.is_pure() {
        return Ok(CmReport::new(false, Method::Oracle, "Stanley-Reisner complex is not pure"));
    }
    let mut faces = k.faces();
    faces.reverse();
    for f in faces {
        let link = k.link(f);
        if let Some(deg) = first_homology_obstruction(&link, field) {
            let face = k.render_face(f).join(",");
            return Ok(CmReport::new(
                false,
                Method::Oracle,
                format!("link of {{{face}}} has reduced homology in degree {deg} over {}", field.name()),
            ));
        }
    }
    Ok(CmReport::new(true, Method::Oracle, format!("all links acyclic below top degree over {}", field.name())))
}

pub fn is_cm_graph_oracle(g: &VoGraph, field: Field) -> Result<CmReport> {
    is_cm_oracle(&edge_ideal(g), field)
}

/// Paths on 2 vertices are Cohen-Macaulay; paths on 4 vertices are when
/// an arc from an inner vertex to its end neighbour starts at weight 1.
pub fn classify_path(g: &VoGraph) -> Result<CmReport> {
    let order = g.underlying().path_order().ok_or(Error::NotAPath)?;
    let report = match order.len() {
        2 => CmReport::new(true, Method::PathThm, "path on 2 vertices"),
        4 => {
            let (p1, p2, p3, p4) = (order[0], order[1], order[2], order[3]);
            let left = !g.has_arc(p2, p1) || g.weight(p2) == 1;
            let right = !g.has_arc(p3, p4) || g.weight(p3) == 1;
            let why = if left && right {
                "path on 4 vertices, inner arcs toward the ends start at weight 1".to_owned()
            } else {
                let bad = if left { p3 } else { p2 };
                format!("path on 4 vertices, arc from inner vertex {} of weight {}", g.label(bad), g.weight(bad))
            };
            CmReport::new(left && right, Method::PathThm, why)
        }
        n => CmReport::new(false, Method::PathThm, format!("path on {n} vertices")),
    };
    Ok(report)
}

fn pattern(k: usize) -> CyclePattern {
    CyclePattern::catalog(k).expect("catalog entry")
}

/// Five-cycle rule shared by the unmixed and Cohen-Macaulay classifiers.
fn pentagon_rule(g: &VoGraph) -> Result<(bool, String)> {
    if match_pattern(g, &pattern(4))? {
        return Ok((true, "pentagon of shape D4".into()));
    }
    let light_arc = g.arcs().iter().any(|&(x, y)| g.weight(x) == 1 && g.weight(y) == 1);
    if !light_arc {
        return Ok((false, "pentagon without an arc between weight-1 vertices".into()));
    }
    for k in 1..=3 {
        if match_pattern(g, &pattern(k))? {
            return Ok((false, format!("pentagon of shape D{k}")));
        }
    }
    Ok((true, "pentagon with an arc between weight-1 vertices, not of shape D1-D3".into()))
}

fn cycle_len(g: &VoGraph) -> Result<usize> {
    g.underlying().cycle_order().map(|o| o.len()).ok_or(Error::NotACycle)
}

/// Unmixedness of a weighted oriented cycle from its length, weights and
/// shape.
pub fn classify_cycle_unmixed(g: &VoGraph) -> Result<bool> {
    let n = cycle_len(g)?;
    Ok(match n {
        3 => (0..3).any(|i| g.weight(i) == 1),
        4 | 7 => (0..n).all(|i| g.weight(i) == 1 || g.is_sink(i)),
        5 => pentagon_rule(g)?.0,
        _ => false,
    })
}

pub fn classify_cycle_cm(g: &VoGraph) -> Result<CmReport> {
    let n = cycle_len(g)?;
    Ok(match n {
        3 => match (0..3).find(|&i| g.weight(i) == 1) {
            Some(i) => CmReport::new(true, Method::CycleThm, format!("triangle with {} of weight 1", g.label(i))),
            None => CmReport::new(false, Method::CycleThm, "triangle with no vertex of weight 1"),
        },
        5 => {
            let (ok, why) = pentagon_rule(g)?;
            CmReport::new(ok, Method::CycleThm, why)
        }
        n => CmReport::new(false, Method::CycleThm, format!("cycle of length {n}")),
    })
}

/// Pairs `(x_s, y_s)` of a perfect matching in which every `y_s` is a leaf.
pub fn leaf_matching(g: &VoGraph) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    if n == 0 || n % 2 == 1 || g.first_isolated().is_some() {
        return None;
    }
    let mut pairs = Vec::with_capacity(n / 2);
    let mut used = VertexSet::empty();
    for v in 0..n {
        if g.degree(v) != 1 || used.contains(v) {
            continue;
        }
        let x = g.neighbors(v).first().expect("degree one");
        if g.degree(x) == 1 {
            // a lone edge: the arc target plays the role of x
            let (hub, leaf) = if g.has_arc(v, x) { (x, v) } else { (v, x) };
            pairs.push((hub, leaf));
            used = used.with(v).with(x);
        } else {
            if used.contains(x) {
                return None;
            }
            pairs.push((x, v));
            used = used.with(v).with(x);
        }
    }
    (used.len() == n).then_some(pairs)
}

/// Whiskered graphs are Cohen-Macaulay iff every arc `x_s -> y_s` starts at
/// weight 1.
pub fn classify_whisker(g: &VoGraph) -> Result<CmReport> {
    let pairs = leaf_matching(g).ok_or(Error::NoLeafPerfectMatching)?;
    for &(x, y) in &pairs {
        if g.has_arc(x, y) && g.weight(x) != 1 {
            return Ok(CmReport::new(
                false,
                Method::WhiskerThm,
                format!("leaf arc ({}, {}) starts at weight {}", g.label(x), g.label(y), g.weight(x)),
            ));
        }
    }
    Ok(CmReport::new(true, Method::WhiskerThm, "every arc toward a leaf starts at weight 1"))
}

/// Cohen-Macaulayness from the first applicable classifier, falling back
/// to the oracle.
pub fn cm_auto(g: &VoGraph, field: Field) -> Result<CmReport> {
    if g.arcs().is_empty() {
        return Ok(CmReport::new(true, Method::Oracle, "zero ideal"));
    }
    let u = g.underlying();
    if u.path_order().is_some() {
        return classify_path(g);
    }
    if u.cycle_order().is_some() {
        return classify_cycle_cm(g);
    }
    if leaf_matching(g).is_some() {
        return classify_whisker(g);
    }
    is_cm_graph_oracle(g, field)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    First,
    Second,
}

/// Names the vertex `z` (and leaf `y` for the first construction) of a
/// graph believed to arise from a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionHint {
    pub kind: ConstructionKind,
    pub z: String,
    pub y: Option<String>,
}

/// The pieces of a graph viewed as a construction around `z`.
#[derive(Clone, Debug)]
pub struct ConstructionShape {
    pub kind: ConstructionKind,
    pub z: usize,
    pub y: Option<usize>,
    pub attach: VertexSet,
    /// All attach arcs point into `z`.
    pub general: bool,
    /// Graph with `z` (and `y`) removed.
    pub g: VoGraph,
    /// `g` with the attach set removed.
    pub f: VoGraph,
    /// Attach vertices receiving an arc from `z`, as labels.
    pub from_z: Vec<String>,
}

pub fn construction_shape(h: &VoGraph, hint: &ConstructionHint) -> Result<ConstructionShape> {
    let z = h.index_of(&hint.z).ok_or_else(|| Error::BadHint(format!("unknown vertex `{}`", hint.z)))?;
    let y = match (hint.kind, &hint.y) {
        (ConstructionKind::First, Some(y)) => {
            let y = h.index_of(y).ok_or_else(|| Error::BadHint(format!("unknown vertex `{y}`")))?;
            if h.degree(y) != 1 || !h.adjacent(y, z) {
                return Err(Error::BadHint(format!("`{}` is not a leaf on `{}`", h.label(y), hint.z)));
            }
            Some(y)
        }
        (ConstructionKind::First, None) => return Err(Error::BadHint("first construction needs a leaf".into())),
        (ConstructionKind::Second, Some(_)) => {
            return Err(Error::BadHint("second construction takes no leaf".into()))
        }
        (ConstructionKind::Second, None) => None,
    };
    let attach = match y {
        Some(y) => h.neighbors(z).without(y),
        None => h.neighbors(z),
    };
    if attach.is_empty() {
        return Err(Error::BadHint(format!("`{}` has no attached vertices", hint.z)));
    }
    let general = attach.iter().all(|x| h.has_arc(x, z));
    if !general && h.weight(z) != 1 {
        return Err(Error::BadHint("arcs leave z but w(z) is not 1".into()));
    }
    let removed = match y {
        Some(y) => VertexSet::singleton(z).with(y),
        None => VertexSet::singleton(z),
    };
    let g = h.remove_set(removed);
    let attach_labels = h.set_labels(attach);
    let f = g.delete_vertices(&attach_labels)?;
    let from_z = attach.iter().filter(|&x| h.has_arc(z, x)).map(|x| h.label(x).to_owned()).collect();
    Ok(ConstructionShape { kind: hint.kind, z, y, attach, general, g, f, from_z })
}

impl ConstructionShape {
    fn attach_in_g(&self, h: &VoGraph) -> VertexSet {
        self.g.vertex_set(&h.set_labels(self.attach)).expect("attach survives in g")
    }

    /// Every neighbour in `F` of an attach vertex hit by an arc from `z`
    /// sends its arc into that vertex.
    pub fn arc_condition(&self) -> bool {
        self.from_z.iter().all(|x| {
            let xi = self.g.index_of(x).expect("attach vertex in g");
            self.g.neighbors(xi).iter().all(|v| {
                let in_f = self.f.index_of(self.g.label(v)).is_some();
                !in_f || self.g.has_arc(v, xi)
            })
        })
    }
}

/// Sufficient conditions from the vertex-attachment constructions. `None` means
/// no rule applies, never that the graph fails to be Cohen-Macaulay.
pub fn classify_construction(h: &VoGraph, hint: &ConstructionHint, field: Field) -> Result<Option<CmReport>> {
    let shape = construction_shape(h, hint)?;
    let special = h.weight(shape.z) == 1;
    let gu = shape.g.underlying();
    let attach = shape.attach_in_g(h);
    let k = attach.len();
    let minimal = minimal_vertex_covers(&gu)?;
    let in_some_minimal = minimal.iter().any(|c| attach.is_subset(*c));
    let is_minimal = minimal.contains(&attach);
    let sub_minimal = attach.iter().any(|x| minimal.contains(&attach.without(x))) && k >= 2;
    let arc_ok = shape.arc_condition();
    let cm_g = || -> Result<bool> { Ok(cm_auto(&shape.g, field)?.is_cm) };
    let cm_f = || -> Result<bool> { Ok(cm_auto(&shape.f, field)?.is_cm) };
    let found = |rule: &str| Ok(Some(CmReport::new(true, Method::Construction, rule)));

    match shape.kind {
        ConstructionKind::First => {
            let y = shape.y.expect("first construction has a leaf");
            if shape.general && h.has_arc(y, shape.z) && in_some_minimal {
                if is_minimal && cm_g()? {
                    return found("first construction, attach set a minimal cover");
                }
                if cm_g()? && cm_f()? {
                    return found("first construction, attach set inside a minimal cover");
                }
            }
            if special && in_some_minimal && arc_ok {
                if is_minimal && cm_g()? {
                    return found("mixed first construction, attach set a minimal cover");
                }
                if cm_g()? && cm_f()? {
                    return found("mixed first construction, attach set inside a minimal cover");
                }
            }
        }
        ConstructionKind::Second => {
            let height_g = minimal.iter().map(|c| c.len()).min().unwrap_or(0);
            let height_ok = || -> Result<bool> { Ok(min_cover_containing(&gu, attach)? == height_g + 1) };
            let (cor, prop) = if shape.general {
                ("second construction, all but one attached vertex a minimal cover", "second construction, height step")
            } else {
                ("mixed second construction, all but one attached vertex a minimal cover", "mixed second construction, height step")
            };
            let conditions_ok = shape.general || arc_ok;
            if conditions_ok {
                if sub_minimal && cm_g()? {
                    return found(cor);
                }
                if !in_some_minimal && height_ok()? && cm_g()? && cm_f()? {
                    return found(prop);
                }
            }
            if shape.general && special && arc_ok && sub_minimal && cm_g()? {
                return found("mixed second construction, all but one attached vertex a minimal cover");
            }
        }
    }
    Ok(None)
}

/// Unmixedness through the strong covers.
pub fn unmixed(g: &VoGraph) -> Result<bool> {
    is_unmixed(g)
}
