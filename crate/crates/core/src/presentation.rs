//! Bound-quiver presentation of the algebra of an admissible graph.
//!
//! Quiver vertices are the edges of the graph and there is one arrow
//! `α_h: edge(h) → edge(ρ h)` per half-edge, so arrow indices coincide with
//! half-edge indices. Paths compose right to left; a [`Walk`] of length `m`
//! from `h` is `α_{ρ^{m-1} h} ⋯ α_{ρ h} α_h`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::afbg::Afbg;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
    /// `d(s(h))` for the half-edge `h` of the arrow.
    pub degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub start: usize,
    pub len: u32,
}

impl Walk {
    /// Arrows in the order they are applied (first arrow first).
    pub fn arrows(&self, a: &Afbg) -> Vec<usize> {
        let g = a.graph();
        let mut out = Vec::with_capacity(self.len as usize);
        let mut h = self.start;
        for _ in 0..self.len {
            out.push(h);
            h = g.rot(h);
        }
        out
    }

    pub fn target_edge(&self, a: &Afbg) -> usize {
        let g = a.graph();
        g.edge_of(g.rot_pow(self.start, self.len as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    vertex_ids: Vec<String>,
    arrows: Vec<Arrow>,
    /// Both sides in application order.
    commutations: Vec<(Vec<usize>, Vec<usize>)>,
    /// `(later, earlier)`: `later · earlier = 0`.
    zeros: Vec<(usize, usize)>,
}

/// Relations for each edge `{h, g}`: `Walk(h, d) = Walk(g, d')`; for each
/// half-edge `h`: `α_{ι ρ h} α_h = 0`.
pub fn build_presentation(a: &Afbg) -> Presentation {
    let g = a.graph();
    let arrows = (0..g.num_half_edges())
        .map(|h| Arrow {
            id: format!("a_{}", g.half_edge_id(h)),
            source: g.edge_of(h),
            target: g.edge_of(g.rot(h)),
            degree: a.degree_of_half_edge(h),
        })
        .collect();
    let commutations = g
        .edges()
        .iter()
        .map(|&[h, k]| {
            let wh = Walk { start: h, len: a.degree_of_half_edge(h) };
            let wk = Walk { start: k, len: a.degree_of_half_edge(k) };
            assert_eq!(wh.target_edge(a), wk.target_edge(a), "commutation sides end at different vertices");
            (wh.arrows(a), wk.arrows(a))
        })
        .collect();
    let zeros = (0..g.num_half_edges()).map(|h| (g.pair(g.rot(h)), h)).collect();
    Presentation { vertex_ids: g.edge_ids().to_vec(), arrows, commutations, zeros }
}

impl Presentation {
    /// Reads an exported presentation. The degree of an arrow is the length
    /// of the commutation side it starts, or 0.
    pub fn from_file(f: &PresentationFile) -> Result<Self> {
        let vindex: HashMap<&str, usize> = f.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let vertex = |id: &str| vindex.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()));
        let aindex: HashMap<&str, usize> = f.arrows.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
        let arrow = |id: &str| aindex.get(id).copied().ok_or_else(|| Error::Parse(format!("unknown arrow `{id}`")));
        let mut arrows = f
            .arrows
            .iter()
            .map(|a| Ok(Arrow { id: a.id.clone(), source: vertex(&a.from)?, target: vertex(&a.to)?, degree: 0 }))
            .collect::<Result<Vec<_>>>()?;
        let path = |p: &[String]| p.iter().rev().map(|x| arrow(x)).collect::<Result<Vec<_>>>();
        let commutations = f
            .commutation_relations
            .iter()
            .map(|[l, r]| Ok((path(l)?, path(r)?)))
            .collect::<Result<Vec<(Vec<usize>, Vec<usize>)>>>()?;
        for (l, r) in &commutations {
            for side in [l, r] {
                if let Some(&first) = side.first() {
                    arrows[first].degree = arrows[first].degree.max(side.len() as u32);
                }
            }
        }
        let zeros = f.zero_relations.iter().map(|[l, e]| Ok((arrow(l)?, arrow(e)?))).collect::<Result<Vec<_>>>()?;
        Ok(Presentation { vertex_ids: f.vertices.clone(), arrows, commutations, zeros })
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn commutations(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.commutations
    }

    pub fn zeros(&self) -> &[(usize, usize)] {
        &self.zeros
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    /// Renames arrows; ids missing from `aliases` are kept.
    pub fn with_aliases(mut self, aliases: &HashMap<String, String>) -> Self {
        for arrow in &mut self.arrows {
            if let Some(new) = aliases.get(&arrow.id) {
                arrow.id = new.clone();
            }
        }
        self
    }

    pub fn with_vertex_ids(mut self, ids: Vec<String>) -> Self {
        assert_eq!(ids.len(), self.vertex_ids.len());
        self.vertex_ids = ids;
        self
    }

    /// Path given in application order, rendered right to left.
    pub fn render_path(&self, path: &[usize], sep: &str) -> String {
        path.iter().rev().map(|&a| self.arrows[a].id.as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Relations as strings: `"p - q"` for commutations, `"p"` for zeros.
    /// Commutation sides are ordered lexicographically.
    pub fn relation_strings(&self, sep: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for (l, r) in &self.commutations {
            let mut sides = [self.render_path(l, sep), self.render_path(r, sep)];
            sides.sort();
            out.insert(format!("{} - {}", sides[0], sides[1]));
        }
        for &(later, earlier) in &self.zeros {
            out.insert(self.render_path(&[earlier, later], sep));
        }
        out
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.target == v).count()
    }

    pub fn to_file(&self) -> PresentationFile {
        let id = |a: usize| self.arrows[a].id.clone();
        PresentationFile {
            vertices: self.vertex_ids.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    id: a.id.clone(),
                    from: self.vertex_ids[a.source].clone(),
                    to: self.vertex_ids[a.target].clone(),
                })
                .collect(),
            commutation_relations: self
                .commutations
                .iter()
                .map(|(l, r)| [l.iter().rev().map(|&a| id(a)).collect(), r.iter().rev().map(|&a| id(a)).collect()])
                .collect(),
            zero_relations: self.zeros.iter().map(|&(later, earlier)| [id(later), id(earlier)]).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("quiver: {} vertices, {} arrows\n", self.num_vertices(), self.arrows.len()));
        for a in &self.arrows {
            s.push_str(&format!("  {}: {} -> {}\n", a.id, self.vertex_ids[a.source], self.vertex_ids[a.target]));
        }
        s.push_str(&format!("relations ({} commutation, {} zero):\n", self.commutations.len(), self.zeros.len()));
        for (l, r) in &self.commutations {
            s.push_str(&format!("  {} = {}\n", self.render_path(l, " "), self.render_path(r, " ")));
        }
        for &(later, earlier) in &self.zeros {
            s.push_str(&format!("  {} = 0\n", self.render_path(&[earlier, later], " ")));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// Export format. Paths are listed later arrow first, as they are written.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    pub commutation_relations: Vec<[Vec<String>; 2]>,
    pub zero_relations: Vec<[String; 2]>,
}

/// The cycle `C_α` of every arrow: the arrows of the star of its half-edge
/// starting at it.
pub fn special_cycles(a: &Afbg) -> Vec<Vec<usize>> {
    let g = a.graph();
    (0..g.num_half_edges())
        .map(|h| Walk { start: h, len: g.valency(g.attach(h)) as u32 }.arrows(a))
        .collect()
}

/// `Σ_v val(v)·d(v)`.
pub fn dimension(a: &Afbg) -> usize {
    let g = a.graph();
    (0..g.num_vertices()).map(|v| g.valency(v) * a.degrees().get(v) as usize).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub walk: Walk,
    /// The other description of the same element, for idempotents and
    /// full-length walks.
    pub equal_to: Option<Walk>,
}

/// Basis of walks, per edge: the idempotent, the proper walks from either
/// half-edge, and the common full-length walk.
pub fn basis(a: &Afbg) -> Vec<BasisElement> {
    let g = a.graph();
    let mut out = Vec::with_capacity(dimension(a));
    for &[h, k] in g.edges() {
        let (dh, dk) = (a.degree_of_half_edge(h), a.degree_of_half_edge(k));
        out.push(BasisElement { walk: Walk { start: h, len: 0 }, equal_to: Some(Walk { start: k, len: 0 }) });
        out.extend((1..dh).map(|m| BasisElement { walk: Walk { start: h, len: m }, equal_to: None }));
        out.extend((1..dk).map(|m| BasisElement { walk: Walk { start: k, len: m }, equal_to: None }));
        out.push(BasisElement { walk: Walk { start: h, len: dh }, equal_to: Some(Walk { start: k, len: dk }) });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveLoewy {
    pub top: usize,
    /// Radical layers along each half-edge of the edge, excluding top and socle.
    pub strands: [Vec<usize>; 2],
    pub socle: usize,
}

impl ProjectiveLoewy {
    pub fn is_uniserial(&self) -> bool {
        self.strands.iter().any(Vec::is_empty)
    }

    pub fn dimension(&self) -> usize {
        2 + self.strands[0].len() + self.strands[1].len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoewyTable {
    pub labels: Vec<String>,
    pub projectives: Vec<ProjectiveLoewy>,
}

pub fn loewy_table(a: &Afbg) -> LoewyTable {
    let g = a.graph();
    let strand = |h: usize| -> Vec<usize> {
        let d = a.degree_of_half_edge(h) as i64;
        (1..d).map(|m| g.edge_of(g.rot_pow(h, m))).collect()
    };
    let projectives = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &[h, k])| {
            let socle = g.edge_of(a.nakayama().apply(h));
            assert_eq!(socle, g.edge_of(a.nakayama().apply(k)), "socle differs between strands");
            ProjectiveLoewy { top: e, strands: [strand(h), strand(k)], socle }
        })
        .collect();
    LoewyTable { labels: g.edge_ids().to_vec(), projectives }
}

/// Action of the Nakayama automorphism of the algebra:
/// `e_{h̄} ↦ e over ρ^{-d(s h)}(h)` and `α_h ↦ α_{ρ^{-d(s h)}(h)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakayamaAction {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl NakayamaAction {
    pub fn vertex_orbit_sizes(&self) -> Vec<usize> {
        crate::perm::Perm::from_images(self.vertex_map.clone()).cycle_type()
    }
}

pub fn nakayama_on_presentation(a: &Afbg) -> NakayamaAction {
    let g = a.graph();
    let inv = a.nakayama().inverse();
    let arrow_map: Vec<usize> = (0..g.num_half_edges()).map(|h| inv.apply(h)).collect();
    let vertex_map = g
        .edges()
        .iter()
        .map(|&[h, k]| {
            let e = g.edge_of(inv.apply(h));
            assert_eq!(e, g.edge_of(inv.apply(k)), "Nakayama action not defined on edges");
            e
        })
        .collect();
    NakayamaAction { vertex_map, arrow_map }
}

/// An isomorphism of presentations `p → q` as (vertex map, arrow map),
/// matching the quivers and the relation sets. Exhaustive search, meant for
/// small quivers.
pub fn presentation_isomorphism(p: &Presentation, q: &Presentation) -> Option<(Vec<usize>, Vec<usize>)> {
    if p.num_vertices() != q.num_vertices()
        || p.arrows.len() != q.arrows.len()
        || p.commutations.len() != q.commutations.len()
        || p.zeros.len() != q.zeros.len()
    {
        return None;
    }
    let target_rel = relation_keys(q, &(0..q.arrows.len()).collect::<Vec<_>>());
    let mut vmap = vec![usize::MAX; p.num_vertices()];
    let mut vused = vec![false; q.num_vertices()];
    let mut amap = vec![usize::MAX; p.arrows.len()];
    let mut aused = vec![false; q.arrows.len()];
    fn bind(vmap: &mut [usize], vused: &mut [bool], v: usize, w: usize) -> Option<bool> {
        if vmap[v] == usize::MAX {
            if vused[w] {
                return None;
            }
            vmap[v] = w;
            vused[w] = true;
            Some(true)
        } else if vmap[v] == w {
            Some(false)
        } else {
            None
        }
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        p: &Presentation,
        q: &Presentation,
        vmap: &mut Vec<usize>,
        vused: &mut Vec<bool>,
        amap: &mut Vec<usize>,
        aused: &mut Vec<bool>,
        target: &RelationKeys,
    ) -> bool {
        if i == p.arrows.len() {
            // Every quiver vertex carries an arrow in connected inputs; bind the rest.
            let free: Vec<usize> = (0..q.num_vertices()).filter(|&w| !vused[w]).collect();
            for (v, &w) in vmap.iter_mut().filter(|v| **v == usize::MAX).zip(&free) {
                *v = w;
            }
            return relation_keys(p, amap) == *target;
        }
        let (s, t) = (p.arrows[i].source, p.arrows[i].target);
        for j in 0..q.arrows.len() {
            if aused[j] {
                continue;
            }
            let Some(bs) = bind(vmap, vused, s, q.arrows[j].source) else { continue };
            let Some(bt) = bind(vmap, vused, t, q.arrows[j].target) else {
                if bs {
                    vused[vmap[s]] = false;
                    vmap[s] = usize::MAX;
                }
                continue;
            };
            amap[i] = j;
            aused[j] = true;
            let snapshot = vmap.clone();
            if go(i + 1, p, q, vmap, vused, amap, aused, target) {
                return true;
            }
            *vmap = snapshot;
            aused[j] = false;
            amap[i] = usize::MAX;
            if bt {
                vused[vmap[t]] = false;
                vmap[t] = usize::MAX;
            }
            if bs && vmap[s] != usize::MAX {
                vused[vmap[s]] = false;
                vmap[s] = usize::MAX;
            }
        }
        false
    }
    if go(0, p, q, &mut vmap, &mut vused, &mut amap, &mut aused, &target_rel) {
        Some((vmap, amap))
    } else {
        None
    }
}

/// Commutation and zero relations in arrow indices, order-free.
type RelationKeys = (BTreeSet<(Vec<usize>, Vec<usize>)>, BTreeSet<(usize, usize)>);

fn relation_keys(p: &Presentation, amap: &[usize]) -> RelationKeys {
    let comm = p
        .commutations
        .iter()
        .map(|(l, r)| {
            let l: Vec<usize> = l.iter().map(|&a| amap[a]).collect();
            let r: Vec<usize> = r.iter().map(|&a| amap[a]).collect();
            if l <= r {
                (l, r)
            } else {
                (r, l)
            }
        })
        .collect();
    let zeros = p.zeros.iter().map(|&(x, y)| (amap[x], amap[y])).collect();
    (comm, zeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::lambda;
    use crate::afbg::DegreeFunction;
    use crate::format::RibbonSpec;
    use crate::ribbon::build_ribbon_graph;

    fn lambda_aliases() -> HashMap<String, String> {
        [("a_h", "x1"), ("a_h'", "x2"), ("a_ih", "y1"), ("a_ih'", "y2")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn single_edge(d: u32) -> Afbg {
        let spec = RibbonSpec::from_rotations(&[("u", Some(d), &["h"]), ("w", Some(d), &["g"])], &[("h", "g")]);
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::from_spec(&g, &spec).unwrap();
        Afbg::new(g, d).unwrap()
    }

    #[test]
    fn lambda_relations_match_the_reference_ideal() {
        let p = build_presentation(&lambda()).with_aliases(&lambda_aliases());
        assert_eq!(p.num_vertices(), 2);
        assert_eq!(p.arrows().len(), 4);
        let expected: BTreeSet<String> =
            ["x1x2 - y1y2", "x2x1 - y2y1", "y2x1", "x1y2", "x2y1", "y1x2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(p.relation_strings(""), expected);
        // x1, y1: 1 → 2 and x2, y2: 2 → 1.
        let a = p.arrows();
        assert_eq!((a[0].source, a[0].target), (0, 1));
        assert_eq!((a[1].source, a[1].target), (1, 0));
        assert_eq!((a[2].source, a[2].target), (0, 1));
        assert_eq!((a[3].source, a[3].target), (1, 0));
    }

    #[test]
    fn truncated_single_edge() {
        let a = single_edge(1);
        let p = build_presentation(&a);
        assert_eq!(p.num_vertices(), 1);
        assert_eq!(p.arrows().len(), 2);
        assert!(p.arrows().iter().all(|x| x.source == 0 && x.target == 0));
        assert_eq!(p.commutations(), &[(vec![0], vec![1])]);
        assert_eq!(p.zeros(), &[(1, 0), (0, 1)]);
        assert_eq!(dimension(&a), 2);
        let t = loewy_table(&a);
        assert!(t.projectives[0].is_uniserial());
        assert_eq!(t.projectives[0].dimension(), 2);
    }

    #[test]
    fn lambda_dimension_basis_and_cycles() {
        let a = lambda();
        assert_eq!(dimension(&a), 8);
        let b = basis(&a);
        assert_eq!(b.len(), 8);
        // Edge 1: e1, x1, y1 and x2x1 = y2y1.
        let slice: Vec<_> = b.iter().filter(|x| a.graph().edge_of(x.walk.start) == 0).collect();
        assert_eq!(slice.len(), 4);
        assert_eq!(slice[3].walk, Walk { start: 0, len: 2 });
        assert_eq!(slice[3].equal_to, Some(Walk { start: 2, len: 2 }));
        assert_eq!(special_cycles(&a)[0], vec![0, 1]);
    }

    #[test]
    fn lambda_loewy_table() {
        let t = loewy_table(&lambda());
        let p1 = &t.projectives[0];
        assert_eq!((p1.top, p1.strands.clone(), p1.socle), (0, [vec![1], vec![1]], 0));
        assert!(!p1.is_uniserial());
        let total: usize = t.projectives.iter().map(ProjectiveLoewy::dimension).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn lambda_nakayama_action_is_identity() {
        let act = nakayama_on_presentation(&lambda());
        assert_eq!(act.vertex_map, vec![0, 1]);
        assert_eq!(act.arrow_map, vec![0, 1, 2, 3]);
        let t = loewy_table(&lambda());
        for (e, p) in t.projectives.iter().enumerate() {
            // socle of P_e is the edge whose image is e
            assert_eq!(act.vertex_map[p.socle], e);
        }
    }

    #[test]
    fn special_biserial_shape() {
        let p = build_presentation(&lambda());
        for v in 0..p.num_vertices() {
            assert!(p.out_degree(v) <= 2 && p.in_degree(v) <= 2);
        }
    }

    #[test]
    fn isomorphism_of_presentations() {
        let p = build_presentation(&lambda());
        let q = build_presentation(&lambda()).with_aliases(&lambda_aliases());
        assert!(presentation_isomorphism(&p, &q).is_some());
        assert!(presentation_isomorphism(&p, &build_presentation(&single_edge(2))).is_none());
    }

    #[test]
    fn exported_presentation_reads_back() {
        let p = build_presentation(&lambda());
        assert_eq!(Presentation::from_file(&p.to_file()).unwrap(), p);
    }

    #[test]
    fn export_lists_later_arrow_first() {
        let f = build_presentation(&lambda()).with_aliases(&lambda_aliases()).to_file();
        assert_eq!(f.commutation_relations[0], [vec!["x2".to_string(), "x1".into()], vec!["y2".into(), "y1".into()]]);
        assert_eq!(f.zero_relations[0], ["y2".to_string(), "x1".into()]);
    }
}
