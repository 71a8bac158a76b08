//! Cutting sets, the finite coverings `Γ_D^(r)`, finite windows of the
//! infinite covering, and quotients by powers of the Nakayama permutation.
//!
//! Sheet `j` of a half-edge `h` is written `h@j`. With `D(v) = h_n` and
//! `h_1 = ρ(h_n)`, the cover rotates `h_i@j ↦ h_{i+1}@j` and
//! `h_n@j ↦ h_1@(j+1)`.
//!
//! On the cover `ν` moves a half-edge at `v` forward by `m(v)` sheets, so the
//! cover is admissible iff `m(u) ≡ m(w) (mod r)` along every edge, and its
//! `ν`-orbits have size `r / gcd(m, r)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::afbg::{quotient_by_group, Afbg};
use crate::error::{Error, Result};
use crate::format::CutEntry;
use crate::perm::Perm;
use crate::ribbon::{RibbonGraph, RibbonParts};

/// One half-edge `D(v)` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuttingSet(Vec<usize>);

impl CuttingSet {
    pub fn new(g: &RibbonGraph, cut: Vec<usize>) -> Result<Self> {
        if cut.len() != g.num_vertices() {
            return Err(Error::InvalidCut(format!("expected {} entries, got {}", g.num_vertices(), cut.len())));
        }
        for (v, &h) in cut.iter().enumerate() {
            if h >= g.num_half_edges() || g.attach(h) != v {
                return Err(Error::InvalidCut(format!("entry for vertex `{}` is not attached to it", g.vertex_id(v))));
            }
        }
        Ok(CuttingSet(cut))
    }

    pub fn from_entries(g: &RibbonGraph, entries: &[CutEntry]) -> Result<Self> {
        let mut cut = vec![None; g.num_vertices()];
        for entry in entries {
            let v = g.vertex_index(&entry.vertex).map_err(|_| Error::InvalidCut(format!("unknown vertex `{}`", entry.vertex)))?;
            let h = g
                .half_edge_index(&entry.half_edge)
                .map_err(|_| Error::InvalidCut(format!("unknown half-edge `{}`", entry.half_edge)))?;
            if g.attach(h) != v {
                return Err(Error::InvalidCut(format!("`{}` is not attached to `{}`", entry.half_edge, entry.vertex)));
            }
            if cut[v].replace(h).is_some() {
                return Err(Error::InvalidCut(format!("vertex `{}` is cut twice", entry.vertex)));
            }
        }
        let cut = cut
            .into_iter()
            .enumerate()
            .map(|(v, h)| h.ok_or_else(|| Error::InvalidCut(format!("vertex `{}` has no cut", g.vertex_id(v)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(CuttingSet(cut))
    }

    /// Cuts every vertex just before the first half-edge of its rotation as listed.
    pub fn before_first(g: &RibbonGraph) -> Self {
        CuttingSet((0..g.num_vertices()).map(|v| g.rot_inv(g.star(v)[0])).collect())
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_entries(&self, g: &RibbonGraph) -> Vec<CutEntry> {
        self.0
            .iter()
            .enumerate()
            .map(|(v, &h)| CutEntry { vertex: g.vertex_id(v).to_string(), half_edge: g.half_edge_id(h).to_string() })
            .collect()
    }

    fn is_cut(&self, g: &RibbonGraph, h: usize) -> bool {
        self.0[g.attach(h)] == h
    }
}

/// `(h_1, …, h_n)` at `v`, ending at the cut half-edge.
pub fn ordering_from_cut(g: &RibbonGraph, cut: &CuttingSet, v: usize) -> Vec<usize> {
    let hn = cut.get(v);
    let mut out = Vec::with_capacity(g.valency(v));
    let mut h = g.rot(hn);
    loop {
        out.push(h);
        if h == hn {
            return out;
        }
        h = g.rot(h);
    }
}

/// A finite cover together with its projection onto the base.
#[derive(Debug, Clone)]
pub struct Covering {
    pub afbg: Afbg,
    /// Base half-edge of each cover half-edge.
    pub projection: Vec<usize>,
    pub sheet: Vec<usize>,
    pub sheets: usize,
}

fn check_brauer(a: &Afbg) -> Result<()> {
    match (0..a.graph().num_vertices()).find(|&v| !a.multiplicity(v).is_integer()) {
        Some(v) => Err(Error::NotABrauerGraph(a.graph().vertex_id(v).to_string())),
        None => Ok(()),
    }
}

/// Builds `Γ_D^(r)`. Cover half-edge `h@j` has index `j·|H| + h`; edges are
/// listed sheet by sheet.
pub fn cover_finite(a: &Afbg, cut: &CuttingSet, r: usize) -> Result<Covering> {
    if r == 0 {
        return Err(Error::BadSheetCount);
    }
    check_brauer(a)?;
    let g = a.graph();
    CuttingSet::new(g, cut.as_slice().to_vec())?;
    let nh = g.num_half_edges();
    let idx = |h: usize, j: usize| j * nh + h;
    let mut rotation = vec![0; r * nh];
    let mut half_edge_ids = Vec::with_capacity(r * nh);
    let mut attach = Vec::with_capacity(r * nh);
    for j in 0..r {
        for h in 0..nh {
            let next_sheet = if cut.is_cut(g, h) { (j + 1) % r } else { j };
            rotation[idx(h, j)] = idx(g.rot(h), next_sheet);
            half_edge_ids.push(format!("{}@{j}", g.half_edge_id(h)));
            attach.push(g.attach(h));
        }
    }
    let mut edges = Vec::with_capacity(r * g.num_edges());
    let mut edge_ids = Vec::with_capacity(r * g.num_edges());
    for j in 0..r {
        for (e, &[x, y]) in g.edges().iter().enumerate() {
            edges.push([idx(x, j), idx(y, j)]);
            edge_ids.push(format!("{}@{j}", g.edge_id(e)));
        }
    }
    let parts = RibbonParts {
        vertex_ids: g.vertex_ids().to_vec(),
        half_edge_ids,
        edge_ids: Some(edge_ids),
        edges,
        attach,
        rotation,
    };
    let cover = RibbonGraph::from_parts(parts)?;
    let afbg = Afbg::new(cover, a.degrees().clone()).map_err(|e| Error::CoverNotAdmissible(e.to_string()))?;
    Ok(Covering {
        afbg,
        projection: (0..r * nh).map(|x| x % nh).collect(),
        sheet: (0..r * nh).map(|x| x / nh).collect(),
        sheets: r,
    })
}

/// Quotient by `⟨ν^k⟩`; `k` must divide the order of `ν`.
pub fn quotient_by_nakayama_power(a: &Afbg, k: usize) -> Result<Afbg> {
    let order = a.nakayama_order();
    if k == 0 || !order.is_multiple_of(k) {
        return Err(Error::NonDivisorPower { power: k, order });
    }
    quotient_by_group(a, &a.nakayama().pow(k))
}

/// Checks that `projection` is a covering map `cover → base`: it respects
/// vertices, degrees, `ι` and `ρ`, and all fibres have the same size.
pub fn verify_covering(cover: &Afbg, base: &Afbg, projection: &[usize]) -> bool {
    let (c, b) = (cover.graph(), base.graph());
    if projection.len() != c.num_half_edges() || projection.iter().any(|&p| p >= b.num_half_edges()) {
        return false;
    }
    for h in 0..c.num_half_edges() {
        let p = projection[h];
        if c.vertex_id(c.attach(h)) != b.vertex_id(b.attach(p))
            || cover.degree_of_half_edge(h) != base.degree_of_half_edge(p)
            || projection[c.pair(h)] != b.pair(p)
            || projection[c.rot(h)] != b.rot(p)
        {
            return false;
        }
    }
    let mut fibre = vec![0usize; b.num_half_edges()];
    for &p in projection {
        fibre[p] += 1;
    }
    fibre.iter().all(|&f| f == fibre[0])
}

/// Sheets `lo..=hi` of the infinite covering. `ρ` is undefined at the cut
/// half-edges of the last sheet.
#[derive(Debug, Clone)]
pub struct BorderedGraph {
    pub lo: i64,
    pub hi: i64,
    pub half_edge_ids: Vec<String>,
    pub edge_ids: Vec<String>,
    pub vertex_ids: Vec<String>,
    pub attach: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub edge_of: Vec<usize>,
    pub rotation: Vec<Option<usize>>,
    pub degrees: Vec<u32>,
    pub projection: Vec<usize>,
}

pub fn cover_window(a: &Afbg, cut: &CuttingSet, lo: i64, hi: i64) -> Result<BorderedGraph> {
    if lo > hi {
        return Err(Error::BadWindow { lo, hi });
    }
    check_brauer(a)?;
    let g = a.graph();
    CuttingSet::new(g, cut.as_slice().to_vec())?;
    let nh = g.num_half_edges();
    let ns = (hi - lo + 1) as usize;
    let idx = |h: usize, s: usize| s * nh + h;
    let mut rotation = vec![None; ns * nh];
    let mut half_edge_ids = Vec::new();
    let mut attach = Vec::new();
    let mut edge_of = vec![0; ns * nh];
    let mut edges = Vec::new();
    let mut edge_ids = Vec::new();
    for s in 0..ns {
        let j = lo + s as i64;
        for h in 0..nh {
            let next = if cut.is_cut(g, h) { s + 1 } else { s };
            if next < ns {
                rotation[idx(h, s)] = Some(idx(g.rot(h), next));
            }
            half_edge_ids.push(format!("{}@{j}", g.half_edge_id(h)));
            attach.push(g.attach(h));
        }
        for (e, &[x, y]) in g.edges().iter().enumerate() {
            edge_of[idx(x, s)] = edges.len();
            edge_of[idx(y, s)] = edges.len();
            edges.push([idx(x, s), idx(y, s)]);
            edge_ids.push(format!("{}@{j}", g.edge_id(e)));
        }
    }
    Ok(BorderedGraph {
        lo,
        hi,
        half_edge_ids,
        edge_ids,
        vertex_ids: g.vertex_ids().to_vec(),
        attach,
        edges,
        edge_of,
        rotation,
        degrees: a.degrees().as_slice().to_vec(),
        projection: (0..ns * nh).map(|x| x % nh).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowArrow {
    pub id: String,
    pub source: usize,
    /// `None` for an arrow leaving the window.
    pub target: Option<usize>,
}

/// Quiver of a window with the relations that lie entirely inside it.
/// Paths are in application order; zero relations are `(later, earlier)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowPresentation {
    pub vertex_ids: Vec<String>,
    pub arrows: Vec<WindowArrow>,
    pub commutations: Vec<(Vec<usize>, Vec<usize>)>,
    pub zeros: Vec<(usize, usize)>,
}

impl BorderedGraph {
    pub fn num_half_edges(&self) -> usize {
        self.half_edge_ids.len()
    }

    fn degree(&self, h: usize) -> u32 {
        self.degrees[self.attach[h]]
    }

    fn pair(&self, h: usize) -> usize {
        let [x, y] = self.edges[self.edge_of[h]];
        if x == h {
            y
        } else {
            x
        }
    }

    /// `None` unless every arrow of the walk lands inside the window.
    fn walk(&self, h: usize, len: u32) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(len as usize);
        let mut x = h;
        for _ in 0..len {
            out.push(x);
            x = self.rotation[x]?;
        }
        Some(out)
    }

    pub fn presentation(&self) -> WindowPresentation {
        let arrows = (0..self.num_half_edges())
            .map(|h| WindowArrow {
                id: format!("a_{}", self.half_edge_ids[h]),
                source: self.edge_of[h],
                target: self.rotation[h].map(|x| self.edge_of[x]),
            })
            .collect();
        let commutations = self
            .edges
            .iter()
            .filter_map(|&[x, y]| {
                Some((self.walk(x, self.degree(x))?, self.walk(y, self.degree(y))?))
            })
            .collect();
        let zeros = (0..self.num_half_edges())
            .filter_map(|h| Some((self.pair(self.rotation[h]?), h)))
            .collect();
        WindowPresentation { vertex_ids: self.edge_ids.clone(), arrows, commutations, zeros }
    }
}

impl WindowPresentation {
    pub fn with_aliases(mut self, aliases: &HashMap<String, String>) -> Self {
        for a in &mut self.arrows {
            if let Some(new) = aliases.get(&a.id) {
                a.id = new.clone();
            }
        }
        self
    }

    pub fn dangling(&self) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target.is_none()).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("window quiver: {} vertices, {} arrows\n", self.vertex_ids.len(), self.arrows.len());
        for a in &self.arrows {
            let to = a.target.map_or("(outside window)".to_string(), |t| self.vertex_ids[t].clone());
            s.push_str(&format!("  {}: {} -> {}\n", a.id, self.vertex_ids[a.source], to));
        }
        let render = |p: &[usize]| p.iter().rev().map(|&x| self.arrows[x].id.as_str()).collect::<Vec<_>>().join(" ");
        s.push_str("relations inside the window:\n");
        for (l, r) in &self.commutations {
            s.push_str(&format!("  {} = {}\n", render(l), render(r)));
        }
        for &(later, earlier) in &self.zeros {
            s.push_str(&format!("  {} = 0\n", render(&[earlier, later])));
        }
        s
    }
}

/// The permutation of cover half-edges induced by shifting one sheet.
pub fn deck_shift(c: &Covering) -> Perm {
    let nh = c.projection.len() / c.sheets;
    Perm::from_images((0..c.projection.len()).map(|x| (x + nh) % (c.sheets * nh)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::lambda;
    use crate::presentation::{build_presentation, dimension};

    fn cut(a: &Afbg, ids: &[&str]) -> CuttingSet {
        let g = a.graph();
        CuttingSet::new(g, ids.iter().map(|h| g.half_edge_index(h).unwrap()).collect()).unwrap()
    }

    #[test]
    fn orderings_on_lambda() {
        let a = lambda();
        let g = a.graph();
        let d1 = cut(&a, &["h'", "ih'"]);
        let names = |v: Vec<usize>| v.into_iter().map(|h| g.half_edge_id(h).to_string()).collect::<Vec<_>>();
        assert_eq!(names(ordering_from_cut(g, &d1, 0)), ["h", "h'"]);
        let d2 = cut(&a, &["h'", "ih"]);
        assert_eq!(names(ordering_from_cut(g, &d2, 1)), ["ih'", "ih"]);
    }

    #[test]
    fn bad_cuts() {
        let a = lambda();
        let g = a.graph();
        assert!(matches!(CuttingSet::new(g, vec![0, 0]), Err(Error::InvalidCut(_))));
        let e = |v: &str, h: &str| CutEntry { vertex: v.into(), half_edge: h.into() };
        assert!(CuttingSet::from_entries(g, &[e("u", "h")]).is_err());
        assert!(CuttingSet::from_entries(g, &[e("u", "h"), e("u", "h'")]).is_err());
        assert!(CuttingSet::from_entries(g, &[e("u", "ih"), e("w", "ih'")]).is_err());
        assert!(CuttingSet::from_entries(g, &[e("u", "h"), e("w", "ih'")]).is_ok());
    }

    #[test]
    fn double_cover_of_lambda() {
        let a = lambda();
        let c = cover_finite(&a, &cut(&a, &["h'", "ih'"]), 2).unwrap();
        let g = c.afbg.graph();
        assert_eq!((g.num_vertices(), g.num_edges(), g.num_half_edges()), (2, 4, 8));
        assert_eq!(dimension(&c.afbg), 16);
        assert_eq!(c.afbg.nakayama().cycle_type(), vec![2; 4]);
        assert_eq!(c.afbg.multiplicity(0).to_string(), "1/2");
        assert!(verify_covering(&c.afbg, &a, &c.projection));
        assert!(c.afbg.reduced_form().is_isomorphic_to(&a).unwrap().is_some());
        // multiplicity one: ν is the sheet shift
        assert_eq!(c.afbg.nakayama(), &deck_shift(&c));
    }

    #[test]
    fn single_sheet_is_the_base() {
        let a = lambda();
        let c = cover_finite(&a, &cut(&a, &["h", "ih"]), 1).unwrap();
        assert!(c.afbg.is_isomorphic_to(&a).unwrap().is_some());
    }

    #[test]
    fn the_two_double_covers_differ() {
        let a = lambda();
        let c1 = cover_finite(&a, &cut(&a, &["h'", "ih'"]), 2).unwrap();
        let c2 = cover_finite(&a, &cut(&a, &["h'", "ih"]), 2).unwrap();
        assert!(c1.afbg.is_isomorphic_to(&c2.afbg).unwrap().is_none());
    }

    #[test]
    fn broken_projection_is_rejected() {
        let a = lambda();
        let c = cover_finite(&a, &cut(&a, &["h'", "ih'"]), 2).unwrap();
        let mut p = c.projection.clone();
        p.swap(0, 1);
        assert!(!verify_covering(&c.afbg, &a, &p));
        assert!(verify_covering(&a, &a, &[0, 1, 2, 3]));
    }

    #[test]
    fn nakayama_quotients() {
        let a = lambda();
        let d1 = cut(&a, &["h'", "ih'"]);
        let c4 = cover_finite(&a, &d1, 4).unwrap();
        let c2 = cover_finite(&a, &d1, 2).unwrap();
        let q = quotient_by_nakayama_power(&c4.afbg, 2).unwrap();
        assert!(q.is_isomorphic_to(&c2.afbg).unwrap().is_some());
        let q1 = quotient_by_nakayama_power(&c2.afbg, 1).unwrap();
        assert!(q1.is_isomorphic_to(&a).unwrap().is_some());
        let full = quotient_by_nakayama_power(&c4.afbg, 4).unwrap();
        assert!(full.is_isomorphic_to(&c4.afbg).unwrap().is_some());
        assert_eq!(quotient_by_nakayama_power(&c4.afbg, 3).unwrap_err(), Error::NonDivisorPower { power: 3, order: 4 });
    }

    #[test]
    fn non_brauer_base_is_rejected() {
        let c2 = cover_finite(&lambda(), &cut(&lambda(), &["h'", "ih'"]), 2).unwrap();
        let d = CuttingSet::before_first(c2.afbg.graph());
        assert!(matches!(cover_finite(&c2.afbg, &d, 2), Err(Error::NotABrauerGraph(_))));
    }

    #[test]
    fn windows() {
        let a = lambda();
        let w = cover_window(&a, &cut(&a, &["h'", "ih'"]), 0, 1).unwrap();
        let p = w.presentation();
        assert_eq!((p.vertex_ids.len(), p.arrows.len(), p.dangling().len()), (4, 8, 2));
        let w0 = cover_window(&a, &cut(&a, &["h'", "ih'"]), 0, 0).unwrap();
        assert_eq!(w0.presentation().dangling().len(), 2);
        assert!(matches!(cover_window(&a, &cut(&a, &["h'", "ih'"]), 1, 0), Err(Error::BadWindow { .. })));
        // the quiver of a finite cover is the window with its ends glued
        let c = cover_finite(&a, &cut(&a, &["h'", "ih'"]), 2).unwrap();
        assert_eq!(build_presentation(&c.afbg).arrows().len(), p.arrows.len());
    }
}
