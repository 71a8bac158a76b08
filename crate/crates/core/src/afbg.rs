//! Degree functions, admissibility, the Nakayama permutation, multiplicities,
//! reduced forms and the Brauer-tree test for representation-finiteness.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::RibbonSpec;
use crate::perm::Perm;
use crate::ribbon::{build_ribbon_graph, is_isomorphic, RibbonGraph, RibbonParts};

/// Positive degree per vertex, indexed like the vertices of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeFunction(Vec<u32>);

impl DegreeFunction {
    pub fn new(g: &RibbonGraph, degrees: Vec<u32>) -> Result<Self> {
        if degrees.len() != g.num_vertices() {
            let missing = g.vertex_ids().get(degrees.len()).cloned().unwrap_or_default();
            return Err(Error::MissingDegree(missing));
        }
        if let Some(v) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::NonPositiveDegree(g.vertex_id(v).to_string()));
        }
        Ok(DegreeFunction(degrees))
    }

    /// `d = val`, the degree function of a trivial extension.
    pub fn valency(g: &RibbonGraph) -> Self {
        DegreeFunction((0..g.num_vertices()).map(|v| g.valency(v) as u32).collect())
    }

    pub fn constant(g: &RibbonGraph, d: u32) -> Self {
        assert!(d > 0);
        DegreeFunction(vec![d; g.num_vertices()])
    }

    pub fn from_spec(g: &RibbonGraph, spec: &RibbonSpec) -> Result<Self> {
        let degrees = spec
            .vertices
            .iter()
            .map(|v| v.degree.ok_or_else(|| Error::MissingDegree(v.id.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, degrees)
    }

    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// Exact multiplicity `d(v) / val(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiplicity(pub Ratio<u64>);

impl Multiplicity {
    pub fn new(degree: u64, valency: u64) -> Self {
        Multiplicity(Ratio::new(degree, valency))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `h ↦ ρ^{d(s(h))}(h)`.
pub fn nakayama_permutation(g: &RibbonGraph, d: &DegreeFunction) -> Perm {
    let images = (0..g.num_half_edges())
        .map(|h| g.rot_pow(h, d.get(g.attach(h)) as i64))
        .collect();
    Perm::from_images(images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `ι ν (h) = ν ι (h)`.
    PairingCommutes,
    /// `ι(h)` lies outside the ⟨ν⟩-orbit of `h`.
    PartnerOutsideOrbit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub half_edge: String,
    pub condition: Condition,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.condition {
            Condition::PairingCommutes => write!(f, "{}: pairing does not commute with the Nakayama permutation", self.half_edge),
            Condition::PartnerOutsideOrbit => write!(f, "{}: partner half-edge lies in its Nakayama orbit", self.half_edge),
        }
    }
}

/// A ribbon graph with a degree function satisfying both admissibility
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Afbg {
    graph: RibbonGraph,
    degrees: DegreeFunction,
    nakayama: Perm,
}

/// Checks both conditions on every half-edge and collects all failures.
pub fn is_admissible(g: &RibbonGraph, d: &DegreeFunction) -> std::result::Result<Afbg, Vec<Violation>> {
    let nu = nakayama_permutation(g, d);
    let mut violations = Vec::new();
    let mut orbit_of = vec![usize::MAX; g.num_half_edges()];
    for (k, cycle) in nu.cycles().iter().enumerate() {
        for &h in cycle {
            orbit_of[h] = k;
        }
    }
    for h in 0..g.num_half_edges() {
        if g.pair(nu.apply(h)) != nu.apply(g.pair(h)) {
            violations.push(Violation { half_edge: g.half_edge_id(h).to_string(), condition: Condition::PairingCommutes });
        }
        if orbit_of[g.pair(h)] == orbit_of[h] {
            violations.push(Violation {
                half_edge: g.half_edge_id(h).to_string(),
                condition: Condition::PartnerOutsideOrbit,
            });
        }
    }
    if violations.is_empty() {
        Ok(Afbg { graph: g.clone(), degrees: d.clone(), nakayama: nu })
    } else {
        Err(violations)
    }
}

impl Afbg {
    pub fn new(g: RibbonGraph, d: DegreeFunction) -> Result<Self> {
        is_admissible(&g, &d).map_err(|v| {
            Error::NotAdmissible(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
        })
    }

    /// Parses a ribbon-graph file whose vertices all carry degrees.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec = RibbonSpec::from_json(text)?;
        let g = build_ribbon_graph(&spec)?;
        let d = DegreeFunction::from_spec(&g, &spec)?;
        Afbg::new(g, d)
    }

    pub fn to_spec(&self) -> RibbonSpec {
        RibbonSpec::from_graph(&self.graph, Some(self.degrees.as_slice()))
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn degrees(&self) -> &DegreeFunction {
        &self.degrees
    }

    pub fn degree_of_half_edge(&self, h: usize) -> u32 {
        self.degrees.get(self.graph.attach(h))
    }

    pub fn nakayama(&self) -> &Perm {
        &self.nakayama
    }

    pub fn nakayama_order(&self) -> usize {
        self.nakayama.order()
    }

    pub fn multiplicity(&self, v: usize) -> Multiplicity {
        Multiplicity::new(self.degrees.get(v) as u64, self.graph.valency(v) as u64)
    }

    pub fn multiplicity_of(&self, id: &str) -> Result<Multiplicity> {
        Ok(self.multiplicity(self.graph.vertex_index(id)?))
    }

    /// Multiplicities sorted ascending.
    pub fn multiplicity_multiset(&self) -> Vec<Multiplicity> {
        let mut m: Vec<_> = (0..self.graph.num_vertices()).map(|v| self.multiplicity(v)).collect();
        m.sort();
        m
    }

    pub fn is_brauer_graph(&self) -> bool {
        (0..self.graph.num_vertices()).all(|v| self.multiplicity(v).is_integer())
    }

    pub fn truncated_vertices(&self) -> Vec<usize> {
        (0..self.graph.num_vertices()).filter(|&v| self.degrees.get(v) == 1).collect()
    }

    /// Quotient by ⟨ν⟩.
    pub fn reduced_form(&self) -> Afbg {
        quotient_by_group(self, &self.nakayama).expect("quotient by ⟨ν⟩ of an admissible graph is admissible")
    }

    pub fn is_isomorphic_to(&self, other: &Afbg) -> Result<Option<Vec<usize>>> {
        is_isomorphic(&self.graph, Some(self.degrees.as_slice()), &other.graph, Some(other.degrees.as_slice()))
    }

    pub fn rep_finite_report(&self) -> Result<RepFiniteReport> {
        if !self.graph.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        let red = self.reduced_form();
        let rg = red.graph();
        let is_tree = rg.num_edges() + 1 == rg.num_vertices();
        let exceptional: Vec<u64> = (0..rg.num_vertices())
            .map(|v| {
                let m = red.multiplicity(v).0;
                debug_assert!(m.is_integer());
                m.to_integer()
            })
            .filter(|&m| m > 1)
            .collect();
        let nakayama_order = self.nakayama_order();
        if is_tree && exceptional.len() <= 1 {
            Ok(RepFiniteReport {
                is_rep_finite: true,
                tree_edges: Some(rg.num_edges()),
                exceptional_multiplicity: Some(exceptional.first().copied().unwrap_or(1)),
                nakayama_order,
            })
        } else {
            Ok(RepFiniteReport { is_rep_finite: false, tree_edges: None, exceptional_multiplicity: None, nakayama_order })
        }
    }
}

/// `nakayama_order` is only a candidate for the period `r` of the stable
/// Auslander–Reiten quiver `ZA_{mn}/⟨τ^{nr}⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepFiniteReport {
    pub is_rep_finite: bool,
    pub tree_edges: Option<usize>,
    pub exceptional_multiplicity: Option<u64>,
    pub nakayama_order: usize,
}

/// Quotient of `a` by the cyclic group generated by `generator`, which must
/// be a power of the Nakayama permutation. Vertices and degrees are kept;
/// each orbit is named after its smallest member.
pub(crate) fn quotient_by_group(a: &Afbg, generator: &Perm) -> Result<Afbg> {
    let g = a.graph();
    let orbits = generator.cycles();
    let mut class = vec![0; g.num_half_edges()];
    for (k, orbit) in orbits.iter().enumerate() {
        for &h in orbit {
            class[h] = k;
        }
    }
    let mut rotation = vec![usize::MAX; orbits.len()];
    let mut pair = vec![usize::MAX; orbits.len()];
    for h in 0..g.num_half_edges() {
        let (c, r, p) = (class[h], class[g.rot(h)], class[g.pair(h)]);
        // ν commutes with ρ and, by admissibility, with ι.
        assert!(rotation[c] == usize::MAX || rotation[c] == r, "ρ is not well defined on orbits");
        assert!(pair[c] == usize::MAX || pair[c] == p, "ι is not well defined on orbits");
        rotation[c] = r;
        pair[c] = p;
    }
    if let Some(c) = (0..orbits.len()).find(|&c| pair[c] == c) {
        return Err(Error::QuotientNotAdmissible(format!(
            "half-edge `{}` is identified with its partner",
            g.half_edge_id(orbits[c][0])
        )));
    }
    let mut edges = Vec::new();
    let mut edge_ids = Vec::new();
    let mut done: HashMap<usize, ()> = HashMap::new();
    for (e, &[x, _]) in g.edges().iter().enumerate() {
        let c = class[x];
        if done.contains_key(&c) {
            continue;
        }
        done.insert(c, ());
        done.insert(pair[c], ());
        edges.push([c, pair[c]]);
        edge_ids.push(g.edge_id(e).to_string());
    }
    let parts = RibbonParts {
        vertex_ids: g.vertex_ids().to_vec(),
        half_edge_ids: orbits.iter().map(|o| g.half_edge_id(o[0]).to_string()).collect(),
        edge_ids: Some(edge_ids),
        edges,
        attach: orbits.iter().map(|o| g.attach(o[0])).collect(),
        rotation,
    };
    let quotient = RibbonGraph::from_parts(parts)?;
    Afbg::new(quotient, a.degrees().clone()).map_err(|e| Error::QuotientNotAdmissible(e.to_string()))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::format::RibbonSpec;

    pub(crate) fn lambda() -> Afbg {
        let spec = RibbonSpec::from_rotations(
            &[("u", Some(2), &["h", "h'"]), ("w", Some(2), &["ih", "ih'"])],
            &[("h", "ih"), ("h'", "ih'")],
        );
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::from_spec(&g, &spec).unwrap();
        Afbg::new(g, d).unwrap()
    }

    fn graph(vertices: &[(&str, Option<u32>, &[&str])], edges: &[(&str, &str)]) -> (RibbonGraph, DegreeFunction) {
        let spec = RibbonSpec::from_rotations(vertices, edges);
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::from_spec(&g, &spec).unwrap();
        (g, d)
    }

    /// Star with centre degree `centre` and `k` leaves of degree `leaf`.
    pub(crate) fn star(k: usize, centre: u32, leaf: u32) -> (RibbonGraph, DegreeFunction) {
        let mut vertices = vec![("c".to_string(), Some(centre), (0..k).map(|i| format!("c{i}")).collect())];
        let mut edges = Vec::new();
        for i in 0..k {
            vertices.push((format!("l{i}"), Some(leaf), vec![format!("l{i}h")]));
            edges.push((format!("c{i}"), format!("l{i}h")));
        }
        let spec = RibbonSpec::from_owned(vertices, edges);
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::from_spec(&g, &spec).unwrap();
        (g, d)
    }

    #[test]
    fn lambda_nakayama_is_identity() {
        let a = lambda();
        assert!(a.nakayama().is_identity());
        assert_eq!(a.nakayama_order(), 1);
        assert!(a.is_brauer_graph());
        assert_eq!(a.multiplicity_of("u").unwrap().to_string(), "1/1");
        assert!(a.truncated_vertices().is_empty());
    }

    #[test]
    fn degree_one_centre_gives_rotation() {
        let (g, d) = star(3, 1, 1);
        let nu = nakayama_permutation(&g, &d);
        for &h in g.star(0) {
            assert_eq!(nu.apply(h), g.rot(h));
        }
        // Leaves are fixed by ν while the centre rotates.
        assert!(is_admissible(&g, &d).is_err());
        let (g, d) = star(1, 1, 1);
        assert_eq!(Afbg::new(g, d).unwrap().truncated_vertices().len(), 2);
    }

    #[test]
    fn truncated_loop_violates_orbit_condition() {
        let (g, d) = graph(&[("u", Some(1), &["h", "g"])], &[("h", "g")]);
        let v = is_admissible(&g, &d).unwrap_err();
        assert!(v.iter().any(|x| x.condition == Condition::PartnerOutsideOrbit));
        assert!(v.iter().all(|x| x.condition == Condition::PartnerOutsideOrbit));
    }

    #[test]
    fn commutation_violation_is_reported() {
        // Two parallel edges, d(u)=1 (ν rotates at u) and d(w)=2 (ν fixes w).
        let (g, d) = graph(
            &[("u", Some(1), &["h", "h'"]), ("w", Some(2), &["ih", "ih'"])],
            &[("h", "ih"), ("h'", "ih'")],
        );
        let v = is_admissible(&g, &d).unwrap_err();
        assert!(v.iter().any(|x| x.condition == Condition::PairingCommutes));
    }

    #[test]
    fn missing_degree() {
        let spec = RibbonSpec::from_rotations(&[("u", None, &["h"]), ("w", Some(1), &["g"])], &[("h", "g")]);
        let g = build_ribbon_graph(&spec).unwrap();
        assert_eq!(DegreeFunction::from_spec(&g, &spec), Err(Error::MissingDegree("u".into())));
    }

    #[test]
    fn multiplicity_equal_to_one_when_degree_is_valency() {
        let (g, d) = star(4, 4, 1);
        let a = Afbg::new(g, d).unwrap();
        assert!((0..5).all(|v| a.multiplicity(v) == Multiplicity::new(1, 1)));
        assert!(a.is_brauer_graph());
    }

    #[test]
    fn fractional_multiplicity_is_not_brauer() {
        // Centre of valency 4 and degree 2: ν = ρ² has orbits of size 2.
        let (g, d) = graph(
            &[("u", Some(2), &["a", "b", "c", "e"]), ("w", Some(2), &["a'", "b'", "c'", "e'"])],
            &[("a", "a'"), ("b", "b'"), ("c", "c'"), ("e", "e'")],
        );
        let a = Afbg::new(g, d).unwrap();
        assert_eq!(a.multiplicity_of("u").unwrap().to_string(), "1/2");
        assert!(!a.is_brauer_graph());
        let red = a.reduced_form();
        assert!(red.is_brauer_graph());
        assert_eq!(red.graph().valency(0), 2);
        assert!(red.is_isomorphic_to(&lambda()).unwrap().is_some());
    }

    #[test]
    fn reduced_form_of_brauer_graph_with_trivial_nakayama_is_itself() {
        let a = lambda();
        assert_eq!(a.reduced_form(), a);
    }

    #[test]
    fn rep_finite_examples() {
        let r = lambda().rep_finite_report().unwrap();
        assert!(!r.is_rep_finite);
        assert_eq!(r.tree_edges, None);

        let (g, d) = graph(&[("u", Some(1), &["h"]), ("w", Some(1), &["g"])], &[("h", "g")]);
        let r = Afbg::new(g, d).unwrap().rep_finite_report().unwrap();
        assert_eq!((r.is_rep_finite, r.tree_edges, r.exceptional_multiplicity), (true, Some(1), Some(1)));

        let (g, d) = star(3, 6, 1);
        let a = Afbg::new(g, d).unwrap();
        assert_eq!(a.reduced_form(), a);
        let r = a.rep_finite_report().unwrap();
        assert_eq!((r.is_rep_finite, r.tree_edges, r.exceptional_multiplicity), (true, Some(3), Some(2)));
        assert_eq!(r.nakayama_order, 1);
    }

    #[test]
    fn two_exceptional_vertices_are_rep_infinite() {
        let (g, d) = graph(&[("u", Some(2), &["h"]), ("w", Some(3), &["g"])], &[("h", "g")]);
        let r = Afbg::new(g, d).unwrap().rep_finite_report().unwrap();
        assert!(!r.is_rep_finite);
    }
}
