//! Gentle algebras, their maximal paths and the Brauer graph `Γ_A` whose
//! algebra is the trivial extension; r-fold trivial extensions and windows of
//! the repetitive algebra come from the covers of `Γ_A` cut at the ends of
//! the maximal paths.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::afbg::{Afbg, DegreeFunction};
use crate::covering::{cover_finite, cover_window, CuttingSet, WindowPresentation};
use crate::error::{Error, Result};
use crate::format::RibbonSpec;
use crate::presentation::{build_presentation, ArrowEntry, Presentation};
use crate::ribbon::build_ribbon_graph;

/// Gentle input file. Zero relations are `[later, earlier]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GentleSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub zero_relations: Vec<[String; 2]>,
}

impl GentleSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GentleViolation {
    UnknownVertex(String),
    UnknownArrow(String),
    DuplicateId(String),
    TooManyArrows { vertex: String, outgoing: bool },
    NotComposable { later: String, earlier: String },
    /// Two successors (or predecessors) of the arrow with the same status.
    NotGentle { arrow: String, after: bool, killed: bool },
}

impl fmt::Display for GentleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GentleViolation::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
            GentleViolation::UnknownArrow(a) => write!(f, "unknown arrow `{a}`"),
            GentleViolation::DuplicateId(x) => write!(f, "duplicate id `{x}`"),
            GentleViolation::TooManyArrows { vertex, outgoing } => {
                write!(f, "more than two arrows {} `{vertex}`", if *outgoing { "start at" } else { "end at" })
            }
            GentleViolation::NotComposable { later, earlier } => write!(f, "`{later} {earlier}` is not a path"),
            GentleViolation::NotGentle { arrow, after, killed } => write!(
                f,
                "arrow `{arrow}` has two {} whose composite with it is {}",
                if *after { "successors" } else { "predecessors" },
                if *killed { "zero" } else { "nonzero" }
            ),
        }
    }
}

/// A validated gentle presentation in index form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gentle {
    vertex_ids: Vec<String>,
    arrow_ids: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    /// `zero[later][earlier]`
    zero: Vec<Vec<bool>>,
}

/// An element of the augmented set of maximal paths: a maximal path, or the
/// trivial path at a quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathVertex {
    Path(Vec<usize>),
    Trivial(usize),
}

pub fn validate_gentle(spec: &GentleSpec) -> std::result::Result<Gentle, Vec<GentleViolation>> {
    let mut violations = Vec::new();
    let mut vindex = HashMap::new();
    for (i, v) in spec.vertices.iter().enumerate() {
        if vindex.insert(v.as_str(), i).is_some() {
            violations.push(GentleViolation::DuplicateId(v.clone()));
        }
    }
    let mut aindex = HashMap::new();
    let (mut source, mut target) = (Vec::new(), Vec::new());
    for (i, a) in spec.arrows.iter().enumerate() {
        if aindex.insert(a.id.as_str(), i).is_some() {
            violations.push(GentleViolation::DuplicateId(a.id.clone()));
        }
        for end in [&a.from, &a.to] {
            if !vindex.contains_key(end.as_str()) {
                violations.push(GentleViolation::UnknownVertex(end.clone()));
            }
        }
        source.push(vindex.get(a.from.as_str()).copied().unwrap_or(0));
        target.push(vindex.get(a.to.as_str()).copied().unwrap_or(0));
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let n = spec.arrows.len();
    let mut zero = vec![vec![false; n]; n];
    for [later, earlier] in &spec.zero_relations {
        match (aindex.get(later.as_str()), aindex.get(earlier.as_str())) {
            (Some(&l), Some(&e)) => {
                if target[e] != source[l] {
                    violations.push(GentleViolation::NotComposable { later: later.clone(), earlier: earlier.clone() });
                }
                zero[l][e] = true;
            }
            (l, _) => {
                let missing = if l.is_none() { later } else { earlier };
                violations.push(GentleViolation::UnknownArrow(missing.clone()));
            }
        }
    }
    for v in 0..spec.vertices.len() {
        if source.iter().filter(|&&s| s == v).count() > 2 {
            violations.push(GentleViolation::TooManyArrows { vertex: spec.vertices[v].clone(), outgoing: true });
        }
        if target.iter().filter(|&&t| t == v).count() > 2 {
            violations.push(GentleViolation::TooManyArrows { vertex: spec.vertices[v].clone(), outgoing: false });
        }
    }
    for a in 0..n {
        for killed in [true, false] {
            let after = (0..n).filter(|&b| source[b] == target[a] && zero[b][a] == killed).count();
            if after > 1 {
                violations.push(GentleViolation::NotGentle { arrow: spec.arrows[a].id.clone(), after: true, killed });
            }
            let before = (0..n).filter(|&b| target[b] == source[a] && zero[a][b] == killed).count();
            if before > 1 {
                violations.push(GentleViolation::NotGentle { arrow: spec.arrows[a].id.clone(), after: false, killed });
            }
        }
    }
    if violations.is_empty() {
        Ok(Gentle {
            vertex_ids: spec.vertices.clone(),
            arrow_ids: spec.arrows.iter().map(|a| a.id.clone()).collect(),
            source,
            target,
            zero,
        })
    } else {
        Err(violations)
    }
}

impl Gentle {
    pub fn from_spec(spec: &GentleSpec) -> Result<Self> {
        validate_gentle(spec)
            .map_err(|v| Error::NotGentle(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Gentle::from_spec(&GentleSpec::from_json(text)?)
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn arrow_ids(&self) -> &[String] {
        &self.arrow_ids
    }

    fn num_arrows(&self) -> usize {
        self.arrow_ids.len()
    }

    fn successor(&self, a: usize) -> Option<usize> {
        (0..self.num_arrows()).find(|&b| self.source[b] == self.target[a] && !self.zero[b][a])
    }

    fn has_predecessor(&self, a: usize) -> bool {
        (0..self.num_arrows()).any(|b| self.target[b] == self.source[a] && !self.zero[a][b])
    }

    /// All maximal nonzero paths, in application order, ordered by first arrow.
    pub fn maximal_paths(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.num_arrows();
        let mut covered = vec![false; n];
        let mut out = Vec::new();
        for start in (0..n).filter(|&a| !self.has_predecessor(a)) {
            let mut path = vec![start];
            covered[start] = true;
            let mut a = start;
            while let Some(b) = self.successor(a) {
                if covered[b] {
                    return Err(Error::UnboundedPath(self.arrow_ids[b].clone()));
                }
                covered[b] = true;
                path.push(b);
                a = b;
            }
            out.push(path);
        }
        // Arrows not reached lie on a cycle of nonzero composites.
        if let Some(a) = (0..n).find(|&a| !covered[a]) {
            return Err(Error::UnboundedPath(self.arrow_ids[a].clone()));
        }
        Ok(out)
    }

    fn arrows_in(&self, v: usize) -> Vec<usize> {
        (0..self.num_arrows()).filter(|&a| self.target[a] == v).collect()
    }

    fn arrows_out(&self, v: usize) -> Vec<usize> {
        (0..self.num_arrows()).filter(|&a| self.source[a] == v).collect()
    }

    /// Maximal paths followed by the trivial paths at vertices that are a
    /// source or sink of a single arrow, or pass one arrow into one arrow
    /// with nonzero composite.
    pub fn augmented_vertex_set(&self) -> Result<Vec<PathVertex>> {
        let mut out: Vec<PathVertex> = self.maximal_paths()?.into_iter().map(PathVertex::Path).collect();
        for v in 0..self.vertex_ids.len() {
            let (inc, outg) = (self.arrows_in(v), self.arrows_out(v));
            let trivial = match (inc.as_slice(), outg.as_slice()) {
                ([], [_]) | ([_], []) => true,
                (&[a], &[b]) => !self.zero[b][a],
                _ => false,
            };
            if trivial {
                out.push(PathVertex::Trivial(v));
            }
        }
        Ok(out)
    }

    pub fn path_name(&self, p: &PathVertex) -> String {
        match p {
            PathVertex::Path(arrows) => arrows.iter().map(|&a| self.arrow_ids[a].as_str()).collect::<Vec<_>>().join("-"),
            PathVertex::Trivial(v) => format!("e_{}", self.vertex_ids[*v]),
        }
    }

    fn occurrences(&self, p: &PathVertex) -> Vec<usize> {
        match p {
            PathVertex::Path(arrows) => {
                let mut vs = vec![self.source[arrows[0]]];
                vs.extend(arrows.iter().map(|&a| self.target[a]));
                vs
            }
            PathVertex::Trivial(v) => vec![*v],
        }
    }

    /// `Γ_A` with `d = val`, the cut at the last occurrence of every path,
    /// and the arrow names of the trivial extension.
    pub fn ribbon_graph(&self) -> Result<GentleGraph> {
        let mbar = self.augmented_vertex_set()?;
        let mut at_vertex: Vec<Vec<String>> = vec![Vec::new(); self.vertex_ids.len()];
        let mut vertices = Vec::new();
        let mut cut_ids = Vec::new();
        let mut aliases = HashMap::new();
        for p in &mbar {
            let name = self.path_name(p);
            let occ = self.occurrences(p);
            let hs: Vec<String> = (0..occ.len()).map(|i| format!("{name}/{i}")).collect();
            for (i, &v) in occ.iter().enumerate() {
                at_vertex[v].push(hs[i].clone());
            }
            if let PathVertex::Path(arrows) = p {
                for (i, &a) in arrows.iter().enumerate() {
                    aliases.insert(format!("a_{}", hs[i]), self.arrow_ids[a].clone());
                }
            }
            aliases.insert(format!("a_{}", hs[hs.len() - 1]), format!("d_{name}"));
            cut_ids.push(hs[hs.len() - 1].clone());
            vertices.push((name, Some(occ.len() as u32), hs));
        }
        let mut edges = Vec::new();
        for (v, hs) in at_vertex.iter().enumerate() {
            if hs.len() != 2 {
                return Err(Error::OccurrenceMismatch { vertex: self.vertex_ids[v].clone(), count: hs.len() });
            }
            edges.push((hs[0].clone(), hs[1].clone()));
        }
        let mut spec = RibbonSpec::from_owned(vertices, edges);
        spec.edge_ids = Some(self.vertex_ids.clone());
        let g = build_ribbon_graph(&spec)?;
        let d = DegreeFunction::valency(&g);
        let cut = CuttingSet::new(&g, cut_ids.iter().map(|h| g.half_edge_index(h)).collect::<Result<Vec<_>>>()?)?;
        let afbg = Afbg::new(g, d)?;
        Ok(GentleGraph { afbg, cut, aliases })
    }

    pub fn trivial_extension(&self) -> Result<Presentation> {
        let gg = self.ribbon_graph()?;
        Ok(build_presentation(&gg.afbg).with_aliases(&gg.aliases))
    }

    /// Arrow `α` on sheet `j` is named `α@j`.
    pub fn r_fold_trivial_extension(&self, r: usize) -> Result<(Afbg, Presentation)> {
        let gg = self.ribbon_graph()?;
        let cover = cover_finite(&gg.afbg, &gg.cut, r)?;
        let p = build_presentation(&cover.afbg).with_aliases(&sheet_aliases(&gg.aliases, 0..r as i64));
        Ok((cover.afbg, p))
    }

    pub fn repetitive_window(&self, lo: i64, hi: i64) -> Result<WindowPresentation> {
        let gg = self.ribbon_graph()?;
        let w = cover_window(&gg.afbg, &gg.cut, lo, hi)?;
        Ok(w.presentation().with_aliases(&sheet_aliases(&gg.aliases, lo..hi + 1)))
    }
}

fn sheet_aliases(aliases: &HashMap<String, String>, sheets: std::ops::Range<i64>) -> HashMap<String, String> {
    let mut out = HashMap::new();
    for j in sheets {
        for (k, v) in aliases {
            out.insert(format!("{k}@{j}"), format!("{v}@{j}"));
        }
    }
    out
}

/// `Γ_A` with its cutting set. `aliases` maps presentation arrow ids to the
/// arrows of `A`, or `d_<path>` for the arrow closing the cycle of a path.
#[derive(Debug, Clone)]
pub struct GentleGraph {
    pub afbg: Afbg,
    pub cut: CuttingSet,
    pub aliases: HashMap<String, String>,
}
