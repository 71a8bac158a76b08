//! Ribbon graphs in half-edge form: a set of half-edges with an attachment
//! map to vertices, a fixed-point-free pairing ι and a rotation ρ whose
//! cycles are exactly the stars of the vertices.
//!
//! Half-edges, vertices and edges are addressed by dense indices; the
//! string ids only matter at the file boundary.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::format::RibbonSpec;
use crate::perm::{is_bijection, Perm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    vertex_ids: Vec<String>,
    half_edge_ids: Vec<String>,
    edge_ids: Vec<String>,
    attach: Vec<usize>,
    pairing: Perm,
    rotation: Perm,
    rotation_inv: Perm,
    edges: Vec<[usize; 2]>,
    edge_of: Vec<usize>,
    /// Star of each vertex, starting at its smallest half-edge index.
    stars: Vec<Vec<usize>>,
    connected: bool,
}

/// Rotation-system description in index form, validated by
/// [`RibbonGraph::from_parts`].
#[derive(Debug, Clone)]
pub struct RibbonParts {
    pub vertex_ids: Vec<String>,
    pub half_edge_ids: Vec<String>,
    /// `None` numbers the edges `e1, e2, ...` in list order.
    pub edge_ids: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub attach: Vec<usize>,
    pub rotation: Vec<usize>,
}

pub fn default_edge_ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Builds and validates a ribbon graph from its textual description.
pub fn build_ribbon_graph(spec: &RibbonSpec) -> Result<RibbonGraph> {
    let mut vertex_ids = Vec::with_capacity(spec.vertices.len());
    let mut vertex_seen = HashMap::new();
    let mut half_edge_ids = Vec::new();
    let mut half_index: HashMap<&str, usize> = HashMap::new();
    let mut attach = Vec::new();
    let mut rotation_lists = Vec::new();

    for (v, vs) in spec.vertices.iter().enumerate() {
        if vertex_seen.insert(vs.id.as_str(), v).is_some() {
            return Err(Error::DuplicateVertex(vs.id.clone()));
        }
        vertex_ids.push(vs.id.clone());
        if vs.rotation.is_empty() {
            return Err(Error::EmptyVertex(vs.id.clone()));
        }
        let mut cycle = Vec::with_capacity(vs.rotation.len());
        for h in &vs.rotation {
            let idx = half_edge_ids.len();
            if half_index.insert(h.as_str(), idx).is_some() {
                return Err(Error::DuplicateHalfEdge(h.clone()));
            }
            half_edge_ids.push(h.clone());
            attach.push(v);
            cycle.push(idx);
        }
        rotation_lists.push(cycle);
    }

    let mut rotation = vec![0; half_edge_ids.len()];
    for cycle in &rotation_lists {
        for (k, &h) in cycle.iter().enumerate() {
            rotation[h] = cycle[(k + 1) % cycle.len()];
        }
    }

    let mut edges = Vec::with_capacity(spec.edges.len());
    for [a, b] in &spec.edges {
        let lookup = |name: &String| {
            half_index.get(name.as_str()).copied().ok_or_else(|| Error::OrbitMismatch {
                half_edge: name.clone(),
                reason: "paired half-edge is not in any rotation".into(),
            })
        };
        let (ia, ib) = (lookup(a)?, lookup(b)?);
        if ia == ib {
            return Err(Error::FixedPointPairing(a.clone()));
        }
        edges.push([ia, ib]);
    }

    RibbonGraph::from_parts(RibbonParts {
        vertex_ids,
        half_edge_ids,
        edge_ids: spec.edge_ids.clone(),
        edges,
        attach,
        rotation,
    })
}

impl RibbonGraph {
    pub fn from_parts(parts: RibbonParts) -> Result<Self> {
        let RibbonParts { vertex_ids, half_edge_ids, edge_ids, edges, attach, rotation } = parts;
        let n = half_edge_ids.len();
        let nv = vertex_ids.len();
        if attach.len() != n || rotation.len() != n {
            return Err(Error::Parse("attach/rotation length differs from half-edge count".into()));
        }
        if let Some(&v) = attach.iter().find(|&&v| v >= nv) {
            return Err(Error::Parse(format!("attach refers to vertex index {v}")));
        }
        if !is_bijection(&rotation) {
            return Err(Error::OrbitMismatch {
                half_edge: half_edge_ids.first().cloned().unwrap_or_default(),
                reason: "rotation is not a permutation".into(),
            });
        }
        let mut seen_id = HashMap::new();
        for h in &half_edge_ids {
            if seen_id.insert(h.as_str(), ()).is_some() {
                return Err(Error::DuplicateHalfEdge(h.clone()));
            }
        }
        let mut seen_v = HashMap::new();
        for v in &vertex_ids {
            if seen_v.insert(v.as_str(), ()).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }

        // Pairing from the edge list.
        let mut pairing = vec![usize::MAX; n];
        let mut edge_of = vec![usize::MAX; n];
        for (e, &[a, b]) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("edge {e} refers to a missing half-edge")));
            }
            if a == b {
                return Err(Error::FixedPointPairing(half_edge_ids[a].clone()));
            }
            for h in [a, b] {
                if pairing[h] != usize::MAX {
                    return Err(Error::OrbitMismatch {
                        half_edge: half_edge_ids[h].clone(),
                        reason: "half-edge belongs to two edges".into(),
                    });
                }
            }
            pairing[a] = b;
            pairing[b] = a;
            edge_of[a] = e;
            edge_of[b] = e;
        }
        if let Some(h) = pairing.iter().position(|&p| p == usize::MAX) {
            return Err(Error::OrbitMismatch {
                half_edge: half_edge_ids[h].clone(),
                reason: "half-edge is not paired".into(),
            });
        }

        let rotation = Perm::from_images(rotation);
        let mut stars: Vec<Vec<usize>> = vec![Vec::new(); nv];
        let mut seen = vec![false; n];
        for h in 0..n {
            if seen[h] {
                continue;
            }
            let v = attach[h];
            if !stars[v].is_empty() {
                return Err(Error::OrbitMismatch {
                    half_edge: half_edge_ids[h].clone(),
                    reason: format!("vertex `{}` carries more than one rotation cycle", vertex_ids[v]),
                });
            }
            let mut x = h;
            while !seen[x] {
                if attach[x] != v {
                    return Err(Error::OrbitMismatch {
                        half_edge: half_edge_ids[x].clone(),
                        reason: "rotation cycle spans two vertices".into(),
                    });
                }
                seen[x] = true;
                stars[v].push(x);
                x = rotation.apply(x);
            }
        }
        if let Some(v) = stars.iter().position(Vec::is_empty) {
            return Err(Error::EmptyVertex(vertex_ids[v].clone()));
        }

        let edge_ids = match edge_ids {
            Some(ids) => {
                if ids.len() != edges.len() {
                    return Err(Error::BadEdgeIds(format!("{} ids for {} edges", ids.len(), edges.len())));
                }
                let mut s = HashMap::new();
                for id in &ids {
                    if s.insert(id.as_str(), ()).is_some() {
                        return Err(Error::BadEdgeIds(format!("duplicate edge id `{id}`")));
                    }
                }
                ids
            }
            None => default_edge_ids(edges.len()),
        };

        let rotation_inv = rotation.inverse();
        let mut g = RibbonGraph {
            vertex_ids,
            half_edge_ids,
            edge_ids,
            attach,
            pairing: Perm::from_images(pairing),
            rotation,
            rotation_inv,
            edges,
            edge_of,
            stars,
            connected: false,
        };
        g.connected = g.component_count() <= 1;
        Ok(g)
    }

    pub fn parts(&self) -> RibbonParts {
        RibbonParts {
            vertex_ids: self.vertex_ids.clone(),
            half_edge_ids: self.half_edge_ids.clone(),
            edge_ids: Some(self.edge_ids.clone()),
            edges: self.edges.clone(),
            attach: self.attach.clone(),
            rotation: self.rotation.images().to_vec(),
        }
    }

    pub fn num_half_edges(&self) -> usize {
        self.half_edge_ids.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn half_edge_ids(&self) -> &[String] {
        &self.half_edge_ids
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn half_edge_id(&self, h: usize) -> &str {
        &self.half_edge_ids[h]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertex_ids
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn half_edge_index(&self, id: &str) -> Result<usize> {
        self.half_edge_ids
            .iter()
            .position(|h| h == id)
            .ok_or_else(|| Error::UnknownHalfEdge(id.to_string()))
    }

    #[inline]
    pub fn attach(&self, h: usize) -> usize {
        self.attach[h]
    }

    #[inline]
    pub fn pair(&self, h: usize) -> usize {
        self.pairing.apply(h)
    }

    #[inline]
    pub fn rot(&self, h: usize) -> usize {
        self.rotation.apply(h)
    }

    #[inline]
    pub fn rot_inv(&self, h: usize) -> usize {
        self.rotation_inv.apply(h)
    }

    /// `ρ^k(h)` for any integer `k`.
    pub fn rot_pow(&self, h: usize, k: i64) -> usize {
        let val = self.stars[self.attach[h]].len() as i64;
        let steps = k.rem_euclid(val);
        (0..steps).fold(h, |x, _| self.rot(x))
    }

    pub fn pairing(&self) -> &Perm {
        &self.pairing
    }

    pub fn rotation(&self) -> &Perm {
        &self.rotation
    }

    #[inline]
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Half-edges at `v` in rotation order.
    pub fn star(&self, v: usize) -> &[usize] {
        &self.stars[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.stars[v].len()
    }

    pub fn valency_of(&self, id: &str) -> Result<usize> {
        Ok(self.valency(self.vertex_index(id)?))
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let [a, b] = self.edges[e];
        self.attach[a] == self.attach[b]
    }

    /// One `(endpoint, endpoint, edge)` triple per edge, in edge order.
    pub fn underlying_graph(&self) -> Vec<(usize, usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, &[a, b])| (self.attach[a], self.attach[b], e))
            .collect()
    }

    fn component_count(&self) -> usize {
        let nv = self.num_vertices();
        let mut comp = vec![usize::MAX; nv];
        let mut count = 0;
        for s in 0..nv {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &h in &self.stars[v] {
                    let w = self.attach[self.pair(h)];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Two-colourability of the underlying multigraph; a loop is an odd cycle.
    pub fn is_bipartite(&self) -> bool {
        let nv = self.num_vertices();
        let mut colour: Vec<Option<bool>> = vec![None; nv];
        for s in 0..nv {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &h in &self.stars[v] {
                    let w = self.attach[self.pair(h)];
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// The face permutation `φ = ρ ∘ ι`.
    pub fn face_permutation(&self) -> Perm {
        self.rotation.after(&self.pairing)
    }

    /// Orbits of `ρ ∘ ι`; the perimeter of a face is its length.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.face_permutation().cycles()
    }

    pub fn face_perimeters(&self) -> Vec<usize> {
        self.face_permutation().cycle_type()
    }

    /// Same graph with every rotation reversed.
    pub fn mirrored(&self) -> RibbonGraph {
        let mut parts = self.parts();
        parts.rotation = self.rotation_inv.images().to_vec();
        RibbonGraph::from_parts(parts).expect("mirror of a valid graph is valid")
    }

    /// Renames/reindexes the graph: half-edge `h` moves to index
    /// `half_edge_perm[h]` and vertex `v` to `vertex_perm[v]`. Edge order is
    /// permuted by `edge_perm`. Ids are kept.
    pub fn permuted(&self, half_edge_perm: &Perm, vertex_perm: &Perm, edge_perm: &Perm) -> RibbonGraph {
        let n = self.num_half_edges();
        let mut half_edge_ids = vec![String::new(); n];
        let mut attach = vec![0; n];
        let mut rotation = vec![0; n];
        for h in 0..n {
            let nh = half_edge_perm.apply(h);
            half_edge_ids[nh] = self.half_edge_ids[h].clone();
            attach[nh] = vertex_perm.apply(self.attach[h]);
            rotation[nh] = half_edge_perm.apply(self.rot(h));
        }
        let mut vertex_ids = vec![String::new(); self.num_vertices()];
        for v in 0..self.num_vertices() {
            vertex_ids[vertex_perm.apply(v)] = self.vertex_ids[v].clone();
        }
        let mut edges = vec![[0, 0]; self.num_edges()];
        let mut edge_ids = vec![String::new(); self.num_edges()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            let ne = edge_perm.apply(e);
            edges[ne] = [half_edge_perm.apply(a), half_edge_perm.apply(b)];
            edge_ids[ne] = self.edge_ids[e].clone();
        }
        RibbonGraph::from_parts(RibbonParts {
            vertex_ids,
            half_edge_ids,
            edge_ids: Some(edge_ids),
            edges,
            attach,
            rotation,
        })
        .expect("permuted graph is valid")
    }

    /// Replaces all ids by fresh ones produced from the element index.
    pub fn renamed(&self, vertex: impl Fn(usize) -> String, half_edge: impl Fn(usize) -> String) -> RibbonGraph {
        let mut parts = self.parts();
        parts.vertex_ids = (0..self.num_vertices()).map(vertex).collect();
        parts.half_edge_ids = (0..self.num_half_edges()).map(half_edge).collect();
        RibbonGraph::from_parts(parts).expect("renaming preserves validity")
    }
}

/// Isomorphism-invariant code of a connected ribbon graph, optionally
/// decorated by vertex degrees. Codes are compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u64>);

/// BFS numbering of half-edges from `root` using the moves ι, ρ, ρ⁻¹.
fn bfs_numbering(g: &RibbonGraph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.num_half_edges();
    let mut number = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    number[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for y in [g.pair(x), g.rot(x), g.rot_inv(x)] {
            if number[y] == usize::MAX {
                number[y] = order.len();
                order.push(y);
            }
        }
    }
    (number, order)
}

fn rooted_code(g: &RibbonGraph, degrees: Option<&[u32]>, root: usize) -> (CanonicalCode, Vec<usize>) {
    let (number, order) = bfs_numbering(g, root);
    let mut code = Vec::with_capacity(order.len() * 3);
    for &x in &order {
        code.push(number[g.pair(x)] as u64);
        code.push(number[g.rot(x)] as u64);
        if let Some(d) = degrees {
            code.push(d[g.attach(x)] as u64);
        }
    }
    (CanonicalCode(code), number)
}

/// Minimal rooted code over all roots. Mirror images are distinct.
pub fn canonical_code(g: &RibbonGraph, degrees: Option<&[u32]>) -> Result<CanonicalCode> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok((0..g.num_half_edges())
        .map(|r| rooted_code(g, degrees, r).0)
        .min()
        .unwrap_or(CanonicalCode(Vec::new())))
}

/// A half-edge bijection `f: G → G'` with `f ι = ι' f`, `f ρ = ρ' f`, and
/// matching degrees at corresponding vertices, if one exists.
pub fn is_isomorphic(
    g: &RibbonGraph,
    d: Option<&[u32]>,
    g2: &RibbonGraph,
    d2: Option<&[u32]>,
) -> Result<Option<Vec<usize>>> {
    if !g.is_connected() || !g2.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.num_half_edges() != g2.num_half_edges()
        || g.num_vertices() != g2.num_vertices()
        || d.is_some() != d2.is_some()
    {
        return Ok(None);
    }
    if g.num_half_edges() == 0 {
        return Ok(Some(Vec::new()));
    }
    let (code, number) = rooted_code(g, d, 0);
    for root in 0..g2.num_half_edges() {
        let (code2, number2) = rooted_code(g2, d2, root);
        if code2 == code {
            let mut by_number = vec![0; number2.len()];
            for (h, &k) in number2.iter().enumerate() {
                by_number[k] = h;
            }
            return Ok(Some(number.iter().map(|&k| by_number[k]).collect()));
        }
    }
    Ok(None)
}
