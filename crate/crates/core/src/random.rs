//! Random generators for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::afbg::{Afbg, DegreeFunction};
use crate::covering::{cover_finite, CuttingSet};
use crate::perm::Perm;
use crate::ribbon::{RibbonGraph, RibbonParts};

/// Connected ribbon graph with `nv` vertices and `ne ≥ nv - 1` edges (and
/// `ne ≥ 1`). Loops and parallel edges occur; rotations are uniform.
pub fn random_ribbon_graph<R: Rng + ?Sized>(rng: &mut R, nv: usize, ne: usize) -> RibbonGraph {
    assert!(nv >= 1 && ne >= 1 && ne + 1 >= nv);
    let mut ends: Vec<(usize, usize)> = (1..nv).map(|v| (rng.gen_range(0..v), v)).collect();
    while ends.len() < ne {
        ends.push((rng.gen_range(0..nv), rng.gen_range(0..nv)));
    }
    ends.shuffle(rng);
    from_edge_list(rng, nv, &ends)
}

/// Tree with `ne` edges and uniformly shuffled rotations.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, ne: usize) -> RibbonGraph {
    random_ribbon_graph(rng, ne + 1, ne)
}

fn from_edge_list<R: Rng + ?Sized>(rng: &mut R, nv: usize, ends: &[(usize, usize)]) -> RibbonGraph {
    let mut attach = Vec::with_capacity(2 * ends.len());
    let mut edges = Vec::with_capacity(ends.len());
    for &(u, w) in ends {
        edges.push([attach.len(), attach.len() + 1]);
        attach.push(u);
        attach.push(w);
    }
    let mut rotation = vec![0; attach.len()];
    for v in 0..nv {
        let mut star: Vec<usize> = (0..attach.len()).filter(|&h| attach[h] == v).collect();
        star.shuffle(rng);
        for i in 0..star.len() {
            rotation[star[i]] = star[(i + 1) % star.len()];
        }
    }
    RibbonGraph::from_parts(RibbonParts {
        vertex_ids: (0..nv).map(|v| format!("v{v}")).collect(),
        half_edge_ids: (0..attach.len()).map(|h| format!("h{h}")).collect(),
        edge_ids: None,
        edges,
        attach,
        rotation,
    })
    .expect("generated graph is valid")
}

/// `d(v) = m(v)·val(v)` with every `m(v)` drawn from `1..=max_m`.
pub fn random_brauer_graph<R: Rng + ?Sized>(rng: &mut R, nv: usize, ne: usize, max_m: u32) -> Afbg {
    let g = random_ribbon_graph(rng, nv, ne);
    let d = (0..g.num_vertices()).map(|v| rng.gen_range(1..=max_m) * g.valency(v) as u32).collect();
    let d = DegreeFunction::new(&g, d).expect("positive degrees");
    Afbg::new(g, d).expect("Brauer graphs are admissible")
}

/// Brauer graph with the same multiplicity `m` at every vertex.
pub fn uniform_brauer_graph<R: Rng + ?Sized>(rng: &mut R, nv: usize, ne: usize, m: u32) -> Afbg {
    let g = random_ribbon_graph(rng, nv, ne);
    let d = (0..g.num_vertices()).map(|v| m * g.valency(v) as u32).collect();
    let d = DegreeFunction::new(&g, d).expect("positive degrees");
    Afbg::new(g, d).expect("Brauer graphs are admissible")
}

/// Brauer tree with `ne` edges; one random vertex has multiplicity `m`.
pub fn random_brauer_tree<R: Rng + ?Sized>(rng: &mut R, ne: usize, m: u32) -> Afbg {
    let g = random_tree(rng, ne);
    let exceptional = rng.gen_range(0..g.num_vertices());
    let d = (0..g.num_vertices())
        .map(|v| if v == exceptional { m } else { 1 } * g.valency(v) as u32)
        .collect();
    let d = DegreeFunction::new(&g, d).expect("positive degrees");
    Afbg::new(g, d).expect("Brauer graphs are admissible")
}

pub fn random_cut<R: Rng + ?Sized>(rng: &mut R, g: &RibbonGraph) -> CuttingSet {
    let cut = (0..g.num_vertices()).map(|v| *g.star(v).choose(rng).expect("non-empty star")).collect();
    CuttingSet::new(g, cut).expect("one attached half-edge per vertex")
}

fn random_perm<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Perm::from_images(images)
}

/// Isomorphic copy with shuffled indices and fresh ids.
pub fn random_relabel<R: Rng + ?Sized>(rng: &mut R, a: &Afbg) -> Afbg {
    let g = a.graph();
    let hp = random_perm(rng, g.num_half_edges());
    let vp = random_perm(rng, g.num_vertices());
    let ep = random_perm(rng, g.num_edges());
    let salt: u32 = rng.gen();
    let g2 = g.permuted(&hp, &vp, &ep).renamed(|v| format!("p{salt}_{v}"), |h| format!("q{salt}_{h}"));
    let mut d = vec![0; g.num_vertices()];
    for v in 0..g.num_vertices() {
        d[vp.apply(v)] = a.degrees().get(v);
    }
    let d = DegreeFunction::new(&g2, d).expect("degrees carried over");
    Afbg::new(g2, d).expect("isomorphic copy is admissible")
}

/// An admissible graph with at most about `max_half_edges` half-edges,
/// mixing Brauer graphs, covers (fractional multiplicities) and rejection
/// samples with arbitrary degrees.
pub fn random_afbg<R: Rng + ?Sized>(rng: &mut R, max_half_edges: usize) -> Afbg {
    let max_edges = (max_half_edges / 2).max(1);
    loop {
        match rng.gen_range(0..3) {
            0 => {
                let ne = rng.gen_range(1..=max_edges);
                let nv = rng.gen_range(1..=ne + 1);
                return random_brauer_graph(rng, nv, ne, 3);
            }
            1 => {
                let r = rng.gen_range(2..=4usize);
                let ne = rng.gen_range(1..=(max_edges / r).max(1));
                let nv = rng.gen_range(1..=ne + 1);
                let m = rng.gen_range(1..=3);
                let base = uniform_brauer_graph(rng, nv, ne, m);
                let cut = random_cut(rng, base.graph());
                return cover_finite(&base, &cut, r).expect("uniform multiplicity covers are admissible").afbg;
            }
            _ => {
                let ne = rng.gen_range(1..=max_edges.min(6));
                let nv = rng.gen_range(1..=ne + 1);
                let g = random_ribbon_graph(rng, nv, ne);
                for _ in 0..20 {
                    let d: Vec<u32> = (0..g.num_vertices()).map(|_| rng.gen_range(1..=4)).collect();
                    let d = DegreeFunction::new(&g, d).expect("positive degrees");
                    if let Ok(a) = Afbg::new(g.clone(), d) {
                        return a;
                    }
                }
            }
        }
    }
}
