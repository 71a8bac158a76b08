#![allow(dead_code)]

use std::collections::HashSet;

use fbga::covering::{cover_finite, Covering};
use fbga::random::{random_cut, uniform_brauer_graph};
use fbga::ribbon::{canonical_code, RibbonGraph, RibbonParts};
use fbga::{Afbg, DegreeFunction};
use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn data(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub struct CorpusEntry {
    pub base: Afbg,
    pub cover: Covering,
    pub r: usize,
}

/// Covers of random connected Brauer graphs with `|H| ≤ 40`. Even entries
/// have `d = val`; odd entries a uniform multiplicity `m ∈ 2..=4` with `r`
/// coprime to `m`, so that `ν` acts on the cover with orbits of size `r`.
pub fn brauer_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let ne = rng.gen_range(1..=20);
            let nv = rng.gen_range(1..=ne + 1);
            let (m, r) = if i % 2 == 0 {
                (1, rng.gen_range(1..=5usize))
            } else {
                let m = rng.gen_range(2..=4u32);
                let choices: Vec<usize> = (1..=5).filter(|r: &usize| r.gcd(&(m as usize)) == 1).collect();
                (m, choices[rng.gen_range(0..choices.len())])
            };
            let base = uniform_brauer_graph(&mut rng, nv, ne, m);
            let cut = random_cut(&mut rng, base.graph());
            let cover = cover_finite(&base, &cut, r).expect("uniform multiplicity covers are admissible");
            CorpusEntry { base, cover, r }
        })
        .collect()
}

/// Covers with at most 40 half-edges, any uniform multiplicity and any `r`.
pub fn random_small_covers(seed: u64, count: usize) -> Vec<Afbg> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.gen_range(1..=5usize);
            let ne = rng.gen_range(1..=20 / r);
            let nv = rng.gen_range(1..=ne + 1);
            let m = rng.gen_range(1..=3);
            let base = uniform_brauer_graph(&mut rng, nv, ne, m);
            let cut = random_cut(&mut rng, base.graph());
            cover_finite(&base, &cut, r).expect("uniform multiplicity covers are admissible").afbg
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every connected ribbon graph with `1..=max_edges` edges, one per
/// isomorphism class.
pub fn all_ribbon_graphs(max_edges: usize) -> Vec<RibbonGraph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for ne in 1..=max_edges {
        let n = 2 * ne;
        for rotation in permutations(n) {
            let mut attach = vec![usize::MAX; n];
            let mut nv = 0;
            for start in 0..n {
                if attach[start] != usize::MAX {
                    continue;
                }
                let mut x = start;
                while attach[x] == usize::MAX {
                    attach[x] = nv;
                    x = rotation[x];
                }
                nv += 1;
            }
            let g = RibbonGraph::from_parts(RibbonParts {
                vertex_ids: (0..nv).map(|v| format!("v{v}")).collect(),
                half_edge_ids: (0..n).map(|h| format!("h{h}")).collect(),
                edge_ids: None,
                edges: (0..ne).map(|e| [2 * e, 2 * e + 1]).collect(),
                attach,
                rotation,
            })
            .expect("valid rotation system");
            if g.is_connected() && seen.insert(canonical_code(&g, None).unwrap()) {
                out.push(g);
            }
        }
    }
    out
}

/// Every admissible degree assignment with values in `1..=max_degree` on
/// every connected ribbon graph with at most `max_edges` edges.
pub fn exhaustive_small_afbgs(max_edges: usize, max_degree: u32) -> Vec<Afbg> {
    let mut out = Vec::new();
    for g in all_ribbon_graphs(max_edges) {
        let nv = g.num_vertices();
        let mut d = vec![1u32; nv];
        loop {
            if let Ok(a) = Afbg::new(g.clone(), DegreeFunction::new(&g, d.clone()).unwrap()) {
                out.push(a);
            }
            let Some(i) = (0..nv).find(|&i| d[i] < max_degree) else { break };
            d[i] += 1;
            for x in d.iter_mut().take(i) {
                *x = 1;
            }
        }
    }
    out
}
