//! Rebuilding an admissible graph from the Loewy structure of its
//! indecomposable projectives.
//!
//! Each simple `i` is an edge with half-edges `i.0` and `i.1`, one per strand
//! of `rad P_i / soc P_i` (a missing strand is empty). A half-edge with strand
//! `s` sits at a vertex of degree `|s| + 1`, and its rotation successor is the
//! half-edge of edge `s[0]` (or of the socle, when `s` is empty) whose strand
//! is `s[1..] + [soc P_i]`. Every rotation satisfying these local rules is
//! built, kept if it is admissible and reproduces the input, and compared up
//! to isomorphism. Two half-edges of one edge with equal strands are
//! interchangeable, so rotations differing by such swaps are enumerated once.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::afbg::{Afbg, DegreeFunction};
use crate::error::{Error, Result};
use crate::format::RibbonSpec;
use crate::presentation::loewy_table;
use crate::ribbon::{build_ribbon_graph, canonical_code};

/// Search budget in rotation candidates after symmetry reduction.
pub const MAX_CONFIGURATIONS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoewyEntry {
    pub id: String,
    pub strands: Vec<Vec<String>>,
    pub uniserial: bool,
    pub socle: String,
}

pub fn parse_loewy(text: &str) -> Result<Vec<LoewyEntry>> {
    Ok(serde_json::from_str(text)?)
}

/// Loewy data of `a`; empty strands are omitted.
pub fn loewy_input(a: &Afbg) -> Vec<LoewyEntry> {
    let t = loewy_table(a);
    t.projectives
        .iter()
        .map(|p| LoewyEntry {
            id: t.labels[p.top].clone(),
            strands: p
                .strands
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| s.iter().map(|&e| t.labels[e].clone()).collect())
                .collect(),
            uniserial: p.is_uniserial(),
            socle: t.labels[p.socle].clone(),
        })
        .collect()
}

/// How a label is recovered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelCase {
    /// The label occurs in two distinct cyclic sequences: a non-loop edge.
    NonLoopEdge,
    /// Both occurrences in one cyclic sequence: a loop.
    Loop,
    /// `P_i` is uniserial: one end is a vertex of degree 1.
    Uniserial,
    /// Non-uniserial, two vertices with the same cyclic sequence.
    RepeatedSequence,
}

#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub afbg: Afbg,
    pub cases: Vec<(String, LabelCase)>,
    pub cyclic_sequences: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum RoundTrip {
    Isomorphic,
    Mismatch,
    Ambiguous { labels: Vec<String> },
    Exceptional,
}

struct Input {
    labels: Vec<String>,
    /// Strand of half-edge `2i + k`, as label indices.
    strands: Vec<Vec<usize>>,
    socle: Vec<usize>,
}

fn parse_input(entries: &[LoewyEntry]) -> Result<Input> {
    let bad = |m: String| Error::InconsistentInput(m);
    let mut index = HashMap::new();
    for (i, e) in entries.iter().enumerate() {
        if index.insert(e.id.as_str(), i).is_some() {
            return Err(bad(format!("label `{}` listed twice", e.id)));
        }
    }
    if entries.is_empty() {
        return Err(bad("no simples".into()));
    }
    let lookup = |s: &str| index.get(s).copied().ok_or_else(|| bad(format!("unknown label `{s}`")));
    let mut strands = Vec::with_capacity(2 * entries.len());
    let mut socle = Vec::with_capacity(entries.len());
    for e in entries {
        if e.strands.len() > 2 {
            return Err(bad(format!("P_{} has more than two strands", e.id)));
        }
        let mut padded: Vec<Vec<usize>> =
            e.strands.iter().map(|s| s.iter().map(|x| lookup(x)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        padded.resize(2, Vec::new());
        if e.uniserial != padded.iter().any(Vec::is_empty) {
            return Err(bad(format!("uniserial flag of P_{} contradicts its strands", e.id)));
        }
        strands.extend(padded);
        socle.push(lookup(&e.socle)?);
    }
    Ok(Input { labels: entries.iter().map(|e| e.id.clone()).collect(), strands, socle })
}

fn is_exceptional(input: &Input) -> bool {
    input.labels.len() == 1 && input.strands.iter().all(|s| s == &[0]) && input.socle[0] == 0
}

fn equal_strand_labels(input: &Input) -> Vec<String> {
    (0..input.labels.len())
        .filter(|&i| input.strands[2 * i] == input.strands[2 * i + 1])
        .map(|i| input.labels[i].clone())
        .collect()
}

/// Candidate successors of half-edge `h`.
fn successors(input: &Input, h: usize) -> Vec<usize> {
    let s = &input.strands[h];
    let own = input.socle[h / 2];
    let next_edge = s.first().copied().unwrap_or(own);
    let mut want: Vec<usize> = s.iter().skip(1).copied().collect();
    want.push(own);
    if s.is_empty() {
        want.clear();
    }
    (0..2).map(|k| 2 * next_edge + k).filter(|&x| input.strands[x] == want).collect()
}

fn build(input: &Input, rotation: &[usize]) -> Option<Afbg> {
    let n = rotation.len();
    let mut seen = vec![false; n];
    let mut vertices = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let degree = input.strands[start].len() as u32 + 1;
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            if input.strands[x].len() as u32 + 1 != degree {
                return None;
            }
            seen[x] = true;
            cycle.push(format!("{}.{}", input.labels[x / 2], x % 2));
            x = rotation[x];
        }
        vertices.push((format!("v{}", vertices.len() + 1), Some(degree), cycle));
    }
    let edges = (0..n / 2)
        .map(|i| (format!("{}.0", input.labels[i]), format!("{}.1", input.labels[i])))
        .collect();
    let mut spec = RibbonSpec::from_owned(vertices, edges);
    spec.edge_ids = Some(input.labels.clone());
    let g = build_ribbon_graph(&spec).ok()?;
    let d = DegreeFunction::from_spec(&g, &spec).ok()?;
    Afbg::new(g, d).ok()
}

fn reproduces(a: &Afbg, input: &Input) -> bool {
    let t = loewy_table(a);
    let index: HashMap<&str, usize> = input.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    t.projectives.iter().all(|p| {
        let i = index[t.labels[p.top].as_str()];
        let relabel = |s: &Vec<usize>| s.iter().map(|&e| index[t.labels[e].as_str()]).collect::<Vec<_>>();
        let mut got = [relabel(&p.strands[0]), relabel(&p.strands[1])];
        let mut want = [input.strands[2 * i].clone(), input.strands[2 * i + 1].clone()];
        got.sort();
        want.sort();
        got == want && index[t.labels[p.socle].as_str()] == input.socle[i]
    })
}

/// Every rotation allowed by the local rules, up to swapping the two
/// half-edges of equal-strand edges.
fn candidate_rotations(input: &Input) -> Result<Vec<Vec<usize>>> {
    let n = input.strands.len();
    let succ: Vec<Vec<usize>> = (0..n).map(|h| successors(input, h)).collect();
    let mut pre: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (h, s) in succ.iter().enumerate() {
        for &x in s {
            pre[x].push(h);
        }
    }
    let inconsistent = |m: &str| Error::InconsistentInput(m.to_string());
    let mut rotation = vec![usize::MAX; n];
    // A free edge has both half-edges reachable from the same two preimages.
    let mut free: Vec<(usize, [usize; 2])> = Vec::new();
    for e in 0..n / 2 {
        let (a, b) = (2 * e, 2 * e + 1);
        match (pre[a].as_slice(), pre[b].as_slice()) {
            ([p], [q]) if p != q => {
                rotation[*p] = a;
                rotation[*q] = b;
            }
            ([p, q], [r, s]) if (p, q) == (r, s) => free.push((e, [*p, *q])),
            _ => {
                return Err(inconsistent(&format!(
                    "the strands do not close up into rotation cycles at `{}`",
                    input.labels[e]
                )))
            }
        }
    }
    for (h, &r) in rotation.iter().enumerate() {
        if r == usize::MAX && !free.iter().any(|(_, p)| p.contains(&h)) {
            return Err(inconsistent("a half-edge has no successor"));
        }
    }
    // Swapping the half-edges of an equal-strand edge x flips the bits of
    // x and of the edge both its half-edges rotate into.
    let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(k, (e, _))| (*e, k)).collect();
    let mut generators: Vec<Vec<bool>> = Vec::new();
    for &(x, _) in &free {
        let mut v = vec![false; free.len()];
        v[pos[&x]] ^= true;
        let target = succ[2 * x].first().map(|&t| t / 2);
        if let Some(k) = target.and_then(|t| pos.get(&t)) {
            v[*k] ^= true;
        }
        generators.push(v);
    }
    let pivots = row_reduce(&mut generators);
    let open: Vec<usize> = (0..free.len()).filter(|k| !pivots.contains(k)).collect();
    if open.len() >= 63 || (1u64 << open.len()) > MAX_CONFIGURATIONS {
        return Err(Error::SizeLimitExceeded { actual: 1usize << open.len().min(62), limit: MAX_CONFIGURATIONS as usize });
    }
    let mut out = Vec::new();
    for mask in 0..(1u64 << open.len()) {
        let mut rot = rotation.clone();
        let mut bits = vec![false; free.len()];
        for (j, &k) in open.iter().enumerate() {
            bits[k] = mask >> j & 1 == 1;
        }
        for (k, (e, [p, q])) in free.iter().enumerate() {
            let (first, second) = if bits[k] { (*q, *p) } else { (*p, *q) };
            rot[first] = 2 * e;
            rot[second] = 2 * e + 1;
        }
        out.push(rot);
    }
    Ok(out)
}

/// Gaussian elimination over GF(2); returns the pivot columns.
fn row_reduce(rows: &mut [Vec<bool>]) -> BTreeSet<usize> {
    let mut pivots = BTreeSet::new();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.insert(c);
        r += 1;
    }
    pivots
}

/// Whether some projective has two equal strands, the class in which Loewy
/// data can fail to determine the graph.
pub fn loewy_table_has_equal_strands(a: &Afbg) -> bool {
    loewy_table(a).projectives.iter().any(|p| p.strands[0] == p.strands[1])
}

/// Label sequences around the vertices, each reduced to its primitive
/// period and rotated to its least form; duplicates are kept.
pub fn cyclic_sequences_of(a: &Afbg) -> Vec<Vec<String>> {
    let g = a.graph();
    let mut out: Vec<Vec<String>> = (0..g.num_vertices())
        .map(|v| {
            let seq: Vec<String> = g.star(v).iter().map(|&h| g.edge_id(g.edge_of(h)).to_string()).collect();
            let n = seq.len();
            let period = (1..=n).find(|&p| n.is_multiple_of(p) && (0..n).all(|i| seq[i] == seq[(i + p) % n])).unwrap_or(n);
            let prim = &seq[..period];
            (0..period).map(|k| prim[k..].iter().chain(&prim[..k]).cloned().collect::<Vec<_>>()).min().unwrap()
        })
        .collect();
    out.sort();
    out
}

pub fn cyclic_sequences(entries: &[LoewyEntry]) -> Result<Vec<Vec<String>>> {
    Ok(reconstruct_afbg(entries)?.cyclic_sequences)
}

fn classify(a: &Afbg) -> Vec<(String, LabelCase)> {
    let g = a.graph();
    let seqs: Vec<Vec<usize>> = (0..g.num_vertices())
        .map(|v| g.star(v).iter().map(|&h| g.edge_of(h)).collect())
        .collect();
    let same_cycle = |s: &[usize], t: &[usize]| s.len() == t.len() && (0..s.len()).any(|k| s[k..].iter().chain(&s[..k]).eq(t));
    let uniserial = loewy_table(a).projectives.iter().map(|p| p.is_uniserial()).collect::<Vec<_>>();
    (0..g.num_edges())
        .map(|e| {
            let [x, y] = g.edges()[e];
            let (u, w) = (g.attach(x), g.attach(y));
            let case = if uniserial[e] {
                LabelCase::Uniserial
            } else if u == w {
                LabelCase::Loop
            } else if same_cycle(&seqs[u], &seqs[w]) {
                LabelCase::RepeatedSequence
            } else {
                LabelCase::NonLoopEdge
            };
            (g.edge_id(e).to_string(), case)
        })
        .collect()
}

pub fn reconstruct_afbg(entries: &[LoewyEntry]) -> Result<Reconstruction> {
    let input = parse_input(entries)?;
    if is_exceptional(&input) {
        return Err(Error::Exceptional);
    }
    let mut found: Vec<(crate::ribbon::CanonicalCode, Afbg)> = Vec::new();
    for rot in candidate_rotations(&input)? {
        let Some(a) = build(&input, &rot) else { continue };
        if !reproduces(&a, &input) {
            continue;
        }
        let code = canonical_code(a.graph(), Some(a.degrees().as_slice()))?;
        if !found.iter().any(|(c, _)| *c == code) {
            found.push((code, a));
        }
    }
    match found.len() {
        0 => Err(Error::InconsistentInput("no admissible graph has this Loewy structure".into())),
        1 => {
            let a = found.pop().unwrap().1;
            Ok(Reconstruction { cases: classify(&a), cyclic_sequences: cyclic_sequences_of(&a), afbg: a })
        }
        k => Err(Error::Ambiguous {
            labels: equal_strand_labels(&input),
            reason: format!("{k} non-isomorphic graphs share this Loewy structure"),
        }),
    }
}

pub fn roundtrip_check(a: &Afbg) -> Result<RoundTrip> {
    match reconstruct_afbg(&loewy_input(a)) {
        Ok(r) => Ok(if r.afbg.is_isomorphic_to(a)?.is_some() { RoundTrip::Isomorphic } else { RoundTrip::Mismatch }),
        Err(Error::Ambiguous { labels, .. }) => Ok(RoundTrip::Ambiguous { labels }),
        Err(Error::Exceptional) => Ok(RoundTrip::Exceptional),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::{lambda, star};
    use crate::covering::{cover_finite, CuttingSet};

    fn single_edge(du: u32, dw: u32) -> Afbg {
        let spec = RibbonSpec::from_rotations(&[("u", Some(du), &["h"]), ("w", Some(dw), &["g"])], &[("h", "g")]);
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::from_spec(&g, &spec).unwrap();
        Afbg::new(g, d).unwrap()
    }

    #[test]
    fn lambda_round_trip() {
        assert_eq!(roundtrip_check(&lambda()).unwrap(), RoundTrip::Isomorphic);
        let r = reconstruct_afbg(&loewy_input(&lambda())).unwrap();
        let e1e2 = vec!["e1".to_string(), "e2".to_string()];
        assert_eq!(r.cyclic_sequences, vec![e1e2.clone(), e1e2]);
        assert!(r.cases.iter().all(|(_, c)| *c == LabelCase::RepeatedSequence));
    }

    #[test]
    fn truncated_edge_is_uniserial_case() {
        let a = single_edge(1, 1);
        let input = loewy_input(&a);
        assert!(input[0].uniserial && input[0].strands.is_empty());
        let r = reconstruct_afbg(&input).unwrap();
        assert!(r.afbg.is_isomorphic_to(&a).unwrap().is_some());
        assert_eq!(r.cases[0].1, LabelCase::Uniserial);
    }

    #[test]
    fn double_cover_round_trip() {
        let a = lambda();
        let g = a.graph();
        let cut = CuttingSet::new(g, vec![g.half_edge_index("h'").unwrap(), g.half_edge_index("ih'").unwrap()]).unwrap();
        let c = cover_finite(&a, &cut, 2).unwrap().afbg;
        assert_eq!(roundtrip_check(&c).unwrap(), RoundTrip::Isomorphic);
    }

    #[test]
    fn stars_round_trip() {
        for k in 1..5 {
            for centre in [k as u32, 2 * k as u32] {
                let (g, d) = star(k, centre, 1);
                let a = Afbg::new(g, d).unwrap();
                assert_eq!(roundtrip_check(&a).unwrap(), RoundTrip::Isomorphic, "k={k} centre={centre}");
            }
        }
    }

    #[test]
    fn exceptional_local_graphs() {
        assert_eq!(roundtrip_check(&single_edge(2, 2)).unwrap(), RoundTrip::Exceptional);
        let spec = RibbonSpec::from_rotations(&[("u", Some(2), &["h", "g"])], &[("h", "g")]);
        let g = build_ribbon_graph(&spec).unwrap();
        let d = DegreeFunction::constant(&g, 2);
        let lp = Afbg::new(g, d).unwrap();
        assert_eq!(loewy_input(&lp), loewy_input(&single_edge(2, 2)));
        assert_eq!(roundtrip_check(&lp).unwrap(), RoundTrip::Exceptional);
    }

    #[test]
    fn inconsistent_inputs() {
        let e = |id: &str, strands: Vec<Vec<&str>>, uniserial, socle: &str| LoewyEntry {
            id: id.into(),
            strands: strands.into_iter().map(|s| s.into_iter().map(String::from).collect()).collect(),
            uniserial,
            socle: socle.into(),
        };
        assert!(matches!(
            reconstruct_afbg(&[e("1", vec![vec!["2"]], false, "1")]),
            Err(Error::InconsistentInput(_))
        ));
        assert!(matches!(
            reconstruct_afbg(&[e("1", vec![], true, "2"), e("2", vec![], true, "2")]),
            Err(Error::InconsistentInput(_))
        ));
        let mut lam = loewy_input(&lambda());
        lam[0].socle = "e2".into();
        assert!(matches!(reconstruct_afbg(&lam), Err(Error::InconsistentInput(_))));
    }
}
