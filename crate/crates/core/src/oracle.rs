//! Dimension of a presented algebra by direct path enumeration.
//!
//! Independent of the walk basis: paths avoiding the zero relations are
//! listed, paths longer than the degree of their first arrow are dropped
//! (they lie in the ideal), and the commutation relations are applied as
//! rewrites between listed paths. A class touching a dropped path is zero.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::presentation::Presentation;

pub const ORACLE_LIMIT: usize = 40;

pub fn oracle_dimension(p: &Presentation) -> Result<usize> {
    let n = p.arrows().len();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimitExceeded { actual: n, limit: ORACLE_LIMIT });
    }
    let arrows = p.arrows();
    let zero: std::collections::HashSet<(usize, usize)> = p.zeros().iter().copied().collect();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if path.len() < arrows[path[0]].degree as usize + 1 {
            for b in 0..n {
                if arrows[b].source == arrows[last].target && !zero.contains(&(b, last)) {
                    let mut next = path.clone();
                    next.push(b);
                    stack.push(next);
                }
            }
        }
        paths.push(path);
    }
    // Paths of length d(first)+1 were kept only to witness vanishing.
    let index: HashMap<Vec<usize>, usize> = paths.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let mut parent: Vec<usize> = (0..paths.len()).collect();
    let mut dead: Vec<bool> = paths.iter().map(|q| q.len() > arrows[q[0]].degree as usize).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (i, path) in paths.iter().enumerate() {
        for (from, to) in p.commutations().iter().flat_map(|(l, r)| [(l, r), (r, l)]) {
            let k = from.len();
            if k > path.len() {
                continue;
            }
            for pos in 0..=path.len() - k {
                if path[pos..pos + k] != from[..] {
                    continue;
                }
                let mut image = path[..pos].to_vec();
                image.extend_from_slice(to);
                image.extend_from_slice(&path[pos + k..]);
                let survives = image.windows(2).all(|w| !zero.contains(&(w[1], w[0])));
                match index.get(&image) {
                    Some(&j) if survives => {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                    _ => dead[i] = true,
                }
            }
        }
    }
    let mut class_dead: HashMap<usize, bool> = HashMap::new();
    for (i, &d) in dead.iter().enumerate() {
        let r = find(&mut parent, i);
        *class_dead.entry(r).or_insert(false) |= d;
    }
    Ok(p.num_vertices() + class_dead.values().filter(|d| !**d).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::{lambda, star};
    use crate::afbg::Afbg;
    use crate::presentation::{build_presentation, dimension};

    #[test]
    fn lambda_has_dimension_eight() {
        assert_eq!(oracle_dimension(&build_presentation(&lambda())).unwrap(), 8);
    }

    #[test]
    fn stars_agree_with_closed_form() {
        for k in 1..4 {
            for c in 1..4 {
                for l in 1..3 {
                    let (g, d) = star(k, c, l);
                    if let Ok(a) = Afbg::new(g, d) {
                        assert_eq!(oracle_dimension(&build_presentation(&a)).unwrap(), dimension(&a), "k={k} c={c} l={l}");
                    }
                }
            }
        }
    }
}
