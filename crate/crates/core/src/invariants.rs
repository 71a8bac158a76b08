//! Derived-equivalence invariants of an admissible graph. Agreement is a
//! necessary condition only.

use std::fmt;

use serde::Serialize;

use crate::afbg::{Afbg, Multiplicity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedSummary {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub multiplicities: Vec<Multiplicity>,
    pub bipartite: bool,
}

/// Reported but never compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extras {
    /// Orbit sizes of `ρ∘ι`.
    pub face_perimeters: Vec<usize>,
    /// Orbit sizes of `ν⁻¹∘(ρ∘ι)²`.
    pub special_orbits: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub multiplicities: Vec<Multiplicity>,
    pub bipartite: bool,
    pub nakayama_order: usize,
    pub reduced: ReducedSummary,
    pub extras: Extras,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    NumVertices,
    NumEdges,
    Multiplicities,
    Bipartite,
    NakayamaOrder,
    Reduced,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::NumVertices => "num_vertices",
            Field::NumEdges => "num_edges",
            Field::Multiplicities => "multiplicities",
            Field::Bipartite => "bipartite",
            Field::NakayamaOrder => "nakayama_order",
            Field::Reduced => "reduced",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Distinguished(Field),
    /// No listed invariant separates the two; this is not a proof of
    /// derived equivalence.
    Consistent,
}

pub fn special_orbit_multiset(a: &Afbg) -> Vec<usize> {
    let phi = a.graph().face_permutation();
    a.nakayama().inverse().after(&phi.after(&phi)).cycle_type()
}

pub fn fingerprint(a: &Afbg) -> Fingerprint {
    let g = a.graph();
    let red = a.reduced_form();
    Fingerprint {
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
        multiplicities: a.multiplicity_multiset(),
        bipartite: g.is_bipartite(),
        nakayama_order: a.nakayama_order(),
        reduced: ReducedSummary {
            num_vertices: red.graph().num_vertices(),
            num_edges: red.graph().num_edges(),
            multiplicities: red.multiplicity_multiset(),
            bipartite: red.graph().is_bipartite(),
        },
        extras: Extras { face_perimeters: g.face_perimeters(), special_orbits: special_orbit_multiset(a) },
    }
}

/// First differing field in declaration order.
pub fn compare(f: &Fingerprint, g: &Fingerprint) -> Verdict {
    let checks = [
        (Field::NumVertices, f.num_vertices == g.num_vertices),
        (Field::NumEdges, f.num_edges == g.num_edges),
        (Field::Multiplicities, f.multiplicities == g.multiplicities),
        (Field::Bipartite, f.bipartite == g.bipartite),
        (Field::NakayamaOrder, f.nakayama_order == g.nakayama_order),
        (Field::Reduced, f.reduced == g.reduced),
    ];
    checks.iter().find(|(_, same)| !same).map_or(Verdict::Consistent, |(field, _)| Verdict::Distinguished(*field))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl Fingerprint {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("vertices: {}\n", self.num_vertices));
        s.push_str(&format!("edges: {}\n", self.num_edges));
        s.push_str(&format!("multiplicities: {{{}}}\n", join(&self.multiplicities)));
        s.push_str(&format!("bipartite: {}\n", self.bipartite));
        s.push_str(&format!("nakayama order: {}\n", self.nakayama_order));
        s.push_str(&format!(
            "reduced form: {} vertices, {} edges, multiplicities {{{}}}, bipartite {}\n",
            self.reduced.num_vertices,
            self.reduced.num_edges,
            join(&self.reduced.multiplicities),
            self.reduced.bipartite
        ));
        s.push_str(&format!("face perimeters (faces are orbits of rho*iota): {{{}}}\n", join(&self.extras.face_perimeters)));
        s.push_str(&format!("special orbits (nu^-1 (rho*iota)^2): {{{}}}\n", join(&self.extras.special_orbits)));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::lambda;
    use crate::covering::{cover_finite, CuttingSet};
    use crate::gentle::tests::{a_prime, kronecker};

    fn d1_cover() -> Afbg {
        let a = lambda();
        let g = a.graph();
        let cut = CuttingSet::new(g, vec![g.half_edge_index("h'").unwrap(), g.half_edge_index("ih'").unwrap()]).unwrap();
        cover_finite(&a, &cut, 2).unwrap().afbg
    }

    #[test]
    fn lambda_fingerprint() {
        let f = fingerprint(&lambda());
        assert_eq!((f.num_vertices, f.num_edges, f.bipartite, f.nakayama_order), (2, 2, true, 1));
        assert_eq!(join(&f.multiplicities), "1/1, 1/1");
        assert_eq!(f.extras.face_perimeters, vec![2, 2]);
        // ν and (ρι)² are both the identity here
        assert_eq!(f.extras.special_orbits, vec![1, 1, 1, 1]);
    }

    #[test]
    fn double_cover_fingerprint() {
        let f = fingerprint(&d1_cover());
        assert_eq!((f.num_vertices, f.num_edges, f.nakayama_order), (2, 4, 2));
        assert_eq!(join(&f.multiplicities), "1/2, 1/2");
        assert_eq!(f.reduced, fingerprint(&lambda()).reduced);
        assert_eq!(compare(&fingerprint(&lambda()), &f), Verdict::Distinguished(Field::NumEdges));
    }

    #[test]
    fn compare_is_reflexive() {
        let f = fingerprint(&lambda());
        assert_eq!(compare(&f, &f), Verdict::Consistent);
    }

    #[test]
    fn two_fold_extensions_agree_on_all_invariants() {
        let (c1, _) = kronecker().r_fold_trivial_extension(2).unwrap();
        let (c2, _) = a_prime().r_fold_trivial_extension(2).unwrap();
        let (f1, f2) = (fingerprint(&c1), fingerprint(&c2));
        assert_eq!(compare(&f1, &f2), Verdict::Consistent);
        // The extras do separate them: ν = (ρι)² on the first, (ρι)² = id on the second.
        assert_eq!(f1.extras.special_orbits, vec![1; 8]);
        assert_eq!(f2.extras.special_orbits, vec![2; 4]);
        assert_eq!((f1.extras.face_perimeters.clone(), f2.extras.face_perimeters.clone()), (vec![4, 4], vec![2; 4]));
        assert!(c1.is_isomorphic_to(&c2).unwrap().is_none());
    }
}
