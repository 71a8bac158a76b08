mod common;

use fbga::afbg::Multiplicity;
use fbga::covering::{cover_finite, deck_shift, quotient_by_nakayama_power, verify_covering};
use fbga::invariants::{compare, fingerprint, Verdict};
use fbga::perm::Perm;
use fbga::presentation::{build_presentation, dimension};
use fbga::random::{random_afbg, random_cut, random_relabel, uniform_brauer_graph};
use fbga::Afbg;
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Base with uniform multiplicity `m`, its cover with `r` sheets, and the cut used.
fn uniform_cover(seed: u64, m: u32, r: usize) -> (Afbg, fbga::covering::Covering, fbga::covering::CuttingSet) {
    let mut rng = rng(seed);
    let ne = rng.gen_range(1..=6);
    let nv = rng.gen_range(1..=ne + 1);
    let base = uniform_brauer_graph(&mut rng, nv, ne, m);
    let cut = random_cut(&mut rng, base.graph());
    let cover = cover_finite(&base, &cut, r).unwrap();
    (base, cover, cut)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_projection_is_a_covering(seed in any::<u64>(), m in 1u32..4, r in 1usize..5) {
        let (base, cover, _) = uniform_cover(seed, m, r);
        prop_assert!(verify_covering(&cover.afbg, &base, &cover.projection));
        prop_assert_eq!(cover.afbg.graph().num_half_edges(), r * base.graph().num_half_edges());
        prop_assert_eq!(cover.afbg.graph().num_vertices(), base.graph().num_vertices());
    }

    #[test]
    fn cover_dimension_scales_by_r(seed in any::<u64>(), m in 1u32..4, r in 1usize..5) {
        let (base, cover, _) = uniform_cover(seed, m, r);
        prop_assert_eq!(dimension(&cover.afbg), r * dimension(&base));
    }

    #[test]
    fn cover_multiplicities_divide_by_r(seed in any::<u64>(), m in 1u32..4, r in 1usize..5) {
        let (base, cover, _) = uniform_cover(seed, m, r);
        let mut scaled: Vec<Multiplicity> =
            base.multiplicity_multiset().into_iter().map(|x| Multiplicity(x.0 / r as u64)).collect();
        scaled.sort();
        prop_assert_eq!(cover.afbg.multiplicity_multiset(), scaled);
    }

    #[test]
    fn bipartiteness_is_preserved_by_covers(seed in any::<u64>(), m in 1u32..4, r in 1usize..5) {
        let (base, cover, _) = uniform_cover(seed, m, r);
        prop_assert_eq!(cover.afbg.graph().is_bipartite(), base.graph().is_bipartite());
    }

    #[test]
    fn coprime_covers_reduce_to_the_base(seed in any::<u64>(), m in 1u32..5, r in 1usize..6) {
        prop_assume!(r.gcd(&(m as usize)) == 1);
        let (base, cover, _) = uniform_cover(seed, m, r);
        prop_assert!(cover.afbg.reduced_form().is_isomorphic_to(&base.reduced_form()).unwrap().is_some());
        prop_assert_eq!(cover.afbg.nakayama().cycle_type(), vec![r; base.graph().num_half_edges()]);
    }

    #[test]
    fn reduced_cover_is_the_gcd_cover(seed in any::<u64>(), m in 1u32..5, r in 1usize..7) {
        let (base, cover, cut) = uniform_cover(seed, m, r);
        let g = r.gcd(&(m as usize));
        let small = cover_finite(&base, &cut, g).unwrap().afbg;
        prop_assert!(cover.afbg.reduced_form().is_isomorphic_to(&small).unwrap().is_some());
    }

    #[test]
    fn nakayama_is_a_deck_power(seed in any::<u64>(), m in 1u32..4, r in 1usize..5) {
        let (_, cover, _) = uniform_cover(seed, m, r);
        prop_assert_eq!(cover.afbg.nakayama(), &deck_shift(&cover).pow(m as usize));
    }

    #[test]
    fn quotient_by_full_orbit_is_reduced_form(seed in any::<u64>()) {
        let a = random_afbg(&mut rng(seed), 24);
        let k = a.nakayama_order();
        let q = quotient_by_nakayama_power(&a, k).unwrap();
        prop_assert!(q.is_isomorphic_to(&a).unwrap().is_some());
        let q1 = quotient_by_nakayama_power(&a, 1).unwrap();
        prop_assert!(q1.is_isomorphic_to(&a.reduced_form()).unwrap().is_some());
    }

    #[test]
    fn compare_is_reflexive_and_relabel_invariant(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let a = random_afbg(&mut rng, 30);
        let b = random_relabel(&mut rng, &a);
        prop_assert_eq!(compare(&fingerprint(&a), &fingerprint(&a)), Verdict::Consistent);
        prop_assert_eq!(fingerprint(&a), fingerprint(&b));
        prop_assert!(a.is_isomorphic_to(&b).unwrap().is_some());
    }

    #[test]
    fn reduced_form_is_idempotent(seed in any::<u64>()) {
        let a = random_afbg(&mut rng(seed), 30);
        let red = a.reduced_form();
        prop_assert!(red.reduced_form().is_isomorphic_to(&red).unwrap().is_some());
        prop_assert!(red.nakayama().is_identity());
    }

    #[test]
    fn presentation_counts(seed in any::<u64>()) {
        let a = random_afbg(&mut rng(seed), 30);
        let p = build_presentation(&a);
        prop_assert_eq!(p.num_vertices(), a.graph().num_edges());
        prop_assert_eq!(p.arrows().len(), a.graph().num_half_edges());
        prop_assert_eq!(p.zeros().len(), a.graph().num_half_edges());
    }
}

#[test]
fn nakayama_is_identity_exactly_on_reduced_graphs() {
    let mut rng = rng(11);
    for _ in 0..50 {
        let a = random_afbg(&mut rng, 30);
        let trivial = a.nakayama() == &Perm::identity(a.graph().num_half_edges());
        assert_eq!(trivial, a.reduced_form().graph().num_half_edges() == a.graph().num_half_edges());
    }
}
