//! Algebras of fractional Brauer graph type: ribbon graphs with degrees,
//! their quiver presentations, coverings, gentle trivial extensions,
//! derived-equivalence invariants and reconstruction from Loewy data.

pub mod afbg;
pub mod covering;
pub mod dot;
pub mod error;
pub mod format;
pub mod gentle;
pub mod invariants;
pub mod oracle;
pub mod perm;
pub mod presentation;
pub mod random;
pub mod reconstruct;
pub mod ribbon;

pub use afbg::{is_admissible, nakayama_permutation, Afbg, DegreeFunction, Multiplicity, RepFiniteReport};
pub use covering::{cover_finite, cover_window, quotient_by_nakayama_power, verify_covering, Covering, CuttingSet};
pub use error::{Error, Result};
pub use format::{CutEntry, RibbonSpec, VertexSpec};
pub use gentle::{Gentle, GentleSpec};
pub use invariants::{compare, fingerprint, Fingerprint, Verdict};
pub use oracle::oracle_dimension;
pub use perm::Perm;
pub use presentation::{
    build_presentation, dimension, loewy_table, nakayama_on_presentation, presentation_isomorphism, LoewyTable,
    Presentation,
};
pub use reconstruct::{loewy_input, reconstruct_afbg, roundtrip_check, LoewyEntry, RoundTrip};
pub use ribbon::{build_ribbon_graph, canonical_code, is_isomorphic, CanonicalCode, RibbonGraph};
