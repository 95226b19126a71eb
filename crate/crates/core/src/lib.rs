//! Finite groups as dense Cayley tables, with the invariants needed to
//! study C-groups: groups whose center needs more generators than the
//! group itself, `rk(G) < rk(Z(G))`.
//!
//! The crate builds groups (explicit tables, cyclic and abelian products,
//! dihedral groups, direct products, quotients, the alpha-C family and
//! coset enumeration of presentations) and computes centers, commutator
//! subgroups, Frattini subgroups, central and derived series, ranks and
//! isomorphisms. The [`search`] module checks the alpha-C family and a
//! constructed corpus against the known facts about C-groups.

pub mod alpha_c;
pub mod arith;
pub mod construct;
pub mod error;
pub mod export;
pub mod group;
pub mod iso;
pub mod limits;
pub mod presentation;
pub mod rank;
pub mod search;
pub mod series;
pub mod subgroup;

pub use alpha_c::{alpha_c, alpha_c_with, AlphaCElement, AlphaCParams, CanonicalWord};
pub use construct::{
    abelian_product, abelian_product_with, cyclic, cyclic_with, dihedral, dihedral_with,
    direct_product, direct_product_with, quotient, quotient_with, Quotient,
};
pub use error::{Error, ParseError, Result};
pub use group::{AssociativityCheck, Element, FiniteGroup, GroupFile, Provenance};
pub use iso::{invariant_fingerprint, is_isomorphic, is_isomorphic_with, Fingerprint, IsoResult};
pub use limits::Limits;
pub use presentation::{coset_enumerate, coset_enumerate_with, parse_presentation, Presentation};
pub use rank::{rank, rank_of_center, rank_of_center_with, rank_with, RankMethod, RankResult};
pub use search::{
    enumerate_alpha_c, invariant_report, is_c_group, run_suite, verify_alpha_c, verify_multiple_of_p5,
    verify_p5_claim, AlphaCFamilyQuery, InvariantReport, Suite, SuiteReport,
};
pub use series::{
    abelian_rank, derived_series, is_elementary_abelian, is_p_group, is_solvable,
    nilpotency_class, upper_central_series, Nilpotency, SeriesReport,
};
pub use subgroup::{
    center, closure, commutator_subgroup, frattini, frattini_with, maximal_subgroups, Subgroup,
};
