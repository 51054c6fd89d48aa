//! Exact-arithmetic toolkit for Feng-Rao distances and Feng-Rao numbers of
//! numerical semigroups.
//!
//! The crate computes the classical (first) and second generalized Feng-Rao
//! distances δ¹, δ², and the Feng-Rao numbers E(Γ, r), three ways:
//!
//! * [`arf`] — a fast recursion over the multiplicity sequence, valid for
//!   Arf semigroups, plus closed formulas for ordinary and hyperelliptic
//!   semigroups;
//! * [`generic`] — a provably sufficient finite search that works for any
//!   numerical semigroup and any order r;
//! * [`generic::feng_rao_distance_oracle`] — a bounded exhaustive scan used
//!   to cross-check both of the above.
//!
//! [`towers`] builds the inductive semigroups attached to the
//! Garcia–Stichtenoth tower of function fields, and [`bounds`] turns δ¹/δ²
//! into the lower bounds for second generalized Hamming weights of dual
//! one-point AG codes (Goppa-like, Pellikaan, Griesmer-order), rendered as
//! comparison tables by the `fengrao` CLI.

pub mod arf;
pub mod bounds;
pub mod error;
pub mod generic;
pub mod output;
pub mod parse;
pub mod semigroup;
pub mod towers;

pub use arf::{
    delta1_arf, delta2_arf, delta2_first_window, delta2_hyperelliptic, delta2_profile,
    e2_from_sequence, e2_translate, FengRaoProfile,
};
pub use bounds::{
    bounds_table, goppa_like, griesmer_order_bound, pellikaan_bound, BoundLevel, BoundsRow,
    GoppaLikeBound,
};
pub use error::{Error, Result};
pub use generic::{
    feng_rao_distance, feng_rao_distance_oracle, feng_rao_number, feng_rao_number_2_apery,
    feng_rao_number_2_apery_restricted, search_set, Configuration, FengRaoNumber,
};
pub use semigroup::{
    enumerate_arf, AperySet, DivisorSet, MultiplicitySequence, NumericalSemigroup,
};
pub use towers::{gs_conductor, gs_lambda_elements, gs_tower, homothecy, HomothecyStep, TowerSpec};
