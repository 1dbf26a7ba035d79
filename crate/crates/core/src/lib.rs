//! Arc combinatorics for the n-cluster category of type A∞.
//!
//! Indecomposable objects are n-admissible arcs `(t,u)` on the integer line,
//! subcategories are (possibly infinite) sets of arcs, and
//!
//! * `Ext`/`Hom` dimensions come from coordinate inequalities ([`hom_ext`]);
//! * crossing of arcs detects non-vanishing `Ext^i`, `1 <= i <= n`;
//! * n-cotorsion pairs are pairs `(X, Y)` with `X = nc Y`, `Y = nc X` and two
//!   fountain conditions ([`cotorsion`]);
//! * mutation of a pair at a set of core arcs `D` is rotation inside the
//!   `D`-cells ([`mutation`]).
//!
//! The [`oracle`] module holds brute-force checks used by the test suites and
//! the `oracle` CLI command.

pub mod arc;
pub mod arc_set;
pub mod cli;
pub mod cotorsion;
pub mod error;
pub mod hom_ext;
pub mod io;
pub mod mutation;
pub mod oracle;
pub mod region;
pub mod render;

pub use arc::{normalize, parse_arc_list, Arc, ComponentIndex, ModelParams};
pub use arc_set::{ArcSet, Finiteness, FountainFamily, FountainLoci, PtolemyViolation, Window};
pub use cotorsion::{check_pair, core, rigidity_check, PairReport};
pub use error::{Error, Result};
pub use hom_ext::{ext1_case, ext_dim, ext_profile, ext_triangle, hom_dim, ExtCase, ExtTriangle};
pub use mutation::{
    mutate_pair, mutation_via_triangle, predecessor, rotate_arc, rotate_arc_inverse, rotate_set,
    successor, DividerSet, MutationOutcome, RotationResult,
};
pub use region::IntRegion;
