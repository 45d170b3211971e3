//! Exact computations in finite classical polar spaces.
//!
//! The crate builds the classical polar spaces (symplectic, hyperbolic and
//! hermitian on `V ⊕ V*`, plus user-supplied quadrics) over small finite
//! fields, materialises their point sets, and decides by exhaustive
//! verification the properties that drive the theory of regularity:
//! perp-minimality of sub-generators, the properties (R1)-(R4), tightness of
//! the minimal embedding, complementary generators, and the three-generators
//! property of partial dualities.  A separate backend models the
//! countable-rank constructions with finitely-supported vectors so that the
//! non-regular quadric obtained by restricting the hyperbolic form to
//! `V ⊕ V'` can be probed with finite certificates.
//!
//! Modules:
//! - [`gf`]: `GF(p^k)` arithmetic with involutions and char-2 square roots.
//! - [`linalg`]: canonical echelon subspace algebra over `F^n`.
//! - [`forms`]: alternating / quadratic / hermitian forms and their radicals.
//! - [`polar`]: the point-line geometry (perps, generators, stars, rosettes).
//! - [`regularity`]: perp-minimality, (R1)-(R4), tightness, complements.
//! - [`duality`]: partial dualities and the three-generators property.
//! - [`infmodel`]: finitely-supported vectors over a countable index set.
//! - [`spec`]: textual space specifications ("sp(2,2)", "custom:{...}", ...).
//! - [`suites`]: named verification suites used by the CLI and the tests.

pub mod duality;
pub mod forms;
pub mod gf;
pub mod infmodel;
pub mod linalg;
pub mod polar;
pub mod regularity;
pub mod report;
pub mod spec;
pub mod suites;

pub use forms::{Form, FormKind};
pub use gf::{Fe, Gf};
pub use linalg::Subspace;
pub use polar::PolarSpace;
