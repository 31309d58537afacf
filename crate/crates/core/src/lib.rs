//! Exact numerical invariants of foliated surfaces.
//!
//! The crate works entirely with exact rationals. Its pieces, bottom up:
//!
//! - [`exact`]: rationals, coordinate vectors, symmetric forms, exact solving
//!   and inertia, and the Hodge index comparison.
//! - [`surface`]: curve-class lattices, Mumford pullback through a resolution
//!   and the induced pairing of Weil divisors.
//! - [`basket`]: local Riemann–Roch terms `a(x, mK_F)` of canonical foliation
//!   singularities and baskets of them.
//! - [`riemann_roch`]: the Hilbert function `P(m) = χ(mK_F)` and its periodic form.
//! - [`bounds`] and [`enumerate`]: the `K_X²` bound chain and the enumeration
//!   of Hilbert functions with fixed `(K_F², K_F·K_X, i_Q)`.
//! - [`constructions`]: double-cover example families and fibration identities.
//! - [`io`] and [`cli`]: JSON documents and the `folcan` command line.

pub mod basket;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod io;
pub mod riemann_roch;
pub mod surface;

pub use basket::{Basket, BasketSizeBound, LocalProfile, SingularityKind};
pub use bounds::{ample_divisor_numerics, km_envelope, kx2_bounds, BoundReport};
pub use constructions::{
    abelian_double_cover, fibration_identities, riemann_hurwitz, ruled_double_cover,
    AbelianCoverInput, ConstructionReport, RuledCoverInput,
};
pub use enumerate::{
    enumerate_baskets, enumerate_hilbert, enumerate_hilbert_with_workers, EnumeratedFunction,
    EnumerationQuery, QIndexRule,
};
pub use error::{Error, Result};
pub use exact::{
    hodge_check, is_negative_definite, signature, solve_linear, HodgeVerdict, Inertia, Rational,
    RationalVector, SymmetricPairing,
};
pub use riemann_roch::{HilbertFunction, ModelNumerics};
pub use surface::{AmplitudeVerdict, ResolutionData, SurfaceModel};
