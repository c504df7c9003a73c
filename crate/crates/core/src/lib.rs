//! Exact classification of dyadic triangles.
//!
//! A dyadic triangle is the set of points of `D² = Z[1/2]²` inside the real
//! hull of three non-collinear dyadic points, viewed as an algebra under the
//! arithmetic mean `x ∘ y = (x + y)/2`. Isomorphisms between such triangles
//! are exactly the affine maps of `D²` with unit determinant that carry
//! vertices to vertices.
//!
//! - [`dyadic`]: arithmetic in `Z[1/2]` and odd-modulus congruences.
//! - [`geometry`]: points, affine maps, side and boundary types.
//! - [`hats`]: reduction to representative hats and encoding triples.
//! - [`classify`]: automorphism groups, isomorphism cases, census.
//! - [`oracle`]: exact affine solves used as ground truth.
//! - [`cli`]: the `dytri` command-line front end.

pub mod classify;
pub mod cli;
pub mod dyadic;
pub mod error;
pub mod geometry;
pub mod hats;
pub mod oracle;

pub use classify::{
    automorphism_group, census, isomorphic, isomorphic_hats, iso_case, AutGroup, AutTag,
    CensusReport, IsoCase, IsoResult,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use geometry::{AffineMap, BoundaryType, Matrix2, Perm, Point, Triangle};
pub use hats::{all_encoding_triples, canonical_form, normalize, EncodingTriple, Hat};
