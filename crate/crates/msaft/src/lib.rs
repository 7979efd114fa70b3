//! Exact combinatorics of the secants of a regular n-gon.
//!
//! The library covers one tightly linked circle of objects:
//!
//! * [ngon]: secants, parallel families, crossings, forbidden triples, and
//!   the dihedral action;
//! * [msafts]: maximal forbidden-triple-free secant sets (always of size
//!   2n), enumerated exhaustively and through strip-graph walks, with the
//!   unique secant walk and the moving lemma;
//! * [strip]: the column graph of right-neighbor moves, exact lattice-path
//!   counting, reflection bijections, and the determinant count;
//! * [binom]: arbitrary-precision binomial arithmetic and the identity
//!   suite that the closed-form count rests on;
//! * [poly] and [ideal]: sparse exact-rational polynomials, the
//!   diagonal-first term order, the 3x3 interval minors of the symmetric
//!   matrix, and the S-pair certificate that they form a Groebner basis.
//!
//! Everything is exact; no floating point is involved anywhere.

pub mod binom;
pub mod error;
pub mod ideal;
pub mod msafts;
pub mod ngon;
pub mod poly;
pub mod strip;

pub use error::Error;
pub use msafts::Msaft;
pub use ngon::{NGon, Secant, SecantSet};
