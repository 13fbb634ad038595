//! Analysis of finitely presented bijections of the integers.
//!
//! The entry point is the presentation DSL: [`presentation::parse`] turns text
//! into an expression tree and [`presentation::validate`] normalizes it into a
//! [`presentation::ValidatedBijection`]. On top of that the crate decides
//! periodicity and decomposes the integers into orbits ([`orbit`]), builds a
//! new total order under which the map is strictly increasing together with an
//! ordered-group shift normal form ([`reorder`]), derives the induced
//! 2-coloring ([`coloring`]), and decides conjugacy to a shift ([`conjugacy`]).
//! Every symbolic result can be cross-checked against the deliberately naive
//! implementations in [`oracle`].
//!
//! All arithmetic is exact; points of the carrier are arbitrary-precision
//! integers ([`Int`]).

pub mod coloring;
pub mod conjugacy;
pub mod corpus;
pub mod error;
pub mod orbit;
pub mod oracle;
pub mod pairing;
pub mod presentation;
pub mod reorder;
pub mod report;
mod window;

pub use error::Error;
pub use window::Window;

/// Carrier points. Exact, unbounded.
pub type Int = num_bigint::BigInt;

/// Shorthand used throughout tests and examples.
pub fn int(v: i64) -> Int {
    Int::from(v)
}
