//! Exact invariants of curves on rational normal scrolls `S(a, b)` and of
//! their images under a general linear projection to `P³`.
//!
//! * [`chow`]: Picard lattice, intersection pairing, adjunction.
//! * [`cohom`]: `h⁰, h¹, h²` of line bundles, Riemann-Roch, effectiveness.
//! * [`projection`]: double curve, triple points and pinch points of the
//!   projected surface.
//! * [`curves`]: linkage degree, Hilbert/Rao/specialty functions, normal
//!   bundle dimensions.
//! * [`ruled_cubic`]: `(c, d, α)` arithmetic on the ruled cubic surface and
//!   the maximal-rank classification of its smooth curves.
//!
//! All arithmetic is exact. Integer inputs are `i64`; intermediate values are
//! computed in `i128` with overflow reported as [`Error::Overflow`].

pub mod arith;
pub mod chow;
pub mod cohom;
pub mod curves;
pub mod error;
pub mod projection;
pub mod ruled_cubic;

pub use chow::{DivisorClass, ScrollSurface};
pub use error::{Error, Result};
