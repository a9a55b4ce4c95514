//! Geometric text codec.
//!
//! Plaintext symbols become points in the plane; the ciphertext is the list
//! of exact coefficients of lines, cubic curves or interpolating
//! polynomials through those points. Three schemes are provided:
//!
//! * [`scheme::index_line`]: point `(k, code_k)` for each symbol, one line
//!   (or cubic `y^2 = x^3 + ax + b`) per neighbouring pair, wrapping around.
//! * [`scheme::pair_line`]: codes paired into points, one general-form line
//!   per neighbouring pair of points.
//! * [`scheme::lagrange`]: blocks of `g` points sent as polynomial
//!   coefficients.
//!
//! All arithmetic is exact ([`geometry::Rational`]), so decoding is lossless.

pub mod alphabet;
pub mod cli;
pub mod container;
pub mod error;
pub mod geometry;
pub mod repro;
pub mod scheme;
pub mod stats;
pub mod svg;

pub use alphabet::{load_alphabet, to_numbers, to_text, Alphabet, Code, PlainSequence};
pub use container::{deserialize, serialize, CipherStream};
pub use error::{Error, Result};
pub use geometry::Rational;
pub use scheme::Scheme;
