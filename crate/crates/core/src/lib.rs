//! Exact arithmetic for `r_a` numeral systems: digit streams over
//! `{0, …, r}` evaluated in a base `a > 1` that may be non-integer
//! (rational or quadratic), their cylinder geometry, the digit-transplant
//! function `f` and the fractal sets built from them.

pub mod cylinders;
pub mod digits;
pub mod error;
pub mod exact;
pub mod fractal;
pub mod function;
pub mod output;
pub mod representation;
pub mod verify;

pub use cylinders::{Cylinder, Interval};
pub use digits::{Digit, DigitStream, DigitWord};
pub use error::{Error, ParseError, Result};
pub use exact::ExactReal;
pub use function::SourcePoint;
pub use representation::{Expansion, SystemParams};
