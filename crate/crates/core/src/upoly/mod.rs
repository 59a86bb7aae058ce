//! The polynomial ring `R^n[w]` over the rational-function field and its
//! Laurent extension.

pub mod bound;
pub mod dense;
mod ffgcd;
pub mod laurent;
pub mod power;

pub use bound::{root_bound, RootBound};
pub use dense::UniPoly;
pub use laurent::Laurent;
pub use power::{perfect_power, tschirnhaus, Depressed, PerfectPowerCert};
