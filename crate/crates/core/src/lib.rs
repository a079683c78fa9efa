//! Exact computation of Hilbert–Samuel functions and Hilbert coefficients
//! of parameter ideals in quotients of polynomial rings, localized at the
//! origin.

pub mod error;
pub mod exactalg;
pub mod groebner;
pub mod hilbert;
pub mod polyring;
pub mod secmethods;
pub mod suite;

pub use error::{Error, Result};
pub use exactalg::{Field, FieldElement};
pub use groebner::{GroebnerBasis, Ideal, Limits};
pub use polyring::{parse_poly, Monomial, MonomialOrder, Polynomial, Ring, RingSpec};
