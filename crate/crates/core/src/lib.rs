//! Exact Boolean analysis on the Hamming cube and union-closed set families.
//!
//! Every quantity is computed exactly: Fourier coefficients are kept as
//! integers scaled by `2^n`, and all derived rationals are [`Dyadic`] values.
//!
//! A family `F ⊆ 2^[n]` is identified with the function that is `-1` on the
//! members of `F` and `+1` elsewhere (see [`cube::family_to_function`]).

pub mod cube;
pub mod dyadic;
mod error;
pub mod extremal;
pub mod families;
pub mod format;
pub mod influence;
pub mod spectral;
pub mod verify;

pub use cube::{BooleanFunction, CharacterSpec, CubePoint, SetFamily, Sign};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use influence::InfluenceProfile;
pub use spectral::Spectrum;
