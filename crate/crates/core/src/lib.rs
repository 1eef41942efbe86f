//! Numerical library for the Barnes zeta function ζ_c(z) = Σ_{n,ℓ≥1} (cℓ+n)^{−z},
//! the Bessel zeta functions ξ_0 and ξ_c over zeros of Bessel functions, their
//! derivatives at zero, and the variation of those derivatives in the parameter c.
//!
//! The same quantities are computed by several independent routes (integral
//! representations, residue/sector sums, and closed forms in special functions),
//! and the [`identities`] module turns the equalities between the routes into an
//! executable verification suite.
//!
//! ```
//! use zvar_core::{barnes, bessel_zeta, ParameterC};
//!
//! let c = ParameterC::new(2.5)?;
//! let integral = bessel_zeta::dxi_dc_integral(c)?;
//! let sector = bessel_zeta::dxi_dc_sector(c)?;
//! assert!((integral.value - sector.value).abs() < 1e-8);
//!
//! let zp = barnes::zeta_c_prime0(ParameterC::new(1.0)?)?;
//! assert!((zp - 0.7535173895).abs() < 1e-9);
//! # Ok::<(), zvar_core::Error>(())
//! ```

// negated comparisons like `!(x > 0.0)` reject NaN along with the out-of-range
// values; quadrature node tables keep their full published precision
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]
#![allow(clippy::manual_is_multiple_of)]

pub mod barnes;
pub mod bessel;
pub mod bessel_zeta;
pub mod error;
pub mod identities;
mod kernel;
pub mod quadrature;
pub mod specfun;

pub use barnes::{LaurentCoefficients, ParameterC};
pub use bessel::BesselZero;
pub use bessel_zeta::{SectorAngle, VariationMethod, VariationResult};
pub use error::{Error, Result};
pub use identities::{IdentityReport, ToleranceProfile};
pub use quadrature::QuadratureResult;
