//! Exact weight bookkeeping for the boundary cohomology of Siegel threefolds
//! with coefficients in the irreducible GSp(4)-representation `V_λ`,
//! `λ = α(k1, k2, r)`.
//!
//! The pipeline is
//! [`root_data`] → [`weyl`] → [`kostant`] → [`boundary`] → [`intersection`],
//! each stage a set of pure functions on immutable values.

pub mod boundary;
pub mod error;
pub mod freudenthal;
pub mod intersection;
pub mod kostant;
pub mod laurent;
pub mod root_data;
pub mod verify;
pub mod weyl;

pub use boundary::{CohomologyEntry, Provenance, StratumDatum};
pub use error::{Error, Result};
pub use intersection::{analysis_report, AnalysisReport, IntermediateProfile};
pub use kostant::LeviModule;
pub use laurent::LaurentPoly;
pub use root_data::{make_weight, Exponent, Parabolic, RootDatum, WeightTriple};
pub use weyl::WeylElement;
