//! Momentum-space spinor algebra for the (1/2,0) + (0,1/2) representation:
//! Dirac u/v and self/anti-self charge-conjugate lambda/rho 4-spinors, with
//! machine-checked identities for every normalization, symmetry map,
//! equation residual and spectrum the library constructs.
//!
//! Conventions: metric (+,-,-,-), positive-energy shell, chiral
//! representation by default with the top 2-spinor block right-handed.

pub mod algebra;
pub mod dirac;
pub mod equations;
pub mod error;
pub mod kinematics;
pub mod majorana;
pub mod report;
pub mod suites;

pub use algebra::{ComplexMatrix, ComplexVector, GammaBasis};
pub use dirac::{DiracSpinor, NormConvention, SpinProjection, SpinorKind};
pub use equations::{EightSpinor, FrequencyConvention, ThetaVector};
pub use error::{Error, Result};
pub use kinematics::{BoostParameters, FourMomentum, Helicity};
pub use majorana::{ChargeConjugation, ConjClass, Eta, Family, MajoranaSpinor, XiKind};
pub use report::{CheckResult, VerificationReport};
pub use suites::{NegativeControl, SuiteConfig};
