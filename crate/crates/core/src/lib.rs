pub mod catalog;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod level;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod relative;
pub mod spec_file;
pub mod verify;

pub use catalog::{catalog, Catalog};
pub use error::{Error, Result, SpecError};
pub use graded::{presentations_equivalent, DegreeFunctional, QuotientRing, RingPresentation};
pub use groebner::{buchberger, GroebnerBasis, MonomialOrder};
pub use level::{cusp_count_mu, group_order_gamma, LevelIndex, MuConvention};
pub use poly::{GeneratorSet, Monomial, Polynomial};
pub use rational::Rational;
pub use relative::{PushforwardRule, RelativeRing, TabulatedPushforward};
pub use spec_file::{load_ring_spec, LoadedRing, RingSpecFile};
pub use verify::{verify, Check, Report, Scope, Status};
