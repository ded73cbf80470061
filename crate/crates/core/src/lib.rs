pub mod algebra;
pub mod alphabeta;
pub mod bitangent;
pub mod casestudy;
pub mod conicsystem;
pub mod error;
pub mod fp;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod report;
pub mod resultant;
pub mod scalar;
pub mod suites;
pub mod symfun;

pub use algebra::Algebra;
pub use alphabeta::{AlphaBeta, QuadRelations};
pub use error::{NotDivisible, PolyError};
pub use fp::Fp;
pub use monomial::{Monomial, Vars};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::Scalar;

pub type QPoly = MultiPoly<Rational>;
pub type FpPoly = MultiPoly<Fp>;
pub type QRatFunc = RatFunc<Rational>;
pub type QAlphaBeta = AlphaBeta<Rational>;
