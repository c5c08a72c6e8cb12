//! Exact computation with graded Betti diagrams.
//!
//! * [`diagram`]: sparse rational Betti diagrams and their statistics
//! * [`purefun`]: normalized pure diagrams and the gap-vector functions `b_j`
//! * [`lemmas`]: seeded exact checks of the derivative and minimum properties of `b_j`
//! * [`decomposition`]: greedy Boij-Söderberg decomposition
//! * [`beh`]: rank lower bounds, the regularity shape hypothesis, exhaustive scans
//! * [`asymptotics`]: lower bounds for Betti numbers of powers of ideals
//! * [`monomial`]: Betti diagrams of monomial quotients via the Taylor complex

pub mod asymptotics;
pub mod beh;
pub mod decomposition;
pub mod degree;
pub mod diagram;
pub mod error;
pub mod lemmas;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod purefun;
pub mod rational;

pub use decomposition::{decompose, recompose, Decomposition};
pub use degree::{DegreeSequence, GapVector};
pub use diagram::BettiDiagram;
pub use error::{Error, Result};
pub use monomial::{taylor_betti, MonomialIdeal};
pub use purefun::{herzog_kuhl, PureDiagram};
pub use rational::Rational;
