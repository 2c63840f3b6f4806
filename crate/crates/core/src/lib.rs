//! Finite extensive games with perfect information.
//!
//! The crate covers game trees and their validation ([`tree`]), pure and
//! reduced strategies ([`strategy`]), strategic forms with Nash equilibria
//! and iterated weak dominance ([`strategic`]), backward induction and
//! subgame perfect equilibria ([`backward`]), strictly competitive and
//! win/lose/draw games ([`competitive`]), improvement dynamics
//! ([`dynamics`]) and knowledge systems ([`epistemic`]).
//!
//! All payoffs are exact rationals.

pub mod backward;
pub mod competitive;
pub mod corpus;
pub mod dynamics;
pub mod epistemic;
pub mod error;
pub mod format;
pub mod gen;
pub mod outcome;
pub mod strategic;
pub mod strategy;
pub mod tree;

pub use error::{Caps, Error, Result};
pub use outcome::{Outcome, Rational};
pub use strategic::StrategicGame;
pub use strategy::{JointStrategy, ReducedStrategy, Strategy};
pub use tree::{ExtensiveGame, NodeId, Player, RawGame, TreeSpec};
