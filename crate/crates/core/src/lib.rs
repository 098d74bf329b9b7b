//! A small engine for qualitative and quantitative comparison.
//!
//! The crate is organized around five cooperating modules:
//!
//! * [`knowledge`] — objects as characteristic bundles, species templates,
//!   similarity, and equivalence-class partitions.
//! * [`logic`] — association graphs, three-valued naive inference over
//!   ground rules, time-indexed distance comparisons, and the
//!   predator/prey scenario engine.
//! * [`order`] — classification of finite binary relations, successor
//!   functions on total orders, mechanical verification of the Peano
//!   axioms, naming, and successor-recursion addition.
//! * [`counting`] — a knower-level simulator for the acquisition of
//!   number-word meanings, with successor and addition over token sets.
//! * [`markov`] — finite row-stochastic chains over predicate states:
//!   n-step transitions, communicating classes, recurrence, and
//!   stationary "mindset" distributions.

pub mod counting;
pub mod knowledge;
pub mod logic;
pub mod markov;
pub mod order;
