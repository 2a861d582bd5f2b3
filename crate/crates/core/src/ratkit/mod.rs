//! Exact rationals and Hirzebruch–Jung chains.

mod chain;
mod rational;

pub use chain::{hj_descriptor, hj_eval, hj_expand, ChainDescriptor};
pub use rational::{q, rat_ceil, serialize_display, Rational};
