//! Exact-arithmetic engine for Hopf-power Markov chains.
//!
//! A graded connected Hopf algebra with a suitable basis gives rise to a
//! Markov chain: the transition matrix is the transpose of the matrix of
//! `a^{-n} Ψ^a` (the normalised a-th Hopf-power map), after a Doob transform
//! by the rescaling function `η`. This crate builds those chains exactly —
//! every coefficient is a `BigInt`-backed rational, never a float — and
//! diagonalises them with the four eigenbasis algorithms for commutative or
//! cocommutative Hopf algebras (Eulerian idempotents, symmetrised products of
//! primitives, and the two Lyndon-word refinements).
//!
//! The worked chains are riffle-shuffling (shuffle algebra), rock-breaking
//! (complete symmetric functions), restriction-then-induction (Schur basis),
//! edge-removal on graphs, tree-pruning (Connes-Kreimer forests), and the
//! descent-set chain (fundamental quasisymmetric functions). Closed-form
//! eigenfunctions for these live in [`named`], Monte-Carlo samplers in
//! [`simulate`].

pub mod chain;
pub mod hopf;
pub mod instances;
pub mod keys;
pub mod lincomb;
pub mod matrix;
pub mod named;
pub mod rational;
pub mod simulate;
pub mod tables;
pub mod verify;
pub mod words;

pub use keys::BasisKey;
pub use lincomb::{KeyComb, KeyTensor, LinComb, TensorComb};
pub use rational::Rational;
