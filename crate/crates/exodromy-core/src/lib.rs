//! Finite models of group actions on stratified complexes and the
//! categories they generate.
//!
//! The crate computes orbit categories of finite permutation groups,
//! stabilizer stratifications and quotients of combinatorial complexes,
//! exit-path categories presented by generators and relations, and checks
//! the classification of the quotient functor as a right fibration pulled
//! back from the pointed orbit category.
//!
//! Everything here is pure computation over owned data; IO, file formats
//! and the command line front end live in the companion `exodromy` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod complex;
pub mod exit;
pub mod fincat;
pub mod group;
pub mod lift;
pub mod models;
pub mod orbit;
pub mod perm;
pub mod poset;
pub mod report;
pub mod rewrite;
pub mod word;

pub use report::Verdict;
