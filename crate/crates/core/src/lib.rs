//! Finite Bol and Moufang loops.
//!
//! Cayley tables and identity checkers live in [`table`]; permutation groups in
//! [`perm`] and [`permgroup`]; multiplication groups, normal subloops and
//! simplicity in [`multgroups`]; symmetric spaces on groups in [`symspace`];
//! the (σ, φ)-group construction of Bol loops in [`sigmaphi`]. Test data
//! (standard groups, Chein doubles, Bol-constrained search) comes from
//! [`corpus`], and [`io`] reads and writes the text formats.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod io;
pub mod multgroups;
pub mod perm;
pub mod permgroup;
pub mod sigmaphi;
pub mod symspace;
pub mod table;

pub use error::{Error, Result};
