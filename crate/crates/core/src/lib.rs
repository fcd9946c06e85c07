//! Association schemes over finite point sets, built around circulant
//! digraphs.
//!
//! The crate provides:
//!
//! * [`digraph`] — finite simple digraphs, Cayley digraphs over `Z_n`,
//!   directed distances, two-way distance partitions, girth, arc types;
//! * [`scheme`] — full verification of the association-scheme axioms on a
//!   relation partition, the intersection tensor, relation products,
//!   closed subsets, primitivity, and the standard intersection-number
//!   identities;
//! * [`constructions`] — prime-field utilities, cyclotomic schemes
//!   `Cyc(p, d)`, Paley digraphs, circuits, the multiplier action on
//!   connection sets and its canonical forms;
//! * [`spectra`] — eigenvalues and multiplicities of translation schemes
//!   over `Z_n` via character sums, and the pseudocyclicity test;
//! * [`theorems`] — executable checks for the structure theory of
//!   commutative schemes generated by a non-symmetric relation, circuit
//!   regularity checks, and the family membership test for primitive
//!   weakly distance-regular circulants;
//! * [`classifier`] — an exhaustive, multiplier-canonical census of
//!   circulant digraph candidates for a prime modulus, verifying that the
//!   primitive weakly distance-regular ones are exactly the circuit, the
//!   Paley digraph (for p ≡ 3 mod 4), and `Cay(Z_13, {1,3,9})` at p = 13.
//!
//! With the default `parallel` feature the classifier and the axiom
//! checker fan out over rayon; without it every code path runs
//! sequentially. Output is identical either way.

// index loops over class/point indices mirror the tensor notation
#![allow(clippy::needless_range_loop)]

pub mod bits;
pub mod classifier;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod json;
pub mod scheme;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Result};
