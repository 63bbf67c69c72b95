//! Atomized semilattices.
//!
//! A finite semilattice over a set of constants is represented by a set of
//! atoms, each identified by the constants it lies below. This crate builds
//! such models from positive order sentences by full crossing, reduces them
//! to their unique non-redundant atomization, and implements the usual
//! algebraic constructions (restriction, renaming, quotients, joins,
//! subalgebras, products, subdirect decomposition) on top. Brute-force
//! oracles in [`oracle`] cross-check the constructions on small signatures.

pub mod algebra;
pub mod atom;
pub mod bits;
pub mod cli;
pub mod crossing;
pub mod error;
pub mod io;
pub mod model;
pub mod oracle;
pub mod relation;
pub mod script;
pub mod signature;

pub use atom::{Atom, Duple, Sign, SignedDuple, Term};
pub use bits::IndexSet;
pub use crossing::{check_consistency, freest_model, full_crossing, ConsistencyReport, ReducePolicy, Verdict};
pub use error::{Error, Result};
pub use model::{ElementClass, Model, TheorySlice, Warning};
pub use relation::{TermRelation, DEFAULT_CAP};
pub use signature::Signature;
