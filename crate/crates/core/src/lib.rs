//! Factorization invariants of numerical monoids.
//!
//! The crate computes factorization sets, catenary degrees and Betti
//! elements of numerical monoids, and builds monoids with a prescribed set
//! of catenary degrees by repeatedly adjoining an element to a scaled copy
//! of a smaller monoid.
//!
//! It is `no_std` (with `alloc`) unless the `parallel` feature is enabled,
//! which spreads catenary sweeps over a rayon thread pool.
//!
//! ```
//! use numsg_core::{catenary, NumericalMonoid};
//!
//! let s = NumericalMonoid::new(&[90, 91, 96, 120, 150]).unwrap();
//! assert_eq!(catenary::catenary_element(&s, 480).unwrap(), 5);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod arith;
pub mod catenary;
pub mod construction;
pub mod error;
pub mod factorization;
pub mod monoid;
pub mod oracle;

pub use catenary::{
    betti_elements, catenary_element, catenary_set, monoid_catenary, nabla_graph, CatenaryConfig,
    CatenaryProfile, NablaGraph,
};
pub use construction::{
    adjoin, glue, realize, validate_target, verify_trace, AdjoinStep, BPolicy, Gluing, GluingSpec,
    RealizationTrace, TargetViolation, VerifyBudget, VerifyReport,
};
pub use error::{Error, Result};
pub use factorization::{factorizations, FactorizationVector};
pub use monoid::NumericalMonoid;
