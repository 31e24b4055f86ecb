//! Executable inequality descriptors, weighted means and equivalence witnesses.
//!
//! Every inequality is a descriptor `{V, E, F, direction}` evaluated in
//! arbitrary precision. Equivalence proofs between inequalities are encoded
//! as witnesses (point maps or derivations) and checked by seeded sampling.

pub mod catalog;
pub mod checker;
mod error;
pub mod means;
pub mod numerics;
pub mod transforms;

pub use catalog::{
    classify, complementary, list_catalog, lookup, CatalogListing, Direction, InequalityDescriptor,
    Mutation, Params, Point, PointClassification, PointRepr, Region, Verdict,
};
pub use checker::{
    run_inequality_check, run_suite, sample_point, search_violation, EntryReport, EntrySpec,
    SuiteConfig, SuiteReport,
};
pub use error::{Error, Result};
pub use means::{PopoviciuConvention, WeightedTuple};
pub use numerics::{ExtendedReal, PrecisionContext, Scalar, SignClass};
pub use transforms::{
    apply_witness, list_witnesses, lookup_witness, verify_witness, EquivalenceWitness, Image,
    MapDirection, WitnessReport,
};
