//! Universal cycles of restricted word classes.
//!
//! A universal cycle for a set of `k`-letter words is a cyclic string whose
//! `k`-letter windows enumerate the set exactly once. This crate builds the
//! word-overlap transition digraph of a class (vertices are `k-1`-letter
//! windows, edges are member words), decides whether that digraph is Eulerian,
//! extracts a canonical Eulerian circuit when it is, folds the circuit into a
//! cycle, and certifies nonexistence when it is not. A separate verifier
//! checks any claimed cycle against the class definition alone, without going
//! through the digraph machinery.
//!
//! Supported classes range from unrestricted words (the classic de Bruijn
//! case) to words constrained by letter multiplicities, cyclic monotonicity,
//! bounded steps under a cyclic metric, category alternation, and lattice
//! paths confined to a ball around the origin.

pub mod alphabet;
pub mod classes;
pub mod digraph;
pub mod error;
pub mod euler;
pub mod lattice;
pub mod verify;
pub mod word;

pub use alphabet::OrderedAlphabet;
pub use classes::{cyclic_descents, ClassKind, ClassSpec, ClassSummary, ExistenceClaim};
pub use digraph::{BalanceReport, BalanceWitness, ConnectivityReport, TransitionDigraph};
pub use error::{Error, Result};
pub use euler::{
    eulerian_circuit, fold, generate, EulerOutcome, GenerateOutcome, NonEulerianReason,
    UCycleReport,
};
pub use lattice::{boundary_stratum, endpoint, step_alphabet, LatticePoint, StepTable, Stratum};
pub use verify::{
    exhaustive_nonexistence, verify, verify_with_cap, FailureKind, VerificationReport,
    WindowFailure, DEFAULT_FAILURE_CAP,
};
pub use word::{rank_space, CyclicString, Word};

/// Default cap on candidate enumeration, counted in words filtered.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
