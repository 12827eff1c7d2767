//! Toolkit for the clarithmetic systems CLA8, CLA9 and CLA10.
//!
//! * [`syntax`]: the formula language and its game-theoretic occurrence machinery.
//! * [`games`]: sessions, bounded truth, adjudication, register machines and pairing.
//! * [`strategies`]: strategies as deterministic transducers and their combinators.
//! * [`proofs`]: the proof-object format, per-system rule checking and extraction.
//! * [`harness`]: environment drivers, verification, transcripts and the play server.

pub mod games;
pub mod harness;
pub mod proofs;
pub mod strategies;
pub mod syntax;
