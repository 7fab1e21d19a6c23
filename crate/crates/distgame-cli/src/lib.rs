//! Std companion to [`distgame`]: named instance and allocation documents,
//! result rendering, and a DIMACS reader for the CNF generator. The binary
//! in this package wires these onto the solver library.

pub mod format;
