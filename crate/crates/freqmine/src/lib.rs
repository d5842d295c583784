//! Command-line front end, benchmark harness, and report rendering for
//! the `freqmine-core` engine. The core crate owns all the algorithms;
//! this one owns everything that needs an operating system: files,
//! standard streams, clocks, and random workload generation.

pub mod bench;
pub mod cli;
pub mod report;
