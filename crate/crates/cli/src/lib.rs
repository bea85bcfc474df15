//! Library surface of the command-line front end: configuration parsing,
//! the verification suites with machine-readable reports, and the CSV
//! exporters. The binary in `main.rs` is a thin dispatcher over these.

#![allow(clippy::needless_range_loop)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod export;
pub mod report;
pub mod verify;
