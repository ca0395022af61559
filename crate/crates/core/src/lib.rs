//! A small computability workbench.
//!
//! - [`tm`]: quadruple Turing machines with fuel-bounded runs
//! - [`enumerate`]: an effective, deterministic list of every machine
//! - [`pairing`]: the Cantor bijection between pairs and naturals
//! - [`dovetail`]: listing the halting set by interleaved simulation,
//!   halting-membership queries that can only ever answer "yes" or
//!   "unknown", and auditing of would-be halting deciders
//! - [`primrec`]: primitive recursive function terms and their evaluator
//! - [`diophantine`]: integer polynomials, exact degree-one solving and
//!   bounded root search
//! - [`pi`]: decimal digits of pi and the "first run of x fives" function
//!
//! See the crate's `examples/` directory for one runnable program per area.

pub mod diophantine;
pub mod dovetail;
pub mod enumerate;
pub mod pairing;
pub mod pi;
pub mod primrec;
pub mod tm;

pub use dovetail::{HaltCertificate, Verdict};
pub use enumerate::Enumeration;
pub use tm::{parse_machine, run, Machine, RunOutcome};
