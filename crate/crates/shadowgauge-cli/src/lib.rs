//! Suite plumbing behind the `shadowgauge` binary: body generation,
//! check orchestration, and report serialization. Kept as a library so the
//! acceptance tests can drive the exact code paths the CLI uses.

pub mod gen;
pub mod report;
pub mod suite;
