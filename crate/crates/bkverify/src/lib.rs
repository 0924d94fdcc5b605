//! Corpus IO, parallel verification, sampling and reporting on top of
//! `bkverify-core`.

pub mod corpus;
pub mod deadline;
pub mod enumerate;
pub mod harness;
pub mod relaxed;
pub mod report;
pub mod sampler;
