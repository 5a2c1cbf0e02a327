//! Library side of the command-line front end: algebra-file ingestion and
//! the verification suite, shared with the integration tests.

pub mod input;
pub mod verify;
