//! Fixture ingestion, the verification suite, and report assembly.

// placeholder, filled in below
