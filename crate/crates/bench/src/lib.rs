//! Benchmark-only crate; see `benches/locwave.rs`.
