//! Benchmark-only crate; see `benches/variation.rs`.
