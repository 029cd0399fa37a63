//! Benchmarks for the core crate; see `benches/kl.rs`.
