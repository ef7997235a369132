//! Benchmark harness crate; see `benches/transforms.rs`.
