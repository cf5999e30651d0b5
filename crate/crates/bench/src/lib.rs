//! Criterion benchmarks of the synthesis pipeline; see `benches/pipeline.rs`.
