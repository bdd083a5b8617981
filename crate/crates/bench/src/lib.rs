//! Criterion benchmarks for the trioct kernels live in `benches/kernels.rs`.
