//! Criterion benchmarks for the qdivisor workspace live in `benches/`.
//! Run them with `cargo bench -p qdivisor-bench`.
