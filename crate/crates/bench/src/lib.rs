//! Criterion benchmarks for the checker and the oracle live in `benches/`.
