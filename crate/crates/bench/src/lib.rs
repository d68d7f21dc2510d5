//! Criterion benchmarks for ropebound-core live in `benches/`.
