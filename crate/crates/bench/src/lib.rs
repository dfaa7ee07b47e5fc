//! Target-less helper crate; the benchmarks live under `benches/`.
