//! Benchmark harness for the eigenfunction pipelines; see benches/.
