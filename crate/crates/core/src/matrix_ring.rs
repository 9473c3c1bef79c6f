//! Matrix-ring example (stub).
