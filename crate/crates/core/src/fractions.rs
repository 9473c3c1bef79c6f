//! Central localization (stub).
