//! Centrally essential deciders (stub).
