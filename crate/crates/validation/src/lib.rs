//! Holds the acceptance suite in `tests/acceptance.rs`; run it with
//! `cargo test -p vacuum-validation -- --nocapture` to see one verdict line
//! per criterion.
