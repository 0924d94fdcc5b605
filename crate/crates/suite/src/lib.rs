//! Holds the `acceptance` test target; run it with
//! `cargo test -p bkverify-suite --test acceptance`.
