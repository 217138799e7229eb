//! Acceptance criteria for `nilcoh`; see `tests/acceptance.rs`.
