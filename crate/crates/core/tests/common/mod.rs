#![allow(dead_code)]

pub mod props;

pub use galois_points::criterion::HermitianScenario;
use galois_points::criterion::hermitian_scenario;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Hermitian scenarios are reused across tests in one binary.
pub fn scenario(q: u64, s: u64) -> HermitianScenario {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), HermitianScenario>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut m = cache.lock().unwrap();
    m.entry((q, s)).or_insert_with(|| hermitian_scenario(q, s, 0).expect("scenario")).clone()
}
