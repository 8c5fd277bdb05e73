#![allow(dead_code)]

use gcrossed::crossed::RawInstance;

/// Gauge change by a normalized cochain with pseudo-random exponents drawn from `seed`.
pub fn gauge_twist(raw: &RawInstance, seed: u64) -> RawInstance {
    let nx = raw.x_table.len();
    let step = |s: u64| s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut state = step(seed);
    let mut u = vec![0u32; raw.g_table.len() * nx];
    for v in u.iter_mut() {
        state = step(state);
        *v = ((state >> 33) % raw.order as u64) as u32;
    }
    raw.gauge_transform(|g, x| u[g * nx + x])
}
