#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A factorial-quotient instance `prod {n_i:k}! / prod {m_j:k}!`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub nums: Vec<usize>,
    pub dens: Vec<usize>,
    pub k: usize,
}

pub const MAX_INDEX: usize = 40;

/// Binomial and super-Catalan shapes (polynomial), optionally nudged by one
/// index, plus unstructured lists; indices stay within `MAX_INDEX`.
pub fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let k = rng.gen_range(1..=4);
    let (mut nums, mut dens) = match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(0..=MAX_INDEX);
            let a = rng.gen_range(0..=n);
            (vec![n], vec![a, n - a])
        }
        1 => {
            let m = rng.gen_range(0..=MAX_INDEX / 2);
            let n = rng.gen_range(0..=(MAX_INDEX / 2).min(MAX_INDEX - m));
            (vec![2 * m, 2 * n], vec![m, n, m + n])
        }
        _ => {
            let nums = (0..rng.gen_range(1..=2))
                .map(|_| rng.gen_range(0..=MAX_INDEX))
                .collect();
            let dens = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(0..=MAX_INDEX / 2))
                .collect();
            (nums, dens)
        }
    };
    if rng.gen_bool(0.4) {
        let i = rng.gen_range(0..dens.len());
        dens[i] = (dens[i] + 1).min(MAX_INDEX);
    } else if rng.gen_bool(0.2) {
        let i = rng.gen_range(0..nums.len());
        nums[i] = nums[i].saturating_sub(1);
    }
    Instance { nums, dens, k }
}
