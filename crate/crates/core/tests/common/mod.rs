#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Multiplicity of `values[start-1]` in `values[start-1..j]`, by direct count.
pub fn naive_forward_freq(values: &[i64], start: usize, j: usize) -> usize {
    let v = values[start - 1];
    values[start - 1..j].iter().filter(|&&x| x == v).count()
}

/// Largest multiplicity of any token in `values[i-1..j]`, quadratic and
/// tally-free.
pub fn naive_mode_freq(values: &[i64], i: usize, j: usize) -> usize {
    let s = &values[i - 1..j];
    s.iter()
        .map(|v| s.iter().filter(|&w| w == v).count())
        .max()
        .unwrap()
}

pub fn random_array(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(1..=k as i64)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n = 24, five tokens, block size 4 at eps = 3/8. On [7, 19] the span
/// [9, 16] has 20 as its mode four times; one more 20 in the suffix makes it
/// the unique mode of the range with frequency 5.
pub const DECOMPOSITION_EXAMPLE: [i64; 24] = [
    30, 40, 50, 10, 30, 40, // blocks 0 and half of 1
    10, 30, // prefix 7..=8
    20, 10, 20, 30, 20, 40, 20, 50, // span 9..=16
    20, 10, 30, // suffix 17..=19
    40, 50, 10, 20, 30,
];

/// n = 16, five tokens, block size 4. On [6, 15] both 10 and 20 occur three
/// times and nothing occurs more often.
pub const TIE_EXAMPLE: [i64; 16] = [
    50, 40, 30, 20, 10, // 1..=5
    10, 20, 10, 20, 10, 20, 30, 40, 50, 30, // 6..=15
    40,
];
