//! Salted uniform hashing of integer keys onto `[0, 1)`.

use crate::mix64;

const HASH_BITS: u32 = 53;
const SCALE: f64 = 1.0 / (1u64 << HASH_BITS) as f64;

/// 53-bit hash of `key` under `salt`. For a fixed salt, distinct keys map
/// to distinct 64-bit intermediates, so ties only arise from truncation.
pub fn hash_bits(key: u64, salt: u64) -> u64 {
    mix64(mix64(key) ^ mix64(salt.wrapping_add(0x6A09_E667_F3BC_C909))) >> (64 - HASH_BITS)
}

/// Deterministic hash of `key` into `[0, 1)`, uniform over keys; different
/// salts give independent hash functions.
pub fn uniform_hash(key: u64, salt: u64) -> f64 {
    bits_to_unit(hash_bits(key, salt))
}

pub(crate) fn bits_to_unit(bits: u64) -> f64 {
    bits as f64 * SCALE
}
