//! FNV-1a hashing and named deterministic RNG streams.
//!
//! Everything random in the pipeline flows from one global seed expanded into
//! named streams, so stages are reproducible independently of scheduling or
//! invocation order. FNV-1a is used both for feature-bucket hashing and for
//! deriving stream seeds because it is trivially portable and has no
//! dependency on platform hashers.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf29ce484222325;
const FNV_PRIME: u64 = 0x100000001b3;

/// 64-bit FNV-1a over raw bytes.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Continue an FNV-1a hash with more bytes.
pub fn fnv1a_extend(mut h: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Derive the seed for a named stream from the global seed.
///
/// The name and any discriminants (epoch, essay index, anchor id) are folded
/// into the hash so distinct streams never alias.
pub fn stream_seed(global_seed: u64, name: &str) -> u64 {
    let h = fnv1a_extend(FNV_OFFSET, &global_seed.to_le_bytes());
    fnv1a_extend(h, name.as_bytes())
}

/// A seeded RNG for the named stream.
pub fn stream_rng(global_seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(global_seed, name))
}

/// A seeded RNG for a (name, index) substream, e.g. per essay or per epoch.
pub fn indexed_rng(global_seed: u64, name: &str, index: u64) -> ChaCha8Rng {
    let h = fnv1a_extend(stream_seed(global_seed, name), &index.to_le_bytes());
    ChaCha8Rng::seed_from_u64(h)
}

/// A seeded RNG keyed by an arbitrary string, e.g. a per-anchor stream.
pub fn keyed_rng(global_seed: u64, name: &str, key: &str) -> ChaCha8Rng {
    let h = fnv1a_extend(stream_seed(global_seed, name), key.as_bytes());
    ChaCha8Rng::seed_from_u64(h)
}

/// Checksum a slice of floats by hashing their bit patterns.
///
/// Used for the freeze contracts: a matrix is unchanged iff its checksum is.
pub fn checksum_f64(values: impl IntoIterator<Item = f64>) -> u64 {
    let mut h = FNV_OFFSET;
    for v in values {
        h = fnv1a_extend(h, &v.to_bits().to_le_bytes());
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv1a_known_vectors() {
        // Reference values for the 64-bit FNV-1a parameters.
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a(b"foobar"), 0x85944171f73967e8);
    }

    #[test]
    fn streams_are_deterministic_and_distinct() {
        assert_eq!(stream_seed(42, "mine"), stream_seed(42, "mine"));
        assert_ne!(stream_seed(42, "mine"), stream_seed(42, "split"));
        assert_ne!(stream_seed(42, "mine"), stream_seed(43, "mine"));
        assert_ne!(
            indexed_rng(42, "essay", 1).get_seed(),
            indexed_rng(42, "essay", 2).get_seed()
        );
    }

    #[test]
    fn checksum_tracks_bit_changes() {
        let a = checksum_f64([1.0, 2.0, 3.0]);
        let b = checksum_f64([1.0, 2.0, 3.0 + f64::EPSILON]);
        assert_ne!(a, b);
        assert_eq!(a, checksum_f64([1.0, 2.0, 3.0]));
        // 0.0 and -0.0 compare equal but are different bit patterns.
        assert_ne!(checksum_f64([0.0]), checksum_f64([-0.0]));
    }
}
