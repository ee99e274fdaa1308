//! Deterministic seed derivation: every random choice in a sweep gets its
//! own stream keyed by where in the enumeration it happens, so results are
//! independent of thread count, chunking, and which cells run at all.

/// SplitMix64 finalizer; the standard 64-bit avalanche.
pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Fold a tuple of coordinates into one stream seed. Order-sensitive:
/// permuting the parts changes the result.
pub(crate) fn derive(parts: &[u64]) -> u64 {
    parts.iter().fold(0x243F_6A88_85A3_08D3, |acc, &p| splitmix64(acc ^ p))
}

/// Domain tags keeping pool randomness and cell sampling on disjoint streams
/// even when their coordinates coincide.
pub(crate) const TAG_POOL: u64 = 1;
pub(crate) const TAG_CELL_SAMPLE: u64 = 2;
