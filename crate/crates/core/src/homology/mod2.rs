use super::boundary::BoundaryMatrix;

/// Rank over GF(2) of a ±1 boundary matrix, by column reduction on packed bits.
pub fn rank_mod2(m: &BoundaryMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    // pivot row -> reduced column with that lowest set bit
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut bits = vec![0u64; words];
        for &(i, _) in col {
            bits[i / 64] ^= 1 << (i % 64);
        }
        while let Some(low) = highest_bit(&bits) {
            match &pivots[low] {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots[low] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}
