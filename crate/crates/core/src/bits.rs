//! Word-packed bit rows.
//!
//! Relation classes are stored as one bit row per vertex so that
//! intersection counts reduce to `popcount(row_a AND row_b)`.

/// A dense rows × width bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    width: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, width: usize) -> Self {
        let words_per_row = width.div_ceil(64).max(1);
        BitMatrix {
            rows,
            width,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.width);
        self.data[r * self.words_per_row + (c >> 6)] |= 1u64 << (c & 63);
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words_per_row + (c >> 6)] >> (c & 63) & 1 == 1
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Indices of the set bits of row `r`, ascending.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// popcount(a AND b) over two equally long rows.
#[inline]
pub fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut m = BitMatrix::new(3, 70);
        m.set(0, 0);
        m.set(1, 63);
        m.set(1, 64);
        m.set(2, 69);
        assert!(m.get(0, 0) && m.get(1, 63) && m.get(1, 64) && m.get(2, 69));
        assert!(!m.get(0, 1) && !m.get(2, 68));
        assert_eq!(m.row_ones(1).collect::<Vec<_>>(), vec![63, 64]);
        assert_eq!(m.row_count(1), 2);
    }

    #[test]
    fn intersection_counts_words() {
        let mut a = BitMatrix::new(1, 130);
        let mut b = BitMatrix::new(1, 130);
        for c in [0, 5, 64, 100, 129] {
            a.set(0, c);
        }
        for c in [5, 64, 99, 129] {
            b.set(0, c);
        }
        assert_eq!(intersection_count(a.row(0), b.row(0)), 3);
    }
}
