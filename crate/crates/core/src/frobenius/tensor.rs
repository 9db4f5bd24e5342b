use std::cmp::Ordering;
use std::fmt;

/// A pure tensor `b_n ⊗ ... ⊗ b_1` of basis elements.
///
/// Strands are numbered from right to left: `entries()[0]` is strand 1 (the
/// rightmost factor). The ordering compares the written form, leftmost factor
/// first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<usize>);

impl TensorWord {
    /// From entries indexed by strand: `entries[i - 1]` sits on strand `i`.
    pub fn new(entries: Vec<usize>) -> Self {
        TensorWord(entries)
    }

    /// From the written (left-to-right) order `b_n, ..., b_1`.
    pub fn from_written(written: &[usize]) -> Self {
        TensorWord(written.iter().rev().copied().collect())
    }

    pub fn constant(n: usize, index: usize) -> Self {
        TensorWord(vec![index; n])
    }

    /// `index` on `strand`, `unit` elsewhere.
    pub fn single(n: usize, unit: usize, strand: usize, index: usize) -> Self {
        let mut v = vec![unit; n];
        v[strand - 1] = index;
        TensorWord(v)
    }

    /// Every word of length `n` over a basis of size `dim`, in sorted order.
    pub fn all(n: usize, dim: usize) -> Vec<TensorWord> {
        let mut out = Vec::with_capacity(dim.pow(n as u32));
        let mut cur = vec![0usize; n];
        loop {
            out.push(TensorWord::from_written(&cur));
            // odometer on the written order, last position fastest
            let Some(pos) = (0..n).rev().find(|&p| cur[p] + 1 < dim) else { break };
            cur[pos] += 1;
            cur[pos + 1..].fill(0);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The factor on strand `strand` (1-based).
    pub fn get(&self, strand: usize) -> usize {
        self.0[strand - 1]
    }

    pub fn set(&mut self, strand: usize, index: usize) {
        self.0[strand - 1] = index;
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn written(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn is_constant(&self, index: usize) -> bool {
        self.0.iter().all(|&e| e == index)
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.written().iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join("⊗"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strand_convention() {
        let w = TensorWord::from_written(&[3, 2, 1]);
        assert_eq!(w.get(1), 1);
        assert_eq!(w.get(3), 3);
        assert_eq!(w.entries(), &[1, 2, 3]);
        assert_eq!(TensorWord::single(3, 0, 2, 5).written(), vec![0, 5, 0]);
    }

    #[test]
    fn enumerates_all_words_sorted() {
        let all = TensorWord::all(3, 2);
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(TensorWord::all(0, 3).len(), 1);
    }

    #[test]
    fn ordering_reads_left_to_right() {
        // c_1 = 1⊗c sorts before c_2 = c⊗1
        let c1 = TensorWord::from_written(&[0, 1]);
        let c2 = TensorWord::from_written(&[1, 0]);
        assert!(TensorWord::constant(2, 0) < c1);
        assert!(c1 < c2);
    }
}
