//! Permutations of `{1, ..., n}`, Coxeter lengths and reduced words.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::Error;

/// A permutation in one-line notation: `w.image(i) = w(i)` for `1 <= i <= n`.
///
/// Ordered lexicographically by one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// The simple transposition `s_i` of `S_n`, swapping `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a simple reflection of S_{n}");
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        w
    }

    /// The longest element `i -> n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).rev().collect(),
        }
    }

    /// Evaluates a word `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        w
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, Error> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize]).collect(),
        }
    }

    /// `w s_i`: swaps the entries in positions `i`, `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// `s_i w`: swaps the values `i`, `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `l(s_i w) < l(w)`: the value `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.size();
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..n).find(|&i| w.has_left_descent(i)).expect("non-identity has a descent");
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Every reduced word, found by breadth-first search over inversion-removing
    /// left multiplications. Limited to `n <= 5`.
    pub fn all_reduced_words(&self) -> Result<BTreeSet<Vec<usize>>, Error> {
        const MAX: usize = 5;
        let n = self.size();
        if n > MAX {
            return Err(Error::SizeTooLarge { n, max: MAX });
        }
        // Suffix words from each node down to the identity; BFS by length.
        let mut layer: Vec<(Permutation, Vec<usize>)> = vec![(self.clone(), Vec::new())];
        for _ in 0..self.length() {
            let mut next = Vec::new();
            for (w, prefix) in layer {
                for i in 1..n {
                    if w.has_left_descent(i) {
                        let mut p = prefix.clone();
                        p.push(i);
                        next.push((w.mul_simple_left(i), p));
                    }
                }
            }
            layer = next;
        }
        Ok(layer.into_iter().map(|(_, word)| word).collect())
    }

    /// All permutations of `S_n`, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// Breadth-first enumeration of the words reachable from `start` by braid and
/// commutation moves, returning each word with the number of commutation
/// moves (mod 2) along the first path found.
pub(crate) fn braid_class_with_parity(start: &[usize]) -> Vec<(Vec<usize>, bool)> {
    use std::collections::HashMap;
    let mut seen: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec(), false);
    queue.push_back(start.to_vec());
    while let Some(word) = queue.pop_front() {
        let parity = seen[&word];
        let k = word.len();
        for p in 0..k.saturating_sub(1) {
            let (a, b) = (word[p], word[p + 1]);
            if a.abs_diff(b) > 1 {
                let mut w2 = word.clone();
                w2.swap(p, p + 1);
                if !seen.contains_key(&w2) {
                    seen.insert(w2.clone(), !parity);
                    queue.push_back(w2);
                }
            }
        }
        for p in 0..k.saturating_sub(2) {
            let (a, b, c) = (word[p], word[p + 1], word[p + 2]);
            if a == c && a.abs_diff(b) == 1 {
                let mut w2 = word.clone();
                w2[p] = b;
                w2[p + 1] = a;
                w2[p + 2] = b;
                if !seen.contains_key(&w2) {
                    seen.insert(w2.clone(), parity);
                    queue.push_back(w2);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn compose_examples() {
        let s1 = Permutation::simple(2, 1);
        assert!(s1.compose(&s1).unwrap().is_identity());
        let a = Permutation::simple(3, 1);
        let b = Permutation::simple(3, 2);
        let aba = a.compose(&b).unwrap().compose(&a).unwrap();
        let bab = b.compose(&a).unwrap().compose(&b).unwrap();
        assert_eq!(aba, bab);
        let w = p(&[2, 3, 1]);
        assert_eq!(w.compose(&Permutation::identity(3)).unwrap(), w);
        assert!(matches!(
            w.compose(&Permutation::identity(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn compose_is_function_composition() {
        let w = p(&[2, 3, 1]);
        let v = p(&[3, 1, 2]);
        let wv = w.compose(&v).unwrap();
        for i in 1..=3 {
            assert_eq!(wv.image(i), w.image(v.image(i)));
        }
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(3).length(), 3);
        assert_eq!(Permutation::simple(4, 1).length(), 1);
        assert_eq!(Permutation::longest(5).length(), 10);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(Permutation::simple(3, 2).reduced_word(), vec![2]);
        assert_eq!(Permutation::longest(3).reduced_word(), vec![1, 2, 1]);
    }

    #[test]
    fn reduced_word_is_lex_min_of_all() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let all = w.all_reduced_words().unwrap();
                assert_eq!(all.iter().next().unwrap(), &w.reduced_word());
                for word in &all {
                    assert_eq!(word.len(), w.length());
                    assert_eq!(Permutation::from_word(n, word), w);
                }
            }
        }
    }

    #[test]
    fn all_reduced_words_examples() {
        let s1 = Permutation::simple(2, 1);
        assert_eq!(s1.all_reduced_words().unwrap(), BTreeSet::from([vec![1]]));
        let w0 = Permutation::longest(3);
        assert_eq!(
            w0.all_reduced_words().unwrap(),
            BTreeSet::from([vec![1, 2, 1], vec![2, 1, 2]])
        );
        assert_eq!(
            Permutation::identity(3).all_reduced_words().unwrap(),
            BTreeSet::from([vec![]])
        );
        assert!(matches!(
            Permutation::identity(6).all_reduced_words(),
            Err(Error::SizeTooLarge { .. })
        ));
    }

    // Independent brute-force oracle: all words of the right length over the
    // generators that evaluate to w.
    fn brute_reduced_words(w: &Permutation) -> BTreeSet<Vec<usize>> {
        let n = w.size();
        let l = w.length();
        let mut out = BTreeSet::new();
        let total = (n - 1).max(1).pow(l as u32);
        for code in 0..total {
            let mut c = code;
            let word: Vec<usize> = (0..l)
                .map(|_| {
                    let d = c % (n - 1) + 1;
                    c /= n - 1;
                    d
                })
                .collect();
            if Permutation::from_word(n, &word) == *w {
                out.insert(word);
            }
        }
        out
    }

    #[test]
    fn all_reduced_words_match_brute_force() {
        for w in Permutation::all(4) {
            assert_eq!(w.all_reduced_words().unwrap(), brute_reduced_words(&w));
        }
    }

    #[test]
    fn braid_class_is_all_reduced_words() {
        let w0 = Permutation::longest(4);
        let class: BTreeSet<_> = braid_class_with_parity(&w0.reduced_word())
            .into_iter()
            .map(|(w, _)| w)
            .collect();
        assert_eq!(class, w0.all_reduced_words().unwrap());
        assert_eq!(class.len(), 16);
    }

    #[test]
    fn longest_examples() {
        assert!(Permutation::longest(1).is_identity());
        assert_eq!(Permutation::longest(2), Permutation::simple(2, 1));
        assert_eq!(Permutation::longest(3).one_line(), vec![3, 2, 1]);
    }

    #[test]
    fn length_subadditive() {
        let all = Permutation::all(4);
        for w in &all {
            for v in &all {
                let wv = w.compose(v).unwrap();
                assert!(wv.length() <= w.length() + v.length());
                let mut word = w.reduced_word();
                word.extend(v.reduced_word());
                let reduced = Permutation::from_word(4, &word).length() == word.len();
                assert_eq!(reduced, wv.length() == w.length() + v.length());
            }
        }
    }

    #[test]
    fn descents() {
        let w = p(&[2, 1, 3]);
        assert!(w.has_right_descent(1));
        assert!(!w.has_right_descent(2));
        let v = p(&[3, 1, 2]);
        assert_eq!(v.mul_simple_left(2).length(), 1);
        assert!(v.has_left_descent(2));
        assert!(!v.has_left_descent(1));
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }
}
