use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    seq: Vec<usize>,
}

impl Permutation {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut seen = vec![false; n + 1];
        for &s in &seq {
            if s == 0 || s > n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidPermutation(format!("{seq:?}")));
            }
        }
        Ok(Permutation { seq })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            seq: (1..=n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.seq.len()];
        for (i, &s) in self.seq.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation { seq: inv }
    }
}

/// Uniform permutation of `1..=n` from a seeded ChaCha stream.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_permutation_with(n, &mut rng)
}

pub fn random_permutation_with<R: rand::Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut seq: Vec<usize> = (1..=n).collect();
    seq.shuffle(rng);
    Permutation { seq }
}

/// Patience piles kept only by their top cards; supports appending and
/// reports the length of a longest strictly increasing subsequence so far.
#[derive(Clone, Debug, Default)]
pub struct Patience<T> {
    tails: Vec<T>,
}

impl<T: Ord + Clone> Patience<T> {
    pub fn new() -> Self {
        Patience { tails: Vec::new() }
    }

    pub fn push(&mut self, x: T) {
        let k = self.tails.partition_point(|t| *t < x);
        if k == self.tails.len() {
            self.tails.push(x);
        } else {
            self.tails[k] = x;
        }
    }

    pub fn len(&self) -> usize {
        self.tails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tails.is_empty()
    }
}

/// Length of a longest strictly increasing subsequence, `O(n log n)`.
pub fn lis<T: Ord + Clone>(seq: &[T]) -> usize {
    let mut p = Patience::new();
    for x in seq {
        p.push(x.clone());
    }
    p.len()
}

/// Length of a longest strictly decreasing subsequence.
pub fn lds<T: Ord + Clone>(seq: &[T]) -> usize {
    let mut p = Patience::new();
    for x in seq {
        p.push(std::cmp::Reverse(x.clone()));
    }
    p.len()
}

/// Longest subsequence that becomes increasing after a cyclic shift and
/// possibly a reversal of the whole sequence.
pub fn longest_circular_monotone<T: Ord + Clone>(seq: &[T]) -> usize {
    let n = seq.len();
    let mut best = 0;
    let mut rotated: Vec<T> = seq.to_vec();
    for _ in 0..n.max(1) {
        best = best.max(lis(&rotated)).max(lds(&rotated));
        if n > 0 {
            rotated.rotate_left(1);
        }
    }
    best
}

/// Positions of one longest strictly increasing subsequence.
pub fn lis_positions<T: Ord>(seq: &[T]) -> Vec<usize> {
    // tails[l] = position of the smallest tail of an increasing run of length l + 1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for i in 0..seq.len() {
        let k = tails.partition_point(|&t| seq[t] < seq[i]);
        if k > 0 {
            prev[i] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied().unwrap_or(usize::MAX);
    while cur != usize::MAX {
        out.push(cur);
        cur = prev[cur];
    }
    out.reverse();
    out
}

/// Positions (in the original indexing, listed in circular reading order)
/// of a longest circularly monotone subsequence, and whether it increases.
pub fn circular_monotone_positions<T: Ord + Clone>(seq: &[T]) -> (Vec<usize>, bool) {
    let n = seq.len();
    let mut best: (Vec<usize>, bool) = (Vec::new(), true);
    for r in 0..n.max(1) {
        let rotated: Vec<(usize, T)> = (0..n)
            .map(|t| ((r + t) % n, seq[(r + t) % n].clone()))
            .collect();
        let vals: Vec<T> = rotated.iter().map(|x| x.1.clone()).collect();
        let inc = lis_positions(&vals);
        if inc.len() > best.0.len() {
            best = (inc.iter().map(|&i| rotated[i].0).collect(), true);
        }
        let rev: Vec<std::cmp::Reverse<T>> = vals.iter().cloned().map(std::cmp::Reverse).collect();
        let dec = lis_positions(&rev);
        if dec.len() > best.0.len() {
            best = (dec.iter().map(|&i| rotated[i].0).collect(), false);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lis_examples() {
        assert_eq!(lis(&[1, 2, 3, 4, 5]), 5);
        assert_eq!(lis(&[5, 4, 3, 2, 1]), 1);
        assert_eq!(lis(&[3, 1, 4, 2]), 2);
        assert_eq!(lis::<u32>(&[]), 0);
        assert_eq!(lds(&[3, 1, 4, 2]), 2);
    }

    #[test]
    fn circular_monotone_examples() {
        assert_eq!(longest_circular_monotone(&[2, 1, 5, 4, 3]), 5);
        assert_eq!(longest_circular_monotone(&[1, 2, 3, 4, 5]), 5);
        assert_eq!(longest_circular_monotone(&[3, 4, 5, 1, 2]), 5);
        assert_eq!(longest_circular_monotone(&[1, 3, 2, 4]), 3);
    }

    #[test]
    fn positions_realise_lengths() {
        let s = [3, 1, 4, 1, 5, 9, 2, 6, 5, 3];
        let p = lis_positions(&s);
        assert_eq!(p.len(), lis(&s));
        assert!(p.windows(2).all(|w| w[0] < w[1] && s[w[0]] < s[w[1]]));
        let c = [4, 5, 1, 3, 2];
        let (pos, _) = circular_monotone_positions(&c);
        assert_eq!(pos.len(), longest_circular_monotone(&c));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 3, 1]).is_ok());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.inverse().as_slice(), &[2, 3, 1]);
    }

    #[test]
    fn seeded_shuffles() {
        assert_eq!(random_permutation(1, 9).as_slice(), &[1]);
        assert_eq!(random_permutation(50, 7), random_permutation(50, 7));
        assert_ne!(random_permutation(50, 7), random_permutation(50, 8));
    }
}
