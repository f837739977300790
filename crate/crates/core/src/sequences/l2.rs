//! Total length of two non-interweaving monotone subsequences of a circular
//! permutation, computed through circular splits.

use super::lis::{Patience, Permutation};
use crate::error::{Error, Result};
use std::cmp::Reverse;

/// Best split of the circle into `s_i .. s_{j-1}` and `s_j .. s_n s_1 .. s_{i-1}`
/// (1-based, `i < j`), each part scored by its longest increasing or
/// decreasing subsequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitScore {
    pub i: usize,
    pub j: usize,
    pub value: usize,
}

/// Maximum of the split score over all `1 <= i < j <= n`, in `O(n^2 log n)`.
pub fn l2(perm: &Permutation) -> Result<SplitScore> {
    l2_of(perm.as_slice())
}

/// As [`l2`] for any sequence of distinct values.
pub fn l2_of<T: Ord + Clone>(s: &[T]) -> Result<SplitScore> {
    let n = s.len();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("l2 needs n >= 2, got {n}")));
    }
    let mut best = SplitScore {
        i: 0,
        j: 0,
        value: 0,
    };
    let mut first = vec![0usize; n + 1];
    for i in 0..n - 1 {
        // first part s[i..j), grown to the right
        let mut inc = Patience::new();
        let mut dec = Patience::new();
        for j in i + 1..n {
            inc.push(s[j - 1].clone());
            dec.push(Reverse(s[j - 1].clone()));
            first[j] = inc.len().max(dec.len());
        }
        // second part s[j..n) ++ s[0..i), grown to the left: feed it reversed
        let mut inc = Patience::new();
        let mut dec = Patience::new();
        for x in s[..i].iter().rev() {
            inc.push(x.clone());
            dec.push(Reverse(x.clone()));
        }
        for j in (i + 1..n).rev() {
            inc.push(s[j].clone());
            dec.push(Reverse(s[j].clone()));
            let value = first[j] + inc.len().max(dec.len());
            if value > best.value {
                best = SplitScore {
                    i: i + 1,
                    j: j + 1,
                    value,
                };
            }
        }
    }
    Ok(best)
}

/// The split score of one pair `(i, j)`, 1-based, by direct evaluation.
pub fn split_score<T: Ord + Clone>(s: &[T], i: usize, j: usize) -> usize {
    use super::lis::{lds, lis};
    let (i, j) = (i - 1, j - 1);
    let p1 = &s[i..j];
    let p2: Vec<T> = s[j..].iter().chain(s[..i].iter()).cloned().collect();
    lis(p1).max(lds(p1)) + lis(&p2).max(lds(&p2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(l2(&perm(&[1, 2, 3, 4, 5])).unwrap().value, 5);
        assert_eq!(l2(&perm(&[1, 2, 3, 6, 5, 4])).unwrap().value, 6);
        assert_eq!(l2(&perm(&[2, 1])).unwrap().value, 2);
        assert!(l2(&perm(&[1])).is_err());
    }

    #[test]
    fn incremental_matches_direct_evaluation() {
        let s = [4, 9, 1, 7, 3, 8, 2, 6, 5];
        let mut direct = 0;
        for i in 1..=s.len() {
            for j in i + 1..=s.len() {
                direct = direct.max(split_score(&s, i, j));
            }
        }
        let best = l2_of(&s).unwrap();
        assert_eq!(best.value, direct);
        assert_eq!(split_score(&s, best.i, best.j), best.value);
    }
}
