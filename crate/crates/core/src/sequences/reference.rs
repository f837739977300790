//! Slow reference implementations, used to cross-check the fast routines.

use super::alternation::{contains_alternation, SymbolSequence};

fn monotone(vals: &[usize]) -> bool {
    vals.windows(2).all(|w| w[0] < w[1]) || vals.windows(2).all(|w| w[0] > w[1])
}

/// Largest `|A| + |B|` over disjoint position sets `A`, `B` of the circular
/// sequence such that the labelled positions, read around the circle, form
/// at most one block of `A` and one of `B`, and each set is monotone when
/// read from the start of its block. Exponential: `3^n` labellings.
pub fn l2_bruteforce(s: &[usize]) -> usize {
    let n = s.len();
    assert!(n <= 12, "reference l2 is exponential");
    let total = 3usize.pow(n as u32);
    let mut best = 0;
    let mut labels = vec![0u8; n];
    for code in 0..total {
        let mut c = code;
        let mut count = 0;
        for l in labels.iter_mut() {
            *l = (c % 3) as u8;
            c /= 3;
            if *l != 0 {
                count += 1;
            }
        }
        if count <= best || !valid_split(s, &labels) {
            continue;
        }
        best = count;
    }
    best
}

fn valid_split(s: &[usize], labels: &[u8]) -> bool {
    let marked: Vec<usize> = (0..s.len()).filter(|&i| labels[i] != 0).collect();
    if marked.is_empty() {
        return true;
    }
    let m = marked.len();
    let changes: Vec<usize> = (0..m)
        .filter(|&t| labels[marked[t]] != labels[marked[(t + m - 1) % m]])
        .collect();
    match changes.len() {
        0 => {
            // one class only: monotone after some rotation
            (0..m).any(|r| {
                let vals: Vec<usize> = (0..m).map(|t| s[marked[(r + t) % m]]).collect();
                monotone(&vals)
            })
        }
        2 => changes.iter().all(|&start| {
            let lab = labels[marked[start]];
            let vals: Vec<usize> = (0..m)
                .map(|t| marked[(start + t) % m])
                .take_while(|&i| labels[i] == lab)
                .map(|i| s[i])
                .collect();
            monotone(&vals)
        }),
        _ => false,
    }
}

/// Longest alternation-free subsequence by enumerating all subsets.
pub fn max_alternation_free_bruteforce(seq: &SymbolSequence, p: usize) -> usize {
    let n = seq.len();
    assert!(n <= 24, "reference search is exponential");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let sub: Vec<usize> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| seq.symbols[i])
            .collect();
        if !contains_alternation(&sub, p, seq.circular) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_examples() {
        assert_eq!(l2_bruteforce(&[1, 2, 3, 4]), 4);
        assert_eq!(l2_bruteforce(&[6, 5, 3, 4, 1, 2]), 5);
        assert_eq!(l2_bruteforce(&[2, 4, 1, 3]), 4);
    }
}
