//! Alternation-free subsequences and Davenport–Schinzel lengths.
//!
//! A sequence "contains an alternation of length L" when some two distinct
//! symbols `x, y` appear as a subsequence `x y x y ...` of length `L`.
//! Patterns below are parameterised by `p`, forbidding length `p + 2`.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A sequence over the symbols `1..=alphabet`, optionally read circularly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSequence {
    pub symbols: Vec<usize>,
    pub alphabet: usize,
    pub circular: bool,
}

impl SymbolSequence {
    pub fn new(symbols: Vec<usize>, alphabet: usize, circular: bool) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s == 0 || s > alphabet) {
            return Err(Error::InvalidParameter(format!(
                "symbol {bad} outside 1..={alphabet}"
            )));
        }
        Ok(SymbolSequence {
            symbols,
            alphabet,
            circular,
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// The circular block sequence `(1 2 ... k)` repeated `s` times.
pub fn block_sequence(k: usize, s: usize) -> SymbolSequence {
    let symbols = (0..s).flat_map(|_| 1..=k).collect();
    SymbolSequence {
        symbols,
        alphabet: k,
        circular: true,
    }
}

/// Result of a budgeted maximisation. `lower == upper` means exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBound {
    pub lower: usize,
    pub upper: usize,
    /// Positions (for subsequence searches) or symbols (for sequence
    /// constructions) realising `lower`.
    pub witness: Vec<usize>,
}

impl SearchBound {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

fn alternation_len(seq: &[usize], x: usize, y: usize, want: usize) -> usize {
    let mut len = 0;
    for &s in seq {
        let expect = if len % 2 == 0 { x } else { y };
        if s == expect {
            len += 1;
            if len == want {
                break;
            }
        }
    }
    len
}

/// Finds symbols `x != y` such that `x y x y ...` of length `p + 2` is a
/// subsequence. In circular mode any rotation counts.
pub fn find_alternation(seq: &[usize], p: usize, circular: bool) -> Option<(usize, usize)> {
    let want = p + 2;
    let mut present: Vec<usize> = seq.to_vec();
    present.sort_unstable();
    present.dedup();
    let rotations = if circular && want % 2 == 1 {
        seq.len().max(1)
    } else {
        1
    };
    let mut buf = seq.to_vec();
    for _ in 0..rotations {
        for &x in &present {
            for &y in &present {
                if x != y && alternation_len(&buf, x, y, want) >= want {
                    return Some((x, y));
                }
            }
        }
        if !buf.is_empty() {
            buf.rotate_left(1);
        }
    }
    None
}

pub fn contains_alternation(seq: &[usize], p: usize, circular: bool) -> bool {
    find_alternation(seq, p, circular).is_some()
}

/// Per-pair run counters packed into a `u128`. For each unordered pair of
/// symbols we keep the number of runs of the sequence restricted to that
/// pair and which of the two came last; the longest alternation on the pair
/// equals its run count.
#[derive(Clone, Debug)]
struct RunState {
    k: usize,
    limit: usize,
    bits: u32,
    pair_index: Vec<Vec<usize>>,
}

impl RunState {
    fn new(k: usize, p: usize) -> Result<Self> {
        let limit = p + 2;
        let values = (limit * 2) as u128;
        let bits = 128 - (values - 1).leading_zeros();
        let pairs = k * (k.saturating_sub(1)) / 2;
        if pairs as u32 * bits > 128 {
            return Err(Error::SizeCap(pairs * bits as usize, 128));
        }
        let mut pair_index = vec![vec![usize::MAX; k]; k];
        let mut idx = 0;
        #[allow(clippy::needless_range_loop)]
        for x in 0..k {
            for y in x + 1..k {
                pair_index[x][y] = idx;
                pair_index[y][x] = idx;
                idx += 1;
            }
        }
        Ok(RunState {
            k,
            limit,
            bits,
            pair_index,
        })
    }

    /// Appends symbol `c` (0-based). Returns `None` on a forbidden alternation.
    fn push(&self, state: u128, c: usize) -> Option<u128> {
        let mask = (1u128 << self.bits) - 1;
        let mut out = state;
        for other in 0..self.k {
            if other == c {
                continue;
            }
            let idx = self.pair_index[c][other];
            let shift = idx as u32 * self.bits;
            let field = (state >> shift) & mask;
            let runs = (field >> 1) as usize;
            let last_is_hi = field & 1 == 1;
            let c_is_hi = c > other;
            let runs = if runs == 0 || last_is_hi != c_is_hi {
                runs + 1
            } else {
                runs
            };
            if runs >= self.limit {
                return None;
            }
            let field = ((runs as u128) << 1) | c_is_hi as u128;
            out = (out & !(mask << shift)) | (field << shift);
        }
        Some(out)
    }
}

/// Longest subsequence of `seq` without an alternation of length `p + 2`.
/// The search visits at most `budget` states; when the budget runs out the
/// result is an interval whose lower end is realised by the witness.
pub fn max_alternation_free_subsequence(
    seq: &SymbolSequence,
    p: usize,
    budget: usize,
) -> Result<SearchBound> {
    let linear_suffices = !seq.circular || p.is_multiple_of(2);
    if linear_suffices {
        if let Ok(rs) = RunState::new(seq.alphabet, p) {
            return Ok(dp_search(seq, &rs, budget));
        }
    }
    Ok(dfs_search(seq, p, budget))
}

fn dp_search(seq: &SymbolSequence, rs: &RunState, budget: usize) -> SearchBound {
    struct Dp<'a> {
        s: &'a [usize],
        rs: &'a RunState,
        memo: HashMap<(usize, u128), usize>,
        budget: usize,
        exhausted: bool,
    }
    impl Dp<'_> {
        fn best(&mut self, pos: usize, state: u128) -> usize {
            if pos == self.s.len() || self.exhausted {
                return 0;
            }
            if let Some(&v) = self.memo.get(&(pos, state)) {
                return v;
            }
            if self.memo.len() >= self.budget {
                self.exhausted = true;
                return 0;
            }
            let mut v = self.best(pos + 1, state);
            if let Some(next) = self.rs.push(state, self.s[pos] - 1) {
                v = v.max(1 + self.best(pos + 1, next));
            }
            if !self.exhausted {
                self.memo.insert((pos, state), v);
            }
            v
        }
    }
    let mut dp = Dp {
        s: &seq.symbols,
        rs,
        memo: HashMap::new(),
        budget: budget.max(1),
        exhausted: false,
    };
    let value = dp.best(0, 0);
    if dp.exhausted {
        let witness = greedy_free(seq, rs);
        return SearchBound {
            lower: witness.len(),
            upper: seq.len(),
            witness,
        };
    }
    let mut witness = Vec::new();
    let mut state = 0u128;
    for pos in 0..seq.len() {
        let skip = dp.best(pos + 1, state);
        let here = dp.best(pos, state);
        if here == skip {
            continue;
        }
        witness.push(pos);
        state = rs
            .push(state, seq.symbols[pos] - 1)
            .expect("memoised take is valid");
    }
    SearchBound {
        lower: value,
        upper: value,
        witness,
    }
}

fn greedy_free(seq: &SymbolSequence, rs: &RunState) -> Vec<usize> {
    let mut state = 0u128;
    let mut out = Vec::new();
    for (pos, &s) in seq.symbols.iter().enumerate() {
        if let Some(next) = rs.push(state, s - 1) {
            state = next;
            out.push(pos);
        }
    }
    out
}

/// Branch and bound over subsets, used when the packed state does not fit
/// or when odd patterns must be checked circularly.
fn dfs_search(seq: &SymbolSequence, p: usize, budget: usize) -> SearchBound {
    struct Dfs<'a> {
        s: &'a [usize],
        p: usize,
        circular: bool,
        nodes: usize,
        budget: usize,
        exhausted: bool,
        best: Vec<usize>,
        cur: Vec<usize>,
    }
    impl Dfs<'_> {
        fn go(&mut self, pos: usize) {
            if self.exhausted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if self.cur.len() + (self.s.len() - pos) <= self.best.len() {
                return;
            }
            if pos == self.s.len() {
                let syms: Vec<usize> = self.cur.iter().map(|&i| self.s[i]).collect();
                if !contains_alternation(&syms, self.p, self.circular) {
                    self.best = self.cur.clone();
                }
                return;
            }
            self.cur.push(pos);
            let syms: Vec<usize> = self.cur.iter().map(|&i| self.s[i]).collect();
            if !contains_alternation(&syms, self.p, false) {
                self.go(pos + 1);
            }
            self.cur.pop();
            self.go(pos + 1);
        }
    }
    let mut dfs = Dfs {
        s: &seq.symbols,
        p,
        circular: seq.circular,
        nodes: 0,
        budget: budget.max(1),
        exhausted: false,
        best: Vec::new(),
        cur: Vec::new(),
    };
    dfs.go(0);
    let lower = dfs.best.len();
    SearchBound {
        lower,
        upper: if dfs.exhausted { seq.len() } else { lower },
        witness: dfs.best,
    }
}

/// Maximum length of a sequence over `k` symbols with no two equal adjacent
/// symbols and no alternation of length `p + 2`. The witness is a longest
/// such sequence.
pub fn ds_max_length(k: usize, p: usize, budget: usize) -> Result<SearchBound> {
    if k == 0 {
        return Ok(SearchBound {
            lower: 0,
            upper: 0,
            witness: vec![],
        });
    }
    let rs = RunState::new(k, p)?;
    struct Ds<'a> {
        rs: &'a RunState,
        k: usize,
        memo: HashMap<(usize, usize, u128), usize>,
        budget: usize,
        exhausted: bool,
    }
    impl Ds<'_> {
        // longest continuation after `last` with `used` symbols introduced so far
        fn best(&mut self, last: usize, used: usize, state: u128) -> usize {
            if self.exhausted {
                return 0;
            }
            if let Some(&v) = self.memo.get(&(last, used, state)) {
                return v;
            }
            if self.memo.len() >= self.budget {
                self.exhausted = true;
                return 0;
            }
            let mut v = 0;
            for c in 0..(used + 1).min(self.k) {
                if c == last {
                    continue;
                }
                if let Some(next) = self.rs.push(state, c) {
                    let used2 = used.max(c + 1);
                    v = v.max(1 + self.best(c, used2, next));
                }
            }
            if !self.exhausted {
                self.memo.insert((last, used, state), v);
            }
            v
        }
    }
    let mut ds = Ds {
        rs: &rs,
        k,
        memo: HashMap::new(),
        budget: budget.max(1),
        exhausted: false,
    };
    let start = rs.push(0, 0).expect("single symbol");
    let value = 1 + ds.best(0, 1, start);
    if ds.exhausted {
        return Ok(SearchBound {
            lower: 1,
            upper: usize::MAX,
            witness: vec![1],
        });
    }
    let mut witness = vec![1];
    let (mut last, mut used, mut state) = (0usize, 1usize, start);
    let mut remaining = value - 1;
    while remaining > 0 {
        let mut advanced = false;
        for c in 0..(used + 1).min(k) {
            if c == last {
                continue;
            }
            if let Some(next) = rs.push(state, c) {
                let used2 = used.max(c + 1);
                if 1 + ds.best(c, used2, next) == remaining {
                    witness.push(c + 1);
                    last = c;
                    used = used2;
                    state = next;
                    remaining -= 1;
                    advanced = true;
                    break;
                }
            }
        }
        debug_assert!(advanced);
        if !advanced {
            break;
        }
    }
    Ok(SearchBound {
        lower: value,
        upper: value,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternations() {
        assert!(contains_alternation(&[1, 2, 1, 2], 2, false));
        assert!(!contains_alternation(&[1, 2, 2, 1], 2, false));
        assert!(!contains_alternation(&[1, 2, 1], 2, false));
        // circular reading of 1 1 2 contains 1 2 1
        assert!(contains_alternation(&[1, 1, 2], 1, true));
        assert!(!contains_alternation(&[1, 1, 2], 1, false));
    }

    #[test]
    fn block_sequence_layout() {
        let s = block_sequence(3, 2);
        assert_eq!(s.symbols, vec![1, 2, 3, 1, 2, 3]);
        assert!(s.circular);
    }

    #[test]
    fn dp_matches_dfs_small() {
        for k in 1..=3 {
            for s in 1..=4 {
                let seq = block_sequence(k, s);
                for p in [1, 2, 3] {
                    let dp = max_alternation_free_subsequence(&seq, p, 1 << 20).unwrap();
                    let dfs = dfs_search(&seq, p, 1 << 22);
                    assert!(dp.is_exact() && dfs.lower == dfs.upper);
                    assert_eq!(dp.lower, dfs.lower, "k={k} s={s} p={p}");
                    let syms: Vec<usize> = dp.witness.iter().map(|&i| seq.symbols[i]).collect();
                    assert!(!contains_alternation(&syms, p, true));
                }
            }
        }
    }

    #[test]
    fn ds_known_values() {
        for k in 1..=5 {
            assert_eq!(ds_max_length(k, 1, 1 << 20).unwrap().lower, k);
            assert_eq!(ds_max_length(k, 2, 1 << 20).unwrap().lower, 2 * k - 1);
        }
        let l3: Vec<usize> = (1..=5)
            .map(|k| ds_max_length(k, 3, 1 << 22).unwrap().lower)
            .collect();
        assert_eq!(l3, vec![1, 4, 8, 12, 17]);
        let w = ds_max_length(4, 4, 1 << 22).unwrap();
        assert_eq!(w.witness.len(), w.lower);
        assert!(w.witness.windows(2).all(|p| p[0] != p[1]));
        assert!(!contains_alternation(&w.witness, 4, false));
    }

    #[test]
    fn budget_gives_interval() {
        let seq = block_sequence(5, 5);
        let r = max_alternation_free_subsequence(&seq, 2, 3).unwrap();
        assert!(r.lower <= r.upper);
        assert!(!r.is_exact());
    }
}
