//! Words with distinct positive entries, the statistics `des`/`inv`/`lec`,
//! the hook factorization, and the three canonical rearrangements (hook,
//! wave, reverse wave) of a value set with a prescribed statistic.
//!
//! Positions are 1-based everywhere in documentation and output, matching
//! the usual convention for permutation statistics.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A finite sequence of pairwise-distinct positive integers.
///
/// The empty word `ε` is valid. Entries need not form a permutation of
/// `[n]`; permutation-of-`[n]` checks live with the operations that need
/// them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &e in &entries {
            if e == 0 {
                return Err(Error::domain("word entries must be positive"));
            }
            if !seen.insert(e) {
                return Err(Error::domain(format!("duplicate entry {e} in word")));
            }
        }
        Ok(Word(entries))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Internal constructor for sequences already known to be valid.
    pub(crate) fn raw(entries: Vec<u32>) -> Self {
        debug_assert!(Word::new(entries.clone()).is_ok());
        Word(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    /// The entries in increasing order.
    pub fn value_set(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// True if the two words share no entry.
    pub fn is_disjoint_from(&self, other: &Word) -> bool {
        let set: HashSet<u32> = self.0.iter().copied().collect();
        other.0.iter().all(|e| !set.contains(e))
    }

    /// True if `self` and `other` use the same multiset of values.
    pub fn is_rearrangement_of(&self, other: &Word) -> bool {
        self.value_set() == other.value_set()
    }

    /// True if the entries are exactly `1..=n`, each once.
    pub fn is_permutation_of(&self, n: u32) -> bool {
        self.len() == n as usize && self.value_set().iter().copied().eq(1..=n)
    }

    /// Concatenation; callers must keep the entries disjoint.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert!(self.is_disjoint_from(other));
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the space-separated form, e.g. `"4 5 7 6 2 3 1 8"`. A single
    /// token of two or more digits is read as the compact digit form
    /// (`"45762318"`) when every digit is a valid distinct entry; otherwise
    /// it is read as one multi-digit entry. Empty input is `ε`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Ok(Word::empty());
        }
        if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit())
        {
            let digits: Vec<u32> = tokens[0].bytes().map(|b| u32::from(b - b'0')).collect();
            let distinct = digits.iter().collect::<HashSet<_>>().len() == digits.len();
            if distinct && digits.iter().all(|&d| d >= 1) {
                return Ok(Word(digits));
            }
        }
        let mut entries = Vec::with_capacity(tokens.len());
        let mut seen = HashSet::new();
        for (i, tok) in tokens.iter().enumerate() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                position: i + 1,
                message: format!("expected a positive integer, found {tok:?}"),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    position: i + 1,
                    message: "entries must be positive".into(),
                });
            }
            if !seen.insert(v) {
                return Err(Error::Parse {
                    position: i + 1,
                    message: format!("duplicate entry {v}"),
                });
            }
            entries.push(v);
        }
        Ok(Word(entries))
    }
}

/// The 1-based descent positions of `w`: all `i < ℓ` with `w_i > w_{i+1}`.
pub fn des_set(w: &Word) -> Vec<usize> {
    let e = w.entries();
    (0..e.len().saturating_sub(1))
        .filter(|&i| e[i] > e[i + 1])
        .map(|i| i + 1)
        .collect()
}

/// The number of descents of `w`.
pub fn des(w: &Word) -> usize {
    des_set(w).len()
}

/// The number of inversions of `w`: pairs `i < j` with `w_i > w_j`.
pub fn inv(w: &Word) -> usize {
    let e = w.entries();
    let mut count = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] {
                count += 1;
            }
        }
    }
    count
}

/// Outcome of a shape test. Increasing words pass the "trivial" variant of
/// each shape; `Proper` means the non-degenerate shape condition holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    No,
    Trivial,
    Proper,
}

impl Shape {
    /// Trivial or proper.
    pub fn holds(self) -> bool {
        !matches!(self, Shape::No)
    }
}

/// Hook test: `a_1 > a_2 < a_3 < … < a_s` with `s ≥ 2`.
pub fn hook_shape(w: &Word) -> Shape {
    if w.is_increasing() {
        return Shape::Trivial;
    }
    let e = w.entries();
    if e[0] > e[1] && e[1..].windows(2).all(|p| p[0] < p[1]) {
        Shape::Proper
    } else {
        Shape::No
    }
}

fn position_of_max(e: &[u32]) -> usize {
    let mut best = 0;
    for (i, &v) in e.iter().enumerate() {
        if v > e[best] {
            best = i;
        }
    }
    best
}

/// Reverse-wave test: with `c` the position of the maximum,
/// `w_1 < … < w_{c-1} < w_ℓ < w_{ℓ-1} < … < w_c`.
pub fn reverse_wave_shape(w: &Word) -> Shape {
    if w.is_increasing() {
        return Shape::Trivial;
    }
    let e = w.entries();
    let c = position_of_max(e);
    if c == e.len() - 1 {
        return Shape::No;
    }
    let chain: Vec<u32> = e[..c].iter().copied().chain(e[c..].iter().rev().copied()).collect();
    if chain.windows(2).all(|p| p[0] < p[1]) {
        Shape::Proper
    } else {
        Shape::No
    }
}

/// Wave test: with `c` the position of the maximum,
/// `w_ℓ < w_{ℓ-1} < … < w_{c+1} < w_1 < w_2 < … < w_c`.
pub fn wave_shape(w: &Word) -> Shape {
    if w.is_increasing() {
        return Shape::Trivial;
    }
    let e = w.entries();
    let c = position_of_max(e);
    if c == e.len() - 1 {
        return Shape::No;
    }
    let chain: Vec<u32> = e[c + 1..]
        .iter()
        .rev()
        .copied()
        .chain(e[..=c].iter().copied())
        .collect();
    if chain.windows(2).all(|p| p[0] < p[1]) {
        Shape::Proper
    } else {
        Shape::No
    }
}

/// The unique decomposition `w = γ * α_1 * … * α_k` with `γ` increasing and
/// each `α_i` a hook, obtained by repeatedly cutting at the rightmost
/// descent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookFactorization {
    /// Increasing prefix, possibly empty.
    pub gamma: Word,
    /// Hooks, leftmost first.
    pub hooks: Vec<Word>,
}

impl HookFactorization {
    /// Reassembles the source word.
    pub fn concat(&self) -> Word {
        let mut out = self.gamma.clone();
        for h in &self.hooks {
            out = out.concat(h);
        }
        out
    }
}

pub fn hook_factorization(w: &Word) -> HookFactorization {
    let mut hooks = Vec::new();
    let mut cur = w.entries();
    loop {
        let descent = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] > cur[i + 1]);
        match descent {
            None => {
                let hf = HookFactorization {
                    gamma: Word::raw(cur.to_vec()),
                    hooks: {
                        hooks.reverse();
                        hooks
                    },
                };
                debug_assert!(hf.hooks.iter().all(|h| hook_shape(h) == Shape::Proper));
                return hf;
            }
            Some(i) => {
                hooks.push(Word::raw(cur[i..].to_vec()));
                cur = &cur[..i];
            }
        }
    }
}

/// `lec(w)`: the sum of `inv` over the hooks of the hook factorization.
pub fn lec(w: &Word) -> usize {
    hook_factorization(w).hooks.iter().map(inv).sum()
}

fn sorted_distinct(values: &[u32]) -> Result<Vec<u32>> {
    let mut b = values.to_vec();
    b.sort_unstable();
    if b.iter().any(|&v| v == 0) {
        return Err(Error::domain("values must be positive"));
    }
    if b.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::domain("values must be distinct"));
    }
    Ok(b)
}

fn check_statistic_range(len: usize, d: usize) -> Result<()> {
    if d == 0 {
        return Ok(());
    }
    if len == 0 || d > len - 1 {
        return Err(Error::range(format!(
            "statistic {d} out of range for {len} values (need 0 ≤ d ≤ {})",
            len.saturating_sub(1)
        )));
    }
    Ok(())
}

/// The unique rearrangement of `values` that is a hook (trivial when `d = 0`)
/// with `inv = lec = d`: writing `a_1 < … < a_ℓ`, it is
/// `a_{d+1} a_1 … a_d a_{d+2} … a_ℓ`.
pub fn make_hook(values: &[u32], d: usize) -> Result<Word> {
    let b = sorted_distinct(values)?;
    check_statistic_range(b.len(), d)?;
    if d == 0 {
        return Ok(Word::raw(b));
    }
    let mut out = Vec::with_capacity(b.len());
    out.push(b[d]);
    out.extend_from_slice(&b[..d]);
    out.extend_from_slice(&b[d + 1..]);
    Ok(Word::raw(out))
}

/// The unique reverse wave on `values` with `d` descents: writing
/// `b_1 < … < b_ℓ`, it is `b_1 … b_{ℓ-d-1} b_ℓ b_{ℓ-1} … b_{ℓ-d}`.
pub fn make_reverse_wave(values: &[u32], d: usize) -> Result<Word> {
    let b = sorted_distinct(values)?;
    check_statistic_range(b.len(), d)?;
    if d == 0 {
        return Ok(Word::raw(b));
    }
    let cut = b.len() - d - 1;
    let mut out = b[..cut].to_vec();
    out.extend(b[cut..].iter().rev());
    Ok(Word::raw(out))
}

/// The unique wave on `values` with `d` descents: writing `b_1 < … < b_ℓ`,
/// it is `b_{d+1} b_{d+2} … b_ℓ b_d b_{d-1} … b_1`.
pub fn make_wave(values: &[u32], d: usize) -> Result<Word> {
    let b = sorted_distinct(values)?;
    check_statistic_range(b.len(), d)?;
    if d == 0 {
        return Ok(Word::raw(b));
    }
    let mut out = b[d..].to_vec();
    out.extend(b[..d].iter().rev());
    Ok(Word::raw(out))
}
