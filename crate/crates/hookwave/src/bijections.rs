//! The des↔lec bijections `theta`/`eta` and `psi`/`phi` on words, the
//! semipermutation type with its descent statistic, and the bijection
//! `mu`/`nu` between semipermutations and permutations with a long special
//! reverse wave.
//!
//! The recursive definitions are implemented iteratively (peel a split, push
//! the rearranged block) so call depth never depends on word length.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::waves::{ins, rins, srdes, srw_split, sw_split};
use crate::words::{des, hook_factorization, inv, make_hook, make_reverse_wave, make_wave, Word};
use crate::{Error, Result};

/// Sends `des` to `lec`: peels the special reverse wave and replaces it by
/// the hook on the same values with statistic `srdes`. Fixes increasing
/// words.
pub fn theta(w: &Word) -> Word {
    let mut blocks = Vec::new();
    let mut cur = w.clone();
    while !cur.is_empty() {
        let d = srdes(&cur).expect("non-empty word");
        let split = srw_split(&cur).expect("non-empty word");
        blocks.push(make_hook(&split.srw.value_set(), d).expect("srdes ≤ |srw| − 1"));
        cur = split.rest;
    }
    let mut out = Word::empty();
    for b in blocks.iter().rev() {
        out = out.concat(b);
    }
    out
}

/// Inverse of [`theta`]: reads the hook factorization left to right and
/// r-inserts each hook with statistic `inv`.
pub fn eta(w: &Word) -> Word {
    let hf = hook_factorization(w);
    let mut out = hf.gamma;
    for h in &hf.hooks {
        out = rins(&out, h, inv(h)).expect("hook inv is in range and values are disjoint");
    }
    out
}

/// Sends `des` to `lec`: peels the special wave and replaces it by the hook
/// on the same values with statistic `des(sw)`. Fixes increasing words.
pub fn psi(w: &Word) -> Word {
    let mut blocks = Vec::new();
    let mut cur = w.clone();
    while !cur.is_empty() {
        let split = sw_split(&cur).expect("non-empty word");
        let d = des(&split.sw);
        blocks.push(make_hook(&split.sw.value_set(), d).expect("des(sw) ≤ |sw| − 1"));
        cur = split.rest;
    }
    let mut out = Word::empty();
    for b in blocks.iter().rev() {
        out = out.concat(b);
    }
    out
}

/// Inverse of [`psi`]: reads the hook factorization left to right and
/// inserts, for each hook, the wave on the same values with statistic `inv`.
pub fn phi(w: &Word) -> Word {
    let hf = hook_factorization(w);
    let mut out = hf.gamma;
    for h in &hf.hooks {
        let wave = make_wave(&h.value_set(), inv(h)).expect("hook inv is in range");
        out = ins(&out, &wave).expect("non-trivial wave with disjoint values");
    }
    out
}

/// A pair `(α₀, ρ)` with `ρ` a word of `k+1` distinct values from `[n]` and
/// `α₀` the complementary set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Semipermutation {
    n: u32,
    alpha0: Vec<u32>,
    rho: Word,
}

impl Semipermutation {
    /// Builds a semipermutation with `n` inferred as `|α₀| + |ρ|`; the
    /// values must be exactly `[n]`.
    pub fn new(alpha0: Vec<u32>, rho: Word) -> Result<Self> {
        let n = (alpha0.len() + rho.len()) as u32;
        Self::with_n(n, alpha0, rho)
    }

    /// Builds a semipermutation with an explicit ambient size `n`.
    pub fn with_n(n: u32, mut alpha0: Vec<u32>, rho: Word) -> Result<Self> {
        if rho.is_empty() {
            return Err(Error::domain("semipermutation word ρ must be non-empty"));
        }
        alpha0.sort_unstable();
        if alpha0.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::domain("α₀ must have distinct values"));
        }
        let mut all: Vec<u32> = alpha0.iter().copied().chain(rho.entries().iter().copied()).collect();
        all.sort_unstable();
        if !all.iter().copied().eq(1..=n) {
            return Err(Error::domain(format!(
                "α₀ and ρ together must cover exactly 1..={n}"
            )));
        }
        Ok(Semipermutation { n, alpha0, rho })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `k`, so that `ρ` has `k+1` entries.
    pub fn k(&self) -> usize {
        self.rho.len() - 1
    }

    /// The untouched values, in increasing order.
    pub fn alpha0(&self) -> &[u32] {
        &self.alpha0
    }

    pub fn rho(&self) -> &Word {
        &self.rho
    }
}

impl fmt::Display for Semipermutation {
    /// `"4,6,7|5 2 3 1 8"`; empty `α₀` prints as `"|5 2 3 1 8"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.alpha0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "|{}", self.rho)
    }
}

impl FromStr for Semipermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((left, right)) = s.split_once('|') else {
            return Err(Error::Parse {
                position: 1,
                message: "expected \"a1,a2,...|r1 r2 ...\" with a '|' separator".into(),
            });
        };
        let mut alpha0 = Vec::new();
        let mut seen = HashSet::new();
        if !left.trim().is_empty() {
            for (i, tok) in left.split(',').enumerate() {
                let tok = tok.trim();
                let v: u32 = tok.parse().map_err(|_| Error::Parse {
                    position: i + 1,
                    message: format!("expected a positive integer in α₀, found {tok:?}"),
                })?;
                if v == 0 || !seen.insert(v) {
                    return Err(Error::Parse {
                        position: i + 1,
                        message: format!("invalid α₀ entry {v}"),
                    });
                }
                alpha0.push(v);
            }
        }
        let rho: Word = right.parse()?;
        Semipermutation::new(alpha0, rho)
    }
}

/// `des((α₀, ρ)) = des(ρ) + #{a ∈ α₀ : a > ρ₁}`.
pub fn semiperm_des(sp: &Semipermutation) -> usize {
    let rho1 = sp.rho().entries()[0];
    des(sp.rho()) + sp.alpha0().iter().filter(|&&a| a > rho1).count()
}

/// Maps a semipermutation to the permutation obtained by prefixing `ρ` with
/// the unique reverse wave on `α₀ ⊔ {ρ₁}` that has `m = #{a ∈ α₀ : a > ρ₁}`
/// descents. The image has `|srw| ≥ n − k` and the same number of descents.
pub fn mu(sp: &Semipermutation) -> Word {
    let rho = sp.rho().entries();
    let rho1 = rho[0];
    let a = sp.alpha0();
    let m = a.iter().filter(|&&x| x > rho1).count();
    // index form: α_1 … α_{n-k-m-1} α_{n-k-1} … α_{n-k-m}, then ρ
    let keep = a.len() - m;
    let mut entries: Vec<u32> = a[..keep].to_vec();
    entries.extend(a[keep..].iter().rev());
    entries.push(rho1);
    // the same prefix must be the unique reverse wave on α₀ ⊔ {ρ₁} with m
    // descents
    let mut values = a.to_vec();
    values.push(rho1);
    let wave = make_reverse_wave(&values, m).expect("m ≤ |α₀|");
    assert_eq!(entries, wave.entries(), "mu prefix disagrees with reverse-wave form");
    entries.extend_from_slice(&rho[1..]);
    Word::raw(entries)
}

/// Inverse of [`mu`]: requires `w` to be a permutation of `[n]` whose
/// special reverse wave has length at least `n − k`, and returns
/// `({w_1, …, w_{n-k-1}}, w_{n-k} … w_n)`.
pub fn nu(w: &Word, k: usize) -> Result<Semipermutation> {
    let n = w.len() as u32;
    if n == 0 || !w.is_permutation_of(n) {
        return Err(Error::domain("nu requires a permutation of [n]"));
    }
    if k >= n as usize {
        return Err(Error::range(format!("k must satisfy 0 ≤ k ≤ {}", n - 1)));
    }
    let split = srw_split(w)?;
    let need = n as usize - k;
    if split.srw.len() < need {
        return Err(Error::domain(format!(
            "special reverse wave has length {} < n − k = {need}; outside the image of mu",
            split.srw.len()
        )));
    }
    let cut = need - 1;
    let alpha0 = w.entries()[..cut].to_vec();
    let rho = Word::raw(w.entries()[cut..].to_vec());
    Semipermutation::new(alpha0, rho)
}

/// `c(σ) = (n+1−σ_1) … (n+1−σ_n)`; requires a permutation of `[n]`.
pub fn complement(w: &Word, n: u32) -> Result<Word> {
    if !w.is_permutation_of(n) {
        return Err(Error::domain(format!("complement requires a permutation of [{n}]")));
    }
    Ok(Word::raw(w.entries().iter().map(|&e| n + 1 - e).collect()))
}

/// `r(σ) = σ_n … σ_1`.
pub fn reverse(w: &Word) -> Word {
    Word::raw(w.entries().iter().rev().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::lec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> Semipermutation {
        s.parse().unwrap()
    }

    #[test]
    fn semiperm_parse_display() {
        let s = sp("4,6,7|5 2 3 1 8");
        assert_eq!(s.n(), 8);
        assert_eq!(s.k(), 4);
        assert_eq!(s.alpha0(), &[4, 6, 7]);
        assert_eq!(s.rho(), &w("52318"));
        assert_eq!(s.to_string(), "4,6,7|5 2 3 1 8");
        assert_eq!(sp("|1 2 3").alpha0(), &[] as &[u32]);
        assert!("4,6|5 2".parse::<Semipermutation>().is_err()); // not covering [n]
        assert!("1,2,3|".parse::<Semipermutation>().is_err()); // empty ρ
    }

    #[test]
    fn semiperm_des_examples() {
        assert_eq!(semiperm_des(&sp("4,6,7|5 2 3 1 8")), 4);
        assert_eq!(semiperm_des(&sp("4,5,7|6 2 3 1 8")), 3);
        assert_eq!(semiperm_des(&sp("|1 2 3 4")), 0);
    }

    #[test]
    fn theta_eta_examples() {
        assert_eq!(theta(&w("45762318")), w("18326457"));
        assert_eq!(eta(&w("18326457")), w("45762318"));
        assert_eq!(theta(&Word::empty()), Word::empty());
        assert_eq!(eta(&Word::empty()), Word::empty());
        assert_eq!(theta(&w("1 2 3 4")), w("1 2 3 4"));
        assert_eq!(eta(&w("1 2 3 4")), w("1 2 3 4"));
        assert_eq!(lec(&theta(&w("45762318"))), des(&w("45762318")));
    }

    #[test]
    fn psi_phi_examples() {
        assert_eq!(psi(&w("13675428")), w("18326457"));
        assert_eq!(phi(&w("18326457")), w("13675428"));
        assert_eq!(psi(&Word::empty()), Word::empty());
        assert_eq!(psi(&w("2 5 9")), w("2 5 9"));
        assert_eq!(phi(&w("2 5 9")), w("2 5 9"));
    }

    #[test]
    fn mu_nu_examples() {
        let s = sp("4,5,7|6 2 3 1 8");
        assert_eq!(mu(&s), w("45762318"));
        assert_eq!(nu(&w("45762318"), 4).unwrap(), s);
        assert_eq!(semiperm_des(&s), des(&mu(&s)));

        // k = n−1: α₀ empty, mu is the identity on ρ
        let s = sp("|3 1 4 2");
        assert_eq!(mu(&s), w("3 1 4 2"));

        // identity permutation
        let s = nu(&w("1 2 3 4 5"), 2).unwrap();
        assert_eq!(s.alpha0(), &[1, 2]);
        assert_eq!(s.rho(), &w("3 4 5"));

        assert!(nu(&w("1 3"), 0).is_err()); // not a permutation of [2]
        assert!(nu(&w("21435"), 1).is_err()); // srw = 21, too short for n−k = 4
    }

    #[test]
    fn complement_reverse() {
        assert_eq!(complement(&w("123"), 3).unwrap(), w("321"));
        assert_eq!(reverse(&w("45762318")), w("81326754"));
        let sigma = w("35142");
        assert_eq!(complement(&complement(&sigma, 5).unwrap(), 5).unwrap(), sigma);
        assert!(complement(&w("1 2 5"), 3).is_err());
    }
}
