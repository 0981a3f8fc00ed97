//! Word surgery: the special reverse wave prefix with its `srdes` statistic
//! and insertion inverse `rins`, and the special wave subword with its
//! insertion inverse `ins`.
//!
//! The sentinel `w_0 = 0` of the definitions is realized as an explicit
//! below-everything comparison, so words may contain arbitrary positive
//! integers.

use crate::words::{des, make_reverse_wave, wave_shape, Shape, Word};
use crate::{Error, Result};

/// A word split into its special reverse wave prefix and the residual
/// suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrwSplit {
    /// The maximal reverse-wave prefix `w_1 … w_s`.
    pub srw: Word,
    /// The suffix `w_{s+1} … w_ℓ`.
    pub rest: Word,
    /// 1-based position of the first descent; `None` for increasing words.
    pub t: Option<usize>,
    /// 1-based end position of the special reverse wave.
    pub s: usize,
}

/// Splits off the special reverse wave: `t` is the first descent, and `s` is
/// maximal with `w_t > w_{t+1} > … > w_s > w_{t-1}` (with `w_0 = 0`).
/// Increasing words split as `(w, ε)`.
pub fn srw_split(w: &Word) -> Result<SrwSplit> {
    if w.is_empty() {
        return Err(Error::domain("special reverse wave of the empty word is undefined"));
    }
    let e = w.entries();
    let l = e.len();
    let first_descent = (0..l - 1).find(|&i| e[i] > e[i + 1]);
    let Some(ti) = first_descent else {
        return Ok(SrwSplit { srw: w.clone(), rest: Word::empty(), t: None, s: l });
    };
    let below = if ti == 0 { 0 } else { e[ti - 1] };
    let mut si = ti;
    while si + 1 < l && e[si + 1] < e[si] && e[si + 1] > below {
        si += 1;
    }
    Ok(SrwSplit {
        srw: Word::raw(e[..=si].to_vec()),
        rest: Word::raw(e[si + 1..].to_vec()),
        t: Some(ti + 1),
        s: si + 1,
    })
}

/// `srdes(w) = des(srw(w)) + χ(w_s > w_{s+1})`, the descents of `w` charged
/// to its special reverse wave.
pub fn srdes(w: &Word) -> Result<usize> {
    let split = srw_split(w)?;
    let cut_descent = match (split.srw.entries().last(), split.rest.entries().first()) {
        (Some(&a), Some(&b)) if a > b => 1,
        _ => 0,
    };
    Ok(des(&split.srw) + cut_descent)
}

/// The unique word whose special reverse wave is a rearrangement of `b`,
/// whose residual suffix is `a`, and whose `srdes` is `d`. Requires
/// `1 ≤ d ≤ |b| − 1` and disjoint value sets.
pub fn rins(a: &Word, b: &Word, d: usize) -> Result<Word> {
    if b.is_empty() {
        return Err(Error::domain("rins requires a non-empty wave word"));
    }
    let q = b.len();
    if d < 1 || d > q - 1 {
        return Err(Error::domain(format!(
            "rins statistic {d} out of range (need 1 ≤ d ≤ {})",
            q - 1
        )));
    }
    if !a.is_disjoint_from(b) {
        return Err(Error::domain("rins arguments must have disjoint value sets"));
    }
    let beta = b.value_set();
    // β_{q-d} < a_1 keeps the cut descent outside the prefix; otherwise the
    // prefix absorbs one descent fewer.
    let use_full = a.is_empty() || beta[q - d - 1] < a.entries()[0];
    let prefix = make_reverse_wave(&beta, if use_full { d } else { d - 1 })?;
    Ok(prefix.concat(a))
}

/// A word split into its special wave subword and the residual word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwSplit {
    /// The subword `w_r … w_s`.
    pub sw: Word,
    /// The residual word `w_1 … w_{r-1} w_{s+1} … w_ℓ`.
    pub rest: Word,
    /// 1-based start position of the special wave.
    pub r: usize,
    /// 1-based position of the first descent; `None` for increasing words.
    pub t: Option<usize>,
    /// 1-based end position of the special wave.
    pub s: usize,
}

/// Splits off the special wave: `t` is the first descent, `r` is minimal
/// with `w_r > w_{t+1}`, and `s` is maximal with
/// `w_{t+1} > w_{t+2} > … > w_s > w_{r-1}` (with `w_0 = 0`). Increasing
/// words split as `(w, ε)`.
///
/// The special wave is not necessarily the longest wave subword; the split
/// follows the `r`/`t`/`s` construction literally.
pub fn sw_split(w: &Word) -> Result<SwSplit> {
    if w.is_empty() {
        return Err(Error::domain("special wave of the empty word is undefined"));
    }
    let e = w.entries();
    let l = e.len();
    let first_descent = (0..l - 1).find(|&i| e[i] > e[i + 1]);
    let Some(ti) = first_descent else {
        return Ok(SwSplit { sw: w.clone(), rest: Word::empty(), r: 1, t: None, s: l });
    };
    let after = e[ti + 1];
    let ri = (0..=ti).find(|&j| e[j] > after).expect("w_t > w_{t+1}");
    let below = if ri == 0 { 0 } else { e[ri - 1] };
    let mut si = ti + 1;
    while si + 1 < l && e[si + 1] < e[si] && e[si + 1] > below {
        si += 1;
    }
    let mut rest = e[..ri].to_vec();
    rest.extend_from_slice(&e[si + 1..]);
    Ok(SwSplit {
        sw: Word::raw(e[ri..=si].to_vec()),
        rest: Word::raw(rest),
        r: ri + 1,
        t: Some(ti + 1),
        s: si + 1,
    })
}

/// Inserts the non-trivial wave `b` into `a` so that the special wave of the
/// result is exactly `b` and the residual word is `a`: with `x` maximal such
/// that `a_1 < a_2 < … < a_x < b_q`, the result is
/// `a_1 … a_x b a_{x+1} … a_p`.
pub fn ins(a: &Word, b: &Word) -> Result<Word> {
    if wave_shape(b) != Shape::Proper {
        return Err(Error::domain("ins requires a non-trivial wave"));
    }
    if !a.is_disjoint_from(b) {
        return Err(Error::domain("ins arguments must have disjoint value sets"));
    }
    let ae = a.entries();
    let bq = *b.entries().last().expect("proper wave is non-empty");
    let mut x = 0;
    while x < ae.len() && ae[x] < bq && (x == 0 || ae[x] > ae[x - 1]) {
        x += 1;
    }
    let mut out = ae[..x].to_vec();
    out.extend_from_slice(b.entries());
    out.extend_from_slice(&ae[x..]);
    Ok(Word::raw(out))
}
