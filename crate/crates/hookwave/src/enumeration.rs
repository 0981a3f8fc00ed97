//! Exhaustive iteration over the symmetric group and the semipermutation
//! sets, the four-set cardinality counts, generalized Eulerian tables, and
//! the verification checks that machine-check every equinumerosity claim at
//! small sizes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bijections::{eta, mu, nu, phi, psi, semiperm_des, theta, Semipermutation};
use crate::cohomology::{
    enumerate_basis, monomial_to_permutation, permutation_to_monomial, rightmost_hook_at_least,
};
use crate::waves::{ins, rins, srdes, srw_split, sw_split};
use crate::words::{des, hook_factorization, lec, reverse_wave_shape, Word};
use crate::{Error, Result};

/// Exhaustive sweeps refuse larger `n` unless forced; 10! words is seconds,
/// beyond that minutes to hours.
pub const SAFETY_CAP: u32 = 10;

pub fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

/// `n! / (n-k-1)!`, the number of words of `k+1` distinct values from `[n]`.
pub fn semiperm_count(n: u32, k: usize) -> u64 {
    (0..=k).map(|j| u64::from(n) - j as u64).product()
}

fn ordered_selections(n: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for v in 1..=n {
        if !cur.contains(&v) {
            cur.push(v);
            ordered_selections(n, len, cur, out);
            cur.pop();
        }
    }
}

/// All of `S_n` in lexicographic order.
pub fn iter_sn(n: u32) -> Result<impl Iterator<Item = Word>> {
    if n == 0 {
        return Err(Error::range("n must be at least 1"));
    }
    let mut out = Vec::new();
    ordered_selections(n, n as usize, &mut Vec::new(), &mut out);
    Ok(out.into_iter().map(Word::raw))
}

/// All semipermutations `(α₀, ρ)` with `ρ` of length `k+1`, in lexicographic
/// order of `ρ`.
pub fn iter_semiperm(n: u32, k: usize) -> Result<impl Iterator<Item = Semipermutation>> {
    if n == 0 {
        return Err(Error::range("n must be at least 1"));
    }
    if k >= n as usize {
        return Err(Error::range(format!("k must satisfy 0 ≤ k ≤ {}", n - 1)));
    }
    let mut rhos = Vec::new();
    ordered_selections(n, k + 1, &mut Vec::new(), &mut rhos);
    Ok(rhos.into_iter().map(move |rho| {
        let alpha0: Vec<u32> = (1..=n).filter(|v| !rho.contains(v)).collect();
        Semipermutation::new(alpha0, Word::raw(rho)).expect("complement covers [n]")
    }))
}

/// The four set cardinalities of the four-set equinumerosity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FourCounts {
    /// Semipermutations in `S_{n,k+1}` with `i` descents.
    pub semipermutations: u64,
    /// `σ ∈ S_n` with `des = i` and `|srw| ≥ n − k`.
    pub long_srw: u64,
    /// `σ ∈ S_n` with `des = i` and `|sw| ≥ n − k`.
    pub long_sw: u64,
    /// `σ ∈ S_n` with `lec = i` and rightmost hook of length `≥ n − k`.
    pub long_hook: u64,
}

impl FourCounts {
    pub fn all_equal(&self) -> bool {
        self.semipermutations == self.long_srw
            && self.semipermutations == self.long_sw
            && self.semipermutations == self.long_hook
    }
}

/// Counts the four sets for one `(n, k, i)`. Stated for `i ≥ 1`; `i = 0` is
/// also supported (each set then holds exactly the all-increasing element).
pub fn count_four_sets(n: u32, k: usize, i: usize) -> Result<FourCounts> {
    let semipermutations =
        iter_semiperm(n, k)?.filter(|sp| semiperm_des(sp) == i).count() as u64;
    let min_len = n as usize - k;
    let mut long_srw = 0;
    let mut long_sw = 0;
    let mut long_hook = 0;
    for sigma in iter_sn(n)? {
        let d = des(&sigma);
        if d == i && srw_split(&sigma)?.srw.len() >= min_len {
            long_srw += 1;
        }
        if d == i && sw_split(&sigma)?.sw.len() >= min_len {
            long_sw += 1;
        }
        if lec(&sigma) == i && rightmost_hook_at_least(&sigma, min_len) {
            long_hook += 1;
        }
    }
    Ok(FourCounts { semipermutations, long_srw, long_sw, long_hook })
}

/// A row of generalized Eulerian numbers: `counts[i]` elements with
/// statistic `i`, for `0 ≤ i ≤ n − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub n: u32,
    pub k: usize,
    pub counts: Vec<u64>,
    pub label: String,
}

/// `β_{2i}(X_k)` for all `i`, computed by semipermutation counting. At
/// `k = n − 2` this is the Eulerian triangle row for `n`.
pub fn eulerian_table(n: u32, k: usize) -> Result<CountTable> {
    let mut counts = vec![0u64; n as usize];
    for sp in iter_semiperm(n, k)? {
        counts[semiperm_des(&sp)] += 1;
    }
    Ok(CountTable { n, k, counts, label: "semipermutations".into() })
}

/// Outcome of one verification check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass(name: &str, params: String) -> Self {
        CheckResult { name: name.into(), params, passed: true, counterexample: None }
    }

    fn fail(name: &str, params: String, counterexample: String) -> Self {
        CheckResult { name: name.into(), params, passed: false, counterexample: Some(counterexample) }
    }
}

/// An ordered collection of check outcomes.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }
}

/// Stream sizes: `|S_n| = n!` and `|S_{n,k+1}| = n!/(n−k−1)!`.
pub fn check_stream_cardinalities(n: u32) -> CheckResult {
    let name = "stream-cardinalities";
    let params = format!("n={n}");
    let sn = iter_sn(n).map(|it| it.count() as u64).unwrap_or(0);
    if sn != factorial(n) {
        return CheckResult::fail(name, params, format!("|S_{n}| = {sn}, expected {}", factorial(n)));
    }
    for k in 0..n as usize {
        let count = iter_semiperm(n, k).map(|it| it.count() as u64).unwrap_or(0);
        if count != semiperm_count(n, k) {
            return CheckResult::fail(
                name,
                params,
                format!("|S_({n},{})| = {count}, expected {}", k + 1, semiperm_count(n, k)),
            );
        }
    }
    CheckResult::pass(name, params)
}

/// Checks that `forward` is a des→lec bijection of `S_n` with `inverse` as
/// inverse: round trips both ways, rearrangement, `des(σ) = lec(fwd(σ))`.
///
/// The maps are parameters so deliberately corrupted variants can be checked
/// to fail (mutation sensitivity).
pub fn check_des_lec_bijection(
    n: u32,
    name: &str,
    forward: &dyn Fn(&Word) -> Word,
    inverse: &dyn Fn(&Word) -> Word,
) -> CheckResult {
    let params = format!("n={n}");
    let Ok(stream) = iter_sn(n) else {
        return CheckResult::fail(name, params, "invalid n".into());
    };
    for sigma in stream {
        let image = forward(&sigma);
        if !image.is_rearrangement_of(&sigma) {
            return CheckResult::fail(
                name,
                params,
                format!("{name}({sigma}) = {image} is not a rearrangement"),
            );
        }
        if des(&sigma) != lec(&image) {
            return CheckResult::fail(
                name,
                params,
                format!("des({sigma}) = {} but lec({image}) = {}", des(&sigma), lec(&image)),
            );
        }
        if inverse(&image) != sigma {
            return CheckResult::fail(
                name,
                params,
                format!("inverse({name}({sigma})) = {} ≠ {sigma}", inverse(&image)),
            );
        }
        if forward(&inverse(&sigma)) != sigma {
            return CheckResult::fail(
                name,
                params,
                format!("{name}(inverse({sigma})) ≠ {sigma}"),
            );
        }
    }
    CheckResult::pass(name, params)
}

/// Splitting identities, bounds, insertion round trips and srw maximality,
/// exhaustively over `S_n`.
pub fn check_splitting_identities(n: u32) -> CheckResult {
    let name = "splitting-identities";
    let params = format!("n={n}");
    let Ok(stream) = iter_sn(n) else {
        return CheckResult::fail(name, params, "invalid n".into());
    };
    for sigma in stream {
        let rsplit = srw_split(&sigma).expect("non-empty");
        let rd = srdes(&sigma).expect("non-empty");
        if des(&sigma) != rd + des(&rsplit.rest) {
            return CheckResult::fail(name, params, format!("srdes split fails on {sigma}"));
        }
        let wsplit = sw_split(&sigma).expect("non-empty");
        if des(&sigma) != des(&wsplit.sw) + des(&wsplit.rest) {
            return CheckResult::fail(name, params, format!("sw split fails on {sigma}"));
        }
        if !sigma.is_increasing() {
            if rd < 1 || rd > rsplit.srw.len() - 1 {
                return CheckResult::fail(
                    name,
                    params,
                    format!("srdes({sigma}) = {rd} outside 1..={}", rsplit.srw.len() - 1),
                );
            }
            match rins(&rsplit.rest, &rsplit.srw, rd) {
                Ok(back) if back == sigma => {}
                other => {
                    return CheckResult::fail(
                        name,
                        params,
                        format!("rins round trip fails on {sigma}: {other:?}"),
                    )
                }
            }
            match ins(&wsplit.rest, &wsplit.sw) {
                Ok(back) if back == sigma => {}
                other => {
                    return CheckResult::fail(
                        name,
                        params,
                        format!("ins round trip fails on {sigma}: {other:?}"),
                    )
                }
            }
        }
        // every strictly longer prefix must fail the reverse-wave test
        for longer in rsplit.srw.len() + 1..=sigma.len() {
            let prefix = Word::raw(sigma.entries()[..longer].to_vec());
            if reverse_wave_shape(&prefix).holds() {
                return CheckResult::fail(
                    name,
                    params,
                    format!("srw of {sigma} is not maximal: prefix {prefix} is a reverse wave"),
                );
            }
        }
    }
    CheckResult::pass(name, params)
}

/// `mu` maps each `S_{n,k+1}` bijectively onto the permutations with
/// `|srw| ≥ n − k`, preserving descents, with `nu` as inverse.
pub fn check_mu_bijection(n: u32) -> CheckResult {
    let name = "mu-bijection";
    let params = format!("n={n}, all k");
    for k in 0..n as usize {
        let min_len = n as usize - k;
        let mut image = BTreeSet::new();
        let stream = match iter_semiperm(n, k) {
            Ok(s) => s,
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        };
        for sp in stream {
            let sigma = mu(&sp);
            if des(&sigma) != semiperm_des(&sp) {
                return CheckResult::fail(
                    name,
                    params,
                    format!("mu({sp}) = {sigma} changes the descent count"),
                );
            }
            match nu(&sigma, k) {
                Ok(back) if back == sp => {}
                _ => {
                    return CheckResult::fail(
                        name,
                        params,
                        format!("nu(mu({sp}), {k}) does not round-trip"),
                    )
                }
            }
            if !image.insert(sigma.clone()) {
                return CheckResult::fail(name, params, format!("mu not injective at {sigma}"));
            }
        }
        let expected: BTreeSet<Word> = iter_sn(n)
            .expect("n ≥ 1")
            .filter(|s| srw_split(s).expect("non-empty").srw.len() >= min_len)
            .collect();
        if image != expected {
            let diff = expected.symmetric_difference(&image).next().cloned();
            return CheckResult::fail(
                name,
                params,
                format!("image mismatch at k={k}, e.g. {}", diff.map(|w| w.to_string()).unwrap_or_default()),
            );
        }
    }
    CheckResult::pass(name, params)
}

/// Per-permutation profile used by the sweep-based checks.
struct Profile {
    word: Word,
    des: usize,
    lec: usize,
    srw_len: usize,
    sw_len: usize,
    /// Rightmost hook length, with `n` for increasing words (degree 0).
    hook_len: usize,
}

fn profiles(n: u32) -> Result<Vec<Profile>> {
    iter_sn(n)?
        .map(|sigma| {
            let hook_len = match hook_factorization(&sigma).hooks.last() {
                None => n as usize,
                Some(h) => h.len(),
            };
            Ok(Profile {
                des: des(&sigma),
                lec: lec(&sigma),
                srw_len: srw_split(&sigma)?.srw.len(),
                sw_len: sw_split(&sigma)?.sw.len(),
                hook_len,
                word: sigma,
            })
        })
        .collect()
}

/// Four-set equinumerosity for all `k` and all `i` at once.
pub fn check_four_sets(n: u32) -> CheckResult {
    let name = "four-set-equality";
    let params = format!("n={n}, all k, all i (i=0 as extension)");
    let profs = match profiles(n) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(name, params, e.to_string()),
    };
    for k in 0..n as usize {
        let min_len = n as usize - k;
        let mut semi = vec![0u64; n as usize + 1];
        match iter_semiperm(n, k) {
            Ok(stream) => {
                for sp in stream {
                    semi[semiperm_des(&sp)] += 1;
                }
            }
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        }
        for i in 0..=n as usize {
            let srw = profs.iter().filter(|p| p.des == i && p.srw_len >= min_len).count() as u64;
            let sw = profs.iter().filter(|p| p.des == i && p.sw_len >= min_len).count() as u64;
            let hook =
                profs.iter().filter(|p| p.lec == i && p.hook_len >= min_len).count() as u64;
            if semi[i] != srw || semi[i] != sw || semi[i] != hook {
                return CheckResult::fail(
                    name,
                    params,
                    format!(
                        "counts differ at k={k}, i={i}: semipermutations {}, srw {srw}, \
                         sw {sw}, hook {hook}",
                        semi[i]
                    ),
                );
            }
        }
    }
    CheckResult::pass(name, params)
}

/// The restriction properties: `theta` (resp. `psi`) maps
/// `{des = i, |srw| ≥ n−k}` (resp. `|sw| ≥ n−k`) onto
/// `{lec = i, rightmost hook ≥ n−k}`, as sets.
pub fn check_restriction_properties(n: u32) -> CheckResult {
    let name = "restriction-properties";
    let params = format!("n={n}, all k, all i");
    let profs = match profiles(n) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(name, params, e.to_string()),
    };
    let hook_side = |i: usize, min_len: usize| -> BTreeSet<Word> {
        profs
            .iter()
            .filter(|p| p.lec == i && p.hook_len >= min_len)
            .map(|p| p.word.clone())
            .collect()
    };
    for k in 0..n as usize {
        let min_len = n as usize - k;
        for i in 0..n as usize {
            let expected = hook_side(i, min_len);
            let via_theta: BTreeSet<Word> = profs
                .iter()
                .filter(|p| p.des == i && p.srw_len >= min_len)
                .map(|p| theta(&p.word))
                .collect();
            if via_theta != expected {
                return CheckResult::fail(
                    name,
                    params,
                    format!("theta restriction fails at k={k}, i={i}"),
                );
            }
            let via_psi: BTreeSet<Word> = profs
                .iter()
                .filter(|p| p.des == i && p.sw_len >= min_len)
                .map(|p| psi(&p.word))
                .collect();
            if via_psi != expected {
                return CheckResult::fail(
                    name,
                    params,
                    format!("psi restriction fails at k={k}, i={i}"),
                );
            }
        }
    }
    CheckResult::pass(name, params)
}

/// Three-way agreement of the Betti backends for all `k` and `i`, plus row
/// sums, table consistency and Eulerian palindromicity at `k = n − 2`.
pub fn check_betti_agreement(n: u32) -> CheckResult {
    let name = "betti-agreement";
    let params = format!("n={n}, all k, all i");
    let profs = match profiles(n) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(name, params, e.to_string()),
    };
    for k in 0..n {
        let min_len = (n - k) as usize;
        let table = match eulerian_table(n, k as usize) {
            Ok(t) => t,
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        };
        let mut basis_hist = vec![0u64; n as usize];
        match enumerate_basis(n, k, None) {
            Ok(basis) => {
                for m in &basis {
                    basis_hist[m.grade()] += 1;
                }
            }
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        }
        for i in 0..n as usize {
            let via_lec =
                profs.iter().filter(|p| p.lec == i && p.hook_len >= min_len).count() as u64;
            if table.counts[i] != basis_hist[i] || table.counts[i] != via_lec {
                return CheckResult::fail(
                    name,
                    params,
                    format!(
                        "betti({n}, {k}, {i}): semipermutations {}, basis {}, lec {via_lec}",
                        table.counts[i], basis_hist[i]
                    ),
                );
            }
        }
        let row_sum: u64 = table.counts.iter().sum();
        if row_sum != semiperm_count(n, k as usize) {
            return CheckResult::fail(
                name,
                params,
                format!("row sum {row_sum} ≠ {}", semiperm_count(n, k as usize)),
            );
        }
        if k == n.saturating_sub(2) && n >= 2 {
            let c = &table.counts;
            for i in 0..n as usize {
                if c[i] != c[n as usize - 1 - i] {
                    return CheckResult::fail(
                        name,
                        params,
                        format!("Eulerian row for n={n} is not palindromic at i={i}"),
                    );
                }
            }
        }
    }
    CheckResult::pass(name, params)
}

/// Grade-preserving bijection between the monomial basis and the long-hook
/// permutations, for all `k`: injectivity, image equality, round trips.
pub fn check_basis_correspondence(n: u32) -> CheckResult {
    let name = "basis-correspondence";
    let params = format!("n={n}, all k");
    for k in 0..n {
        let min_len = (n - k) as usize;
        let basis = match enumerate_basis(n, k, None) {
            Ok(b) => b,
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        };
        let mut image = BTreeSet::new();
        for m in &basis {
            let sigma = match monomial_to_permutation(m) {
                Ok(s) => s,
                Err(e) => return CheckResult::fail(name, params, e.to_string()),
            };
            if lec(&sigma) != m.grade() {
                return CheckResult::fail(
                    name,
                    params,
                    format!("grade {} ≠ lec({sigma}) = {} for {m}", m.grade(), lec(&sigma)),
                );
            }
            match permutation_to_monomial(&sigma, k) {
                Ok(back) if back == *m => {}
                _ => {
                    return CheckResult::fail(
                        name,
                        params,
                        format!("monomial round trip fails for {m}"),
                    )
                }
            }
            if !image.insert(sigma) {
                return CheckResult::fail(name, params, format!("not injective at {m}"));
            }
        }
        let expected: BTreeSet<Word> = match iter_sn(n) {
            Ok(stream) => stream.filter(|s| rightmost_hook_at_least(s, min_len)).collect(),
            Err(e) => return CheckResult::fail(name, params, e.to_string()),
        };
        if image != expected {
            return CheckResult::fail(name, params, format!("image mismatch at k={k}"));
        }
    }
    CheckResult::pass(name, params)
}

/// Runs every exhaustive check for all `n ≤ n_max`. Refuses
/// `n_max > `[`SAFETY_CAP`] unless `force` is set.
pub fn verify_all(n_max: u32, force: bool) -> Result<Report> {
    if n_max == 0 {
        return Err(Error::range("n_max must be at least 1"));
    }
    if n_max > SAFETY_CAP && !force {
        return Err(Error::range(format!(
            "n_max = {n_max} exceeds the safety cap {SAFETY_CAP}; pass force to override"
        )));
    }
    let mut report = Report::default();
    for n in 1..=n_max {
        report.push(check_stream_cardinalities(n));
        report.push(check_des_lec_bijection(n, "theta-des-lec-bijection", &theta, &eta));
        report.push(check_des_lec_bijection(n, "psi-des-lec-bijection", &psi, &phi));
        report.push(check_splitting_identities(n));
        report.push(check_mu_bijection(n));
        report.push(check_four_sets(n));
        report.push(check_restriction_properties(n));
        report.push(check_betti_agreement(n));
        report.push(check_basis_correspondence(n));
    }
    Ok(report)
}
