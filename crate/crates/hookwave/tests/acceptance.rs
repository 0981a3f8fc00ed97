//! Acceptance suite: every equinumerosity and bijection claim is checked
//! exhaustively at desk scale, with one pass/fail line per criterion.

use std::collections::BTreeMap;

use itertools::Itertools;

use hookwave::bijections::{
    eta, mu, nu, phi, psi, semiperm_des, theta, Semipermutation,
};
use hookwave::cohomology::{monomial_to_permutation, ChainMonomial};
use hookwave::enumeration::{
    check_basis_correspondence, check_betti_agreement, check_des_lec_bijection,
    check_mu_bijection, count_four_sets, iter_sn,
};
use hookwave::waves::{rins, srdes, srw_split, sw_split};
use hookwave::words::{
    des, hook_factorization, hook_shape, inv, lec, make_hook, make_reverse_wave, make_wave,
    reverse_wave_shape, wave_shape, Word,
};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn report(criterion: &str, passed: bool) {
    println!("{} criterion {criterion}", if passed { "PASS" } else { "FAIL" });
    assert!(passed, "criterion {criterion} failed");
}

#[test]
fn criterion_1_worked_examples() {
    assert_eq!(des(&w("45762318")), 3);

    let tau = w("18326457");
    let hf = hook_factorization(&tau);
    assert_eq!(hf.gamma, w("18"));
    assert_eq!(hf.hooks, vec![w("32"), w("6457")]);
    assert_eq!(lec(&tau), 3);

    let split = srw_split(&w("45762318")).unwrap();
    assert_eq!(split.srw, w("4576"));
    assert_eq!(split.rest, w("2318"));
    assert_eq!(srdes(&w("45762318")).unwrap(), 2);
    let split = sw_split(&w("13675428")).unwrap();
    assert_eq!(split.sw, w("6754"));
    assert_eq!(split.rest, w("1328"));

    assert_eq!(theta(&w("45762318")), w("18326457"));
    assert_eq!(eta(&w("18326457")), w("45762318"));
    assert_eq!(psi(&w("13675428")), w("18326457"));
    assert_eq!(phi(&w("18326457")), w("13675428"));

    let sp: Semipermutation = "4,5,7|6 2 3 1 8".parse().unwrap();
    assert_eq!(mu(&sp), w("45762318"));
    assert_eq!(nu(&w("45762318"), 4).unwrap(), sp);
    let sp: Semipermutation = "4,6,7|5 2 3 1 8".parse().unwrap();
    assert_eq!(semiperm_des(&sp), 4);

    let m = ChainMonomial::parse("1,2,4,5:2;1,2,4,5,6,7,8:2;1,2,4,5,6,7,8,9,11:1", 11, 7).unwrap();
    let sigma = monomial_to_permutation(&m).unwrap();
    assert_eq!(sigma, w("3 10 11 9 8 6 7 4 1 2 5"));
    assert_eq!(lec(&sigma), 5);

    report("1: worked examples", true);
}

#[test]
fn criterion_2_theta_exhaustive() {
    for n in 1..=8 {
        let check = check_des_lec_bijection(n, "theta", &theta, &eta);
        assert!(check.passed, "n={n}: {:?}", check.counterexample);
    }
    report("2: theta/eta bijection, des = lec, n ≤ 8", true);
}

#[test]
fn criterion_3_psi_exhaustive() {
    for n in 1..=8 {
        let check = check_des_lec_bijection(n, "psi", &psi, &phi);
        assert!(check.passed, "n={n}: {:?}", check.counterexample);
    }
    report("3: psi/phi bijection, des = lec, n ≤ 8", true);
}

#[test]
fn criterion_4_mu_exhaustive() {
    for n in 1..=7 {
        let check = check_mu_bijection(n);
        assert!(check.passed, "n={n}: {:?}", check.counterexample);
    }
    report("4: mu bijection onto long-srw permutations, n ≤ 7", true);
}

#[test]
fn criterion_5_four_set_equality() {
    for n in 1..=7u32 {
        // independent Eulerian oracle: descents counted directly over S_n
        let mut eulerian = vec![0u64; n as usize];
        for sigma in iter_sn(n).unwrap() {
            eulerian[des(&sigma)] += 1;
        }
        for k in 0..n as usize {
            for i in 1..n as usize {
                let counts = count_four_sets(n, k, i).unwrap();
                assert!(counts.all_equal(), "n={n}, k={k}, i={i}: {counts:?}");
                if k == n as usize - 2 {
                    assert_eq!(counts.semipermutations, eulerian[i], "n={n}, i={i}");
                }
            }
        }
    }
    let counts = count_four_sets(4, 2, 2).unwrap();
    assert_eq!(counts.semipermutations, 11);
    report("5: four-set equality, n ≤ 7, all k, i ≥ 1", true);
}

#[test]
fn criterion_6_basis_correspondence() {
    for n in 1..=6 {
        let check = check_basis_correspondence(n);
        assert!(check.passed, "n={n}: {:?}", check.counterexample);
    }
    for n in 1..=7 {
        let check = check_betti_agreement(n);
        assert!(check.passed, "n={n}: {:?}", check.counterexample);
    }
    report("6: monomial basis bijection (n ≤ 6) and betti backends (n ≤ 7)", true);
}

#[test]
fn criterion_7_constructor_uniqueness() {
    let value_pools: [&[u32]; 2] = [&[1, 2, 3, 4, 5, 6, 7], &[2, 3, 5, 8, 13, 21, 34]];
    for pool in value_pools {
        for len in 1..=7usize {
            let values = &pool[..len];
            let mut hook_hits = vec![0u32; len];
            let mut wave_hits = vec![0u32; len];
            let mut rwave_hits = vec![0u32; len];
            for perm in values.iter().copied().permutations(len) {
                let word = Word::new(perm).unwrap();
                if hook_shape(&word).holds() {
                    hook_hits[inv(&word)] += 1;
                }
                if wave_shape(&word).holds() {
                    wave_hits[des(&word)] += 1;
                }
                if reverse_wave_shape(&word).holds() {
                    rwave_hits[des(&word)] += 1;
                }
            }
            for d in 0..len {
                assert_eq!(hook_hits[d], 1, "hooks on {values:?} with inv {d}");
                assert_eq!(wave_hits[d], 1, "waves on {values:?} with des {d}");
                assert_eq!(rwave_hits[d], 1, "reverse waves on {values:?} with des {d}");
                // the unique witness is the constructor's output
                let hook = make_hook(values, d).unwrap();
                assert!(hook_shape(&hook).holds() && inv(&hook) == d);
                let wave = make_wave(values, d).unwrap();
                assert!(wave_shape(&wave).holds() && des(&wave) == d);
                let rwave = make_reverse_wave(values, d).unwrap();
                assert!(reverse_wave_shape(&rwave).holds() && des(&rwave) == d);
            }
        }
    }

    // rins uniqueness: over all words on [m], each (srw values, rest, srdes)
    // profile occurs exactly once and is reproduced by rins.
    for m in 2..=7usize {
        let mut profile_counts: BTreeMap<(Vec<u32>, Word, usize), (u32, Word)> = BTreeMap::new();
        for perm in (1..=m as u32).permutations(m) {
            let word = Word::new(perm).unwrap();
            if word.is_increasing() {
                continue;
            }
            let split = srw_split(&word).unwrap();
            let d = srdes(&word).unwrap();
            let key = (split.srw.value_set(), split.rest, d);
            profile_counts.entry(key).and_modify(|e| e.0 += 1).or_insert((1, word));
        }
        // every admissible (b, a, d) must be covered by exactly one word
        for q in 2..=m {
            for b_values in (1..=m as u32).combinations(q) {
                let rest_values: Vec<u32> =
                    (1..=m as u32).filter(|v| !b_values.contains(v)).collect();
                let rest_words: Vec<Vec<u32>> = if rest_values.is_empty() {
                    vec![vec![]]
                } else {
                    rest_values.iter().copied().permutations(rest_values.len()).collect()
                };
                for rest in rest_words {
                    let a = Word::new(rest).unwrap();
                    for d in 1..q {
                        let key = (b_values.clone(), a.clone(), d);
                        let (count, witness) =
                            profile_counts.get(&key).expect("profile must be realized");
                        assert_eq!(*count, 1, "profile {key:?} not unique");
                        let b = Word::new(b_values.clone()).unwrap();
                        assert_eq!(&rins(&a, &b, d).unwrap(), witness);
                    }
                }
            }
        }
    }
    report("7: constructor and rins uniqueness oracles, sizes ≤ 7", true);
}

#[test]
fn criterion_8_mutation_sensitivity() {
    // theta with the cut descent dropped from the statistic
    let theta_missing_cut = |word: &Word| -> Word {
        let mut blocks = Vec::new();
        let mut cur = word.clone();
        while !cur.is_empty() {
            let split = srw_split(&cur).unwrap();
            let d = des(&split.srw); // wrong: ignores χ(w_s > w_{s+1})
            blocks.push(make_hook(&split.srw.value_set(), d).unwrap());
            cur = split.rest;
        }
        let mut out = Word::empty();
        for b in blocks.iter().rev() {
            out = out.concat(b);
        }
        out
    };
    let check = check_des_lec_bijection(6, "theta-mutant", &theta_missing_cut, &eta);
    assert!(!check.passed && check.counterexample.is_some());

    // psi with the block order not reversed
    let psi_wrong_order = |word: &Word| -> Word {
        let mut out = Word::empty();
        let mut cur = word.clone();
        while !cur.is_empty() {
            let split = sw_split(&cur).unwrap();
            let d = des(&split.sw);
            out = out.concat(&make_hook(&split.sw.value_set(), d).unwrap());
            cur = split.rest;
        }
        out
    };
    let check = check_des_lec_bijection(6, "psi-mutant", &psi_wrong_order, &phi);
    assert!(!check.passed && check.counterexample.is_some());

    // eta built on a rins that never takes the d−1 branch
    let eta_bad_rins = |word: &Word| -> Word {
        let hf = hook_factorization(word);
        let mut out = hf.gamma.clone();
        for h in &hf.hooks {
            let beta = h.value_set();
            let prefix = make_reverse_wave(&beta, inv(h)).unwrap(); // wrong: branch condition dropped
            out = prefix.concat(&out);
        }
        out
    };
    let check = check_des_lec_bijection(6, "rins-mutant", &theta, &eta_bad_rins);
    assert!(!check.passed && check.counterexample.is_some());

    // phi built on an ins that always inserts at the front
    let phi_bad_ins = |word: &Word| -> Word {
        let hf = hook_factorization(word);
        let mut out = hf.gamma.clone();
        for h in &hf.hooks {
            let wave = make_wave(&h.value_set(), inv(h)).unwrap();
            out = wave.concat(&out); // wrong: x forced to 0
        }
        out
    };
    let check = check_des_lec_bijection(6, "ins-mutant", &psi, &phi_bad_ins);
    assert!(!check.passed && check.counterexample.is_some());

    report("8: mutation sensitivity with concrete counterexamples", true);
}
