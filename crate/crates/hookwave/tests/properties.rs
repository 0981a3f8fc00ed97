//! Randomized invariants over arbitrary words with distinct entries.

use proptest::prelude::*;

use hookwave::bijections::{eta, phi, psi, theta};
use hookwave::waves::{ins, rins, srdes, srw_split, sw_split};
use hookwave::words::{
    des, hook_factorization, hook_shape, inv, lec, reverse_wave_shape, wave_shape, Word,
};

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(1u32..200, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable();
        v.dedup();
        let mut rng_less = v;
        // deterministic shuffle driven by the values themselves
        let n = rng_less.len();
        for i in (1..n).rev() {
            let j = (rng_less[i] as usize * 31 + i * 17) % (i + 1);
            rng_less.swap(i, j);
        }
        Word::new(rng_less).unwrap()
    })
}

// an independent lec oracle: peel the rightmost hook and recurse
fn lec_peeling(w: &Word) -> usize {
    let e = w.entries();
    let Some(t) = (1..e.len()).rev().find(|&i| e[i - 1] > e[i]) else {
        return 0;
    };
    let hook = Word::new(e[t - 1..].to_vec()).unwrap();
    let prefix = Word::new(e[..t - 1].to_vec()).unwrap();
    inv(&hook) + lec_peeling(&prefix)
}

proptest! {
    #[test]
    fn factorization_round_trips(w in arb_word(12)) {
        let hf = hook_factorization(&w);
        prop_assert_eq!(hf.concat(), w.clone());
        prop_assert!(hf.gamma.is_increasing());
        for h in &hf.hooks {
            prop_assert!(hook_shape(h).holds() && h.len() >= 2);
        }
        prop_assert_eq!(lec(&w), hf.hooks.iter().map(inv).sum::<usize>());
        prop_assert_eq!(lec(&w), lec_peeling(&w));
    }

    #[test]
    fn splits_partition_descents(w in arb_word(12)) {
        if !w.is_empty() {
            let split = srw_split(&w).unwrap();
            prop_assert!(reverse_wave_shape(&split.srw).holds());
            prop_assert_eq!(des(&w), srdes(&w).unwrap() + des(&split.rest));
            prop_assert_eq!(split.srw.len() + split.rest.len(), w.len());

            let split = sw_split(&w).unwrap();
            prop_assert!(wave_shape(&split.sw).holds());
            prop_assert_eq!(des(&w), des(&split.sw) + des(&split.rest));
            prop_assert_eq!(split.sw.len() + split.rest.len(), w.len());
        }
    }

    #[test]
    fn insertion_round_trips(w in arb_word(12)) {
        if !w.is_increasing() {
            let split = srw_split(&w).unwrap();
            let d = srdes(&w).unwrap();
            prop_assert_eq!(rins(&split.rest, &split.srw, d).unwrap(), w.clone());

            let split = sw_split(&w).unwrap();
            prop_assert_eq!(ins(&split.rest, &split.sw).unwrap(), w.clone());
        }
    }

    #[test]
    fn theta_and_psi_transport_des_to_lec(w in arb_word(10)) {
        let image = theta(&w);
        prop_assert!(image.is_rearrangement_of(&w));
        prop_assert_eq!(lec(&image), des(&w));
        prop_assert_eq!(eta(&image), w.clone());

        let image = psi(&w);
        prop_assert!(image.is_rearrangement_of(&w));
        prop_assert_eq!(lec(&image), des(&w));
        prop_assert_eq!(phi(&image), w.clone());
    }

    #[test]
    fn eta_and_phi_transport_lec_to_des(w in arb_word(10)) {
        let pre = eta(&w);
        prop_assert_eq!(des(&pre), lec(&w));
        prop_assert_eq!(theta(&pre), w.clone());

        let pre = phi(&w);
        prop_assert_eq!(des(&pre), lec(&w));
        prop_assert_eq!(psi(&pre), w.clone());
    }

    #[test]
    fn display_parse_round_trip(w in arb_word(12)) {
        // a lone multi-digit entry is deliberately read in compact digit
        // form first, so only longer words round-trip verbatim
        if w.len() >= 2 {
            let parsed: Word = w.to_string().parse().unwrap();
            prop_assert_eq!(parsed, w);
        }
    }
}
