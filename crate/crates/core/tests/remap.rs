//! D_n with k = n-1 is evaluated on the k = n step matrix after swapping
//! a_{n-1} and a_n; the oracle works on the requested node directly.

use isoacm::acm::is_acm;
use isoacm::bbw::{acm_by_oracle, scan_twists};
use isoacm::enumerate::{enumerate_acm, initialized_weights};
use isoacm::lie::{FlagSpace, LieType, WeightFW};

#[test]
fn remapped_spaces_agree_with_oracle() {
    for n in 4..=7 {
        let s = FlagSpace::new(LieType::D, n, n - 1).unwrap();
        assert!(s.is_remapped());
        assert_eq!(s.dim_flag(), n * (n - 1) / 2);
        for lambda in initialized_weights(&s, 3) {
            let v = is_acm(&s, &lambda).unwrap();
            assert_eq!(
                v.is_acm,
                acm_by_oracle(&s, &lambda).unwrap(),
                "D_{n} {lambda}"
            );
            let singular = scan_twists(&s, &lambda).unwrap().singular_twists;
            let mut entries = v.step_matrix.integer_entries();
            entries.dedup();
            assert_eq!(entries, singular, "D_{n} {lambda}");
        }
    }
}

#[test]
fn outer_automorphism_swaps_acm_lists() {
    for n in 4..=6 {
        let swap = |w: &WeightFW| {
            let mut c = w.coeffs().to_vec();
            c.swap(n - 2, n - 1);
            WeightFW::new(c)
        };
        let a = enumerate_acm(&FlagSpace::new(LieType::D, n, n - 1).unwrap()).unwrap();
        let b = enumerate_acm(&FlagSpace::new(LieType::D, n, n).unwrap()).unwrap();
        let mut mapped: Vec<WeightFW> = a.acm_weights.iter().map(swap).collect();
        mapped.sort();
        assert_eq!(mapped, b.acm_weights, "D_{n}");
    }
}
