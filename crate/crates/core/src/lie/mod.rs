//! Root systems and weights of B_n, C_n and D_n in the orthonormal
//! e-basis, with exact half-integer coordinates.

mod half_int;
mod roots;
mod space;
mod weights;

pub use half_int::HalfInt;
pub use roots::{pairing, Root};
pub use space::{FlagSpace, Group, LieType};
pub use weights::{EpsilonWeight, WeightFW};

/// Every supported group with rank at most `max_rank`, in type order.
pub fn groups_up_to(max_rank: usize) -> Vec<Group> {
    LieType::ALL
        .iter()
        .flat_map(|&t| (t.min_rank()..=max_rank).map(move |n| Group::new(t, n).expect("valid")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_counts() {
        for g in groups_up_to(8) {
            let n = g.rank();
            let expected = match g.lie_type() {
                LieType::B | LieType::C => n * n,
                LieType::D => n * n - n,
            };
            assert_eq!(g.positive_roots().len(), expected, "{g}");
        }
    }

    #[test]
    fn rho_is_sum_of_fundamental_weights() {
        for g in groups_up_to(8) {
            let ones = WeightFW::new(vec![1; g.rank()]);
            assert_eq!(g.to_epsilon(&ones).unwrap(), g.rho(), "{g}");
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for g in groups_up_to(8) {
            let n = g.rank();
            let mut twice = vec![HalfInt::ZERO; n];
            for r in g.positive_roots() {
                for (acc, c) in twice.iter_mut().zip(r.coords(n)) {
                    *acc += c;
                }
            }
            let rho: Vec<HalfInt> = twice.into_iter().map(|x| x.halve().unwrap()).collect();
            assert_eq!(EpsilonWeight::new(rho), g.rho(), "{g}");
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_simple_coroots() {
        // 2(λ_i, α_j)/(α_j, α_j) = δ_ij with the simple roots
        // e_1-e_2, ..., e_{n-1}-e_n and e_n (B), 2e_n (C), e_{n-1}+e_n (D).
        for g in groups_up_to(8) {
            let n = g.rank();
            let mut simple: Vec<Root> = (0..n - 1).map(|i| Root::Diff(i, i + 1)).collect();
            simple.push(match g.lie_type() {
                LieType::B => Root::Short(n - 1),
                LieType::C => Root::Long(n - 1),
                LieType::D => Root::Sum(n - 2, n - 1),
            });
            for i in 1..=n {
                let w = g.fundamental_weight(i).unwrap();
                for (j, alpha) in simple.iter().enumerate() {
                    let norm: i64 = alpha
                        .coords(n)
                        .iter()
                        .map(|c| c.checked_mul_quadrupled(*c).unwrap())
                        .sum();
                    let num = 2 * pairing(&w, alpha).unwrap().doubled() * 2;
                    let expected = if i == j + 1 { norm } else { 0 };
                    assert_eq!(num, expected, "{g} λ_{i} vs α_{}", j + 1);
                }
            }
        }
    }

    #[test]
    fn round_trip_unit_vectors_all_ranks() {
        for g in groups_up_to(8) {
            for i in 1..=g.rank() {
                for scale in [-10, -1, 1, 10] {
                    let mut w = vec![0; g.rank()];
                    w[i - 1] = scale;
                    let w = WeightFW::new(w);
                    assert_eq!(g.from_epsilon(&g.to_epsilon(&w).unwrap()).unwrap(), w);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_random(
            t in 0usize..3,
            coeffs in proptest::collection::vec(-10i64..=10, 8),
            n in 2usize..=8,
        ) {
            let lie_type = LieType::ALL[t];
            prop_assume!(n >= lie_type.min_rank());
            let g = Group::new(lie_type, n).unwrap();
            let w = WeightFW::new(coeffs[..n].to_vec());
            prop_assert_eq!(g.from_epsilon(&g.to_epsilon(&w).unwrap()).unwrap(), w);
        }

        #[test]
        fn pairing_is_bilinear(
            x in proptest::collection::vec(-20i64..20, 5),
            y in proptest::collection::vec(-20i64..20, 5),
            s in -5i64..5,
        ) {
            let mu = EpsilonWeight::new(x.iter().map(|&d| HalfInt::from_doubled(d)).collect());
            let nu = EpsilonWeight::new(y.iter().map(|&d| HalfInt::from_doubled(d)).collect());
            let sum = mu.checked_add(&nu.checked_scale(s).unwrap()).unwrap();
            for g in [LieType::B, LieType::C, LieType::D] {
                for r in Group::new(g, 5).unwrap().positive_roots() {
                    let lhs = pairing(&sum, &r).unwrap();
                    let rhs = pairing(&mu, &r).unwrap() + pairing(&nu, &r).unwrap() * s;
                    prop_assert_eq!(lhs, rhs);
                    // symmetric: the root as a weight, paired through the dense dot
                    let dense: HalfInt = r.coords(5).iter().zip(mu.coords())
                        .map(|(a, b)| *b * a.to_integer().unwrap()).sum();
                    prop_assert_eq!(dense, pairing(&mu, &r).unwrap());
                }
            }
        }
    }
}
