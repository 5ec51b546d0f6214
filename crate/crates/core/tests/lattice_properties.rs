use num_bigint::BigInt;
use rectcount_core::lattice::SubsetConstraint;
use rectcount_core::{count_binary_bivariate, count_subsets_brute, count_subsets_formula, theorem_input_table};

fn check_all_ranges(n: usize, contain: u64, avoid: u64) {
    for lo in 0..=n {
        for hi in lo..=n {
            let c = SubsetConstraint::new(n, contain, avoid, lo, hi).unwrap();
            assert_eq!(count_subsets_formula(&c), BigInt::from(count_subsets_brute(&c).unwrap()), "{c:?}");
        }
    }
}

/// Every contain/avoid split with at most four constrained elements and every
/// size range, for ground sets up to 8 elements.
#[test]
fn formula_matches_brute_force_all_splits() {
    for n in 0..=8usize {
        for contain in 0..1u64 << n {
            for avoid in 0..1u64 << n {
                if contain & avoid == 0 && (contain | avoid).count_ones() <= 4 {
                    check_all_ranges(n, contain, avoid);
                }
            }
        }
    }
}

/// Every split with at most four constrained elements for ground sets up to
/// 12 elements. Each split is enumerated once into a histogram of admitted
/// subset sizes, which then answers every size range.
#[test]
fn formula_matches_enumeration_up_to_twelve() {
    for n in 9..=12usize {
        let universe = 1u64 << n;
        for contain in (0..universe).filter(|c| c.count_ones() <= 4) {
            let rest = (universe - 1) & !contain;
            let mut avoid = rest;
            loop {
                if (contain | avoid).count_ones() <= 4 {
                    let mut sizes = vec![0u64; n + 1];
                    for s in (0..universe).filter(|s| s & contain == contain && s & avoid == 0) {
                        sizes[s.count_ones() as usize] += 1;
                    }
                    for lo in 0..=n {
                        for hi in lo..=n {
                            let c = SubsetConstraint::new(n, contain, avoid, lo, hi).unwrap();
                            let expected: u64 = sizes[lo..=hi].iter().sum();
                            assert_eq!(count_subsets_formula(&c), BigInt::from(expected), "{c:?}");
                        }
                    }
                }
                if avoid == 0 {
                    break;
                }
                avoid = (avoid - 1) & rest;
            }
        }
    }
}

#[test]
fn pipeline_closure() {
    for n in 0..=10 {
        for k in 0..=n {
            for l in 0..=k {
                for m1 in 0..=n {
                    for m2 in m1..=n {
                        let table = theorem_input_table(n, k, l, m1, m2).unwrap();
                        let via_theorem = count_binary_bivariate(&table, l, k).unwrap();
                        let c = SubsetConstraint::split(n, k, l, m1, m2).unwrap();
                        assert_eq!(via_theorem, count_subsets_formula(&c), "n={n} k={k} l={l} m1={m1} m2={m2}");
                    }
                }
            }
        }
    }
}
