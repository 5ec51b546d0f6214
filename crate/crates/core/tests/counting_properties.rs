use proptest::prelude::*;
use rectcount_core::lattice::incidence_rows;
use rectcount_core::{
    build_incidence, count_direct, count_inclusion_exclusion, mismatch_count, mismatch_count_scan, mismatch_profile,
    ColumnPattern, RectMatrix, RowSubset, Symbol,
};

fn matrix_and_pattern(max_rows: usize, max_cols: usize, max_alphabet: u32) -> impl Strategy<Value = (RectMatrix, ColumnPattern)> {
    (1..=max_rows, 0..=max_cols, 2..=max_alphabet).prop_flat_map(|(m, n, a)| {
        (
            proptest::collection::vec(0..a, m * n),
            proptest::collection::vec(0..a, m),
            proptest::option::of(0..n.max(1)),
        )
            .prop_map(move |(cells, c, copy)| {
                let matrix = RectMatrix::new(m, n, cells.into_iter().map(Symbol).collect()).unwrap();
                // Sometimes aim the pattern at an existing column.
                let pattern = match copy {
                    Some(j) if j < n => ColumnPattern::new(matrix.column(j).collect()),
                    _ => ColumnPattern::new(c.into_iter().map(Symbol).collect()),
                };
                (matrix, pattern)
            })
    })
}

#[test]
fn exhaustive_binary_equivalence() {
    // m = 4, n = 4 is covered by the random properties below.
    for m in 1..=3 {
        for n in 0..=3 {
            for cells in 0u32..1 << (m * n) {
                let a = RectMatrix::from_fn(m, n, |r, c| Symbol::from_bit(cells >> (r * n + c) & 1 == 1));
                let mut mass = 0;
                for bits in 0..1u64 << m {
                    let c = ColumnPattern::from_bits(bits, m);
                    let direct = count_direct(&a, &c).unwrap();
                    assert_eq!(count_inclusion_exclusion(&a, &c).unwrap(), direct, "m={m} n={n} cells={cells:b} c={bits:b}");
                    mass += direct;
                }
                assert_eq!(mass, n);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn theorem_matches_scan((a, c) in matrix_and_pattern(12, 64, 4)) {
        prop_assert_eq!(count_inclusion_exclusion(&a, &c).unwrap(), count_direct(&a, &c).unwrap());
    }
}

proptest! {
    #[test]
    fn binary_four_by_four((a, c) in matrix_and_pattern(4, 4, 2)) {
        prop_assert_eq!(count_inclusion_exclusion(&a, &c).unwrap(), count_direct(&a, &c).unwrap());
    }

    #[test]
    fn mismatch_counts_are_antitone((a, c) in matrix_and_pattern(8, 40, 3), i in any::<u64>(), extra in any::<u64>()) {
        let full = RowSubset::full(a.rows()).bits();
        let small = RowSubset::new(i & full, a.rows()).unwrap();
        let large = RowSubset::new((i | extra) & full, a.rows()).unwrap();
        prop_assert!(small.is_subset_of(large));
        prop_assert!(mismatch_count(&a, &c, large).unwrap() <= mismatch_count(&a, &c, small).unwrap());
        prop_assert_eq!(mismatch_count(&a, &c, RowSubset::EMPTY).unwrap(), a.cols());
    }

    #[test]
    fn packed_and_scanned_agree((a, c) in matrix_and_pattern(10, 150, 2), i in any::<u64>()) {
        prop_assert!(a.is_binary());
        let subset = RowSubset::new(i & RowSubset::full(a.rows()).bits(), a.rows()).unwrap();
        let unpacked = a.without_packing();
        let expected = mismatch_count_scan(&a, &c, subset).unwrap();
        prop_assert_eq!(mismatch_count(&a, &c, subset).unwrap(), expected);
        prop_assert_eq!(mismatch_count(&unpacked, &c, subset).unwrap(), expected);
        prop_assert_eq!(count_inclusion_exclusion(&unpacked, &c).unwrap(), count_inclusion_exclusion(&a, &c).unwrap());
    }

    #[test]
    fn profile_matches_pointwise((a, c) in matrix_and_pattern(6, 20, 3)) {
        let profile = mismatch_profile(&a, &c).unwrap();
        for subset in RowSubset::full(a.rows()).subsets() {
            prop_assert_eq!(profile[subset.bits() as usize], mismatch_count_scan(&a, &c, subset).unwrap());
        }
    }

    #[test]
    fn total_mass_is_column_count((a, _) in matrix_and_pattern(6, 30, 2)) {
        let m = a.rows();
        let (mut direct, mut theorem) = (0, 0);
        for bits in 0..1u64 << m {
            let c = ColumnPattern::from_bits(bits, m);
            direct += count_direct(&a, &c).unwrap();
            theorem += count_inclusion_exclusion(&a, &c).unwrap();
        }
        prop_assert_eq!(direct, a.cols());
        prop_assert_eq!(theorem, a.cols());
    }

    /// Every count on the incidence matrix is unchanged by relabeling subsets.
    #[test]
    fn incidence_counts_ignore_labeling(
        n in 0usize..=6,
        order in Just(()).prop_perturb(|_, mut rng| rng.next_u64()),
        rows in any::<u64>(),
        bits in any::<u64>(),
    ) {
        let incidence = build_incidence(n).unwrap();
        let cols = 1usize << n;
        // Fisher-Yates from the drawn seed.
        let mut perm: Vec<usize> = (0..cols).collect();
        let mut state = order | 1;
        for i in (1..cols).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let shuffled = incidence.matrix().permute_columns(&perm);
        let rows = rows & RowSubset::full(n).bits();
        let k = rows.count_ones() as usize;
        let picked: Vec<usize> = (0..n).filter(|&i| rows >> i & 1 == 1).collect();
        let original = incidence_rows(&incidence, rows);
        let relabeled = shuffled.select_rows(&picked);
        let c = ColumnPattern::from_bits(bits & RowSubset::full(k).bits(), k);
        prop_assert_eq!(count_direct(&relabeled, &c).unwrap(), count_direct(&original, &c).unwrap());
        prop_assert_eq!(count_direct(&original, &c).unwrap(), 1 << (n - k));
        prop_assert_eq!(mismatch_profile(&relabeled, &c).unwrap(), mismatch_profile(&original, &c).unwrap());
    }
}

#[test]
fn every_binary_column_appears_once() {
    for n in 0..=8 {
        let incidence = build_incidence(n).unwrap();
        let a = incidence.matrix();
        let mut seen = vec![false; 1 << n];
        for j in 0..a.cols() {
            let label = a.column(j).enumerate().fold(0usize, |acc, (i, s)| acc | ((s == Symbol::ONE) as usize) << i);
            assert_eq!(label, j);
            assert!(!std::mem::replace(&mut seen[label], true));
        }
        assert!(seen.into_iter().all(|s| s));
    }
}
