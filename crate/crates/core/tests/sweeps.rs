use rectcount_core::verify::{verify_counting_random, verify_identity};
use rectcount_core::{IdentityId, ParamGrid, Perturbation};

fn choose2(x: u64) -> u64 {
    x * (x - 1) / 2
}

#[test]
fn tuple_counts_match_closed_forms() {
    let grid = |id, ranges: &[(i64, i64)]| ParamGrid::for_identity(id, ranges).unwrap();
    // l ≤ k ≤ n and m1 ≤ m2 ≤ n: C(n+2, 2)^2 tuples per n.
    let eq7 = grid(IdentityId::Eq7, &[(0, 16); 5]);
    assert_eq!(eq7.count(), (0..=16).map(|n| choose2(n + 2).pow(2)).sum::<u64>());
    let eq9 = grid(IdentityId::Eq9, &[(0, 30); 4]);
    assert_eq!(eq9.count(), (0..=30).map(|n| choose2(n + 2) * 31).sum::<u64>());
    assert_eq!(grid(IdentityId::Klee, &[(0, 40), (0, 80)]).count(), 41 * 81);
    assert_eq!(grid(IdentityId::Eq11, &[(0, 40), (0, 12), (0, 40)]).count(), 861 * 13);
    assert_eq!(grid(IdentityId::Eq8, &[(0, 60); 3]).count(), choose2(62) * 61);

    let out = verify_identity(IdentityId::Klee, &grid(IdentityId::Klee, &[(0, 40), (0, 40)]), None).unwrap();
    assert!(out.passed());
    assert_eq!(out.tuples_checked, 1681);
}

#[test]
fn seeded_sweeps_replay_exactly() {
    let a = verify_counting_random(12, 64, 4, 200, 99).unwrap();
    let b = verify_counting_random(12, 64, 4, 200, 99).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.seed, Some(99));
    let eq9 = ParamGrid::for_identity(IdentityId::Eq9, &[(0, 8); 4]).unwrap();
    let p = Some(Perturbation { term: 1, delta: -1 });
    assert_eq!(verify_identity(IdentityId::Eq9, &eq9, p).unwrap(), verify_identity(IdentityId::Eq9, &eq9, p).unwrap());
}

/// A ±1 change to any single right-hand term is always visible.
#[test]
fn every_term_position_is_checked() {
    for id in IdentityId::ALL {
        let ranges: Vec<(i64, i64)> = id.params().iter().map(|_| (0, 6)).collect();
        let grid = ParamGrid::for_identity(id, &ranges).unwrap();
        for values in grid.iter() {
            let identity = id.instantiate(&values).unwrap();
            let terms = rectcount_core::eval_identity(&identity).unwrap().rhs_terms;
            for term in 0..terms {
                for delta in [-1, 1] {
                    let e = rectcount_core::Evaluator::default().with_perturbation(Some(Perturbation { term, delta }));
                    assert!(!e.eval(&identity).unwrap().holds(), "{identity:?} term {term}");
                }
            }
        }
    }
}
