mod common;

use std::collections::{BTreeMap, BTreeSet};

use knight_cycles::board::{BoardSpec, DihedralElem};
use knight_cycles::cycle::{
    are_equivalent, canonical_cell_set, canonicalize, is_minimal, validate_cycle, CanonicalKey,
    CycleSeq,
};
use knight_cycles::enumeration::{canonical_listing, Algorithm, EnumerationOptions};
use knight_cycles::geometry::{is_simple, Segment};
use knight_cycles::twins::group_geometric_twins;
use knight_cycles::verify::verify_tables;

use common::{
    all_directed_cycles, brute_force_classes, burnside_class_count, for_each_translation_class,
    placed, rational_is_simple,
};

fn listing(k: usize, algorithm: Algorithm) -> Vec<CanonicalKey> {
    canonical_listing(k, algorithm, &EnumerationOptions::default())
        .unwrap()
        .1
}

#[test]
fn class_counts_match_burnside() {
    for (k, expected) in [(4, 3), (6, 25), (8, 480), (10, 12_000)] {
        assert_eq!(burnside_class_count(k), expected, "k={k}");
        for alg in Algorithm::ALL {
            let total = listing(k, alg).len() as u64;
            assert_eq!(total, expected, "k={k} {alg}");
        }
    }
}

#[test]
fn pruned_search_finds_every_class() {
    for k in [4, 6] {
        let brute = brute_force_classes(k);
        for alg in Algorithm::ALL {
            let found: BTreeSet<CanonicalKey> = listing(k, alg).into_iter().collect();
            assert_eq!(found, brute, "k={k} {alg}");
        }
    }
}

#[test]
fn listings_are_strictly_ascending_and_minimal() {
    for k in [4, 6, 8] {
        for alg in Algorithm::ALL {
            let keys = listing(k, alg);
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "k={k} {alg}");
            for key in &keys {
                let c = key.to_cycle();
                assert!(is_minimal(&c));
                assert_eq!(&canonicalize(&c), key);
            }
        }
    }
}

#[test]
fn emitted_cycles_fit_the_length_board() {
    for k in [4, 6, 8, 10] {
        let keys = listing(k, Algorithm::Mitm);
        for key in &keys {
            assert_eq!(key.board(), BoardSpec::for_length(k));
            for p in key.to_cycle().coords() {
                assert!((0..=k as i32).contains(&p.row) && (0..=k as i32).contains(&p.col));
            }
        }
    }
}

#[test]
fn fast_minimality_agrees_with_exhaustive_search() {
    let board = BoardSpec::for_length(6);
    let mut minimal = 0;
    for cells in all_directed_cycles(6, board) {
        let c = validate_cycle(&cells, board).unwrap();
        let expected = canonicalize(&c).cells() == c.cells();
        assert_eq!(is_minimal(&c), expected, "{cells:?}");
        minimal += usize::from(expected);
    }
    assert_eq!(minimal, 25);
}

#[test]
fn equivalence_is_a_partition() {
    // One placed representative per translation class; the classes under
    // the full symmetry group must then partition this list.
    let mut reps: Vec<CycleSeq> = Vec::new();
    for_each_translation_class(6, |p| reps.push(placed(p, 6)));
    let mut classes: BTreeMap<CanonicalKey, Vec<usize>> = BTreeMap::new();
    for (i, c) in reps.iter().enumerate() {
        classes.entry(canonicalize(c)).or_default().push(i);
    }
    assert_eq!(classes.len(), 25);
    for (i, a) in reps.iter().enumerate() {
        assert!(are_equivalent(a, a));
        for (j, b) in reps.iter().enumerate() {
            let same = canonicalize(a) == canonicalize(b);
            assert_eq!(are_equivalent(a, b), same, "{i} {j}");
            assert_eq!(are_equivalent(b, a), same);
        }
    }
}

#[test]
fn simplicity_is_a_class_property() {
    for key in listing(6, Algorithm::Dfs) {
        let c = key.to_cycle();
        let simple = is_simple(&c);
        for e in DihedralElem::ALL {
            for offset in 0..c.len() {
                for reversed in [false, true] {
                    let image = c.transformed(e).rotated(offset, reversed);
                    assert_eq!(is_simple(&image), simple);
                }
            }
        }
    }
}

#[test]
fn simplicity_matches_rational_oracle_at_k10() {
    let keys = listing(10, Algorithm::Mitm);
    let simple = keys
        .iter()
        .filter(|key| {
            let c = key.to_cycle();
            let fast = is_simple(&c);
            assert_eq!(fast, rational_is_simple(&c.coords()), "{key}");
            fast
        })
        .count();
    assert_eq!(simple, 3_034);
}

#[test]
fn knight_segments_pass_through_no_lattice_point() {
    for key in listing(8, Algorithm::Dfs) {
        let pts = key.to_cycle().coords();
        for i in 0..pts.len() {
            let s = Segment::new(pts[i], pts[(i + 1) % pts.len()]);
            assert!(!s.has_interior_lattice_point());
        }
    }
}

#[test]
fn no_twins_below_length_eight() {
    for k in [4, 6] {
        let keys = listing(k, Algorithm::Dfs);
        let sets: BTreeSet<_> = keys
            .iter()
            .map(|k| canonical_cell_set(&k.to_cycle()))
            .collect();
        assert_eq!(sets.len(), keys.len());
        assert!(group_geometric_twins(keys).unwrap().is_empty());
    }
}

#[test]
fn twin_partition_accounts_for_all_length_eight_cycles() {
    let keys = listing(8, Algorithm::Mitm);
    let groups = group_geometric_twins(keys.clone()).unwrap();
    assert!(!groups.is_empty());
    let mut by_set: BTreeMap<_, usize> = BTreeMap::new();
    for key in &keys {
        *by_set
            .entry(canonical_cell_set(&key.to_cycle()))
            .or_default() += 1;
    }
    let singletons = by_set.values().filter(|&&n| n == 1).count();
    let grouped: usize = groups.iter().map(|g| g.members.len()).sum();
    assert_eq!(singletons + grouped, 480);
    for g in &groups {
        for m in &g.members {
            assert_eq!(canonical_cell_set(&m.to_cycle()), g.key);
        }
        for (i, a) in g.members.iter().enumerate() {
            for b in &g.members[i + 1..] {
                assert!(!are_equivalent(&a.to_cycle(), &b.to_cycle()));
            }
        }
    }
}

#[test]
fn algorithms_agree_per_start() {
    let opts = EnumerationOptions::default().with_simple();
    for k in [4, 6, 8, 10] {
        let (a, keys_a) = canonical_listing(k, Algorithm::Dfs, &opts).unwrap();
        let (b, keys_b) = canonical_listing(k, Algorithm::Mitm, &opts).unwrap();
        assert!(a.same_counts(&b), "k={k}");
        assert_eq!(keys_a, keys_b, "k={k}");
    }
}

#[test]
fn verification_through_ten_passes() {
    let report = verify_tables(10, &Algorithm::ALL, 2).unwrap();
    assert_eq!(report.rows.len(), 8);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn results_do_not_depend_on_job_count() {
    let base = EnumerationOptions::default().with_simple();
    for alg in Algorithm::ALL {
        let (reference, keys) = canonical_listing(10, alg, &base).unwrap();
        for jobs in [2, 3, 8] {
            let (s, k) = canonical_listing(10, alg, &base.clone().with_jobs(jobs)).unwrap();
            assert!(s.same_counts(&reference), "{alg} jobs={jobs}");
            assert_eq!(k, keys);
        }
    }
}
