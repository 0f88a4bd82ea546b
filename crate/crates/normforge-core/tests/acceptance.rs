//! Acceptance gate: ten timed end-to-end checks, one test per criterion.
//!
//! Every test rebuilds its objects from the public API, asserts the claimed
//! behavior exactly, and enforces a wall-clock budget. On success it prints
//! a single `[pass]` line naming the criterion and the elapsed time.

use normforge_core::coinduced::{
    compose, element_supports_transfers, has_strict_columns, is_fixed_by, is_sigma_disjoint,
    psi_gamma, CoinducedElement,
};
use normforge_core::graphs::{graph_act, in_I_tau, IndexGraph, TwistMap};
use normforge_core::group::{preset, SubgroupLattice};
use normforge_core::monoid::{
    disjoint_family, Dyadic, IntersectionMonoid, RationalCubes, RationalEmbedding,
};
use normforge_core::perm::Permutation;
use normforge_core::realize::{
    enumerate_graph_subgroups, pi_is_operad_morphism_check, realized_transfer_system,
    reproduce_appendix_b, reproduce_warning,
};
use normforge_core::report::Certificate;
use normforge_core::suites::{closure_suite, graph_law_suite, laxness_suite, table_law_suite};
use normforge_core::transfer::{
    enumerate_transfer_systems, hset_in_indexing, indexing_to_transfer, transfer_to_indexing,
    TransferSystem,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

/// The groups every whole-lattice criterion runs over.
const TEST_GROUPS: [&str; 5] = ["C2", "C3", "C4", "C2xC2", "C2xC3"];

fn lattice_for(name: &str) -> Arc<SubgroupLattice> {
    SubgroupLattice::new(preset(name).expect("preset name resolves"))
}

/// The index of the unique order-two subgroup of the order-four cyclic group.
fn order_two_index(lattice: &SubgroupLattice) -> usize {
    (0..lattice.count())
        .find(|&k| lattice.subgroup(k).order() == 2)
        .expect("an order-two subgroup exists")
}

fn finish(criterion: &str, budget_secs: u64, start: Instant) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(budget_secs),
        "{criterion} took {elapsed:?}, budget {budget_secs}s"
    );
    println!("[pass] {criterion} in {elapsed:.2?}");
}

fn embedding(an: i64, ad: i64, bn: i64, bd: i64) -> RationalEmbedding {
    RationalEmbedding::from_ints(an, ad, bn, bd).expect("valid embedding")
}

/// Criterion 1: the pinned pair of rational tables over the order-four
/// cyclic group composes to the printed twelve-entry table, both factors
/// support only transfers of `{C2 -> C4}`, the composite supports
/// `e -> C2` through the recorded twist map and therefore fails the same
/// support check.
#[test]
fn criterion_01_pinned_composite_tables() {
    let start = Instant::now();
    let group = preset("C4").unwrap();
    let lattice = SubgroupLattice::new(Arc::clone(&group));
    let e = lattice.trivial_index();
    let c2 = order_two_index(&lattice);
    let c4 = lattice.full_index();

    // rows in element order e, s, s^2, s^3; entries are (scale, offset)
    let x_entries = vec![
        embedding(1, 4, 0, 1),
        embedding(1, 4, 3, 4),
        embedding(1, 4, 3, 4),
        embedding(1, 4, 0, 1),
        embedding(1, 4, 1, 8),
        embedding(1, 4, 5, 8),
        embedding(1, 4, 5, 8),
        embedding(1, 4, 1, 8),
    ];
    let y_entries = vec![
        embedding(1, 2, 0, 1),
        embedding(1, 2, 1, 2),
        embedding(1, 2, 1, 2),
        embedding(1, 2, 0, 1),
        embedding(1, 2, 0, 1),
        embedding(1, 2, 1, 2),
        embedding(1, 2, 1, 2),
        embedding(1, 2, 0, 1),
    ];
    let z_entries = vec![
        embedding(1, 8, 0, 1),
        embedding(1, 8, 1, 8),
        embedding(1, 4, 3, 4),
        embedding(1, 8, 7, 8),
        embedding(1, 8, 3, 4),
        embedding(1, 4, 0, 1),
        embedding(1, 8, 1, 8),
        embedding(1, 8, 1, 4),
        embedding(1, 4, 5, 8),
        embedding(1, 8, 3, 4),
        embedding(1, 8, 5, 8),
        embedding(1, 4, 1, 8),
    ];
    let x = CoinducedElement::new(Arc::clone(&group), RationalCubes, 2, x_entries).unwrap();
    let y = CoinducedElement::new(Arc::clone(&group), RationalCubes, 2, y_entries).unwrap();
    let z = compose(&x, 1, &y).unwrap();
    let expected = CoinducedElement::new(Arc::clone(&group), RationalCubes, 3, z_entries).unwrap();
    for g in 0..group.order() {
        for i in 1..=3 {
            assert_eq!(
                z.get(g, i),
                expected.get(g, i),
                "composite entry ({}, {i})",
                group.elem_name(g)
            );
        }
    }

    let tau = TransferSystem::new(lattice.clone(), [(c2, c4)].into_iter().collect()).unwrap();
    let admitted = |support: &BTreeSet<(usize, usize)>| {
        support.iter().all(|&(k, h)| tau.admits(k, h))
    };
    let x_support = element_supports_transfers(&x, &lattice).unwrap();
    let y_support = element_supports_transfers(&y, &lattice).unwrap();
    let z_support = element_supports_transfers(&z, &lattice).unwrap();
    assert!(admitted(&x_support), "x must pass the support check");
    assert!(admitted(&y_support), "y must pass the support check");
    assert!(z_support.contains(&(e, c2)), "z must support e -> C2");
    assert!(!admitted(&z_support), "z must fail the support check");

    // the supporting twist map: identity at position 2, the square at 1
    let alpha = TwistMap::new(Arc::clone(&group), 3, &[(0, 2), (2, 1)]).unwrap();
    let structures = alpha.structures(&lattice).unwrap();
    assert!(structures.contains(&(e, c2, 1)));
    assert!(structures.contains(&(e, c2, 2)));
    assert!(z.monoid().intersects(z.get(0, 2), z.get(2, 1)));

    let cert = reproduce_appendix_b().unwrap();
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 1: pinned composite tables", 1, start);
}

/// Criterion 2: the four-edge graph over the order-four cyclic group lies
/// in the suboperad of `{e -> C2}`, is fixed by the generator paired with
/// the column swap, and loses that fixedness when any single edge is
/// removed.
#[test]
fn criterion_02_fixed_graph_with_fragile_edges() {
    let start = Instant::now();
    let group = preset("C4").unwrap();
    let lattice = SubgroupLattice::new(Arc::clone(&group));
    let e = lattice.trivial_index();
    let c2 = order_two_index(&lattice);
    let tau = TransferSystem::new(lattice.clone(), [(e, c2)].into_iter().collect()).unwrap();

    let mut gr = IndexGraph::empty(Arc::clone(&group), 2);
    gr.add_edge((0, 1), (2, 2)).unwrap();
    gr.add_edge((2, 1), (0, 2)).unwrap();
    gr.add_edge((1, 1), (3, 2)).unwrap();
    gr.add_edge((3, 1), (1, 2)).unwrap();
    assert!(in_I_tau(&gr, &tau).unwrap(), "graph lies in the suboperad");

    let swap = Permutation::transposition(2, 1, 2).unwrap();
    assert_eq!(graph_act(1, &swap, &gr).unwrap(), gr, "fixed by (s, swap)");

    let edges: Vec<_> = gr.edges().copied().collect();
    assert_eq!(edges.len(), 4);
    for (v1, v2) in edges {
        let mutated = gr.without_edge(v1, v2);
        assert_ne!(
            graph_act(1, &swap, &mutated).unwrap(),
            mutated,
            "removing {v1:?}-{v2:?} must break the fixedness"
        );
    }

    let cert = reproduce_warning().unwrap();
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 2: fragile fixed graph", 1, start);
}

/// Criterion 3: on all five test groups, every enumerated transfer system
/// is realized exactly by its dyadic suboperad at scan bound three, with
/// no unknown verdicts anywhere.
#[test]
fn criterion_03_realization_round_trip() {
    let start = Instant::now();
    let expected = [("C2", Some(2)), ("C3", Some(2)), ("C4", Some(5)), ("C2xC2", None), ("C2xC3", None)];
    for (name, count) in expected {
        let lattice = lattice_for(name);
        let systems = enumerate_transfer_systems(&lattice);
        if let Some(count) = count {
            assert_eq!(systems.len(), count, "{name} system count");
        }
        for t in &systems {
            let outcome = realized_transfer_system(t, &Dyadic, 3).unwrap();
            assert_eq!(outcome.unknown, 0, "{name} {} had unknowns", t.describe());
            assert!(
                outcome.matches_input(),
                "{name}: input {} realized as {}",
                t.describe(),
                outcome.realized.describe()
            );
        }
    }
    finish("criterion 3: realization round trip", 300, start);
}

/// Criterion 4: a thousand randomized instances of the unit,
/// associativity, and equivariance laws, for both the table operad and the
/// graph operad, over the order-four cyclic group and the rank-two
/// elementary abelian group, with zero violations.
#[test]
fn criterion_04_operad_law_suites() {
    let start = Instant::now();
    let mut cert = Certificate::new("operad law acceptance");
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for name in ["C4", "C2xC2"] {
        let group = preset(name).unwrap();
        table_law_suite(&Dyadic, &group, 1000, &mut rng, &mut cert).unwrap();
        graph_law_suite(&group, 1000, &mut rng, &mut cert).unwrap();
    }
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 4: operad law suites", 120, start);
}

/// Criterion 5: five hundred random strict-column pairs project laxly,
/// the graph of a composite always sits inside the composite of the
/// graphs, and the suite pins one strictly smaller case.
#[test]
fn criterion_05_projection_is_lax() {
    let start = Instant::now();
    let mut cert = Certificate::new("laxness acceptance");
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    laxness_suite(&preset("C4").unwrap(), 500, &mut rng, &mut cert).unwrap();
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 5: lax projection", 60, start);
}

/// Criterion 6: at least five hundred random composites of suboperad
/// members stay members, and at least five hundred random edge deletions
/// from graph-suboperad members stay members.
#[test]
fn criterion_06_suboperads_are_closed() {
    let start = Instant::now();
    let mut cert = Certificate::new("closure acceptance");
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    closure_suite(&lattice_for("C4"), 500, 500, &mut rng, &mut cert).unwrap();
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 6: suboperad closure", 60, start);
}

/// Criterion 7: converting a transfer system to its indexing system and
/// reading it back is the identity on every enumerated system of the five
/// test groups.
#[test]
fn criterion_07_indexing_round_trip() {
    let start = Instant::now();
    for name in TEST_GROUPS {
        let lattice = lattice_for(name);
        for t in enumerate_transfer_systems(&lattice) {
            let back = indexing_to_transfer(&transfer_to_indexing(&t)).unwrap();
            assert_eq!(back.pairs(), t.pairs(), "{name} {}", t.describe());
        }
    }
    finish("criterion 7: indexing round trip", 10, start);
}

/// Exhaustive subset filter over the strict comparable pairs of a lattice,
/// with conjugation, restriction, and composition closure checked directly
/// on raw element sets. Deliberately independent of the library's
/// transfer-system machinery so the two counts corroborate each other.
fn oracle_count(lattice: &SubgroupLattice) -> usize {
    let subs = lattice.subgroups();
    let group = Arc::clone(lattice.group());
    let index_of = |elements: BTreeSet<usize>| -> usize {
        let sorted: Vec<usize> = elements.into_iter().collect();
        lattice
            .index_of_elements(&sorted)
            .expect("result is again a subgroup")
    };
    let contained =
        |a: usize, b: usize| subs[a].elements().iter().all(|&g| subs[b].contains(g));
    let intersect = |a: usize, b: usize| -> usize {
        index_of(
            subs[a]
                .elements()
                .iter()
                .copied()
                .filter(|&g| subs[b].contains(g))
                .collect(),
        )
    };
    let conjugate = |a: usize, g: usize| -> usize {
        index_of(
            subs[a]
                .elements()
                .iter()
                .map(|&h| group.mul(group.mul(g, h), group.inv(g)))
                .collect(),
        )
    };

    let pairs: Vec<(usize, usize)> = (0..subs.len())
        .flat_map(|k| (0..subs.len()).map(move |h| (k, h)))
        .filter(|&(k, h)| k != h && contained(k, h))
        .collect();
    assert!(pairs.len() < 32, "subset filter needs a small lattice");

    let mut count = 0usize;
    'subsets: for mask in 0u32..(1u32 << pairs.len()) {
        let chosen: BTreeSet<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(bit, _)| (mask >> bit) & 1 == 1)
            .map(|(_, &pair)| pair)
            .collect();
        let has = |k: usize, h: usize| k == h || chosen.contains(&(k, h));
        for &(k, h) in &chosen {
            for g in 0..group.order() {
                if !has(conjugate(k, g), conjugate(h, g)) {
                    continue 'subsets;
                }
            }
            for m in 0..subs.len() {
                if contained(m, h) && !has(intersect(k, m), m) {
                    continue 'subsets;
                }
            }
            for &(mid, l) in &chosen {
                if mid == h && !has(k, l) {
                    continue 'subsets;
                }
            }
        }
        count += 1;
    }
    count
}

/// Criterion 8: the enumeration counts on four groups match both the
/// frozen values and an independent exhaustive subset filter.
#[test]
fn criterion_08_counts_match_the_oracle() {
    let start = Instant::now();
    for (name, expected) in [("C2", 2), ("C4", 5), ("C8", 14), ("C2xC3", 10)] {
        let lattice = lattice_for(name);
        assert_eq!(
            enumerate_transfer_systems(&lattice).len(),
            expected,
            "{name} enumeration count"
        );
        assert_eq!(oracle_count(&lattice), expected, "{name} oracle count");
    }
    finish("criterion 8: enumeration counts", 30, start);
}

/// Criterion 9: the rank-order map from one-row dyadic tables to
/// permutations respects composition and the symmetric action on five
/// hundred random composable pairs.
#[test]
fn criterion_09_order_map_is_a_morphism() {
    let start = Instant::now();
    let cert = pi_is_operad_morphism_check(500, 11).unwrap();
    assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    finish("criterion 9: order map morphism", 30, start);
}

/// Criterion 10: one hundred sampled admissible graph subgroups across the
/// test groups produce orbit-constant tables that are fixed by the
/// subgroup, row-disjoint, strict-columned, and support only transfers the
/// system admits.
#[test]
fn criterion_10_admissible_orbit_tables() {
    let start = Instant::now();
    let mut pool = Vec::new();
    for name in TEST_GROUPS {
        let lattice = lattice_for(name);
        let systems = enumerate_transfer_systems(&lattice);
        for arity in 1..=3 {
            for gamma in enumerate_graph_subgroups(&lattice, arity).unwrap() {
                let hset = gamma.hset(&lattice).unwrap();
                for t in &systems {
                    if hset_in_indexing(&transfer_to_indexing(t), &hset) {
                        pool.push((Arc::clone(&lattice), t.clone(), gamma.clone()));
                    }
                }
            }
        }
    }
    assert!(pool.len() >= 100, "only {} admissible pairs", pool.len());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let (lattice, tau, gamma) = &pool[rng.gen_range(0..pool.len())];
        let labels = disjoint_family(&Dyadic, gamma.orbits().len()).unwrap();
        let table = psi_gamma(&Dyadic, gamma, &labels).unwrap();
        assert!(is_fixed_by(&table, gamma).unwrap(), "table fixed by the subgroup");
        assert!(is_sigma_disjoint(&table), "rows pairwise disjoint");
        assert!(has_strict_columns(&table), "columns strict");
        let support = element_supports_transfers(&table, lattice).unwrap();
        assert!(
            support.iter().all(|&(k, h)| tau.admits(k, h)),
            "{} table over {} supports a rejected transfer",
            lattice.group().name(),
            tau.describe()
        );
    }
    finish("criterion 10: admissible orbit tables", 60, start);
}
