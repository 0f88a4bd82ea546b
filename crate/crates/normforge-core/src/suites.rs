//! Seeded randomized suites for the algebraic laws.
//!
//! Each suite draws its instances from a caller-supplied ChaCha stream,
//! appends aggregate pass/fail assertions to a [`Certificate`], and reports
//! sample counts in the assertion details, so a report is reproducible from
//! its recorded seed alone.

use crate::coinduced::{
    act, compose, in_R_tau, p_graph, psi_gamma, CoinducedElement, GraphSubgroup,
};
use crate::graphs::{graph_act, graph_compose, in_I_tau, IndexGraph};
use crate::group::{preset, FiniteGroup, SubgroupLattice};
use crate::monoid::{disjoint_family, Dyadic, DyadicWord, IntersectionMonoid};
use crate::perm::Permutation;
use crate::report::Certificate;
use crate::transfer::{enumerate_transfer_systems, TransferSystem};
use crate::Result;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// A uniformly random permutation by Fisher-Yates on the one-line image.
pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(rng);
    Permutation::from_image(image).expect("shuffled identity is a permutation")
}

/// Atoms for random tables: a disjoint triple when the monoid has one, the
/// unit alone otherwise.
fn law_atoms<M: IntersectionMonoid>(monoid: &M) -> Vec<M::Elem> {
    disjoint_family(monoid, 3).unwrap_or_else(|_| vec![monoid.unit()])
}

fn random_monoid_element<M: IntersectionMonoid>(
    monoid: &M,
    atoms: &[M::Elem],
    rng: &mut ChaCha8Rng,
) -> M::Elem {
    let mut out = monoid.unit();
    for _ in 0..rng.gen_range(0..=3) {
        out = monoid.mul(&out, &atoms[rng.gen_range(0..atoms.len())]);
    }
    out
}

fn random_table<M: IntersectionMonoid>(
    monoid: &M,
    group: &Arc<FiniteGroup>,
    arity: usize,
    atoms: &[M::Elem],
    rng: &mut ChaCha8Rng,
) -> CoinducedElement<M> {
    CoinducedElement::from_fn(Arc::clone(group), monoid.clone(), arity, |_, _| {
        random_monoid_element(monoid, atoms, rng)
    })
}

/// Unit, associativity, and equivariance of the coinduced operad on random
/// tables with at most four inputs. Both association shapes are exercised:
/// substitution into the inserted block and into two independent slots.
pub fn table_law_suite<M: IntersectionMonoid>(
    monoid: &M,
    group: &Arc<FiniteGroup>,
    samples: usize,
    rng: &mut ChaCha8Rng,
    cert: &mut Certificate,
) -> Result<()> {
    let atoms = law_atoms(monoid);
    let unit = CoinducedElement::unit(Arc::clone(group), monoid.clone());
    let mut unit_fail = 0usize;
    let mut assoc_fail = 0usize;
    let mut equiv_fail = 0usize;
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let l = rng.gen_range(0..=4);
        let x = random_table(monoid, group, n, &atoms, rng);
        let y = random_table(monoid, group, m, &atoms, rng);
        let z = random_table(monoid, group, l, &atoms, rng);
        let i = rng.gen_range(1..=n);

        if compose(&x, i, &unit)? != x || compose(&unit, 1, &x)? != x {
            unit_fail += 1;
        }

        let j = rng.gen_range(i..i + m);
        let nested_left = compose(&compose(&x, i, &y)?, j, &z)?;
        let nested_right = compose(&x, i, &compose(&y, j - i + 1, &z)?)?;
        if nested_left != nested_right {
            assoc_fail += 1;
        }
        if n >= 2 {
            let mut a = rng.gen_range(1..=n - 1);
            let mut b = rng.gen_range(1..=n - 1);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            b += 1;
            let flat_left = compose(&compose(&x, a, &y)?, b + m - 1, &z)?;
            let flat_right = compose(&compose(&x, b, &z)?, a, &y)?;
            if flat_left != flat_right {
                assoc_fail += 1;
            }
        }

        let g1 = rng.gen_range(0..group.order());
        let g2 = rng.gen_range(0..group.order());
        let s1 = random_permutation(n, rng);
        let s2 = random_permutation(n, rng);
        if act(group.identity(), &Permutation::identity(n), &x)? != x {
            equiv_fail += 1;
        }
        let stepwise = act(g1, &s1, &act(g2, &s2, &x)?)?;
        let at_once = act(group.mul(g1, g2), &s1.compose(&s2), &x)?;
        if stepwise != at_once {
            equiv_fail += 1;
        }
        let sigma = random_permutation(n, rng);
        let tau = random_permutation(m, rng);
        let g = rng.gen_range(0..group.order());
        let lhs = compose(&act(g, &sigma, &x)?, sigma.apply(i), &act(g, &tau, &y)?)?;
        let rhs = act(g, &sigma.partial_compose(i, &tau)?, &compose(&x, i, &y)?)?;
        if lhs != rhs {
            equiv_fail += 1;
        }
    }
    cert.check_with(
        "table unit laws",
        unit_fail == 0,
        format!("{unit_fail} failures in {samples} samples"),
    );
    cert.check_with(
        "table associativity",
        assoc_fail == 0,
        format!("{assoc_fail} failures in {samples} samples"),
    );
    cert.check_with(
        "table equivariance",
        equiv_fail == 0,
        format!("{equiv_fail} failures in {samples} samples"),
    );
    Ok(())
}

fn random_graph(
    group: &Arc<FiniteGroup>,
    arity: usize,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> IndexGraph {
    let mut gr = IndexGraph::empty(Arc::clone(group), arity);
    let vertices = gr.vertices();
    for (a, &v1) in vertices.iter().enumerate() {
        for &v2 in &vertices[a + 1..] {
            if v1.0 != v2.0 && rng.gen_bool(density) {
                gr.add_edge(v1, v2).expect("cross-row edge in range");
            }
        }
    }
    gr
}

/// The same three law families for the graph operad, on random graphs with
/// at most four inputs.
pub fn graph_law_suite(
    group: &Arc<FiniteGroup>,
    samples: usize,
    rng: &mut ChaCha8Rng,
    cert: &mut Certificate,
) -> Result<()> {
    let unit = IndexGraph::unit(Arc::clone(group));
    let mut unit_fail = 0usize;
    let mut assoc_fail = 0usize;
    let mut equiv_fail = 0usize;
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=4);
        let l = rng.gen_range(0..=4);
        let x = random_graph(group, n, 0.4, rng);
        let y = random_graph(group, m, 0.4, rng);
        let z = random_graph(group, l, 0.4, rng);
        let i = rng.gen_range(1..=n);

        if graph_compose(&x, i, &unit)? != x || graph_compose(&unit, 1, &x)? != x {
            unit_fail += 1;
        }

        let j = rng.gen_range(i..i + m);
        let nested_left = graph_compose(&graph_compose(&x, i, &y)?, j, &z)?;
        let nested_right = graph_compose(&x, i, &graph_compose(&y, j - i + 1, &z)?)?;
        if nested_left != nested_right {
            assoc_fail += 1;
        }
        if n >= 2 {
            let mut a = rng.gen_range(1..=n - 1);
            let mut b = rng.gen_range(1..=n - 1);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            b += 1;
            let flat_left = graph_compose(&graph_compose(&x, a, &y)?, b + m - 1, &z)?;
            let flat_right = graph_compose(&graph_compose(&x, b, &z)?, a, &y)?;
            if flat_left != flat_right {
                assoc_fail += 1;
            }
        }

        let g1 = rng.gen_range(0..group.order());
        let g2 = rng.gen_range(0..group.order());
        let s1 = random_permutation(n, rng);
        let s2 = random_permutation(n, rng);
        if graph_act(group.identity(), &Permutation::identity(n), &x)? != x {
            equiv_fail += 1;
        }
        let stepwise = graph_act(g1, &s1, &graph_act(g2, &s2, &x)?)?;
        let at_once = graph_act(group.mul(g1, g2), &s1.compose(&s2), &x)?;
        if stepwise != at_once {
            equiv_fail += 1;
        }
        let sigma = random_permutation(n, rng);
        let tau = random_permutation(m, rng);
        let g = rng.gen_range(0..group.order());
        let lhs = graph_compose(
            &graph_act(g, &sigma, &x)?,
            sigma.apply(i),
            &graph_act(g, &tau, &y)?,
        )?;
        let rhs = graph_act(g, &sigma.partial_compose(i, &tau)?, &graph_compose(&x, i, &y)?)?;
        if lhs != rhs {
            equiv_fail += 1;
        }
    }
    cert.check_with(
        "graph unit laws",
        unit_fail == 0,
        format!("{unit_fail} failures in {samples} samples"),
    );
    cert.check_with(
        "graph associativity",
        assoc_fail == 0,
        format!("{assoc_fail} failures in {samples} samples"),
    );
    cert.check_with(
        "graph equivariance",
        equiv_fail == 0,
        format!("{equiv_fail} failures in {samples} samples"),
    );
    Ok(())
}

/// A random row-disjoint strict-column table: constant columns labelled by
/// a disjoint family, twisted by a random group element and permutation.
fn random_strict_table(
    group: &Arc<FiniteGroup>,
    arity: usize,
    rng: &mut ChaCha8Rng,
) -> Result<CoinducedElement<Dyadic>> {
    let labels = disjoint_family(&Dyadic, arity)?;
    let base = CoinducedElement::from_fn(Arc::clone(group), Dyadic, arity, |_, i| {
        labels[i - 1].clone()
    });
    act(
        rng.gen_range(0..group.order()),
        &random_permutation(arity, rng),
        &base,
    )
}

/// Projection to graphs is lax monoidal: the graph of a composite sits
/// inside the composite of the graphs, sometimes strictly. Includes a
/// pinned strict case over the order-two group.
pub fn laxness_suite(
    group: &Arc<FiniteGroup>,
    samples: usize,
    rng: &mut ChaCha8Rng,
    cert: &mut Certificate,
) -> Result<()> {
    let mut fails = 0usize;
    for _ in 0..samples {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let x = random_strict_table(group, n, rng)?;
        let y = random_strict_table(group, m, rng)?;
        let i = rng.gen_range(1..=n);
        let composite = compose(&x, i, &y)?;
        let left = p_graph(&composite)?;
        let right = graph_compose(&p_graph(&x)?, i, &p_graph(&y)?)?;
        if !left.is_subgraph_of(&right) {
            fails += 1;
        }
    }
    cert.check_with(
        "projection laxness",
        fails == 0,
        format!("{fails} failures in {samples} samples"),
    );

    let two = preset("C2")?;
    let w = |s: &str| DyadicWord::new(s).expect("letters a and b");
    let x = CoinducedElement::new(
        Arc::clone(&two),
        Dyadic,
        2,
        vec![w("a"), w("b"), w("b"), w("ab")],
    )?;
    let y = CoinducedElement::new(Arc::clone(&two), Dyadic, 1, vec![w("a"), w("a")])?;
    let left = p_graph(&compose(&x, 1, &y)?)?;
    let right = graph_compose(&p_graph(&x)?, 1, &p_graph(&y)?)?;
    cert.check(
        "strict inclusion witness",
        left.is_subgraph_of(&right) && left.edge_count() < right.edge_count(),
    );
    Ok(())
}

/// A random member of the realization suboperad of `tau`: an orbit-constant
/// table for the coset action of a pair of `tau`, twisted by the group and
/// symmetric actions, or the twisted unit column when `tau` is empty.
fn random_member(tau: &TransferSystem, rng: &mut ChaCha8Rng) -> Result<CoinducedElement<Dyadic>> {
    let lattice = tau.lattice();
    let group = lattice.group();
    let mut pairs: Vec<(usize, usize)> = tau.pairs().iter().copied().collect();
    pairs.push((lattice.full_index(), lattice.full_index()));
    let (k, h) = pairs[rng.gen_range(0..pairs.len())];
    let gamma = GraphSubgroup::coset_action(lattice.subgroup(h), lattice.subgroup(k))?;
    let labels = disjoint_family(&Dyadic, gamma.orbits().len())?;
    let base = psi_gamma(&Dyadic, &gamma, &labels)?;
    act(
        rng.gen_range(0..group.order()),
        &random_permutation(base.arity(), rng),
        &base,
    )
}

/// Closure of the realization suboperads: composites of members stay in,
/// and graphs of members survive edge deletion inside the lower suboperad.
/// Keeps drawing members across every transfer system on the lattice until
/// both minimum sample counts are reached.
pub fn closure_suite(
    lattice: &Arc<SubgroupLattice>,
    min_composites: usize,
    min_deletions: usize,
    rng: &mut ChaCha8Rng,
    cert: &mut Certificate,
) -> Result<()> {
    let systems = enumerate_transfer_systems(lattice);
    let mut compose_fails = 0usize;
    let mut deletion_fails = 0usize;
    let mut composites = 0usize;
    let mut deletions = 0usize;
    let cap = 50 * (min_composites + min_deletions) + 1000;
    let mut rounds = 0usize;
    'sampling: loop {
        for tau in &systems {
            if composites >= min_composites && deletions >= min_deletions {
                break 'sampling;
            }
            rounds += 1;
            if rounds > cap {
                break 'sampling;
            }
            let x = random_member(tau, rng)?;
            let y = random_member(tau, rng)?;
            let i = rng.gen_range(1..=x.arity());
            let z = compose(&x, i, &y)?;
            composites += 1;
            if !in_R_tau(&z, tau)? {
                compose_fails += 1;
            }

            let graph = p_graph(&x)?;
            if !in_I_tau(&graph, tau)? {
                deletion_fails += 1;
            }
            let edges: Vec<_> = graph.edges().copied().collect();
            if let Some(&(v1, v2)) = edges.as_slice().choose(rng) {
                deletions += 1;
                if !in_I_tau(&graph.without_edge(v1, v2), tau)? {
                    deletion_fails += 1;
                }
            }
        }
    }
    cert.check_with(
        "composition closure",
        compose_fails == 0 && composites >= min_composites,
        format!("{compose_fails} failures in {composites} composites"),
    );
    cert.check_with(
        "edge-deletion closure",
        deletion_fails == 0 && deletions >= min_deletions,
        format!("{deletion_fails} failures in {deletions} deletions"),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupLattice;
    use crate::monoid::{RationalCubes, Trivial};
    use rand::SeedableRng;

    #[test]
    fn suites_pass_on_small_samples() {
        let group = preset("C4").unwrap();
        let lattice = SubgroupLattice::new(Arc::clone(&group));
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut cert = Certificate::new("suite smoke test");
        table_law_suite(&Dyadic, &group, 10, &mut rng, &mut cert).unwrap();
        table_law_suite(&RationalCubes, &group, 5, &mut rng, &mut cert).unwrap();
        table_law_suite(&Trivial, &group, 5, &mut rng, &mut cert).unwrap();
        graph_law_suite(&group, 10, &mut rng, &mut cert).unwrap();
        laxness_suite(&group, 10, &mut rng, &mut cert).unwrap();
        closure_suite(&lattice, 10, 10, &mut rng, &mut cert).unwrap();
        assert!(cert.passed(), "failed: {:?}", cert.failed_names());
    }

    #[test]
    fn closure_reaches_requested_minimums() {
        let lattice = SubgroupLattice::new(preset("C2").unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut cert = Certificate::new("closure minimums");
        closure_suite(&lattice, 25, 25, &mut rng, &mut cert).unwrap();
        let json = cert.to_json();
        let assertions = json["assertions"].as_array().unwrap();
        for a in assertions {
            let detail = a["detail"].as_str().unwrap();
            let count: usize = detail
                .split(" in ")
                .nth(1)
                .unwrap()
                .split_whitespace()
                .next()
                .unwrap()
                .parse()
                .unwrap();
            assert!(count >= 25, "only {count} samples in {detail:?}");
        }
        assert!(cert.passed());
    }
}
