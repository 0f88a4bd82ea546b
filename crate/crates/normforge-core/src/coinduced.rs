//! Tables `G x [n] -> M` with the coinduced operad structure, the
//! realization suboperads cut out by disjointness predicates, and the
//! fixed-point machinery that decides which graph subgroups admit fixed
//! elements.
//!
//! An element is a total table of monoid values. Composition multiplies a
//! block of columns through one slot, the `G x Sigma_n` action permutes rows
//! and columns, and two predicates carve out the realization suboperad:
//! rows must be pairwise disjoint and columns must be equal-or-disjoint.
//! Fixed points under a graph subgroup are exactly the orbit-constant
//! tables, which powers both the constructive witness (label each orbit from
//! a disjoint family) and the emptiness obstruction (an orbit forces an
//! unwanted transfer).

use crate::graphs::{graph_supports_transfers, IndexGraph, TwistMap};
use crate::group::{left_cosets, FiniteGroup, Subgroup, SubgroupLattice};
use crate::monoid::{disjoint_family, Dyadic, DyadicWord, IntersectionMonoid};
use crate::perm::Permutation;
use crate::transfer::{hset_in_indexing, transfer_to_indexing, HSet, TransferSystem};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Where position `k` of a composite of arities `n` and `m` at slot `i`
/// lands in the outer factor: below the block it passes through, inside the
/// block it collapses onto `i`, above it shifts down by `m - 1`. With
/// `m = 0` this deletes slot `i`.
pub fn collapse(n: usize, m: usize, i: usize, k: usize) -> Result<usize> {
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange(format!("slot {i} not in 1..={n}")));
    }
    if k < 1 || k + 1 > n + m {
        return Err(Error::IndexOutOfRange(format!(
            "position {k} not in 1..={}",
            n + m - 1
        )));
    }
    Ok(if k < i {
        k
    } else if k < i + m {
        i
    } else {
        k - m + 1
    })
}

/// Where position `k` inside the block `i ..= i + m - 1` lands in the inner
/// factor.
pub fn shift(i: usize, m: usize, k: usize) -> Result<usize> {
    if m == 0 || k < i || k >= i + m {
        return Err(Error::IndexOutOfRange(format!(
            "position {k} not in the block {i}..={}",
            i + m - 1
        )));
    }
    Ok(k - i + 1)
}

/// A total table `G x {1..n} -> M`, the arity-`n` piece of the operad
/// coinduced from the intersection monoid `M`. Arity 0 is the empty table.
#[derive(Debug, Clone)]
pub struct CoinducedElement<M: IntersectionMonoid> {
    group: Arc<FiniteGroup>,
    arity: usize,
    monoid: M,
    table: Vec<M::Elem>,
}

impl<M: IntersectionMonoid> PartialEq for CoinducedElement<M> {
    fn eq(&self, other: &Self) -> bool {
        self.group.name() == other.group.name()
            && self.arity == other.arity
            && self.table == other.table
    }
}
impl<M: IntersectionMonoid> Eq for CoinducedElement<M> {}

impl<M: IntersectionMonoid> CoinducedElement<M> {
    pub fn new(
        group: Arc<FiniteGroup>,
        monoid: M,
        arity: usize,
        table: Vec<M::Elem>,
    ) -> Result<Self> {
        if table.len() != group.order() * arity {
            return Err(Error::Mismatch(format!(
                "table has {} entries, expected {} x {arity}",
                table.len(),
                group.order()
            )));
        }
        Ok(CoinducedElement {
            group,
            arity,
            monoid,
            table,
        })
    }

    /// Builds the table cell by cell from `(element id, position)`.
    pub fn from_fn(
        group: Arc<FiniteGroup>,
        monoid: M,
        arity: usize,
        mut cell: impl FnMut(usize, usize) -> M::Elem,
    ) -> Self {
        let mut table = Vec::with_capacity(group.order() * arity);
        for g in 0..group.order() {
            for i in 1..=arity {
                table.push(cell(g, i));
            }
        }
        CoinducedElement {
            group,
            arity,
            monoid,
            table,
        }
    }

    /// The operad unit: the arity-1 table constant at the monoid unit.
    pub fn unit(group: Arc<FiniteGroup>, monoid: M) -> Self {
        let u = monoid.unit();
        CoinducedElement::from_fn(group, monoid, 1, |_, _| u.clone())
    }

    /// The unique arity-0 element.
    pub fn point(group: Arc<FiniteGroup>, monoid: M) -> Self {
        CoinducedElement {
            group,
            arity: 0,
            monoid,
            table: Vec::new(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn monoid(&self) -> &M {
        &self.monoid
    }

    pub fn get(&self, g: usize, i: usize) -> &M::Elem {
        assert!(g < self.group.order() && i >= 1 && i <= self.arity);
        &self.table[g * self.arity + (i - 1)]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut table = serde_json::Map::new();
        for g in 0..self.group.order() {
            for i in 1..=self.arity {
                table.insert(format!("({g},{i})"), self.monoid.elem_json(self.get(g, i)));
            }
        }
        serde_json::json!({
            "group": self.group.name(),
            "monoid": self.monoid.name(),
            "n": self.arity,
            "table": table,
        })
    }
}

fn ensure_same_group(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Result<()> {
    if Arc::ptr_eq(g1, g2) || (g1.name() == g2.name() && g1.order() == g2.order()) {
        Ok(())
    } else {
        Err(Error::Mismatch(format!(
            "elements live over different groups: {} vs {}",
            g1.name(),
            g2.name()
        )))
    }
}

/// Partial composition `x o_i y`: inside the block the entries multiply,
/// outside them the outer entry passes through; `m = 0` deletes column `i`.
pub fn compose<M: IntersectionMonoid>(
    x: &CoinducedElement<M>,
    i: usize,
    y: &CoinducedElement<M>,
) -> Result<CoinducedElement<M>> {
    ensure_same_group(&x.group, &y.group)?;
    let (n, m) = (x.arity, y.arity);
    if n == 0 || i < 1 || i > n {
        return Err(Error::IndexOutOfRange(format!(
            "slot {i} not in 1..={n} for composition"
        )));
    }
    let mut table = Vec::with_capacity(x.group.order() * (n + m - 1));
    for g in 0..x.group.order() {
        for k in 1..=(n + m - 1) {
            let c = collapse(n, m, i, k)?;
            let in_block = k >= i && k < i + m;
            if in_block {
                let s = shift(i, m, k)?;
                table.push(x.monoid.mul(x.get(g, c), y.get(g, s)));
            } else {
                table.push(x.get(g, c).clone());
            }
        }
    }
    CoinducedElement::new(x.group.clone(), x.monoid.clone(), n + m - 1, table)
}

/// The `(g, sigma)` action: the new table reads `x(g^{ -1} h, sigma^{ -1} i)`.
pub fn act<M: IntersectionMonoid>(
    g: usize,
    sigma: &Permutation,
    x: &CoinducedElement<M>,
) -> Result<CoinducedElement<M>> {
    if g >= x.group.order() {
        return Err(Error::IndexOutOfRange(format!(
            "element {g} outside group of order {}",
            x.group.order()
        )));
    }
    if sigma.degree() != x.arity {
        return Err(Error::Mismatch(format!(
            "permutation degree {} does not match arity {}",
            sigma.degree(),
            x.arity
        )));
    }
    let g_inv = x.group.inv(g);
    let sigma_inv = sigma.inverse();
    Ok(CoinducedElement::from_fn(
        x.group.clone(),
        x.monoid.clone(),
        x.arity,
        |h, i| x.get(x.group.mul(g_inv, h), sigma_inv.apply(i)).clone(),
    ))
}

/// Whether every row has pairwise disjoint entries.
pub fn is_sigma_disjoint<M: IntersectionMonoid>(x: &CoinducedElement<M>) -> bool {
    (0..x.group.order()).all(|g| {
        (1..=x.arity).all(|i| {
            (i + 1..=x.arity).all(|j| x.monoid.disjoint(x.get(g, i), x.get(g, j)))
        })
    })
}

/// Whether every column has entries that are pairwise equal or disjoint.
pub fn has_strict_columns<M: IntersectionMonoid>(x: &CoinducedElement<M>) -> bool {
    (1..=x.arity).all(|i| {
        (0..x.group.order()).all(|g1| {
            (g1 + 1..x.group.order()).all(|g2| {
                let (a, b) = (x.get(g1, i), x.get(g2, i));
                a == b || x.monoid.disjoint(a, b)
            })
        })
    })
}

/// The cross-row intersection pattern of a table as an index graph. Same-row
/// pairs are never edges, so this lands in the graph operad regardless of
/// row disjointness.
fn intersection_graph<M: IntersectionMonoid>(x: &CoinducedElement<M>) -> IndexGraph {
    let mut gr = IndexGraph::empty(x.group.clone(), x.arity);
    for g1 in 0..x.group.order() {
        for g2 in (g1 + 1)..x.group.order() {
            for i1 in 1..=x.arity {
                for i2 in 1..=x.arity {
                    if x.monoid.intersects(x.get(g1, i1), x.get(g2, i2)) {
                        gr.add_edge((g1, i1), (g2, i2)).expect("rows differ");
                    }
                }
            }
        }
    }
    gr
}

/// The projection to the graph operad: an edge joins two cross-row cells
/// exactly when their values intersect. Requires row disjointness, which is
/// what makes the projection land in a graph with meaningful supports.
pub fn p_graph<M: IntersectionMonoid>(x: &CoinducedElement<M>) -> Result<IndexGraph> {
    if !is_sigma_disjoint(x) {
        return Err(Error::HypothesisFailed(
            "projection needs pairwise disjoint rows".into(),
        ));
    }
    Ok(intersection_graph(x))
}

/// All nonreflexive transfers `(K, H)` supported by the table: a twist map
/// structures the transfer and all its cell pairs intersect. Computed by
/// projecting to the intersection graph and reusing the graph support scan,
/// which sees exactly the same cliques.
pub fn element_supports_transfers<M: IntersectionMonoid>(
    x: &CoinducedElement<M>,
    lattice: &Arc<SubgroupLattice>,
) -> Result<BTreeSet<(usize, usize)>> {
    graph_supports_transfers(&intersection_graph(x), lattice)
}

/// Membership in the realization suboperad of `t`: disjoint rows, strict
/// columns, and every supported transfer allowed by `t`.
#[allow(non_snake_case)]
pub fn in_R_tau<M: IntersectionMonoid>(
    x: &CoinducedElement<M>,
    t: &TransferSystem,
) -> Result<bool> {
    if !is_sigma_disjoint(x) || !has_strict_columns(x) {
        return Ok(false);
    }
    let supported = element_supports_transfers(x, t.lattice())?;
    Ok(supported.iter().all(|&(k, h)| t.admits(k, h)))
}

// ---------------------------------------------------------------------------
// Graph subgroups
// ---------------------------------------------------------------------------

/// A subgroup of `G x Sigma_n` given as the graph of a homomorphism
/// `phi: H -> Sigma_n`, acting on `G x {1..n}` by `(g, i) -> (h g, phi(h) i)`.
#[derive(Debug, Clone)]
pub struct GraphSubgroup {
    subgroup: Subgroup,
    arity: usize,
    phi: BTreeMap<usize, Permutation>,
}

impl GraphSubgroup {
    pub fn new(subgroup: Subgroup, arity: usize, phi: BTreeMap<usize, Permutation>) -> Result<Self> {
        let group = subgroup.parent().clone();
        if phi.len() != subgroup.order()
            || !subgroup.elements().iter().all(|h| phi.contains_key(h))
        {
            return Err(Error::Mismatch(
                "homomorphism table must cover the subgroup exactly".into(),
            ));
        }
        for (h, perm) in &phi {
            if perm.degree() != arity {
                return Err(Error::Mismatch(format!(
                    "permutation for {} has degree {}, expected {arity}",
                    group.elem_name(*h),
                    perm.degree()
                )));
            }
        }
        if !phi[&group.identity()].is_identity() {
            return Err(Error::Mismatch(
                "homomorphism must send the identity to the identity".into(),
            ));
        }
        for &h1 in subgroup.elements() {
            for &h2 in subgroup.elements() {
                let lhs = &phi[&group.mul(h1, h2)];
                let rhs = phi[&h1].compose(&phi[&h2]);
                if *lhs != rhs {
                    return Err(Error::Mismatch(format!(
                        "not a homomorphism at ({}, {})",
                        group.elem_name(h1),
                        group.elem_name(h2)
                    )));
                }
            }
        }
        Ok(GraphSubgroup {
            subgroup,
            arity,
            phi,
        })
    }

    /// The graph subgroup `H x {id}`.
    pub fn trivial_action(subgroup: Subgroup, arity: usize) -> Self {
        let phi = subgroup
            .elements()
            .iter()
            .map(|&h| (h, Permutation::identity(arity)))
            .collect();
        GraphSubgroup {
            subgroup,
            arity,
            phi,
        }
    }

    /// The graph subgroup of `H` permuting the left cosets of `K` in `H`,
    /// with positions numbered by cosets sorted on their least element.
    pub fn coset_action(h: &Subgroup, k: &Subgroup) -> Result<Self> {
        if !k.is_contained_in(h) {
            return Err(Error::InvalidSubgroup(
                "coset action needs the second subgroup inside the first".into(),
            ));
        }
        let group = h.parent().clone();
        let cosets = left_cosets(h, k);
        let arity = cosets.len();
        let coset_of = |g: usize| -> usize {
            cosets
                .iter()
                .position(|c| c.contains(&g))
                .expect("cosets partition the subgroup")
                + 1
        };
        let mut phi = BTreeMap::new();
        for &elem in h.elements() {
            let image: Vec<usize> = (1..=arity)
                .map(|j| coset_of(group.mul(elem, cosets[j - 1][0])))
                .collect();
            phi.insert(elem, Permutation::from_image(image)?);
        }
        GraphSubgroup::new(h.clone(), arity, phi)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn perm(&self, h: usize) -> Option<&Permutation> {
        self.phi.get(&h)
    }

    /// The orbits of the action on `G x {1..n}`, each sorted, listed by
    /// least vertex.
    pub fn orbits(&self) -> Vec<Vec<(usize, usize)>> {
        let group = self.group();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut orbits = Vec::new();
        for g in 0..group.order() {
            for i in 1..=self.arity {
                if seen.contains(&(g, i)) {
                    continue;
                }
                let orbit: BTreeSet<(usize, usize)> = self
                    .subgroup
                    .elements()
                    .iter()
                    .map(|&h| (group.mul(h, g), self.phi[&h].apply(i)))
                    .collect();
                seen.extend(orbit.iter().copied());
                orbits.push(orbit.into_iter().collect());
            }
        }
        orbits
    }

    /// Elements of `H` fixing position `i`.
    pub fn stabilizer_elements(&self, i: usize) -> Vec<usize> {
        self.subgroup
            .elements()
            .iter()
            .copied()
            .filter(|&h| self.phi[&h].apply(i) == i)
            .collect()
    }

    pub fn h_index(&self, lattice: &SubgroupLattice) -> Result<usize> {
        lattice
            .index_of_elements(self.subgroup.elements())
            .ok_or_else(|| Error::InvalidSubgroup("subgroup missing from lattice".into()))
    }

    /// The positions as an `H`-set: the stabilizer of each position, indexed
    /// in the lattice.
    pub fn hset(&self, lattice: &SubgroupLattice) -> Result<HSet> {
        let h_idx = self.h_index(lattice)?;
        let stabilizers = (1..=self.arity)
            .map(|i| {
                lattice
                    .index_of_elements(&self.stabilizer_elements(i))
                    .ok_or_else(|| {
                        Error::InvalidSubgroup("stabilizer missing from lattice".into())
                    })
            })
            .collect::<Result<Vec<usize>>>()?;
        HSet::new(lattice, h_idx, stabilizers)
    }
}

/// Whether `x` is fixed by every `(h, phi(h))` of the graph subgroup.
pub fn is_fixed_by<M: IntersectionMonoid>(
    x: &CoinducedElement<M>,
    gamma: &GraphSubgroup,
) -> Result<bool> {
    ensure_same_group(x.group(), gamma.group())?;
    if x.arity() != gamma.arity() {
        return Err(Error::Mismatch(format!(
            "arity {} does not match the action on {} positions",
            x.arity(),
            gamma.arity()
        )));
    }
    for &h in gamma.subgroup().elements() {
        if act(h, &gamma.phi[&h], x)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the orbit-constant table with the given labels, one per orbit in
/// the order reported by [`GraphSubgroup::orbits`]. Pairwise disjoint labels
/// make the output row-disjoint, strict-columned, and fixed by the subgroup.
pub fn psi_gamma<M: IntersectionMonoid>(
    monoid: &M,
    gamma: &GraphSubgroup,
    labels: &[M::Elem],
) -> Result<CoinducedElement<M>> {
    let orbits = gamma.orbits();
    if labels.len() != orbits.len() {
        return Err(Error::InvalidLabels(format!(
            "{} labels for {} orbits",
            labels.len(),
            orbits.len()
        )));
    }
    for (a, x) in labels.iter().enumerate() {
        for y in &labels[a + 1..] {
            if monoid.intersects(x, y) {
                return Err(Error::InvalidLabels(
                    "orbit labels must be pairwise disjoint".into(),
                ));
            }
        }
    }
    let mut cell: BTreeMap<(usize, usize), M::Elem> = BTreeMap::new();
    for (orbit, label) in orbits.iter().zip(labels) {
        for &v in orbit {
            cell.insert(v, label.clone());
        }
    }
    let x = CoinducedElement::from_fn(
        gamma.group().clone(),
        monoid.clone(),
        gamma.arity(),
        |g, i| cell[&(g, i)].clone(),
    );
    debug_assert!(is_sigma_disjoint(&x));
    debug_assert!(has_strict_columns(&x));
    Ok(x)
}

// ---------------------------------------------------------------------------
// Fixed-point decision
// ---------------------------------------------------------------------------

/// The verdict of [`fixed_points_nonempty`], carrying its certificate.
#[derive(Debug, Clone)]
pub enum FixedPointOutcome<M: IntersectionMonoid> {
    /// A verified member of the realization suboperad fixed by the subgroup.
    Nonempty { witness: CoinducedElement<M> },
    /// A verified reason no fixed member can exist.
    Empty { obstruction: Obstruction },
    /// Neither argument applied within the given bound; never produced by
    /// the current decision procedure, kept so callers must handle it.
    Unknown,
}

impl<M: IntersectionMonoid> FixedPointOutcome<M> {
    pub fn is_nonempty(&self) -> bool {
        matches!(self, FixedPointOutcome::Nonempty { .. })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, FixedPointOutcome::Empty { .. })
    }
}

/// Why a fixed-point set is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Orbit constancy at this position forces the transfer
    /// `stabilizer -> subgroup`, which the transfer system rejects (lattice
    /// indices).
    UnsupportedTransfer {
        position: usize,
        stabilizer: usize,
        subgroup: usize,
    },
    /// Every candidate table was enumerated and rejected.
    ExhaustedSpace { candidates: u64 },
}

/// Decides whether the realization suboperad of `t` has a fixed point under
/// `gamma`, returning a verified witness or obstruction.
///
/// The dichotomy: when every position stabilizer pair `(Stab(i), H)` is
/// admitted by `t`, labelling the orbits from a disjoint family gives a
/// witness; otherwise any fixed table is constant on the orbit of an
/// offending position and therefore supports a rejected transfer. For a
/// monoid with no disjoint pair the family is unavailable and a bounded
/// exhaustive fallback runs instead (`bound` caps it); `Unknown` is reserved
/// for a fallback that cannot finish, which no current instance triggers.
pub fn fixed_points_nonempty<M: IntersectionMonoid>(
    monoid: &M,
    gamma: &GraphSubgroup,
    t: &TransferSystem,
    bound: usize,
) -> Result<FixedPointOutcome<M>> {
    let lattice = t.lattice();
    ensure_same_group(gamma.group(), lattice.group())?;
    let h_idx = gamma.h_index(lattice)?;
    let hset = gamma.hset(lattice)?;
    if hset_in_indexing(&transfer_to_indexing(t), &hset) {
        let orbits = gamma.orbits();
        match disjoint_family(monoid, orbits.len()) {
            Ok(labels) => {
                let witness = psi_gamma(monoid, gamma, &labels)?;
                if !is_fixed_by(&witness, gamma)? || !in_R_tau(&witness, t)? {
                    return Err(Error::AssertionFailed(
                        "constructed witness failed verification".into(),
                    ));
                }
                Ok(FixedPointOutcome::Nonempty { witness })
            }
            Err(Error::TrivialMonoid) => all_intersecting_fallback(monoid, gamma, t, bound),
            Err(e) => Err(e),
        }
    } else {
        let position = (1..=gamma.arity())
            .find(|&i| {
                let stab = lattice.index_of_elements(&gamma.stabilizer_elements(i));
                stab.map(|s| !t.admits(s, h_idx)).unwrap_or(false)
            })
            .expect("some position witnesses the failed membership");
        let stab_idx = lattice
            .index_of_elements(&gamma.stabilizer_elements(position))
            .expect("stabilizers are subgroups");
        // re-verify: the twist map h -> phi(h)(position) on H structures
        // exactly the rejected transfer, so any orbit-constant table
        // supports it
        let assignments: Vec<(usize, usize)> = gamma
            .subgroup()
            .elements()
            .iter()
            .map(|&h| (h, gamma.phi[&h].apply(position)))
            .collect();
        let beta = TwistMap::new(gamma.group().clone(), gamma.arity(), &assignments)?;
        if !beta
            .structures(lattice)?
            .contains(&(stab_idx, h_idx, position))
        {
            return Err(Error::AssertionFailed(
                "obstruction twist map does not structure the rejected transfer".into(),
            ));
        }
        Ok(FixedPointOutcome::Empty {
            obstruction: Obstruction::UnsupportedTransfer {
                position,
                stabilizer: stab_idx,
                subgroup: h_idx,
            },
        })
    }
}

/// Fallback for monoids where all pairs intersect: rows of length 2 or more
/// can never be pairwise disjoint, so only small arities admit members, and
/// the constant-unit table represents them all.
fn all_intersecting_fallback<M: IntersectionMonoid>(
    monoid: &M,
    gamma: &GraphSubgroup,
    t: &TransferSystem,
    bound: usize,
) -> Result<FixedPointOutcome<M>> {
    let _ = bound;
    if gamma.arity() >= 2 {
        return Ok(FixedPointOutcome::Empty {
            obstruction: Obstruction::ExhaustedSpace { candidates: 1 },
        });
    }
    let candidate = if gamma.arity() == 0 {
        CoinducedElement::point(gamma.group().clone(), monoid.clone())
    } else {
        CoinducedElement::unit(gamma.group().clone(), monoid.clone())
    };
    if is_fixed_by(&candidate, gamma)? && in_R_tau(&candidate, t)? {
        Ok(FixedPointOutcome::Nonempty { witness: candidate })
    } else {
        Ok(FixedPointOutcome::Empty {
            obstruction: Obstruction::ExhaustedSpace { candidates: 1 },
        })
    }
}

/// Brute-force verifier over dyadic tables: scans every orbit-constant
/// labelling with words of length at most `max_len` and returns the first
/// member of the realization suboperad found. Fixed tables are exactly the
/// orbit-constant ones, so a hit proves the fixed-point set nonempty; a miss
/// only rules out short labels.
pub fn bounded_fixed_point_scan(
    gamma: &GraphSubgroup,
    t: &TransferSystem,
    max_len: usize,
) -> Result<Option<CoinducedElement<Dyadic>>> {
    ensure_same_group(gamma.group(), t.lattice().group())?;
    let words = all_words_up_to(max_len);
    let orbits = gamma.orbits();
    let total = (words.len() as u128).checked_pow(orbits.len() as u32);
    match total {
        Some(total) if total <= 4_000_000 => {}
        _ => {
            return Err(Error::Mismatch(format!(
                "scan space {}^{} exceeds the 4000000 candidate cap",
                words.len(),
                orbits.len()
            )))
        }
    }
    if orbits.is_empty() {
        let point = CoinducedElement::point(gamma.group().clone(), Dyadic);
        return Ok(if in_R_tau(&point, t)? {
            Some(point)
        } else {
            None
        });
    }
    let mut choice = vec![0usize; orbits.len()];
    loop {
        let mut cell: BTreeMap<(usize, usize), DyadicWord> = BTreeMap::new();
        for (orbit, &w_idx) in orbits.iter().zip(&choice) {
            for &v in orbit {
                cell.insert(v, words[w_idx].clone());
            }
        }
        let x = CoinducedElement::from_fn(gamma.group().clone(), Dyadic, gamma.arity(), |g, i| {
            cell[&(g, i)].clone()
        });
        debug_assert!(is_fixed_by(&x, gamma)?);
        if in_R_tau(&x, t)? {
            return Ok(Some(x));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(None);
            }
            if choice[pos] + 1 < words.len() {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn all_words_up_to(max_len: usize) -> Vec<DyadicWord> {
    let mut out = vec![DyadicWord::empty()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for c in ['a', 'b'] {
                let mut s = w.clone();
                s.push(c);
                out.push(DyadicWord::new(&s).expect("letters are in the alphabet"));
                next.push(s);
            }
        }
        frontier = next;
    }
    out.sort();
    out
}
