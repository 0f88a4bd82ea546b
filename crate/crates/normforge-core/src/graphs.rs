//! The indexing operad of simple graphs on `G x [n]` and its transfer
//! bookkeeping.
//!
//! A graph here records which entries of a table `G x [n] -> M` overlap:
//! vertices are (group element, position) pairs and edges never join two
//! vertices in the same row. Composition collapses a block of positions onto
//! one slot, the `G x Sigma_n` action relabels vertices, and twist maps (maps
//! out of a coset of a subgroup) detect which transfers `K -> H` a graph can
//! support. Everything is exact set arithmetic on sorted edge lists.

use crate::coinduced::{collapse, shift};
use crate::group::{FiniteGroup, SubgroupLattice};
use crate::perm::Permutation;
use crate::transfer::TransferSystem;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A vertex of an index graph: `(group element id, position)`, position
/// 1-based.
pub type Vertex = (usize, usize);

fn order_edge(v1: Vertex, v2: Vertex) -> (Vertex, Vertex) {
    if v1 <= v2 {
        (v1, v2)
    } else {
        (v2, v1)
    }
}

/// A simple graph on the vertex set `G x {1..n}` with no edge between
/// vertices sharing a group element. Edges are kept canonically sorted, so
/// equality is structural.
#[derive(Debug, Clone)]
pub struct IndexGraph {
    group: Arc<FiniteGroup>,
    arity: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl PartialEq for IndexGraph {
    fn eq(&self, other: &Self) -> bool {
        self.group.name() == other.group.name()
            && self.arity == other.arity
            && self.edges == other.edges
    }
}
impl Eq for IndexGraph {}
impl PartialOrd for IndexGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for IndexGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.group.name(), self.arity, &self.edges).cmp(&(
            other.group.name(),
            other.arity,
            &other.edges,
        ))
    }
}

impl IndexGraph {
    /// The edgeless graph on `G x {1..n}`.
    pub fn empty(group: Arc<FiniteGroup>, arity: usize) -> Self {
        IndexGraph {
            group,
            arity,
            edges: BTreeSet::new(),
        }
    }

    /// The operad unit: the complete graph on `G x {1}`.
    pub fn unit(group: Arc<FiniteGroup>) -> Self {
        let mut gr = IndexGraph::empty(group.clone(), 1);
        for g1 in 0..group.order() {
            for g2 in (g1 + 1)..group.order() {
                gr.edges.insert(((g1, 1), (g2, 1)));
            }
        }
        gr
    }

    /// The largest legal graph: every cross-row pair is an edge.
    pub fn complete(group: Arc<FiniteGroup>, arity: usize) -> Self {
        let mut gr = IndexGraph::empty(group.clone(), arity);
        for v1 in gr.vertices() {
            for v2 in gr.vertices() {
                if v1 < v2 && v1.0 != v2.0 {
                    gr.edges.insert((v1, v2));
                }
            }
        }
        gr
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.group.order() * self.arity);
        for g in 0..self.group.order() {
            for i in 1..=self.arity {
                out.push((g, i));
            }
        }
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v.0 >= self.group.order() || v.1 < 1 || v.1 > self.arity {
            return Err(Error::IndexOutOfRange(format!(
                "vertex ({}, {}) outside {} x 1..={}",
                v.0,
                v.1,
                self.group.name(),
                self.arity
            )));
        }
        Ok(())
    }

    /// Inserts an edge, rejecting loops and same-row pairs.
    pub fn add_edge(&mut self, v1: Vertex, v2: Vertex) -> Result<()> {
        self.check_vertex(v1)?;
        self.check_vertex(v2)?;
        if v1.0 == v2.0 {
            return Err(Error::Mismatch(format!(
                "edge between ({}, {}) and ({}, {}) stays in one row",
                v1.0, v1.1, v2.0, v2.1
            )));
        }
        self.edges.insert(order_edge(v1, v2));
        Ok(())
    }

    pub fn has_edge(&self, v1: Vertex, v2: Vertex) -> bool {
        self.edges.contains(&order_edge(v1, v2))
    }

    pub fn edges(&self) -> impl Iterator<Item = &(Vertex, Vertex)> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_subgraph_of(&self, other: &IndexGraph) -> bool {
        self.arity == other.arity && self.edges.is_subset(&other.edges)
    }

    /// Copy with one edge removed; no-op when the edge is absent.
    pub fn without_edge(&self, v1: Vertex, v2: Vertex) -> IndexGraph {
        let mut gr = self.clone();
        gr.edges.remove(&order_edge(v1, v2));
        gr
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group.name(),
            "arity": self.arity,
            "edges": self
                .edges
                .iter()
                .map(|((g1, i1), (g2, i2))| serde_json::json!([[g1, i1], [g2, i2]]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(group: Arc<FiniteGroup>, value: &serde_json::Value) -> Result<Self> {
        let arity = value
            .get("arity")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("graph json lacks an arity".into()))?
            as usize;
        let mut gr = IndexGraph::empty(group, arity);
        let edges = value
            .get("edges")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("graph json lacks an edge list".into()))?;
        for edge in edges {
            let pair: [[usize; 2]; 2] = serde_json::from_value(edge.clone())?;
            gr.add_edge((pair[0][0], pair[0][1]), (pair[1][0], pair[1][1]))?;
        }
        Ok(gr)
    }
}

fn ensure_same_group(g1: &Arc<FiniteGroup>, g2: &Arc<FiniteGroup>) -> Result<()> {
    if Arc::ptr_eq(g1, g2) || (g1.name() == g2.name() && g1.order() == g2.order()) {
        Ok(())
    } else {
        Err(Error::Mismatch(format!(
            "graphs live over different groups: {} vs {}",
            g1.name(),
            g2.name()
        )))
    }
}

/// Partial composition `g1 o_i g2`: the composite has an edge when the
/// collapse-image edge is in `g1` and, for pairs collapsing into the block,
/// the shift-image edge is also in `g2`.
pub fn graph_compose(g1: &IndexGraph, i: usize, g2: &IndexGraph) -> Result<IndexGraph> {
    ensure_same_group(&g1.group, &g2.group)?;
    let (n, m) = (g1.arity, g2.arity);
    if n == 0 || i < 1 || i > n {
        return Err(Error::IndexOutOfRange(format!(
            "slot {i} not in 1..={n} for graph composition"
        )));
    }
    let mut out = IndexGraph::empty(g1.group.clone(), n + m - 1);
    let vertices = out.vertices();
    for (a, &(h1, j1)) in vertices.iter().enumerate() {
        for &(h2, j2) in &vertices[a + 1..] {
            if h1 == h2 {
                continue;
            }
            let c1 = collapse(n, m, i, j1)?;
            let c2 = collapse(n, m, i, j2)?;
            if !g1.has_edge((h1, c1), (h2, c2)) {
                continue;
            }
            if c1 == i
                && c2 == i
                && !g2.has_edge((h1, shift(i, m, j1)?), (h2, shift(i, m, j2)?))
            {
                continue;
            }
            out.edges.insert(order_edge((h1, j1), (h2, j2)));
        }
    }
    Ok(out)
}

/// The `(g, sigma)` action: each edge `{(h1,i1),(h2,i2)}` moves to
/// `{(g h1, sigma i1), (g h2, sigma i2)}`.
pub fn graph_act(g: usize, sigma: &Permutation, gr: &IndexGraph) -> Result<IndexGraph> {
    if g >= gr.group.order() {
        return Err(Error::IndexOutOfRange(format!(
            "element {g} outside group of order {}",
            gr.group.order()
        )));
    }
    if sigma.degree() != gr.arity {
        return Err(Error::Mismatch(format!(
            "permutation degree {} does not match graph arity {}",
            sigma.degree(),
            gr.arity
        )));
    }
    let mut out = IndexGraph::empty(gr.group.clone(), gr.arity);
    for &((h1, i1), (h2, i2)) in &gr.edges {
        let v1 = (gr.group.mul(g, h1), sigma.apply(i1));
        let v2 = (gr.group.mul(g, h2), sigma.apply(i2));
        out.edges.insert(order_edge(v1, v2));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Twist maps
// ---------------------------------------------------------------------------

/// A function out of a right coset of a subgroup into positions `{1..n}`.
///
/// The witnesses are the `g0` with `S g0` a subgroup; for `S = H w` the
/// witness set is `w^{ -1} H = S^{ -1}`, so there are exactly `|S|` of them
/// and `S g0` is the same subgroup `S S^{ -1}` for each.
#[derive(Debug, Clone)]
pub struct TwistMap {
    group: Arc<FiniteGroup>,
    arity: usize,
    domain: Vec<usize>,
    values: Vec<usize>,
    witnesses: Vec<usize>,
}

impl PartialEq for TwistMap {
    fn eq(&self, other: &Self) -> bool {
        self.group.name() == other.group.name()
            && self.arity == other.arity
            && self.domain == other.domain
            && self.values == other.values
    }
}
impl Eq for TwistMap {}

impl TwistMap {
    /// Builds a twist map from `(element, position)` pairs; fails when the
    /// domain is not a coset or a position falls outside `1..=arity`.
    pub fn new(
        group: Arc<FiniteGroup>,
        arity: usize,
        assignments: &[(usize, usize)],
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(s, i) in assignments {
            if s >= group.order() {
                return Err(Error::IndexOutOfRange(format!(
                    "element {s} outside group of order {}",
                    group.order()
                )));
            }
            if i < 1 || i > arity {
                return Err(Error::IndexOutOfRange(format!(
                    "position {i} outside 1..={arity}"
                )));
            }
            if map.insert(s, i).is_some() {
                return Err(Error::Mismatch(format!(
                    "element {} assigned two positions",
                    group.elem_name(s)
                )));
            }
        }
        if map.is_empty() {
            return Err(Error::Mismatch("twist map needs a nonempty domain".into()));
        }
        let domain: Vec<usize> = map.keys().copied().collect();
        let values: Vec<usize> = map.values().copied().collect();
        let witnesses = coset_witnesses(&group, &domain);
        if witnesses.is_empty() {
            return Err(Error::InvalidSubgroup(format!(
                "domain {{{}}} is not a right coset of a subgroup",
                domain
                    .iter()
                    .map(|&s| group.elem_name(s).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(TwistMap {
            group,
            arity,
            domain,
            values,
            witnesses,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn witnesses(&self) -> &[usize] {
        &self.witnesses
    }

    pub fn value(&self, s: usize) -> Option<usize> {
        self.domain
            .binary_search(&s)
            .ok()
            .map(|idx| self.values[idx])
    }

    /// The graph `Gamma(alpha)` as a vertex list.
    pub fn graph_vertices(&self) -> Vec<Vertex> {
        self.domain
            .iter()
            .zip(&self.values)
            .map(|(&s, &i)| (s, i))
            .collect()
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.values.iter().copied().collect()
    }

    pub fn preimage(&self, i: usize) -> Vec<usize> {
        self.domain
            .iter()
            .zip(&self.values)
            .filter(|&(_, &v)| v == i)
            .map(|(&s, _)| s)
            .collect()
    }

    /// The `(g, sigma)` action: the new map sends `h` in `g S` to
    /// `sigma(alpha(g^{ -1} h))`.
    pub fn act(&self, g: usize, sigma: &Permutation) -> Result<TwistMap> {
        if sigma.degree() != self.arity {
            return Err(Error::Mismatch(format!(
                "permutation degree {} does not match twist arity {}",
                sigma.degree(),
                self.arity
            )));
        }
        let assignments: Vec<(usize, usize)> = self
            .domain
            .iter()
            .zip(&self.values)
            .map(|(&s, &i)| (self.group.mul(g, s), sigma.apply(i)))
            .collect();
        TwistMap::new(self.group.clone(), self.arity, &assignments)
    }

    /// All transfers `(K, H, position)` this map structures: for each witness
    /// `g0`, the only productive position is `i = alpha(g0^{ -1})` (a subgroup
    /// inside `alpha^{ -1}(i) g0` must contain the identity), and `K` ranges
    /// over the inclusion-maximal subgroups inside that subset.
    pub fn structures(&self, lattice: &Arc<SubgroupLattice>) -> Result<BTreeSet<(usize, usize, usize)>> {
        ensure_same_group(&self.group, lattice.group())?;
        let mut out = BTreeSet::new();
        for &g0 in &self.witnesses {
            let h_elems: Vec<usize> = {
                let set: BTreeSet<usize> =
                    self.domain.iter().map(|&s| self.group.mul(s, g0)).collect();
                set.into_iter().collect()
            };
            let h_idx = lattice.index_of_elements(&h_elems).ok_or_else(|| {
                Error::InvalidSubgroup("witness translate is not a subgroup".into())
            })?;
            let i = self
                .value(self.group.inv(g0))
                .expect("witness inverses lie in the domain");
            let x: BTreeSet<usize> = self
                .preimage(i)
                .into_iter()
                .map(|s| self.group.mul(s, g0))
                .collect();
            for k_idx in maximal_subgroups_within(lattice, &x) {
                out.insert((k_idx, h_idx, i));
            }
        }
        Ok(out)
    }
}

/// The `g0` with `domain * g0` a subgroup; empty when the domain is not a
/// right coset.
fn coset_witnesses(group: &FiniteGroup, domain: &[usize]) -> Vec<usize> {
    (0..group.order())
        .filter(|&g0| {
            let translate: BTreeSet<usize> = domain.iter().map(|&s| group.mul(s, g0)).collect();
            translate.contains(&group.identity())
                && translate
                    .iter()
                    .all(|&a| translate.iter().all(|&b| translate.contains(&group.mul(a, b))))
        })
        .collect()
}

/// Indices of the inclusion-maximal subgroups whose elements all lie in `x`.
fn maximal_subgroups_within(lattice: &SubgroupLattice, x: &BTreeSet<usize>) -> Vec<usize> {
    let inside: Vec<usize> = (0..lattice.count())
        .filter(|&k| lattice.subgroup(k).elements().iter().all(|e| x.contains(e)))
        .collect();
    inside
        .iter()
        .copied()
        .filter(|&k| {
            !inside
                .iter()
                .any(|&j| j != k && lattice.leq(k, j) && !lattice.leq(j, k))
        })
        .collect()
}

/// Convenience wrapper over [`TwistMap::structures`].
pub fn twist_structures(
    alpha: &TwistMap,
    lattice: &Arc<SubgroupLattice>,
) -> Result<BTreeSet<(usize, usize, usize)>> {
    alpha.structures(lattice)
}

/// Every twist map for `G x [n]`: all functions out of each right coset of
/// each subgroup. The count grows as `n^{|S|}`, so this is a small-input
/// utility; the support scan below never materializes this list.
pub fn enumerate_twist_maps(group: &Arc<FiniteGroup>, n: usize) -> Result<Vec<TwistMap>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange(
            "twist maps need at least one position".into(),
        ));
    }
    let lattice = SubgroupLattice::new(group.clone());
    let mut total: u128 = 0;
    let cosets = all_right_cosets(&lattice);
    for coset in &cosets {
        total += (n as u128).pow(coset.len() as u32);
        if total > 5_000_000 {
            return Err(Error::Mismatch(format!(
                "refusing to enumerate more than 5000000 twist maps for {} x [{n}]",
                group.name()
            )));
        }
    }
    let mut out = Vec::new();
    for coset in &cosets {
        let mut values = vec![1usize; coset.len()];
        loop {
            let assignments: Vec<(usize, usize)> =
                coset.iter().copied().zip(values.iter().copied()).collect();
            out.push(TwistMap::new(group.clone(), n, &assignments)?);
            // odometer over the value vector
            let mut pos = 0;
            loop {
                if pos == values.len() {
                    break;
                }
                if values[pos] < n {
                    values[pos] += 1;
                    break;
                }
                values[pos] = 1;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// The distinct right cosets `H g` over all subgroups `H`, sorted.
fn all_right_cosets(lattice: &SubgroupLattice) -> Vec<Vec<usize>> {
    let group = lattice.group();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for k in 0..lattice.count() {
        let h = lattice.subgroup(k);
        for g in 0..group.order() {
            let coset: BTreeSet<usize> = h.elements().iter().map(|&x| group.mul(x, g)).collect();
            seen.insert(coset.into_iter().collect());
        }
    }
    seen.into_iter().collect()
}

/// Whether the complete graph on the vertices `{(s, alpha(s))}` lies inside
/// `gr`. The position argument names which preimage plays the role of the
/// distinguished subset and is validated but cannot change the answer.
pub fn has_complete_subgraph(
    gr: &IndexGraph,
    assignments: &[(usize, usize)],
    position: usize,
) -> Result<bool> {
    if position < 1 || position > gr.arity {
        return Err(Error::IndexOutOfRange(format!(
            "position {position} outside 1..={}",
            gr.arity
        )));
    }
    let mut seen = BTreeSet::new();
    for &(s, i) in assignments {
        gr.check_vertex((s, i))?;
        if !seen.insert(s) {
            return Err(Error::Mismatch(format!(
                "element {} assigned two positions",
                gr.group.elem_name(s)
            )));
        }
    }
    Ok(assignments.iter().enumerate().all(|(a, &(s1, i1))| {
        assignments[a + 1..]
            .iter()
            .all(|&(s2, i2)| gr.has_edge((s1, i1), (s2, i2)))
    }))
}

/// All nonreflexive transfers `(K, H)` supported by `gr`: over every coset
/// `S` and every assignment `alpha: S -> [n]` whose vertex set spans a clique
/// of `gr`, collect what the twist map structures. Reflexive pairs are
/// dropped since they can never obstruct membership in a transfer system.
///
/// The clique condition is enforced during backtracking, so sparse graphs
/// prune immediately instead of paying the full `n^{|S|}` scan.
pub fn graph_supports_transfers(
    gr: &IndexGraph,
    lattice: &Arc<SubgroupLattice>,
) -> Result<BTreeSet<(usize, usize)>> {
    ensure_same_group(&gr.group, lattice.group())?;
    let cosets = all_right_cosets(lattice);
    let per_coset: Vec<Result<BTreeSet<(usize, usize)>>> = cosets
        .par_iter()
        .map(|coset| supports_on_coset(gr, lattice, coset))
        .collect();
    let mut out = BTreeSet::new();
    for set in per_coset {
        out.extend(set?);
    }
    Ok(out)
}

fn supports_on_coset(
    gr: &IndexGraph,
    lattice: &Arc<SubgroupLattice>,
    coset: &[usize],
) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    let mut values: Vec<usize> = Vec::with_capacity(coset.len());
    extend_clique(gr, lattice, coset, &mut values, &mut out)?;
    Ok(out)
}

fn extend_clique(
    gr: &IndexGraph,
    lattice: &Arc<SubgroupLattice>,
    coset: &[usize],
    values: &mut Vec<usize>,
    out: &mut BTreeSet<(usize, usize)>,
) -> Result<()> {
    if values.len() == coset.len() {
        let assignments: Vec<(usize, usize)> =
            coset.iter().copied().zip(values.iter().copied()).collect();
        let alpha = TwistMap::new(gr.group.clone(), gr.arity, &assignments)?;
        for (k_idx, h_idx, _) in alpha.structures(lattice)? {
            if k_idx != h_idx {
                out.insert((k_idx, h_idx));
            }
        }
        return Ok(());
    }
    let s_new = coset[values.len()];
    for p in 1..=gr.arity {
        let compatible = coset
            .iter()
            .zip(values.iter())
            .all(|(&s, &v)| gr.has_edge((s, v), (s_new, p)));
        if compatible {
            values.push(p);
            extend_clique(gr, lattice, coset, values, out)?;
            values.pop();
        }
    }
    Ok(())
}

/// Membership in the suboperad of graphs supporting only transfers of `t`.
#[allow(non_snake_case)]
pub fn in_I_tau(gr: &IndexGraph, t: &TransferSystem) -> Result<bool> {
    let supported = graph_supports_transfers(gr, t.lattice())?;
    Ok(supported.iter().all(|&(k, h)| t.admits(k, h)))
}

/// The two shapes of certificate produced by [`decomposition_check`]: the
/// found subgraph either avoids the composition block and pulls back to the
/// outer factor alone, or it splits into an outer part at the slot and an
/// inner part joined along a middle subset `R` with `T` inside `R` inside
/// `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionCertificate {
    Outside {
        beta: Vec<(usize, usize)>,
        position: usize,
    },
    Inside {
        beta: Vec<(usize, usize)>,
        beta_position: usize,
        gamma: Vec<(usize, usize)>,
        gamma_position: usize,
        middle: Vec<usize>,
    },
}

/// Verifies that a complete subgraph of `g1 o_i g2` at position `j`
/// decomposes into complete subgraphs of the factors, returning the
/// re-verified certificate. `alpha` gives the underlying assignment on the
/// composite; the hypothesis (its vertex set spans a clique there) is checked
/// first.
pub fn decomposition_check(
    g1: &IndexGraph,
    g2: &IndexGraph,
    i: usize,
    alpha: &[(usize, usize)],
    j: usize,
) -> Result<DecompositionCertificate> {
    let composite = graph_compose(g1, i, g2)?;
    if !has_complete_subgraph(&composite, alpha, j)? {
        return Err(Error::HypothesisFailed(
            "assignment does not span a clique of the composite".into(),
        ));
    }
    let (n, m) = (g1.arity, g2.arity);
    let in_block = |k: usize| k >= i && k < i + m;
    let mut beta = Vec::with_capacity(alpha.len());
    for &(s, k) in alpha {
        beta.push((s, collapse(n, m, i, k)?));
    }
    if !in_block(j) {
        let position = collapse(n, m, i, j)?;
        if !has_complete_subgraph(g1, &beta, position)? {
            return Err(Error::AssertionFailed(
                "collapsed assignment is not a clique of the outer factor".into(),
            ));
        }
        return Ok(DecompositionCertificate::Outside { beta, position });
    }
    let middle: Vec<usize> = alpha
        .iter()
        .filter(|&&(_, k)| in_block(k))
        .map(|&(s, _)| s)
        .collect();
    let mut gamma = Vec::new();
    for &(s, k) in alpha {
        if in_block(k) {
            gamma.push((s, shift(i, m, k)?));
        }
    }
    let t: Vec<usize> = alpha
        .iter()
        .filter(|&&(_, k)| k == j)
        .map(|&(s, _)| s)
        .collect();
    if !t.iter().all(|s| middle.contains(s)) {
        return Err(Error::AssertionFailed(
            "distinguished subset escapes the middle set".into(),
        ));
    }
    if !has_complete_subgraph(g1, &beta, i)? {
        return Err(Error::AssertionFailed(
            "collapsed assignment is not a clique of the outer factor".into(),
        ));
    }
    let gamma_position = shift(i, m, j)?;
    if !has_complete_subgraph(g2, &gamma, gamma_position)? {
        return Err(Error::AssertionFailed(
            "shifted assignment is not a clique of the inner factor".into(),
        ));
    }
    Ok(DecompositionCertificate::Inside {
        beta,
        beta_position: i,
        gamma,
        gamma_position,
        middle,
    })
}
