//! Finite groups as explicit multiplication tables, with subgroup lattices.
//!
//! Element 0 is always the identity. Groups are bounded by [`MAX_ORDER`] so
//! every check (associativity, closure, conjugation) is a full exact scan.
//! Subgroups are canonical sorted element lists; two subgroups are equal
//! exactly when their element lists are equal.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Largest supported group order; everything is table-driven and exact.
pub const MAX_ORDER: usize = 16;

/// A finite group given by its multiplication table on indices `0..order`.
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    elem_names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    name: String,
    order: usize,
    mul: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a multiplication table and wraps it as a group.
    ///
    /// Requirements: the table is `order x order` with entries in range,
    /// element 0 is a two-sided identity, multiplication is associative,
    /// and every element has a two-sided inverse.
    pub fn from_table(
        name: impl Into<String>,
        mul: Vec<Vec<usize>>,
        elem_names: Option<Vec<String>>,
    ) -> Result<Arc<Self>> {
        let name = name.into();
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {order} exceeds supported bound {MAX_ORDER}"
            )));
        }
        for row in &mul {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            if row.iter().any(|&v| v >= order) {
                return Err(Error::InvalidGroup("table entry out of range".into()));
            }
        }
        if (0..order).any(|i| mul[0][i] != i || mul[i][0] != i) {
            return Err(Error::InvalidGroup(
                "element 0 is not a two-sided identity".into(),
            ));
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mul[a][b] == 0 && mul[b][a] == 0) {
                Some(b) => inv[a] = b,
                None => {
                    return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
                }
            }
        }
        let elem_names = match elem_names {
            Some(names) => {
                if names.len() != order {
                    return Err(Error::InvalidGroup("wrong number of element names".into()));
                }
                names
            }
            None => (0..order)
                .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
                .collect(),
        };
        Ok(Arc::new(FiniteGroup {
            name,
            order,
            mul,
            inv,
            elem_names,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Conjugate `h` by `g`: returns `g^{-1} h g`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn elem_name(&self, a: usize) -> &str {
        &self.elem_names[a]
    }

    pub fn elem_by_name(&self, name: &str) -> Option<usize> {
        self.elem_names.iter().position(|n| n == name)
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut ord = 1;
        while x != 0 {
            x = self.mul(x, a);
            ord += 1;
        }
        ord
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Serializes as `{"name", "order", "mul"}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupJson {
            name: self.name.clone(),
            order: self.order,
            mul: self.mul.clone(),
        })
        .expect("group serialization cannot fail")
    }

    /// Reads the `{"name", "order", "mul"}` format back; names are defaulted.
    pub fn from_json(value: &serde_json::Value) -> Result<Arc<Self>> {
        let parsed: GroupJson = serde_json::from_value(value.clone())?;
        if parsed.mul.len() != parsed.order {
            return Err(Error::InvalidGroup(
                "declared order disagrees with table size".into(),
            ));
        }
        FiniteGroup::from_table(parsed.name, parsed.mul, None)
    }
}

/// The cyclic group `Z/n` with `mul(i,j) = (i+j) mod n`.
pub fn make_cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group needs order >= 1".into()));
    }
    let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "s".to_string(),
            _ => format!("s^{i}"),
        })
        .collect();
    FiniteGroup::from_table(format!("C{n}"), mul, Some(names))
}

/// Componentwise product group on index pairs `(i1, i2) ~ i1 * |G2| + i2`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Arc<FiniteGroup>> {
    let n1 = g1.order();
    let n2 = g2.order();
    let order = n1 * n2;
    let idx = |a1: usize, a2: usize| a1 * n2 + a2;
    let mut mul = vec![vec![0; order]; order];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            for b1 in 0..n1 {
                for b2 in 0..n2 {
                    mul[idx(a1, a2)][idx(b1, b2)] = idx(g1.mul(a1, b1), g2.mul(a2, b2));
                }
            }
        }
    }
    let mut names = vec![String::new(); order];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            names[idx(a1, a2)] = format!("({},{})", g1.elem_name(a1), g2.elem_name(a2));
        }
    }
    FiniteGroup::from_table(
        format!("{}x{}", g1.name(), g2.name()),
        mul,
        Some(names),
    )
}

/// The symmetric group on three letters; elements are the permutations of
/// `{1,2,3}` in lexicographic one-line order, named by cycle notation.
pub fn symmetric_3() -> Arc<FiniteGroup> {
    let perms = crate::perm::Permutation::all(3);
    let order = perms.len();
    let mut mul = vec![vec![0; order]; order];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let ab = pa.compose(pb);
            mul[a][b] = perms.iter().position(|p| *p == ab).unwrap();
        }
    }
    let names = perms.iter().map(|p| p.cycle_notation()).collect();
    FiniteGroup::from_table("S3", mul, Some(names)).expect("S3 table is a group")
}

/// Resolves a preset name: `C{n}`, `S3`, or products like `C2xC3`.
pub fn preset(name: &str) -> Result<Arc<FiniteGroup>> {
    if name == "S3" {
        return Ok(symmetric_3());
    }
    if let Some(pos) = name.find('x') {
        let left = preset(&name[..pos])?;
        let right = preset(&name[pos + 1..])?;
        return direct_product(&left, &right);
    }
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        return make_cyclic(n);
    }
    Err(Error::Parse(format!(
        "unknown group preset {name:?} (expected C<n>, S3, or products like C2xC3)"
    )))
}

/// A subgroup in canonical form: sorted, duplicate-free element list.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}
impl Eq for Subgroup {}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl Subgroup {
    /// Wraps an element list after checking identity, closure, and inverses.
    pub fn new(parent: Arc<FiniteGroup>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&a| a >= parent.order()) {
            return Err(Error::InvalidSubgroup("element out of range".into()));
        }
        if !elements.contains(&parent.identity()) {
            return Err(Error::InvalidSubgroup("missing identity".into()));
        }
        for &a in &elements {
            if elements.binary_search(&parent.inv(a)).is_err() {
                return Err(Error::InvalidSubgroup(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &elements {
                if elements.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(Error::InvalidSubgroup(format!(
                        "not closed under product at ({a},{b})"
                    )));
                }
            }
        }
        Ok(Subgroup { parent, elements })
    }

    /// The subgroup generated by `seed`: closure under products and inverses.
    pub fn closure(parent: Arc<FiniteGroup>, seed: &[usize]) -> Subgroup {
        let mut in_set = vec![false; parent.order()];
        in_set[parent.identity()] = true;
        let mut stack: Vec<usize> = vec![parent.identity()];
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                stack.push(s);
            }
        }
        while let Some(a) = stack.pop() {
            let ai = parent.inv(a);
            if !in_set[ai] {
                in_set[ai] = true;
                stack.push(ai);
            }
            for b in 0..parent.order() {
                if !in_set[b] {
                    continue;
                }
                for prod in [parent.mul(a, b), parent.mul(b, a)] {
                    if !in_set[prod] {
                        in_set[prod] = true;
                        stack.push(prod);
                    }
                }
            }
        }
        let elements = (0..parent.order()).filter(|&a| in_set[a]).collect();
        Subgroup { parent, elements }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Subgroup {
        let id = parent.identity();
        Subgroup {
            parent,
            elements: vec![id],
        }
    }

    pub fn full(parent: Arc<FiniteGroup>) -> Subgroup {
        let elements = (0..parent.order()).collect();
        Subgroup { parent, elements }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&a| other.contains(a))
            .collect();
        Subgroup {
            parent: Arc::clone(&self.parent),
            elements,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements
            .iter()
            .any(|&a| self.parent.elem_order(a) == self.order())
    }
}

/// Conjugates a subgroup: elements `{g^{-1} h g : h in H}` in canonical form.
pub fn conjugate_subgroup(h: &Subgroup, g: usize) -> Subgroup {
    let parent = Arc::clone(h.parent());
    let mut elements: Vec<usize> = h.elements().iter().map(|&a| parent.conj(a, g)).collect();
    elements.sort_unstable();
    Subgroup::new(parent, elements).expect("conjugate of a subgroup is a subgroup")
}

/// All subgroups of `G` in canonical order (by size, then element list).
///
/// Breadth-first closure: start from the trivial subgroup, repeatedly adjoin
/// a missing element and close up, until nothing new appears.
pub fn enumerate_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(Arc::clone(group))];
    let mut frontier = found.clone();
    while let Some(h) = frontier.pop() {
        for g in 1..group.order() {
            if h.contains(g) {
                continue;
            }
            let mut seed = h.elements().to_vec();
            seed.push(g);
            let bigger = Subgroup::closure(Arc::clone(group), &seed);
            if !found.contains(&bigger) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    found.sort();
    found
}

/// Left cosets `{hK : h in H}` sorted by least element; each coset sorted.
pub fn left_cosets(h: &Subgroup, k: &Subgroup) -> Vec<Vec<usize>> {
    let parent = h.parent();
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; parent.order()];
    for &a in h.elements() {
        if seen[a] {
            continue;
        }
        let mut coset: Vec<usize> = k.elements().iter().map(|&b| parent.mul(a, b)).collect();
        coset.sort_unstable();
        for &c in &coset {
            seen[c] = true;
        }
        cosets.push(coset);
    }
    cosets.sort();
    cosets
}

/// The full subgroup lattice of a group, with containment and conjugation
/// precomputed over indices into the canonical subgroup list.
#[derive(Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    leq: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn new(group: Arc<FiniteGroup>) -> Arc<Self> {
        let subgroups = enumerate_subgroups(&group);
        let count = subgroups.len();
        let mut leq = vec![vec![false; count]; count];
        for (k, sk) in subgroups.iter().enumerate() {
            for (h, sh) in subgroups.iter().enumerate() {
                leq[k][h] = sk.is_contained_in(sh);
            }
        }
        Arc::new(SubgroupLattice {
            group,
            subgroups,
            leq,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn subgroup(&self, k: usize) -> &Subgroup {
        &self.subgroups[k]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn leq(&self, k: usize, h: usize) -> bool {
        self.leq[k][h]
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn full_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn index_of(&self, s: &Subgroup) -> usize {
        self.subgroups
            .iter()
            .position(|t| t == s)
            .expect("subgroup of the same group is always in the lattice")
    }

    pub fn index_of_elements(&self, elements: &[usize]) -> Option<usize> {
        self.subgroups.iter().position(|t| t.elements() == elements)
    }

    pub fn intersect_index(&self, k: usize, h: usize) -> usize {
        let meet = self.subgroups[k].intersect(&self.subgroups[h]);
        self.index_of(&meet)
    }

    pub fn conj_index(&self, k: usize, g: usize) -> usize {
        let conj = conjugate_subgroup(&self.subgroups[k], g);
        self.index_of(&conj)
    }

    /// All strictly comparable pairs `(k, h)` with `K < H` (as indices).
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..self.count() {
            for h in 0..self.count() {
                if k != h && self.leq[k][h] {
                    out.push((k, h));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Display name: `e` for the trivial subgroup, the group name for the
    /// full one, `C<n>` for a unique cyclic subgroup of its order, otherwise
    /// a minimal generator list like `<s^2>` or `<(12),(13)>`.
    pub fn name(&self, k: usize) -> String {
        if k == self.trivial_index() {
            return "e".to_string();
        }
        if k == self.full_index() {
            return self.group.name().to_string();
        }
        let s = &self.subgroups[k];
        let same_order = self
            .subgroups
            .iter()
            .filter(|t| t.order() == s.order())
            .count();
        if same_order == 1 && s.is_cyclic() {
            return format!("C{}", s.order());
        }
        format!(
            "<{}>",
            self.minimal_generators(k)
                .iter()
                .map(|&a| self.group.elem_name(a).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }

    fn minimal_generators(&self, k: usize) -> Vec<usize> {
        let target = &self.subgroups[k];
        let nontrivial: Vec<usize> = target
            .elements()
            .iter()
            .copied()
            .filter(|&a| a != self.group.identity())
            .collect();
        for &a in &nontrivial {
            if &Subgroup::closure(Arc::clone(&self.group), &[a]) == target {
                return vec![a];
            }
        }
        for (pos, &a) in nontrivial.iter().enumerate() {
            for &b in &nontrivial[pos + 1..] {
                if &Subgroup::closure(Arc::clone(&self.group), &[a, b]) == target {
                    return vec![a, b];
                }
            }
        }
        // every group here has rank <= 2, but fall back to all elements
        nontrivial
    }

    /// Resolves a subgroup name as produced by [`SubgroupLattice::name`],
    /// plus the aliases `G` (full group) and explicit `C<n>` requests, which
    /// error when several subgroups match.
    pub fn parse(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if text == "e" {
            return Ok(self.trivial_index());
        }
        if text == "G" || text == self.group.name() {
            return Ok(self.full_index());
        }
        if let Some(inner) = text.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
            // split on commas outside parentheses: element names like (e,s)
            // contain commas of their own
            let mut parts: Vec<String> = Vec::new();
            let mut depth = 0usize;
            let mut current = String::new();
            for c in inner.chars() {
                match c {
                    '(' => {
                        depth += 1;
                        current.push(c);
                    }
                    ')' => {
                        depth = depth.saturating_sub(1);
                        current.push(c);
                    }
                    ',' if depth == 0 => {
                        parts.push(std::mem::take(&mut current));
                    }
                    _ => current.push(c),
                }
            }
            parts.push(current);
            let mut seed = Vec::new();
            for part in &parts {
                let part = part.trim();
                let a = self.group.elem_by_name(part).ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown element {:?} of group {}",
                        part,
                        self.group.name()
                    ))
                })?;
                seed.push(a);
            }
            let sub = Subgroup::closure(Arc::clone(&self.group), &seed);
            return Ok(self.index_of(&sub));
        }
        if let Some(n) = text.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
            let matches: Vec<usize> = (0..self.count())
                .filter(|&k| self.subgroups[k].order() == n && self.subgroups[k].is_cyclic())
                .collect();
            return match matches.as_slice() {
                [] => Err(Error::Parse(format!(
                    "no cyclic subgroup of order {n} in {}",
                    self.group.name()
                ))),
                [only] => Ok(*only),
                many => Err(Error::Parse(format!(
                    "ambiguous subgroup C{n} in {}: candidates {}",
                    self.group.name(),
                    many.iter()
                        .map(|&k| self.name(k))
                        .collect::<Vec<_>>()
                        .join(", ")
                ))),
            };
        }
        Err(Error::Parse(format!(
            "cannot parse subgroup {:?} of {}",
            text,
            self.group.name()
        )))
    }
}
