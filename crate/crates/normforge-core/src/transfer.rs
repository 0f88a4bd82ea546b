//! Transfer systems and indexing systems on a finite group.
//!
//! A transfer system is a refinement of the subgroup lattice that is
//! reflexive, closed under conjugation, composition (transitivity), and
//! restriction (`K -> H` and `H' <= H` force `K n H' -> H'`). Reflexive
//! pairs are implicit and never stored: the pair set holds only strict
//! relations `(K, H)` with `K < H`, as indices into the canonical subgroup
//! list of a [`SubgroupLattice`].
//!
//! Indexing systems record the equivalent data as admissible orbit types
//! per subgroup; the two conversions here are mutually inverse.

use crate::group::SubgroupLattice;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A transfer system: strict pairs `(K, H)` over a subgroup lattice.
#[derive(Debug, Clone)]
pub struct TransferSystem {
    lattice: Arc<SubgroupLattice>,
    pairs: BTreeSet<(usize, usize)>,
}

impl PartialEq for TransferSystem {
    fn eq(&self, other: &Self) -> bool {
        self.pairs == other.pairs
    }
}
impl Eq for TransferSystem {}
impl PartialOrd for TransferSystem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for TransferSystem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.pairs.len(), &self.pairs).cmp(&(other.pairs.len(), &other.pairs))
    }
}

fn check_pairs(lattice: &SubgroupLattice, pairs: &BTreeSet<(usize, usize)>) -> Result<()> {
    for &(k, h) in pairs {
        if k >= lattice.count() || h >= lattice.count() {
            return Err(Error::InvalidTransferPair(format!(
                "subgroup index out of range in ({k},{h})"
            )));
        }
        if !lattice.leq(k, h) {
            return Err(Error::InvalidTransferPair(format!(
                "{} is not a subgroup of {}",
                lattice.name(k),
                lattice.name(h)
            )));
        }
    }
    Ok(())
}

/// Strips reflexive pairs; errors when some `K` is not contained in its `H`.
fn normalize_pairs(
    lattice: &SubgroupLattice,
    pairs: &BTreeSet<(usize, usize)>,
) -> Result<BTreeSet<(usize, usize)>> {
    check_pairs(lattice, pairs)?;
    Ok(pairs.iter().copied().filter(|(k, h)| k != h).collect())
}

impl TransferSystem {
    /// Builds a transfer system from a pair set, verifying all axioms.
    pub fn new(lattice: Arc<SubgroupLattice>, pairs: BTreeSet<(usize, usize)>) -> Result<Self> {
        if !is_transfer_system(&lattice, &pairs)? {
            return Err(Error::InvalidTransferPair(
                "pair set violates the transfer-system axioms".into(),
            ));
        }
        let pairs = normalize_pairs(&lattice, &pairs)?;
        Ok(TransferSystem { lattice, pairs })
    }

    pub fn trivial(lattice: Arc<SubgroupLattice>) -> Self {
        TransferSystem {
            lattice,
            pairs: BTreeSet::new(),
        }
    }

    pub fn complete(lattice: Arc<SubgroupLattice>) -> Self {
        let pairs = lattice.comparable_pairs().into_iter().collect();
        TransferSystem { lattice, pairs }
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// The stored strict pairs, sorted.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    /// Relation including the implicit reflexive pairs.
    pub fn admits(&self, k: usize, h: usize) -> bool {
        k == h || self.pairs.contains(&(k, h))
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.len() == self.lattice.comparable_pairs().len()
    }

    pub fn refines(&self, other: &TransferSystem) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// Serializes as `{"group": name, "pairs": [[K,H], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.lattice.group().name(),
            "pairs": self.pairs.iter().collect::<Vec<_>>(),
        })
    }

    pub fn from_json(lattice: Arc<SubgroupLattice>, value: &serde_json::Value) -> Result<Self> {
        let group = value
            .get("group")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse("transfer system JSON needs a group name".into()))?;
        if group != lattice.group().name() {
            return Err(Error::Mismatch(format!(
                "transfer system is for {group}, lattice is for {}",
                lattice.group().name()
            )));
        }
        let pairs: Vec<(usize, usize)> = serde_json::from_value(
            value
                .get("pairs")
                .cloned()
                .ok_or_else(|| Error::Parse("transfer system JSON needs pairs".into()))?,
        )?;
        TransferSystem::new(lattice, pairs.into_iter().collect())
    }

    /// Human-readable pair list like `{e->C2, C2->C4}`.
    pub fn describe(&self) -> String {
        let body = self
            .pairs
            .iter()
            .map(|&(k, h)| format!("{}->{}", self.lattice.name(k), self.lattice.name(h)))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{{{body}}}")
    }
}

/// Checks the four transfer-system axioms for a pair set.
///
/// Reflexive pairs in the input are tolerated and ignored. Errors only when
/// a pair is not a containment at all.
pub fn is_transfer_system(
    lattice: &Arc<SubgroupLattice>,
    pairs: &BTreeSet<(usize, usize)>,
) -> Result<bool> {
    let pairs = normalize_pairs(lattice, pairs)?;
    let admits = |k: usize, h: usize| k == h || pairs.contains(&(k, h));
    let order = lattice.group().order();
    for &(k, h) in &pairs {
        // conjugation closure
        for g in 0..order {
            if !admits(lattice.conj_index(k, g), lattice.conj_index(h, g)) {
                return Ok(false);
            }
        }
        // composition (transitivity)
        for l in 0..lattice.count() {
            if admits(h, l) && !admits(k, l) {
                return Ok(false);
            }
        }
        // restriction to any subgroup of H
        for hp in 0..lattice.count() {
            if lattice.leq(hp, h) && !admits(lattice.intersect_index(k, hp), hp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The least transfer system containing the seed pairs: saturates under
/// conjugation, composition, and restriction until a fixed point.
pub fn generate_transfer_system(
    lattice: &Arc<SubgroupLattice>,
    seeds: &BTreeSet<(usize, usize)>,
) -> Result<TransferSystem> {
    let mut pairs = normalize_pairs(lattice, seeds)?;
    let order = lattice.group().order();
    loop {
        let mut grown = pairs.clone();
        for &(k, h) in &pairs {
            for g in 0..order {
                let (ck, ch) = (lattice.conj_index(k, g), lattice.conj_index(h, g));
                if ck != ch {
                    grown.insert((ck, ch));
                }
            }
            for &(k2, h2) in &pairs {
                if h == k2 && k != h2 {
                    grown.insert((k, h2));
                }
            }
            for hp in 0..lattice.count() {
                if lattice.leq(hp, h) {
                    let meet = lattice.intersect_index(k, hp);
                    if meet != hp {
                        grown.insert((meet, hp));
                    }
                }
            }
        }
        if grown == pairs {
            break;
        }
        pairs = grown;
    }
    debug_assert!(is_transfer_system(lattice, &pairs).unwrap());
    Ok(TransferSystem {
        lattice: Arc::clone(lattice),
        pairs,
    })
}

/// Splits on commas and semicolons outside angle brackets, so generator
/// names like `<s^2,t>` survive. The `>` of an arrow `->` never closes a
/// bracket because it follows a dash.
fn split_terms(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '<' => {
                depth += 1;
                current.push(c);
            }
            '>' => {
                if !current.ends_with('-') {
                    depth = depth.saturating_sub(1);
                }
                current.push(c);
            }
            ',' | ';' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    parts.push(current.trim().to_string());
    parts.retain(|p| !p.is_empty());
    parts
}

/// Parses a transfer-system expression: the word `trivial` or `complete`,
/// or a list of `K->H` generator pairs separated by commas or semicolons
/// with subgroup names as produced by [`SubgroupLattice::name`]. Generator
/// pairs are saturated into the least transfer system containing them.
pub fn parse_transfer_system(
    lattice: &Arc<SubgroupLattice>,
    text: &str,
) -> Result<TransferSystem> {
    match text.trim() {
        "trivial" => Ok(TransferSystem::trivial(Arc::clone(lattice))),
        "complete" => Ok(TransferSystem::complete(Arc::clone(lattice))),
        expr => {
            let mut seeds = BTreeSet::new();
            for chunk in split_terms(expr) {
                let (k, h) = chunk
                    .split_once("->")
                    .ok_or_else(|| Error::Parse(format!("expected K->H, got {chunk:?}")))?;
                seeds.insert((lattice.parse(k.trim())?, lattice.parse(h.trim())?));
            }
            if seeds.is_empty() {
                return Err(Error::Parse("empty transfer-system expression".into()));
            }
            generate_transfer_system(lattice, &seeds)
        }
    }
}

/// All transfer systems on the lattice, sorted by pair count then pair list.
///
/// Small lattices (at most 8 comparable strict pairs) are enumerated by
/// filtering every subset through the axioms; larger ones by saturating
/// every subset and deduplicating, which yields the same set because every
/// transfer system is its own saturation.
pub fn enumerate_transfer_systems(lattice: &Arc<SubgroupLattice>) -> Vec<TransferSystem> {
    let comparable = lattice.comparable_pairs();
    let bits = comparable.len();
    assert!(bits <= 20, "subgroup lattice too large to enumerate");
    let mut out: Vec<TransferSystem> = Vec::new();
    for mask in 0u32..(1u32 << bits) {
        let subset: BTreeSet<(usize, usize)> = comparable
            .iter()
            .enumerate()
            .filter(|(pos, _)| mask & (1 << pos) != 0)
            .map(|(_, &pair)| pair)
            .collect();
        if bits <= 8 {
            if is_transfer_system(lattice, &subset).expect("comparable pairs are valid") {
                out.push(TransferSystem {
                    lattice: Arc::clone(lattice),
                    pairs: subset,
                });
            }
        } else {
            let saturated =
                generate_transfer_system(lattice, &subset).expect("comparable pairs are valid");
            if !out.contains(&saturated) {
                out.push(saturated);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn ensure_same_lattice(t1: &TransferSystem, t2: &TransferSystem) -> Result<()> {
    if !Arc::ptr_eq(&t1.lattice, &t2.lattice)
        && t1.lattice.group().name() != t2.lattice.group().name()
    {
        return Err(Error::Mismatch(format!(
            "transfer systems over {} and {}",
            t1.lattice.group().name(),
            t2.lattice.group().name()
        )));
    }
    Ok(())
}

/// Lattice meet: pair intersection (axiom-stable, no saturation needed).
pub fn meet(t1: &TransferSystem, t2: &TransferSystem) -> Result<TransferSystem> {
    ensure_same_lattice(t1, t2)?;
    let pairs: BTreeSet<(usize, usize)> =
        t1.pairs.intersection(&t2.pairs).copied().collect();
    debug_assert!(is_transfer_system(&t1.lattice, &pairs).unwrap());
    Ok(TransferSystem {
        lattice: Arc::clone(&t1.lattice),
        pairs,
    })
}

/// Lattice join: saturation of the pair union.
pub fn join(t1: &TransferSystem, t2: &TransferSystem) -> Result<TransferSystem> {
    ensure_same_lattice(t1, t2)?;
    let union: BTreeSet<(usize, usize)> = t1.pairs.union(&t2.pairs).copied().collect();
    generate_transfer_system(&t1.lattice, &union)
}

/// An indexing system: per subgroup `H`, the admissible orbit types `H/K`,
/// stored as the set of subgroup indices `K` (always including `H` itself).
#[derive(Debug, Clone)]
pub struct IndexingSystem {
    lattice: Arc<SubgroupLattice>,
    admissible: Vec<BTreeSet<usize>>,
}

impl PartialEq for IndexingSystem {
    fn eq(&self, other: &Self) -> bool {
        self.admissible == other.admissible
    }
}
impl Eq for IndexingSystem {}

impl IndexingSystem {
    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// The admissible stabilizers for orbits of `H` (index `h`).
    pub fn admissible_at(&self, h: usize) -> &BTreeSet<usize> {
        &self.admissible[h]
    }

    /// Whether the orbit type `H/K` is admissible.
    pub fn orbit_admissible(&self, h: usize, k: usize) -> bool {
        self.admissible[h].contains(&k)
    }
}

/// A finite `H`-set recorded by its orbit decomposition: a multiset of
/// stabilizers `K_i <= H`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HSet {
    pub h: usize,
    pub stabilizers: Vec<usize>,
}

impl HSet {
    pub fn new(lattice: &SubgroupLattice, h: usize, mut stabilizers: Vec<usize>) -> Result<Self> {
        for &k in &stabilizers {
            if !lattice.leq(k, h) {
                return Err(Error::InvalidSubgroup(format!(
                    "stabilizer {} not contained in {}",
                    lattice.name(k),
                    lattice.name(h)
                )));
            }
        }
        stabilizers.sort_unstable();
        Ok(HSet { h, stabilizers })
    }

    /// Total size of the underlying set: sum of the orbit lengths `[H:K_i]`.
    pub fn size(&self, lattice: &SubgroupLattice) -> usize {
        let h_order = lattice.subgroup(self.h).order();
        self.stabilizers
            .iter()
            .map(|&k| h_order / lattice.subgroup(k).order())
            .sum()
    }
}

/// The indexing system of a transfer system: `H/K` is admissible exactly
/// when `K -> H` (or `K = H`).
pub fn transfer_to_indexing(t: &TransferSystem) -> IndexingSystem {
    let lattice = Arc::clone(&t.lattice);
    let admissible = (0..lattice.count())
        .map(|h| {
            (0..lattice.count())
                .filter(|&k| lattice.leq(k, h) && t.admits(k, h))
                .collect()
        })
        .collect();
    IndexingSystem { lattice, admissible }
}

/// Reads the transfer system back off an indexing system's orbit types.
pub fn indexing_to_transfer(i: &IndexingSystem) -> Result<TransferSystem> {
    let pairs: BTreeSet<(usize, usize)> = (0..i.lattice.count())
        .flat_map(|h| i.admissible[h].iter().map(move |&k| (k, h)))
        .filter(|(k, h)| k != h)
        .collect();
    if !is_transfer_system(&i.lattice, &pairs)? {
        return Err(Error::InvalidTransferPair(
            "indexing system violates the closure invariants".into(),
        ));
    }
    Ok(TransferSystem {
        lattice: Arc::clone(&i.lattice),
        pairs,
    })
}

/// Whether every orbit type of the `H`-set is admissible in the indexing
/// system.
pub fn hset_in_indexing(i: &IndexingSystem, t: &HSet) -> bool {
    t.stabilizers
        .iter()
        .all(|&k| i.orbit_admissible(t.h, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{preset, symmetric_3, SubgroupLattice};

    fn lattice_of(name: &str) -> Arc<SubgroupLattice> {
        SubgroupLattice::new(preset(name).unwrap())
    }

    fn pairs(list: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        list.iter().copied().collect()
    }

    #[test]
    fn c4_axiom_checks() {
        let lat = lattice_of("C4");
        // subgroup order: 0 = e, 1 = C2, 2 = C4
        assert!(is_transfer_system(&lat, &pairs(&[])).unwrap());
        assert!(is_transfer_system(&lat, &pairs(&[(0, 1)])).unwrap());
        assert!(is_transfer_system(&lat, &pairs(&[(1, 2)])).unwrap());
        // e -> C4 alone fails: restriction along C2 <= C4 forces e -> C2
        assert!(!is_transfer_system(&lat, &pairs(&[(0, 2)])).unwrap());
        // non-containment errors out
        assert!(is_transfer_system(&lat, &pairs(&[(2, 1)])).is_err());
    }

    #[test]
    fn specs_parse_to_systems() {
        assert_eq!(
            split_terms("e->C2, C2->C4"),
            vec!["e->C2".to_string(), "C2->C4".to_string()]
        );
        assert_eq!(split_terms("<s^2,t>->C4"), vec!["<s^2,t>->C4".to_string()]);
        assert_eq!(split_terms(" e->C2 ; "), vec!["e->C2".to_string()]);

        let lat = lattice_of("C4");
        assert!(parse_transfer_system(&lat, "trivial")
            .unwrap()
            .pairs()
            .is_empty());
        assert!(parse_transfer_system(&lat, "complete").unwrap().is_complete());
        let t = parse_transfer_system(&lat, "e->C4").unwrap();
        let c2 = (0..lat.count())
            .find(|&k| lat.subgroup(k).order() == 2)
            .unwrap();
        assert!(t.admits(lat.trivial_index(), lat.full_index()));
        assert!(t.admits(lat.trivial_index(), c2));
        assert!(!t.admits(c2, lat.full_index()));

        assert!(parse_transfer_system(&lat, "C4->e").is_err());
        assert!(parse_transfer_system(&lat, "nonsense").is_err());
        assert!(parse_transfer_system(&lat, " , ").is_err());
    }

    #[test]
    fn saturation_examples() {
        let lat = lattice_of("C4");
        let t = generate_transfer_system(&lat, &pairs(&[])).unwrap();
        assert!(t.pairs().is_empty());
        let t = generate_transfer_system(&lat, &pairs(&[(0, 2)])).unwrap();
        assert_eq!(t.pairs(), &pairs(&[(0, 1), (0, 2)]));

        // Klein group: saturating {e -> G} adds the three restrictions
        // e -> C2 but cannot force any C2 -> G
        let klein = lattice_of("C2xC2");
        let full = klein.full_index();
        let t = generate_transfer_system(&klein, &pairs(&[(0, full)])).unwrap();
        let want: BTreeSet<(usize, usize)> =
            (1..klein.count()).map(|h| (0, h)).collect();
        assert_eq!(t.pairs(), &want);
        assert!(!t.is_complete());
    }

    /// Independent oracle: re-state the axioms from scratch and filter all
    /// subsets, without going through `is_transfer_system`.
    fn oracle_count(lat: &Arc<SubgroupLattice>) -> usize {
        let comparable = lat.comparable_pairs();
        let bits = comparable.len();
        let mut count = 0usize;
        'mask: for mask in 0u32..(1 << bits) {
            let has = |k: usize, h: usize| {
                k == h
                    || comparable
                        .iter()
                        .position(|&p| p == (k, h))
                        .is_some_and(|pos| mask & (1 << pos) != 0)
            };
            for (pos, &(k, h)) in comparable.iter().enumerate() {
                if mask & (1 << pos) == 0 {
                    continue;
                }
                for g in 0..lat.group().order() {
                    if !has(lat.conj_index(k, g), lat.conj_index(h, g)) {
                        continue 'mask;
                    }
                }
                for l in 0..lat.count() {
                    if has(h, l) && !has(k, l) {
                        continue 'mask;
                    }
                }
                for hp in 0..lat.count() {
                    if lat.leq(hp, h) && !has(lat.intersect_index(k, hp), hp) {
                        continue 'mask;
                    }
                }
            }
            count += 1;
        }
        count
    }

    #[test]
    fn enumeration_counts_match_oracle() {
        for (name, expect) in [("C2", 2), ("C3", 2), ("C4", 5), ("C8", 14), ("C2xC3", 10)] {
            let lat = lattice_of(name);
            let systems = enumerate_transfer_systems(&lat);
            assert_eq!(systems.len(), expect, "count for {name}");
            assert_eq!(oracle_count(&lat), expect, "oracle count for {name}");
            for t in &systems {
                assert!(is_transfer_system(&lat, t.pairs()).unwrap());
            }
        }
        // S3 exercises the saturate-and-dedup path (9 comparable pairs)
        let s3 = SubgroupLattice::new(symmetric_3());
        assert_eq!(s3.comparable_pairs().len(), 9);
        let systems = enumerate_transfer_systems(&s3);
        assert_eq!(systems.len(), oracle_count(&s3));
        for t in &systems {
            assert!(is_transfer_system(&s3, t.pairs()).unwrap());
        }
    }

    #[test]
    fn meet_and_join_behave_like_a_lattice() {
        let lat = lattice_of("C4");
        let systems = enumerate_transfer_systems(&lat);
        let complete = TransferSystem::complete(Arc::clone(&lat));
        for t in &systems {
            assert_eq!(&meet(t, t).unwrap(), t);
            assert_eq!(&meet(&complete, t).unwrap(), t);
            assert_eq!(&join(&TransferSystem::trivial(Arc::clone(&lat)), t).unwrap(), t);
            for u in &systems {
                let m = meet(t, u).unwrap();
                let j = join(t, u).unwrap();
                assert!(systems.contains(&m));
                assert!(systems.contains(&j));
                assert!(m.refines(t) && m.refines(u));
                assert!(t.refines(&j) && u.refines(&j));
            }
        }
        // join of e->C2 and C2->C4 contains e->C4 by composition
        let a = generate_transfer_system(&lat, &pairs(&[(0, 1)])).unwrap();
        let b = generate_transfer_system(&lat, &pairs(&[(1, 2)])).unwrap();
        let j = join(&a, &b).unwrap();
        assert!(j.admits(0, 2));
    }

    #[test]
    fn indexing_round_trip_on_all_groups() {
        for name in ["C2", "C3", "C4", "C2xC2", "C2xC3", "S3"] {
            let lat = lattice_of(name);
            for t in enumerate_transfer_systems(&lat) {
                let idx = transfer_to_indexing(&t);
                let back = indexing_to_transfer(&idx).unwrap();
                assert_eq!(back, t, "round trip over {name}");
            }
        }
    }

    #[test]
    fn indexing_examples_on_c4() {
        let lat = lattice_of("C4");
        let t = generate_transfer_system(&lat, &pairs(&[(0, 1)])).unwrap();
        let idx = transfer_to_indexing(&t);
        // at C2 (index 1): C2/C2 and C2/e admissible
        let want: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert_eq!(idx.admissible_at(1), &want);
        // at C4 (index 2): only C4/C4
        assert_eq!(idx.admissible_at(2).iter().copied().collect::<Vec<_>>(), vec![2]);

        let trivial = TransferSystem::trivial(Arc::clone(&lat));
        let idx = transfer_to_indexing(&trivial);
        for h in 0..lat.count() {
            assert_eq!(idx.admissible_at(h).iter().copied().collect::<Vec<_>>(), vec![h]);
        }
        let complete = TransferSystem::complete(Arc::clone(&lat));
        let idx = transfer_to_indexing(&complete);
        for h in 0..lat.count() {
            let want: BTreeSet<usize> = (0..lat.count()).filter(|&k| lat.leq(k, h)).collect();
            assert_eq!(idx.admissible_at(h), &want);
        }
    }

    #[test]
    fn hset_membership() {
        let lat = lattice_of("C4");
        let t = generate_transfer_system(&lat, &pairs(&[(0, 1)])).unwrap();
        let idx = transfer_to_indexing(&t);
        // H/H is always admissible
        for h in 0..lat.count() {
            let hh = HSet::new(&lat, h, vec![h]).unwrap();
            assert!(hset_in_indexing(&idx, &hh));
        }
        // C4/C2 against {e->C2} is not admissible
        let t44 = HSet::new(&lat, 2, vec![1]).unwrap();
        assert!(!hset_in_indexing(&idx, &t44));
        // C2/e + C2/C2 against {e->C2} is admissible
        let mix = HSet::new(&lat, 1, vec![0, 1]).unwrap();
        assert!(hset_in_indexing(&idx, &mix));
        assert_eq!(mix.size(&lat), 3);
    }

    #[test]
    fn json_round_trip() {
        let lat = lattice_of("C4");
        for t in enumerate_transfer_systems(&lat) {
            let json = t.to_json();
            let back = TransferSystem::from_json(Arc::clone(&lat), &json).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn conjugation_matters_on_s3() {
        let s3 = SubgroupLattice::new(symmetric_3());
        // the three reflections are conjugate; a transfer system containing
        // e -> <(12)> must contain e -> <(13)> and e -> <(23)>
        let g12 = s3.group().elem_by_name("(12)").unwrap();
        let refl = s3
            .index_of_elements(&[0, g12])
            .expect("reflection subgroup");
        let single = pairs(&[(0, refl)]);
        assert!(!is_transfer_system(&s3, &single).unwrap());
        let t = generate_transfer_system(&s3, &single).unwrap();
        let refl_count = t
            .pairs()
            .iter()
            .filter(|&&(k, h)| k == 0 && s3.subgroup(h).order() == 2)
            .count();
        assert_eq!(refl_count, 3);
    }
}
