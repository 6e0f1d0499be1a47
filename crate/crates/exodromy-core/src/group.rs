//! Finite permutation groups, their subgroups and coset actions.
//!
//! Groups are given by permutation generators on `0..degree`. Elements are
//! enumerated into a canonical sorted list (identity first), and all other
//! structure — subgroups, conjugacy classes of subgroups, normalizers, Weyl
//! groups, coset spaces — is computed from that list by exhaustion. This is
//! deliberate: the groups in scope are tiny and exhaustive computation keeps
//! every downstream check decidable.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Perm;

/// Default cap on group order for subgroup enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 360;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    GroupTooLarge { order: usize, bound: usize },
    NotASubgroup,
    InvalidGenerator,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::GroupTooLarge { order, bound } => {
                write!(f, "group order {order} exceeds bound {bound}")
            }
            GroupError::NotASubgroup => write!(f, "member set is not a subgroup"),
            GroupError::InvalidGenerator => write!(f, "generator is not a bijection"),
        }
    }
}

/// Index of an element in a group's canonical element list.
pub type ElemId = usize;

/// A finite group of permutations on `degree` points.
///
/// `elements` is sorted lexicographically by image array, which places the
/// identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    name: Option<String>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, GroupError> {
        Self::new_bounded(degree, generators, DEFAULT_ORDER_BOUND)
    }

    pub fn new_bounded(
        degree: usize,
        generators: Vec<Perm>,
        bound: usize,
    ) -> Result<PermGroup, GroupError> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::InvalidGenerator);
        }
        let mut elements: BTreeSet<Perm> = BTreeSet::new();
        elements.insert(Perm::identity(degree));
        let mut queue: Vec<Perm> = generators.clone();
        while let Some(p) = queue.pop() {
            if elements.contains(&p) {
                continue;
            }
            elements.insert(p.clone());
            for q in elements.iter() {
                queue.push(p.compose(q));
                queue.push(q.compose(&p));
            }
            if elements.len() > bound {
                return Err(GroupError::GroupTooLarge {
                    order: elements.len(),
                    bound,
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: elements.into_iter().collect(),
            name: None,
        })
    }

    pub fn named(mut self, name: &str) -> PermGroup {
        self.name = Some(String::from(name));
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &Perm {
        &self.elements[id]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn elem_id(&self, p: &Perm) -> Option<ElemId> {
        self.elements.binary_search(p).ok()
    }

    /// `a * b`: apply `b` first, then `a`.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let p = self.elements[a].compose(&self.elements[b]);
        self.elem_id(&p).expect("group is closed")
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.elem_id(&self.elements[a].inverse()).expect("group is closed")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Generator ids inside the canonical element list.
    pub fn generator_ids(&self) -> Vec<ElemId> {
        self.generators
            .iter()
            .map(|g| self.elem_id(g).expect("generator is an element"))
            .collect()
    }

    /// The subgroup consisting of the whole group.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: alloc::vec![self.identity()],
        }
    }

    /// Closure of a member set under the group law, as a subgroup.
    pub fn generated_subgroup(&self, seed: &[ElemId]) -> Subgroup {
        let mut members: BTreeSet<ElemId> = BTreeSet::new();
        members.insert(self.identity());
        let mut queue: Vec<ElemId> = seed.to_vec();
        while let Some(a) = queue.pop() {
            if members.contains(&a) {
                continue;
            }
            members.insert(a);
            let snapshot: Vec<ElemId> = members.iter().copied().collect();
            for b in snapshot {
                queue.push(self.mul(a, b));
                queue.push(self.mul(b, a));
            }
            queue.push(self.inv(a));
        }
        Subgroup {
            members: members.into_iter().collect(),
        }
    }

    /// The group as a group acting on itself by left translation
    /// (regular representation), used when a faithful small-degree
    /// action is not already at hand.
    pub fn regular_representation(&self) -> PermGroup {
        let n = self.order();
        let generators = self
            .generator_ids()
            .iter()
            .map(|&g| {
                Perm::new((0..n).map(|x| self.mul(g, x)).collect()).expect("translation is a bijection")
            })
            .collect();
        PermGroup::new_bounded(n, generators, n).expect("regular representation is closed")
    }
}

/// A subgroup, stored as a sorted list of element ids of its parent group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<ElemId>,
}

impl Subgroup {
    pub fn from_members(group: &PermGroup, members: Vec<ElemId>) -> Result<Subgroup, GroupError> {
        let set: BTreeSet<ElemId> = members.into_iter().collect();
        if !set.contains(&group.identity()) {
            return Err(GroupError::NotASubgroup);
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup {
            members: set.into_iter().collect(),
        })
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, elem: ElemId) -> bool {
        self.members.binary_search(&elem).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// `g H g^{-1}` as a subgroup.
    pub fn conjugate(&self, group: &PermGroup, g: ElemId) -> Subgroup {
        let ginv = group.inv(g);
        let mut members: Vec<ElemId> = self
            .members
            .iter()
            .map(|&h| group.mul(group.mul(g, h), ginv))
            .collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// Normalizer of this subgroup in the parent group.
    pub fn normalizer(&self, group: &PermGroup) -> Subgroup {
        let members: Vec<ElemId> = (0..group.order())
            .filter(|&g| self.conjugate(group, g) == *self)
            .collect();
        Subgroup { members }
    }
}

/// Enumerates all subgroups of `group` in canonical order
/// (by order, then lexicographically by member list).
pub fn enumerate_subgroups(group: &PermGroup) -> Result<Vec<Subgroup>, GroupError> {
    enumerate_subgroups_bounded(group, DEFAULT_ORDER_BOUND)
}

pub fn enumerate_subgroups_bounded(
    group: &PermGroup,
    bound: usize,
) -> Result<Vec<Subgroup>, GroupError> {
    if group.order() > bound {
        return Err(GroupError::GroupTooLarge {
            order: group.order(),
            bound,
        });
    }
    // breadth-first closure over cyclic extensions: repeatedly adjoin a
    // single element to a known subgroup and close up
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut queue: Vec<Subgroup> = alloc::vec![group.trivial_subgroup()];
    while let Some(sub) = queue.pop() {
        if found.contains(&sub) {
            continue;
        }
        for g in 0..group.order() {
            if sub.contains(g) {
                continue;
            }
            let mut seed = sub.members().to_vec();
            seed.push(g);
            let bigger = group.generated_subgroup(&seed);
            if !found.contains(&bigger) {
                queue.push(bigger);
            }
        }
        found.insert(sub);
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// The poset of conjugacy classes of subgroups, ordered by subconjugacy:
/// `[H] <= [K]` iff some conjugate of `H` is contained in `K`.
///
/// With `opposite` set the comparison is reversed; that orientation is the
/// stratifying poset of stabilizer stratifications (smaller stabilizers sit
/// higher, i.e. are more generic).
#[derive(Debug, Clone)]
pub struct ConjClassPoset {
    classes: Vec<Vec<Subgroup>>,
    /// `leq[a][b]` in the plain (subconjugacy) orientation.
    leq: Vec<Vec<bool>>,
    opposite: bool,
}

impl ConjClassPoset {
    pub fn classes(&self) -> &[Vec<Subgroup>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_opposite(&self) -> bool {
        self.opposite
    }

    /// Class index of a subgroup, if it is one of the classified subgroups.
    pub fn class_of(&self, sub: &Subgroup) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(sub))
    }

    /// Order relation in this poset's orientation.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        if self.opposite {
            self.leq[b][a]
        } else {
            self.leq[a][b]
        }
    }

    pub fn opposite(&self) -> ConjClassPoset {
        ConjClassPoset {
            classes: self.classes.clone(),
            leq: self.leq.clone(),
            opposite: !self.opposite,
        }
    }

    /// Representative subgroup (canonically minimal member) of a class.
    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.classes[class][0]
    }
}

pub fn conjugacy_class_poset(group: &PermGroup) -> Result<ConjClassPoset, GroupError> {
    let subgroups = enumerate_subgroups(group)?;
    let mut classes: Vec<Vec<Subgroup>> = Vec::new();
    for sub in &subgroups {
        if classes.iter().any(|c: &Vec<Subgroup>| c.contains(sub)) {
            continue;
        }
        let mut class: BTreeSet<Subgroup> = BTreeSet::new();
        for g in 0..group.order() {
            class.insert(sub.conjugate(group, g));
        }
        classes.push(class.into_iter().collect());
    }
    let n = classes.len();
    let mut leq = alloc::vec![alloc::vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            // some conjugate of a representative of `a` inside a representative of `b`
            let k = &classes[b][0];
            leq[a][b] = classes[a].iter().any(|h| h.is_subgroup_of(k));
        }
    }
    Ok(ConjClassPoset {
        classes,
        leq,
        opposite: false,
    })
}

/// A finite set with an action of every element of a fixed group.
///
/// `action[e][x]` is `e · x`, indexed by the parent group's element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    size: usize,
    action: Vec<Vec<usize>>,
}

impl GSet {
    pub fn new(group: &PermGroup, size: usize, action: Vec<Vec<usize>>) -> Option<GSet> {
        if action.len() != group.order() || action.iter().any(|row| row.len() != size) {
            return None;
        }
        let gset = GSet { size, action };
        gset.is_valid(group).then_some(gset)
    }

    fn is_valid(&self, group: &PermGroup) -> bool {
        let n = group.order();
        if (0..self.size).any(|x| self.action[group.identity()][x] != x) {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = group.mul(a, b);
                (0..self.size).all(|x| self.act(a, self.act(b, x)) == self.act(ab, x))
            })
        })
    }

    /// The set `0..degree` with the tautological permutation action.
    pub fn natural(group: &PermGroup) -> GSet {
        GSet {
            size: group.degree(),
            action: group
                .elements()
                .iter()
                .map(|p| (0..group.degree()).map(|x| p.apply(x)).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, elem: ElemId, point: usize) -> usize {
        self.action[elem][point]
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.action.iter().map(|row| row[point]).collect();
        set.into_iter().collect()
    }

    pub fn stabilizer(&self, group: &PermGroup, point: usize) -> Subgroup {
        let members: Vec<ElemId> = (0..group.order())
            .filter(|&g| self.act(g, point) == point)
            .collect();
        Subgroup { members }
    }

    pub fn is_transitive(&self) -> bool {
        self.size > 0 && self.orbit(0).len() == self.size
    }
}

/// The coset space `G/H` with its left `G`-action.
///
/// Cosets are sorted member lists, ordered lexicographically; the coset of
/// the identity comes first, so the basepoint `eH` is always point 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    pub subgroup: Subgroup,
    cosets: Vec<Vec<ElemId>>,
    gset: GSet,
}

impl CosetSpace {
    pub fn new(group: &PermGroup, subgroup: &Subgroup) -> CosetSpace {
        let mut cosets: BTreeSet<Vec<ElemId>> = BTreeSet::new();
        for a in 0..group.order() {
            let mut coset: Vec<ElemId> =
                subgroup.members().iter().map(|&h| group.mul(a, h)).collect();
            coset.sort_unstable();
            cosets.insert(coset);
        }
        let cosets: Vec<Vec<ElemId>> = cosets.into_iter().collect();
        let index: BTreeMap<&Vec<ElemId>, usize> =
            cosets.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let action: Vec<Vec<usize>> = (0..group.order())
            .map(|g| {
                cosets
                    .iter()
                    .map(|coset| {
                        let mut moved: Vec<ElemId> =
                            coset.iter().map(|&a| group.mul(g, a)).collect();
                        moved.sort_unstable();
                        index[&moved]
                    })
                    .collect()
            })
            .collect();
        let size = cosets.len();
        CosetSpace {
            subgroup: subgroup.clone(),
            cosets,
            gset: GSet { size, action },
        }
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset `eH`.
    pub fn basepoint(&self) -> usize {
        0
    }

    /// Canonical (minimal) representative of coset `i`.
    pub fn representative(&self, i: usize) -> ElemId {
        self.cosets[i][0]
    }

    pub fn coset_members(&self, i: usize) -> &[ElemId] {
        &self.cosets[i]
    }

    pub fn coset_of(&self, elem: ElemId) -> usize {
        self.cosets
            .iter()
            .position(|c| c.binary_search(&elem).is_ok())
            .expect("cosets partition the group")
    }
}

/// Points of `X` fixed by every element of `H`.
pub fn fixed_points(x: &GSet, h: &Subgroup) -> Vec<usize> {
    (0..x.size())
        .filter(|&p| h.members().iter().all(|&g| x.act(g, p) == p))
        .collect()
}

/// An equivariant map `G/H -> X`, materialized as a full point map on the
/// coset space of `H`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EquivariantMap {
    pub point_map: Vec<usize>,
}

/// All equivariant maps `G/H -> X`, one per element of `X^H`
/// (a map is determined by the image of `eH`).
pub fn equivariant_maps(_group: &PermGroup, h: &CosetSpace, x: &GSet) -> Vec<EquivariantMap> {
    fixed_points(x, &h.subgroup)
        .into_iter()
        .map(|img| EquivariantMap {
            point_map: (0..h.len())
                .map(|c| x.act(h.representative(c), img))
                .collect(),
        })
        .collect()
}

/// `N_G(H)/H` realized as a permutation group on the cosets of `H` in its
/// normalizer, acting by left translation.
pub fn weyl_group(group: &PermGroup, h: &Subgroup) -> Result<PermGroup, GroupError> {
    if !h.members().iter().all(|&m| m < group.order()) {
        return Err(GroupError::NotASubgroup);
    }
    // re-validate membership closure so arbitrary member lists are rejected
    let h = Subgroup::from_members(group, h.members().to_vec())?;
    let normalizer = h.normalizer(group);
    let mut cosets: BTreeSet<Vec<ElemId>> = BTreeSet::new();
    for &n in normalizer.members() {
        let mut coset: Vec<ElemId> = h.members().iter().map(|&m| group.mul(n, m)).collect();
        coset.sort_unstable();
        cosets.insert(coset);
    }
    let cosets: Vec<Vec<ElemId>> = cosets.into_iter().collect();
    let index: BTreeMap<&Vec<ElemId>, usize> =
        cosets.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut perms: BTreeSet<Perm> = BTreeSet::new();
    for &n in normalizer.members() {
        let images: Vec<usize> = cosets
            .iter()
            .map(|coset| {
                let mut moved: Vec<ElemId> = coset.iter().map(|&a| group.mul(n, a)).collect();
                moved.sort_unstable();
                index[&moved]
            })
            .collect();
        perms.insert(Perm::new(images).expect("translation permutes cosets"));
    }
    let generators: Vec<Perm> = perms.into_iter().collect();
    PermGroup::new_bounded(cosets.len(), generators, normalizer.order())
}

/// A display name for a small group, by inspection of its elements:
/// used for Weyl-group loop labels in diagram exports.
pub fn small_group_name(g: &PermGroup) -> String {
    let order = g.order();
    let max_elem_order = (0..order)
        .map(|e| {
            let mut k = 1;
            let mut cur = e;
            while cur != g.identity() {
                cur = g.mul(cur, e);
                k += 1;
            }
            k
        })
        .max()
        .unwrap_or(1);
    match (order, g.is_abelian(), max_elem_order) {
        (1, _, _) => String::from("1"),
        (2, _, _) => String::from("C2"),
        (3, _, _) => String::from("C3"),
        (4, _, 4) => String::from("C4"),
        (4, _, _) => String::from("K"),
        (6, true, _) => String::from("C6"),
        (6, false, _) => String::from("S3"),
        (8, false, 4) => {
            let involutions = (1..order).filter(|&e| g.mul(e, e) == g.identity()).count();
            String::from(if involutions == 5 { "D4" } else { "Q8" })
        }
        (n, true, m) if m == n => alloc::format!("C{n}"),
        (n, _, _) => alloc::format!("G{n}"),
    }
}

// --- built-in groups ---------------------------------------------------

/// Cyclic group of order `n`, acting on an `n`-cycle. The trivial group
/// is generated by the empty set.
pub fn cyclic(n: usize) -> PermGroup {
    let generators = if n <= 1 {
        Vec::new()
    } else {
        let cycle: Vec<usize> = (0..n).collect();
        alloc::vec![Perm::from_cycles(n, &[&cycle]).expect("cycle is valid")]
    };
    PermGroup::new_bounded(n.max(1), generators, n.max(1)).expect("cyclic group is closed")
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let mut generators = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, img) in images.iter_mut().enumerate().take(a.degree()) {
            *img = g.apply(i);
        }
        generators.push(Perm::new(images).expect("embedded generator is a bijection"));
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..b.degree() {
            images[a.degree() + i] = a.degree() + g.apply(i);
        }
        generators.push(Perm::new(images).expect("embedded generator is a bijection"));
    }
    PermGroup::new_bounded(degree, generators, a.order() * b.order())
        .expect("product group is closed")
}

/// The named built-in groups: C2, C3, C4, K4, S3, D4.
pub fn builtin(name: &str) -> Option<PermGroup> {
    let group = match name {
        "C2" => cyclic(2),
        "C3" => cyclic(3),
        "C4" => cyclic(4),
        "K4" => direct_product(&cyclic(2), &cyclic(2)),
        "S3" => {
            let s = Perm::from_cycles(3, &[&[0, 1]]).expect("valid cycle");
            let r = Perm::from_cycles(3, &[&[0, 1, 2]]).expect("valid cycle");
            PermGroup::new_bounded(3, alloc::vec![s, r], 6).expect("S3 is closed")
        }
        "D4" => {
            let r = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).expect("valid cycle");
            let f = Perm::from_cycles(4, &[&[1, 3]]).expect("valid cycle");
            PermGroup::new_bounded(4, alloc::vec![r, f], 8).expect("D4 is closed")
        }
        _ => return None,
    };
    Some(group.named(name))
}

/// Every abelian group of order at most `max_order`, up to isomorphism,
/// as a direct product of cyclic groups of prime power order.
pub fn abelian_groups_up_to(max_order: usize) -> Vec<PermGroup> {
    fn prime_power_partitions(p: usize, exp: u32) -> Vec<Vec<usize>> {
        // partitions of `exp`, each part becoming a cyclic factor of order p^part
        fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return alloc::vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first in (1..=n.min(max)).rev() {
                for rest in partitions(n - first, first) {
                    let mut part = alloc::vec![first];
                    part.extend(rest);
                    out.push(part);
                }
            }
            out
        }
        partitions(exp, exp)
            .into_iter()
            .map(|parts| parts.into_iter().map(|e| p.pow(e)).collect())
            .collect()
    }

    let mut out = Vec::new();
    for order in 1..=max_order {
        // factor the order
        let mut remaining = order;
        let mut factors: Vec<(usize, u32)> = Vec::new();
        let mut p = 2;
        while p * p <= remaining {
            if remaining % p == 0 {
                let mut exp = 0;
                while remaining % p == 0 {
                    remaining /= p;
                    exp += 1;
                }
                factors.push((p, exp));
            }
            p += 1;
        }
        if remaining > 1 {
            factors.push((remaining, 1));
        }
        // combine one partition choice per prime
        let mut combos: Vec<Vec<usize>> = alloc::vec![Vec::new()];
        for &(p, exp) in &factors {
            let choices = prime_power_partitions(p, exp);
            let mut next = Vec::new();
            for combo in &combos {
                for choice in &choices {
                    let mut merged = combo.clone();
                    merged.extend(choice.iter().copied());
                    next.push(merged);
                }
            }
            combos = next;
        }
        for cyclic_orders in combos {
            let mut group = cyclic(1);
            for n in cyclic_orders {
                group = direct_product(&group, &cyclic(n));
            }
            out.push(group);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_six_subgroups() {
        // 1, three of order two, one of order three, S3 itself
        let g = builtin("S3").unwrap();
        let subs = enumerate_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, alloc::vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = cyclic(1);
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), 1);
    }

    #[test]
    fn c4_has_three_subgroups() {
        // oracle: brute force over all member subsets closed under the law
        let g = builtin("C4").unwrap();
        let n = g.order();
        let mut brute = 0usize;
        for mask in 0u32..(1 << n) {
            let members: Vec<ElemId> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if Subgroup::from_members(&g, members).is_ok() {
                brute += 1;
            }
        }
        assert_eq!(brute, 3);
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), 3);
    }

    #[test]
    fn s3_conjugacy_classes() {
        let g = builtin("S3").unwrap();
        let poset = conjugacy_class_poset(&g).unwrap();
        assert_eq!(poset.len(), 4);
        let order_two = poset
            .classes()
            .iter()
            .find(|c| c[0].order() == 2)
            .unwrap();
        assert_eq!(order_two.len(), 3);
    }

    #[test]
    fn klein_four_classes_are_singletons() {
        let g = builtin("K4").unwrap();
        let poset = conjugacy_class_poset(&g).unwrap();
        assert_eq!(poset.len(), 5);
        assert!(poset.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn c2_classes_totally_ordered() {
        let g = builtin("C2").unwrap();
        let poset = conjugacy_class_poset(&g).unwrap();
        assert_eq!(poset.len(), 2);
        assert!(poset.leq(0, 1) || poset.leq(1, 0));
    }

    #[test]
    fn subconjugacy_is_antisymmetric() {
        for name in ["C4", "K4", "S3", "D4"] {
            let g = builtin(name).unwrap();
            let poset = conjugacy_class_poset(&g).unwrap();
            for a in 0..poset.len() {
                for b in 0..poset.len() {
                    if a != b {
                        assert!(!(poset.leq(a, b) && poset.leq(b, a)), "{name}: {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_group_of_whole_group_is_trivial() {
        let g = builtin("S3").unwrap();
        let w = weyl_group(&g, &g.full_subgroup()).unwrap();
        assert_eq!(w.order(), 1);
    }

    #[test]
    fn klein_weyl_groups_are_c2_on_proper_subgroups() {
        let g = builtin("K4").unwrap();
        for sub in enumerate_subgroups(&g).unwrap() {
            if sub.order() == 2 {
                assert_eq!(weyl_group(&g, &sub).unwrap().order(), 2);
            }
        }
    }

    #[test]
    fn s3_weyl_of_order_three_subgroup() {
        // N(⟨(123)⟩) = S3, so N/H has order 2 regardless of the
        // diagram label in question
        let g = builtin("S3").unwrap();
        let sub = enumerate_subgroups(&g)
            .unwrap()
            .into_iter()
            .find(|s| s.order() == 3)
            .unwrap();
        assert_eq!(weyl_group(&g, &sub).unwrap().order(), 2);
    }

    #[test]
    fn fixed_points_examples() {
        let g = builtin("S3").unwrap();
        let subs = enumerate_subgroups(&g).unwrap();
        let order_two: Vec<&Subgroup> = subs.iter().filter(|s| s.order() == 2).collect();
        let order_three = subs.iter().find(|s| s.order() == 3).unwrap();

        // cosets of one order-2 subgroup, fixed by a different order-2 subgroup
        let x = CosetSpace::new(&g, order_two[1]);
        assert_eq!(fixed_points(x.gset(), order_two[0]).len(), 1);

        // trivial subgroup fixes everything
        assert_eq!(
            fixed_points(x.gset(), &g.trivial_subgroup()).len(),
            x.len()
        );

        // cosets of the order-3 subgroup have no points fixed by an involution
        let y = CosetSpace::new(&g, order_three);
        assert!(fixed_points(y.gset(), order_two[0]).is_empty());
    }

    #[test]
    fn equivariant_map_counts() {
        let g = builtin("S3").unwrap();
        let subs = enumerate_subgroups(&g).unwrap();
        let trivial = g.trivial_subgroup();
        let order_two = subs.iter().find(|s| s.order() == 2).unwrap();

        // hom(S3/1, S3/⟨σ⟩) has 3 maps
        let h = CosetSpace::new(&g, &trivial);
        let x = CosetSpace::new(&g, order_two);
        assert_eq!(equivariant_maps(&g, &h, x.gset()).len(), 3);

        // hom(G/H, G/H) contains the identity
        let hh = CosetSpace::new(&g, order_two);
        let maps = equivariant_maps(&g, &hh, hh.gset());
        let identity: Vec<usize> = (0..hh.len()).collect();
        assert!(maps.iter().any(|m| m.point_map == identity));

        // Klein four: hom(K/1, K/C) has [G:C] = 2 maps
        let k = builtin("K4").unwrap();
        let ksubs = enumerate_subgroups(&k).unwrap();
        let c = ksubs.iter().find(|s| s.order() == 2).unwrap();
        let k1 = CosetSpace::new(&k, &k.trivial_subgroup());
        let kc = CosetSpace::new(&k, c);
        assert_eq!(equivariant_maps(&k, &k1, kc.gset()).len(), 2);
    }

    #[test]
    fn hom_counts_match_fixed_points_for_small_groups() {
        for name in ["C2", "C3", "C4", "K4", "S3", "D4"] {
            let g = builtin(name).unwrap();
            let subs = enumerate_subgroups(&g).unwrap();
            for h in &subs {
                let hspace = CosetSpace::new(&g, h);
                for k in &subs {
                    let kspace = CosetSpace::new(&g, k);
                    let maps = equivariant_maps(&g, &hspace, kspace.gset());
                    assert_eq!(
                        maps.len(),
                        fixed_points(kspace.gset(), h).len(),
                        "{name}"
                    );
                    // Cor: hom nonempty iff some conjugate of H inside K
                    let subconj =
                        (0..g.order()).any(|x| h.conjugate(&g, x).is_subgroup_of(k));
                    assert_eq!(!maps.is_empty(), subconj, "{name}");
                }
            }
        }
    }

    #[test]
    fn weyl_order_equals_fixed_point_count() {
        for name in ["C4", "K4", "S3", "D4"] {
            let g = builtin(name).unwrap();
            for h in enumerate_subgroups(&g).unwrap() {
                let w = weyl_group(&g, &h).unwrap();
                let space = CosetSpace::new(&g, &h);
                assert_eq!(w.order(), fixed_points(space.gset(), &h).len(), "{name}");
            }
        }
    }

    #[test]
    fn abelian_enumeration_counts() {
        let groups = abelian_groups_up_to(16);
        // orders 1..16: 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5 abelian groups
        assert_eq!(groups.len(), 25);
        assert!(groups.iter().all(|g| g.is_abelian()));
    }

    #[test]
    fn weyl_rejects_non_subgroup() {
        let g = builtin("S3").unwrap();
        let bogus = Subgroup {
            members: alloc::vec![0, 1],
        };
        // {identity, some transposition-or-rotation} need not be closed;
        // find an element whose pairing with the identity is not closed
        let mut rejected = false;
        for e in 1..g.order() {
            let cand = Subgroup {
                members: alloc::vec![0, e],
            };
            if Subgroup::from_members(&g, cand.members.clone()).is_err() {
                assert_eq!(weyl_group(&g, &cand), Err(GroupError::NotASubgroup));
                rejected = true;
                break;
            }
        }
        assert!(rejected || bogus.members.len() == 2);
    }
}
