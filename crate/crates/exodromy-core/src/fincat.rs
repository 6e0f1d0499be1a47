//! Finite categories as explicit data: objects, morphisms with a total
//! composition table, functors, presheaves, fibration checks, pullbacks and
//! isomorphism search.
//!
//! Everything is materialized — hom-sets are lists of morphism ids and
//! composition is table lookup. Categories with infinite hom-sets never
//! enter this module; they stay presented (see the exit-path machinery).

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poset::StratPoset;
use crate::report::Verdict;

pub type ObjId = usize;
pub type MorId = usize;

/// A finite category: named objects, morphisms with source/target, one
/// identity per object and a total composition table on composable pairs.
///
/// `compose[(g, f)] = g ∘ f` for `f: a → b`, `g: b → c` (apply `f` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    mor_src: Vec<ObjId>,
    mor_dst: Vec<ObjId>,
    identities: Vec<MorId>,
    compose: BTreeMap<(MorId, MorId), MorId>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(ObjId, ObjId)>,
        identities: Vec<MorId>,
        compose: BTreeMap<(MorId, MorId), MorId>,
    ) -> FiniteCategory {
        FiniteCategory {
            objects,
            mor_src: morphisms.iter().map(|&(s, _)| s).collect(),
            mor_dst: morphisms.iter().map(|&(_, d)| d).collect(),
            identities,
            compose,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mor_src.len()
    }

    pub fn src(&self, m: MorId) -> ObjId {
        self.mor_src[m]
    }

    pub fn dst(&self, m: MorId) -> ObjId {
        self.mor_dst[m]
    }

    pub fn identity(&self, obj: ObjId) -> MorId {
        self.identities[obj]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identities[self.mor_src[m]] == m
    }

    /// `g ∘ f` (apply `f` first); panics if the pair is not composable.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose[&(g, f)]
    }

    pub fn try_comp(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        (0..self.morphism_count())
            .filter(|&m| self.mor_src[m] == a && self.mor_dst[m] == b)
            .collect()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        0..self.mor_src.len()
    }

    pub fn is_iso(&self, m: MorId) -> bool {
        let (a, b) = (self.mor_src[m], self.mor_dst[m]);
        self.hom(b, a).iter().any(|&n| {
            self.try_comp(n, m) == Some(self.identities[a])
                && self.try_comp(m, n) == Some(self.identities[b])
        })
    }

    /// The category with one object and one morphism.
    pub fn terminal() -> FiniteCategory {
        let mut compose = BTreeMap::new();
        compose.insert((0, 0), 0);
        FiniteCategory::new(
            alloc::vec![String::from("*")],
            alloc::vec![(0, 0)],
            alloc::vec![0],
            compose,
        )
    }

    /// The discrete category on `n` objects.
    pub fn discrete(labels: Vec<String>) -> FiniteCategory {
        let n = labels.len();
        let mut compose = BTreeMap::new();
        for i in 0..n {
            compose.insert((i, i), i);
        }
        FiniteCategory::new(labels, (0..n).map(|i| (i, i)).collect(), (0..n).collect(), compose)
    }

    /// A poset as a thin category: one morphism `a → b` per relation `a ≤ b`.
    pub fn from_poset(p: &StratPoset) -> FiniteCategory {
        let mut morphisms = Vec::new();
        let mut mor_of: BTreeMap<(ObjId, ObjId), MorId> = BTreeMap::new();
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.leq(a, b) {
                    mor_of.insert((a, b), morphisms.len());
                    morphisms.push((a, b));
                }
            }
        }
        let identities = (0..p.len()).map(|a| mor_of[&(a, a)]).collect();
        let mut compose = BTreeMap::new();
        for (&(a, b), &f) in &mor_of {
            for (&(b2, c), &g) in &mor_of {
                if b == b2 {
                    compose.insert((g, f), mor_of[&(a, c)]);
                }
            }
        }
        FiniteCategory::new(
            (0..p.len()).map(|i| String::from(p.label(i))).collect(),
            morphisms,
            identities,
            compose,
        )
    }

    pub fn opposite(&self) -> FiniteCategory {
        let mut compose = BTreeMap::new();
        for (&(g, f), &h) in &self.compose {
            compose.insert((f, g), h);
        }
        FiniteCategory {
            objects: self.objects.clone(),
            mor_src: self.mor_dst.clone(),
            mor_dst: self.mor_src.clone(),
            identities: self.identities.clone(),
            compose,
        }
    }
}

/// Checks the category axioms: identities are well-typed and neutral,
/// composition is defined exactly on composable pairs and is associative.
pub fn validate_category(c: &FiniteCategory) -> Verdict {
    if c.identities.len() != c.object_count() {
        return Verdict::refuted("identity list length mismatch");
    }
    for obj in 0..c.object_count() {
        let id = c.identities[obj];
        if c.src(id) != obj || c.dst(id) != obj {
            return Verdict::refuted(alloc::format!("identity of object {obj} is not an endomorphism"));
        }
    }
    let n = c.morphism_count();
    for g in 0..n {
        for f in 0..n {
            let composable = c.dst(f) == c.src(g);
            match c.try_comp(g, f) {
                None if composable => {
                    return Verdict::refuted(alloc::format!("missing composite ({g}, {f})"))
                }
                Some(_) if !composable => {
                    return Verdict::refuted(alloc::format!("spurious composite ({g}, {f})"))
                }
                Some(h) if c.src(h) != c.src(f) || c.dst(h) != c.dst(g) => {
                    return Verdict::refuted(alloc::format!("ill-typed composite ({g}, {f})"))
                }
                _ => {}
            }
        }
    }
    for m in 0..n {
        if c.comp(m, c.identities[c.src(m)]) != m || c.comp(c.identities[c.dst(m)], m) != m {
            return Verdict::refuted(alloc::format!("identity not neutral at morphism {m}"));
        }
    }
    for h in 0..n {
        for g in 0..n {
            if c.dst(g) != c.src(h) {
                continue;
            }
            for f in 0..n {
                if c.dst(f) != c.src(g) {
                    continue;
                }
                if c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f) {
                    return Verdict::refuted(alloc::format!("associativity fails at ({h}, {g}, {f})"));
                }
            }
        }
    }
    Verdict::Verified
}

/// Checks that every endomorphism is an isomorphism, and the consequence
/// that once one isomorphism `c → d` exists, every morphism `c → d` is one.
pub fn is_ei(c: &FiniteCategory) -> Verdict {
    for m in c.morphisms() {
        if c.src(m) == c.dst(m) && !c.is_iso(m) {
            return Verdict::refuted(alloc::format!("endomorphism {m} is not invertible"));
        }
    }
    for a in 0..c.object_count() {
        for b in 0..c.object_count() {
            let hom = c.hom(a, b);
            if hom.iter().any(|&m| c.is_iso(m)) && !hom.iter().all(|&m| c.is_iso(m)) {
                return Verdict::refuted(alloc::format!(
                    "hom({a}, {b}) mixes isomorphisms and non-isomorphisms"
                ));
            }
        }
    }
    Verdict::Verified
}

/// A functor between finite categories, owning copies of both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: FiniteCategory,
    pub target: FiniteCategory,
    pub object_map: Vec<ObjId>,
    pub morphism_map: Vec<MorId>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Functor {
        Functor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.object_count()).collect(),
            morphism_map: c.morphisms().collect(),
        }
    }

    pub fn ob(&self, o: ObjId) -> ObjId {
        self.object_map[o]
    }

    pub fn mor(&self, m: MorId) -> MorId {
        self.morphism_map[m]
    }

    /// `other ∘ self` as a functor (apply `self` first).
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            object_map: self.object_map.iter().map(|&o| other.ob(o)).collect(),
            morphism_map: self.morphism_map.iter().map(|&m| other.mor(m)).collect(),
        }
    }

    /// The same maps read as a functor between the opposite categories.
    pub fn opposite(&self) -> Functor {
        Functor {
            source: self.source.opposite(),
            target: self.target.opposite(),
            object_map: self.object_map.clone(),
            morphism_map: self.morphism_map.clone(),
        }
    }

    /// Functoriality: respects sources, targets, identities, composition.
    pub fn check(&self) -> Verdict {
        if self.object_map.len() != self.source.object_count()
            || self.morphism_map.len() != self.source.morphism_count()
        {
            return Verdict::refuted("functor map length mismatch");
        }
        for m in self.source.morphisms() {
            let fm = self.morphism_map[m];
            if self.target.src(fm) != self.ob(self.source.src(m))
                || self.target.dst(fm) != self.ob(self.source.dst(m))
            {
                return Verdict::refuted(alloc::format!("functor breaks typing at morphism {m}"));
            }
        }
        for o in 0..self.source.object_count() {
            if self.mor(self.source.identity(o)) != self.target.identity(self.ob(o)) {
                return Verdict::refuted(alloc::format!("functor breaks identity at object {o}"));
            }
        }
        for g in self.source.morphisms() {
            for f in self.source.morphisms() {
                if self.source.dst(f) == self.source.src(g)
                    && self.mor(self.source.comp(g, f))
                        != self.target.comp(self.mor(g), self.mor(f))
                {
                    return Verdict::refuted(alloc::format!("functor breaks composition at ({g}, {f})"));
                }
            }
        }
        Verdict::Verified
    }
}

/// Checks the unique-lifting condition: for every object `e` of the source
/// and every arrow `f: b → p(e)` of the target, exactly one arrow with
/// target `e` maps to `f`.
pub fn is_right_fibration(p: &Functor) -> Verdict {
    for e in 0..p.source.object_count() {
        let pe = p.ob(e);
        for f in p.target.morphisms() {
            if p.target.dst(f) != pe {
                continue;
            }
            let lifts = p
                .source
                .morphisms()
                .filter(|&g| p.source.dst(g) == e && p.mor(g) == f)
                .count();
            if lifts != 1 {
                return Verdict::refuted(alloc::format!(
                    "object {e}, arrow {f}: {lifts} lifts instead of 1"
                ));
            }
        }
    }
    Verdict::Verified
}

/// A presheaf on a finite category: a finite set per object and a
/// contravariant function per morphism.
///
/// For `f: a → b`, `action[f]` maps `value(b) → value(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf {
    pub base: FiniteCategory,
    pub sizes: Vec<usize>,
    pub action: Vec<Vec<usize>>,
}

impl Presheaf {
    pub fn check(&self) -> Verdict {
        if self.sizes.len() != self.base.object_count()
            || self.action.len() != self.base.morphism_count()
        {
            return Verdict::refuted("presheaf data length mismatch");
        }
        for m in self.base.morphisms() {
            let (a, b) = (self.base.src(m), self.base.dst(m));
            if self.action[m].len() != self.sizes[b]
                || self.action[m].iter().any(|&x| x >= self.sizes[a])
            {
                return Verdict::refuted(alloc::format!("presheaf action ill-typed at morphism {m}"));
            }
        }
        for o in 0..self.base.object_count() {
            let id = self.base.identity(o);
            if self.action[id].iter().enumerate().any(|(i, &x)| i != x) {
                return Verdict::refuted(alloc::format!("presheaf identity not trivial at object {o}"));
            }
        }
        for g in self.base.morphisms() {
            for f in self.base.morphisms() {
                if self.base.dst(f) != self.base.src(g) {
                    continue;
                }
                let gf = self.base.comp(g, f);
                // contravariance: value(gf) = value(f) ∘ value(g)
                let ok = (0..self.sizes[self.base.dst(g)])
                    .all(|x| self.action[gf][x] == self.action[f][self.action[g][x]]);
                if !ok {
                    return Verdict::refuted(alloc::format!("presheaf breaks composition at ({g}, {f})"));
                }
            }
        }
        Verdict::Verified
    }
}

/// The category of elements of a presheaf, with its projection to the base.
///
/// Objects are pairs `(b, x)` with `x ∈ F(b)`; there is one arrow
/// `(a, F(f)(x)) → (b, x)` per arrow `f: a → b` and element `x ∈ F(b)`.
pub fn presheaf_to_fibration(f: &Presheaf) -> (Functor, Vec<(ObjId, usize)>) {
    let base = &f.base;
    let mut objects: Vec<(ObjId, usize)> = Vec::new();
    for b in 0..base.object_count() {
        for x in 0..f.sizes[b] {
            objects.push((b, x));
        }
    }
    let obj_index: BTreeMap<(ObjId, usize), ObjId> =
        objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();

    // one total morphism per (base arrow, element of value at its target)
    let mut morphisms: Vec<(ObjId, ObjId)> = Vec::new();
    let mut mor_data: Vec<(MorId, usize)> = Vec::new();
    let mut mor_index: BTreeMap<(MorId, usize), MorId> = BTreeMap::new();
    for m in base.morphisms() {
        let (a, b) = (base.src(m), base.dst(m));
        for x in 0..f.sizes[b] {
            let src = obj_index[&(a, f.action[m][x])];
            let dst = obj_index[&(b, x)];
            mor_index.insert((m, x), morphisms.len());
            mor_data.push((m, x));
            morphisms.push((src, dst));
        }
    }
    let identities: Vec<MorId> = objects
        .iter()
        .map(|&(b, x)| mor_index[&(base.identity(b), x)])
        .collect();
    let mut compose = BTreeMap::new();
    for (gi, &(gm, gx)) in mor_data.iter().enumerate() {
        for (fi, &(fm, _fx)) in mor_data.iter().enumerate() {
            if morphisms[fi].1 != morphisms[gi].0 {
                continue;
            }
            let hm = base.comp(gm, fm);
            compose.insert((gi, fi), mor_index[&(hm, gx)]);
        }
    }
    let total = FiniteCategory::new(
        objects
            .iter()
            .map(|&(b, x)| alloc::format!("({}, {x})", base.objects[b]))
            .collect(),
        morphisms,
        identities,
        compose,
    );
    let projection = Functor {
        source: total,
        target: base.clone(),
        object_map: objects.iter().map(|&(b, _)| b).collect(),
        morphism_map: mor_data.iter().map(|&(m, _)| m).collect(),
    };
    (projection, objects)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibrationError {
    NotAFibration,
}

/// Recovers a presheaf from a right fibration: values are object fibers and
/// the action of `f: a → b` carries an object over `b` to the source of its
/// unique lift along `f`.
///
/// Also returns, per base object, the fiber as a list of source objects
/// (the set underlying the presheaf value).
pub fn fibration_to_presheaf(p: &Functor) -> Result<(Presheaf, Vec<Vec<ObjId>>), FibrationError> {
    if !is_right_fibration(p).is_verified() {
        return Err(FibrationError::NotAFibration);
    }
    let fibers: Vec<Vec<ObjId>> = (0..p.target.object_count())
        .map(|b| (0..p.source.object_count()).filter(|&e| p.ob(e) == b).collect())
        .collect();
    let sizes: Vec<usize> = fibers.iter().map(|f| f.len()).collect();
    let mut action = Vec::new();
    for f in p.target.morphisms() {
        let (a, b) = (p.target.src(f), p.target.dst(f));
        let mut row = Vec::with_capacity(sizes[b]);
        for &e in &fibers[b] {
            let lift = p
                .source
                .morphisms()
                .find(|&g| p.source.dst(g) == e && p.mor(g) == f)
                .expect("fibration provides a lift");
            let src = p.source.src(lift);
            row.push(fibers[a].iter().position(|&x| x == src).expect("lift source lies in fiber"));
        }
        action.push(row);
    }
    Ok((
        Presheaf {
            base: p.target.clone(),
            sizes,
            action,
        },
        fibers,
    ))
}

/// A natural isomorphism between two presheaves on the same base:
/// one bijection per object, commuting with the actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalIso {
    pub components: Vec<Vec<usize>>,
}

/// Searches for a natural isomorphism `F ⇒ G` by per-object bijection
/// backtracking with naturality checked incrementally.
pub fn find_natural_iso(f: &Presheaf, g: &Presheaf) -> Option<NaturalIso> {
    if f.base != g.base || f.sizes != g.sizes {
        return None;
    }
    let n = f.base.object_count();
    let mut components: Vec<Vec<usize>> = Vec::new();

    fn natural_so_far(f: &Presheaf, g: &Presheaf, components: &[Vec<usize>]) -> bool {
        let fixed = components.len();
        for m in f.base.morphisms() {
            let (a, b) = (f.base.src(m), f.base.dst(m));
            if a >= fixed || b >= fixed {
                continue;
            }
            // components[a] ∘ F(m) = G(m) ∘ components[b]
            if (0..f.sizes[b])
                .any(|x| components[a][f.action[m][x]] != g.action[m][components[b][x]])
            {
                return false;
            }
        }
        true
    }

    fn go(f: &Presheaf, g: &Presheaf, n: usize, components: &mut Vec<Vec<usize>>) -> bool {
        if components.len() == n {
            return true;
        }
        let size = f.sizes[components.len()];
        let mut perm: Vec<usize> = (0..size).collect();
        loop {
            components.push(perm.clone());
            if natural_so_far(f, g, components) && go(f, g, n, components) {
                return true;
            }
            components.pop();
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    go(f, g, n, &mut components).then_some(NaturalIso { components })
}

/// Advances `perm` to the next permutation in lexicographic order,
/// returning false after the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The strict pullback of `F: C → E` against `G: D → E`: objects and
/// morphisms are pairs agreeing on the nose in `E`.
pub struct Pullback {
    pub category: FiniteCategory,
    pub proj_left: Functor,
    pub proj_right: Functor,
    pub object_pairs: Vec<(ObjId, ObjId)>,
}

pub fn pullback_categories(f: &Functor, g: &Functor) -> Option<Pullback> {
    if f.target != g.target {
        return None;
    }
    let (c, d) = (&f.source, &g.source);
    let mut object_pairs: Vec<(ObjId, ObjId)> = Vec::new();
    for co in 0..c.object_count() {
        for dobj in 0..d.object_count() {
            if f.ob(co) == g.ob(dobj) {
                object_pairs.push((co, dobj));
            }
        }
    }
    let obj_index: BTreeMap<(ObjId, ObjId), ObjId> =
        object_pairs.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut mor_pairs: Vec<(MorId, MorId)> = Vec::new();
    let mut morphisms: Vec<(ObjId, ObjId)> = Vec::new();
    let mut mor_index: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
    for cm in c.morphisms() {
        for dm in d.morphisms() {
            if f.mor(cm) != g.mor(dm) {
                continue;
            }
            let src = obj_index.get(&(c.src(cm), d.src(dm)));
            let dst = obj_index.get(&(c.dst(cm), d.dst(dm)));
            if let (Some(&src), Some(&dst)) = (src, dst) {
                mor_index.insert((cm, dm), mor_pairs.len());
                mor_pairs.push((cm, dm));
                morphisms.push((src, dst));
            }
        }
    }
    let identities: Vec<MorId> = object_pairs
        .iter()
        .map(|&(co, dobj)| mor_index[&(c.identity(co), d.identity(dobj))])
        .collect();
    let mut compose = BTreeMap::new();
    for (gi, &(gcm, gdm)) in mor_pairs.iter().enumerate() {
        for (fi, &(fcm, fdm)) in mor_pairs.iter().enumerate() {
            if morphisms[fi].1 != morphisms[gi].0 {
                continue;
            }
            compose.insert((gi, fi), mor_index[&(c.comp(gcm, fcm), d.comp(gdm, fdm))]);
        }
    }
    let category = FiniteCategory::new(
        object_pairs
            .iter()
            .map(|&(co, dobj)| alloc::format!("({}, {})", c.objects[co], d.objects[dobj]))
            .collect(),
        morphisms,
        identities,
        compose,
    );
    let proj_left = Functor {
        source: category.clone(),
        target: c.clone(),
        object_map: object_pairs.iter().map(|&(co, _)| co).collect(),
        morphism_map: mor_pairs.iter().map(|&(cm, _)| cm).collect(),
    };
    let proj_right = Functor {
        source: category.clone(),
        target: d.clone(),
        object_map: object_pairs.iter().map(|&(_, dobj)| dobj).collect(),
        morphism_map: mor_pairs.iter().map(|&(_, dm)| dm).collect(),
    };
    Some(Pullback {
        category,
        proj_left,
        proj_right,
        object_pairs,
    })
}

/// Checks the pullback's universal property against a candidate cone
/// `(q_left: Q → C, q_right: Q → D)` with `F ∘ q_left = G ∘ q_right`:
/// the canonical mediator exists, is a functor, commutes with both
/// projections, and is unique (the projections are jointly injective).
pub fn check_pullback_cone(pb: &Pullback, q_left: &Functor, q_right: &Functor) -> Verdict {
    // joint injectivity gives uniqueness of any mediator
    for a in 0..pb.category.object_count() {
        for b in (a + 1)..pb.category.object_count() {
            if pb.object_pairs[a] == pb.object_pairs[b] {
                return Verdict::refuted("projections not jointly injective on objects");
            }
        }
    }
    let q = &q_left.source;
    if q_right.source != *q {
        return Verdict::refuted("cone legs have different sources");
    }
    let mut object_map = Vec::with_capacity(q.object_count());
    for o in 0..q.object_count() {
        match pb
            .object_pairs
            .iter()
            .position(|&(co, dobj)| co == q_left.ob(o) && dobj == q_right.ob(o))
        {
            Some(i) => object_map.push(i),
            None => {
                return Verdict::refuted(alloc::format!("cone object {o} has no pullback image"))
            }
        }
    }
    let mut morphism_map = Vec::with_capacity(q.morphism_count());
    for m in q.morphisms() {
        let want_src = object_map[q.src(m)];
        let want_dst = object_map[q.dst(m)];
        let found = pb.category.morphisms().find(|&pm| {
            pb.category.src(pm) == want_src
                && pb.category.dst(pm) == want_dst
                && pb.proj_left.mor(pm) == q_left.mor(m)
                && pb.proj_right.mor(pm) == q_right.mor(m)
        });
        match found {
            Some(pm) => morphism_map.push(pm),
            None => {
                return Verdict::refuted(alloc::format!("cone morphism {m} has no pullback image"))
            }
        }
    }
    let mediator = Functor {
        source: q.clone(),
        target: pb.category.clone(),
        object_map,
        morphism_map,
    };
    mediator.check()
}

/// Outcome of an isomorphism search between two finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoSearch {
    Witness {
        forward: Box<Functor>,
        backward: Box<Functor>,
    },
    Refuted,
    Undecided { budget: usize },
}

impl IsoSearch {
    pub fn is_witness(&self) -> bool {
        matches!(self, IsoSearch::Witness { .. })
    }
}

/// Hom-cardinality profile of an object, used to prune the object search:
/// the multiset of (|hom(o, x)|, |hom(x, o)|) over all x would depend on an
/// object matching, so we use sorted outgoing and incoming counts.
fn hom_profile(c: &FiniteCategory, o: ObjId) -> (Vec<usize>, Vec<usize>, usize) {
    let mut out: Vec<usize> = (0..c.object_count()).map(|x| c.hom(o, x).len()).collect();
    let mut inc: Vec<usize> = (0..c.object_count()).map(|x| c.hom(x, o).len()).collect();
    out.sort_unstable();
    inc.sort_unstable();
    (out, inc, c.hom(o, o).len())
}

/// Exhaustive search for an isomorphism of categories, pruned by hom
/// profiles; `constraint`, when given, restricts admissible object images
/// (used for searches over a base).
pub fn find_isomorphism(c: &FiniteCategory, d: &FiniteCategory, budget: usize) -> IsoSearch {
    find_isomorphism_constrained(c, d, budget, None)
}

pub fn find_isomorphism_constrained(
    c: &FiniteCategory,
    d: &FiniteCategory,
    budget: usize,
    constraint: Option<&dyn Fn(ObjId, ObjId) -> bool>,
) -> IsoSearch {
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return IsoSearch::Refuted;
    }
    let n = c.object_count();
    let c_profiles: Vec<_> = (0..n).map(|o| hom_profile(c, o)).collect();
    let d_profiles: Vec<_> = (0..n).map(|o| hom_profile(d, o)).collect();
    {
        let mut cp = c_profiles.clone();
        let mut dp = d_profiles.clone();
        cp.sort();
        dp.sort();
        if cp != dp {
            return IsoSearch::Refuted;
        }
    }

    struct Search<'a> {
        c: &'a FiniteCategory,
        d: &'a FiniteCategory,
        steps: usize,
        budget: usize,
        exhausted: bool,
    }

    impl Search<'_> {
        /// Extends the partial object map with a full morphism-map search.
        fn try_object_map(&mut self, object_map: &[ObjId]) -> Option<Functor> {
            let mut morphism_map: Vec<Option<MorId>> =
                alloc::vec![None; self.c.morphism_count()];
            for o in 0..object_map.len() {
                morphism_map[self.c.identity(o)] = Some(self.d.identity(object_map[o]));
            }
            self.assign_morphisms(object_map, &mut morphism_map, 0)
                .map(|mm| Functor {
                    source: self.c.clone(),
                    target: self.d.clone(),
                    object_map: object_map.to_vec(),
                    morphism_map: mm,
                })
        }

        fn assign_morphisms(
            &mut self,
            object_map: &[ObjId],
            morphism_map: &mut Vec<Option<MorId>>,
            from: MorId,
        ) -> Option<Vec<MorId>> {
            self.steps += 1;
            if self.steps > self.budget {
                self.exhausted = true;
                return None;
            }
            let next = (from..morphism_map.len()).find(|&m| morphism_map[m].is_none());
            let m = match next {
                Some(m) => m,
                None => {
                    let mm: Vec<MorId> = morphism_map.iter().map(|x| x.unwrap()).collect();
                    let cand = Functor {
                        source: self.c.clone(),
                        target: self.d.clone(),
                        object_map: object_map.to_vec(),
                        morphism_map: mm.clone(),
                    };
                    return cand.check().is_verified().then_some(mm);
                }
            };
            let (a, b) = (self.c.src(m), self.c.dst(m));
            let candidates = self.d.hom(object_map[a], object_map[b]);
            for cand in candidates {
                if morphism_map.contains(&Some(cand)) {
                    continue;
                }
                morphism_map[m] = Some(cand);
                if self.partial_consistent(morphism_map) {
                    if let Some(done) = self.assign_morphisms(object_map, morphism_map, m + 1) {
                        return Some(done);
                    }
                    if self.exhausted {
                        morphism_map[m] = None;
                        return None;
                    }
                }
                morphism_map[m] = None;
            }
            None
        }

        fn partial_consistent(&self, morphism_map: &[Option<MorId>]) -> bool {
            for g in 0..morphism_map.len() {
                let Some(dg) = morphism_map[g] else { continue };
                for f in 0..morphism_map.len() {
                    let Some(df) = morphism_map[f] else { continue };
                    if self.c.dst(f) != self.c.src(g) {
                        continue;
                    }
                    let h = self.c.comp(g, f);
                    if let Some(dh) = morphism_map[h] {
                        if self.d.comp(dg, df) != dh {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }

    let mut search = Search {
        c,
        d,
        steps: 0,
        budget,
        exhausted: false,
    };

    // backtrack over object bijections with profile pruning
    fn object_maps(
        search: &mut Search,
        c_profiles: &[(Vec<usize>, Vec<usize>, usize)],
        d_profiles: &[(Vec<usize>, Vec<usize>, usize)],
        constraint: Option<&dyn Fn(ObjId, ObjId) -> bool>,
        object_map: &mut Vec<ObjId>,
        used: &mut Vec<bool>,
    ) -> Option<Functor> {
        let n = c_profiles.len();
        if object_map.len() == n {
            return search.try_object_map(object_map);
        }
        let o = object_map.len();
        for img in 0..n {
            if used[img]
                || c_profiles[o] != d_profiles[img]
                || constraint.is_some_and(|ok| !ok(o, img))
            {
                continue;
            }
            object_map.push(img);
            used[img] = true;
            let found = object_maps(search, c_profiles, d_profiles, constraint, object_map, used);
            used[img] = false;
            object_map.pop();
            if found.is_some() {
                return found;
            }
            if search.exhausted {
                return None;
            }
        }
        None
    }

    let mut object_map = Vec::new();
    let mut used = alloc::vec![false; n];
    let found = object_maps(
        &mut search,
        &c_profiles,
        &d_profiles,
        constraint,
        &mut object_map,
        &mut used,
    );
    match found {
        Some(forward) => {
            let mut back_obj = alloc::vec![0; n];
            for (o, &img) in forward.object_map.iter().enumerate() {
                back_obj[img] = o;
            }
            let mut back_mor = alloc::vec![0; d.morphism_count()];
            for (m, &img) in forward.morphism_map.iter().enumerate() {
                back_mor[img] = m;
            }
            let backward = Functor {
                source: d.clone(),
                target: c.clone(),
                object_map: back_obj,
                morphism_map: back_mor,
            };
            IsoSearch::Witness {
                forward: Box::new(forward),
                backward: Box::new(backward),
            }
        }
        None if search.exhausted => IsoSearch::Undecided { budget },
        None => IsoSearch::Refuted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poset_01() -> FiniteCategory {
        FiniteCategory::from_poset(&StratPoset::chain(2))
    }

    #[test]
    fn terminal_and_poset_are_valid() {
        assert!(validate_category(&FiniteCategory::terminal()).is_verified());
        assert!(validate_category(&poset_01()).is_verified());
    }

    #[test]
    fn corrupted_composite_is_refuted() {
        let mut c = poset_01();
        // redirect the composite of the non-identity arrow with an identity
        let arrow = c
            .morphisms()
            .find(|&m| c.src(m) != c.dst(m))
            .unwrap();
        let id0 = c.identity(c.src(arrow));
        c.compose.insert((arrow, id0), id0);
        assert!(validate_category(&c).is_refuted());
    }

    #[test]
    fn opposite_reverses_and_involutes() {
        let c = poset_01();
        let op = c.opposite();
        let arrow = c.morphisms().find(|&m| c.src(m) != c.dst(m)).unwrap();
        assert_eq!(op.src(arrow), c.dst(arrow));
        assert_eq!(op.opposite(), c);
        let t = FiniteCategory::terminal();
        assert_eq!(t.opposite(), t);
    }

    #[test]
    fn group_as_category_is_ei() {
        // C2 as a one-object category
        let mut compose = BTreeMap::new();
        compose.insert((0, 0), 0);
        compose.insert((0, 1), 1);
        compose.insert((1, 0), 1);
        compose.insert((1, 1), 0);
        let c = FiniteCategory::new(
            alloc::vec![String::from("*")],
            alloc::vec![(0, 0), (0, 0)],
            alloc::vec![0],
            compose,
        );
        assert!(validate_category(&c).is_verified());
        assert!(is_ei(&c).is_verified());
    }

    #[test]
    fn idempotent_endo_refutes_ei() {
        // poset 0<1 with an extra idempotent non-identity endo on 0
        // morphisms: 0 = id0, 1 = id1, 2 = arrow 0->1, 3 = endo e on 0
        let mut compose = BTreeMap::new();
        compose.insert((0, 0), 0);
        compose.insert((1, 1), 1);
        compose.insert((2, 0), 2);
        compose.insert((1, 2), 2);
        compose.insert((0, 3), 3);
        compose.insert((3, 0), 3);
        compose.insert((3, 3), 3);
        compose.insert((2, 3), 2);
        let c = FiniteCategory::new(
            alloc::vec![String::from("0"), String::from("1")],
            alloc::vec![(0, 0), (1, 1), (0, 1), (0, 0)],
            alloc::vec![0, 1],
            compose,
        );
        assert!(validate_category(&c).is_verified());
        assert!(is_ei(&c).is_refuted());
    }

    #[test]
    fn identity_functor_is_right_fibration() {
        let c = poset_01();
        assert!(is_right_fibration(&Functor::identity(&c)).is_verified());
    }

    #[test]
    fn point_at_top_of_interval_is_not_fibration() {
        let c = poset_01();
        let t = FiniteCategory::terminal();
        let p = Functor {
            source: t.clone(),
            target: c.clone(),
            object_map: alloc::vec![1],
            morphism_map: alloc::vec![c.identity(1)],
        };
        assert!(p.check().is_verified());
        // the arrow 0 -> 1 has no lift into the one-object source
        assert!(is_right_fibration(&p).is_refuted());
    }

    #[test]
    fn constant_singleton_presheaf_gives_isomorphic_total_category() {
        let base = poset_01();
        let f = Presheaf {
            sizes: alloc::vec![1; base.object_count()],
            action: base.morphisms().map(|_| alloc::vec![0]).collect(),
            base: base.clone(),
        };
        assert!(f.check().is_verified());
        let (p, _) = presheaf_to_fibration(&f);
        assert!(validate_category(&p.source).is_verified());
        assert!(find_isomorphism(&p.source, &base, 100_000).is_witness());
    }

    #[test]
    fn three_element_presheaf_on_point_is_discrete() {
        let base = FiniteCategory::terminal();
        let f = Presheaf {
            sizes: alloc::vec![3],
            action: alloc::vec![alloc::vec![0, 1, 2]],
            base: base.clone(),
        };
        let (p, _) = presheaf_to_fibration(&f);
        assert_eq!(p.source.object_count(), 3);
        assert_eq!(p.source.morphism_count(), 3);
    }

    #[test]
    fn identity_fibration_gives_constant_singleton_presheaf() {
        let c = poset_01();
        let (f, _) = fibration_to_presheaf(&Functor::identity(&c)).unwrap();
        assert_eq!(f.sizes, alloc::vec![1, 1]);
    }

    #[test]
    fn fibration_to_presheaf_rejects_non_fibrations() {
        let c = poset_01();
        let t = FiniteCategory::terminal();
        let p = Functor {
            source: t,
            target: c.clone(),
            object_map: alloc::vec![1],
            morphism_map: alloc::vec![c.identity(1)],
        };
        assert_eq!(fibration_to_presheaf(&p), Err(FibrationError::NotAFibration));
    }

    /// Random poset whose Hasse diagram is a forest (so presheaf data on
    /// covers extends uniquely to all arrows) plus random value functions.
    fn random_presheaf(rng: &mut ChaCha8Rng) -> Presheaf {
        let n = rng.gen_range(1..=4usize);
        // parent[i] < i is the unique upper cover of i (or none)
        let mut covers = Vec::new();
        let mut parent: Vec<Option<usize>> = alloc::vec![None];
        for i in 1..n {
            if rng.gen_bool(0.7) {
                let p = rng.gen_range(0..i);
                covers.push((i, p));
                parent.push(Some(p));
            } else {
                parent.push(None);
            }
        }
        let labels = (0..n).map(|i| alloc::format!("p{i}")).collect();
        let poset = StratPoset::from_covers(labels, &covers).unwrap();
        let base = FiniteCategory::from_poset(&poset);
        let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3usize)).collect();
        // choose a random function per cover, then compose along chains
        let cover_fn: BTreeMap<(usize, usize), Vec<usize>> = parent
            .iter()
            .enumerate()
            .filter_map(|(i, &p)| p.map(|p| (i, p)))
            .map(|(i, p)| {
                let f: Vec<usize> = (0..sizes[p]).map(|_| rng.gen_range(0..sizes[i])).collect();
                ((i, p), f)
            })
            .collect();
        let action: Vec<Vec<usize>> = base
            .morphisms()
            .map(|m| {
                let (a, b) = (base.src(m), base.dst(m));
                // walk from a up to b through parents, composing cover maps
                let mut maps: Vec<&Vec<usize>> = Vec::new();
                let mut cur = a;
                while cur != b {
                    let p = parent[cur].unwrap();
                    maps.push(&cover_fn[&(cur, p)]);
                    cur = p;
                }
                (0..sizes[b])
                    .map(|x| maps.iter().rev().fold(x, |y, f| f[y]))
                    .collect()
            })
            .collect();
        let presheaf = Presheaf {
            base,
            sizes,
            action,
        };
        assert!(presheaf.check().is_verified());
        presheaf
    }

    #[test]
    fn grothendieck_round_trips_over_100_seeds() {
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_presheaf(&mut rng);
            let (p, _) = presheaf_to_fibration(&f);
            assert!(validate_category(&p.source).is_verified(), "seed {seed}");
            assert!(p.check().is_verified(), "seed {seed}");
            assert!(is_right_fibration(&p).is_verified(), "seed {seed}");
            // presheaf -> fibration -> presheaf, up to natural iso
            let (f2, _) = fibration_to_presheaf(&p).unwrap();
            assert!(
                find_natural_iso(&f2, &f).is_some(),
                "seed {seed}: no natural iso"
            );
            // fibration -> presheaf -> fibration, isomorphic over the base
            let (p2, _) = presheaf_to_fibration(&f2);
            let over_base = |a: ObjId, b: ObjId| p2.ob(a) == p.ob(b);
            let iso = find_isomorphism_constrained(&p2.source, &p.source, 1_000_000, Some(&over_base));
            assert!(iso.is_witness(), "seed {seed}: no iso over base");
        }
    }

    #[test]
    fn pullback_along_identity_recovers_other_leg() {
        let c = poset_01();
        let id = Functor::identity(&c);
        let pb = pullback_categories(&id, &id).unwrap();
        assert!(find_isomorphism(&pb.category, &c, 100_000).is_witness());
        assert!(check_pullback_cone(&pb, &id, &id).is_verified());
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let c = poset_01();
        let t = FiniteCategory::terminal();
        let bang = Functor {
            source: c.clone(),
            target: t.clone(),
            object_map: alloc::vec![0, 0],
            morphism_map: c.morphisms().map(|_| 0).collect(),
        };
        assert!(bang.check().is_verified());
        let pb = pullback_categories(&bang, &bang).unwrap();
        assert_eq!(pb.category.object_count(), 4);
        assert_eq!(pb.category.morphism_count(), 9);
        assert!(validate_category(&pb.category).is_verified());
    }

    #[test]
    fn iso_search_refutes_on_arrow_counts() {
        let discrete2 = FiniteCategory::discrete(alloc::vec![
            String::from("a"),
            String::from("b")
        ]);
        assert_eq!(
            find_isomorphism(&poset_01(), &discrete2, 100_000),
            IsoSearch::Refuted
        );
    }

    #[test]
    fn iso_search_finds_identity_witness() {
        let c = poset_01();
        match find_isomorphism(&c, &c, 100_000) {
            IsoSearch::Witness { forward, backward } => {
                assert!(forward.check().is_verified());
                assert_eq!(forward.then(&backward), Functor::identity(&c));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn random_fibration_universal_property() {
        for seed in 0..20u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let f = random_presheaf(&mut rng);
            let (p, _) = presheaf_to_fibration(&f);
            // pull p back along the identity and check the cone given by p itself
            let id = Functor::identity(&p.target);
            let pb = pullback_categories(&p, &id).unwrap();
            let cone_left = Functor::identity(&p.source);
            let cone_right = p.clone();
            assert!(
                check_pullback_cone(&pb, &cone_left, &cone_right).is_verified(),
                "seed {seed}"
            );
        }
    }
}
