//! Finite combinatorial complexes with a group action and a stratification.
//!
//! A `GComplex` is a 2-dimensional complex — vertices, directed edges and
//! faces given by closed boundary walks — together with a cell-wise action
//! of a finite permutation group and a stratum label per cell. Edges are
//! oriented "exit-wise": from the more special endpoint (bigger stabilizer,
//! lower in the stratifying poset) toward the more generic one, and an
//! edge's own label is the label of its generic endpoint.
//!
//! The validator checks the action axioms, regularity (a cell's stabilizer
//! fixes its boundary pointwise), monotonicity of the stratification and
//! the unique-lift condition that makes path lifting through the quotient
//! well defined. Models failing validation should be barycentrically
//! subdivided and re-checked.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{conjugacy_class_poset, cyclic, ElemId, GroupError, PermGroup, Subgroup};
use crate::poset::StratPoset;
use crate::report::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cell {
    V(usize),
    E(usize),
    F(usize),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::V(i) => write!(f, "v{i}"),
            Cell::E(i) => write!(f, "e{i}"),
            Cell::F(i) => write!(f, "f{i}"),
        }
    }
}

/// An edge traversal: forward along the stored orientation or backward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedEdge {
    pub edge: usize,
    pub forward: bool,
}

impl SignedEdge {
    pub fn fwd(edge: usize) -> SignedEdge {
        SignedEdge { edge, forward: true }
    }

    pub fn back(edge: usize) -> SignedEdge {
        SignedEdge {
            edge,
            forward: false,
        }
    }

    pub fn reversed(self) -> SignedEdge {
        SignedEdge {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

/// The action of one group element on all cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAction {
    pub v: Vec<usize>,
    pub e: Vec<usize>,
    pub f: Vec<usize>,
}

/// A stratification: one poset element per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratMap {
    pub poset: StratPoset,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub faces: Vec<usize>,
}

impl StratMap {
    pub fn constant(vertices: usize, edges: usize, faces: usize) -> StratMap {
        StratMap {
            poset: StratPoset::point(),
            vertices: alloc::vec![0; vertices],
            edges: alloc::vec![0; edges],
            faces: alloc::vec![0; faces],
        }
    }

    pub fn of(&self, c: Cell) -> usize {
        match c {
            Cell::V(i) => self.vertices[i],
            Cell::E(i) => self.edges[i],
            Cell::F(i) => self.faces[i],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    Group(GroupError),
    BadEdge(usize),
    BadFace(usize),
    BadAction(String),
    NotValidated(String),
    EmptyStratum,
    NotANeighborhood(String),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::Group(e) => write!(f, "{e}"),
            ComplexError::BadEdge(i) => write!(f, "edge {i} has an out-of-range endpoint"),
            ComplexError::BadFace(i) => write!(f, "face {i} boundary is not a closed walk"),
            ComplexError::BadAction(s) => write!(f, "action is not well defined: {s}"),
            ComplexError::NotValidated(s) => write!(f, "complex failed validation: {s}"),
            ComplexError::EmptyStratum => write!(f, "stratum has no cells"),
            ComplexError::NotANeighborhood(s) => write!(f, "not a neighborhood: {s}"),
        }
    }
}

impl From<GroupError> for ComplexError {
    fn from(e: GroupError) -> ComplexError {
        ComplexError::Group(e)
    }
}

#[derive(Debug, Clone)]
pub struct GComplex {
    pub group: PermGroup,
    pub vertices: usize,
    /// Directed edges (src, dst), oriented exit-wise.
    pub edges: Vec<(usize, usize)>,
    /// Faces as closed boundary walks of signed edges.
    pub faces: Vec<Vec<SignedEdge>>,
    /// One cell action per group element, in element order.
    pub actions: Vec<CellAction>,
    pub strat: StratMap,
    /// Optional display names for vertices.
    pub vertex_names: Vec<String>,
}

impl GComplex {
    /// Builds a complex from per-generator vertex and edge permutations.
    /// The action of every element is computed by composing generators and
    /// checked for well-definedness; face images are found by matching
    /// boundary walks up to rotation.
    pub fn new(
        group: PermGroup,
        vertices: usize,
        edges: Vec<(usize, usize)>,
        faces: Vec<Vec<SignedEdge>>,
        generator_actions: Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<GComplex, ComplexError> {
        for (i, &(s, d)) in edges.iter().enumerate() {
            if s >= vertices || d >= vertices {
                return Err(ComplexError::BadEdge(i));
            }
        }
        for (i, boundary) in faces.iter().enumerate() {
            if boundary.is_empty() {
                return Err(ComplexError::BadFace(i));
            }
            // the walk must chain up and close
            let ends = |se: &SignedEdge| {
                let (s, d) = edges[se.edge];
                if se.forward {
                    (s, d)
                } else {
                    (d, s)
                }
            };
            for w in 0..boundary.len() {
                let (_, d) = ends(&boundary[w]);
                let (s2, _) = ends(&boundary[(w + 1) % boundary.len()]);
                if d != s2 {
                    return Err(ComplexError::BadFace(i));
                }
            }
        }
        if generator_actions.len() != group.generators().len() {
            return Err(ComplexError::BadAction(String::from(
                "one action per generator required",
            )));
        }

        // face image of a cell action: match boundary up to rotation
        let face_image = |vperm: &[usize], eperm: &[usize]| -> Result<Vec<usize>, ComplexError> {
            let _ = vperm;
            let mut out = Vec::with_capacity(faces.len());
            for (i, boundary) in faces.iter().enumerate() {
                let mapped: Vec<SignedEdge> = boundary
                    .iter()
                    .map(|se| SignedEdge {
                        edge: eperm[se.edge],
                        forward: se.forward,
                    })
                    .collect();
                let found = faces.iter().position(|other| {
                    other.len() == mapped.len()
                        && (0..other.len()).any(|rot| {
                            (0..other.len()).all(|k| other[(k + rot) % other.len()] == mapped[k])
                        })
                });
                match found {
                    Some(j) => out.push(j),
                    None => {
                        return Err(ComplexError::BadAction(alloc::format!(
                            "image of face {i} is not a face"
                        )))
                    }
                }
            }
            Ok(out)
        };

        // extend generator actions to all elements by breadth-first closure
        let identity_action = CellAction {
            v: (0..vertices).collect(),
            e: (0..edges.len()).collect(),
            f: (0..faces.len()).collect(),
        };
        let mut actions: Vec<Option<CellAction>> = alloc::vec![None; group.order()];
        actions[group.identity()] = Some(identity_action);
        let gen_ids = group.generator_ids();
        let gen_cell_actions: Vec<CellAction> = generator_actions
            .iter()
            .map(|(v, e)| {
                Ok(CellAction {
                    v: v.clone(),
                    e: e.clone(),
                    f: face_image(v, e)?,
                })
            })
            .collect::<Result<_, ComplexError>>()?;
        let mut queue: Vec<ElemId> = alloc::vec![group.identity()];
        while let Some(a) = queue.pop() {
            let base = actions[a].clone().expect("queued elements have actions");
            for (gi, &g) in gen_ids.iter().enumerate() {
                let ga = group.mul(g, a);
                let gact = &gen_cell_actions[gi];
                let composed = CellAction {
                    v: base.v.iter().map(|&x| gact.v[x]).collect(),
                    e: base.e.iter().map(|&x| gact.e[x]).collect(),
                    f: base.f.iter().map(|&x| gact.f[x]).collect(),
                };
                match &actions[ga] {
                    None => {
                        actions[ga] = Some(composed);
                        queue.push(ga);
                    }
                    Some(existing) => {
                        if *existing != composed {
                            return Err(ComplexError::BadAction(alloc::format!(
                                "element {ga} has two different actions"
                            )));
                        }
                    }
                }
            }
        }
        let actions: Vec<CellAction> = actions
            .into_iter()
            .map(|a| a.ok_or_else(|| ComplexError::BadAction(String::from("group not generated"))))
            .collect::<Result<_, _>>()?;
        let strat = StratMap::constant(vertices, edges.len(), faces.len());
        Ok(GComplex {
            group,
            vertices,
            edges,
            faces,
            actions,
            strat,
            vertex_names: (0..vertices).map(|i| alloc::format!("v{i}")).collect(),
        })
    }

    pub fn with_vertex_names(mut self, names: &[&str]) -> GComplex {
        self.vertex_names = names.iter().map(|&n| String::from(n)).collect();
        self
    }

    /// A complex with the trivial group acting trivially.
    pub fn trivial_action(
        vertices: usize,
        edges: Vec<(usize, usize)>,
        faces: Vec<Vec<SignedEdge>>,
    ) -> Result<GComplex, ComplexError> {
        GComplex::new(cyclic(1), vertices, edges, faces, Vec::new())
    }

    pub fn act(&self, g: ElemId, c: Cell) -> Cell {
        match c {
            Cell::V(i) => Cell::V(self.actions[g].v[i]),
            Cell::E(i) => Cell::E(self.actions[g].e[i]),
            Cell::F(i) => Cell::F(self.actions[g].f[i]),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        out.extend((0..self.vertices).map(Cell::V));
        out.extend((0..self.edges.len()).map(Cell::E));
        out.extend((0..self.faces.len()).map(Cell::F));
        out
    }

    pub fn stabilizer(&self, c: Cell) -> Subgroup {
        let members: Vec<ElemId> = (0..self.group.order())
            .filter(|&g| self.act(g, c) == c)
            .collect();
        Subgroup::from_members(&self.group, members).expect("stabilizers are subgroups")
    }

    pub fn orbit(&self, c: Cell) -> Vec<Cell> {
        let set: BTreeSet<Cell> = (0..self.group.order()).map(|g| self.act(g, c)).collect();
        set.into_iter().collect()
    }

    pub fn src(&self, se: SignedEdge) -> usize {
        let (s, d) = self.edges[se.edge];
        if se.forward {
            s
        } else {
            d
        }
    }

    pub fn dst(&self, se: SignedEdge) -> usize {
        let (s, d) = self.edges[se.edge];
        if se.forward {
            d
        } else {
            s
        }
    }

    /// Both endpoints of an edge lie in the edge's own stratum.
    pub fn edge_in_stratum(&self, e: usize, p: usize) -> bool {
        let (s, d) = self.edges[e];
        self.strat.edges[e] == p && self.strat.vertices[s] == p && self.strat.vertices[d] == p
    }
}

/// Checks model admissibility: the action respects incidence, cell
/// stabilizers fix boundaries pointwise (regularity), the stratification
/// is monotone with edges oriented and labeled exit-wise, and every edge
/// satisfies the unique-lift condition.
pub fn validate_gcomplex(x: &GComplex) -> Verdict {
    // action respects incidence
    for g in 0..x.group.order() {
        let act = &x.actions[g];
        for (e, &(s, d)) in x.edges.iter().enumerate() {
            if x.edges[act.e[e]] != (act.v[s], act.v[d]) {
                return Verdict::refuted(alloc::format!(
                    "element {g} maps edge e{e} off its endpoints"
                ));
            }
        }
        for (f, boundary) in x.faces.iter().enumerate() {
            let mapped: Vec<SignedEdge> = boundary
                .iter()
                .map(|se| SignedEdge {
                    edge: act.e[se.edge],
                    forward: se.forward,
                })
                .collect();
            let target = &x.faces[act.f[f]];
            let matches = target.len() == mapped.len()
                && (0..target.len())
                    .any(|rot| (0..target.len()).all(|k| target[(k + rot) % target.len()] == mapped[k]));
            if !matches {
                return Verdict::refuted(alloc::format!(
                    "element {g} maps face f{f} off its boundary"
                ));
            }
        }
    }
    // regularity: cell stabilizers fix boundaries pointwise
    for (e, &(s, d)) in x.edges.iter().enumerate() {
        for g in 0..x.group.order() {
            if x.actions[g].e[e] == e && (x.actions[g].v[s] != s || x.actions[g].v[d] != d) {
                return Verdict::refuted(alloc::format!(
                    "stabilizer of edge e{e} moves its endpoints (element {g})"
                ));
            }
        }
    }
    for (f, boundary) in x.faces.iter().enumerate() {
        for g in 0..x.group.order() {
            if x.actions[g].f[f] != f {
                continue;
            }
            for se in boundary {
                if x.actions[g].e[se.edge] != se.edge {
                    return Verdict::refuted(alloc::format!(
                        "stabilizer of face f{f} moves boundary edge e{} (element {g})",
                        se.edge
                    ));
                }
            }
        }
    }
    // stratification: action-invariance of labels
    for g in 0..x.group.order() {
        for c in x.cells() {
            if x.strat.of(c) != x.strat.of(x.act(g, c)) {
                return Verdict::refuted(alloc::format!("labels not action-invariant at {c}"));
            }
        }
    }
    // monotonicity: edges run from special to generic, labeled generically
    for (e, &(s, d)) in x.edges.iter().enumerate() {
        let (ps, pd, pe) = (x.strat.vertices[s], x.strat.vertices[d], x.strat.edges[e]);
        if !x.strat.poset.leq(ps, pd) {
            return Verdict::refuted(alloc::format!(
                "edge e{e} does not exit: strata of endpoints not increasing"
            ));
        }
        if pe != pd {
            return Verdict::refuted(alloc::format!(
                "edge e{e} not labeled by its generic endpoint"
            ));
        }
    }
    for (f, boundary) in x.faces.iter().enumerate() {
        let pf = x.strat.faces[f];
        let mut attained = false;
        for se in boundary {
            let pe = x.strat.edges[se.edge];
            if !x.strat.poset.leq(pe, pf) {
                return Verdict::refuted(alloc::format!(
                    "face f{f} label below boundary edge e{}",
                    se.edge
                ));
            }
            if pe == pf {
                attained = true;
            }
        }
        if !attained {
            return Verdict::refuted(alloc::format!("face f{f} label not attained on boundary"));
        }
    }
    // unique-lift condition: one edge of each orbit per target lift
    for e in 0..x.edges.len() {
        let edge_orbit: BTreeSet<usize> =
            (0..x.group.order()).map(|g| x.actions[g].e[e]).collect();
        let target_orbit: BTreeSet<usize> = (0..x.group.order())
            .map(|g| x.actions[g].v[x.edges[e].1])
            .collect();
        for &v in &target_orbit {
            let count = edge_orbit.iter().filter(|&&e2| x.edges[e2].1 == v).count();
            if count != 1 {
                return Verdict::refuted(alloc::format!(
                    "unique-lift condition fails: {count} edges of orbit of e{e} end at v{v}"
                ));
            }
        }
    }
    Verdict::Verified
}

/// Relabels every cell by the conjugacy class of its stabilizer, in the
/// opposite subconjugacy order (free cells sit on top, most generic).
pub fn stabilizer_stratification(x: &GComplex) -> Result<GComplex, ComplexError> {
    let classes = conjugacy_class_poset(&x.group)?.opposite();
    let poset = StratPoset::from_conj_classes(&classes);
    let class_of = |c: Cell| -> usize {
        classes
            .class_of(&x.stabilizer(c))
            .expect("stabilizer is classified")
    };
    let strat = StratMap {
        poset,
        vertices: (0..x.vertices).map(|i| class_of(Cell::V(i))).collect(),
        edges: (0..x.edges.len()).map(|i| class_of(Cell::E(i))).collect(),
        faces: (0..x.faces.len()).map(|i| class_of(Cell::F(i))).collect(),
    };
    let mut out = x.clone();
    out.strat = strat;
    Ok(out)
}

/// The quotient complex (trivial action) together with the cell maps and
/// the canonical minimal representative of each orbit.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub complex: GComplex,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub face_map: Vec<usize>,
    pub vertex_rep: Vec<usize>,
    pub edge_rep: Vec<usize>,
    pub face_rep: Vec<usize>,
}

pub fn quotient_complex(x: &GComplex) -> Result<Quotient, ComplexError> {
    if !validate_gcomplex(x).is_verified() {
        return Err(ComplexError::NotValidated(String::from(
            "quotient requires a validated complex",
        )));
    }
    fn orbits(n: usize, act: impl Fn(usize, usize) -> usize, order: usize) -> (Vec<usize>, Vec<usize>) {
        // returns (map cell -> orbit index, orbit reps), reps minimal
        let mut map = alloc::vec![usize::MAX; n];
        let mut reps = Vec::new();
        for c in 0..n {
            if map[c] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(c);
            for g in 0..order {
                map[act(g, c)] = idx;
            }
        }
        (map, reps)
    }
    let order = x.group.order();
    let (vertex_map, vertex_rep) = orbits(x.vertices, |g, c| x.actions[g].v[c], order);
    let (edge_map, edge_rep) = orbits(x.edges.len(), |g, c| x.actions[g].e[c], order);
    let (face_map, face_rep) = orbits(x.faces.len(), |g, c| x.actions[g].f[c], order);

    let edges: Vec<(usize, usize)> = edge_rep
        .iter()
        .map(|&e| (vertex_map[x.edges[e].0], vertex_map[x.edges[e].1]))
        .collect();
    let faces: Vec<Vec<SignedEdge>> = face_rep
        .iter()
        .map(|&f| {
            x.faces[f]
                .iter()
                .map(|se| SignedEdge {
                    edge: edge_map[se.edge],
                    forward: se.forward,
                })
                .collect()
        })
        .collect();
    let strat = StratMap {
        poset: x.strat.poset.clone(),
        vertices: vertex_rep.iter().map(|&v| x.strat.vertices[v]).collect(),
        edges: edge_rep.iter().map(|&e| x.strat.edges[e]).collect(),
        faces: face_rep.iter().map(|&f| x.strat.faces[f]).collect(),
    };
    let mut complex = GComplex::trivial_action(vertex_rep.len(), edges, faces)?;
    complex.strat = strat;
    complex.vertex_names = vertex_rep
        .iter()
        .map(|&v| alloc::format!("[{}]", x.vertex_names[v]))
        .collect();
    Ok(Quotient {
        complex,
        vertex_map,
        edge_map,
        face_map,
        vertex_rep,
        edge_rep,
        face_rep,
    })
}

/// Checks the three basic-neighborhood conditions for a vertex `v` and a
/// cell set `V`, plus the coproduct decomposition of the saturation.
pub fn check_basic_neighborhood(
    x: &GComplex,
    v: usize,
    cells: &BTreeSet<Cell>,
) -> Result<Verdict, ComplexError> {
    if !cells.contains(&Cell::V(v)) {
        return Err(ComplexError::NotANeighborhood(alloc::format!(
            "v{v} not in the candidate set"
        )));
    }
    let stab = x.stabilizer(Cell::V(v));
    // Inclusion: stabilizers of members sit inside the stabilizer of v
    for &c in cells {
        if !x.stabilizer(c).is_subgroup_of(&stab) {
            return Ok(Verdict::refuted(alloc::format!(
                "inclusion fails: stabilizer of {c} not inside stabilizer of v{v}"
            )));
        }
    }
    let translate = |g: ElemId| -> BTreeSet<Cell> { cells.iter().map(|&c| x.act(g, c)).collect() };
    // Discontinuity: non-stabilizing elements move V off itself
    for g in 0..x.group.order() {
        if stab.contains(g) {
            continue;
        }
        if !translate(g).is_disjoint(cells) {
            return Ok(Verdict::refuted(alloc::format!(
                "discontinuity fails: element {g} does not move the set off itself"
            )));
        }
    }
    // Symmetry: stabilizing elements preserve V
    for &g in stab.members() {
        if translate(g) != *cells {
            return Ok(Verdict::refuted(alloc::format!(
                "symmetry fails: stabilizer element {g} does not preserve the set"
            )));
        }
    }
    // Coproduct: the saturation is the disjoint union of coset translates
    let saturation: BTreeSet<Cell> = (0..x.group.order()).flat_map(&translate).collect();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut reps: Vec<ElemId> = Vec::new();
    for g in 0..x.group.order() {
        let t = translate(g);
        if t.is_disjoint(&seen) {
            reps.push(g);
            seen.extend(t);
        } else if !t.is_subset(&seen) {
            return Ok(Verdict::refuted(alloc::format!(
                "coproduct fails: translate by {g} partially overlaps earlier translates"
            )));
        }
    }
    if seen != saturation || reps.len() * stab.order() != x.group.order() {
        return Ok(Verdict::refuted("coproduct decomposition does not cover the saturation"));
    }
    Ok(Verdict::Verified)
}

/// Checks that the quotient map restricted to one stratum is a graph
/// covering: constant fiber size `|G| / |G_x|` per vertex orbit and unique
/// in-stratum edge lifts at both endpoints.
pub fn stratum_covering_check(x: &GComplex, p: usize) -> Result<Verdict, ComplexError> {
    let vertices: Vec<usize> = (0..x.vertices).filter(|&v| x.strat.vertices[v] == p).collect();
    let edges: Vec<usize> = (0..x.edges.len()).filter(|&e| x.edge_in_stratum(e, p)).collect();
    if vertices.is_empty() {
        return Err(ComplexError::EmptyStratum);
    }
    for &v in &vertices {
        let orbit = x.orbit(Cell::V(v));
        let expected = x.group.order() / x.stabilizer(Cell::V(v)).order();
        if orbit.len() != expected {
            return Ok(Verdict::refuted(alloc::format!(
                "fiber over orbit of v{v} has size {} instead of {expected}",
                orbit.len()
            )));
        }
    }
    for &e in &edges {
        let edge_orbit: BTreeSet<usize> = (0..x.group.order()).map(|g| x.actions[g].e[e]).collect();
        // each endpoint lift supports exactly one edge of the orbit
        type EndpointPick = fn(&(usize, usize)) -> usize;
        let pickers: [(&str, EndpointPick); 2] =
            [("target", |&(_, d)| d), ("source", |&(s, _)| s)];
        for (endpoint, pick) in pickers {
            let vertex_orbit: BTreeSet<usize> = edge_orbit
                .iter()
                .map(|&e2| pick(&x.edges[e2]))
                .collect();
            for &v in &vertex_orbit {
                let count = edge_orbit.iter().filter(|&&e2| pick(&x.edges[e2]) == v).count();
                if count != 1 {
                    return Ok(Verdict::refuted(alloc::format!(
                        "edge e{e}: {count} lifts share the {endpoint} v{v}"
                    )));
                }
            }
        }
    }
    Ok(Verdict::Verified)
}

/// Barycentric subdivision: one vertex per cell, one edge per incidence,
/// one triangle per chain vertex ≤ edge ≤ face. New edges are oriented by
/// comparing stabilizers (bigger stabilizer side is the source), which
/// restores exit-wise orientation on models where the raw action fails
/// regularity or unique lifting. The result carries its stabilizer
/// stratification.
pub fn barycentric_subdivide(x: &GComplex) -> Result<GComplex, ComplexError> {
    let nv = x.vertices;
    let ne = x.edges.len();
    let nf = x.faces.len();
    // new vertex ids: originals, then edge midpoints, then face centers
    let vid = |v: usize| v;
    let eid = |e: usize| nv + e;
    let fid = |f: usize| nv + ne + f;
    let new_vertices = nv + ne + nf;

    // stabilizers of the new vertices decide edge orientation
    let stab_of = |nvx: usize| -> Subgroup {
        if nvx < nv {
            x.stabilizer(Cell::V(nvx))
        } else if nvx < nv + ne {
            x.stabilizer(Cell::E(nvx - nv))
        } else {
            x.stabilizer(Cell::F(nvx - nv - ne))
        }
    };

    // edges: (vertex, midpoint) per edge endpoint; (midpoint, center) per
    // face boundary edge; (vertex, center) per face boundary vertex
    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum Inc {
        VE(usize, usize),
        EF(usize, usize),
        VF(usize, usize),
    }
    let mut incidences: BTreeSet<Inc> = BTreeSet::new();
    for (e, &(s, d)) in x.edges.iter().enumerate() {
        incidences.insert(Inc::VE(s, e));
        incidences.insert(Inc::VE(d, e));
    }
    for (f, boundary) in x.faces.iter().enumerate() {
        for se in boundary {
            incidences.insert(Inc::EF(se.edge, f));
            incidences.insert(Inc::VF(x.src(*se), f));
            incidences.insert(Inc::VF(x.dst(*se), f));
        }
    }
    let incidences: Vec<Inc> = incidences.into_iter().collect();
    let ends = |inc: &Inc| -> (usize, usize) {
        match *inc {
            Inc::VE(v, e) => (vid(v), eid(e)),
            Inc::EF(e, f) => (eid(e), fid(f)),
            Inc::VF(v, f) => (vid(v), fid(f)),
        }
    };
    // orient each new edge: bigger stabilizer (more special) at the source
    let mut new_edges: Vec<(usize, usize)> = Vec::new();
    for inc in &incidences {
        let (a, b) = ends(inc);
        let (sa, sb) = (stab_of(a), stab_of(b));
        if sb.is_subgroup_of(&sa) {
            new_edges.push((a, b));
        } else {
            new_edges.push((b, a));
        }
    }
    let edge_index = |inc: &Inc| -> usize {
        incidences.binary_search(inc).expect("incidence exists")
    };

    // triangles per chain v ≤ e ≤ f
    let mut new_faces: Vec<Vec<SignedEdge>> = Vec::new();
    let mut face_chains: Vec<(usize, usize, usize)> = Vec::new();
    for (f, boundary) in x.faces.iter().enumerate() {
        for se in boundary {
            for v in [x.src(*se), x.dst(*se)] {
                if face_chains.contains(&(v, se.edge, f)) {
                    continue;
                }
                face_chains.push((v, se.edge, f));
                // walk v -> m(e) -> c(f) -> v against stored orientations
                let i_ve = edge_index(&Inc::VE(v, se.edge));
                let i_ef = edge_index(&Inc::EF(se.edge, f));
                let i_vf = edge_index(&Inc::VF(v, f));
                let leg = |i: usize, from: usize| SignedEdge {
                    edge: i,
                    forward: new_edges[i].0 == from,
                };
                new_faces.push(alloc::vec![
                    leg(i_ve, vid(v)),
                    leg(i_ef, eid(se.edge)),
                    leg(i_vf, fid(f)).reversed(),
                ]);
            }
        }
    }

    // generator actions on the subdivision
    let mut gen_actions: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for g in x.group.generator_ids() {
        let act = &x.actions[g];
        let vmap: Vec<usize> = (0..new_vertices)
            .map(|w| {
                if w < nv {
                    vid(act.v[w])
                } else if w < nv + ne {
                    eid(act.e[w - nv])
                } else {
                    fid(act.f[w - nv - ne])
                }
            })
            .collect();
        let emap: Vec<usize> = incidences
            .iter()
            .map(|inc| {
                let image = match *inc {
                    Inc::VE(v, e) => Inc::VE(act.v[v], act.e[e]),
                    Inc::EF(e, f) => Inc::EF(act.e[e], act.f[f]),
                    Inc::VF(v, f) => Inc::VF(act.v[v], act.f[f]),
                };
                edge_index(&image)
            })
            .collect();
        gen_actions.push((vmap, emap));
    }

    let names: Vec<String> = (0..new_vertices)
        .map(|w| {
            if w < nv {
                x.vertex_names[w].clone()
            } else if w < nv + ne {
                alloc::format!("m(e{})", w - nv)
            } else {
                alloc::format!("c(f{})", w - nv - ne)
            }
        })
        .collect();
    let complex = GComplex::new(
        x.group.clone(),
        new_vertices,
        new_edges,
        new_faces,
        gen_actions,
    )?;
    let mut complex = stabilizer_stratification(&complex)?;
    complex.vertex_names = names;
    Ok(complex)
}

/// The cone: a new apex vertex fixed by the whole group, an edge from the
/// apex to every vertex, and a triangle over every original edge. The
/// stratification is the left cone of the original one, with the apex at
/// the freely adjoined minimum (old labels shift up by one).
pub fn cone_complex(x: &GComplex) -> Result<GComplex, ComplexError> {
    let apex = 0usize;
    let vid = |v: usize| v + 1;
    let vertices = x.vertices + 1;
    // cone edges apex -> v come first, then the original edges shifted
    let mut edges: Vec<(usize, usize)> = (0..x.vertices).map(|v| (apex, vid(v))).collect();
    let cone_edge = |v: usize| v;
    let old_edge = |e: usize| x.vertices + e;
    edges.extend(x.edges.iter().map(|&(s, d)| (vid(s), vid(d))));
    // old faces keep their boundaries; one new triangle per old edge:
    // apex -> src -> dst -> apex
    let mut faces: Vec<Vec<SignedEdge>> = x
        .faces
        .iter()
        .map(|b| {
            b.iter()
                .map(|se| SignedEdge {
                    edge: old_edge(se.edge),
                    forward: se.forward,
                })
                .collect()
        })
        .collect();
    for (e, &(s, d)) in x.edges.iter().enumerate() {
        faces.push(alloc::vec![
            SignedEdge::fwd(cone_edge(s)),
            SignedEdge::fwd(old_edge(e)),
            SignedEdge::back(cone_edge(d)),
        ]);
    }
    let gen_actions: Vec<(Vec<usize>, Vec<usize>)> = x
        .group
        .generator_ids()
        .into_iter()
        .map(|g| {
            let act = &x.actions[g];
            let mut vmap = alloc::vec![apex];
            vmap.extend(act.v.iter().map(|&v| vid(v)));
            let mut emap: Vec<usize> = act.v.iter().map(|&v| cone_edge(v)).collect();
            emap.extend(act.e.iter().map(|&e| old_edge(e)));
            (vmap, emap)
        })
        .collect();
    let mut complex = GComplex::new(x.group.clone(), vertices, edges, faces, gen_actions)?;
    // left-cone stratification: apex at the new minimum
    let poset = x.strat.poset.left_cone("apex");
    let mut vstrat = alloc::vec![0usize];
    vstrat.extend(x.strat.vertices.iter().map(|&p| p + 1));
    // a cone edge is labeled by its generic endpoint; the triangle over an
    // old edge by that edge's label
    let mut estrat: Vec<usize> = (0..x.vertices).map(|v| x.strat.vertices[v] + 1).collect();
    estrat.extend(x.strat.edges.iter().map(|&p| p + 1));
    let mut fstrat: Vec<usize> = x.strat.faces.iter().map(|&p| p + 1).collect();
    fstrat.extend(x.strat.edges.iter().map(|&p| p + 1));
    complex.strat = StratMap {
        poset,
        vertices: vstrat,
        edges: estrat,
        faces: fstrat,
    };
    let mut names = alloc::vec![String::from("apex")];
    names.extend(x.vertex_names.iter().cloned());
    complex.vertex_names = names;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;
    use crate::poset::depth_map;

    /// The reflection circle: a 4-cycle N, E, S, W with the flip swapping
    /// E and W; edges run from the fixed vertices out to the generic ones.
    pub fn reflection_circle() -> GComplex {
        let g = builtin("C2").unwrap();
        // vertices: 0 = N, 1 = E, 2 = S, 3 = W
        // edges: 0 = N->E, 1 = N->W, 2 = S->E, 3 = S->W
        let x = GComplex::new(
            g,
            4,
            alloc::vec![(0, 1), (0, 3), (2, 1), (2, 3)],
            Vec::new(),
            alloc::vec![(alloc::vec![0, 3, 2, 1], alloc::vec![1, 0, 3, 2])],
        )
        .unwrap()
        .with_vertex_names(&["N", "E", "S", "W"]);
        stabilizer_stratification(&x).unwrap()
    }

    /// Hexagon with the free rotation action of C3 (rotation by two).
    pub fn free_hexagon() -> GComplex {
        let g = builtin("C3").unwrap();
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let vperm: Vec<usize> = (0..6).map(|i| (i + 2) % 6).collect();
        let eperm: Vec<usize> = (0..6).map(|i| (i + 2) % 6).collect();
        let x = GComplex::new(g, 6, edges, Vec::new(), alloc::vec![(vperm, eperm)]).unwrap();
        stabilizer_stratification(&x).unwrap()
    }

    #[test]
    fn reflection_circle_is_valid() {
        assert!(validate_gcomplex(&reflection_circle()).is_verified());
    }

    #[test]
    fn extra_unswapped_edge_is_refuted() {
        let g = builtin("C2").unwrap();
        // add a fifth edge N->E that the flip allegedly fixes
        let x = GComplex::new(
            g,
            4,
            alloc::vec![(0, 1), (0, 3), (2, 1), (2, 3), (0, 1)],
            Vec::new(),
            alloc::vec![(alloc::vec![0, 3, 2, 1], alloc::vec![1, 0, 3, 2, 4])],
        )
        .unwrap();
        assert!(validate_gcomplex(&x).is_refuted());
    }

    #[test]
    fn trivial_action_is_valid() {
        let x = GComplex::trivial_action(3, alloc::vec![(0, 1), (1, 2)], Vec::new()).unwrap();
        assert!(validate_gcomplex(&x).is_verified());
    }

    #[test]
    fn reflection_circle_stratification() {
        let x = reflection_circle();
        // N, S carry the fixed-point class; E, W and all edges the free one
        let fixed = x.strat.vertices[0];
        let free = x.strat.vertices[1];
        assert_ne!(fixed, free);
        assert_eq!(x.strat.vertices, alloc::vec![fixed, free, fixed, free]);
        assert!(x.strat.edges.iter().all(|&p| p == free));
        // exit order: the free class is the more generic (higher) one
        assert!(x.strat.poset.lt(fixed, free));
    }

    #[test]
    fn conjugation_moves_stabilizers() {
        let x = reflection_circle();
        let g = &x.group;
        for c in x.cells() {
            for a in 0..g.order() {
                let moved = x.stabilizer(x.act(a, c));
                assert_eq!(moved, x.stabilizer(c).conjugate(g, a));
            }
        }
    }

    #[test]
    fn quotient_of_reflection_circle_is_a_path() {
        let x = reflection_circle();
        let q = quotient_complex(&x).unwrap();
        assert_eq!(q.complex.vertices, 3);
        assert_eq!(q.complex.edges.len(), 2);
        // strat descends: label of the orbit equals label of any member
        for v in 0..x.vertices {
            assert_eq!(
                x.strat.vertices[v],
                q.complex.strat.vertices[q.vertex_map[v]]
            );
        }
        assert!(validate_gcomplex(&q.complex).is_verified());
    }

    #[test]
    fn quotient_of_free_hexagon_is_a_two_gon() {
        let q = quotient_complex(&free_hexagon()).unwrap();
        assert_eq!(q.complex.vertices, 2);
        assert_eq!(q.complex.edges.len(), 2);
    }

    #[test]
    fn quotient_of_trivial_action_is_isomorphic() {
        let x = GComplex::trivial_action(3, alloc::vec![(0, 1), (1, 2)], Vec::new()).unwrap();
        let q = quotient_complex(&x).unwrap();
        assert_eq!(q.complex.vertices, x.vertices);
        assert_eq!(q.complex.edges, x.edges);
    }

    #[test]
    fn basic_neighborhoods_on_the_reflection_circle() {
        let x = reflection_circle();
        // around the fixed vertex N: everything near N
        let v: BTreeSet<Cell> = [Cell::V(0), Cell::E(0), Cell::E(1), Cell::V(1), Cell::V(3)]
            .into_iter()
            .collect();
        assert!(check_basic_neighborhood(&x, 0, &v).unwrap().is_verified());
        // around E alone
        let e: BTreeSet<Cell> = [Cell::V(1)].into_iter().collect();
        assert!(check_basic_neighborhood(&x, 1, &e).unwrap().is_verified());
        // all cells around E: discontinuity fails for the flip
        let all: BTreeSet<Cell> = x.cells().into_iter().collect();
        assert!(check_basic_neighborhood(&x, 1, &all).unwrap().is_refuted());
        // a set not containing its center is not a neighborhood
        assert!(check_basic_neighborhood(&x, 0, &e).is_err());
    }

    #[test]
    fn stratum_coverings() {
        let x = reflection_circle();
        let free = x.strat.vertices[1];
        let fixed = x.strat.vertices[0];
        assert!(stratum_covering_check(&x, free).unwrap().is_verified());
        assert!(stratum_covering_check(&x, fixed).unwrap().is_verified());
        // sheet counts: orbit sizes
        assert_eq!(x.orbit(Cell::V(1)).len(), 2);
        assert_eq!(x.orbit(Cell::V(0)).len(), 1);
        let h = free_hexagon();
        assert!(stratum_covering_check(&h, h.strat.vertices[0]).unwrap().is_verified());
        assert_eq!(h.orbit(Cell::V(0)).len(), 3);
        // a label with no cells
        assert_eq!(
            stratum_covering_check(&x, fixed.max(free) + 100).err(),
            Some(ComplexError::EmptyStratum)
        );
    }

    #[test]
    fn flipped_single_edge_subdivides_to_valid() {
        let g = builtin("C2").unwrap();
        // one edge whose endpoints are swapped: regularity and unique
        // lifting both fail before subdivision
        let x = GComplex::new(
            g,
            2,
            alloc::vec![(0, 1)],
            Vec::new(),
            alloc::vec![(alloc::vec![1, 0], alloc::vec![0])],
        )
        .unwrap();
        let x = stabilizer_stratification(&x).unwrap();
        assert!(validate_gcomplex(&x).is_refuted());
        let sub = barycentric_subdivide(&x).unwrap();
        assert_eq!(sub.vertices, 3);
        assert_eq!(sub.edges.len(), 2);
        assert!(validate_gcomplex(&sub).is_verified());
        // midpoint fixed, outer vertices swapped
        assert_eq!(sub.stabilizer(Cell::V(2)).order(), 2);
    }

    #[test]
    fn subdividing_trivial_path_stays_valid() {
        let x = GComplex::trivial_action(3, alloc::vec![(0, 1), (1, 2)], Vec::new()).unwrap();
        let sub = barycentric_subdivide(&x).unwrap();
        assert_eq!(sub.vertices, 5);
        assert_eq!(sub.edges.len(), 4);
        assert!(validate_gcomplex(&sub).is_verified());
    }

    #[test]
    fn hexagon_under_c6_subdivides_to_twelve_gon() {
        let g = crate::group::cyclic(6);
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let vperm: Vec<usize> = (0..6).map(|i| (i + 1) % 6).collect();
        let eperm = vperm.clone();
        let x = GComplex::new(g, 6, edges, Vec::new(), alloc::vec![(vperm, eperm)]).unwrap();
        let x = stabilizer_stratification(&x).unwrap();
        let sub = barycentric_subdivide(&x).unwrap();
        assert_eq!(sub.vertices, 12);
        assert_eq!(sub.edges.len(), 12);
        assert!(validate_gcomplex(&sub).is_verified());
    }

    #[test]
    fn subdividing_curated_style_models_stays_valid() {
        for x in [reflection_circle(), free_hexagon()] {
            let sub = barycentric_subdivide(&x).unwrap();
            assert!(validate_gcomplex(&sub).is_verified());
        }
    }

    #[test]
    fn cone_on_two_points() {
        let x = GComplex::trivial_action(2, Vec::new(), Vec::new()).unwrap();
        let c = cone_complex(&x).unwrap();
        assert_eq!(c.vertices, 3);
        assert_eq!(c.edges.len(), 2);
        assert!(validate_gcomplex(&c).is_verified());
        // the apex is the unique minimum of the induced stratification
        for v in 1..c.vertices {
            assert!(c.strat.poset.lt(c.strat.vertices[0], c.strat.vertices[v]));
        }
    }

    #[test]
    fn cone_on_rotating_square_has_fixed_apex() {
        let g = builtin("C4").unwrap();
        let edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        let vperm: Vec<usize> = (0..4).map(|i| (i + 1) % 4).collect();
        let x = GComplex::new(g, 4, edges, Vec::new(), alloc::vec![(vperm.clone(), vperm)])
            .unwrap();
        let cone = cone_complex(&x).unwrap();
        assert!(validate_gcomplex(&cone).is_verified());
        let strat = stabilizer_stratification(&cone).unwrap();
        assert_eq!(strat.stabilizer(Cell::V(0)).order(), 4);
        for v in 1..strat.vertices {
            assert_eq!(strat.stabilizer(Cell::V(v)).order(), 1);
        }
    }

    #[test]
    fn depth_composition_is_still_a_stratification() {
        let x = reflection_circle();
        let d = depth_map(&x.strat.poset);
        // composing with the depth map keeps edges monotone
        for (e, &(s, dv)) in x.edges.iter().enumerate() {
            let _ = e;
            assert!(d.map[x.strat.vertices[s]] <= d.map[x.strat.vertices[dv]]);
        }
    }
}
