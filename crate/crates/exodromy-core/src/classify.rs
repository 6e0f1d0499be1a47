//! The classification pipeline: the quotient functor between exit-path
//! categories is a right fibration, it is classified by a presheaf of
//! vertex fibers, that presheaf factors through the orbit category, and
//! the upstairs exit category is recovered as the pullback of the pointed
//! orbit category along that factorization. For free actions everything
//! degenerates to a covering classified by the one-object subcategory on
//! the free orbit.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{
    quotient_complex, stratum_covering_check, validate_gcomplex, Cell, GComplex, Quotient,
    SignedEdge,
};
use crate::exit::{exit_category, ExitCategory, ExitStatus};
use crate::fincat::{
    fibration_to_presheaf, find_natural_iso, is_right_fibration, pullback_categories, Functor,
    MorId, ObjId, Presheaf,
};
use crate::lift::{all_lifts, lift_path, lift_relations_check, project_word};
use crate::orbit::{
    build_orbit_category, build_pointed_orbit_category, forgetful_functor, OrbitCategory,
    PointedOrbitCategory,
};
use crate::report::{Verdict, VerificationReport};
use crate::word::{enumerate_exit_words, ExitWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    ActionNotFree(String),
    Construction(String),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::ActionNotFree(s) => write!(f, "action is not free: {s}"),
            ClassifyError::Construction(s) => write!(f, "construction failed: {s}"),
        }
    }
}

/// Everything the pipeline builds along the way.
pub struct ClassificationData {
    pub quotient: Quotient,
    pub exit_up: ExitCategory,
    pub exit_down: ExitCategory,
    pub orbit: OrbitCategory,
    pub pointed: PointedOrbitCategory,
    /// The quotient functor between materialized exit categories, when
    /// both are finite.
    pub pi: Option<Functor>,
}

/// The functor from the upstairs exit category to the quotient one: cells
/// map to their orbits, morphisms by projecting representative words.
pub fn quotient_exit_functor(
    q: &Quotient,
    up: &ExitCategory,
    down: &ExitCategory,
) -> Result<Functor, ClassifyError> {
    let (Some(fu), Some(fd)) = (&up.finite, &down.finite) else {
        return Err(ClassifyError::Construction(String::from(
            "both exit categories must be materialized",
        )));
    };
    let object_map: Vec<ObjId> = q.vertex_map.clone();
    let mut morphism_map: Vec<MorId> = Vec::with_capacity(fu.category.morphism_count());
    for (start, gens) in &fu.morph_words {
        let word = ExitWord {
            start: q.vertex_map[*start],
            steps: gens
                .iter()
                .map(|&g| {
                    let se = up.presentation.generators[g];
                    SignedEdge {
                        edge: q.edge_map[se.edge],
                        forward: se.forward,
                    }
                })
                .collect(),
        };
        let m = fd
            .morphism_of_word(&down.presentation, &word)
            .ok_or_else(|| {
                ClassifyError::Construction(String::from("projected word is not a morphism"))
            })?;
        morphism_map.push(m);
    }
    Ok(Functor {
        source: fu.category.clone(),
        target: fd.category.clone(),
        object_map,
        morphism_map,
    })
}

/// How the right-fibration property was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibrationRoute {
    /// Both exit categories are finite tables; the fibration condition is
    /// checked morphism by morphism.
    Finite,
    /// At least one exit category is infinite; unique lifting, the section
    /// property and relation lifting are certified on the presentations,
    /// with words enumerated up to a bound as corroboration.
    Presented,
}

/// Verifies that the quotient functor is a right fibration whose fiber
/// over each object is the corresponding vertex orbit.
pub fn verify_right_fibration(
    x: &GComplex,
    q: &Quotient,
    up: &ExitCategory,
    down: &ExitCategory,
    word_bound: usize,
) -> (Verdict, FibrationRoute, Option<Functor>) {
    // fiber sizes equal orbit sizes regardless of route
    for v in 0..q.complex.vertices {
        let fiber = (0..x.vertices).filter(|&w| q.vertex_map[w] == v).count();
        let rep = q.vertex_rep[v];
        let orbit = x.orbit(Cell::V(rep)).len();
        if fiber != orbit {
            return (
                Verdict::refuted(alloc::format!(
                    "fiber over [v{v}] has {fiber} vertices but the orbit has {orbit}"
                )),
                FibrationRoute::Presented,
                None,
            );
        }
    }
    if up.status == ExitStatus::Finite && down.status == ExitStatus::Finite {
        let pi = match quotient_exit_functor(q, up, down) {
            Ok(pi) => pi,
            Err(e) => {
                return (
                    Verdict::refuted(alloc::format!("{e}")),
                    FibrationRoute::Finite,
                    None,
                )
            }
        };
        let verdict = pi.check().and(is_right_fibration(&pi));
        return (verdict, FibrationRoute::Finite, Some(pi));
    }
    // presented route: the covering conditions certify unique lifting on
    // every stratum, and relation lifting certifies functoriality
    let mut verdict = Verdict::Verified;
    let strata: alloc::collections::BTreeSet<usize> =
        x.strat.vertices.iter().copied().collect();
    for p in strata {
        match stratum_covering_check(x, p) {
            Ok(v) => verdict = verdict.and(v),
            Err(e) => {
                return (
                    Verdict::refuted(alloc::format!("{e}")),
                    FibrationRoute::Presented,
                    None,
                )
            }
        }
    }
    verdict = verdict.and(lift_relations_check(x, q, &up.presentation, &down.presentation));
    // bounded corroboration: every short quotient word lifts uniquely per
    // endpoint lift and projecting the lift gives the word back
    for w in enumerate_exit_words(&q.complex, word_bound) {
        let lifts = match all_lifts(x, q, &w) {
            Ok(l) => l,
            Err(e) => {
                return (
                    Verdict::refuted(alloc::format!("lift failed: {e}")),
                    FibrationRoute::Presented,
                    None,
                )
            }
        };
        for lift in &lifts {
            if project_word(q, lift) != w {
                return (
                    Verdict::refuted(String::from("lift does not project back to its word")),
                    FibrationRoute::Presented,
                    None,
                );
            }
        }
    }
    (verdict, FibrationRoute::Presented, None)
}

/// The presheaf of vertex fibers on the quotient exit category: the value
/// at an object is the fiber of vertices over it, and a morphism acts by
/// lifting its word backwards from each endpoint lift.
pub fn omega_presheaf(
    x: &GComplex,
    q: &Quotient,
    down: &ExitCategory,
) -> Result<Presheaf, ClassifyError> {
    let fd = down.finite.as_ref().ok_or_else(|| {
        ClassifyError::Construction(String::from("quotient exit category must be finite"))
    })?;
    let fibers: Vec<Vec<usize>> = (0..q.complex.vertices)
        .map(|v| (0..x.vertices).filter(|&w| q.vertex_map[w] == v).collect())
        .collect();
    let sizes: Vec<usize> = fibers.iter().map(|f| f.len()).collect();
    let mut action: Vec<Vec<usize>> = Vec::with_capacity(fd.category.morphism_count());
    for (m, (start, gens)) in fd.morph_words.iter().enumerate() {
        let a = fd.category.src(m);
        let b = fd.category.dst(m);
        let word = ExitWord {
            start: *start,
            steps: gens.iter().map(|&g| down.presentation.generators[g]).collect(),
        };
        let mut table = Vec::with_capacity(sizes[b]);
        for &z in &fibers[b] {
            let lifted = lift_path(x, q, &word, z).map_err(|e| {
                ClassifyError::Construction(alloc::format!("cannot lift a morphism word: {e}"))
            })?;
            let y = lifted.start;
            let pos = fibers[a]
                .iter()
                .position(|&w| w == y)
                .expect("lift starts in the source fiber");
            table.push(pos);
        }
        action.push(table);
    }
    Ok(Presheaf {
        base: fd.category.clone(),
        sizes,
        action,
    })
}

/// The fiber presheaf is a presheaf of G-sets: the group permutes each
/// fiber and the lifting action commutes with it.
pub fn check_presheaf_equivariance(
    x: &GComplex,
    q: &Quotient,
    down: &ExitCategory,
    presheaf: &Presheaf,
) -> Verdict {
    let fd = down.finite.as_ref().expect("presheaf came from a finite category");
    let fibers: Vec<Vec<usize>> = (0..q.complex.vertices)
        .map(|v| (0..x.vertices).filter(|&w| q.vertex_map[w] == v).collect())
        .collect();
    for m in fd.category.morphisms() {
        let a = fd.category.src(m);
        let b = fd.category.dst(m);
        for g in 0..x.group.order() {
            for (i, &z) in fibers[b].iter().enumerate() {
                let gz = x.actions[g].v[z];
                let i_gz = fibers[b].iter().position(|&w| w == gz).expect("fibers are orbits");
                let lhs = fibers[a][presheaf.action[m][i_gz]];
                let rhs = x.actions[g].v[fibers[a][presheaf.action[m][i]]];
                if lhs != rhs {
                    return Verdict::refuted(alloc::format!(
                        "fiber action not equivariant at morphism {m}, element {g}"
                    ));
                }
            }
        }
    }
    Verdict::Verified
}

/// The classifying functor into the orbit category: an object goes to the
/// orbit of the stabilizer of its canonical representative, and a
/// morphism to the equivariant map its fiber action induces between
/// coset spaces. The source is the opposite of the quotient exit
/// category (paths are traversed backwards when restricting fibers).
pub fn omega_functor(
    x: &GComplex,
    q: &Quotient,
    down: &ExitCategory,
    orbit: &OrbitCategory,
) -> Result<Functor, ClassifyError> {
    let fd = down.finite.as_ref().ok_or_else(|| {
        ClassifyError::Construction(String::from("quotient exit category must be finite"))
    })?;
    let presheaf = omega_presheaf(x, q, down)?;
    let fibers: Vec<Vec<usize>> = (0..q.complex.vertices)
        .map(|v| (0..x.vertices).filter(|&w| q.vertex_map[w] == v).collect())
        .collect();
    // orbit-category object of a quotient vertex
    let orbit_object = |v: usize| -> Result<ObjId, ClassifyError> {
        let h = x.stabilizer(Cell::V(q.vertex_rep[v]));
        orbit
            .subgroups
            .iter()
            .position(|k| *k == h)
            .ok_or_else(|| ClassifyError::Construction(String::from("stabilizer not an object")))
    };
    let object_map: Vec<ObjId> = (0..q.complex.vertices)
        .map(orbit_object)
        .collect::<Result<_, _>>()?;
    // translate fiber elements to cosets: z = g·rep corresponds to the
    // coset of g
    let coset_of_fiber_point = |v: usize, z: usize| -> usize {
        let rep = q.vertex_rep[v];
        let g = (0..x.group.order())
            .find(|&g| x.actions[g].v[rep] == z)
            .expect("fibers are orbits");
        orbit.spaces[object_map[v]].coset_of(g)
    };
    let mut morphism_map: Vec<MorId> = Vec::with_capacity(fd.category.morphism_count());
    for m in fd.category.morphisms() {
        let a = fd.category.src(m);
        let b = fd.category.dst(m);
        let (ka, kb) = (object_map[a], object_map[b]);
        // the fiber action over m gives a map of coset spaces kb -> ka
        let mut point_map = alloc::vec![0usize; orbit.spaces[kb].len()];
        for (i, &z) in fibers[b].iter().enumerate() {
            let y = fibers[a][presheaf.action[m][i]];
            point_map[coset_of_fiber_point(b, z)] = coset_of_fiber_point(a, y);
        }
        let mor = orbit.morphism_of_map(kb, ka, &point_map).ok_or_else(|| {
            ClassifyError::Construction(String::from("fiber action is not an equivariant map"))
        })?;
        morphism_map.push(mor);
    }
    Ok(Functor {
        source: fd.category.opposite(),
        target: orbit.category.clone(),
        object_map,
        morphism_map,
    })
}

/// The pointed refinement of the classifying functor: an upstairs vertex
/// goes to the orbit of its representative's stabilizer, pointed at the
/// coset carrying the representative onto that vertex; a morphism goes to
/// the unique pointed morphism over its classifying image starting at
/// that basepoint.
pub fn omega_star_functor(
    x: &GComplex,
    q: &Quotient,
    up: &ExitCategory,
    down: &ExitCategory,
    orbit: &OrbitCategory,
    pointed: &PointedOrbitCategory,
    pi: &Functor,
) -> Result<Functor, ClassifyError> {
    let fu = up.finite.as_ref().ok_or_else(|| {
        ClassifyError::Construction(String::from("upstairs exit category must be finite"))
    })?;
    let omega = omega_functor(x, q, down, orbit)?;
    let forget = forgetful_functor(orbit, pointed);
    let enter_up = fu.category.opposite();

    let pointed_object = |z: usize| -> Result<ObjId, ClassifyError> {
        let v = q.vertex_map[z];
        let rep = q.vertex_rep[v];
        let k = omega.object_map[v];
        let g = (0..x.group.order())
            .find(|&g| x.actions[g].v[rep] == z)
            .expect("fibers are orbits");
        let coset = orbit.spaces[k].coset_of(g);
        pointed
            .objects
            .iter()
            .position(|&(obj, c)| obj == k && c == coset)
            .ok_or_else(|| ClassifyError::Construction(String::from("missing pointed object")))
    };
    let object_map: Vec<ObjId> = (0..x.vertices)
        .map(pointed_object)
        .collect::<Result<_, _>>()?;

    let mut morphism_map: Vec<MorId> = Vec::with_capacity(enter_up.morphism_count());
    for m in 0..enter_up.morphism_count() {
        // in the entering direction the morphism runs from the generic
        // vertex back to the special one
        let p_src = object_map[enter_up.src(m)];
        let p_dst = object_map[enter_up.dst(m)];
        let omega_m = omega.morphism_map[pi.morphism_map[m]];
        // the basepoint pins the pointed morphism over omega_m
        let left = (0..pointed.category.morphism_count())
            .find(|&pm| {
                pointed.category.src(pm) == p_src && forget.morphism_map[pm] == omega_m
            })
            .ok_or_else(|| {
                ClassifyError::Construction(String::from("no pointed lift of a morphism"))
            })?;
        if pointed.category.dst(left) != p_dst {
            return Err(ClassifyError::Construction(alloc::format!(
                "pointed lift of morphism {m} lands at the wrong basepoint"
            )));
        }
        morphism_map.push(left);
    }
    Ok(Functor {
        source: enter_up,
        target: pointed.category.clone(),
        object_map,
        morphism_map,
    })
}

/// Verifies that the opposite of the upstairs exit category is the
/// pullback of the pointed orbit category along the classifying functor:
/// the pointed refinement commutes with the forgetful functor, and the
/// canonical comparison into the pullback is an isomorphism of
/// categories with a functorial inverse.
pub fn verify_classification_pullback(
    x: &GComplex,
    q: &Quotient,
    up: &ExitCategory,
    down: &ExitCategory,
    orbit: &OrbitCategory,
    pointed: &PointedOrbitCategory,
    pi: &Functor,
) -> Result<Verdict, ClassifyError> {
    let fu = up.finite.as_ref().ok_or_else(|| {
        ClassifyError::Construction(String::from("upstairs exit category must be finite"))
    })?;
    let omega = omega_functor(x, q, down, orbit)?;
    let forget = forgetful_functor(orbit, pointed);
    let omega_star = omega_star_functor(x, q, up, down, orbit, pointed, pi)?;
    let pb = pullback_categories(&forget, &omega).ok_or_else(|| {
        ClassifyError::Construction(String::from("functors do not share a target"))
    })?;
    let enter_up = fu.category.opposite();

    // the square commutes on the nose: forgetting the basepoint of the
    // pointed refinement equals classifying the projected morphism
    for z in 0..x.vertices {
        if forget.object_map[omega_star.object_map[z]] != omega.object_map[pi.object_map[z]] {
            return Ok(Verdict::refuted(alloc::format!(
                "pointed and plain classifications disagree at v{z}"
            )));
        }
    }
    for m in 0..enter_up.morphism_count() {
        if forget.morphism_map[omega_star.morphism_map[m]]
            != omega.morphism_map[pi.morphism_map[m]]
        {
            return Ok(Verdict::refuted(alloc::format!(
                "pointed and plain classifications disagree at morphism {m}"
            )));
        }
    }

    let mut object_map: Vec<ObjId> = Vec::with_capacity(enter_up.object_count());
    for z in 0..x.vertices {
        let pair = (omega_star.object_map[z], pi.object_map[z]);
        let idx = pb
            .object_pairs
            .iter()
            .position(|&pr| pr == pair)
            .ok_or_else(|| {
                ClassifyError::Construction(String::from("vertex has no pullback object"))
            })?;
        object_map.push(idx);
    }
    let mut morphism_map: Vec<MorId> = Vec::with_capacity(enter_up.morphism_count());
    for m in 0..enter_up.morphism_count() {
        let (left, right) = (omega_star.morphism_map[m], pi.morphism_map[m]);
        let pm = (0..pb.category.morphism_count())
            .find(|&pm| {
                pb.proj_left.morphism_map[pm] == left && pb.proj_right.morphism_map[pm] == right
            })
            .ok_or_else(|| {
                ClassifyError::Construction(String::from("no pullback morphism for a pair"))
            })?;
        morphism_map.push(pm);
    }

    let comparison = Functor {
        source: enter_up.clone(),
        target: pb.category.clone(),
        object_map,
        morphism_map,
    };
    let mut verdict = comparison.check();
    // bijectivity on objects and morphisms makes the comparison an
    // isomorphism of categories
    let mut obj_inv = alloc::vec![usize::MAX; pb.category.object_count()];
    for (z, &o) in comparison.object_map.iter().enumerate() {
        obj_inv[o] = z;
    }
    let mut mor_inv = alloc::vec![usize::MAX; pb.category.morphism_count()];
    for (m, &p) in comparison.morphism_map.iter().enumerate() {
        mor_inv[p] = m;
    }
    if comparison.source.object_count() != pb.category.object_count()
        || obj_inv.contains(&usize::MAX)
    {
        verdict = verdict.and(Verdict::refuted("comparison not bijective on objects"));
    }
    if comparison.source.morphism_count() != pb.category.morphism_count()
        || mor_inv.contains(&usize::MAX)
    {
        verdict = verdict.and(Verdict::refuted("comparison not bijective on morphisms"));
    }
    if verdict.is_verified() {
        // the inverse assignment is itself a functor, so the two witness
        // functors are mutually inverse isomorphisms
        let inverse = Functor {
            source: pb.category.clone(),
            target: enter_up,
            object_map: obj_inv,
            morphism_map: mor_inv,
        };
        verdict = verdict.and(inverse.check());
    }
    Ok(verdict)
}

/// The degenerate picture for a free action: the quotient map is a
/// covering, fibers are constant of size `|G|`, and the classifying
/// functor lands on the free orbit, whose endomorphisms recover `G`.
pub fn free_action_report(
    x: &GComplex,
    q: &Quotient,
    up: &ExitCategory,
    orbit: &OrbitCategory,
) -> Result<VerificationReport, ClassifyError> {
    for c in x.cells() {
        let s = x.stabilizer(c);
        if s.order() != 1 {
            return Err(ClassifyError::ActionNotFree(alloc::format!(
                "{c} has stabilizer of order {}",
                s.order()
            )));
        }
    }
    let mut report = VerificationReport::new("free-action");
    // a free action lives on a single stratum
    let p0 = x.strat.vertices[0];
    let single = x
        .cells()
        .iter()
        .all(|&c| x.strat.of(c) == p0);
    report.push(
        "single-stratum",
        if single {
            Verdict::Verified
        } else {
            Verdict::refuted("free action spread over several strata")
        },
        "all cells share one stratum",
    );
    // every generator of the exit presentation is invertible
    let invertible = up.presentation.generators.iter().all(|&se| {
        up.presentation
            .generators
            .contains(&se.reversed())
    });
    report.push(
        "groupoid-presentation",
        if invertible {
            Verdict::Verified
        } else {
            Verdict::refuted("an edge traversal has no inverse generator")
        },
        "every edge traversal has an inverse",
    );
    // constant fiber of size |G|
    let order = x.group.order();
    let constant = (0..q.complex.vertices).all(|v| {
        (0..x.vertices).filter(|&w| q.vertex_map[w] == v).count() == order
    });
    report.push(
        "constant-fiber",
        if constant {
            Verdict::Verified
        } else {
            Verdict::refuted("a fiber deviates from the group order")
        },
        "every fiber has |G| vertices",
    );
    // covering on the single stratum
    let covering = stratum_covering_check(x, p0)
        .map_err(|e| ClassifyError::Construction(alloc::format!("{e}")))?;
    report.push("covering", covering, "the quotient map is a covering");
    // the classifying functor is constant at the free orbit, where the
    // endomorphisms are the group itself
    let trivial = orbit.trivial_object();
    let on_free_orbit = (0..q.complex.vertices).all(|v| {
        x.stabilizer(Cell::V(q.vertex_rep[v])).order() == 1
    });
    let endos = orbit.category.hom(trivial, trivial).len();
    report.push(
        "classified-by-group",
        if on_free_orbit && endos == order {
            Verdict::Verified
        } else {
            Verdict::refuted("classifying functor leaves the free orbit")
        },
        "all objects classify to the free orbit with End = G",
    );
    Ok(report)
}

/// Runs the whole pipeline on one model and reports each stage.
pub fn classify(
    x: &GComplex,
    budget: usize,
    word_bound: usize,
) -> Result<(VerificationReport, ClassificationData), ClassifyError> {
    let mut report = VerificationReport::new("classification");
    report.push("complex", validate_gcomplex(x), "model admissibility");
    let q = quotient_complex(x)
        .map_err(|e| ClassifyError::Construction(alloc::format!("{e}")))?;
    let exit_up = exit_category(x, budget)
        .map_err(|e| ClassifyError::Construction(alloc::format!("{e}")))?;
    let exit_down = exit_category(&q.complex, budget)
        .map_err(|e| ClassifyError::Construction(alloc::format!("{e}")))?;
    let orbit = build_orbit_category(&x.group)
        .map_err(|e| ClassifyError::Construction(alloc::format!("{e}")))?;
    let pointed = build_pointed_orbit_category(&orbit);

    // along every entering edge the stabilizer grows: the generic
    // endpoint's stabilizer sits inside the special endpoint's
    let mut incl = Verdict::Verified;
    for &(s, d) in &x.edges {
        let (gs, gd) = (x.stabilizer(Cell::V(s)), x.stabilizer(Cell::V(d)));
        if !gd.is_subgroup_of(&gs) {
            incl = Verdict::refuted(alloc::format!(
                "stabilizer of v{d} is not contained in the stabilizer of v{s}"
            ));
            break;
        }
    }
    report.push(
        "stabilizer-inclusion",
        incl,
        "stabilizers grow along entering edges",
    );

    let (fib, route, pi) = verify_right_fibration(x, &q, &exit_up, &exit_down, word_bound);
    report.push(
        "right-fibration",
        fib,
        match route {
            FibrationRoute::Finite => "checked on finite tables",
            FibrationRoute::Presented => "certified on presentations",
        },
    );

    if exit_down.status == ExitStatus::Finite {
        let presheaf = omega_presheaf(x, &q, &exit_down)?;
        let mut v = presheaf.check();
        v = v.and(check_presheaf_equivariance(x, &q, &exit_down, &presheaf));
        if let Some(pi) = &pi {
            // the combinatorial fiber presheaf agrees with the one the
            // fibration determines categorically
            match fibration_to_presheaf(pi) {
                Ok((categorical, _)) => {
                    if find_natural_iso(&presheaf, &categorical).is_none() {
                        v = v.and(Verdict::refuted(
                            "fiber presheaf differs from the fibration presheaf",
                        ));
                    }
                }
                Err(_) => {
                    v = v.and(Verdict::refuted("quotient functor is not a fibration"));
                }
            }
        }
        report.push("fiber-presheaf", v, "classified by the presheaf of fibers");
    }

    if exit_up.status == ExitStatus::Finite && exit_down.status == ExitStatus::Finite {
        let pi_ref = pi.as_ref().expect("finite route built the functor");
        let v = verify_classification_pullback(x, &q, &exit_up, &exit_down, &orbit, &pointed, pi_ref)?;
        report.push(
            "classification-pullback",
            v,
            "exit category recovered as a pullback over the orbit category",
        );
    }

    let free = x.cells().iter().all(|&c| x.stabilizer(c).order() == 1);
    if free {
        let sub = free_action_report(x, &q, &exit_up, &orbit)?;
        report.push(
            "free-degeneration",
            sub.overall(),
            "covering picture for a free action",
        );
    }

    let data = ClassificationData {
        quotient: q,
        exit_up,
        exit_down,
        orbit,
        pointed,
        pi,
    };
    Ok((report, data))
}
