//! The exit-path category of a stratified complex, by presentation and
//! bounded rewriting.
//!
//! Objects are the vertices; generating morphisms are the admissible
//! signed edge traversals (every forward edge, plus backward traversals of
//! in-stratum edges). Relations identify the two admissible arcs of every
//! face boundary between any two of its vertices, and cancel in-stratum
//! edges against their inverses. A bounded Knuth–Bendix completion turns
//! the presentation into a decision procedure; when the set of normal
//! forms closes up finitely the category is materialized as tables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{GComplex, SignedEdge};
use crate::fincat::{FiniteCategory, MorId, ObjId};
use crate::rewrite::{materialize_normal_forms, Equality, PathAlphabet, RewriteSystem};
use crate::word::{ExitWord, WordError};

/// The generators-and-relations description of an exit-path category.
#[derive(Debug, Clone)]
pub struct ExitPresentation {
    /// Admissible signed edge traversals, in deterministic order.
    pub generators: Vec<SignedEdge>,
    pub alphabet: PathAlphabet,
    pub relations: Vec<(Vec<usize>, Vec<usize>)>,
    pub system: RewriteSystem,
}

impl ExitPresentation {
    /// The generator id of a signed edge, if admissible.
    pub fn generator_of(&self, se: SignedEdge) -> Option<usize> {
        self.generators.iter().position(|&g| g == se)
    }

    /// Translates an exit word into a generator word.
    pub fn word_of(&self, w: &ExitWord) -> Option<(usize, Vec<usize>)> {
        let mut out = Vec::with_capacity(w.steps.len());
        for &se in &w.steps {
            out.push(self.generator_of(se)?);
        }
        Some((w.start, out))
    }

    /// Bounded equality of two exit words with a common start vertex.
    pub fn words_equal(&self, a: &ExitWord, b: &ExitWord) -> Equality {
        match (self.word_of(a), self.word_of(b)) {
            (Some((sa, wa)), Some((sb, wb))) => {
                if sa != sb {
                    Equality::Distinct
                } else {
                    self.system.words_equal(&wa, &wb)
                }
            }
            _ => Equality::Distinct,
        }
    }
}

/// The materialized exit category: finite tables plus, for each morphism,
/// a representative word.
#[derive(Debug, Clone)]
pub struct FiniteExit {
    pub category: FiniteCategory,
    /// For each morphism, its start vertex and normal-form generator word.
    pub morph_words: Vec<(usize, Vec<usize>)>,
}

impl FiniteExit {
    /// The morphism an exit word presents, looked up by normal form.
    pub fn morphism_of_word(&self, pres: &ExitPresentation, w: &ExitWord) -> Option<MorId> {
        let (start, word) = pres.word_of(w)?;
        let key = (start, pres.system.normalize(&word));
        self.morph_words.iter().position(|mw| *mw == key)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// Completion finished and the normal forms closed up finitely.
    Finite,
    /// Completion finished but there are infinitely many morphisms (or
    /// more than the cap); the presentation still decides word equality.
    PresentedOnly,
    /// Completion ran out of budget; only bounded equality is available.
    Undecided,
}

#[derive(Debug, Clone)]
pub struct ExitCategory {
    pub presentation: ExitPresentation,
    pub finite: Option<FiniteExit>,
    pub status: ExitStatus,
}

/// Default cap on materialized morphisms.
pub const DEFAULT_MATERIALIZE_CAP: usize = 4_096;

fn boundary_vertices(x: &GComplex, boundary: &[SignedEdge]) -> Vec<usize> {
    boundary.iter().map(|&se| x.src(se)).collect()
}

/// All relations of the presentation: parallel admissible arcs of each
/// face boundary (including whole loops against the empty word) and the
/// cancellation of in-stratum edges with their reverses.
fn exit_relations(
    x: &GComplex,
    generators: &[SignedEdge],
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let gen_of = |se: SignedEdge| generators.iter().position(|&g| g == se);
    // translate a slice of signed edges into a generator word, checking
    // admissibility (including monotonicity) via the word validator
    let word_of = |start: usize, steps: &[SignedEdge]| -> Option<Vec<usize>> {
        let w = ExitWord {
            start,
            steps: steps.to_vec(),
        };
        if w.validate(x) != Ok(()) {
            return None;
        }
        steps.iter().map(|&se| gen_of(se)).collect()
    };
    let mut rels: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for boundary in &x.faces {
        let n = boundary.len();
        let verts = boundary_vertices(x, boundary);
        for i in 0..n {
            for len in 0..=n {
                // forward arc: steps i, i+1, ..., i+len-1 around the walk
                let fwd: Vec<SignedEdge> = (0..len).map(|k| boundary[(i + k) % n]).collect();
                // complementary arc, traversed against the boundary
                let back: Vec<SignedEdge> = (len..n)
                    .rev()
                    .map(|k| boundary[(i + k) % n].reversed())
                    .collect();
                if fwd.is_empty() && back.is_empty() {
                    continue;
                }
                let (Some(a), Some(b)) = (word_of(verts[i], &fwd), word_of(verts[i], &back))
                else {
                    continue;
                };
                let rel = if a <= b { (a, b) } else { (b, a) };
                if rel.0 != rel.1 {
                    rels.insert(rel);
                }
            }
        }
    }
    // in-stratum edges cancel against their reverses in both orders
    for (e, &(s, d)) in x.edges.iter().enumerate() {
        let p = x.strat.edges[e];
        if !x.edge_in_stratum(e, p) {
            continue;
        }
        let (f, b) = (
            gen_of(SignedEdge::fwd(e)).expect("forward edges are generators"),
            gen_of(SignedEdge::back(e)).expect("in-stratum reverses are generators"),
        );
        let _ = (s, d);
        rels.insert((alloc::vec![f, b], Vec::new()));
        rels.insert((alloc::vec![b, f], Vec::new()));
    }
    rels.into_iter().collect()
}

/// Builds the exit-path category of a validated complex, spending at most
/// `budget` rewrite applications on completion and capping materialization
/// at `DEFAULT_MATERIALIZE_CAP` morphisms.
pub fn exit_category(x: &GComplex, budget: usize) -> Result<ExitCategory, WordError> {
    // generators: all forward edges, then backward in-stratum edges
    let mut generators: Vec<SignedEdge> = (0..x.edges.len()).map(SignedEdge::fwd).collect();
    for e in 0..x.edges.len() {
        if x.edge_in_stratum(e, x.strat.edges[e]) {
            generators.push(SignedEdge::back(e));
        }
    }
    for &se in &generators {
        let w = ExitWord {
            start: x.src(se),
            steps: alloc::vec![se],
        };
        w.validate(x)?;
    }
    let alphabet = PathAlphabet {
        src: generators.iter().map(|&se| x.src(se)).collect(),
        dst: generators.iter().map(|&se| x.dst(se)).collect(),
    };
    let relations = exit_relations(x, &generators);
    let system = RewriteSystem::complete(alphabet.clone(), &relations, budget);
    let presentation = ExitPresentation {
        generators,
        alphabet,
        relations,
        system,
    };
    if !presentation.system.complete {
        return Ok(ExitCategory {
            presentation,
            finite: None,
            status: ExitStatus::Undecided,
        });
    }
    let Some(normal_forms) =
        materialize_normal_forms(&presentation.system, x.vertices, DEFAULT_MATERIALIZE_CAP)
    else {
        return Ok(ExitCategory {
            presentation,
            finite: None,
            status: ExitStatus::PresentedOnly,
        });
    };
    // assemble tables: morphisms in normal-form order
    let morph_words: Vec<(usize, Vec<usize>)> = normal_forms.keys().cloned().collect();
    let index: BTreeMap<&(usize, Vec<usize>), MorId> =
        morph_words.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let objects: Vec<String> = x.vertex_names.clone();
    let morphisms: Vec<(ObjId, ObjId)> = morph_words
        .iter()
        .map(|(start, w)| {
            (
                *start,
                presentation.alphabet.word_dst(w, *start),
            )
        })
        .collect();
    let identities: Vec<MorId> = (0..x.vertices)
        .map(|v| index[&(v, Vec::new())])
        .collect();
    let mut compose: BTreeMap<(MorId, MorId), MorId> = BTreeMap::new();
    for (fi, (fs, fw)) in morph_words.iter().enumerate() {
        for (gi, (gs, gw)) in morph_words.iter().enumerate() {
            // g after f: f must end where g starts
            if presentation.alphabet.word_dst(fw, *fs) != *gs {
                continue;
            }
            let mut both = fw.clone();
            both.extend_from_slice(gw);
            let nf = presentation.system.normalize(&both);
            compose.insert((gi, fi), index[&(*fs, nf)]);
        }
    }
    let category = FiniteCategory::new(objects, morphisms, identities, compose);
    Ok(ExitCategory {
        presentation,
        finite: Some(FiniteExit {
            category,
            morph_words,
        }),
        status: ExitStatus::Finite,
    })
}

/// Every morphism invertible.
pub fn is_groupoid(c: &FiniteCategory) -> bool {
    c.morphisms().all(|m| c.is_iso(m))
}

/// Exactly one morphism between every ordered pair of objects.
pub fn is_codiscrete(c: &FiniteCategory) -> bool {
    (0..c.object_count())
        .all(|a| (0..c.object_count()).all(|b| c.hom(a, b).len() == 1))
}
