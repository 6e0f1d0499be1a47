//! Lifting exit words through the quotient map.
//!
//! Lifts are built backwards from a chosen lift of the endpoint: the
//! unique-lift condition picks out one upstairs edge over each forward
//! step, and the in-stratum covering property does the same for backward
//! steps. Every exit word downstairs therefore has exactly one lift per
//! endpoint lift, and the number of lifts is the orbit size of the
//! endpoint fiber.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{GComplex, Quotient, SignedEdge};
use crate::exit::ExitPresentation;
use crate::report::Verdict;
use crate::rewrite::Equality;
use crate::word::{ExitWord, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    /// The chosen endpoint lift does not sit over the word's endpoint.
    InvalidEndLift { end_lift: usize, end: usize },
    /// A step has no unique upstairs edge over it ending at the current
    /// lift; the complex fails its covering properties.
    NoLift { step: usize, found: usize },
    Word(WordError),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::InvalidEndLift { end_lift, end } => {
                write!(f, "v{end_lift} does not lie over the endpoint [v{end}]")
            }
            LiftError::NoLift { step, found } => {
                write!(f, "step {step} has {found} lifts instead of one")
            }
            LiftError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl From<WordError> for LiftError {
    fn from(e: WordError) -> LiftError {
        LiftError::Word(e)
    }
}

/// The image of an upstairs exit word in the quotient.
pub fn project_word(q: &Quotient, w: &ExitWord) -> ExitWord {
    ExitWord {
        start: q.vertex_map[w.start],
        steps: w
            .steps
            .iter()
            .map(|&se| SignedEdge {
                edge: q.edge_map[se.edge],
                forward: se.forward,
            })
            .collect(),
    }
}

/// Lifts a quotient exit word against a chosen lift of its endpoint,
/// working backwards step by step.
pub fn lift_path(
    x: &GComplex,
    q: &Quotient,
    w: &ExitWord,
    end_lift: usize,
) -> Result<ExitWord, LiftError> {
    w.validate(&q.complex)?;
    let end = w.end(&q.complex);
    if q.vertex_map[end_lift] != end {
        return Err(LiftError::InvalidEndLift { end_lift, end });
    }
    let mut at = end_lift;
    let mut steps_rev: Vec<SignedEdge> = Vec::with_capacity(w.steps.len());
    for (i, &se) in w.steps.iter().enumerate().rev() {
        // upstairs edges over this quotient edge
        let fiber: Vec<usize> = (0..x.edges.len())
            .filter(|&e| q.edge_map[e] == se.edge)
            .collect();
        // a forward step is pinned by its target lift, a backward step
        // (which ends at the stored source) by its source lift
        let matches: Vec<usize> = fiber
            .iter()
            .copied()
            .filter(|&e| {
                if se.forward {
                    x.edges[e].1 == at
                } else {
                    x.edges[e].0 == at
                }
            })
            .collect();
        let [e] = matches[..] else {
            return Err(LiftError::NoLift {
                step: i,
                found: matches.len(),
            });
        };
        steps_rev.push(SignedEdge {
            edge: e,
            forward: se.forward,
        });
        at = if se.forward { x.edges[e].0 } else { x.edges[e].1 };
    }
    steps_rev.reverse();
    let lifted = ExitWord {
        start: at,
        steps: steps_rev,
    };
    lifted.validate(x)?;
    Ok(lifted)
}

/// All lifts of a quotient exit word, one per lift of its endpoint.
pub fn all_lifts(x: &GComplex, q: &Quotient, w: &ExitWord) -> Result<Vec<ExitWord>, LiftError> {
    w.validate(&q.complex)?;
    let end = w.end(&q.complex);
    (0..x.vertices)
        .filter(|&v| q.vertex_map[v] == end)
        .map(|v| lift_path(x, q, w, v))
        .collect()
}

/// Checks that lifting respects the relations of the quotient exit
/// category: both sides of every relation, lifted against every endpoint
/// lift, present the same upstairs morphism (by bounded word equality).
pub fn lift_relations_check(
    x: &GComplex,
    q: &Quotient,
    up: &ExitPresentation,
    down: &ExitPresentation,
) -> Verdict {
    let mut verdict = Verdict::Verified;
    for (a, b) in &down.relations {
        let side = if a.is_empty() { b } else { a };
        let Some(&first) = side.first() else { continue };
        let start = down.alphabet.src[first];
        let word = |gens: &[usize]| ExitWord {
            start,
            steps: gens.iter().map(|&g| down.generators[g]).collect(),
        };
        let (wa, wb) = (word(a), word(b));
        let end = wa.end(&q.complex);
        for end_lift in (0..x.vertices).filter(|&v| q.vertex_map[v] == end) {
            let (la, lb) = match (
                lift_path(x, q, &wa, end_lift),
                lift_path(x, q, &wb, end_lift),
            ) {
                (Ok(la), Ok(lb)) => (la, lb),
                (ra, rb) => {
                    return Verdict::refuted(alloc::format!(
                        "a relation side fails to lift at v{end_lift}: {:?} / {:?}",
                        ra.err(),
                        rb.err()
                    ))
                }
            };
            match up.words_equal(&la, &lb) {
                Equality::Equal => {}
                Equality::Distinct => {
                    return Verdict::refuted(alloc::format!(
                        "lifted relation sides disagree at v{end_lift}"
                    ))
                }
                Equality::Unknown => {
                    verdict = verdict.and(Verdict::Undecided {
                        budget: up.system.applications,
                    })
                }
            }
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{quotient_complex, stabilizer_stratification};
    use crate::exit::exit_category;
    use crate::group::builtin;
    use crate::rewrite::DEFAULT_REWRITE_BUDGET;
    use crate::word::enumerate_exit_words;

    fn reflection_circle() -> GComplex {
        let g = builtin("C2").unwrap();
        let x = GComplex::new(
            g,
            4,
            alloc::vec![(0, 1), (0, 3), (2, 1), (2, 3)],
            Vec::new(),
            alloc::vec![(alloc::vec![0, 3, 2, 1], alloc::vec![1, 0, 3, 2])],
        )
        .unwrap();
        stabilizer_stratification(&x).unwrap()
    }

    fn free_hexagon() -> GComplex {
        let g = builtin("C3").unwrap();
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let vperm: Vec<usize> = (0..6).map(|i| (i + 2) % 6).collect();
        let eperm = vperm.clone();
        let x = GComplex::new(g, 6, edges, Vec::new(), alloc::vec![(vperm, eperm)]).unwrap();
        stabilizer_stratification(&x).unwrap()
    }

    #[test]
    fn lift_counts_match_fiber_sizes() {
        for x in [reflection_circle(), free_hexagon()] {
            let q = quotient_complex(&x).unwrap();
            for w in enumerate_exit_words(&q.complex, 6) {
                let end = w.end(&q.complex);
                let fiber = (0..x.vertices).filter(|&v| q.vertex_map[v] == end).count();
                let lifts = all_lifts(&x, &q, &w).unwrap();
                assert_eq!(lifts.len(), fiber);
                // the fiber size is the orbit size |G| / |G_y|
                let rep = q.vertex_rep[end];
                let stab = x.stabilizer(crate::complex::Cell::V(rep)).order();
                assert_eq!(fiber, x.group.order() / stab);
            }
        }
    }

    #[test]
    fn lifting_is_a_section_of_projection() {
        for x in [reflection_circle(), free_hexagon()] {
            let q = quotient_complex(&x).unwrap();
            // projecting an upstairs word and lifting it back at its own
            // endpoint returns the original word
            for w in enumerate_exit_words(&x, 5) {
                let down = project_word(&q, &w);
                assert!(down.validate(&q.complex).is_ok());
                let back = lift_path(&x, &q, &down, w.end(&x)).unwrap();
                assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn distinct_end_lifts_give_distinct_lifts() {
        let x = free_hexagon();
        let q = quotient_complex(&x).unwrap();
        for w in enumerate_exit_words(&q.complex, 4) {
            let lifts = all_lifts(&x, &q, &w).unwrap();
            for i in 0..lifts.len() {
                for j in i + 1..lifts.len() {
                    assert_ne!(lifts[i], lifts[j]);
                }
            }
        }
    }

    #[test]
    fn wrong_end_lift_is_rejected() {
        let x = reflection_circle();
        let q = quotient_complex(&x).unwrap();
        // the constant word at [N] cannot end at E (a different orbit)
        let w = ExitWord::constant(q.vertex_map[0]);
        assert!(matches!(
            lift_path(&x, &q, &w, 1),
            Err(LiftError::InvalidEndLift { .. })
        ));
    }

    #[test]
    fn relations_lift_on_curated_style_models() {
        for x in [reflection_circle(), free_hexagon()] {
            let q = quotient_complex(&x).unwrap();
            let up = exit_category(&x, DEFAULT_REWRITE_BUDGET).unwrap();
            let down = exit_category(&q.complex, DEFAULT_REWRITE_BUDGET).unwrap();
            assert!(lift_relations_check(&x, &q, &up.presentation, &down.presentation)
                .is_verified());
        }
    }
}
