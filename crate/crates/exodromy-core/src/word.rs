//! Exit words: edge paths whose stratum profile weakly increases.
//!
//! A word starts at a vertex and traverses signed edges; traversing an edge
//! backward is only allowed when both endpoints share a stratum (leaving a
//! stratum cannot be undone). The segmentation splits a word into the
//! strata it traverses: the first segment may be a single vertex (the word
//! exits at its very first step), later segments contain at least one step.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::{GComplex, SignedEdge};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExitWord {
    pub start: usize,
    pub steps: Vec<SignedEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    BadStart,
    NotComposable { step: usize },
    NotMonotone { step: usize },
    InverseAcrossStrata { step: usize },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::BadStart => write!(f, "start vertex out of range"),
            WordError::NotComposable { step } => write!(f, "step {step} does not chain"),
            WordError::NotMonotone { step } => write!(f, "step {step} re-enters a left stratum"),
            WordError::InverseAcrossStrata { step } => {
                write!(f, "step {step} traverses an exiting edge backward")
            }
        }
    }
}

impl ExitWord {
    pub fn constant(vertex: usize) -> ExitWord {
        ExitWord {
            start: vertex,
            steps: Vec::new(),
        }
    }

    pub fn end(&self, x: &GComplex) -> usize {
        self.steps.last().map_or(self.start, |&se| x.dst(se))
    }

    /// The vertices visited, including both endpoints.
    pub fn vertices(&self, x: &GComplex) -> Vec<usize> {
        let mut out = alloc::vec![self.start];
        out.extend(self.steps.iter().map(|&se| x.dst(se)));
        out
    }

    pub fn validate(&self, x: &GComplex) -> Result<(), WordError> {
        if self.start >= x.vertices {
            return Err(WordError::BadStart);
        }
        let mut at = self.start;
        for (i, &se) in self.steps.iter().enumerate() {
            if se.edge >= x.edges.len() || x.src(se) != at {
                return Err(WordError::NotComposable { step: i });
            }
            let (ps, pd) = (x.strat.vertices[x.src(se)], x.strat.vertices[x.dst(se)]);
            if !se.forward {
                // backward traversal stays within a stratum
                if ps != pd {
                    return Err(WordError::InverseAcrossStrata { step: i });
                }
            } else if !x.strat.poset.leq(ps, pd) {
                return Err(WordError::NotMonotone { step: i });
            }
            at = x.dst(se);
        }
        Ok(())
    }

    /// Concatenation; the other word must start where this one ends.
    pub fn concat(&self, x: &GComplex, other: &ExitWord) -> Option<ExitWord> {
        (self.end(x) == other.start).then(|| {
            let mut steps = self.steps.clone();
            steps.extend(other.steps.iter().copied());
            ExitWord {
                start: self.start,
                steps,
            }
        })
    }
}

/// The partition of a word into the strata it traverses. `boundaries` has
/// one more entry than `strata`; segment `k` consists of the steps in
/// `boundaries[k]..boundaries[k+1]` and lies in stratum `strata[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segmentation {
    pub boundaries: Vec<usize>,
    pub strata: Vec<usize>,
}

impl Segmentation {
    pub fn segments(&self) -> usize {
        self.strata.len()
    }

    /// The steps of segment `k` from the original word.
    pub fn segment_steps<'a>(&self, w: &'a ExitWord, k: usize) -> &'a [SignedEdge] {
        &w.steps[self.boundaries[k]..self.boundaries[k + 1]]
    }
}

/// Splits a valid word at its stratum changes. The resulting stratum
/// sequence is a strictly increasing chain; only the first segment may
/// contain no steps (the word leaves its initial stratum immediately).
pub fn segmentation(x: &GComplex, w: &ExitWord) -> Result<Segmentation, WordError> {
    w.validate(x)?;
    let mut boundaries = alloc::vec![0usize];
    let mut strata = alloc::vec![x.strat.vertices[w.start]];
    for (i, &se) in w.steps.iter().enumerate() {
        let p = x.strat.vertices[x.dst(se)];
        if p != *strata.last().expect("nonempty") {
            boundaries.push(i);
            strata.push(p);
        }
    }
    boundaries.push(w.steps.len());
    Ok(Segmentation { boundaries, strata })
}

/// The number of strata a word traverses.
pub fn path_length(x: &GComplex, w: &ExitWord) -> Result<usize, WordError> {
    Ok(segmentation(x, w)?.segments())
}

/// True when the word leaves its initial stratum at its first step and
/// stays in a single stratum thereafter. Words that never leave their
/// stratum count as immediately exiting in a degenerate sense; callers
/// that care report them separately via `path_length == 1`.
pub fn is_immediately_exiting(x: &GComplex, w: &ExitWord) -> Result<bool, WordError> {
    let seg = segmentation(x, w)?;
    Ok(match seg.segments() {
        1 => true,
        2 => seg.boundaries[1] == 0,
        _ => false,
    })
}

/// All valid exit words with at most `max_steps` steps, in deterministic
/// order (start vertex, then breadth-first by steps).
pub fn enumerate_exit_words(x: &GComplex, max_steps: usize) -> Vec<ExitWord> {
    let mut out: Vec<ExitWord> = Vec::new();
    let mut frontier: Vec<ExitWord> = (0..x.vertices).map(ExitWord::constant).collect();
    out.extend(frontier.iter().cloned());
    for _ in 0..max_steps {
        let mut next = Vec::new();
        for w in &frontier {
            let at = w.end(x);
            for e in 0..x.edges.len() {
                for se in [SignedEdge::fwd(e), SignedEdge::back(e)] {
                    if x.src(se) != at {
                        continue;
                    }
                    let mut steps = w.steps.clone();
                    steps.push(se);
                    let cand = ExitWord {
                        start: w.start,
                        steps,
                    };
                    if cand.validate(x).is_ok() {
                        next.push(cand);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{stabilizer_stratification, validate_gcomplex};
    use crate::group::builtin;
    use crate::poset::StratPoset;
    use crate::complex::StratMap;

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

    /// A path with three strata p < q < r laid out along it.
    fn three_strata_path() -> GComplex {
        // vertices 0,1 in p; 2,3,4 in q; 5 in r; edges along the path
        let mut x = GComplex::trivial_action(
            6,
            alloc::vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
            Vec::new(),
        )
        .unwrap();
        let poset = StratPoset::chain(3);
        x.strat = StratMap {
            poset,
            vertices: alloc::vec![0, 0, 1, 1, 1, 2],
            edges: alloc::vec![0, 1, 1, 1, 2],
            faces: Vec::new(),
        };
        assert!(validate_gcomplex(&x).is_verified());
        x
    }

    #[test]
    fn segmentation_with_three_strata() {
        let x = three_strata_path();
        let w = ExitWord {
            start: 0,
            steps: (0..5).map(SignedEdge::fwd).collect(),
        };
        let seg = segmentation(&x, &w).unwrap();
        assert_eq!(seg.segments(), 3);
        assert_eq!(seg.boundaries, alloc::vec![0, 1, 4, 5]);
        assert_eq!(seg.strata, alloc::vec![0, 1, 2]);
        // round trip: concatenating segments reproduces the word
        let mut glued: Vec<SignedEdge> = Vec::new();
        for k in 0..seg.segments() {
            glued.extend(seg.segment_steps(&w, k));
        }
        assert_eq!(glued, w.steps);
        assert_eq!(path_length(&x, &w).unwrap(), 3);
    }

    #[test]
    fn single_stratum_word_has_one_segment() {
        let x = three_strata_path();
        let w = ExitWord {
            start: 2,
            steps: alloc::vec![SignedEdge::fwd(2), SignedEdge::back(2)],
        };
        assert_eq!(segmentation(&x, &w).unwrap().segments(), 1);
        assert!(is_immediately_exiting(&x, &w).unwrap());
    }

    #[test]
    fn descending_profile_is_rejected() {
        let x = three_strata_path();
        // backward over the exiting edge 1 would re-enter stratum p
        let w = ExitWord {
            start: 2,
            steps: alloc::vec![SignedEdge::back(1)],
        };
        assert_eq!(
            w.validate(&x),
            Err(WordError::InverseAcrossStrata { step: 0 })
        );
    }

    #[test]
    fn circle_word_exits_in_two_strata() {
        let x = reflection_circle();
        let w = ExitWord {
            start: 0,
            steps: alloc::vec![SignedEdge::fwd(0)],
        };
        assert_eq!(path_length(&x, &w).unwrap(), 2);
        assert!(is_immediately_exiting(&x, &w).unwrap());
    }

    #[test]
    fn lingering_before_exit_is_not_immediate() {
        let x = three_strata_path();
        // walk 0 -> 1 inside p, then exit into q
        let w = ExitWord {
            start: 0,
            steps: alloc::vec![SignedEdge::fwd(0), SignedEdge::fwd(1)],
        };
        assert!(!is_immediately_exiting(&x, &w).unwrap());
        // constant word is degenerate-immediate
        assert!(is_immediately_exiting(&x, &ExitWord::constant(0)).unwrap());
    }

    #[test]
    fn prefixes_of_exit_words_are_exit_words() {
        let x = reflection_circle();
        for w in enumerate_exit_words(&x, 4) {
            for cut in 0..=w.steps.len() {
                let prefix = ExitWord {
                    start: w.start,
                    steps: w.steps[..cut].to_vec(),
                };
                assert!(prefix.validate(&x).is_ok());
            }
        }
    }

    #[test]
    fn concatenation_of_composable_words_is_exit_word() {
        let x = three_strata_path();
        let words = enumerate_exit_words(&x, 3);
        for a in &words {
            for b in &words {
                if a.end(&x) == b.start {
                    let c = a.concat(&x, b).unwrap();
                    assert!(c.validate(&x).is_ok());
                }
            }
        }
    }
}
