//! Bounded string rewriting for path categories.
//!
//! Words are composable sequences of typed generators (each generator has a
//! source and a target object); rules rewrite a word to a shortlex-smaller
//! parallel word. Completion follows the classical critical-pair procedure:
//! overlaps between left-hand sides are resolved until none remain or the
//! budget of rule applications runs out. A completed system decides word
//! equality by comparing normal forms; an incomplete one only decides
//! equality when the bounded normal forms already agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// The typing data of the generators: parallel arrays of source and target
/// object ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathAlphabet {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
}

impl PathAlphabet {
    pub fn len(&self) -> usize {
        self.src.len()
    }

    pub fn is_empty(&self) -> bool {
        self.src.is_empty()
    }

    /// Source object of a word known to start at `fallback` when empty.
    pub fn word_src(&self, w: &[usize], fallback: usize) -> usize {
        w.first().map_or(fallback, |&g| self.src[g])
    }

    pub fn word_dst(&self, w: &[usize], fallback: usize) -> usize {
        w.last().map_or(fallback, |&g| self.dst[g])
    }

    /// Whether consecutive generators chain up.
    pub fn is_composable(&self, w: &[usize]) -> bool {
        w.windows(2).all(|p| self.dst[p[0]] == self.src[p[1]])
    }
}

/// Shortlex: first by length, then lexicographically by generator id.
pub fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

/// A rewriting system over a path alphabet, tracking whether completion
/// finished within budget.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    pub alphabet: PathAlphabet,
    pub rules: Vec<Rule>,
    pub complete: bool,
    pub applications: usize,
}

/// Outcome of a bounded word-equality query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equality {
    Equal,
    Distinct,
    Unknown,
}

pub const DEFAULT_REWRITE_BUDGET: usize = 10_000;

impl RewriteSystem {
    /// Builds a system from parallel-word relations and runs completion
    /// within `budget` rule applications.
    pub fn complete(
        alphabet: PathAlphabet,
        relations: &[(Vec<usize>, Vec<usize>)],
        budget: usize,
    ) -> RewriteSystem {
        let mut sys = RewriteSystem {
            alphabet,
            rules: Vec::new(),
            complete: false,
            applications: 0,
        };
        let mut pending: Vec<(Vec<usize>, Vec<usize>)> = relations.to_vec();
        loop {
            // orient pending equations into rules
            while let Some((a, b)) = pending.pop() {
                if sys.applications > budget {
                    return sys;
                }
                let (Some(a), Some(b)) = (
                    sys.normalize_bounded(&a, budget),
                    sys.normalize_bounded(&b, budget),
                ) else {
                    return sys;
                };
                match shortlex(&a, &b) {
                    Ordering::Equal => {}
                    Ordering::Greater => sys.add_rule(a, b),
                    Ordering::Less => sys.add_rule(b, a),
                }
            }
            // resolve critical pairs; any unresolved one becomes pending
            let mut found = false;
            'search: for i in 0..sys.rules.len() {
                for j in 0..sys.rules.len() {
                    for (u, v) in critical_pairs(&sys.rules[i], &sys.rules[j]) {
                        if sys.applications > budget {
                            return sys;
                        }
                        let (Some(nu), Some(nv)) = (
                            sys.normalize_bounded(&u, budget),
                            sys.normalize_bounded(&v, budget),
                        ) else {
                            return sys;
                        };
                        if nu != nv {
                            pending.push((nu, nv));
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            if !found {
                sys.complete = true;
                return sys;
            }
        }
    }

    fn add_rule(&mut self, lhs: Vec<usize>, rhs: Vec<usize>) {
        let rule = Rule { lhs, rhs };
        if !self.rules.contains(&rule) {
            self.rules.push(rule);
        }
    }

    /// One leftmost rewrite step, if any rule applies.
    fn step(&self, w: &[usize]) -> Option<Vec<usize>> {
        for at in 0..=w.len() {
            for rule in &self.rules {
                let end = at + rule.lhs.len();
                if end <= w.len() && w[at..end] == rule.lhs[..] {
                    let mut out = Vec::with_capacity(w.len() - rule.lhs.len() + rule.rhs.len());
                    out.extend_from_slice(&w[..at]);
                    out.extend_from_slice(&rule.rhs);
                    out.extend_from_slice(&w[end..]);
                    return Some(out);
                }
            }
        }
        None
    }

    /// Rewrites to a normal form, charging each step against the running
    /// application count; `None` when the budget is exhausted first.
    fn normalize_bounded(&mut self, w: &[usize], budget: usize) -> Option<Vec<usize>> {
        let mut cur = w.to_vec();
        while let Some(next) = self.step(&cur) {
            self.applications += 1;
            if self.applications > budget {
                return None;
            }
            cur = next;
        }
        Some(cur)
    }

    /// The normal form of a word. Termination is guaranteed because every
    /// rule is shortlex-decreasing; uniqueness only when `complete`.
    pub fn normalize(&self, w: &[usize]) -> Vec<usize> {
        let mut cur = w.to_vec();
        while let Some(next) = self.step(&cur) {
            cur = next;
        }
        cur
    }

    /// Decides equality of two parallel words. With a complete system the
    /// answer is always `Equal` or `Distinct`; otherwise agreeing normal
    /// forms still prove equality but disagreement proves nothing.
    pub fn words_equal(&self, a: &[usize], b: &[usize]) -> Equality {
        if self.normalize(a) == self.normalize(b) {
            Equality::Equal
        } else if self.complete {
            Equality::Distinct
        } else {
            Equality::Unknown
        }
    }
}

/// Critical pairs of two rules: overlap a proper suffix of `a.lhs` with a
/// prefix of `b.lhs`, or embed `b.lhs` strictly inside `a.lhs`. Each pair
/// is the two ways of rewriting the superposed word.
fn critical_pairs(a: &Rule, b: &Rule) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    // suffix of a.lhs = prefix of b.lhs, overlap length 1..len
    for k in 1..=a.lhs.len().min(b.lhs.len()) {
        if k == a.lhs.len() && k == b.lhs.len() {
            // identical left-hand sides overlap trivially; the pair of
            // right-hand sides is still a genuine critical pair for a != b
            if a.lhs == b.lhs && a.rhs != b.rhs {
                out.push((a.rhs.clone(), b.rhs.clone()));
            }
            continue;
        }
        if a.lhs[a.lhs.len() - k..] != b.lhs[..k] {
            continue;
        }
        // superposition: a.lhs followed by the rest of b.lhs
        let mut left = a.rhs.clone();
        left.extend_from_slice(&b.lhs[k..]);
        let mut right = a.lhs[..a.lhs.len() - k].to_vec();
        right.extend_from_slice(&b.rhs);
        out.push((left, right));
    }
    // b.lhs strictly inside a.lhs
    if b.lhs.len() < a.lhs.len() {
        for at in 0..=a.lhs.len() - b.lhs.len() {
            if a.lhs[at..at + b.lhs.len()] != b.lhs[..] {
                continue;
            }
            let mut inner = a.lhs[..at].to_vec();
            inner.extend_from_slice(&b.rhs);
            inner.extend_from_slice(&a.lhs[at + b.lhs.len()..]);
            out.push((a.rhs.clone(), inner));
        }
    }
    out
}

/// Enumerates the normal forms of a complete system breadth-first from the
/// empty word at each object, extending on the right by generators. Returns
/// the map normal form -> index when the set closes up within `max_words`
/// normal forms, `None` when it keeps growing (the category is infinite or
/// larger than the cap).
pub fn materialize_normal_forms(
    sys: &RewriteSystem,
    objects: usize,
    max_words: usize,
) -> Option<BTreeMap<(usize, Vec<usize>), usize>> {
    let mut seen: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    let mut frontier: Vec<(usize, Vec<usize>)> = (0..objects).map(|o| (o, Vec::new())).collect();
    for key in &frontier {
        let idx = seen.len();
        seen.insert(key.clone(), idx);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (start, w) in &frontier {
            let at = sys.alphabet.word_dst(w, *start);
            for g in 0..sys.alphabet.len() {
                if sys.alphabet.src[g] != at {
                    continue;
                }
                let mut ext = w.clone();
                ext.push(g);
                let nf = sys.normalize(&ext);
                let key = (*start, nf);
                if !seen.contains_key(&key) {
                    if seen.len() >= max_words {
                        return None;
                    }
                    let idx = seen.len();
                    seen.insert(key.clone(), idx);
                    next.push(key);
                }
            }
        }
        frontier = next;
    }
    Some(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_alphabet(generators: usize) -> PathAlphabet {
        PathAlphabet {
            src: alloc::vec![0; generators],
            dst: alloc::vec![0; generators],
        }
    }

    #[test]
    fn shortlex_orders_by_length_then_lex() {
        assert_eq!(shortlex(&[1], &[0, 0]), Ordering::Less);
        assert_eq!(shortlex(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(shortlex(&[2], &[2]), Ordering::Equal);
    }

    #[test]
    fn cyclic_group_of_order_three() {
        // one generator a with a^3 = empty
        let sys = RewriteSystem::complete(
            loop_alphabet(1),
            &[(alloc::vec![0, 0, 0], alloc::vec![])],
            DEFAULT_REWRITE_BUDGET,
        );
        assert!(sys.complete);
        assert_eq!(sys.normalize(&[0, 0, 0, 0]), alloc::vec![0]);
        assert_eq!(sys.words_equal(&[0, 0, 0], &[]), Equality::Equal);
        assert_eq!(sys.words_equal(&[0], &[0, 0]), Equality::Distinct);
        let nf = materialize_normal_forms(&sys, 1, 100).unwrap();
        assert_eq!(nf.len(), 3);
    }

    #[test]
    fn free_inverse_pair_is_infinite() {
        // generators a: 0 -> 1 and a': 1 -> 0 with both composites trivial
        let alphabet = PathAlphabet {
            src: alloc::vec![0, 1],
            dst: alloc::vec![1, 0],
        };
        let sys = RewriteSystem::complete(
            alphabet,
            &[
                (alloc::vec![0, 1], alloc::vec![]),
                (alloc::vec![1, 0], alloc::vec![]),
            ],
            DEFAULT_REWRITE_BUDGET,
        );
        assert!(sys.complete);
        // reduced words: alternating a, a' — four morphisms total? no:
        // this is the free groupoid on one arrow, equivalent to the
        // interval; every hom-set has exactly one reduced word
        let nf = materialize_normal_forms(&sys, 2, 100).unwrap();
        assert_eq!(nf.len(), 4);
        assert_eq!(sys.words_equal(&[0, 1, 0], &[0]), Equality::Equal);
    }

    #[test]
    fn symmetric_group_presentation_completes() {
        // s, t with s^2 = t^2 = empty and sts = tst
        let sys = RewriteSystem::complete(
            loop_alphabet(2),
            &[
                (alloc::vec![0, 0], alloc::vec![]),
                (alloc::vec![1, 1], alloc::vec![]),
                (alloc::vec![0, 1, 0], alloc::vec![1, 0, 1]),
            ],
            DEFAULT_REWRITE_BUDGET,
        );
        assert!(sys.complete);
        let nf = materialize_normal_forms(&sys, 1, 100).unwrap();
        assert_eq!(nf.len(), 6);
    }

    #[test]
    fn free_monoid_exceeds_any_cap() {
        let sys = RewriteSystem::complete(loop_alphabet(2), &[], DEFAULT_REWRITE_BUDGET);
        assert!(sys.complete);
        assert!(materialize_normal_forms(&sys, 1, 1000).is_none());
    }

    #[test]
    fn budget_exhaustion_reports_incomplete() {
        let sys = RewriteSystem::complete(
            loop_alphabet(2),
            &[
                (alloc::vec![0, 0], alloc::vec![]),
                (alloc::vec![1, 1], alloc::vec![]),
                (alloc::vec![0, 1, 0], alloc::vec![1, 0, 1]),
            ],
            2,
        );
        assert!(!sys.complete);
        // agreeing bounded normal forms still witness equality
        assert_eq!(sys.words_equal(&[0, 0], &[0, 0]), Equality::Equal);
        assert_eq!(sys.words_equal(&[0], &[1]), Equality::Unknown);
    }

    #[test]
    fn typed_words_respect_composability() {
        let alphabet = PathAlphabet {
            src: alloc::vec![0, 1],
            dst: alloc::vec![1, 2],
        };
        assert!(alphabet.is_composable(&[0, 1]));
        assert!(!alphabet.is_composable(&[1, 0]));
        assert_eq!(alphabet.word_src(&[0, 1], 9), 0);
        assert_eq!(alphabet.word_dst(&[0, 1], 9), 2);
        assert_eq!(alphabet.word_src(&[], 9), 9);
    }
}
