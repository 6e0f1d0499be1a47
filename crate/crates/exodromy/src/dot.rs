//! Deterministic DOT export of finite categories.
//!
//! Nodes appear in object order and parallel non-identity morphisms are
//! collapsed into one arrow labeled with their multiplicity ("×k").
//! Identity morphisms are suppressed by default; endomorphism loops can
//! carry a caller-supplied label (the Weyl-group name, for orbit
//! categories) instead of a bare count.

use std::fmt::Write as _;

use exodromy_core::fincat::FiniteCategory;
use exodromy_core::orbit::OrbitCategory;

#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    /// Render identity arrows too.
    pub include_identities: bool,
    /// Per-object label for the endomorphism loop, replacing the count.
    pub loop_labels: Option<Vec<String>>,
}

/// Renders a category as DOT. Output is byte-deterministic: nodes in
/// object order, arrows grouped by (source, target) in index order.
pub fn export_dot(c: &FiniteCategory, opts: &DotOptions) -> String {
    let mut out = String::from("digraph category {\n");
    for (o, name) in c.objects.iter().enumerate() {
        writeln!(out, "  n{o} [label=\"{}\"];", escape(name)).expect("write to string");
    }
    for a in 0..c.object_count() {
        for b in 0..c.object_count() {
            let all = c.hom(a, b);
            let arrows: Vec<usize> = all
                .into_iter()
                .filter(|&m| opts.include_identities || !c.is_identity(m))
                .collect();
            if arrows.is_empty() {
                continue;
            }
            let label = if a == b {
                match &opts.loop_labels {
                    Some(labels) => labels[a].clone(),
                    None => multiplicity(arrows.len()),
                }
            } else {
                multiplicity(arrows.len())
            };
            if label.is_empty() {
                writeln!(out, "  n{a} -> n{b};").expect("write to string");
            } else {
                writeln!(out, "  n{a} -> n{b} [label=\"{}\"];", escape(&label))
                    .expect("write to string");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT for an orbit category with Weyl names on the endomorphism loops.
pub fn orbit_category_dot(orbit: &OrbitCategory, include_identities: bool) -> String {
    let loop_labels: Vec<String> = (0..orbit.category.object_count())
        .map(|o| orbit.endo_label(o))
        .collect();
    export_dot(
        &orbit.category,
        &DotOptions {
            include_identities,
            loop_labels: Some(loop_labels),
        },
    )
}

fn multiplicity(k: usize) -> String {
    if k > 1 {
        format!("×{k}")
    } else {
        String::new()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
