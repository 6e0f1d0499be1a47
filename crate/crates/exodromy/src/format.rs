//! JSON file formats for groups, complexes, categories and reports.
//!
//! The formats are deliberately small: a group is a degree plus generator
//! permutations, a complex adds cells and per-generator actions, and
//! categories and reports are exported flat so other tools can diff them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use exodromy_core::complex::{ComplexError, GComplex, SignedEdge};
use exodromy_core::fincat::FiniteCategory;
use exodromy_core::group::{builtin, GroupError, PermGroup};
use exodromy_core::perm::Perm;
use exodromy_core::report::{Verdict, VerificationReport};

#[derive(Debug)]
pub enum FormatError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Group(GroupError),
    Complex(ComplexError),
    Invalid(String),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Io(e) => write!(f, "io error: {e}"),
            FormatError::Json(e) => write!(f, "json error: {e}"),
            FormatError::Group(e) => write!(f, "group error: {e}"),
            FormatError::Complex(e) => write!(f, "complex error: {e}"),
            FormatError::Invalid(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        FormatError::Io(e)
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

impl From<GroupError> for FormatError {
    fn from(e: GroupError) -> Self {
        FormatError::Group(e)
    }
}

impl From<ComplexError> for FormatError {
    fn from(e: ComplexError) -> Self {
        FormatError::Complex(e)
    }
}

/// A finite permutation group: either a builtin name or explicit
/// generator permutations in image form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Builtin(String),
    Explicit {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
}

impl GroupFile {
    pub fn to_group(&self) -> Result<PermGroup, FormatError> {
        match self {
            GroupFile::Builtin(name) => builtin(name).ok_or_else(|| {
                FormatError::Invalid(format!("unknown builtin group {name:?}"))
            }),
            GroupFile::Explicit {
                degree,
                generators,
                name,
            } => {
                let gens: Vec<Perm> = generators
                    .iter()
                    .map(|imgs| {
                        Perm::new(imgs.clone()).ok_or_else(|| {
                            FormatError::Invalid(format!("not a permutation: {imgs:?}"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                let g = PermGroup::new(*degree, gens)?;
                Ok(match name {
                    Some(n) => g.named(n),
                    None => g,
                })
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedEdgeFile {
    pub edge: usize,
    pub forward: bool,
}

impl From<SignedEdge> for SignedEdgeFile {
    fn from(se: SignedEdge) -> Self {
        SignedEdgeFile {
            edge: se.edge,
            forward: se.forward,
        }
    }
}

impl From<SignedEdgeFile> for SignedEdge {
    fn from(se: SignedEdgeFile) -> Self {
        SignedEdge {
            edge: se.edge,
            forward: se.forward,
        }
    }
}

/// Per-generator cell action: vertex and edge images (face images are
/// derived from boundaries).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A stratified complex with a group action.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub group: GroupFile,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub faces: Vec<Vec<SignedEdgeFile>>,
    #[serde(default)]
    pub actions: Vec<ActionFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_names: Option<Vec<String>>,
    /// "stabilizer" to label cells by stabilizer class, or omitted for
    /// the trivial one-stratum labeling.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratification: Option<String>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<GComplex, FormatError> {
        let group = self.group.to_group()?;
        let faces: Vec<Vec<SignedEdge>> = self
            .faces
            .iter()
            .map(|b| b.iter().cloned().map(SignedEdge::from).collect())
            .collect();
        let actions: Vec<(Vec<usize>, Vec<usize>)> = self
            .actions
            .iter()
            .map(|a| (a.vertices.clone(), a.edges.clone()))
            .collect();
        let mut x = GComplex::new(group, self.vertices, self.edges.clone(), faces, actions)?;
        if let Some(names) = &self.vertex_names {
            if names.len() != x.vertices {
                return Err(FormatError::Invalid(String::from(
                    "vertex name count mismatch",
                )));
            }
            x.vertex_names = names.clone();
        }
        match self.stratification.as_deref() {
            None | Some("trivial") => Ok(x),
            Some("stabilizer") => {
                let names = x.vertex_names.clone();
                let mut s = exodromy_core::complex::stabilizer_stratification(&x)?;
                s.vertex_names = names;
                Ok(s)
            }
            Some(other) => Err(FormatError::Invalid(format!(
                "unknown stratification {other:?}"
            ))),
        }
    }

    pub fn from_complex(x: &GComplex) -> ComplexFile {
        ComplexFile {
            group: GroupFile::Explicit {
                degree: x.group.degree(),
                generators: x
                    .group
                    .generators()
                    .iter()
                    .map(|p| p.images().to_vec())
                    .collect(),
                name: x.group.name().map(String::from),
            },
            vertices: x.vertices,
            edges: x.edges.clone(),
            faces: x
                .faces
                .iter()
                .map(|b| b.iter().map(|&se| se.into()).collect())
                .collect(),
            actions: x
                .group
                .generator_ids()
                .iter()
                .map(|&g| ActionFile {
                    vertices: x.actions[g].v.clone(),
                    edges: x.actions[g].e.clone(),
                })
                .collect(),
            vertex_names: Some(x.vertex_names.clone()),
            stratification: Some(String::from("stabilizer")),
        }
    }
}

/// A finite category exported as flat tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<(usize, usize)>,
    pub identities: Vec<usize>,
    /// Composition triples `[g, f, g_after_f]`.
    pub compose: Vec<(usize, usize, usize)>,
}

impl CategoryFile {
    pub fn from_category(c: &FiniteCategory) -> CategoryFile {
        let mut compose = Vec::new();
        for g in c.morphisms() {
            for f in c.morphisms() {
                if let Some(h) = c.try_comp(g, f) {
                    compose.push((g, f, h));
                }
            }
        }
        CategoryFile {
            objects: c.objects.clone(),
            morphisms: c.morphisms().map(|m| (c.src(m), c.dst(m))).collect(),
            identities: (0..c.object_count()).map(|o| c.identity(o)).collect(),
            compose,
        }
    }

    pub fn to_category(&self) -> FiniteCategory {
        let compose: BTreeMap<(usize, usize), usize> = self
            .compose
            .iter()
            .map(|&(g, f, h)| ((g, f), h))
            .collect();
        FiniteCategory::new(
            self.objects.clone(),
            self.morphisms.clone(),
            self.identities.clone(),
            compose,
        )
    }
}

/// One verification entry in a report file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntryFile {
    pub name: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub subject: String,
    pub entries: Vec<ReportEntryFile>,
    pub overall: String,
}

fn verdict_parts(v: &Verdict) -> (String, Option<String>, Option<usize>) {
    match v {
        Verdict::Verified => (String::from("verified"), None, None),
        Verdict::Refuted { witness } => (String::from("refuted"), Some(witness.clone()), None),
        Verdict::Undecided { budget } => (String::from("undecided"), None, Some(*budget)),
    }
}

impl ReportFile {
    pub fn from_report(r: &VerificationReport) -> ReportFile {
        let entries = r
            .entries
            .iter()
            .map(|e| {
                let (verdict, witness, budget) = verdict_parts(&e.verdict);
                ReportEntryFile {
                    name: e.name.clone(),
                    verdict,
                    witness,
                    budget,
                    detail: e.detail.clone(),
                }
            })
            .collect();
        let (overall, _, _) = verdict_parts(&r.overall());
        ReportFile {
            subject: r.subject.clone(),
            entries,
            overall,
        }
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &str, value: &T) -> Result<(), FormatError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exodromy_core::complex::validate_gcomplex;
    use exodromy_core::models::circle_reflect;

    #[test]
    fn complex_round_trip() {
        let x = circle_reflect();
        let file = ComplexFile::from_complex(&x);
        let text = serde_json::to_string(&file).unwrap();
        let back: ComplexFile = serde_json::from_str(&text).unwrap();
        let y = back.to_complex().unwrap();
        assert_eq!(x.vertices, y.vertices);
        assert_eq!(x.edges, y.edges);
        assert_eq!(x.strat.vertices, y.strat.vertices);
        assert!(validate_gcomplex(&y).is_verified());
    }

    #[test]
    fn builtin_group_file() {
        let g = GroupFile::Builtin(String::from("S3")).to_group().unwrap();
        assert_eq!(g.order(), 6);
        assert!(GroupFile::Builtin(String::from("nope")).to_group().is_err());
    }

    #[test]
    fn category_round_trip() {
        let x = circle_reflect();
        let ec = exodromy_core::exit::exit_category(
            &x,
            exodromy_core::rewrite::DEFAULT_REWRITE_BUDGET,
        )
        .unwrap();
        let cat = &ec.finite.unwrap().category;
        let file = CategoryFile::from_category(cat);
        let back = file.to_category();
        assert_eq!(back, *cat);
    }

    #[test]
    fn report_file_shape() {
        let mut r = VerificationReport::new("demo");
        r.push("a", Verdict::Verified, "fine");
        r.push("b", Verdict::refuted("broken"), "");
        let f = ReportFile::from_report(&r);
        assert_eq!(f.overall, "refuted");
        assert_eq!(f.entries[1].witness.as_deref(), Some("broken"));
    }
}
