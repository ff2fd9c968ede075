//! Strict JSON file formats. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action_postgroup::{ActionError, RightAction};
use crate::finite_postgroup::{BraidError, BraidMap, PostGroupError, PostGroupTable, SkewBrace, SkewBraceError};
use crate::group::{self, GroupError, GroupTable, TableError};
use crate::magma::{MagmaError, MagmaTable};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Magma(#[from] MagmaError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    PostGroup(#[from] PostGroupError),
    #[error(transparent)]
    Brace(#[from] SkewBraceError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Table(#[from] TableError),
}

impl IoError {
    /// True for unreadable, malformed or structurally invalid input; false
    /// when the input is well formed but fails an algebraic law.
    pub fn is_input_error(&self) -> bool {
        match self {
            IoError::Read { .. } | IoError::Write { .. } | IoError::Json { .. } | IoError::Table(_) => true,
            IoError::Magma(e) => !matches!(e, MagmaError::NotLeftRegular(_) | MagmaError::NotDiagonal { .. }),
            IoError::Group(e) => matches!(e, GroupError::Table(_)),
            IoError::PostGroup(e) => matches!(e, PostGroupError::Table(_)),
            IoError::Brace(e) => matches!(e, SkewBraceError::Table(_)),
            IoError::Action(e) => matches!(
                e,
                ActionError::PointName(_)
                    | ActionError::Shape { .. }
                    | ActionError::UnknownPoint(_)
                    | ActionError::UnknownElement(_)
                    | ActionError::Missing { .. }
                    | ActionError::SizeCap { .. }
            ),
            IoError::Braid(e) => matches!(e, BraidError::Shape { .. }),
        }
    }
}

/// `{"elements": [...], "triangle": [[...]...]}`, row `i` giving `elements[i] ▷ −`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MagmaFile {
    pub elements: Vec<String>,
    pub triangle: Vec<Vec<String>>,
}

/// `{"elements": [...], "table": [[...]...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

/// `{"elements": [...], "dot": [[...]...], "triangle": [[...]...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PostGroupFile {
    pub elements: Vec<String>,
    pub dot: Vec<Vec<String>>,
    pub triangle: Vec<Vec<String>>,
}

/// `{"elements": [...], "dot": [[...]...], "star": [[...]...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    pub elements: Vec<String>,
    pub dot: Vec<Vec<String>>,
    pub star: Vec<Vec<String>>,
}

/// A right action of a group on named points: `action[point][g] = point·g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub group: GroupFile,
    pub set: Vec<String>,
    pub action: BTreeMap<String, BTreeMap<String, String>>,
}

/// `{"elements": [...], "sigma": [[[l, r], ...], ...]}` with
/// `sigma[g][h] = σ(g, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingFile {
    pub elements: Vec<String>,
    pub sigma: Vec<Vec<[String; 2]>>,
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    parse_json(&path.display().to_string(), &text)
}

pub fn parse_json<T: DeserializeOwned>(label: &str, text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|source| IoError::Json { path: label.into(), source })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, to_json(value)).map_err(|source| IoError::Write { path: path.display().to_string(), source })
}

impl MagmaFile {
    pub fn from_magma(m: &MagmaTable) -> Self {
        MagmaFile {
            elements: m.alphabet().names().to_vec(),
            triangle: group::Table::to_names(m.alphabet().names(), &m.table()),
        }
    }

    pub fn into_magma(self) -> Result<MagmaTable, IoError> {
        Ok(MagmaTable::from_names(self.elements, self.triangle)?)
    }
}

impl GroupFile {
    pub fn from_group(g: &GroupTable) -> Self {
        GroupFile { elements: g.names().to_vec(), table: g.name_rows() }
    }

    pub fn into_group(self) -> Result<GroupTable, IoError> {
        Ok(GroupTable::from_names(self.elements, &self.table)?)
    }
}

impl PostGroupFile {
    pub fn from_postgroup(pg: &PostGroupTable) -> Self {
        PostGroupFile { elements: pg.names().to_vec(), dot: pg.name_dot(), triangle: pg.name_triangle() }
    }

    pub fn into_postgroup(self) -> Result<PostGroupTable, IoError> {
        Ok(PostGroupTable::from_names(self.elements, &self.dot, &self.triangle)?)
    }
}

impl BraceFile {
    pub fn from_brace(b: &SkewBrace) -> Self {
        BraceFile { elements: b.names().to_vec(), dot: b.dot().name_rows(), star: b.star().name_rows() }
    }

    pub fn into_brace(self) -> Result<SkewBrace, IoError> {
        Ok(SkewBrace::from_names(self.elements, &self.dot, &self.star)?)
    }
}

impl ActionFile {
    pub fn from_action(a: &RightAction) -> Self {
        ActionFile { group: GroupFile::from_group(a.group()), set: a.points().to_vec(), action: a.name_map() }
    }

    pub fn into_action(self) -> Result<RightAction, IoError> {
        let group = self.group.into_group()?;
        Ok(RightAction::from_names(group, self.set, &self.action)?)
    }
}

impl BraidingFile {
    pub fn from_braiding(s: &BraidMap) -> Self {
        let names = s.names();
        let n = names.len();
        BraidingFile {
            elements: names.to_vec(),
            sigma: (0..n)
                .map(|g| {
                    (0..n)
                        .map(|h| {
                            let (a, b) = s.apply(g, h);
                            [names[a].clone(), names[b].clone()]
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn into_braiding(self) -> Result<BraidMap, IoError> {
        group::check_names(&self.elements)?;
        let n = self.elements.len();
        if self.sigma.len() != n {
            return Err(TableError::RowCount { table: "sigma".into(), found: self.sigma.len(), expected: n }.into());
        }
        let index = |s: &str| {
            self.elements
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| TableError::UnknownElement { table: "sigma".into(), name: s.into() })
        };
        let mut pairs = Vec::with_capacity(n * n);
        for (row, r) in self.sigma.iter().enumerate() {
            if r.len() != n {
                return Err(TableError::NotSquare { table: "sigma".into(), row, found: r.len(), expected: n }.into());
            }
            for [a, b] in r {
                pairs.push((index(a)?, index(b)?));
            }
        }
        Ok(BraidMap::new(self.elements.clone(), pairs)?)
    }
}
