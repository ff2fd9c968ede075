//! Finite groups given by Cayley tables.

use thiserror::Error;

use crate::perm::Perm;

/// Tables beyond this size are refused rather than sampled.
pub const MAX_EXHAUSTIVE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table has no elements")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("table `{table}` is not square: row {row} has length {found}, expected {expected}")]
    NotSquare { table: String, row: usize, found: usize, expected: usize },
    #[error("table `{table}` has {found} rows for {expected} elements")]
    RowCount { table: String, found: usize, expected: usize },
    #[error("unknown element `{name}` in table `{table}`")]
    UnknownElement { table: String, name: String },
    #[error("{n} elements exceeds the exhaustive-check limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupAxiomError {
    #[error("no two-sided unit")]
    NoUnit,
    #[error("not associative: ({a}{op}{b}){op}{c} != {a}{op}({b}{op}{c})")]
    NotAssociative { op: String, a: String, b: String, c: String },
    #[error("element {0} has no inverse")]
    NoInverse(String),
}

/// A square table of element indices over named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub names: Vec<String>,
    pub cells: Vec<Vec<usize>>,
}

impl Table {
    /// Resolves a table of names against `names`.
    pub fn from_names(
        label: &str,
        names: &[String],
        rows: &[Vec<String>],
    ) -> Result<Vec<Vec<usize>>, TableError> {
        let n = names.len();
        if rows.len() != n {
            return Err(TableError::RowCount { table: label.into(), found: rows.len(), expected: n });
        }
        rows.iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != n {
                    return Err(TableError::NotSquare {
                        table: label.into(),
                        row: i,
                        found: r.len(),
                        expected: n,
                    });
                }
                r.iter()
                    .map(|s| {
                        names.iter().position(|x| x == s).ok_or_else(|| TableError::UnknownElement {
                            table: label.into(),
                            name: s.clone(),
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_names(names: &[String], cells: &[Vec<usize>]) -> Vec<Vec<String>> {
        cells.iter().map(|r| r.iter().map(|&i| names[i].clone()).collect()).collect()
    }
}

pub(crate) fn check_names(names: &[String]) -> Result<(), TableError> {
    if names.is_empty() {
        return Err(TableError::Empty);
    }
    if names.len() > MAX_EXHAUSTIVE {
        return Err(TableError::TooLarge { n: names.len(), limit: MAX_EXHAUSTIVE });
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(TableError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

pub(crate) fn check_square(label: &str, n: usize, cells: &[Vec<usize>]) -> Result<(), TableError> {
    if cells.len() != n {
        return Err(TableError::RowCount { table: label.into(), found: cells.len(), expected: n });
    }
    for (row, r) in cells.iter().enumerate() {
        if r.len() != n || r.iter().any(|&v| v >= n) {
            return Err(TableError::NotSquare { table: label.into(), row, found: r.len(), expected: n });
        }
    }
    Ok(())
}

/// Checks the group axioms exhaustively; returns `(unit, inverses)`.
pub(crate) fn group_axioms(
    op: &str,
    names: &[String],
    cells: &[Vec<usize>],
) -> Result<(usize, Vec<usize>), GroupAxiomError> {
    let n = names.len();
    let unit = (0..n)
        .find(|&e| (0..n).all(|a| cells[e][a] == a && cells[a][e] == a))
        .ok_or(GroupAxiomError::NoUnit)?;
    for a in 0..n {
        for b in 0..n {
            let ab = cells[a][b];
            for c in 0..n {
                if cells[ab][c] != cells[a][cells[b][c]] {
                    return Err(GroupAxiomError::NotAssociative {
                        op: op.into(),
                        a: names[a].clone(),
                        b: names[b].clone(),
                        c: names[c].clone(),
                    });
                }
            }
        }
    }
    let inverses = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| cells[a][b] == unit && cells[b][a] == unit)
                .ok_or_else(|| GroupAxiomError::NoInverse(names[a].clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((unit, inverses))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Axiom(#[from] GroupAxiomError),
}

/// A certified finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    cells: Vec<Vec<usize>>,
    unit: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, cells: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        check_names(&names)?;
        check_square("table", names.len(), &cells)?;
        let (unit, inverses) = group_axioms(".", &names, &cells)?;
        Ok(GroupTable { names, cells, unit, inverses })
    }

    pub fn from_names(names: Vec<String>, rows: &[Vec<String>]) -> Result<Self, GroupError> {
        check_names(&names)?;
        let cells = Table::from_names("table", &names, rows)?;
        GroupTable::new(names, cells)
    }

    /// `Z/n` with elements `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let cells = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(names, cells).expect("cyclic group")
    }

    /// The symmetric group on three points; elements named by one-line
    /// notation, product `(ab)(i) = a(b(i))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<Perm> = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
            .iter()
            .map(|p| Perm::from_images(p.to_vec()).unwrap())
            .collect();
        let names = perms
            .iter()
            .map(|p| p.images().iter().map(|i| i.to_string()).collect::<String>())
            .collect();
        let cells = perms
            .iter()
            .map(|a| perms.iter().map(|b| perms.iter().position(|c| *c == a.compose(b)).unwrap()).collect())
            .collect();
        GroupTable::new(names, cells).expect("S3")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a][b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.cells[a][b] == self.cells[b][a]))
    }

    pub fn name_rows(&self) -> Vec<Vec<String>> {
        Table::to_names(&self.names, &self.cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        for n in 1..6 {
            let g = GroupTable::cyclic(n);
            assert_eq!(g.unit(), 0);
            assert!(g.is_abelian());
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a)), 0);
            }
        }
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3.name(s3.unit()), "012");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        // constant table: no unit
        let err = GroupTable::new(names.clone(), vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, GroupError::Axiom(GroupAxiomError::NoUnit));
        // unit a, but b.b = b has no inverse
        let err = GroupTable::new(names.clone(), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::Axiom(GroupAxiomError::NoInverse("b".into())));
        // a loop that is not associative
        let names3: Vec<String> = ["e", "x", "y"].iter().map(|s| s.to_string()).collect();
        let err = GroupTable::new(names3, vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]]).unwrap_err();
        assert!(matches!(err, GroupError::Axiom(GroupAxiomError::NotAssociative { .. })));
        assert!(matches!(
            GroupTable::from_names(names.clone(), &[vec!["a".into(), "q".into()], vec!["b".into(), "a".into()]]),
            Err(GroupError::Table(TableError::UnknownElement { .. }))
        ));
        assert!(matches!(
            GroupTable::new(names, vec![vec![0, 1]]),
            Err(GroupError::Table(TableError::RowCount { .. }))
        ));
    }

    #[test]
    fn size_limit() {
        let names: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        let cells = (0..65).map(|a| (0..65).map(|b| (a + b) % 65).collect()).collect();
        assert!(matches!(GroupTable::new(names, cells), Err(GroupError::Table(TableError::TooLarge { .. }))));
    }
}
