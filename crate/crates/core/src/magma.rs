//! Finite left-regular magmas and their diagonality data.
//!
//! Row `m` of the triangle table is the left translation `m ▷ -`. A magma
//! is left-regular when every row is a permutation and diagonal when
//! `Λ(m) = (m ▷ -)⁻¹(m)` is a permutation as well.

use thiserror::Error;

use crate::perm::Perm;
use crate::words::{Alphabet, Letter, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowFailure {
    /// Element whose left translation is not a bijection.
    pub row: String,
    /// A value hit twice in that row.
    pub repeated: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagmaError {
    #[error("invalid alphabet: {0}")]
    Alphabet(#[from] WordError),
    #[error("triangle table is not square: expected {expected} rows of length {expected}, row {row} has length {found}")]
    NotSquare { expected: usize, row: usize, found: usize },
    #[error("triangle table has {found} rows for {expected} elements")]
    RowCount { expected: usize, found: usize },
    #[error("entry {value} out of range in row {row}")]
    OutOfRange { row: usize, value: usize },
    #[error("unknown element `{name}` in row {row}")]
    UnknownElement { row: usize, name: String },
    #[error("not left-regular: {}", .0.iter().map(|r| format!("row {} repeats {}", r.row, r.repeated)).collect::<Vec<_>>().join("; "))]
    NotLeftRegular(Vec<RowFailure>),
    #[error("not diagonal: Λ({first}) = Λ({second}) = {image}")]
    NotDiagonal { first: String, second: String, image: String },
}

/// A certified diagonal left-regular magma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagmaTable {
    alphabet: Alphabet,
    rows: Vec<Perm>,
    row_inverses: Vec<Perm>,
    lambda: Perm,
    lambda_inv: Perm,
    /// ψ on the 2n letters, indexed by `letter_index`.
    psi: Vec<Letter>,
}

fn letter_index(a: Letter) -> usize {
    2 * a.generator + usize::from(a.inverse)
}

impl MagmaTable {
    /// Validates an index table; row `i` lists `i ▷ j` for each `j`.
    pub fn new(alphabet: Alphabet, table: Vec<Vec<usize>>) -> Result<Self, MagmaError> {
        let n = alphabet.len();
        if table.len() != n {
            return Err(MagmaError::RowCount { expected: n, found: table.len() });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(MagmaError::NotSquare { expected: n, row, found: r.len() });
            }
            if let Some(&value) = r.iter().find(|&&v| v >= n) {
                return Err(MagmaError::OutOfRange { row, value });
            }
        }

        let mut rows = Vec::with_capacity(n);
        let mut failures = Vec::new();
        for (i, r) in table.into_iter().enumerate() {
            let mut seen = vec![false; n];
            let dup = r.iter().copied().find(|&v| std::mem::replace(&mut seen[v], true));
            match dup {
                Some(v) => failures.push(RowFailure {
                    row: alphabet.name(i).to_string(),
                    repeated: alphabet.name(v).to_string(),
                }),
                None => rows.push(Perm::from_images(r).expect("checked bijective")),
            }
        }
        if !failures.is_empty() {
            return Err(MagmaError::NotLeftRegular(failures));
        }

        let row_inverses: Vec<Perm> = rows.iter().map(Perm::inverse).collect();
        let lambda_images: Vec<usize> = (0..n).map(|m| row_inverses[m].apply(m)).collect();
        let mut preimage = vec![None; n];
        for (m, &l) in lambda_images.iter().enumerate() {
            if let Some(first) = preimage[l] {
                return Err(MagmaError::NotDiagonal {
                    first: alphabet.name(first).to_string(),
                    second: alphabet.name(m).to_string(),
                    image: alphabet.name(l).to_string(),
                });
            }
            preimage[l] = Some(m);
        }
        let lambda = Perm::from_images(lambda_images).expect("injective on a finite set");
        let lambda_inv = lambda.inverse();

        let mut psi = vec![Letter::pos(0); 2 * n];
        for m in 0..n {
            psi[letter_index(Letter::pos(m))] = Letter::neg(lambda.apply(m));
            psi[letter_index(Letter::neg(m))] = Letter::pos(lambda_inv.apply(m));
        }

        Ok(MagmaTable { alphabet, rows, row_inverses, lambda, lambda_inv, psi })
    }

    /// Builds from element names, as in the magma file format.
    pub fn from_names(elements: Vec<String>, triangle: Vec<Vec<String>>) -> Result<Self, MagmaError> {
        let alphabet = Alphabet::new(elements)?;
        let table = triangle
            .iter()
            .enumerate()
            .map(|(row, r)| {
                r.iter()
                    .map(|name| {
                        alphabet
                            .index_of(name)
                            .ok_or_else(|| MagmaError::UnknownElement { row, name: name.clone() })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        MagmaTable::new(alphabet, table)
    }

    /// The magma `a ▷ b = b`.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let n = alphabet.len();
        MagmaTable::new(alphabet, vec![(0..n).collect(); n]).expect("trivial magma is diagonal")
    }

    /// The magma `a ▷ b = b + 1 mod n` on generators `x0..x{n-1}`.
    pub fn cyclic_shift(n: usize) -> Self {
        let alphabet = Alphabet::new((0..n).map(|i| format!("x{i}"))).expect("valid names");
        let table = vec![(0..n).map(|b| (b + 1) % n).collect(); n];
        MagmaTable::new(alphabet, table).expect("cyclic shift is diagonal")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.rows[a].apply(b)
    }

    pub fn row(&self, m: usize) -> &Perm {
        &self.rows[m]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.images().to_vec()).collect()
    }

    pub fn lambda(&self, m: usize) -> usize {
        self.lambda.apply(m)
    }

    pub fn lambda_inverse(&self, m: usize) -> usize {
        self.lambda_inv.apply(m)
    }

    /// The involution on `M ∪ M⁻¹`: `m ↦ Λ(m)⁻¹` and `m⁻¹ ↦ Λ⁻¹(m)`.
    pub fn psi(&self, a: Letter) -> Letter {
        self.psi[letter_index(a)]
    }

    /// The permutation of generators realizing `L_a` for a single letter.
    pub fn generator_perm(&self, a: Letter) -> &Perm {
        if a.inverse {
            &self.row_inverses[self.lambda_inv.apply(a.generator)]
        } else {
            &self.rows[a.generator]
        }
    }
}
