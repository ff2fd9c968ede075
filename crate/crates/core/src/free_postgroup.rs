//! The free post-group on a diagonal left-regular magma.
//!
//! Every left translation `u ▷ -` is a composite of single-letter actions,
//! so it is carried as one permutation of the generators, applied
//! letterwise and sign-equivariantly to words.

use crate::magma::MagmaTable;
use crate::perm::Perm;
use crate::words::{Letter, ReducedWord, WordError};

/// The automorphism `u ▷ -` of the free group, as a generator permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterAction {
    perm: Perm,
}

impl LetterAction {
    pub fn identity(n: usize) -> Self {
        LetterAction { perm: Perm::identity(n) }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn apply_letter(&self, a: Letter) -> Letter {
        Letter { generator: self.perm.apply(a.generator), inverse: a.inverse }
    }

    pub fn apply(&self, w: &ReducedWord) -> ReducedWord {
        w.map_letters(|a| self.apply_letter(a))
    }

    pub fn inverse(&self) -> LetterAction {
        LetterAction { perm: self.perm.inverse() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LetterAction) -> LetterAction {
        LetterAction { perm: self.perm.compose(&other.perm) }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }
}

/// Free post-group operations over a fixed magma.
#[derive(Debug, Clone)]
pub struct FreePostGroup {
    magma: MagmaTable,
}

impl FreePostGroup {
    pub fn new(magma: MagmaTable) -> Self {
        FreePostGroup { magma }
    }

    pub fn magma(&self) -> &MagmaTable {
        &self.magma
    }

    fn check(&self, w: &ReducedWord) -> Result<(), WordError> {
        self.magma.alphabet().check(w)
    }

    fn letter_perm(&self, a: Letter) -> LetterAction {
        LetterAction { perm: self.magma.generator_perm(a).clone() }
    }

    /// Runs the prefix recursion `π ← π ∘ L_{π⁻¹(a_k)}` over any letter
    /// sequence, reduced or not.
    pub fn act_perm_of_letters(&self, letters: &[Letter]) -> Result<LetterAction, WordError> {
        let n = self.magma.len();
        let mut pi = Perm::identity(n);
        let mut pi_inv = Perm::identity(n);
        for &a in letters {
            if a.generator >= n {
                return Err(WordError::AlphabetMismatch { index: a.generator, size: n });
            }
            let b = Letter { generator: pi_inv.apply(a.generator), inverse: a.inverse };
            pi = pi.compose(self.magma.generator_perm(b));
            pi_inv = pi.inverse();
        }
        Ok(LetterAction { perm: pi })
    }

    pub fn act_perm(&self, u: &ReducedWord) -> Result<LetterAction, WordError> {
        self.act_perm_of_letters(u.letters())
    }

    /// `u ▷ v`.
    pub fn act(&self, u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check(v)?;
        Ok(self.act_perm(u)?.apply(v))
    }

    /// `u ▷⁻¹ v`, the inverse automorphism.
    pub fn inverse_act(&self, u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check(v)?;
        Ok(self.act_perm(u)?.inverse().apply(v))
    }

    /// The Grossman–Larson product `u * v = u.(u ▷ v)`.
    pub fn gl_product(&self, u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord, WordError> {
        Ok(u.dot(&self.act(u, v)?))
    }

    /// `u^{*-1} = u ▷⁻¹ u^{.-1}`.
    pub fn gl_inverse(&self, u: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.inverse_act(u, &u.invert())
    }

    /// The opposite action `u ▶ v = u.(u ▷ v).u^{.-1}`.
    pub fn opposite_act(&self, u: &ReducedWord, v: &ReducedWord) -> Result<ReducedWord, WordError> {
        Ok(u.dot(&self.act(u, v)?).dot(&u.invert()))
    }

    /// Image of a letter under the isomorphism `(F,.) → (F,*)`; always a letter.
    pub fn jmap_letter(&self, a: Letter) -> Letter {
        if a.inverse {
            self.magma.psi(a.inv())
        } else {
            a
        }
    }

    /// Inverse of [`Self::jmap_letter`].
    pub fn kmap_letter(&self, a: Letter) -> Letter {
        if a.inverse {
            self.magma.psi(a).inv()
        } else {
            a
        }
    }

    /// The group isomorphism `(F,.) → (F,*)` fixing the generators.
    ///
    /// Keeps the running GL product `P` together with `P ▷ -`, so each
    /// letter costs one permutation composition: `P * a = P.(P ▷ a)` and
    /// `L_{P*a} = L_P ∘ L_a`.
    pub fn jmap(&self, u: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check(u)?;
        let mut prefix: Vec<Letter> = Vec::with_capacity(u.len());
        let mut pi = LetterAction::identity(self.magma.len());
        for &a in u.letters() {
            let image = self.jmap_letter(a);
            prefix.push(pi.apply_letter(image));
            pi = pi.compose(&self.letter_perm(image));
        }
        Ok(ReducedWord::reduce(prefix))
    }

    /// The inverse isomorphism `(F,*) → (F,.)`, by the triangular solve
    /// `a'_k = (L_{a'_1} ∘ ⋯ ∘ L_{a'_{k-1}})⁻¹(b_k)`.
    pub fn kmap(&self, v: &ReducedWord) -> Result<ReducedWord, WordError> {
        self.check(v)?;
        let mut pi = LetterAction::identity(self.magma.len());
        let mut out = Vec::with_capacity(v.len());
        for &b in v.letters() {
            let solved = pi.inverse().apply_letter(b);
            out.push(self.kmap_letter(solved));
            pi = pi.compose(&self.letter_perm(solved));
        }
        Ok(ReducedWord::reduce(out))
    }
}
