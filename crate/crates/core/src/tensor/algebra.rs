//! The post-Hopf operations on `T(M)`.
//!
//! All word-level maps are memoized per thread; they are pure functions of
//! their basis arguments, so the caches never need invalidation.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use super::{MagmaTree, Scalar, TensorError, TensorPoly, TensorPolyPair, TensorWord};

thread_local! {
    static TRIANGLE: RefCell<HashMap<(TensorWord, TensorWord), TensorPoly>> = RefCell::new(HashMap::new());
    static ANTIPODE: RefCell<HashMap<TensorWord, TensorPoly>> = RefCell::new(HashMap::new());
    static KMAP: RefCell<HashMap<TensorWord, TensorPoly>> = RefCell::new(HashMap::new());
    static KMAP_INV: RefCell<HashMap<TensorWord, TensorPoly>> = RefCell::new(HashMap::new());
}

fn memo<K: std::hash::Hash + Eq + Clone>(
    cache: &'static std::thread::LocalKey<RefCell<HashMap<K, TensorPoly>>>,
    key: K,
    compute: impl FnOnce() -> TensorPoly,
) -> TensorPoly {
    if let Some(v) = cache.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = compute();
    cache.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

/// The `2^k` position splits of a word, with multiplicity.
pub fn unshuffle_word(w: &TensorWord) -> Vec<(TensorWord, TensorWord)> {
    let k = w.len();
    (0u64..1 << k)
        .map(|mask| {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (i, t) in w.letters().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    l.push(t.clone());
                } else {
                    r.push(t.clone());
                }
            }
            (TensorWord(l), TensorWord(r))
        })
        .collect()
}

/// The unshuffle coproduct `Δ`.
pub fn unshuffle(a: &TensorPoly) -> TensorPolyPair {
    let mut out = TensorPolyPair::zero();
    for (w, c) in a.terms() {
        for (l, r) in unshuffle_word(w) {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// A letter acting on a word as a derivation.
fn letter_on_word(x: &MagmaTree, w: &TensorWord) -> TensorPoly {
    let mut p = TensorPoly::zero();
    for i in 0..w.len() {
        let mut v = w.0.clone();
        v[i] = MagmaTree::product(x.clone(), w.0[i].clone());
        p.add_term(TensorWord(v), Scalar::one());
    }
    p
}

fn letter_on_poly(x: &MagmaTree, p: &TensorPoly) -> TensorPoly {
    p.map_linear(|w| letter_on_word(x, w))
}

fn triangle_word(a: &TensorWord, b: &TensorWord) -> TensorPoly {
    match a.len() {
        0 => TensorPoly::word(b.clone()),
        1 => letter_on_word(&a.0[0], b),
        _ => memo(&TRIANGLE, (a.clone(), b.clone()), || {
            let x = &a.0[0];
            let v = TensorWord(a.0[1..].to_vec());
            let mut out = letter_on_poly(x, &triangle_word(&v, b));
            for (u, c) in letter_on_word(x, &v).terms() {
                out.add_scaled(&triangle_word(u, b), &-c);
            }
            out
        }),
    }
}

/// The extension of the magma product to all of `T(M)`.
pub fn triangle(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (u, c) in a.terms() {
        for (w, d) in b.terms() {
            out.add_scaled(&triangle_word(u, w), &(c * d));
        }
    }
    out
}

/// The Grossman–Larson product `A * B = Σ A₁.(A₂ ▷ B)`.
pub fn gl_star(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (w, c) in a.terms() {
        for (l, r) in unshuffle_word(w) {
            let left = TensorPoly::word(l);
            out.add_scaled(&left.concat(&triangle(&TensorPoly::word(r), b)), c);
        }
    }
    out
}

/// The concatenation antipode: `x₁…xₙ ↦ (−1)ⁿ xₙ…x₁`.
pub fn antipode_dot(a: &TensorPoly) -> TensorPoly {
    a.map_linear(|w| {
        let mut v = w.0.clone();
        v.reverse();
        let sign = if w.len() % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        TensorPoly::from_terms([(TensorWord(v), sign)])
    })
}

fn antipode_star_word(w: &TensorWord) -> TensorPoly {
    match w.len() {
        0 => TensorPoly::one(),
        1 => TensorPoly::word(w.clone()).neg(),
        _ => memo(&ANTIPODE, w.clone(), || {
            let mut out = TensorPoly::word(w.clone()).neg();
            for (l, r) in unshuffle_word(w) {
                if l.is_empty() || r.is_empty() {
                    continue;
                }
                out.add_scaled(&gl_star(&antipode_star_word(&l), &TensorPoly::word(r)), &-Scalar::one());
            }
            out
        }),
    }
}

/// The antipode of the Grossman–Larson Hopf algebra, by the graded recursion
/// `S(w) = −w − Σ′ S(w′) * w″`.
pub fn antipode_star(a: &TensorPoly) -> TensorPoly {
    a.map_linear(antipode_star_word)
}

fn kmap_word(w: &TensorWord) -> TensorPoly {
    match w.len() {
        0 | 1 => TensorPoly::word(w.clone()),
        _ => memo(&KMAP, w.clone(), || {
            let x = &w.0[0];
            let rest = TensorWord(w.0[1..].to_vec());
            let head = TensorPoly::letter(x.clone());
            let mut out = head.concat(&kmap_word(&rest));
            for (u, c) in letter_on_word(x, &rest).terms() {
                out.add_scaled(&kmap_word(u), &-c);
            }
            out
        }),
    }
}

/// The K-map: `K(x₁ rest) = x₁.K(rest) − K(x₁ ▷ rest)`.
pub fn kmap_tensor(a: &TensorPoly) -> TensorPoly {
    a.map_linear(kmap_word)
}

fn kmap_inverse_word(w: &TensorWord) -> TensorPoly {
    match w.len() {
        0 | 1 => TensorPoly::word(w.clone()),
        _ => memo(&KMAP_INV, w.clone(), || {
            // K(w) − w only involves shorter words, so this recursion is
            // triangular in word length.
            let tail = kmap_word(w).sub(&TensorPoly::word(w.clone()));
            let mut out = TensorPoly::word(w.clone());
            for (u, c) in tail.terms() {
                assert!(u.len() < w.len(), "K is not length-triangular");
                out.add_scaled(&kmap_inverse_word(u), &-c);
            }
            out
        }),
    }
}

/// The inverse of the K-map.
pub fn kmap_tensor_inverse(a: &TensorPoly) -> TensorPoly {
    a.map_linear(kmap_inverse_word)
}

/// `Δ(A) = A⊗𝟏 + 𝟏⊗A`.
pub fn is_primitive(a: &TensorPoly) -> bool {
    let mut expected = TensorPolyPair::zero();
    let one = TensorPoly::one();
    expected.add_tensor(a, &one, &Scalar::one());
    expected.add_tensor(&one, a, &Scalar::one());
    unshuffle(a) == expected
}

/// The concatenation commutator.
pub fn lie_bracket(x: &TensorPoly, y: &TensorPoly) -> TensorPoly {
    x.concat(y).sub(&y.concat(x))
}

/// `⟦X,Y⟧ = [X,Y] + X▷Y − Y▷X` on primitive inputs.
pub fn gl_lie_bracket(x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly, TensorError> {
    for p in [x, y] {
        if !is_primitive(p) {
            return Err(TensorError::NotPrimitive(format!("{} terms, counit {}", p.len(), p.counit())));
        }
    }
    Ok(unchecked_gl_bracket(x, y))
}

pub(crate) fn unchecked_gl_bracket(x: &TensorPoly, y: &TensorPoly) -> TensorPoly {
    lie_bracket(x, y).add(&triangle(x, y)).sub(&triangle(y, x))
}
