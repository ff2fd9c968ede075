use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::{kmap_golden, kmap_suite, posthopf_suite};
use super::*;

fn gens(n: usize) -> Generators {
    Generators::standard(n).unwrap()
}

fn p(g: &Generators, text: &str) -> TensorPoly {
    g.parse_poly(text).unwrap()
}

fn leaf(i: usize) -> MagmaTree {
    MagmaTree::leaf(i)
}

#[test]
fn tree_degree_and_order() {
    let xy = MagmaTree::product(leaf(0), leaf(1));
    assert_eq!(xy.degree(), 2);
    let a = MagmaTree::product(leaf(0), MagmaTree::product(leaf(1), leaf(2)));
    let b = MagmaTree::product(MagmaTree::product(leaf(0), leaf(1)), leaf(2));
    assert_eq!(a.degree(), 3);
    assert_ne!(a, b);
    // leaf-first node is smaller than node-first: left subtrees compare by degree
    assert!(a < b);
    assert!(leaf(5) < xy);
    // counts: 2 generators give 2^d · Catalan(d−1) trees
    let counts: Vec<usize> = (1..=5).map(|d| MagmaTree::all_of_degree(2, d).len()).collect();
    assert_eq!(counts, [2, 4, 16, 80, 448]);
    let words: Vec<usize> = (0..=4).map(|d| TensorWord::all_of_degree(2, d).len()).collect();
    assert_eq!(words, [1, 2, 8, 40, 224]);
    assert!(matches!(
        TensorWord::basis_up_to(1, 9, DEFAULT_DEGREE_CAP),
        Err(TensorError::DegreeCap { requested: 9, cap: 8 })
    ));
}

#[test]
fn random_tree_degrees_add() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let s = random_tree(&mut rng, 3, 4);
        let t = random_tree(&mut rng, 3, 4);
        assert_eq!(MagmaTree::product(s.clone(), t.clone()).degree(), s.degree() + t.degree());
    }
}

fn random_tree(rng: &mut ChaCha8Rng, gens: usize, depth: usize) -> MagmaTree {
    if depth == 0 || rng.random_bool(0.5) {
        leaf(rng.random_range(0..gens))
    } else {
        MagmaTree::product(random_tree(rng, gens, depth - 1), random_tree(rng, gens, depth - 1))
    }
}

#[test]
fn unshuffle_examples() {
    let g = gens(2);
    let one = TensorWord::unit();
    let d = unshuffle(&TensorPoly::one());
    assert_eq!(d.terms().collect::<Vec<_>>(), vec![(&(one.clone(), one.clone()), &scalar(1))]);
    let x = g.parse_word("x1").unwrap();
    let mut expected = TensorPolyPair::zero();
    expected.add_term(x.clone(), one.clone(), scalar(1));
    expected.add_term(one.clone(), x.clone(), scalar(1));
    assert_eq!(unshuffle(&TensorPoly::word(x.clone())), expected);
    let y = g.parse_word("x2").unwrap();
    let xy = g.parse_word("x1.x2").unwrap();
    let mut expected = TensorPolyPair::zero();
    expected.add_term(xy.clone(), one.clone(), scalar(1));
    expected.add_term(x.clone(), y.clone(), scalar(1));
    expected.add_term(y.clone(), x.clone(), scalar(1));
    expected.add_term(one.clone(), xy.clone(), scalar(1));
    let got = unshuffle(&TensorPoly::word(xy));
    assert_eq!(got.len(), 4);
    assert_eq!(got, expected);
}

#[test]
fn coproduct_coassociative_and_cocommutative() {
    let g = gens(2);
    for w in TensorWord::basis_up_to(2, 4, DEFAULT_DEGREE_CAP).unwrap() {
        let mut flipped = TensorPolyPair::zero();
        let mut d = TensorPolyPair::zero();
        let mut left = HashMap::new();
        let mut right = HashMap::new();
        for (a, b) in unshuffle_word(&w) {
            d.add_term(a.clone(), b.clone(), scalar(1));
            flipped.add_term(b.clone(), a.clone(), scalar(1));
            for (a1, a2) in unshuffle_word(&a) {
                *left.entry((a1, a2, b.clone())).or_insert(0) += 1;
            }
            for (b1, b2) in unshuffle_word(&b) {
                *right.entry((a.clone(), b1, b2)).or_insert(0) += 1;
            }
        }
        assert_eq!(d, flipped, "{}", g.format_word(&w));
        assert_eq!(left, right, "{}", g.format_word(&w));
        // counit: (ε ⊗ id)Δ = id
        let mut back = TensorPoly::zero();
        for ((a, b), c) in d.terms() {
            if a.is_unit() {
                back.add_term(b.clone(), c.clone());
            }
        }
        assert_eq!(back, TensorPoly::word(w));
    }
}

#[test]
fn triangle_examples() {
    let g = gens(3);
    assert_eq!(triangle(&p(&g, "x1"), &p(&g, "x2")), p(&g, "(x1>x2)"));
    assert_eq!(triangle(&p(&g, "x1"), &p(&g, "x2.x3")), p(&g, "(x1>x2).x3 + x2.(x1>x3)"));
    assert_eq!(triangle(&p(&g, "x1.x2"), &p(&g, "x3")), p(&g, "(x1>(x2>x3)) - ((x1>x2)>x3)"));
    assert_eq!(triangle(&TensorPoly::one(), &p(&g, "x2.x3")), p(&g, "x2.x3"));
    assert_eq!(triangle(&p(&g, "3 + x1.x2"), &TensorPoly::one()), p(&g, "3"));
}

/// Triangle peeling the last letter instead of the first, through
/// `v.y = Σ v₁*(S_*(v₂)▷y)` and `(A*B)▷C = A▷(B▷C)`. Every ingredient on
/// the right is computed on strictly shorter words with this same routine.
struct RightPeel {
    memo: HashMap<(TensorWord, TensorWord), TensorPoly>,
    anti: HashMap<TensorWord, TensorPoly>,
}

impl RightPeel {
    fn new() -> Self {
        RightPeel { memo: HashMap::new(), anti: HashMap::new() }
    }

    fn derive(x: &MagmaTree, w: &TensorWord) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for i in 0..w.len() {
            let mut v = w.0.clone();
            v[i] = MagmaTree::product(x.clone(), v[i].clone());
            out.add_term(TensorWord(v), scalar(1));
        }
        out
    }

    fn act(&mut self, a: &TensorWord, b: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in b.terms() {
            let r = self.act_word(a, w);
            out.add_scaled(&r, c);
        }
        out
    }

    fn act_poly(&mut self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (u, c) in a.terms() {
            let r = self.act(u, b);
            out.add_scaled(&r, c);
        }
        out
    }

    fn act_word(&mut self, a: &TensorWord, b: &TensorWord) -> TensorPoly {
        if a.is_unit() {
            return TensorPoly::word(b.clone());
        }
        if a.len() == 1 {
            return Self::derive(&a.0[0], b);
        }
        if let Some(r) = self.memo.get(&(a.clone(), b.clone())) {
            return r.clone();
        }
        let v = TensorWord(a.0[..a.len() - 1].to_vec());
        let y = TensorPoly::letter(a.0[a.len() - 1].clone());
        let mut out = TensorPoly::zero();
        for (v1, v2) in unshuffle_word(&v) {
            let s = self.antipode(&v2);
            let ell = self.act_poly(&s, &y);
            assert!(ell.terms().all(|(w, _)| w.len() == 1));
            let inner = self.act_poly(&ell, &TensorPoly::word(b.clone()));
            let r = self.act(&v1, &inner);
            out.add_scaled(&r, &scalar(1));
        }
        self.memo.insert((a.clone(), b.clone()), out.clone());
        out
    }

    fn star(&mut self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in a.terms() {
            for (l, r) in unshuffle_word(w) {
                let t = self.act(&r, b);
                out.add_scaled(&TensorPoly::word(l).concat(&t), c);
            }
        }
        out
    }

    fn antipode(&mut self, w: &TensorWord) -> TensorPoly {
        if w.is_unit() {
            return TensorPoly::one();
        }
        if let Some(r) = self.anti.get(w) {
            return r.clone();
        }
        let mut out = TensorPoly::word(w.clone()).neg();
        for (l, r) in unshuffle_word(w) {
            if l.is_unit() || r.is_unit() {
                continue;
            }
            let s = self.antipode(&l);
            let t = self.star(&s, &TensorPoly::word(r));
            out.add_scaled(&t, &-scalar(1));
        }
        self.anti.insert(w.clone(), out.clone());
        out
    }
}

#[test]
fn triangle_independent_of_peeling_order() {
    let g = gens(2);
    let mut oracle = RightPeel::new();
    let ws = TensorWord::basis_up_to(2, 4, DEFAULT_DEGREE_CAP).unwrap();
    for a in &ws {
        for b in &ws {
            if a.degree() + b.degree() > 5 || a.len() < 2 {
                continue;
            }
            let got = triangle(&TensorPoly::word(a.clone()), &TensorPoly::word(b.clone()));
            assert_eq!(got, oracle.act_word(a, b), "{} ▷ {}", g.format_word(a), g.format_word(b));
        }
    }
}

#[test]
fn gl_product_and_antipodes() {
    let g = gens(2);
    let b = p(&g, "x1.(x1>x2) - 2*x2");
    assert_eq!(gl_star(&TensorPoly::one(), &b), b);
    assert_eq!(gl_star(&b, &TensorPoly::one()), b);
    assert_eq!(gl_star(&p(&g, "x1"), &p(&g, "x2")), p(&g, "x1.x2 + (x1>x2)"));
    assert_eq!(antipode_star(&p(&g, "x1")), p(&g, "-x1"));
    assert_eq!(antipode_dot(&p(&g, "x1.x2")), p(&g, "x2.x1"));
    assert_eq!(antipode_dot(&p(&g, "x1.x2.(x1>x2)")), p(&g, "-(x1>x2).x2.x1"));
    // S_*(x.y) solves S_*(x.y) + S_*(x)*y + S_*(y)*x + x.y = 0
    let s = antipode_star(&p(&g, "x1.x2"));
    let law = s
        .add(&gl_star(&p(&g, "-x1"), &p(&g, "x2")))
        .add(&gl_star(&p(&g, "-x2"), &p(&g, "x1")))
        .add(&p(&g, "x1.x2"));
    assert!(law.is_zero(), "{}", g.format_poly(&law));
}

#[test]
fn kmap_values() {
    let g = gens(3);
    assert_eq!(kmap_tensor(&p(&g, "x1")), p(&g, "x1"));
    assert_eq!(kmap_tensor(&TensorPoly::one()), TensorPoly::one());
    assert_eq!(kmap_tensor(&p(&g, "x1.x2")), p(&g, "x1.x2 - (x1>x2)"));
    for line in kmap_golden() {
        assert!(line.passed(), "{line}");
    }
    // the six-term expansion built structurally rather than parsed
    let (x1, x2, x3) = (leaf(0), leaf(1), leaf(2));
    let pr = |a: &MagmaTree, b: &MagmaTree| MagmaTree::product(a.clone(), b.clone());
    let w = |ts: Vec<MagmaTree>| TensorWord(ts);
    let expected = TensorPoly::from_terms([
        (w(vec![x1.clone(), x2.clone(), x3.clone()]), scalar(1)),
        (w(vec![x1.clone(), pr(&x2, &x3)]), scalar(-1)),
        (w(vec![pr(&x1, &x2), x3.clone()]), scalar(-1)),
        (w(vec![x2.clone(), pr(&x1, &x3)]), scalar(-1)),
        (w(vec![pr(&x2, &pr(&x1, &x3))]), scalar(1)),
        (w(vec![pr(&pr(&x1, &x2), &x3)]), scalar(1)),
    ]);
    assert_eq!(kmap_tensor(&p(&g, "x1.x2.x3")), expected);
}

/// Inverts `K` on one graded piece by Gauss–Jordan elimination.
fn inverse_matrix_columns(basis: &[TensorWord]) -> Vec<TensorPoly> {
    let n = basis.len();
    let index: HashMap<&TensorWord, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    // m[i][j] = coefficient of basis[i] in K(basis[j]); augmented with identity
    let mut m = vec![vec![Scalar::zero(); 2 * n]; n];
    for (j, w) in basis.iter().enumerate() {
        for (u, c) in kmap_tensor(&TensorPoly::word(w.clone())).terms() {
            m[index[u]][j] = c.clone();
        }
        m[j][n + j] = Scalar::one();
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("K singular");
        m.swap(col, piv);
        let inv = Scalar::one() / &m[col][col];
        for v in m[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    (0..n)
        .map(|j| TensorPoly::from_terms((0..n).map(|i| (basis[i].clone(), m[i][n + j].clone()))))
        .collect()
}

#[test]
fn kmap_inverse_matches_matrix_inverse() {
    for d in 1..=4 {
        let basis = TensorWord::all_of_degree(2, d);
        let cols = inverse_matrix_columns(&basis);
        for (w, col) in basis.iter().zip(cols) {
            assert_eq!(kmap_tensor_inverse(&TensorPoly::word(w.clone())), col);
        }
    }
}

#[test]
fn kmap_inverse_degree_five() {
    let g = gens(2);
    for w in TensorWord::all_of_degree(2, 5) {
        let a = TensorPoly::word(w.clone());
        let ki = kmap_tensor_inverse(&a);
        assert!(ki.is_homogeneous(5));
        assert_eq!(kmap_tensor(&ki), a, "{}", g.format_word(&w));
        assert_eq!(kmap_tensor_inverse(&kmap_tensor(&a)), a);
    }
}

#[test]
fn brackets_and_primitivity() {
    let g = gens(2);
    assert!(is_primitive(&p(&g, "x1")));
    assert!(is_primitive(&p(&g, "(x1>x2) - 3*x2")));
    assert!(!is_primitive(&p(&g, "x1.x2")));
    assert!(!is_primitive(&TensorPoly::one()));
    let br = lie_bracket(&p(&g, "x1"), &p(&g, "x2"));
    assert_eq!(br, p(&g, "x1.x2 - x2.x1"));
    assert!(is_primitive(&br));
    assert_eq!(
        gl_lie_bracket(&p(&g, "x1"), &p(&g, "x2")).unwrap(),
        p(&g, "x1.x2 - x2.x1 + (x1>x2) - (x2>x1)")
    );
    assert!(matches!(gl_lie_bracket(&p(&g, "x1.x2"), &p(&g, "x1")), Err(TensorError::NotPrimitive(_))));
}

#[test]
fn posthopf_suite_degree_four_two_generators() {
    for line in posthopf_suite(&gens(2), 4).unwrap() {
        assert!(line.passed(), "{line}");
    }
}

#[test]
fn posthopf_suite_degree_five_one_generator() {
    for line in posthopf_suite(&gens(1), 5).unwrap() {
        assert!(line.passed(), "{line}");
    }
}

#[test]
fn kmap_suite_degree_four() {
    for line in kmap_suite(&gens(2), 4).unwrap() {
        assert!(line.passed(), "{line}");
    }
}

#[test]
fn postlie_check_rejects_a_non_antisymmetric_bracket() {
    let g = gens(2);
    let (x, y) = (p(&g, "x1"), p(&g, "x2"));
    assert!(super::checks::check_postlie(&x, &y, &x, &triangle, &lie_bracket).is_ok());
    let concat_only = |a: &TensorPoly, b: &TensorPoly| a.concat(b);
    assert_eq!(
        super::checks::check_postlie(&x, &y, &x, &triangle, &concat_only),
        Err("[X,Y]▷Z = a(X,Y,Z) − a(Y,X,Z)")
    );
}

#[test]
fn random_polynomials_satisfy_hopf_morphism() {
    let g = gens(2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let basis = TensorWord::basis_up_to(2, 3, DEFAULT_DEGREE_CAP).unwrap();
    let random_poly = |rng: &mut ChaCha8Rng| {
        TensorPoly::from_terms((0..3).map(|_| {
            (basis[rng.random_range(0..basis.len())].clone(), ratio(rng.random_range(-5..=5), rng.random_range(1..=4)))
        }))
    };
    for _ in 0..40 {
        let a = random_poly(&mut rng);
        let b = random_poly(&mut rng);
        assert_eq!(
            kmap_tensor(&gl_star(&a, &b)),
            kmap_tensor(&a).concat(&kmap_tensor(&b)),
            "A={}, B={}",
            g.format_poly(&a),
            g.format_poly(&b)
        );
    }
}
